// mixedscan.hpp
// Closed-form mixed-strategy payoff surfaces over (p, q) in [0,1]^2,
// lattice scans, argmax extraction, and threshold-region extraction.

#pragma once

#include <cstddef>
#include <vector>

#include "qgames/gamedef.hpp"

namespace qgames {

// A mixed-strategy payoff surface: both players mix the two classical pure
// strategies (probability p for Alice's first, q for Bob's first) over the
// shared Bell state (|00>+|11>)/sqrt(2) under the Marinatto-Weber scheme.
// Both supported surfaces are symmetric in (p, q) with payoff_a == payoff_b.
class Surface {
public:
    static Surface hawk_dove(const HawkDoveParams& params);
    static Surface prisoners_dilemma();

    double payoff(double p, double q) const;

private:
    enum class Kind { HawkDove, PrisonersDilemma };
    Surface(Kind kind, HawkDoveParams params) : kind_(kind), params_(params) {}
    Kind kind_;
    HawkDoveParams params_;
};

struct GridCell {
    double p;
    double q;
    double payoff_a;
    double payoff_b;
};

// Uniform lattice p,q in {k/(resolution-1)}, inclusive at both ends,
// row-major in p then q.
struct PayoffGrid {
    std::size_t resolution;
    std::vector<GridCell> cells;
};

struct RegionPoint {
    double p;
    double q;
    double payoff;
};

// Lattice points whose payoff strictly exceeds the threshold. The surfaces
// are symmetric in p<->q, so members are reported once, for the half
// p >= q; mirror each member to obtain the full region.
struct Region {
    double threshold;
    std::vector<RegionPoint> members;
};

// Mixed Hawk-Dove payoff. For the canonical parameters (50, 100, 10) this
// is -60pq + 30(p+q) - 5; general parameters are evaluated through the
// Marinatto-Weber density route.
double hd_mixed_payoff(double p, double q, const HawkDoveParams& params);

// Mixed Prisoner's-dilemma payoff (4 - 2pq + p + q)/2.
double pd_mixed_payoff(double p, double q);

PayoffGrid grid_scan(const Surface& surface, std::size_t resolution);

// All lattice points attaining the grid maximum of payoff_a within 1e-9.
std::vector<std::pair<double, double>> grid_argmax(const PayoffGrid& grid);

Region region_above(const Surface& surface, double threshold, std::size_t resolution);

}  // namespace qgames
