#include "qgames/mixedscan.hpp"

#include <cmath>
#include <stdexcept>

#include "qgames/numfmt.hpp"
#include "qgames/qscheme.hpp"

namespace qgames {

namespace {

constexpr double argmax_tol = 1e-9;

void require_probability(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + "=" + fmt_sig9(x) +
                                    " outside [0,1]");
    }
}

bool is_canonical(const HawkDoveParams& p) {
    return p.v == 50.0 && p.i == 100.0 && p.d == 10.0;
}

StrategyOperator classical_mix(double prob_first) {
    if (prob_first == 1.0) return StrategyOperator::raw_unitary(ComplexMatrix::identity(2));
    if (prob_first == 0.0) return StrategyOperator::raw_unitary(ComplexMatrix::pauli_x());
    return StrategyOperator::mixture(
        {{prob_first, StrategyOperator::raw_unitary(ComplexMatrix::identity(2))},
         {1.0 - prob_first, StrategyOperator::raw_unitary(ComplexMatrix::pauli_x())}});
}

double mw_surface_payoff(double p, double q, const StrategicGame& game) {
    const ComplexMatrix rho =
        mw_final_density(InitialState::bell_plus(), classical_mix(p), classical_mix(q));
    return expected_payoffs(rho, payoff_operators(game)).first;
}

}  // namespace

Surface Surface::hawk_dove(const HawkDoveParams& params) {
    return Surface(Kind::HawkDove, params);
}

Surface Surface::prisoners_dilemma() {
    return Surface(Kind::PrisonersDilemma, HawkDoveParams{});
}

double Surface::payoff(double p, double q) const {
    return kind_ == Kind::HawkDove ? hd_mixed_payoff(p, q, params_) : pd_mixed_payoff(p, q);
}

double hd_mixed_payoff(double p, double q, const HawkDoveParams& params) {
    require_probability(p, "p");
    require_probability(q, "q");
    if (is_canonical(params)) {
        return -60.0 * p * q + 30.0 * (p + q) - 5.0;
    }
    return mw_surface_payoff(p, q, hawk_dove_game(params));
}

double pd_mixed_payoff(double p, double q) {
    require_probability(p, "p");
    require_probability(q, "q");
    return 0.5 * (4.0 - 2.0 * p * q + p + q);
}

PayoffGrid grid_scan(const Surface& surface, std::size_t resolution) {
    if (resolution < 2) {
        throw std::invalid_argument("grid_scan: resolution " + std::to_string(resolution) +
                                    " must be at least 2");
    }
    PayoffGrid grid;
    grid.resolution = resolution;
    grid.cells.reserve(resolution * resolution);
    const double step = 1.0 / static_cast<double>(resolution - 1);
    for (std::size_t ip = 0; ip < resolution; ++ip) {
        const double p = static_cast<double>(ip) * step;
        for (std::size_t iq = 0; iq < resolution; ++iq) {
            const double q = static_cast<double>(iq) * step;
            const double value = surface.payoff(p, q);
            grid.cells.push_back({p, q, value, value});
        }
    }
    return grid;
}

std::vector<std::pair<double, double>> grid_argmax(const PayoffGrid& grid) {
    if (grid.cells.empty()) {
        throw std::invalid_argument("grid_argmax: empty grid");
    }
    double best = grid.cells.front().payoff_a;
    for (const auto& cell : grid.cells) best = std::max(best, cell.payoff_a);
    std::vector<std::pair<double, double>> points;
    for (const auto& cell : grid.cells) {
        if (cell.payoff_a >= best - argmax_tol) points.emplace_back(cell.p, cell.q);
    }
    return points;
}

Region region_above(const Surface& surface, double threshold, std::size_t resolution) {
    if (resolution < 2) {
        throw std::invalid_argument("region_above: resolution " + std::to_string(resolution) +
                                    " must be at least 2");
    }
    Region region;
    region.threshold = threshold;
    const double step = 1.0 / static_cast<double>(resolution - 1);
    for (std::size_t ip = 0; ip < resolution; ++ip) {
        const double p = static_cast<double>(ip) * step;
        for (std::size_t iq = 0; iq <= ip; ++iq) {
            const double q = static_cast<double>(iq) * step;
            const double value = surface.payoff(p, q);
            if (value > threshold) region.members.push_back({p, q, value});
        }
    }
    return region;
}

}  // namespace qgames
