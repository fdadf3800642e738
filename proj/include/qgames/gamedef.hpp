// gamedef.hpp
// Classical two-player strategic-form games: bimatrix construction,
// mixed-strategy evaluation, and the JSON game-file format.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qgames {

// Payoff pair for one outcome cell: (Alice, Bob).
using PayoffPair = std::pair<double, double>;

// Strategic-form game. Rows are Alice's strategies, columns Bob's.
class StrategicGame {
public:
    StrategicGame(std::vector<std::string> labels_a,
                  std::vector<std::string> labels_b,
                  std::vector<std::vector<PayoffPair>> payoffs);

    std::size_t rows() const { return labels_a_.size(); }
    std::size_t cols() const { return labels_b_.size(); }
    const std::vector<std::string>& labels_a() const { return labels_a_; }
    const std::vector<std::string>& labels_b() const { return labels_b_; }

    const PayoffPair& at(std::size_t row, std::size_t col) const;
    double payoff_a(std::size_t row, std::size_t col) const { return at(row, col).first; }
    double payoff_b(std::size_t row, std::size_t col) const { return at(row, col).second; }

    // b_ij == a_ji for all cells, within tol.
    bool is_symmetric(double tol = 1e-9) const;

private:
    std::vector<std::string> labels_a_;
    std::vector<std::string> labels_b_;
    std::vector<std::vector<PayoffPair>> payoffs_;
};

// Hawk-Dove parameters: resource value v, injury cost i, display cost d.
// The canonical instance is (50, 100, 10) with i > v > d > 0.
struct HawkDoveParams {
    double v = 50.0;
    double i = 100.0;
    double d = 10.0;
};

// Probability of each player's first-listed strategy.
struct MixedProfile {
    MixedProfile(double p, double q);
    double p;
    double q;
};

StrategicGame hawk_dove_game(const HawkDoveParams& params);
StrategicGame prisoners_dilemma_game();

// Bilinear payoff (pi_A, pi_B) of a 2x2 game at (p, 1-p) x (q, 1-q).
PayoffPair classical_mixed_payoff(const StrategicGame& game, const MixedProfile& profile);

// JSON game-file format:
//   {"labels_a": ["H","D"], "labels_b": ["H","D"],
//    "payoffs": [[[-25,-25],[50,0]],[[0,50],[15,15]]]}
// payoffs[i][j] is the pair [a_ij, b_ij]. Validation errors carry the
// offending field path.
StrategicGame parse_game_file(const std::string& text);
std::string serialize_game(const StrategicGame& game);

}  // namespace qgames
