#include "qgames/solvers.hpp"

#include <cmath>
#include <stdexcept>

namespace qgames {

namespace {

constexpr double tol = 1e-9;
constexpr std::size_t deviation_grid = 101;

// Payoffs of a 2x2 game at mixed profile (p, q), without MixedProfile
// range checks (callers stay on the lattice).
PayoffPair bilinear(const StrategicGame& g, double p, double q) {
    const double pw[2] = {p, 1.0 - p};
    const double qw[2] = {q, 1.0 - q};
    double a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            a += pw[i] * qw[j] * g.payoff_a(i, j);
            b += pw[i] * qw[j] * g.payoff_b(i, j);
        }
    }
    return {a, b};
}

// No unilateral deviation on a 101-point grid improves either payoff.
bool validated_equilibrium(const StrategicGame& g, double p, double q) {
    const auto [pi_a, pi_b] = bilinear(g, p, q);
    for (std::size_t k = 0; k < deviation_grid; ++k) {
        const double x = static_cast<double>(k) / (deviation_grid - 1);
        if (bilinear(g, x, q).first > pi_a + tol) return false;
        if (bilinear(g, p, x).second > pi_b + tol) return false;
    }
    return true;
}

void require_symmetric(const StrategicGame& game, const char* op) {
    if (!game.is_symmetric(tol)) {
        throw std::invalid_argument(std::string(op) +
                                    ": game is not symmetric (b_ij != a_ji)");
    }
}

}  // namespace

std::vector<Cell> pure_nash(const StrategicGame& game) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < game.rows(); ++i) {
        for (std::size_t j = 0; j < game.cols(); ++j) {
            bool stable = true;
            for (std::size_t k = 0; k < game.rows() && stable; ++k) {
                if (game.payoff_a(k, j) > game.payoff_a(i, j) + tol) stable = false;
            }
            for (std::size_t l = 0; l < game.cols() && stable; ++l) {
                if (game.payoff_b(i, l) > game.payoff_b(i, j) + tol) stable = false;
            }
            if (stable) cells.push_back({i, j});
        }
    }
    return cells;
}

std::vector<Cell> pareto_optimal(const StrategicGame& game) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < game.rows(); ++i) {
        for (std::size_t j = 0; j < game.cols(); ++j) {
            const double a = game.payoff_a(i, j);
            const double b = game.payoff_b(i, j);
            bool dominated = false;
            for (std::size_t k = 0; k < game.rows() && !dominated; ++k) {
                for (std::size_t l = 0; l < game.cols() && !dominated; ++l) {
                    const double ak = game.payoff_a(k, l);
                    const double bk = game.payoff_b(k, l);
                    if (ak >= a - tol && bk >= b - tol &&
                        (ak > a + tol || bk > b + tol)) {
                        dominated = true;
                    }
                }
            }
            if (!dominated) cells.push_back({i, j});
        }
    }
    return cells;
}

std::vector<std::size_t> best_response(const StrategicGame& game, Player player,
                                       std::size_t opponent_index) {
    const std::size_t own_count = player == Player::A ? game.rows() : game.cols();
    const std::size_t opp_count = player == Player::A ? game.cols() : game.rows();
    if (opponent_index >= opp_count) {
        throw std::invalid_argument("best_response: opponent index " +
                                    std::to_string(opponent_index) + " out of range [0," +
                                    std::to_string(opp_count - 1) + "]");
    }
    auto value = [&](std::size_t own) {
        return player == Player::A ? game.payoff_a(own, opponent_index)
                                   : game.payoff_b(opponent_index, own);
    };
    double best = value(0);
    for (std::size_t k = 1; k < own_count; ++k) best = std::max(best, value(k));
    std::vector<std::size_t> indices;
    for (std::size_t k = 0; k < own_count; ++k) {
        if (value(k) >= best - tol) indices.push_back(k);
    }
    return indices;
}

std::vector<std::pair<double, double>> mixed_nash_2x2(const StrategicGame& game) {
    if (game.rows() != 2 || game.cols() != 2) {
        throw std::invalid_argument("mixed_nash_2x2: expected a 2x2 game, got " +
                                    std::to_string(game.rows()) + "x" +
                                    std::to_string(game.cols()));
    }
    std::vector<std::pair<double, double>> candidates = {
        {0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}};

    // Interior candidate from the indifference conditions: Alice is
    // indifferent when her payoff gap between rows vanishes at q, Bob when
    // his gap between columns vanishes at p.
    const double denom_q = game.payoff_a(0, 0) - game.payoff_a(0, 1) -
                           game.payoff_a(1, 0) + game.payoff_a(1, 1);
    const double denom_p = game.payoff_b(0, 0) - game.payoff_b(0, 1) -
                           game.payoff_b(1, 0) + game.payoff_b(1, 1);
    if (std::abs(denom_q) > tol && std::abs(denom_p) > tol) {
        const double q_star = (game.payoff_a(1, 1) - game.payoff_a(0, 1)) / denom_q;
        const double p_star = (game.payoff_b(1, 1) - game.payoff_b(1, 0)) / denom_p;
        if (p_star >= 0.0 && p_star <= 1.0 && q_star >= 0.0 && q_star <= 1.0) {
            candidates.emplace_back(p_star, q_star);
        }
    }

    std::vector<std::pair<double, double>> equilibria;
    for (const auto& [p, q] : candidates) {
        if (validated_equilibrium(game, p, q)) equilibria.emplace_back(p, q);
    }
    return equilibria;
}

bool ess_check(const StrategicGame& game, std::size_t index) {
    require_symmetric(game, "ess_check");
    if (index >= game.rows()) {
        throw std::invalid_argument("ess_check: strategy index " + std::to_string(index) +
                                    " out of range [0," + std::to_string(game.rows() - 1) + "]");
    }
    const double self = game.payoff_a(index, index);
    for (std::size_t t = 0; t < game.rows(); ++t) {
        if (t == index) continue;
        const double invader = game.payoff_a(t, index);
        if (self > invader + tol) continue;
        if (std::abs(self - invader) <= tol &&
            game.payoff_a(index, t) > game.payoff_a(t, t) + tol) {
            continue;
        }
        return false;
    }
    return true;
}

EquilibriumReport analyze_game(const StrategicGame& game, bool with_ess) {
    EquilibriumReport report;
    report.pure_nash = pure_nash(game);
    report.pareto_optimal = pareto_optimal(game);
    if (game.rows() == 2 && game.cols() == 2) {
        report.mixed_nash_2x2 = mixed_nash_2x2(game);
    }
    if (with_ess) {
        require_symmetric(game, "analyze_game");
        std::vector<bool> flags;
        flags.reserve(game.rows());
        for (std::size_t s = 0; s < game.rows(); ++s) flags.push_back(ess_check(game, s));
        report.ess = std::move(flags);
    }
    return report;
}

}  // namespace qgames
