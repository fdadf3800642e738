// solvers.hpp
// Equilibrium analysis on n x n bimatrices: pure Nash, 2x2 mixed Nash,
// Pareto-optimal outcomes, best responses, and evolutionary stability.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qgames/gamedef.hpp"

namespace qgames {

struct Cell {
    std::size_t row;
    std::size_t col;
    bool operator==(const Cell&) const = default;
};

enum class Player { A, B };

// Cells from which no player has a profitable unilateral deviation
// (weak inequalities, tolerance 1e-9).
std::vector<Cell> pure_nash(const StrategicGame& game);

// Cells not strictly Pareto-dominated: no other cell weakly improves both
// payoffs with at least one strict improvement.
std::vector<Cell> pareto_optimal(const StrategicGame& game);

// Argmax set of the player's payoff against a fixed opponent strategy,
// ties included at 1e-9.
std::vector<std::size_t> best_response(const StrategicGame& game, Player player,
                                       std::size_t opponent_index);

// All equilibrium profiles (p*, q*) of a 2x2 game: corners plus the
// interior indifference point when it exists. Analytic candidates are
// validated against a 101-point unilateral-deviation grid.
std::vector<std::pair<double, double>> mixed_nash_2x2(const StrategicGame& game);

// Maynard-Smith conditions for strategy s of a symmetric game: for every
// other strategy t, either a(s,s) > a(t,s), or a(s,s) == a(t,s) and
// a(s,t) > a(t,t). Throws on asymmetric games.
bool ess_check(const StrategicGame& game, std::size_t index);

struct EquilibriumReport {
    std::vector<Cell> pure_nash;
    std::vector<Cell> pareto_optimal;
    std::optional<std::vector<std::pair<double, double>>> mixed_nash_2x2;  // 2x2 games only
    std::optional<std::vector<bool>> ess;  // symmetric games only, by strategy index
};

// Full report; `with_ess` requires a symmetric game.
EquilibriumReport analyze_game(const StrategicGame& game, bool with_ess);

}  // namespace qgames
