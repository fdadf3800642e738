// qscheme.hpp
// Quantum game engine. Two quantization schemes over two qubits:
//
//  - Marinatto-Weber: players apply (possibly mixed) local unitaries to a
//    shared entangled density matrix,
//        rho_f = sum_k w_k (Ua_k (x) Ub_k) rho_in (Ua_k (x) Ub_k)^dag,
//    and payoffs are expectations of diagonal payoff operators.
//
//  - Eisert-style: an entangling gate J acts before and J^dag after the
//    players' local unitaries, starting from |00>:
//        |psi_f> = J^dag (Ua (x) Ub) J |00>,  J = (I(x)I + i X(x)X)/sqrt(2),
//    so that J|00> = (|00> + i|11>)/sqrt(2).

#pragma once

#include <utility>
#include <vector>

#include "qgames/gamedef.hpp"
#include "qgames/qmat.hpp"

namespace qgames {

// A player's move: a single 2x2 unitary or a probability-weighted list of
// unitaries. Stored uniformly as weighted pure components.
class StrategyOperator {
public:
    struct Component {
        double weight;
        ComplexMatrix unitary;
    };

    // U(theta, phi) with theta in [0,pi], phi in [0,pi/2].
    static StrategyOperator parametrized(double theta, double phi);
    // Any 2x2 unitary (checked at tolerance 1e-9).
    static StrategyOperator raw_unitary(const ComplexMatrix& m);
    // Convex mixture of pure strategies; probabilities must be nonnegative
    // and sum to 1 within 1e-9. No nested mixtures.
    static StrategyOperator mixture(const std::vector<std::pair<double, StrategyOperator>>& parts);

    bool is_pure() const { return components_.size() == 1; }
    const std::vector<Component>& components() const { return components_; }
    const ComplexMatrix& pure_unitary() const;

private:
    StrategyOperator() = default;
    std::vector<Component> components_;
};

// Shared initial state of the two qubits.
class InitialState {
public:
    // (|00> + i|11>)/sqrt(2)
    static InitialState mw_i_phase();
    // (|00> + |11>)/sqrt(2)
    static InitialState bell_plus();
    // Any normalized two-qubit state.
    static InitialState custom(const StateVector& s);

    const StateVector& state() const { return state_; }
    ComplexMatrix density() const { return outer(state_); }

private:
    explicit InitialState(StateVector s) : state_(s) {}
    StateVector state_;
};

// Diagonal payoff observables in basis order |00>,|01>,|10>,|11>:
// diag(p_a) = (a11, a12, a21, a22) of the source bimatrix, p_b likewise
// with the b entries.
struct PayoffOperators {
    ComplexMatrix p_a;
    ComplexMatrix p_b;
};

enum class Scheme { MarinattoWeber, Eisert };

// Scheme selector plus its inputs. The Eisert scheme ignores `initial`
// (the entangler J is fixed); Marinatto-Weber uses it as rho_in.
struct QuantumGameSpec {
    Scheme scheme;
    InitialState initial;
    PayoffOperators payoffs;
};

// The parametrized strategy of the two-angle family:
//   [[e^{i phi} cos(theta/2), sin(theta/2)],
//    [-sin(theta/2),          e^{-i phi} cos(theta/2)]]
ComplexMatrix u_theta_phi(double theta, double phi);

PayoffOperators payoff_operators(const StrategicGame& game);

// Mixed final density under Marinatto-Weber; trace-1 PSD 4x4.
ComplexMatrix mw_final_density(const InitialState& initial,
                               const StrategyOperator& s_a,
                               const StrategyOperator& s_b);

// J^dag (u_a (x) u_b) J |00> for pure unitary moves.
StateVector eisert_final_state(const ComplexMatrix& u_a, const ComplexMatrix& u_b);

// Convex combination of Eisert pure outcomes for (possibly mixed) moves.
ComplexMatrix eisert_final_density(const StrategyOperator& s_a, const StrategyOperator& s_b);

// (Re tr(p_a rho), Re tr(p_b rho)); throws if a trace has imaginary
// residue above 1e-9 (signals a non-Hermitian rho).
PayoffPair expected_payoffs(const ComplexMatrix& rho_f, const PayoffOperators& ops);

// Literal three-term closed form for the canonical Hawk-Dove payoff with
// coefficients -25, 50, 15. Coincides with the B-player Eisert payoff on
// the labeled H/D/Q grid; the orientation over the full parameter space
// is examined by the verify report.
double closed_form_payoff_eq14(double theta_a, double phi_a, double theta_b, double phi_b);

// n x n bimatrix with cell (i,j) = expected payoffs of the spec evaluated
// at (strategies[i], strategies[j]).
StrategicGame extended_payoff_table(
    const QuantumGameSpec& spec,
    const std::vector<std::pair<std::string, StrategyOperator>>& strategies);

}  // namespace qgames
