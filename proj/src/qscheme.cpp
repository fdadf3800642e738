#include "qgames/qscheme.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qgames/numfmt.hpp"

namespace qgames {

namespace {

constexpr double unitary_tol = 1e-9;
constexpr double prob_sum_tol = 1e-9;
constexpr double imag_residue_tol = 1e-9;

const ComplexMatrix& entangler_j() {
    // J = (I(x)I + i X(x)X)/sqrt(2); J|00> = (|00> + i|11>)/sqrt(2)
    static const ComplexMatrix j = [] {
        const ComplexMatrix xx = kron(ComplexMatrix::pauli_x(), ComplexMatrix::pauli_x());
        const Complex inv_sqrt2{1.0 / std::numbers::sqrt2, 0.0};
        return inv_sqrt2 * (ComplexMatrix::identity(4) + Complex{0.0, 1.0} * xx);
    }();
    return j;
}

}  // namespace

StrategyOperator StrategyOperator::parametrized(double theta, double phi) {
    return raw_unitary(u_theta_phi(theta, phi));
}

StrategyOperator StrategyOperator::raw_unitary(const ComplexMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw std::invalid_argument("StrategyOperator: expected a 2x2 unitary, got " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (!is_unitary(m, unitary_tol)) {
        throw std::invalid_argument("StrategyOperator: matrix is not unitary at 1e-9");
    }
    StrategyOperator op;
    op.components_.push_back({1.0, m});
    return op;
}

StrategyOperator StrategyOperator::mixture(
    const std::vector<std::pair<double, StrategyOperator>>& parts) {
    if (parts.empty()) {
        throw std::invalid_argument("StrategyOperator: mixture needs at least one component");
    }
    StrategyOperator op;
    double total = 0.0;
    for (const auto& [prob, sub] : parts) {
        if (!(prob >= 0.0)) {
            throw std::invalid_argument("StrategyOperator: mixture probability " +
                                        fmt_sig9(prob) + " is negative");
        }
        if (!sub.is_pure()) {
            throw std::invalid_argument("StrategyOperator: nested mixtures are not allowed");
        }
        total += prob;
        op.components_.push_back({prob, sub.pure_unitary()});
    }
    if (std::abs(total - 1.0) > prob_sum_tol) {
        throw std::invalid_argument("StrategyOperator: mixture probabilities sum to " +
                                    fmt_sig9(total) + ", expected 1");
    }
    return op;
}

const ComplexMatrix& StrategyOperator::pure_unitary() const {
    if (!is_pure()) {
        throw std::logic_error("StrategyOperator: not a pure strategy");
    }
    return components_.front().unitary;
}

InitialState InitialState::mw_i_phase() {
    const double r = 1.0 / std::numbers::sqrt2;
    return InitialState(StateVector::from_amplitudes({Complex{r, 0.0}, 0.0, 0.0, Complex{0.0, r}}));
}

InitialState InitialState::bell_plus() {
    const double r = 1.0 / std::numbers::sqrt2;
    return InitialState(StateVector::from_amplitudes({Complex{r, 0.0}, 0.0, 0.0, Complex{r, 0.0}}));
}

InitialState InitialState::custom(const StateVector& s) {
    return InitialState(s);
}

ComplexMatrix u_theta_phi(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw std::invalid_argument("u_theta_phi: theta=" + fmt_sig9(theta) +
                                    " outside [0, pi]");
    }
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2.0)) {
        throw std::invalid_argument("u_theta_phi: phi=" + fmt_sig9(phi) +
                                    " outside [0, pi/2]");
    }
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex eip = std::polar(1.0, phi);
    return ComplexMatrix{{eip * c, Complex{s, 0.0}},
                         {Complex{-s, 0.0}, std::conj(eip) * c}};
}

PayoffOperators payoff_operators(const StrategicGame& game) {
    if (game.rows() != 2 || game.cols() != 2) {
        throw std::invalid_argument("payoff_operators: expected a 2x2 game, got " +
                                    std::to_string(game.rows()) + "x" +
                                    std::to_string(game.cols()));
    }
    std::vector<Complex> da, db;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            da.emplace_back(game.payoff_a(i, j), 0.0);
            db.emplace_back(game.payoff_b(i, j), 0.0);
        }
    }
    return {ComplexMatrix::diagonal(da), ComplexMatrix::diagonal(db)};
}

ComplexMatrix mw_final_density(const InitialState& initial,
                               const StrategyOperator& s_a,
                               const StrategyOperator& s_b) {
    const ComplexMatrix rho_in = initial.density();
    ComplexMatrix rho = ComplexMatrix::zero(4, 4);
    for (const auto& ca : s_a.components()) {
        for (const auto& cb : s_b.components()) {
            const double w = ca.weight * cb.weight;
            if (w == 0.0) continue;
            const ComplexMatrix u = kron(ca.unitary, cb.unitary);
            rho = rho + Complex{w, 0.0} * matmul(matmul(u, rho_in), adjoint(u));
        }
    }
    return rho;
}

StateVector eisert_final_state(const ComplexMatrix& u_a, const ComplexMatrix& u_b) {
    if (u_a.rows() != 2 || u_a.cols() != 2 || !is_unitary(u_a, unitary_tol)) {
        throw std::invalid_argument("eisert_final_state: u_a is not a 2x2 unitary at 1e-9");
    }
    if (u_b.rows() != 2 || u_b.cols() != 2 || !is_unitary(u_b, unitary_tol)) {
        throw std::invalid_argument("eisert_final_state: u_b is not a 2x2 unitary at 1e-9");
    }
    const ComplexMatrix& j = entangler_j();
    const ComplexMatrix circuit = matmul(adjoint(j), matmul(kron(u_a, u_b), j));
    return apply(circuit, StateVector::basis_state(0));
}

ComplexMatrix eisert_final_density(const StrategyOperator& s_a, const StrategyOperator& s_b) {
    ComplexMatrix rho = ComplexMatrix::zero(4, 4);
    for (const auto& ca : s_a.components()) {
        for (const auto& cb : s_b.components()) {
            const double w = ca.weight * cb.weight;
            if (w == 0.0) continue;
            rho = rho + Complex{w, 0.0} * outer(eisert_final_state(ca.unitary, cb.unitary));
        }
    }
    return rho;
}

PayoffPair expected_payoffs(const ComplexMatrix& rho_f, const PayoffOperators& ops) {
    const Complex ta = trace(matmul(ops.p_a, rho_f));
    const Complex tb = trace(matmul(ops.p_b, rho_f));
    if (std::abs(ta.imag()) >= imag_residue_tol || std::abs(tb.imag()) >= imag_residue_tol) {
        throw std::invalid_argument(
            "expected_payoffs: payoff trace has imaginary residue " +
            fmt_sig9(std::max(std::abs(ta.imag()), std::abs(tb.imag()))) +
            " (rho is not Hermitian)");
    }
    return {ta.real(), tb.real()};
}

double closed_form_payoff_eq14(double theta_a, double phi_a, double theta_b, double phi_b) {
    const double ca = std::cos(theta_a / 2.0), sa = std::sin(theta_a / 2.0);
    const double cb = std::cos(theta_b / 2.0), sb = std::sin(theta_b / 2.0);
    const double t1 = std::cos(phi_a + phi_b) * ca * cb;
    const double t2 = std::sin(phi_a) * ca * sb - std::cos(phi_b) * cb * sa;
    const double t3 = std::sin(phi_a + phi_b) * ca * cb + sa * sb;
    return -25.0 * t1 * t1 + 50.0 * t2 * t2 + 15.0 * t3 * t3;
}

StrategicGame extended_payoff_table(
    const QuantumGameSpec& spec,
    const std::vector<std::pair<std::string, StrategyOperator>>& strategies) {
    if (strategies.empty()) {
        throw std::invalid_argument("extended_payoff_table: strategy list is empty");
    }
    std::vector<std::string> labels;
    labels.reserve(strategies.size());
    for (const auto& [label, op] : strategies) labels.push_back(label);

    std::vector<std::vector<PayoffPair>> cells(strategies.size(),
                                               std::vector<PayoffPair>(strategies.size()));
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        for (std::size_t j = 0; j < strategies.size(); ++j) {
            const ComplexMatrix rho =
                spec.scheme == Scheme::MarinattoWeber
                    ? mw_final_density(spec.initial, strategies[i].second, strategies[j].second)
                    : eisert_final_density(strategies[i].second, strategies[j].second);
            cells[i][j] = expected_payoffs(rho, spec.payoffs);
        }
    }
    return StrategicGame(labels, labels, std::move(cells));
}

}  // namespace qgames
