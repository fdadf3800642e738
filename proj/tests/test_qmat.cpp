#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qgames/qmat.hpp"

using namespace qgames;

namespace {

std::mt19937 rng(20240517);

double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 5) / (1u << 27));
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Complex{uniform(-2, 2), uniform(-2, 2)};
    return m;
}

// The two-angle unitary built from its trig definition, independent of the
// engine's constructor.
ComplexMatrix reference_u(double theta, double phi) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return ComplexMatrix{{std::polar(1.0, phi) * c, Complex{s, 0}},
                         {Complex{-s, 0}, std::polar(1.0, -phi) * c}};
}

const ComplexMatrix iz_matrix{{Complex{0, 1}, Complex{0, 0}},
                              {Complex{0, 0}, Complex{0, -1}}};

}  // namespace

TEST_CASE("matmul identities and hand-checked products") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(approx_equal(matmul(i2, i2), i2, 0.0));

    const ComplexMatrix x = ComplexMatrix::pauli_x();
    CHECK(approx_equal(matmul(x, x), i2, 0.0));

    // (iZ)(iZ) = -I
    const ComplexMatrix minus_i2{{Complex{-1, 0}, Complex{0, 0}},
                                 {Complex{0, 0}, Complex{-1, 0}}};
    CHECK(approx_equal(matmul(iz_matrix, iz_matrix), minus_i2, 0.0));
}

TEST_CASE("matmul rejects mismatched shapes naming both") {
    const ComplexMatrix a(2, 3), b(2, 2);
    CHECK_THROWS_WITH_AS(matmul(a, b), doctest::Contains("2x3"), std::invalid_argument);
}

TEST_CASE("kron shape law and identity") {
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t r1 = 1 + rng() % 3, c1 = 1 + rng() % 3;
        const std::size_t r2 = 1 + rng() % 3, c2 = 1 + rng() % 3;
        const ComplexMatrix k = kron(random_matrix(r1, c1), random_matrix(r2, c2));
        CHECK(k.rows() == r1 * r2);
        CHECK(k.cols() == c1 * c2);
    }
    CHECK(approx_equal(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4), 0.0));
}

TEST_CASE("kron acts on basis and Bell states as expected") {
    const ComplexMatrix xx = kron(ComplexMatrix::pauli_x(), ComplexMatrix::pauli_x());
    const StateVector flipped = apply(xx, StateVector::basis_state(0));
    CHECK(std::abs(flipped[3] - Complex{1, 0}) < 1e-15);

    const double r = 1.0 / std::numbers::sqrt2;
    const StateVector bell =
        StateVector::from_amplitudes({Complex{r, 0}, 0, 0, Complex{r, 0}});
    const ComplexMatrix ix = kron(ComplexMatrix::identity(2), ComplexMatrix::pauli_x());
    const StateVector swapped = apply(ix, bell);
    CHECK(std::abs(swapped[1] - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(swapped[2] - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(swapped[0]) < 1e-15);
    CHECK(std::abs(swapped[3]) < 1e-15);
}

TEST_CASE("kron mixed-product property on random 2x2 inputs") {
    for (int trial = 0; trial < 30; ++trial) {
        const ComplexMatrix a = random_matrix(2, 2), b = random_matrix(2, 2);
        const ComplexMatrix c = random_matrix(2, 2), d = random_matrix(2, 2);
        CHECK(approx_equal(matmul(kron(a, b), kron(c, d)),
                           kron(matmul(a, c), matmul(b, d)), 1e-12));
    }
}

TEST_CASE("adjoint involution and conjugation") {
    CHECK(approx_equal(adjoint(ComplexMatrix::identity(2)), ComplexMatrix::identity(2), 0.0));

    const ComplexMatrix minus_iz{{Complex{0, -1}, Complex{0, 0}},
                                 {Complex{0, 0}, Complex{0, 1}}};
    CHECK(approx_equal(adjoint(iz_matrix), minus_iz, 0.0));

    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix m = random_matrix(1 + rng() % 4, 1 + rng() % 4);
        CHECK(approx_equal(adjoint(adjoint(m)), m, 0.0));
    }

    const ComplexMatrix u = reference_u(std::numbers::pi / 3, std::numbers::pi / 5);
    CHECK(approx_equal(matmul(adjoint(u), u), ComplexMatrix::identity(2), 1e-12));
}

TEST_CASE("trace values and linearity") {
    CHECK(trace(ComplexMatrix::identity(4)) == Complex{4, 0});
    CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), std::invalid_argument);

    for (int trial = 0; trial < 10; ++trial) {
        std::array<Complex, 4> amps;
        for (auto& a : amps) a = Complex{uniform(-1, 1), uniform(-1, 1)};
        const StateVector s = StateVector::from_amplitudes(amps);
        CHECK(std::abs(trace(outer(s)) - Complex{1, 0}) < 1e-12);
    }

    // trace(P_A rho) for rho = |01><01| with the canonical operator diagonal
    const ComplexMatrix p_a = ComplexMatrix::diagonal(
        {Complex{-25, 0}, Complex{50, 0}, Complex{0, 0}, Complex{15, 0}});
    const ComplexMatrix rho = outer(StateVector::basis_state(1));
    CHECK(trace(matmul(p_a, rho)).real() == doctest::Approx(50).epsilon(1e-12));

    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = random_matrix(4, 4), b = random_matrix(4, 4);
        const Complex alpha{uniform(-2, 2), uniform(-2, 2)};
        const Complex beta{uniform(-2, 2), uniform(-2, 2)};
        const Complex lhs = trace(alpha * a + beta * b);
        const Complex rhs = alpha * trace(a) + beta * trace(b);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("outer produces the expected projectors") {
    const ComplexMatrix p00 = outer(StateVector::basis_state(0));
    CHECK(approx_equal(p00, ComplexMatrix::diagonal({1, 0, 0, 0}), 0.0));

    const double r = 1.0 / std::numbers::sqrt2;
    const ComplexMatrix bell =
        outer(StateVector::from_amplitudes({Complex{r, 0}, 0, 0, Complex{r, 0}}));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const bool corner = (i == 0 || i == 3) && (j == 0 || j == 3);
            CHECK(std::abs(bell(i, j) - (corner ? Complex{0.5, 0} : Complex{0, 0})) < 1e-12);
        }
    }
}

TEST_CASE("is_unitary classifies the strategy family and scaled identity") {
    CHECK(is_unitary(iz_matrix, 1e-12));
    CHECK_FALSE(is_unitary(Complex{2, 0} * ComplexMatrix::identity(2), 1e-12));
    CHECK_THROWS_AS(is_unitary(ComplexMatrix(2, 3), 1e-12), std::invalid_argument);

    for (int trial = 0; trial < 100; ++trial) {
        const double theta = uniform(0, std::numbers::pi);
        const double phi = uniform(0, std::numbers::pi / 2);
        CHECK(is_unitary(reference_u(theta, phi), 1e-12));
    }
}

TEST_CASE("state vectors normalize on construction") {
    const StateVector s =
        StateVector::from_amplitudes({Complex{3, 0}, 0, 0, Complex{4, 0}});
    CHECK(std::abs(s[0] - Complex{0.6, 0}) < 1e-15);
    CHECK(std::abs(s[3] - Complex{0.8, 0}) < 1e-15);

    CHECK_THROWS_AS(StateVector::from_amplitudes({0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::basis_state(4), std::invalid_argument);
}

TEST_CASE("non-finite entries are rejected") {
    const double nan = std::nan("");
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex{nan, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::from_amplitudes({Complex{0, nan}, 0, 0, 0}),
                    std::invalid_argument);
}
