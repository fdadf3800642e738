// qmat.hpp
// Minimal dense complex linear algebra for two-qubit game simulation:
// 2x2 / 4x4 matrices and 4-component state vectors over std::complex<double>.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace qgames {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Value type: every operation returns a
// fresh matrix, nothing mutates in place.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Complex& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    Complex& operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(const std::vector<Complex>& d);

    static ComplexMatrix pauli_x();
    static ComplexMatrix pauli_z();

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

// Two-qubit pure state, amplitudes ordered |00>, |01>, |10>, |11>
// (Alice's bit on the left). Normalized on construction.
class StateVector {
public:
    static StateVector basis_state(std::size_t index);
    static StateVector from_amplitudes(const std::array<Complex, 4>& amps);

    const Complex& operator[](std::size_t i) const { return amps_[i]; }
    const std::array<Complex, 4>& amplitudes() const { return amps_; }

private:
    explicit StateVector(std::array<Complex, 4> amps) : amps_(amps) {}
    std::array<Complex, 4> amps_{};
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
ComplexMatrix outer(const StateVector& s);
bool is_unitary(const ComplexMatrix& a, double tol);

StateVector apply(const ComplexMatrix& m, const StateVector& s);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Complex& c, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Elementwise comparison within an absolute tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace qgames
