#include "qgames/qmat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qgames {

namespace {

void require_finite(const Complex& z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
}

std::string shape_str(const ComplexMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("ComplexMatrix: entry count " +
                                    std::to_string(entries_.size()) + " != " +
                                    std::to_string(rows * cols));
    }
    for (const auto& z : entries_) require_finite(z);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        for (const auto& z : row) {
            require_finite(z);
            entries_.push_back(z);
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        require_finite(d[i]);
        m(i, i) = d[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::pauli_x() {
    return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
}

ComplexMatrix ComplexMatrix::pauli_z() {
    return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
}

StateVector StateVector::basis_state(std::size_t index) {
    if (index >= 4) {
        throw std::invalid_argument("StateVector: basis index " +
                                    std::to_string(index) + " out of range [0,3]");
    }
    std::array<Complex, 4> amps{};
    amps[index] = 1.0;
    return StateVector(amps);
}

StateVector StateVector::from_amplitudes(const std::array<Complex, 4>& amps) {
    double norm_sq = 0.0;
    for (const auto& z : amps) {
        require_finite(z);
        norm_sq += std::norm(z);
    }
    if (norm_sq < 1e-24) {
        throw std::invalid_argument("StateVector: zero vector cannot be normalized");
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    std::array<Complex, 4> out = amps;
    for (auto& z : out) z *= inv;
    return StateVector(out);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: dimension mismatch (" + shape_str(a) +
                                    ")*(" + shape_str(b) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t r = 0; r < b.rows(); ++r) {
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    out(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
                }
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("trace: non-square matrix (" + shape_str(a) + ")");
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
    return sum;
}

ComplexMatrix outer(const StateVector& s) {
    ComplexMatrix out(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out(i, j) = s[i] * std::conj(s[j]);
        }
    }
    return out;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) {
        throw std::invalid_argument("is_unitary: non-square matrix (" + shape_str(a) + ")");
    }
    const ComplexMatrix residual = matmul(adjoint(a), a) - ComplexMatrix::identity(a.rows());
    double max_abs = 0.0;
    for (std::size_t i = 0; i < residual.rows(); ++i) {
        for (std::size_t j = 0; j < residual.cols(); ++j) {
            max_abs = std::max(max_abs, std::abs(residual(i, j)));
        }
    }
    return max_abs <= tol;
}

StateVector apply(const ComplexMatrix& m, const StateVector& s) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw std::invalid_argument("apply: expected 4x4 matrix, got (" + shape_str(m) + ")");
    }
    std::array<Complex, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out[i] += m(i, j) * s[j];
        }
    }
    return StateVector::from_amplitudes(out);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix add: shape mismatch (" + shape_str(a) +
                                    ")+(" + shape_str(b) + ")");
    }
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j) + b(i, j);
        }
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a + Complex{-1.0, 0.0} * b;
}

ComplexMatrix operator*(const Complex& c, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = c * a(i, j);
        }
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - b(i, j)) > tol) return false;
        }
    }
    return true;
}

}  // namespace qgames
