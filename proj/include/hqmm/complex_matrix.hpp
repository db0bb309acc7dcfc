// complex_matrix.hpp — Dense complex matrices: arithmetic, Kronecker products, traces.
// Row-major storage; all dimensions here are tiny (2..64), so everything is
// straightforward O(n^3) dense code.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqmm {

using Complex = std::complex<double>;

// Hard cap on any matrix axis; the engine targets small operator algebras.
inline constexpr std::size_t kMaxMatrixDim = 4096;

class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
        check_dims(rows, cols);
    }

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        check_dims(rows, cols);
        if (data_.size() != rows_ * cols_) {
            throw std::invalid_argument("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                                        " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
        }
        if (!is_finite()) {
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
        }
    }

    // Nested-brace construction for literals in tests and builders.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        check_dims(rows_, cols_);
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) {
                throw std::invalid_argument("ComplexMatrix: ragged initializer");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
        if (!is_finite()) {
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const noexcept { return data_; }
    std::vector<Complex>& data() noexcept { return data_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Complex trace() const {
        if (!is_square()) throw std::invalid_argument("trace: matrix not square");
        Complex t{0.0, 0.0};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    bool is_finite() const noexcept {
        for (const auto& z : data_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
        return true;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o, "operator+=");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o, "operator-=");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    ComplexMatrix& operator*=(Complex s) {
        for (auto& z : data_) z *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex{s, 0.0}; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex{s, 0.0}; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matmul: dimension mismatch " + shape_str(a) + " * " + shape_str(b));
        }
        ComplexMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    bool approx_equal(const ComplexMatrix& o, double tol) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (std::abs(data_[k] - o.data_[k]) > tol) return false;
        }
        return true;
    }

  private:
    static std::string shape_str(const ComplexMatrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

    static void check_dims(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("ComplexMatrix: zero dimension");
        if (rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
            throw std::invalid_argument("ComplexMatrix: dimension exceeds limit " + std::to_string(kMaxMatrixDim));
        }
    }

    void require_same_shape(const ComplexMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw std::invalid_argument(std::string(op) + ": shape mismatch");
        }
    }

    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<Complex> data_;
};

// Kronecker product: entry ((i*rb+k),(j*cb+l)) = a(i,j)*b(k,l).
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
    if (ra > kMaxMatrixDim / rb || ca > kMaxMatrixDim / cb) {
        throw std::invalid_argument("tensor_product: result dimension exceeds limit " +
                                    std::to_string(kMaxMatrixDim));
    }
    ComplexMatrix out(ra * rb, ca * cb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = aij * b(k, l);
        }
    return out;
}

// Hilbert–Schmidt inner product Tr(A† B).
inline Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("hs_inner: shape mismatch");
    }
    Complex s{0.0, 0.0};
    for (std::size_t k = 0; k < a.data().size(); ++k) s += std::conj(a.data()[k]) * b.data()[k];
    return s;
}

// Tr(A*B) without forming the product.
inline Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw std::invalid_argument("trace_product: shape mismatch");
    }
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, i);
    return s;
}

// Column vector |i> in dimension n.
inline ComplexMatrix basis_ket(std::size_t n, std::size_t i) {
    if (i >= n) throw std::invalid_argument("basis_ket: index out of range");
    ComplexMatrix v(n, 1);
    v(i, 0) = 1.0;
    return v;
}

// |i><j| in dimension n.
inline ComplexMatrix basis_op(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) throw std::invalid_argument("basis_op: index out of range");
    ComplexMatrix m(n, n);
    m(i, j) = 1.0;
    return m;
}

}  // namespace hqmm
