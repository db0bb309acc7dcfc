// hermitian_eig.hpp — Hermitian matrices and their full spectral decomposition.
// The eigensolver is a cyclic complex Jacobi iteration with a fixed sweep order,
// so repeated runs on the same input produce identical output (including the
// ordering of degenerate eigenvectors).

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hqmm/complex_matrix.hpp"

namespace hqmm {

inline constexpr double kHermitianTol = 1e-10;

class HermitianMatrix {
  public:
    HermitianMatrix() = default;

    // Accepts matrices Hermitian up to a relative tolerance and symmetrizes
    // them, A <- (A + A†)/2; larger deviations are rejected.
    explicit HermitianMatrix(const ComplexMatrix& a) {
        if (!a.is_square()) throw std::invalid_argument("HermitianMatrix: matrix not square");
        if (!a.is_finite()) throw std::invalid_argument("HermitianMatrix: non-finite entry");
        const double scale = std::max(1.0, a.frobenius_norm());
        const ComplexMatrix dev = a - a.adjoint();
        if (dev.frobenius_norm() > kHermitianTol * scale) {
            throw std::invalid_argument("HermitianMatrix: not Hermitian (deviation " +
                                        std::to_string(dev.frobenius_norm()) + ")");
        }
        mat_ = a;
        for (std::size_t i = 0; i < mat_.rows(); ++i) {
            for (std::size_t j = i + 1; j < mat_.cols(); ++j) {
                const Complex avg = 0.5 * (mat_(i, j) + std::conj(mat_(j, i)));
                mat_(i, j) = avg;
                mat_(j, i) = std::conj(avg);
            }
            mat_(i, i) = Complex{mat_(i, i).real(), 0.0};
        }
    }

    std::size_t dim() const noexcept { return mat_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return mat_; }

    double real_trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < dim(); ++i) t += mat_(i, i).real();
        return t;
    }

  private:
    ComplexMatrix mat_;
};

// Full spectrum: eigenvalues descending, eigenvectors the matching orthonormal
// columns of `eigenvectors`.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexMatrix eigenvector(std::size_t k) const {
        ComplexMatrix v(eigenvectors.rows(), 1);
        for (std::size_t i = 0; i < eigenvectors.rows(); ++i) v(i, 0) = eigenvectors(i, k);
        return v;
    }

    // Sum_k lambda_k v_k v_k†, for reconstruction checks.
    ComplexMatrix reconstruct() const {
        const std::size_t n = eigenvectors.rows();
        ComplexMatrix a(n, n);
        for (std::size_t k = 0; k < eigenvalues.size(); ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) += eigenvalues[k] * eigenvectors(i, k) * std::conj(eigenvectors(j, k));
        return a;
    }
};

namespace detail {

// One cyclic Jacobi pass: for each (p,q) annihilate a_pq by a unitary plane
// rotation [[c, -s e^{i phi}], [s e^{-i phi}, c]] with phi = arg(a_pq).
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double beta = std::abs(apq);
    if (beta == 0.0) return;
    const Complex phase = apq / beta;  // e^{i phi}
    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();
    const double w = (alpha - gamma) / (2.0 * beta);
    const double t = (w >= 0.0 ? 1.0 : -1.0) / (std::abs(w) + std::sqrt(w * w + 1.0));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    // Column update: A <- A U.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp + s * std::conj(phase) * akq;
        a(k, q) = -s * phase * akp + c * akq;
    }
    // Row update: A <- U† A.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk + s * phase * aqk;
        a(q, k) = -s * std::conj(phase) * apk + c * aqk;
    }
    a(p, q) = Complex{0.0, 0.0};
    a(q, p) = Complex{0.0, 0.0};
    a(p, p) = Complex{a(p, p).real(), 0.0};
    a(q, q) = Complex{a(q, q).real(), 0.0};
    // Accumulate eigenvectors: V <- V U.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp + s * std::conj(phase) * vkq;
        v(k, q) = -s * phase * vkp + c * vkq;
    }
}

inline double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace detail

// Full eigendecomposition of a Hermitian matrix, eigenvalues descending.
// Degenerate eigenvalues keep the solver's deterministic column order
// (stable sort), so ties resolve toward the lowest produced index.
inline Spectrum hermitian_eig(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, a.frobenius_norm());
    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) <= 1e-14 * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        s.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) s.eigenvectors(i, k) = v(i, order[k]);
    }
    return s;
}

}  // namespace hqmm
