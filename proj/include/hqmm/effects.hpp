// effects.hpp — Quantum effects and states: pure effects (rank-one projections),
// general effects 0 <= E <= I, and density operators. Validation is eager:
// out-of-range inputs are rejected at construction, never clipped.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hqmm/complex_matrix.hpp"
#include "hqmm/hermitian_eig.hpp"

namespace hqmm {

// Rank-one projection |xi><xi| stored by its unit ket. The ket is kept in a
// canonical phase (first nonzero component real positive) so equal effects
// have equal coordinates.
class PureEffect {
  public:
    PureEffect() = default;

    explicit PureEffect(std::vector<Complex> ket) : ket_(std::move(ket)) {
        if (ket_.empty()) throw std::invalid_argument("PureEffect: empty ket");
        double n2 = 0.0;
        for (const auto& z : ket_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw std::invalid_argument("PureEffect: non-finite component");
            }
            n2 += std::norm(z);
        }
        if (std::abs(std::sqrt(n2) - 1.0) > 1e-12) {
            throw std::invalid_argument("PureEffect: ket norm " + std::to_string(std::sqrt(n2)) +
                                        " is not 1");
        }
        canonicalize();
    }

    // Normalizes an arbitrary nonzero vector first.
    static PureEffect normalized(std::vector<Complex> ket) {
        double n2 = 0.0;
        for (const auto& z : ket) n2 += std::norm(z);
        if (n2 <= 0.0) throw std::invalid_argument("PureEffect: zero vector");
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& z : ket) z *= inv;
        return PureEffect(std::move(ket));
    }

    static PureEffect basis(std::size_t dim, std::size_t index) {
        if (index >= dim) throw std::invalid_argument("PureEffect::basis: index out of range");
        std::vector<Complex> k(dim, Complex{0.0, 0.0});
        k[index] = 1.0;
        return PureEffect(std::move(k));
    }

    std::size_t dim() const noexcept { return ket_.size(); }
    const std::vector<Complex>& ket() const noexcept { return ket_; }
    const Complex& operator[](std::size_t i) const { return ket_[i]; }

    ComplexMatrix projection() const {
        const std::size_t n = dim();
        ComplexMatrix p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) = ket_[i] * std::conj(ket_[j]);
        return p;
    }

    Complex overlap(const PureEffect& o) const {
        if (dim() != o.dim()) throw std::invalid_argument("overlap: dimension mismatch");
        Complex s{0.0, 0.0};
        for (std::size_t i = 0; i < dim(); ++i) s += std::conj(ket_[i]) * o.ket_[i];
        return s;
    }

  private:
    void canonicalize() {
        for (const auto& z : ket_) {
            const double a = std::abs(z);
            if (a > 1e-9) {
                const Complex rot = std::conj(z) / a;
                for (auto& w : ket_) w *= rot;
                break;
            }
        }
    }

    std::vector<Complex> ket_;
};

// arccos |<xi_p|xi_q>|, the metric on the pure-effect manifold; range [0, pi/2].
inline double fubini_study_distance(const PureEffect& p, const PureEffect& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("fubini_study_distance: dimension mismatch");
    const double ov = std::min(1.0, std::abs(p.overlap(q)));
    return std::acos(ov);
}

// Sum of absolute off-diagonal entries in the computational basis.
inline double coherence_l1(const ComplexMatrix& rho) {
    if (!rho.is_square()) throw std::invalid_argument("coherence_l1: matrix not square");
    double c = 0.0;
    for (std::size_t i = 0; i < rho.rows(); ++i)
        for (std::size_t j = 0; j < rho.cols(); ++j)
            if (i != j) c += std::abs(rho(i, j));
    return c;
}

inline double coherence_l1(const PureEffect& p) { return coherence_l1(p.projection()); }

// Self-adjoint operator with spectrum in [0, 1].
class Effect {
  public:
    explicit Effect(HermitianMatrix m) : mat_(std::move(m)) {
        const Spectrum s = hermitian_eig(mat_);
        const double lo = s.eigenvalues.back();
        const double hi = s.eigenvalues.front();
        if (lo < -kHermitianTol || hi > 1.0 + kHermitianTol) {
            throw std::invalid_argument("Effect: spectrum [" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "] outside [0, 1]");
        }
    }

    std::size_t dim() const noexcept { return mat_.dim(); }
    const HermitianMatrix& hermitian() const noexcept { return mat_; }
    const ComplexMatrix& matrix() const noexcept { return mat_.matrix(); }

  private:
    HermitianMatrix mat_;
};

// Positive semidefinite, unit trace.
class DensityState {
  public:
    explicit DensityState(HermitianMatrix m) : mat_(std::move(m)) {
        const Spectrum s = hermitian_eig(mat_);
        if (s.eigenvalues.back() < -kHermitianTol) {
            throw std::invalid_argument("DensityState: negative eigenvalue " +
                                        std::to_string(s.eigenvalues.back()));
        }
        const double tr = mat_.real_trace();
        if (std::abs(tr - 1.0) > kHermitianTol) {
            throw std::invalid_argument("DensityState: trace " + std::to_string(tr) + " is not 1");
        }
    }

    static DensityState pure(const PureEffect& p) { return DensityState(HermitianMatrix(p.projection())); }

    static DensityState maximally_mixed(std::size_t dim) {
        ComplexMatrix m = ComplexMatrix::identity(dim);
        m *= Complex{1.0 / static_cast<double>(dim), 0.0};
        return DensityState(HermitianMatrix(m));
    }

    std::size_t dim() const noexcept { return mat_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return mat_.matrix(); }

  private:
    HermitianMatrix mat_;
};

struct TopEigenprojector {
    PureEffect effect;
    double value{0.0};
};

// Top eigenpair as a pure effect; the phase convention and the solver's
// deterministic ordering make the degenerate case reproducible.
inline TopEigenprojector top_eigenprojector(const HermitianMatrix& a) {
    const Spectrum s = hermitian_eig(a);
    std::vector<Complex> ket(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) ket[i] = s.eigenvectors(i, 0);
    return TopEigenprojector{PureEffect::normalized(std::move(ket)), s.eigenvalues.front()};
}

}  // namespace hqmm
