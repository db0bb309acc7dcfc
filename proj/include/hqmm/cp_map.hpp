// cp_map.hpp — Completely positive maps in the Heisenberg picture, represented
// by Kraus families: Lambda(X) = sum_i K_i† X K_i. The Schroedinger dual
// sum_i K_i rho K_i† and its Choi operator are used for validity checks.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hqmm/complex_matrix.hpp"
#include "hqmm/hermitian_eig.hpp"

namespace hqmm {

struct ChoiReport {
    bool is_cp{false};
    double min_choi_eigenvalue{0.0};
    bool is_unital{false};
};

inline constexpr double kChoiTol = 1e-8;
inline constexpr double kUnitalTol = 1e-8;

// Heisenberg-picture CP map B(in) -> B(out). Each Kraus operator maps the
// out-space into the in-space, i.e. has shape in_dim x out_dim.
class HeisenbergCPMap {
  public:
    HeisenbergCPMap(std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus,
                    bool unital_expected = true)
        : in_dim_(in_dim), out_dim_(out_dim), kraus_(std::move(kraus)), unital_expected_(unital_expected) {
        if (kraus_.empty()) throw std::invalid_argument("HeisenbergCPMap: empty Kraus family");
        for (const auto& k : kraus_) {
            if (k.rows() != in_dim_ || k.cols() != out_dim_) {
                throw std::invalid_argument("HeisenbergCPMap: Kraus shape " + std::to_string(k.rows()) +
                                            "x" + std::to_string(k.cols()) + ", expected " +
                                            std::to_string(in_dim_) + "x" + std::to_string(out_dim_));
            }
            if (!k.is_finite()) throw std::invalid_argument("HeisenbergCPMap: non-finite Kraus entry");
        }
    }

    std::size_t in_dim() const noexcept { return in_dim_; }
    std::size_t out_dim() const noexcept { return out_dim_; }
    const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
    bool unital_expected() const noexcept { return unital_expected_; }

    // Lambda(X) = sum K† X K, with no Hermiticity requirement on X.
    ComplexMatrix apply_matrix(const ComplexMatrix& x) const {
        if (x.rows() != in_dim_ || x.cols() != in_dim_) {
            throw std::invalid_argument("HeisenbergCPMap::apply: input dimension " +
                                        std::to_string(x.rows()) + ", expected " + std::to_string(in_dim_));
        }
        ComplexMatrix out(out_dim_, out_dim_);
        for (const auto& k : kraus_) out += k.adjoint() * x * k;
        return out;
    }

    HermitianMatrix apply(const HermitianMatrix& x) const { return HermitianMatrix(apply_matrix(x.matrix())); }

    // Schroedinger dual: rho -> sum K rho K†, B(out) -> B(in).
    ComplexMatrix schrodinger_apply(const ComplexMatrix& rho) const {
        if (rho.rows() != out_dim_ || rho.cols() != out_dim_) {
            throw std::invalid_argument("HeisenbergCPMap::schrodinger_apply: input dimension " +
                                        std::to_string(rho.rows()) + ", expected " + std::to_string(out_dim_));
        }
        ComplexMatrix out(in_dim_, in_dim_);
        for (const auto& k : kraus_) out += k * rho * k.adjoint();
        return out;
    }

    ComplexMatrix apply_identity() const { return apply_matrix(ComplexMatrix::identity(in_dim_)); }

    // sum K† K; equals I_out exactly when the dual is trace-preserving.
    ComplexMatrix kraus_gram() const {
        ComplexMatrix g(out_dim_, out_dim_);
        for (const auto& k : kraus_) g += k.adjoint() * k;
        return g;
    }

    // Choi operator of the Schroedinger dual on the standard maximally
    // entangled reference: C = sum_k w_k w_k† with w_k[i*in + a] = K_k(a, i).
    ComplexMatrix choi_matrix() const {
        const std::size_t d = out_dim_ * in_dim_;
        ComplexMatrix c(d, d);
        for (const auto& k : kraus_) {
            std::vector<Complex> w(d);
            for (std::size_t i = 0; i < out_dim_; ++i)
                for (std::size_t a = 0; a < in_dim_; ++a) w[i * in_dim_ + a] = k(a, i);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s) c(r, s) += w[r] * std::conj(w[s]);
        }
        return c;
    }

    ChoiReport choi_check() const {
        const Spectrum s = hermitian_eig(HermitianMatrix(choi_matrix()));
        ChoiReport rep;
        rep.min_choi_eigenvalue = s.eigenvalues.back();
        rep.is_cp = rep.min_choi_eigenvalue >= -kChoiTol;
        const ComplexMatrix dev = apply_identity() - ComplexMatrix::identity(out_dim_);
        rep.is_unital = dev.frobenius_norm() <= kUnitalTol;
        return rep;
    }

    // Construction-time validation; throws when unital_expected is violated
    // or the Choi operator is not PSD.
    void validate(const std::string& context) const {
        const ChoiReport rep = choi_check();
        if (!rep.is_cp) {
            throw std::invalid_argument(context + ": map is not completely positive (min Choi eigenvalue " +
                                        std::to_string(rep.min_choi_eigenvalue) + ")");
        }
        if (unital_expected_ && !rep.is_unital) {
            const double dev = (apply_identity() - ComplexMatrix::identity(out_dim_)).frobenius_norm();
            throw std::invalid_argument(context + ": map is not unital (||Lambda(I) - I|| = " +
                                        std::to_string(dev) + ", min Choi eigenvalue " +
                                        std::to_string(rep.min_choi_eigenvalue) + ")");
        }
    }

  private:
    std::size_t in_dim_{0};
    std::size_t out_dim_{0};
    std::vector<ComplexMatrix> kraus_;
    bool unital_expected_{true};
};

}  // namespace hqmm
