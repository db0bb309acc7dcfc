// channels.hpp — Qubit channel and instrument constructors: x-rotations,
// Z-dephasing, the rotation/dephasing interpolation, and the two-outcome
// weak measurement with tunable strength.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hqmm/complex_matrix.hpp"
#include "hqmm/cp_map.hpp"
#include "hqmm/effects.hpp"

namespace hqmm {

inline ComplexMatrix pauli_x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

inline PureEffect plus_ket() { return PureEffect::normalized({1.0, 1.0}); }
inline PureEffect minus_ket() { return PureEffect::normalized({1.0, -1.0}); }

// e^{-i phi sigma_x} = cos(phi) I - i sin(phi) sigma_x.
inline ComplexMatrix x_rotation(double phi) {
    const Complex c{std::cos(phi), 0.0};
    const Complex ms{0.0, -std::sin(phi)};
    return ComplexMatrix{{c, ms}, {ms, c}};
}

// Pinching to the computational-basis diagonal, Kraus {|0><0|, |1><1|}.
inline HeisenbergCPMap dephasing_channel() {
    return HeisenbergCPMap(2, 2, {basis_op(2, 0, 0), basis_op(2, 1, 1)});
}

// Heisenberg map X -> U† X U.
inline HeisenbergCPMap unitary_conjugation(const ComplexMatrix& u) {
    if (!u.is_square()) throw std::invalid_argument("unitary_conjugation: matrix not square");
    return HeisenbergCPMap(u.rows(), u.cols(), {u});
}

// X -> (1-theta) U† X U + theta Pi_Z(X) with U = e^{-i phi sigma_x}.
// Unital for every (phi, theta).
inline HeisenbergCPMap interpolated_channel(double phi, double theta) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw std::invalid_argument("interpolated_channel: theta outside [0, 1]");
    }
    std::vector<ComplexMatrix> kraus;
    if (theta < 1.0) kraus.push_back(std::sqrt(1.0 - theta) * x_rotation(phi));
    if (theta > 0.0) {
        kraus.push_back(std::sqrt(theta) * basis_op(2, 0, 0));
        kraus.push_back(std::sqrt(theta) * basis_op(2, 1, 1));
    }
    return HeisenbergCPMap(2, 2, std::move(kraus));
}

// Two-outcome weak measurement of strength eta. The raw outcome operators
//   L+ = diag(sqrt(1+eta), sqrt(1-eta)),  L- = diag(sqrt(1-eta), sqrt(1+eta))
// satisfy (L+)†L+ + (L-)†L- = 2I; the stored Kraus are K± = L±/sqrt(2), so
// the instrument is trace-complete: K+†K+ + K-†K- = I.
struct WeakMeasurement {
    ComplexMatrix k_plus;          // 2x2
    ComplexMatrix k_minus;         // 2x2
    HeisenbergCPMap plus_slice;    // X -> K+† X K+
    HeisenbergCPMap minus_slice;   // X -> K-† X K-
    HeisenbergCPMap joint;         // B(H (x) K) -> B(H), Kraus {K± (x) |±>}
};

inline WeakMeasurement weak_instrument(double eta) {
    if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("weak_instrument: eta outside (0, 1)");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix kp(2, 2), km(2, 2);
    kp(0, 0) = std::sqrt(1.0 + eta) * inv_sqrt2;
    kp(1, 1) = std::sqrt(1.0 - eta) * inv_sqrt2;
    km(0, 0) = std::sqrt(1.0 - eta) * inv_sqrt2;
    km(1, 1) = std::sqrt(1.0 + eta) * inv_sqrt2;

    const PureEffect plus = plus_ket();
    const PureEffect minus = minus_ket();
    auto embed = [](const ComplexMatrix& k, const PureEffect& chi) {
        // K (x) |chi> as a (2*2) x 2 matrix: column j is the ket K|j> (x) |chi>.
        ComplexMatrix w(4, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t o = 0; o < 2; ++o)
                for (std::size_t j = 0; j < 2; ++j) w(i * 2 + o, j) = k(i, j) * chi[o];
        return w;
    };

    HeisenbergCPMap plus_slice(2, 2, {kp}, /*unital_expected=*/false);
    HeisenbergCPMap minus_slice(2, 2, {km}, /*unital_expected=*/false);
    HeisenbergCPMap joint(4, 2, {embed(kp, plus), embed(km, minus)}, /*unital_expected=*/true);
    return WeakMeasurement{std::move(kp), std::move(km), std::move(plus_slice), std::move(minus_slice),
                           std::move(joint)};
}

}  // namespace hqmm
