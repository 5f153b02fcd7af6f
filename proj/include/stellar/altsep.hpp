#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stellar/constellation.hpp"
#include "stellar/polyroots.hpp"
#include "stellar/state_core.hpp"

namespace stellar {

inline constexpr double kDefaultSeparabilityTolerance = 1e-8;

/// scale * (x)_j (a_j|0> + b_j|1>), qubit 0 first.
struct SeparableFactorization {
    std::vector<std::pair<Complex, Complex>> factors;
    Complex scale = 1.0;

    std::size_t n_qubits() const { return factors.size(); }
    PureState state() const;
};

struct SeparabilityVerdict {
    bool separable = false;
    std::optional<SeparableFactorization> factorization;
    /// Largest sigma_2 / sigma_1 over the bipartitions examined.
    double worst_bipartite_residual = 0.0;
};

/// c_i = C_i, no weights.
ComplexPolynomial alt_polynomial(const PureState& state);

/// Expanded prod_j (a_j + b_j x^{2^j}).
ComplexPolynomial separable_polynomial(const SeparableFactorization& f);

/// Peels qubit j = 0, 1, ... off the amplitude array, testing that the
/// 2 x 2^{N-1-j} reshaping is rank one (sigma_2 / sigma_1 <= tol).
SeparabilityVerdict decide_separability(const PureState& state,
                                        double tol = kDefaultSeparabilityTolerance);

/// 2^j points per qubit j: tan(theta/2) = |a_j/b_j|^{1/2^j},
/// phi_m = (arg(-a_j/b_j) + 2 pi m) / 2^j; b_j = 0 sends all of them to the
/// south pole.
Constellation separable_constellation(const SeparableFactorization& f);

/// Roots of alt_polynomial, padded to 2^N - 1 points with south poles.
Constellation alt_constellation(const PureState& state, double tol = kDefaultRootTolerance);

}  // namespace stellar
