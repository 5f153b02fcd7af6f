#pragma once

#include <span>
#include <vector>

#include "stellar/constellation.hpp"
#include "stellar/polyroots.hpp"
#include "stellar/state_core.hpp"

namespace stellar {

/// alpha |+> + beta |->, the single-particle factor of a symmetrized state.
struct Spinor {
    Complex alpha;
    Complex beta;

    Spinor(Complex a, Complex b);
};

/// sqrt(binom(n, k)), by accumulated multiplication.
double sqrt_binomial(int n, int k);

/// c_{S+M} = binom(2S, S+M)^{1/2} xi_M.
ComplexPolynomial majorana_polynomial(const SpinState& state);

/// c_i = binom(2^N - 1, i)^{1/2} C_i.
ComplexPolynomial qubit_majorana_polynomial(const PureState& state);

/// Coefficients of prod_k (alpha_k x + beta_k), one factor at a time.
ComplexVector spinor_product_coefficients(std::span<const Spinor> spinors);

/// xi_M = A C_M binom(2S, S+M)^{-1/2}, C_M the x^{S+M} coefficient of
/// prod_k (alpha_k x + beta_k).
SpinState state_from_spinors(std::span<const Spinor> spinors, Complex scale = 1.0);

/// Maps each root through tan(theta/2) e^{i phi} = x and appends `deficiency`
/// south-pole points.
Constellation points_from_roots(std::span<const Complex> roots, std::size_t deficiency,
                                std::size_t expected_size);

/// Points of a polynomial's roots with one south-pole point per vanished top
/// coefficient. Shared by both encodings.
Constellation polynomial_constellation(const ComplexPolynomial& p,
                                       double tol = kDefaultRootTolerance);

Constellation majorana_constellation(const SpinState& state, double tol = kDefaultRootTolerance);

/// Majorana constellation of an N-qubit state (2^N - 1 points).
Constellation majorana_constellation(const PureState& state, double tol = kDefaultRootTolerance);

/// Spinor with alpha = cos(theta/2) >= 0 and beta = -sin(theta/2) e^{i phi},
/// so that -beta/alpha reproduces the point.
Spinor spinor_from_point(const BlochPoint& p);

SpinState state_from_constellation(const Constellation& c);

}  // namespace stellar
