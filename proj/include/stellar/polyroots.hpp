#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stellar/state_core.hpp"

namespace stellar {

/// Coefficients c_0..c_d, c_k multiplies x^k. The nominal degree is fixed by
/// the coefficient count, vanishing top coefficients included.
class ComplexPolynomial {
public:
    explicit ComplexPolynomial(ComplexVector coefficients);

    const ComplexVector& coefficients() const { return coefficients_; }
    std::size_t nominal_degree() const { return coefficients_.size() - 1; }
    const Complex& operator[](std::size_t k) const { return coefficients_[k]; }
    double max_abs_coefficient() const;

    /// (lhs * rhs), by direct convolution.
    friend ComplexPolynomial operator*(const ComplexPolynomial& lhs,
                                       const ComplexPolynomial& rhs);

private:
    ComplexVector coefficients_;
};

/// Coefficients with |c| <= kNegligibleCoefficient * max|c_k| count as zero
/// when deflating either end of a polynomial.
inline constexpr double kNegligibleCoefficient = 1e-12;
inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr int kMaxRootIterations = 200;

Complex evaluate(const ComplexPolynomial& p, Complex x);

/// Number of negligible coefficients at the top of p.
std::size_t leading_deficiency(const ComplexPolynomial& p);

struct RootResult {
    ComplexVector roots;                 // effective-degree roots, zeros included
    std::size_t leading_deficiency = 0;  // vanished top coefficients
    std::size_t trailing_zero_roots = 0; // roots at 0 split off before iterating
    double residual = 0.0;               // max_k |p(x_k)| / (max|c| max(1,|x_k|)^d)
    int iterations = 0;
};

class RootFindingError : public std::runtime_error {
public:
    RootFindingError(const std::string& what, RootResult best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const RootResult& best_iterate() const { return best_; }
    double residual() const { return best_.residual; }

private:
    RootResult best_;
};

/// Aberth-Ehrlich simultaneous iteration with Newton polish. Deterministic for
/// a given (p, tol). Throws InvalidArgument for the zero polynomial and
/// RootFindingError when the residual bound cannot be met.
RootResult find_roots(const ComplexPolynomial& p, double tol = kDefaultRootTolerance);

/// leading * prod_k (x - roots[k]).
ComplexPolynomial polynomial_from_roots(std::span<const Complex> roots, Complex leading = 1.0);

}  // namespace stellar
