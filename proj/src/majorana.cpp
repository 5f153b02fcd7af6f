#include "stellar/majorana.hpp"

#include <cmath>

namespace stellar {

Spinor::Spinor(Complex a, Complex b) : alpha(a), beta(b) {
    if (a == Complex{} && b == Complex{}) throw InvalidArgument("spinor (0, 0) is not a state");
}

double sqrt_binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::sqrt(b);
}

ComplexPolynomial majorana_polynomial(const SpinState& state) {
    const int two_s = state.two_s();
    ComplexVector c(state.dim());
    for (int k = 0; k <= two_s; ++k) c[k] = sqrt_binomial(two_s, k) * state[k];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial qubit_majorana_polynomial(const PureState& state) {
    return majorana_polynomial(spin_from_qubits(state));
}

ComplexVector spinor_product_coefficients(std::span<const Spinor> spinors) {
    ComplexVector c{1.0};
    for (const auto& s : spinors) {
        ComplexVector next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += s.beta * c[k];
            next[k + 1] += s.alpha * c[k];
        }
        c = std::move(next);
    }
    return c;
}

SpinState state_from_spinors(std::span<const Spinor> spinors, Complex scale) {
    if (spinors.empty()) throw InvalidArgument("need at least one spinor");
    if (scale == Complex{}) throw InvalidArgument("scale A must be nonzero");
    const int two_s = static_cast<int>(spinors.size());
    ComplexVector xi = spinor_product_coefficients(spinors);
    for (int k = 0; k <= two_s; ++k) xi[k] *= scale / sqrt_binomial(two_s, k);
    return SpinState(two_s, std::move(xi));
}

Constellation points_from_roots(std::span<const Complex> roots, std::size_t deficiency,
                                std::size_t expected_size) {
    if (roots.size() + deficiency != expected_size) {
        throw InvalidArgument("roots plus deficiency must equal the expected constellation size");
    }
    std::vector<BlochPoint> points;
    points.reserve(expected_size);
    for (const auto& x : roots) points.push_back(BlochPoint::from_root(x));
    points.insert(points.end(), deficiency, BlochPoint::south());
    return Constellation(std::move(points), expected_size);
}

Constellation polynomial_constellation(const ComplexPolynomial& p, double tol) {
    const RootResult r = find_roots(p, tol);
    return points_from_roots(r.roots, r.leading_deficiency, p.nominal_degree());
}

Constellation majorana_constellation(const SpinState& state, double tol) {
    return polynomial_constellation(majorana_polynomial(state), tol);
}

Constellation majorana_constellation(const PureState& state, double tol) {
    return majorana_constellation(spin_from_qubits(state), tol);
}

Spinor spinor_from_point(const BlochPoint& p) {
    return {std::cos(0.5 * p.theta()), -std::sin(0.5 * p.theta()) * std::polar(1.0, p.phi())};
}

SpinState state_from_constellation(const Constellation& c) {
    std::vector<Spinor> spinors;
    spinors.reserve(c.size());
    for (const auto& p : c.points()) spinors.push_back(spinor_from_point(p));
    if (spinors.empty()) return SpinState(0, {1.0});
    return state_from_spinors(spinors);
}

}  // namespace stellar
