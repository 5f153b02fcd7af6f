#include "stellar/altsep.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "stellar/majorana.hpp"

namespace stellar {

namespace {

// Rephases (a, b) so its larger-modulus component is real and positive;
// returns the removed phase.
Complex fix_phase(Complex& a, Complex& b) {
    const Complex ref = std::abs(a) >= std::abs(b) ? a : b;
    const Complex phase = ref / std::abs(ref);
    a /= phase;
    b /= phase;
    return phase;
}

}  // namespace

PureState SeparableFactorization::state() const {
    std::vector<PureState> qubits;
    qubits.reserve(factors.size());
    for (const auto& [a, b] : factors) qubits.emplace_back(1, ComplexVector{a, b});
    const PureState product = tensor_product(qubits);
    ComplexVector amps = product.amplitudes();
    for (auto& z : amps) z *= scale;
    return PureState(product.n_qubits(), std::move(amps));
}

ComplexPolynomial alt_polynomial(const PureState& state) {
    return ComplexPolynomial(state.amplitudes());
}

ComplexPolynomial separable_polynomial(const SeparableFactorization& f) {
    ComplexPolynomial p(ComplexVector{f.scale});
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
        ComplexVector factor((std::size_t{1} << j) + 1);
        factor.front() = f.factors[j].first;
        factor.back() += f.factors[j].second;
        p = p * ComplexPolynomial(std::move(factor));
    }
    return p;
}

SeparabilityVerdict decide_separability(const PureState& state, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("separability tolerance must be positive");
    SeparabilityVerdict verdict;
    SeparableFactorization f;
    Eigen::VectorXcd remaining = Eigen::Map<const Eigen::VectorXcd>(
        state.amplitudes().data(), static_cast<Eigen::Index>(state.dim()));

    for (std::size_t j = 0; j + 1 < state.n_qubits(); ++j) {
        // Column-major 2 x K view: row = current qubit's bit, column = the rest.
        const Eigen::Index cols = remaining.size() / 2;
        const Eigen::Map<const Eigen::MatrixXcd> m(remaining.data(), 2, cols);
        const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU);
        const auto& sv = svd.singularValues();
        const double ratio = sv(1) / sv(0);
        verdict.worst_bipartite_residual = std::max(verdict.worst_bipartite_residual, ratio);
        if (!(ratio <= tol)) return verdict;

        Complex a = svd.matrixU()(0, 0);
        Complex b = svd.matrixU()(1, 0);
        fix_phase(a, b);
        f.factors.emplace_back(a, b);
        Eigen::VectorXcd rest = std::conj(a) * m.row(0).transpose() + std::conj(b) * m.row(1).transpose();
        remaining = std::move(rest);
    }

    Complex a = remaining(0);
    Complex b = remaining(1);
    const double length = std::hypot(std::abs(a), std::abs(b));
    a /= length;
    b /= length;
    f.scale = length * fix_phase(a, b);
    f.factors.emplace_back(a, b);

    verdict.separable = true;
    verdict.factorization = std::move(f);
    return verdict;
}

Constellation separable_constellation(const SeparableFactorization& f) {
    std::vector<BlochPoint> points;
    const std::size_t n = f.n_qubits();
    for (std::size_t j = 0; j < n; ++j) {
        const auto [a, b] = f.factors[j];
        const std::size_t count = std::size_t{1} << j;
        if (std::abs(b) <= kNegligibleCoefficient * std::max(std::abs(a), std::abs(b))) {
            points.insert(points.end(), count, BlochPoint::south());
            continue;
        }
        const Complex w = -a / b;
        const double order = static_cast<double>(count);
        const double theta = 2.0 * std::atan(std::pow(std::abs(w), 1.0 / order));
        const double base = std::arg(w);
        for (std::size_t m = 0; m < count; ++m) {
            points.emplace_back(theta, (base + 2.0 * std::numbers::pi * static_cast<double>(m)) / order);
        }
    }
    const std::size_t expected = (std::size_t{1} << n) - 1;
    return Constellation(std::move(points), expected);
}

Constellation alt_constellation(const PureState& state, double tol) {
    return polynomial_constellation(alt_polynomial(state), tol);
}

}  // namespace stellar
