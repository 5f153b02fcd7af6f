#include "stellar/state_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace stellar {

namespace {

bool all_zero(const ComplexVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Complex& z) { return z == Complex{}; });
}

bool all_finite(const ComplexVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

}  // namespace

BasisLabel BasisLabel::from_index(std::size_t index, std::size_t n_qubits) {
    if (n_qubits < 64 && index >> n_qubits != 0) {
        throw InvalidArgument("basis index " + std::to_string(index) + " out of range for " +
                              std::to_string(n_qubits) + " qubits");
    }
    BasisLabel label;
    label.bits.resize(n_qubits);
    for (std::size_t j = 0; j < n_qubits; ++j) {
        label.bits[j] = static_cast<std::uint8_t>((index >> j) & 1U);
    }
    return label;
}

std::size_t decimal_index(const BasisLabel& label) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < label.bits.size(); ++j) {
        if (label.bits[j] > 1) throw InvalidArgument("basis label bits must be 0 or 1");
        index |= static_cast<std::size_t>(label.bits[j]) << j;
    }
    return index;
}

PureState::PureState(std::size_t n_qubits, ComplexVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits == 0) throw InvalidArgument("a state needs at least one qubit");
    if (n_qubits >= 8 * sizeof(std::size_t) - 1 || amplitudes_.size() != (std::size_t{1} << n_qubits)) {
        throw InvalidArgument("expected 2^" + std::to_string(n_qubits) + " amplitudes, got " +
                              std::to_string(amplitudes_.size()));
    }
    if (!all_finite(amplitudes_)) throw InvalidArgument("amplitudes must be finite");
    if (all_zero(amplitudes_)) throw InvalidArgument("the zero vector is not a state");
}

PureState PureState::basis(std::size_t n_qubits, std::size_t index) {
    ComplexVector amps(std::size_t{1} << n_qubits);
    if (index >= amps.size()) throw InvalidArgument("basis index out of range");
    amps[index] = 1.0;
    return PureState(n_qubits, std::move(amps));
}

PureState make_pure_state(std::size_t n_qubits, ComplexVector amplitudes) {
    return PureState(n_qubits, std::move(amplitudes));
}

SpinState::SpinState(int two_s, ComplexVector amplitudes)
    : two_s_(two_s), amplitudes_(std::move(amplitudes)) {
    if (two_s < 0) throw InvalidArgument("2S must be nonnegative");
    if (amplitudes_.size() != static_cast<std::size_t>(two_s) + 1) {
        throw InvalidArgument("expected 2S+1 = " + std::to_string(two_s + 1) + " amplitudes, got " +
                              std::to_string(amplitudes_.size()));
    }
    if (!all_finite(amplitudes_)) throw InvalidArgument("amplitudes must be finite");
    if (all_zero(amplitudes_)) throw InvalidArgument("the zero vector is not a state");
}

SpinState SpinState::basis(int two_s, std::size_t m) {
    ComplexVector amps(static_cast<std::size_t>(two_s) + 1);
    if (m >= amps.size()) throw InvalidArgument("M index out of range");
    amps[m] = 1.0;
    return SpinState(two_s, std::move(amps));
}

PureState tensor_product(std::span<const PureState> factors) {
    if (factors.empty()) throw InvalidArgument("tensor product of an empty factor list");
    ComplexVector amps{1.0};
    std::size_t n_qubits = 0;
    for (const auto& f : factors) {
        ComplexVector next(amps.size() * f.dim());
        // Existing qubits keep the low bits; the new factor occupies the high bits.
        for (std::size_t hi = 0; hi < f.dim(); ++hi) {
            for (std::size_t lo = 0; lo < amps.size(); ++lo) {
                next[hi * amps.size() + lo] = amps[lo] * f[hi];
            }
        }
        amps = std::move(next);
        n_qubits += f.n_qubits();
    }
    return PureState(n_qubits, std::move(amps));
}

SpinState spin_from_qubits(const PureState& state) {
    return SpinState(static_cast<int>(state.dim()) - 1, state.amplitudes());
}

PureState qubits_from_spin(const SpinState& state) {
    const std::size_t dim = state.dim();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw InvalidArgument("2S+1 = " + std::to_string(dim) + " is not a qubit register dimension");
    }
    return PureState(static_cast<std::size_t>(std::countr_zero(dim)), state.amplitudes());
}

double norm(std::span<const Complex> v) {
    double scale = 0.0;
    for (const auto& z : v) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& z : v) sum += std::norm(z / scale);
    return scale * std::sqrt(sum);
}

Complex inner(std::span<const Complex> lhs, std::span<const Complex> rhs) {
    if (lhs.size() != rhs.size()) throw InvalidArgument("inner product of vectors of different length");
    Complex sum{};
    for (std::size_t i = 0; i < lhs.size(); ++i) sum += std::conj(lhs[i]) * rhs[i];
    return sum;
}

double fidelity(std::span<const Complex> u, std::span<const Complex> v) {
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu == 0.0 || nv == 0.0) throw InvalidArgument("fidelity with the zero vector");
    ComplexVector uu(u.begin(), u.end());
    ComplexVector vv(v.begin(), v.end());
    for (auto& z : uu) z /= nu;
    for (auto& z : vv) z /= nv;
    return std::norm(inner(uu, vv));
}

double fidelity(const PureState& u, const PureState& v) {
    return fidelity(std::span<const Complex>(u.amplitudes()), std::span<const Complex>(v.amplitudes()));
}

double fidelity(const SpinState& u, const SpinState& v) {
    return fidelity(std::span<const Complex>(u.amplitudes()), std::span<const Complex>(v.amplitudes()));
}

bool same_ray(std::span<const Complex> u, std::span<const Complex> v, double tol) {
    return u.size() == v.size() && 1.0 - fidelity(u, v) <= tol;
}

}  // namespace stellar
