#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace stellar {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Default tolerance for equality-up-to-scale comparisons.
inline constexpr double kDefaultTolerance = 1e-10;

/// Thrown for malformed states, dimension mismatches and similar caller errors.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Computational basis label. bits[j] is the state of qubit j; qubit 0 is the
/// least significant bit of the decimal label.
struct BasisLabel {
    std::vector<std::uint8_t> bits;

    static BasisLabel from_index(std::size_t index, std::size_t n_qubits);
};

std::size_t decimal_index(const BasisLabel& label);

/// Pure N-qubit state over the decimal-labelled basis |i>_d. Never normalized
/// implicitly; two states describe the same physical state when they are
/// proportional.
class PureState {
public:
    PureState(std::size_t n_qubits, ComplexVector amplitudes);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const ComplexVector& amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    static PureState basis(std::size_t n_qubits, std::size_t index);

private:
    std::size_t n_qubits_;
    ComplexVector amplitudes_;
};

PureState make_pure_state(std::size_t n_qubits, ComplexVector amplitudes);

/// Amplitudes over |S,M>, index m <-> M = m - S.
class SpinState {
public:
    SpinState(int two_s, ComplexVector amplitudes);

    int two_s() const { return two_s_; }
    double spin() const { return 0.5 * two_s_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const ComplexVector& amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t m) const { return amplitudes_[m]; }

    /// |S,M> for M = m - S.
    static SpinState basis(int two_s, std::size_t m);

private:
    int two_s_;
    ComplexVector amplitudes_;
};

/// amplitude(i) = prod_j factor_j(i_j); qubits of factors[0] come first
/// (lowest bits).
PureState tensor_product(std::span<const PureState> factors);

/// Qubit basis |i>_d identified with |S, i - S>, S = (2^N - 1)/2.
SpinState spin_from_qubits(const PureState& state);

/// Inverse of spin_from_qubits; requires 2S + 1 to be a power of two.
PureState qubits_from_spin(const SpinState& state);

// Ray utilities shared by every module.
double norm(std::span<const Complex> v);
Complex inner(std::span<const Complex> lhs, std::span<const Complex> rhs);

/// |<u|v>|^2 / (<u|u><v|v>).
double fidelity(std::span<const Complex> u, std::span<const Complex> v);
double fidelity(const PureState& u, const PureState& v);
double fidelity(const SpinState& u, const SpinState& v);

/// True when u and v span the same ray, compared through 1 - fidelity.
bool same_ray(std::span<const Complex> u, std::span<const Complex> v,
              double tol = kDefaultTolerance);

}  // namespace stellar
