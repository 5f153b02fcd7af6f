#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "stellar/constellation.hpp"
#include "stellar/state_core.hpp"

namespace stellar {

/// z-y-z Euler angles in radians.
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    /// Same rotation with alpha, gamma in [0, 2 pi) and beta in [0, pi].
    EulerAngles canonical() const;
};

class UnitaryMatrix {
public:
    explicit UnitaryMatrix(Eigen::MatrixXcd entries);

    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }

    ComplexVector apply(std::span<const Complex> v) const;
    /// max |(U U^dagger - I)_{ij}|
    double unitarity_defect() const;

private:
    Eigen::MatrixXcd entries_;
};

class RotationMatrix3 {
public:
    explicit RotationMatrix3(const Eigen::Matrix3d& entries);

    const Eigen::Matrix3d& entries() const { return entries_; }
    Vec3 apply(const Vec3& v) const;

    friend RotationMatrix3 operator*(const RotationMatrix3& lhs, const RotationMatrix3& rhs) {
        return RotationMatrix3(lhs.entries_ * rhs.entries_);
    }

private:
    Eigen::Matrix3d entries_;
};

/// Real small-d matrix of the rotation about y, rows/cols in ascending M.
/// Sign convention: d^{1/2}(beta) = [[cos(beta/2), -sin(beta/2)],
///                                   [sin(beta/2),  cos(beta/2)]].
Eigen::MatrixXd wigner_small_d(int two_s, double beta);

/// D_{M'M} = e^{-i alpha M'} d_{M'M}(beta) e^{-i gamma M}. With the small-d
/// convention above, this is the representation whose Majorana constellation
/// rotates rigidly by so3_matrix(angles).
UnitaryMatrix wigner_D(int two_s, const EulerAngles& angles);

SpinState rotate_spin(const SpinState& state, const EulerAngles& angles);

/// Applies wigner_D(1, per_qubit[j]) to qubit j.
PureState rotate_qubits(const PureState& state, std::span<const EulerAngles> per_qubit);
PureState rotate_qubits(const PureState& state, const EulerAngles& uniform);

/// Action of wigner_D(1, angles) on a single-qubit pair (a, b) = a|0> + b|1>.
std::pair<Complex, Complex> rotate_separable_components(Complex a, Complex b,
                                                        const EulerAngles& angles);

/// R_z(alpha) R_y(beta) R_z(gamma).
RotationMatrix3 so3_matrix(const EulerAngles& angles);

Constellation rotate_constellation(const Constellation& c, const RotationMatrix3& r);

}  // namespace stellar
