#include "stellar/rotations.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace stellar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxTwoS = 170;  // largest n with n! finite in double

double wrap(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w >= kTwoPi ? 0.0 : w;
}

const std::vector<double>& factorials() {
    static const std::vector<double> table = [] {
        std::vector<double> f(kMaxTwoS + 1, 1.0);
        for (int i = 1; i <= kMaxTwoS; ++i) f[i] = f[i - 1] * static_cast<double>(i);
        return f;
    }();
    return table;
}

}  // namespace

EulerAngles EulerAngles::canonical() const {
    double a = alpha;
    double b = wrap(beta);
    double g = gamma;
    if (b > std::numbers::pi) {
        // R_y(b) = R_z(pi) R_y(2 pi - b) R_z(pi)
        b = kTwoPi - b;
        a += std::numbers::pi;
        g += std::numbers::pi;
    }
    return {wrap(a), b, wrap(g)};
}

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw InvalidArgument("unitary matrix must be square and nonempty");
    }
}

ComplexVector UnitaryMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != dim()) throw InvalidArgument("dimension mismatch applying unitary");
    const Eigen::Map<const Eigen::VectorXcd> in(v.data(), static_cast<Eigen::Index>(v.size()));
    const Eigen::VectorXcd out = entries_ * in;
    return {out.data(), out.data() + out.size()};
}

double UnitaryMatrix::unitarity_defect() const {
    const Eigen::MatrixXcd delta =
        entries_ * entries_.adjoint() - Eigen::MatrixXcd::Identity(entries_.rows(), entries_.cols());
    return delta.cwiseAbs().maxCoeff();
}

RotationMatrix3::RotationMatrix3(const Eigen::Matrix3d& entries) : entries_(entries) {}

Vec3 RotationMatrix3::apply(const Vec3& v) const {
    const Eigen::Vector3d r = entries_ * Eigen::Vector3d(v[0], v[1], v[2]);
    return {r[0], r[1], r[2]};
}

Eigen::MatrixXd wigner_small_d(int two_s, double beta) {
    if (two_s < 0 || two_s > kMaxTwoS) {
        throw InvalidArgument("2S = " + std::to_string(two_s) + " outside [0, " + std::to_string(kMaxTwoS) + "]");
    }
    const auto& f = factorials();
    const int n = two_s;
    const double c = std::cos(0.5 * beta);
    const double s = std::sin(0.5 * beta);
    Eigen::MatrixXd d(n + 1, n + 1);
    // Row p <-> M' = p - S, column q <-> M = q - S.
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            const double prefactor = std::sqrt(f[p] * f[n - p]) * std::sqrt(f[q] * f[n - q]);
            double sum = 0.0;
            for (int k = std::max(0, q - p); k <= std::min(q, n - p); ++k) {
                const double term = prefactor / (f[q - k] * f[k]) / (f[n - p - k] * f[k + p - q]) *
                                    std::pow(c, n + q - p - 2 * k) * std::pow(s, 2 * k + p - q);
                sum += (k % 2 == 0) ? term : -term;
            }
            d(p, q) = sum;
        }
    }
    return d;
}

UnitaryMatrix wigner_D(int two_s, const EulerAngles& angles) {
    const Eigen::MatrixXd d = wigner_small_d(two_s, angles.beta);
    Eigen::MatrixXcd D(two_s + 1, two_s + 1);
    for (int p = 0; p <= two_s; ++p) {
        const double m_row = p - 0.5 * two_s;
        for (int q = 0; q <= two_s; ++q) {
            const double m_col = q - 0.5 * two_s;
            D(p, q) = d(p, q) * std::polar(1.0, -angles.alpha * m_row - angles.gamma * m_col);
        }
    }
    return UnitaryMatrix(std::move(D));
}

SpinState rotate_spin(const SpinState& state, const EulerAngles& angles) {
    return SpinState(state.two_s(), wigner_D(state.two_s(), angles).apply(state.amplitudes()));
}

PureState rotate_qubits(const PureState& state, std::span<const EulerAngles> per_qubit) {
    if (per_qubit.size() != state.n_qubits()) {
        throw InvalidArgument("need " + std::to_string(state.n_qubits()) + " angle triples, got " +
                              std::to_string(per_qubit.size()));
    }
    ComplexVector amps = state.amplitudes();
    for (std::size_t j = 0; j < per_qubit.size(); ++j) {
        const UnitaryMatrix u = wigner_D(1, per_qubit[j]);
        const std::size_t stride = std::size_t{1} << j;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (i & stride) continue;
            const Complex x0 = amps[i];
            const Complex x1 = amps[i | stride];
            amps[i] = u(0, 0) * x0 + u(0, 1) * x1;
            amps[i | stride] = u(1, 0) * x0 + u(1, 1) * x1;
        }
    }
    return PureState(state.n_qubits(), std::move(amps));
}

PureState rotate_qubits(const PureState& state, const EulerAngles& uniform) {
    const std::vector<EulerAngles> per_qubit(state.n_qubits(), uniform);
    return rotate_qubits(state, per_qubit);
}

std::pair<Complex, Complex> rotate_separable_components(Complex a, Complex b, const EulerAngles& angles) {
    if (a == Complex{} && b == Complex{}) throw InvalidArgument("cannot rotate the zero spinor");
    const double c = std::cos(0.5 * angles.beta);
    const double s = std::sin(0.5 * angles.beta);
    const double sum = 0.5 * (angles.alpha + angles.gamma);
    const double diff = 0.5 * (angles.alpha - angles.gamma);
    const Complex a_new = a * c * std::polar(1.0, sum) - b * s * std::polar(1.0, diff);
    const Complex b_new = a * s * std::polar(1.0, -diff) + b * c * std::polar(1.0, -sum);
    return {a_new, b_new};
}

RotationMatrix3 so3_matrix(const EulerAngles& angles) {
    auto rz = [](double t) {
        Eigen::Matrix3d r;
        r << std::cos(t), -std::sin(t), 0.0, std::sin(t), std::cos(t), 0.0, 0.0, 0.0, 1.0;
        return r;
    };
    Eigen::Matrix3d ry;
    const double cb = std::cos(angles.beta);
    const double sb = std::sin(angles.beta);
    ry << cb, 0.0, sb, 0.0, 1.0, 0.0, -sb, 0.0, cb;
    return RotationMatrix3(rz(angles.alpha) * ry * rz(angles.gamma));
}

Constellation rotate_constellation(const Constellation& c, const RotationMatrix3& r) {
    std::vector<BlochPoint> out;
    out.reserve(c.size());
    for (const auto& p : c.points()) out.push_back(BlochPoint::from_cartesian(r.apply(p.cartesian())));
    return Constellation(std::move(out), c.expected_size());
}

}  // namespace stellar
