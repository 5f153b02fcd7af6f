#include "stellar/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace stellar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_azimuth(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Hungarian algorithm with row/column potentials, O(n^3).
std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> owner(n + 1, 0), way(n + 1, 0);
    for (std::size_t row = 1; row <= n; ++row) {
        owner[0] = row;
        std::size_t col0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[col0] = true;
            const std::size_t r = owner[col0];
            double delta = inf;
            std::size_t col1 = 0;
            for (std::size_t col = 1; col <= n; ++col) {
                if (used[col]) continue;
                const double reduced = cost[r - 1][col - 1] - u[r] - v[col];
                if (reduced < minv[col]) {
                    minv[col] = reduced;
                    way[col] = col0;
                }
                if (minv[col] < delta) {
                    delta = minv[col];
                    col1 = col;
                }
            }
            for (std::size_t col = 0; col <= n; ++col) {
                if (used[col]) {
                    u[owner[col]] += delta;
                    v[col] -= delta;
                } else {
                    minv[col] -= delta;
                }
            }
            col0 = col1;
        } while (owner[col0] != 0);
        do {
            const std::size_t col1 = way[col0];
            owner[col0] = owner[col1];
            col0 = col1;
        } while (col0 != 0);
    }
    std::vector<std::size_t> assignment(n);
    for (std::size_t col = 1; col <= n; ++col) assignment[owner[col] - 1] = col - 1;
    return assignment;
}

}  // namespace

BlochPoint::BlochPoint(double theta, double phi) : theta_(theta), phi_(wrap_azimuth(phi)) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi) || !std::isfinite(phi)) {
        throw InvalidArgument("Bloch point needs theta in [0, pi] and a finite phi");
    }
    if (theta_ == 0.0 || theta_ == std::numbers::pi) phi_ = 0.0;
}

BlochPoint BlochPoint::south() { return {std::numbers::pi, 0.0}; }

BlochPoint BlochPoint::from_root(Complex x) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return south();
    return {2.0 * std::atan(std::abs(x)), std::arg(x)};
}

BlochPoint BlochPoint::from_cartesian(const Vec3& v) {
    const double rho = std::hypot(v[0], v[1]);
    if (rho == 0.0 && v[2] == 0.0) throw InvalidArgument("zero vector has no direction");
    const double theta = std::atan2(rho, v[2]);
    return {theta, rho == 0.0 ? 0.0 : std::atan2(v[1], v[0])};
}

Vec3 BlochPoint::cartesian() const {
    const double s = std::sin(theta_);
    return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

Constellation::Constellation(std::vector<BlochPoint> points, std::size_t expected_size)
    : points_(std::move(points)), expected_size_(expected_size) {
    if (points_.size() != expected_size_) {
        throw InvalidArgument("constellation has " + std::to_string(points_.size()) + " points, expected " +
                              std::to_string(expected_size_));
    }
}

double geodesic_distance(const Vec3& a, const Vec3& b) {
    const Vec3 c = cross(a, b);
    return std::atan2(std::sqrt(dot(c, c)), dot(a, b));
}

double geodesic_distance(const BlochPoint& a, const BlochPoint& b) {
    return geodesic_distance(a.cartesian(), b.cartesian());
}

Matching match_points(const std::vector<BlochPoint>& lhs, const std::vector<BlochPoint>& rhs) {
    if (lhs.size() != rhs.size()) throw InvalidArgument("cannot match point sets of different size");
    const std::size_t n = lhs.size();
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) cost[i][j] = geodesic_distance(lhs[i], rhs[j]);
    }

    Matching best;
    if (n <= 8) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        best.total_cost = std::numeric_limits<double>::infinity();
        do {
            double total = 0.0;
            for (std::size_t i = 0; i < n; ++i) total += cost[i][perm[i]];
            if (total < best.total_cost) {
                best.total_cost = total;
                best.assignment = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (n == 0) best.total_cost = 0.0;
    } else {
        best.assignment = hungarian(cost);
        for (std::size_t i = 0; i < n; ++i) best.total_cost += cost[i][best.assignment[i]];
    }
    for (std::size_t i = 0; i < n; ++i) {
        best.max_distance = std::max(best.max_distance, cost[i][best.assignment[i]]);
    }
    return best;
}

double constellation_mismatch(const Constellation& lhs, const Constellation& rhs) {
    return match_points(lhs.points(), rhs.points()).max_distance;
}

std::vector<double> pairwise_distances(const Constellation& c) {
    std::vector<double> d;
    const auto& p = c.points();
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) d.push_back(geodesic_distance(p[i], p[j]));
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace stellar
