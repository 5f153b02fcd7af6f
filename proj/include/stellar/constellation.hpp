#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "stellar/state_core.hpp"

namespace stellar {

using Vec3 = std::array<double, 3>;

/// Point on the unit sphere. theta in [0, pi], phi in [0, 2 pi); the azimuth
/// of either pole is always 0.
class BlochPoint {
public:
    BlochPoint() = default;
    /// Reduces phi modulo 2 pi; theta must lie in [0, pi].
    BlochPoint(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }

    /// tan(theta/2) exp(i phi) = x.
    static BlochPoint from_root(Complex x);
    static BlochPoint north() { return {0.0, 0.0}; }
    static BlochPoint south();
    static BlochPoint from_cartesian(const Vec3& v);

    Vec3 cartesian() const;

    friend bool operator==(const BlochPoint&, const BlochPoint&) = default;

private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

/// Multiset of points; south-pole padding is already part of points().
class Constellation {
public:
    Constellation() = default;
    Constellation(std::vector<BlochPoint> points, std::size_t expected_size);

    const std::vector<BlochPoint>& points() const { return points_; }
    std::size_t expected_size() const { return expected_size_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<BlochPoint> points_;
    std::size_t expected_size_ = 0;
};

/// Great-circle distance, stable for nearly coincident and antipodal points.
double geodesic_distance(const BlochPoint& a, const BlochPoint& b);
double geodesic_distance(const Vec3& a, const Vec3& b);

struct Matching {
    std::vector<std::size_t> assignment;  // lhs[i] pairs with rhs[assignment[i]]
    double total_cost = 0.0;
    double max_distance = 0.0;
};

/// Minimum total geodesic cost assignment. Exhaustive over permutations up to
/// eight points, Hungarian algorithm above. Sizes must agree.
Matching match_points(const std::vector<BlochPoint>& lhs, const std::vector<BlochPoint>& rhs);

/// Max pair distance under the optimal assignment.
double constellation_mismatch(const Constellation& lhs, const Constellation& rhs);

/// Sorted multiset of all pairwise geodesic distances.
std::vector<double> pairwise_distances(const Constellation& c);

}  // namespace stellar
