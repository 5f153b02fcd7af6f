#pragma once

#include <string>

#include "stellar/constellation.hpp"

namespace stellar::render {

enum class Projection { OrthographicFront, OrthographicTop };

struct RenderSpec {
    Projection projection = Projection::OrthographicFront;
    int size_px = 512;
    bool show_axes = false;
    int point_radius_px = 8;
    std::string title;

    void validate() const;
};

/// Deterministic SVG. Front looks from +x (screen right = +y, up = +z), top
/// looks down from +z (right = +x, up = +y). Points on the far hemisphere are
/// drawn faded; coincident points carry a count badge.
std::string render_svg(const Constellation& c, const RenderSpec& spec);

/// Screen position of a unit vector under the projection, in pixels.
std::pair<double, double> project(const Vec3& v, const RenderSpec& spec);

}  // namespace stellar::render
