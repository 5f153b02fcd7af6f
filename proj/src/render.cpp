#include "stellar/render.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "stellar/state_core.hpp"

namespace stellar::render {

namespace {

constexpr double kCoincident = 1e-6;  // radians

// Three decimals, never "-0.000".
std::string num(double v) {
    double r = std::round(v * 1000.0) / 1000.0;
    if (r == 0.0) r = 0.0;
    return fmt::format("{:.3f}", r);
}

double depth(const Vec3& v, Projection projection) {
    return projection == Projection::OrthographicFront ? v[0] : v[2];
}

struct Group {
    BlochPoint point;
    int count;
};

std::vector<Group> group_coincident(const Constellation& c) {
    std::vector<Group> groups;
    for (const auto& p : c.points()) {
        bool merged = false;
        for (auto& g : groups) {
            if (geodesic_distance(g.point, p) <= kCoincident) {
                ++g.count;
                merged = true;
                break;
            }
        }
        if (!merged) groups.push_back({p, 1});
    }
    return groups;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

void RenderSpec::validate() const {
    if (size_px < 64) throw InvalidArgument("render size must be at least 64 px");
    if (point_radius_px < 1) throw InvalidArgument("point radius must be at least 1 px");
}

std::pair<double, double> project(const Vec3& v, const RenderSpec& spec) {
    const double centre = 0.5 * spec.size_px;
    const double radius = 0.42 * spec.size_px;
    if (spec.projection == Projection::OrthographicFront) {
        return {centre + radius * v[1], centre - radius * v[2]};
    }
    return {centre + radius * v[0], centre - radius * v[1]};
}

std::string render_svg(const Constellation& c, const RenderSpec& spec) {
    spec.validate();
    const double size = spec.size_px;
    const double centre = 0.5 * size;
    const double radius = 0.42 * size;
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
                       spec.size_px);
    svg += fmt::format("<rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>\n", spec.size_px);
    if (!spec.title.empty()) {
        svg += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\">{}</text>\n",
                           num(0.04 * size), num(0.06 * size), num(0.045 * size), escape(spec.title));
    }
    svg += fmt::format("<circle cx=\"{0}\" cy=\"{0}\" r=\"{1}\" fill=\"#f4f6fa\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n",
                       num(centre), num(radius));

    if (spec.show_axes) {
        // Both visible great circles through the view axis project to diameters.
        const std::string style = "stroke=\"#8a8f99\" stroke-width=\"1\" stroke-dasharray=\"4 3\"";
        svg += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {}/>\n", num(centre - radius), num(centre),
                           num(centre + radius), num(centre), style);
        svg += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {}/>\n", num(centre), num(centre - radius),
                           num(centre), num(centre + radius), style);
        const bool front = spec.projection == Projection::OrthographicFront;
        const std::string label = "font-family=\"sans-serif\" font-size=\"" + num(0.04 * size) + "\" fill=\"#555555\"";
        svg += fmt::format("<text x=\"{}\" y=\"{}\" {}>{}</text>\n", num(centre + radius + 0.01 * size),
                           num(centre - 0.01 * size), label, front ? "y" : "x");
        svg += fmt::format("<text x=\"{}\" y=\"{}\" {}>{}</text>\n", num(centre + 0.01 * size),
                           num(centre - radius - 0.01 * size), label, front ? "z" : "y");
    }

    const auto groups = group_coincident(c);
    // Far hemisphere first so front markers stay on top.
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& g : groups) {
            const Vec3 v = g.point.cartesian();
            const bool far = depth(v, spec.projection) < 0.0;
            if (far != (pass == 0)) continue;
            const auto [x, y] = project(v, spec);
            const std::string opacity = far ? "0.35" : "1";
            for (int k = 0; k < g.count; ++k) {
                svg += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#c0392b\" fill-opacity=\"{}\" "
                                   "stroke=\"#5b1a13\" stroke-opacity=\"{}\"/>\n",
                                   num(x), num(y), spec.point_radius_px, opacity, opacity);
            }
            if (g.count > 1) {
                svg += fmt::format("<text class=\"count\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" "
                                   "font-size=\"{}\" fill=\"#222222\">&#215;{}</text>\n",
                                   num(x + 1.2 * spec.point_radius_px), num(y - 1.2 * spec.point_radius_px),
                                   num(0.035 * size), g.count);
            }
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace stellar::render
