#include "stellar/demo.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <fmt/format.h>

#include "stellar/altsep.hpp"
#include "stellar/majorana.hpp"
#include "stellar/render.hpp"
#include "stellar/rotations.hpp"

namespace stellar::demo {

namespace {

const EulerAngles kQuarterTurnY{0.0, 0.5 * std::numbers::pi, 0.0};

PureState spin_rotated(const PureState& s) {
    return qubits_from_spin(rotate_spin(spin_from_qubits(s), kQuarterTurnY));
}

}  // namespace

PureState phi_entangled() {
    const double r3 = std::sqrt(3.0);
    return PureState(2, {r3, 1.0, 1.0, r3});
}

PureState phi_separable() { return PureState(2, {1.0, 1.0, 1.0, 1.0}); }

std::vector<Panel> build_panels() {
    struct Source {
        const char* letter;
        const char* caption;
        PureState state;
    };
    const PureState ent = phi_entangled();
    const PureState sep = phi_separable();
    const std::vector<Source> sources = {
        {"a", "phi_ent", ent},
        {"b", "phi_ent, spin-3/2 rotation (0, pi/2, 0)", spin_rotated(ent)},
        {"c", "phi_ent, both qubits rotated (0, pi/2, 0)", rotate_qubits(ent, kQuarterTurnY)},
        {"d", "phi_sep", sep},
        {"e", "phi_sep, spin-3/2 rotation (0, pi/2, 0)", spin_rotated(sep)},
        {"f", "phi_sep, both qubits rotated (0, pi/2, 0)", rotate_qubits(sep, kQuarterTurnY)},
    };

    std::vector<Panel> panels;
    for (const Encoding encoding : {Encoding::Majorana, Encoding::Alternative}) {
        const char* figure = encoding == Encoding::Majorana ? "1" : "2";
        for (const auto& src : sources) {
            Constellation points = encoding == Encoding::Majorana ? majorana_constellation(src.state)
                                                                  : alt_constellation(src.state);
            const bool separable = decide_separability(src.state).separable;
            panels.push_back({std::string(figure) + src.letter, src.caption, encoding, src.state,
                              std::move(points), separable});
        }
    }
    return panels;
}

std::string summary(const std::vector<Panel>& panels) {
    std::string out;
    for (const auto& p : panels) {
        out += fmt::format("{} [{}] {}: {}\n", p.id, p.encoding == Encoding::Majorana ? "majorana" : "alt", p.caption,
                           p.separable ? "separable" : "entangled");
        for (const auto& pt : p.points.points()) {
            double theta = std::round(pt.theta() * 1e6) / 1e6;
            double phi = std::round(pt.phi() * 1e6) / 1e6;
            if (theta == 0.0) theta = 0.0;
            if (phi == 0.0) phi = 0.0;
            out += fmt::format("  theta={:.6f} phi={:.6f}\n", theta, phi);
        }
    }
    return out;
}

std::vector<Panel> write_demo(const std::string& dir) {
    std::filesystem::create_directories(dir);
    auto panels = build_panels();
    for (const auto& p : panels) {
        render::RenderSpec spec;
        spec.show_axes = true;
        spec.title = fmt::format("({}) {}", p.id, p.caption);
        std::ofstream(std::filesystem::path(dir) / ("fig" + p.id + ".svg")) << render::render_svg(p.points, spec);
    }
    std::ofstream(std::filesystem::path(dir) / "summary.txt") << summary(panels);
    return panels;
}

}  // namespace stellar::demo
