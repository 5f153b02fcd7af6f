#include "stellar/cli.hpp"

#include <charconv>
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "stellar/altsep.hpp"
#include "stellar/demo.hpp"
#include "stellar/io.hpp"
#include "stellar/majorana.hpp"
#include "stellar/render.hpp"
#include "stellar/rotations.hpp"

namespace stellar::cli {

namespace {

nlohmann::json load(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream text;
        text << in.rdbuf();
        return io::parse(text.str());
    }
    return io::read_file(path);
}

double parse_real(std::string text) {
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    if (first == std::string::npos) throw io::FormatError("empty angle");
    text = text.substr(first, last - first + 1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
        throw io::FormatError("not a number: '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream stream(text);
    while (std::getline(stream, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

EulerAngles parse_triple(const std::string& text, bool degrees) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw io::FormatError("angles need exactly three values 'alpha,beta,gamma'");
    const double unit = degrees ? std::numbers::pi / 180.0 : 1.0;
    return {parse_real(parts[0]) * unit, parse_real(parts[1]) * unit, parse_real(parts[2]) * unit};
}

struct Options {
    std::string file;
    std::string encoding = "majorana";
    std::string mode;
    std::string angles;
    std::string angles_per_qubit;
    std::string projection = "front";
    std::string out_dir;
    double tol = 0.0;
    int size = 512;
    int radius = 8;
    bool axes = false;
    bool degrees = false;
};

int cmd_points(const Options& o, std::istream& in, std::ostream& out) {
    const PureState state = io::state_from_json(load(o.file, in));
    const double tol = o.tol > 0.0 ? o.tol : kDefaultRootTolerance;
    const Constellation c = o.encoding == "alt" ? alt_constellation(state, tol) : majorana_constellation(state, tol);
    out << io::dump(io::constellation_to_json(c)) << '\n';
    return kExitOk;
}

int cmd_rotate(const Options& o, std::istream& in, std::ostream& out) {
    const PureState state = io::state_from_json(load(o.file, in));
    if (o.angles.empty() == o.angles_per_qubit.empty()) {
        throw io::FormatError("give exactly one of --angles or --angles-per-qubit");
    }
    if (o.mode == "spin") {
        if (o.angles.empty()) throw io::FormatError("spin mode takes a single --angles triple");
        const SpinState rotated = rotate_spin(spin_from_qubits(state), parse_triple(o.angles, o.degrees));
        out << io::dump(io::state_to_json(qubits_from_spin(rotated))) << '\n';
        return kExitOk;
    }
    std::vector<EulerAngles> per_qubit;
    if (!o.angles.empty()) {
        per_qubit.assign(state.n_qubits(), parse_triple(o.angles, o.degrees));
    } else {
        for (const auto& triple : split(o.angles_per_qubit, ';')) per_qubit.push_back(parse_triple(triple, o.degrees));
        if (per_qubit.size() != state.n_qubits()) {
            throw io::FormatError("--angles-per-qubit lists " + std::to_string(per_qubit.size()) +
                                  " triples for a " + std::to_string(state.n_qubits()) + "-qubit state");
        }
    }
    out << io::dump(io::state_to_json(rotate_qubits(state, per_qubit))) << '\n';
    return kExitOk;
}

int cmd_check_sep(const Options& o, std::istream& in, std::ostream& out) {
    const PureState state = io::state_from_json(load(o.file, in));
    const double tol = o.tol > 0.0 ? o.tol : kDefaultSeparabilityTolerance;
    out << io::dump(io::verdict_to_json(decide_separability(state, tol))) << '\n';
    return kExitOk;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
    const Constellation c = io::constellation_from_json(load(o.file, in));
    render::RenderSpec spec;
    spec.projection = o.projection == "top" ? render::Projection::OrthographicTop : render::Projection::OrthographicFront;
    spec.size_px = o.size;
    spec.show_axes = o.axes;
    spec.point_radius_px = o.radius;
    spec.validate();
    out << render::render_svg(c, spec);
    return kExitOk;
}

int cmd_demo(const Options& o, std::ostream& out) {
    const auto panels = demo::write_demo(o.out_dir);
    out << demo::summary(panels);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bloch-sphere constellations of pure N-qubit states", "stellar"};
    app.require_subcommand(1);
    Options o;

    auto* points = app.add_subcommand("points", "Constellation of a state (JSON on stdout)");
    points->add_option("file", o.file, "State JSON file, or - for stdin")->required();
    points->add_option("--encoding", o.encoding, "majorana | alt")->check(CLI::IsMember({"majorana", "alt"}));
    points->add_option("--tol", o.tol, "Root residual tolerance")->check(CLI::PositiveNumber);

    auto* rotate = app.add_subcommand("rotate", "Rotate a state (JSON on stdout)");
    rotate->add_option("file", o.file, "State JSON file, or - for stdin")->required();
    rotate->add_option("--mode", o.mode, "spin | qubits")->required()->check(CLI::IsMember({"spin", "qubits"}));
    rotate->add_option("--angles", o.angles, "alpha,beta,gamma (z-y-z)");
    rotate->add_option("--angles-per-qubit", o.angles_per_qubit, "\"a0,b0,g0;a1,b1,g1;...\"");
    rotate->add_flag("--degrees", o.degrees, "Angles are in degrees");

    auto* check = app.add_subcommand("check-sep", "Separability verdict (JSON on stdout)");
    check->add_option("file", o.file, "State JSON file, or - for stdin")->required();
    check->add_option("--tol", o.tol, "Rank-one tolerance on sigma2/sigma1")->check(CLI::PositiveNumber);

    auto* render = app.add_subcommand("render", "SVG rendering of a constellation");
    render->add_option("file", o.file, "Constellation JSON file, or - for stdin")->required();
    render->add_option("--projection", o.projection, "front | top")->check(CLI::IsMember({"front", "top"}));
    render->add_option("--size", o.size, "Image size in pixels (>= 64)");
    render->add_option("--radius", o.radius, "Marker radius in pixels");
    render->add_flag("--axes", o.axes, "Draw axis hints");

    auto* demo = app.add_subcommand("demo", "Regenerate the twelve reference panels");
    demo->add_option("--out", o.out_dir, "Output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "stellar: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (points->parsed()) return cmd_points(o, in, out);
        if (rotate->parsed()) return cmd_rotate(o, in, out);
        if (check->parsed()) return cmd_check_sep(o, in, out);
        if (render->parsed()) return cmd_render(o, in, out);
        return cmd_demo(o, out);
    } catch (const RootFindingError& e) {
        err << "stellar: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const io::FormatError& e) {
        err << "stellar: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvalidArgument& e) {
        err << "stellar: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace stellar::cli
