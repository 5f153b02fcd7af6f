#include "stellar/io.hpp"

#include <fstream>
#include <sstream>

namespace stellar::io {

using nlohmann::json;

namespace {

double number(const json& v, const char* what) {
    if (!v.is_number()) throw FormatError(std::string(what) + " must be a number");
    return v.get<double>();
}

}  // namespace

json state_to_json(const PureState& state) {
    json amps = json::array();
    for (const auto& z : state.amplitudes()) amps.push_back({z.real(), z.imag()});
    return {{"n_qubits", state.n_qubits()}, {"amplitudes", std::move(amps)}};
}

PureState state_from_json(const json& doc) {
    if (!doc.is_object()) throw FormatError("state document must be a JSON object");
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
        throw FormatError("state needs an integer \"n_qubits\"");
    }
    const auto n = doc["n_qubits"].get<long long>();
    if (n < 1 || n > 30) throw FormatError("\"n_qubits\" must be in [1, 30]");
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
        throw FormatError("state needs an \"amplitudes\" array");
    }
    ComplexVector amps;
    for (const auto& entry : doc["amplitudes"]) {
        if (!entry.is_array() || entry.size() != 2) {
            throw FormatError("each amplitude must be a [re, im] pair");
        }
        amps.emplace_back(number(entry[0], "amplitude real part"), number(entry[1], "amplitude imaginary part"));
    }
    try {
        return PureState(static_cast<std::size_t>(n), std::move(amps));
    } catch (const InvalidArgument& e) {
        throw FormatError(e.what());
    }
}

json constellation_to_json(const Constellation& c) {
    json points = json::array();
    for (const auto& p : c.points()) points.push_back({{"theta", p.theta()}, {"phi", p.phi()}});
    return {{"expected_size", c.expected_size()}, {"points", std::move(points)}};
}

Constellation constellation_from_json(const json& doc) {
    if (!doc.is_object()) throw FormatError("constellation document must be a JSON object");
    if (!doc.contains("expected_size") || !doc["expected_size"].is_number_integer() ||
        doc["expected_size"].get<long long>() < 0) {
        throw FormatError("constellation needs a nonnegative integer \"expected_size\"");
    }
    if (!doc.contains("points") || !doc["points"].is_array()) {
        throw FormatError("constellation needs a \"points\" array");
    }
    std::vector<BlochPoint> points;
    for (const auto& entry : doc["points"]) {
        if (!entry.is_object() || !entry.contains("theta") || !entry.contains("phi")) {
            throw FormatError("each point needs \"theta\" and \"phi\"");
        }
        try {
            points.emplace_back(number(entry["theta"], "theta"), number(entry["phi"], "phi"));
        } catch (const InvalidArgument& e) {
            throw FormatError(e.what());
        }
    }
    try {
        return Constellation(std::move(points), doc["expected_size"].get<std::size_t>());
    } catch (const InvalidArgument& e) {
        throw FormatError(e.what());
    }
}

json verdict_to_json(const SeparabilityVerdict& v) {
    json factors = nullptr;
    if (v.factorization) {
        factors = json::array();
        for (const auto& [a, b] : v.factorization->factors) {
            factors.push_back({a.real(), a.imag(), b.real(), b.imag()});
        }
    }
    return {{"separable", v.separable}, {"factors", std::move(factors)}, {"residual", v.worst_bipartite_residual}};
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
}

std::string dump(const json& doc) { return doc.dump(); }

}  // namespace stellar::io
