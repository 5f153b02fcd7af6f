#pragma once

#include <string>

#include "json.hpp"

#include "stellar/altsep.hpp"
#include "stellar/constellation.hpp"
#include "stellar/state_core.hpp"

namespace stellar::io {

/// Malformed document or schema violation.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"n_qubits": N, "amplitudes": [[re, im], ...]}
nlohmann::json state_to_json(const PureState& state);
PureState state_from_json(const nlohmann::json& doc);

// {"expected_size": n, "points": [{"theta": t, "phi": p}, ...]}
nlohmann::json constellation_to_json(const Constellation& c);
Constellation constellation_from_json(const nlohmann::json& doc);

// {"separable": bool, "factors": [[a_re, a_im, b_re, b_im], ...] | null, "residual": r}
nlohmann::json verdict_to_json(const SeparabilityVerdict& v);

/// Parses text; FormatError on syntax errors.
nlohmann::json parse(const std::string& text);
nlohmann::json read_file(const std::string& path);

/// Compact single-line dump, doubles in shortest round-trip form.
std::string dump(const nlohmann::json& doc);

}  // namespace stellar::io
