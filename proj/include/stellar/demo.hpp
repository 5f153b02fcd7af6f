#pragma once

#include <string>
#include <vector>

#include "stellar/constellation.hpp"
#include "stellar/state_core.hpp"

namespace stellar::demo {

PureState phi_entangled();  // sqrt3|00> + |10> + |01> + sqrt3|11>
PureState phi_separable();  // |00> + |10> + |01> + |11>

enum class Encoding { Majorana, Alternative };

struct Panel {
    std::string id;          // "1a" .. "2f"
    std::string caption;
    Encoding encoding;
    PureState state;
    Constellation points;
    bool separable;
};

/// The twelve panels: figure 1 uses the Majorana encoding, figure 2 the
/// alternative one; per figure (a)-(c) are phi_ent unrotated, spin-3/2 rotated
/// and qubit rotated by (0, pi/2, 0), and (d)-(f) repeat this for phi_sep.
std::vector<Panel> build_panels();

std::string summary(const std::vector<Panel>& panels);

/// Writes fig<id>.svg for every panel plus summary.txt into dir.
std::vector<Panel> write_demo(const std::string& dir);

}  // namespace stellar::demo
