#pragma once

#include "pg/coloring.hpp"
#include "pg/discharging.hpp"
#include "pg/plane_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pg {

class ConfigTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A small graph split into a deleted core S, a shell T = V \ S, and a
// recolorable subset R of the shell whose full neighborhoods lie inside the
// configuration. Shell vertices outside R keep their colors; allowance(v)
// says how much same-color defect v may take on inside the configuration
// (0 = worst case, budget assumed spent outside). Equalities force shell
// pairs to share a color, modeling identification arguments.
struct Configuration {
    std::string name;
    std::string anchor; // claim-registry id, e.g. "L2.3(2)"
    std::string note;   // what the structure is, in graph terms
    AbstractGraph graph;
    std::vector<int> core;
    std::vector<int> recolorable;
    std::vector<int> allowance; // size n; read for shell-fixed vertices
    std::vector<std::pair<int, int>> equalities;
    ColorSpec spec;

    std::vector<int> shell() const;
    std::vector<int> shell_fixed() const; // shell minus recolorable
    void check(bool enforce_size = true) const;
};

struct ReducibilityReport {
    std::string name;
    bool ok = true;
    // colors for the fixed shell (0 elsewhere); the least failing precoloring
    std::optional<std::vector<int>> witness;
    long precolorings_tried = 0; // precolorings passing equalities + validity
    long extendable = 0;         // of those, how many admit an extension
};

// For every admissible coloring of the fixed shell, search for colors on
// recolorable + core vertices making the whole configuration valid, with
// fixed-shell defects capped by min(allowance, cap).
ReducibilityReport verify_local_extendability(const Configuration& cfg);

// true iff this exact fixed-shell coloring admits no extension
bool recheck_witness(const Configuration& cfg, const std::vector<int>& witness);

// The built-in catalog. Every entry verifies ok; each carries its claim id.
std::vector<Configuration> catalog();
Configuration catalog_entry(const std::string& name);
// Deliberate negative control: the triangle entry degraded to (3,3,3) with
// all allowances zeroed. Fails with a concrete witness.
Configuration falsified_333_variant();

// Occurrences of the catalog's forbidden structures in a rooted graph.
std::vector<PatternHit> scan_graph(const RootedPlaneGraph& g, const RoleTags& roles);
inline std::vector<PatternHit> scan_graph(const RootedPlaneGraph& g) {
    return scan_graph(g, classify_roles(g));
}

// one human-readable block per entry; parse(write(c)) == c field for field
std::string write_configuration(const Configuration& cfg);
std::string write_catalog(const std::vector<Configuration>& cfgs);
std::vector<Configuration> parse_catalog(const std::string& text);

} // namespace pg
