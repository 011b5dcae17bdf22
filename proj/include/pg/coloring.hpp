#pragma once

#include "pg/plane_graph.hpp"
#include "pg/rooted.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pg {

// Defect caps (c1,...,ck): color class i may induce maximum degree c_i.
struct ColorSpec {
    std::vector<int> caps;

    int k() const { return static_cast<int>(caps.size()); }
    int cap(int color) const { return caps[color - 1]; } // colors are 1..k
    static ColorSpec parse(const std::string& text);     // "1,1,0"
    std::string str() const;
};

// Partial or total assignment; 0 means uncolored. Colors run 1..k.
struct Coloring {
    std::vector<int> color;

    explicit Coloring(int n = 0) : color(n, 0) {}
    bool colored(int v) const { return color[v] != 0; }
    bool total() const;
};

struct ColorViolation {
    int vertex;
    int defect;
    int cap;
};

struct ValidationResult {
    std::optional<ColorViolation> violation;
    bool valid() const { return !violation.has_value(); }
};

// First violation in vertex order; defects count colored neighbors only.
// Throws when a color is out of range, or when `total` and a vertex is bare.
ValidationResult validate(const AbstractGraph& g, const ColorSpec& spec, const Coloring& c,
                          bool total);

// Lexicographically least valid total extension of `fixed` (vertex order,
// colors 1<...<k), or nullopt. Complete chronological backtracking.
// `forbidden[v]` is a bitmask of colors vertex v must avoid (bit c-1).
std::optional<Coloring> solve(const AbstractGraph& g, const ColorSpec& spec, const Coloring& fixed,
                              const std::vector<unsigned>& forbidden = {});

inline std::optional<Coloring> solve(const AbstractGraph& g, const ColorSpec& spec) {
    return solve(g, spec, Coloring(g.n));
}

class InvalidPrecoloring : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Extends a valid coloring of C0 to the whole rooted graph so that every
// vertex off C0 takes a color different from each of its C0 neighbors.
// `c0_coloring` assigns colors to exactly the C0 vertices; it must be valid
// on G[C0] alone, else InvalidPrecoloring.
std::optional<Coloring> superextend(const RootedPlaneGraph& g, const ColorSpec& spec,
                                    const Coloring& c0_coloring);

struct SuperextendReport {
    bool ok = true;
    long precolorings_tried = 0;
    std::optional<Coloring> failing_precoloring; // canonically least failure
    bool c0_has_chords = false;
};

class NotInFamily : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class BadC0Length : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumerates every valid (per spec) coloring of G[C0] and superextends each.
// Requires base() in the family and |C0| in {3,7}.
SuperextendReport verify_superextendability(const RootedPlaneGraph& g, const ColorSpec& spec);

} // namespace pg
