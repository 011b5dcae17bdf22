#pragma once

#include "pg/rational.hpp"
#include "pg/rooted.hpp"

#include <string>
#include <vector>

namespace pg {

// Role classification over a rooted graph. Vertex roles apply to interior
// vertices; weak/strong is a property of a 3-vertex relative to an incident
// triangle (stored per face so graphs outside the family stay well defined).
struct RoleTags {
    std::vector<char> on_c0;
    std::vector<char> bad4;  // interior 4-vertex on a (3,4,4)-face in F3
    std::vector<char> bad5;  // defined but unused by every rule; reported only
    std::vector<char> weak3, strong3;
    std::vector<char> weak5, weak6;
    std::vector<char> poor, rich; // interior vertices only
    std::vector<std::vector<int>> q4; // interior 5+ vertex -> poor 4-neighbors
                                      // on (3,4,4,4)-faces from F4

    std::vector<char> bad_face;   // (3,4,5+)-face in F3 whose 4-vertex is bad
    std::vector<char> light, superlight;
    std::vector<std::vector<int>> pendant_owners; // face -> 4+ vertices it hangs off
    std::vector<std::vector<int>> pendant_faces;  // vertex -> pendant 3-faces in F3

    bool vertex_weak(int v) const { return weak5[v] || weak6[v]; }
    // weak/strong of 3-vertex v relative to triangle f
    bool weak_on(const RootedPlaneGraph& g, int v, int f) const;
};

RoleTags classify_roles(const RootedPlaneGraph& g);

struct Element {
    enum Kind { Vertex, Face } kind;
    int index;

    friend bool operator==(const Element&, const Element&) = default;
};

struct Transfer {
    Element from, to;
    Rational amount;
    std::string rule; // R1.1, R1.2, R2a..R2d, R2.2, R2.3, R3, R4, R5
};

struct ChargeLedger {
    std::vector<Rational> vertex_initial, vertex_final;
    std::vector<Rational> face_initial, face_final;
    std::vector<Transfer> transfers;
    std::vector<std::string> ambiguities; // situations the argument excludes
    int outer_face = -1;

    Rational total_initial() const;
    Rational total_final() const;
    Rational final_of(const Element& e) const {
        return e.kind == Element::Vertex ? vertex_final[e.index] : face_final[e.index];
    }
};

// mu(v) = 2 d(v) - 6, mu(f) = d(f) - 6, mu(C0) = d(C0) + 6
ChargeLedger initial_charges(const RootedPlaneGraph& g);

ChargeLedger apply_rules(const RootedPlaneGraph& g);
ChargeLedger apply_rules(const RootedPlaneGraph& g, const RoleTags& roles);

// an occurrence of a catalog pattern, from configurations::scan_graph
struct PatternHit {
    std::string name;
    std::vector<int> vertices;
    std::string detail;
};

struct NegativeElement {
    Element element;
    Rational final_charge;
    std::vector<PatternHit> nearby; // hits sharing a vertex with the element
};

struct FinalReport {
    std::vector<NegativeElement> negatives;
    Rational total_final;
};

FinalReport final_report(const RootedPlaneGraph& g, const ChargeLedger& ledger,
                         const std::vector<PatternHit>& hits);

// stable, diff-friendly serializations
std::string ledger_text(const RootedPlaneGraph& g, const ChargeLedger& ledger);
std::string ledger_kv(const RootedPlaneGraph& g, const ChargeLedger& ledger);

std::string element_name(const ChargeLedger& ledger, const Element& e);

} // namespace pg
