#pragma once

// Plat-closure planar diagrams of braid words: construction, face
// enumeration, orientation tracing, checkerboard coloring, per-crossing
// incidence/type classification, writhe, connected-sum splice, and the
// PD-code text format.
//
// Crossing geometry.  Each crossing has four half-edge slots in fixed
// counterclockwise order:
//     slot 0 = lower-left, 1 = lower-right, 2 = upper-right, 3 = upper-left.
// A strand entering at slot s leaves at the opposite slot s+2.  The corner
// (c, s) names the quadrant swept counterclockwise from slot s to slot s+1
// (so corner 0 is the south quadrant, 1 east, 2 north, 3 west).

#include <array>
#include <string>
#include <vector>

namespace twobridge {

struct BraidWord;

inline int ccw_slot(int s) { return (s + 1) & 3; }
inline int cw_slot(int s) { return (s + 3) & 3; }
inline int opposite_slot(int s) { return (s + 2) & 3; }

struct EdgeEnd {
    int crossing = -1;
    int slot = -1;
    bool operator==(const EdgeEnd&) const = default;
};

// An edge of the 4-valent diagram graph: a strand segment between two
// crossing passes (possibly the same crossing).
struct Edge {
    EdgeEnd a, b;
};

struct PlanarDiagram {
    int crossing_count = 0;
    // Per crossing: true when the over-strand runs along the rising diagonal
    // (slots 0 and 2); false for the falling diagonal (slots 1 and 3).
    // Positive braid letters put the over-strand on the falling diagonal.
    std::vector<bool> over_rising;
    std::vector<Edge> edges;
    // slot_edge[c][s]: index into `edges` of the edge incident at (c, s).
    std::vector<std::array<int, 4>> slot_edge;
    // Closed strand components that meet no crossing at all.
    int free_loops = 0;

    // Face data: corner_face[c][s] is the face id of corner (c, s).  Face
    // ids are assigned in discovery order over corners scanned
    // lexicographically, so they are deterministic.  For diagrams without
    // crossings face_count is 1 + free_loops by convention.
    std::vector<std::array<int, 4>> corner_face;
    int face_count = 0;

    // A corner known to lie on the unbounded face.
    int exterior_crossing = -1;
    int exterior_slot = -1;
    int exterior_face = -1;

    int edge_at(int c, int s) const { return slot_edge[c][s]; }
};

// Builds the plat closure of a braid word on an even number of strands:
// cups below joining strands (2i-1, 2i), one crossing per letter, caps above
// joining the same pairs.  Faces and the exterior anchor are computed.
PlanarDiagram plat_closure(const BraidWord& word);

struct OrientedDiagram {
    PlanarDiagram d;
    std::vector<bool> forward;   // edge flows from end a to end b
    std::vector<int> trace;      // edge ids in traversal order
    std::vector<int> sign;       // per-crossing sign (+1 / -1)
    long long writhe = 0;
};

// Assigns a single-component traversal direction and computes crossing
// signs: a crossing is +1 when the under-strand's outgoing direction is the
// over-strand's outgoing direction turned a quarter counterclockwise.
// Throws LinkError when the diagram has more than one component.
OrientedDiagram orient(const PlanarDiagram& d);

long long writhe(const OrientedDiagram& o);

struct ColoredDiagram {
    PlanarDiagram d;
    std::vector<bool> black;  // per face
    std::vector<int> whites;  // white face ids, ascending
};

// Checkerboard-colors the faces with the exterior black.  For 0-crossing
// diagrams the single bounded disk is white.
ColoredDiagram checkerboard(const PlanarDiagram& d);

// Incidence numbers: eta(C) = +1 when the quadrant counterclockwise from
// each under-strand slot is white, -1 when it is black.  (The two under
// slots always agree by checkerboard alternation.)  Independent of
// orientation; defined per crossing.
std::vector<int> incidence_numbers(const ColoredDiagram& col);

struct CrossingStats {
    std::vector<int> eta;       // per crossing
    std::vector<bool> type_two; // per crossing: true = type II, false = type I
    long long mu_one = 0;       // sum of eta over type I crossings
    long long mu_two = 0;       // sum of eta over type II crossings
};

// Classifies every crossing: a crossing is type II when the quadrant between
// its two outgoing strand directions is black (over/under ignored), type I
// when that quadrant is white.  Both arguments must be built from the same
// diagram.
CrossingStats crossing_stats(const ColoredDiagram& col, const OrientedDiagram& o);

// Connected sum: cuts the first exterior-adjacent edge (in face-walk order)
// of each diagram and joins the four loose ends respecting orientation.
// Summing with a 0-crossing unknot returns the other diagram unchanged.
PlanarDiagram splice_connected_sum(const OrientedDiagram& o1, const OrientedDiagram& o2);

// PD-code text format: one crossing per line, "Xp a,b,c,d" or "Xm a,b,c,d"
// for positive/negative crossings, listing the incident edge labels
// counterclockwise from the incoming under-strand.  '#' comments and blank
// lines are ignored.
std::string export_pd(const OrientedDiagram& o);

// Parses PD text into a diagram.  Verifies that every label occurs exactly
// twice and that the traced crossing signs match the Xp/Xm tags.  The
// exterior is taken to be the first enumerated face.
PlanarDiagram import_pd(const std::string& text);

}  // namespace twobridge
