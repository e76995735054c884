#include "diagram.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "braid.hpp"
#include "errors.hpp"

namespace twobridge {

namespace {

// ---------------------------------------------------------------------------
// Plat construction: arcs are assembled on a linkage graph whose nodes are
// crossing terminals (degree 1), cup ends, and cap ends (degree 2).  Walking
// terminal-to-terminal through cup/cap nodes yields the diagram edges;
// cup/cap cycles that meet no terminal are free loops.

struct Linkage {
    // links[node] = up to two neighbours, -1 when unset.
    std::vector<std::array<int, 2>> links;
    int terminal_count;

    explicit Linkage(int nodes, int terminals)
        : links(nodes, {-1, -1}), terminal_count(terminals) {}

    void connect(int u, int v) {
        attach(u, v);
        attach(v, u);
    }

    bool is_terminal(int n) const { return n < terminal_count; }

    int other_link(int n, int not_this) const {
        return links[n][0] == not_this ? links[n][1] : links[n][0];
    }

  private:
    void attach(int u, int v) {
        if (links[u][0] == -1) {
            links[u][0] = v;
        } else {
            assert(links[u][1] == -1);
            links[u][1] = v;
        }
    }
};

void build_faces(PlanarDiagram& d) {
    const int v = d.crossing_count;
    if (v == 0) {
        d.corner_face.clear();
        d.face_count = 1 + d.free_loops;
        d.exterior_crossing = -1;
        d.exterior_slot = -1;
        d.exterior_face = 0;
        return;
    }
    d.corner_face.assign(v, {-1, -1, -1, -1});
    int next_face = 0;
    for (int c = 0; c < v; ++c) {
        for (int s = 0; s < 4; ++s) {
            if (d.corner_face[c][s] != -1) continue;
            int cc = c, ss = s;
            do {
                d.corner_face[cc][ss] = next_face;
                const Edge& e = d.edges[d.slot_edge[cc][ccw_slot(ss)]];
                EdgeEnd from{cc, ccw_slot(ss)};
                EdgeEnd to = (e.a == from) ? e.b : e.a;
                cc = to.crossing;
                ss = to.slot;
            } while (cc != c || ss != s);
            ++next_face;
        }
    }
    d.face_count = next_face;
    assert(d.exterior_crossing >= 0);
    d.exterior_face = d.corner_face[d.exterior_crossing][d.exterior_slot];
}

// Rebuilds slot_edge from the edge list.
void index_slots(PlanarDiagram& d) {
    d.slot_edge.assign(d.crossing_count, {-1, -1, -1, -1});
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
        for (const EdgeEnd* end : {&d.edges[e].a, &d.edges[e].b}) {
            if (d.slot_edge[end->crossing][end->slot] != -1)
                throw std::invalid_argument("diagram slot used twice");
            d.slot_edge[end->crossing][end->slot] = e;
        }
    }
    for (int c = 0; c < d.crossing_count; ++c)
        for (int s = 0; s < 4; ++s)
            if (d.slot_edge[c][s] == -1)
                throw std::invalid_argument("diagram slot left open");
}

// True when the edge at (c, s) carries flow away from that end.
bool is_out_slot(const OrientedDiagram& o, int c, int s) {
    int e = o.d.slot_edge[c][s];
    const Edge& edge = o.d.edges[e];
    EdgeEnd here{c, s};
    if (edge.a == here && edge.b == here) {
        // Degenerate self-edge occupying one slot twice cannot occur: slots
        // are distinct by construction.
        assert(false);
    }
    return (edge.a == here) == o.forward[e];
}

// The outgoing slot on the given diagonal (slots d0 and d0+2).
int out_on_diagonal(const OrientedDiagram& o, int c, int d0) {
    bool lo = is_out_slot(o, c, d0);
    bool hi = is_out_slot(o, c, d0 + 2);
    if (lo == hi) throw IdentityError("crossing is not two-in two-out");
    return lo ? d0 : d0 + 2;
}

}  // namespace

PlanarDiagram plat_closure(const BraidWord& word) {
    const int strands = word.strand_count;
    if (strands < 2 || strands % 2 != 0)
        throw std::invalid_argument("plat closure needs an even strand count >= 2");
    for (const BraidLetter& l : word.letters) {
        if (l.generator_index < 1 || l.generator_index >= strands)
            throw std::invalid_argument("braid letter index out of range");
        if (l.exponent_sign != 1 && l.exponent_sign != -1)
            throw std::invalid_argument("braid letter sign must be +1 or -1");
    }

    const int v = static_cast<int>(word.letters.size());
    const int pairs = strands / 2;

    // Node ids: terminals first, then cup ends, then cap ends.
    const int term_base = 0;
    const int cup_base = 4 * v;
    const int cap_base = cup_base + 2 * pairs;
    const int node_count = cap_base + 2 * pairs;
    auto term = [&](int c, int s) { return term_base + 4 * c + s; };
    auto cup_end = [&](int i, int side) { return cup_base + 2 * i + side; };
    auto cap_end = [&](int i, int side) { return cap_base + 2 * i + side; };

    Linkage lk(node_count, 4 * v);
    for (int i = 0; i < pairs; ++i) {
        lk.connect(cup_end(i, 0), cup_end(i, 1));
        lk.connect(cap_end(i, 0), cap_end(i, 1));
    }

    // dangling[col] for 1-based columns: the node waiting to be joined.
    std::vector<int> dangling(strands + 1, -1);
    for (int i = 0; i < pairs; ++i) {
        dangling[2 * i + 1] = cup_end(i, 0);
        dangling[2 * i + 2] = cup_end(i, 1);
    }
    for (int c = 0; c < v; ++c) {
        int j = word.letters[c].generator_index;
        lk.connect(dangling[j], term(c, 0));
        lk.connect(dangling[j + 1], term(c, 1));
        dangling[j] = term(c, 3);
        dangling[j + 1] = term(c, 2);
    }
    for (int i = 0; i < pairs; ++i) {
        lk.connect(dangling[2 * i + 1], cap_end(i, 0));
        lk.connect(dangling[2 * i + 2], cap_end(i, 1));
    }

    PlanarDiagram d;
    d.crossing_count = v;
    d.over_rising.resize(v);
    for (int c = 0; c < v; ++c) d.over_rising[c] = (word.letters[c].exponent_sign < 0);

    // Collect edges by walking terminal-to-terminal.
    std::vector<bool> seen(node_count, false);
    d.slot_edge.assign(v, {-1, -1, -1, -1});
    for (int t = 0; t < 4 * v; ++t) {
        if (seen[t]) continue;
        seen[t] = true;
        int prev = t;
        int cur = lk.links[t][0];
        while (!lk.is_terminal(cur)) {
            seen[cur] = true;
            int nxt = lk.other_link(cur, prev);
            prev = cur;
            cur = nxt;
        }
        seen[cur] = true;
        Edge e;
        e.a = {t / 4, t % 4};
        e.b = {cur / 4, cur % 4};
        int id = static_cast<int>(d.edges.size());
        d.edges.push_back(e);
        d.slot_edge[e.a.crossing][e.a.slot] = id;
        d.slot_edge[e.b.crossing][e.b.slot] = id;
    }

    // Remaining cup/cap cycles are closed strands free of crossings.
    d.free_loops = 0;
    for (int n = cup_base; n < node_count; ++n) {
        if (seen[n]) continue;
        ++d.free_loops;
        int prev = n;
        int cur = lk.links[n][0];
        seen[n] = true;
        while (cur != n) {
            seen[cur] = true;
            int nxt = lk.other_link(cur, prev);
            prev = cur;
            cur = nxt;
        }
    }

    // Exterior anchor: from the leftmost cup that reaches a crossing, walk
    // through the cup and up its right column to the first crossing; the
    // corner counterclockwise of the arrival slot opens into the unbounded
    // region below the cups.
    if (v > 0) {
        bool found = false;
        for (int i = 0; i < pairs && !found; ++i) {
            int prev = cup_end(i, 0);
            int cur = lk.links[prev][0] == cup_end(i, 1) ? cup_end(i, 1)
                                                         : lk.links[prev][1];
            assert(cur == cup_end(i, 1));
            while (true) {
                int nxt = lk.other_link(cur, prev);
                prev = cur;
                cur = nxt;
                if (cur == cup_end(i, 0)) break;  // free loop, try next cup
                if (lk.is_terminal(cur)) {
                    d.exterior_crossing = cur / 4;
                    d.exterior_slot = cur % 4;
                    assert(d.exterior_slot == 0 || d.exterior_slot == 1);
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw IdentityError("crossings present but no cup reaches one");
    }

    build_faces(d);
    return d;
}

OrientedDiagram orient(const PlanarDiagram& d) {
    OrientedDiagram o;
    o.d = d;
    if (d.crossing_count == 0) {
        if (d.free_loops != 1)
            throw LinkError("diagram has " + std::to_string(d.free_loops) +
                            " components; expected a knot");
        return o;
    }

    const int edge_count = static_cast<int>(d.edges.size());
    o.forward.assign(edge_count, false);
    std::vector<bool> visited(edge_count, false);

    // Trace the component through edge 0, leaving the end listed first.
    int e = d.slot_edge[0][0];
    EdgeEnd start_leave{0, 0};
    EdgeEnd leave = start_leave;
    while (true) {
        const Edge& edge = d.edges[e];
        if (visited[e]) throw IdentityError("orientation trace revisited an edge");
        visited[e] = true;
        o.trace.push_back(e);
        o.forward[e] = (edge.a == leave);
        EdgeEnd arrive = o.forward[e] ? edge.b : edge.a;
        leave = {arrive.crossing, opposite_slot(arrive.slot)};
        e = d.slot_edge[leave.crossing][leave.slot];
        if (leave == start_leave) break;
    }

    int untraced = static_cast<int>(std::count(visited.begin(), visited.end(), false));
    if (untraced > 0 || d.free_loops > 0) {
        // Count the remaining strand components for the error message.
        int components = 1 + d.free_loops;
        for (int e2 = 0; e2 < edge_count; ++e2) {
            if (visited[e2]) continue;
            ++components;
            int cur = e2;
            EdgeEnd lv = d.edges[cur].a;
            while (true) {
                visited[cur] = true;
                EdgeEnd arrive = (d.edges[cur].a == lv) ? d.edges[cur].b : d.edges[cur].a;
                lv = {arrive.crossing, opposite_slot(arrive.slot)};
                cur = d.slot_edge[lv.crossing][lv.slot];
                if (visited[cur]) break;
            }
        }
        throw LinkError("diagram has " + std::to_string(components) +
                        " components; expected a knot");
    }

    // Crossing signs: +1 when the under-strand exits one quarter turn
    // counterclockwise from the over-strand's exit.
    o.sign.resize(d.crossing_count);
    o.writhe = 0;
    for (int c = 0; c < d.crossing_count; ++c) {
        int over0 = d.over_rising[c] ? 0 : 1;
        int under0 = d.over_rising[c] ? 1 : 0;
        int over_out = out_on_diagonal(o, c, over0);
        int under_out = out_on_diagonal(o, c, under0);
        if (under_out == ccw_slot(over_out)) {
            o.sign[c] = 1;
        } else {
            assert(under_out == cw_slot(over_out));
            o.sign[c] = -1;
        }
        o.writhe += o.sign[c];
    }
    return o;
}

long long writhe(const OrientedDiagram& o) { return o.writhe; }

ColoredDiagram checkerboard(const PlanarDiagram& d) {
    ColoredDiagram col;
    col.d = d;
    col.black.assign(d.face_count, false);
    if (d.crossing_count == 0) {
        // Exterior black, each bounded loop disk white.
        col.black[0] = true;
        for (int f = 1; f < d.face_count; ++f) col.whites.push_back(f);
        return col;
    }

    std::vector<int> color(d.face_count, -1);  // 0 = black, 1 = white
    std::vector<int> queue{d.exterior_face};
    color[d.exterior_face] = 0;
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (const Edge& e : d.edges) {
            int fa = d.corner_face[e.a.crossing][e.a.slot];
            int fb = d.corner_face[e.b.crossing][e.b.slot];
            if (fa != f && fb != f) continue;
            int g = (fa == f) ? fb : fa;
            if (color[g] == -1) {
                color[g] = 1 - color[f];
                queue.push_back(g);
            } else if (color[g] == color[f]) {
                throw ConventionError("faces are not two-colorable");
            }
        }
    }
    for (int f = 0; f < d.face_count; ++f) {
        if (color[f] == -1) throw ConventionError("face coloring did not reach every face");
        col.black[f] = (color[f] == 0);
        if (color[f] == 1) col.whites.push_back(f);
    }
    return col;
}

std::vector<int> incidence_numbers(const ColoredDiagram& col) {
    const PlanarDiagram& d = col.d;
    std::vector<int> eta(d.crossing_count);
    for (int c = 0; c < d.crossing_count; ++c) {
        int u = col.d.over_rising[c] ? 1 : 0;  // under diagonal: u and u+2
        bool white_lo = !col.black[d.corner_face[c][u]];
        bool white_hi = !col.black[d.corner_face[c][u + 2]];
        if (white_lo != white_hi)
            throw ConventionError("under-strand quadrants disagree in color");
        eta[c] = white_lo ? 1 : -1;
    }
    return eta;
}

CrossingStats crossing_stats(const ColoredDiagram& col, const OrientedDiagram& o) {
    if (col.d.crossing_count != o.d.crossing_count)
        throw std::invalid_argument("colored and oriented diagrams disagree");
    CrossingStats st;
    st.eta = incidence_numbers(col);
    st.type_two.resize(col.d.crossing_count);
    for (int c = 0; c < col.d.crossing_count; ++c) {
        int over0 = col.d.over_rising[c] ? 0 : 1;
        int under0 = col.d.over_rising[c] ? 1 : 0;
        int out_a = out_on_diagonal(o, c, over0);
        int out_b = out_on_diagonal(o, c, under0);
        // The two exits are adjacent; the exit cone is the corner between
        // them in counterclockwise order.
        int cone;
        if (ccw_slot(out_a) == out_b) {
            cone = out_a;
        } else {
            assert(ccw_slot(out_b) == out_a);
            cone = out_b;
        }
        bool two = col.black[col.d.corner_face[c][cone]];
        st.type_two[c] = two;
        (two ? st.mu_two : st.mu_one) += st.eta[c];
        // Per-crossing form of the writhe decomposition: the crossing sign
        // equals eta on type II crossings and -eta on type I crossings.
        if (o.sign[c] != (two ? st.eta[c] : -st.eta[c]))
            throw ConventionError("crossing sign disagrees with type/incidence");
    }
    return st;
}

PlanarDiagram splice_connected_sum(const OrientedDiagram& o1, const OrientedDiagram& o2) {
    if (o1.d.crossing_count == 0) return o2.d;
    if (o2.d.crossing_count == 0) return o1.d;
    assert(o1.d.free_loops == 0 && o2.d.free_loops == 0);

    auto cut_edge = [](const OrientedDiagram& o) {
        int c = o.d.exterior_crossing, s = o.d.exterior_slot;
        return o.d.slot_edge[c][ccw_slot(s)];
    };
    int e1 = cut_edge(o1), e2 = cut_edge(o2);
    EdgeEnd t1 = o1.forward[e1] ? o1.d.edges[e1].a : o1.d.edges[e1].b;
    EdgeEnd h1 = o1.forward[e1] ? o1.d.edges[e1].b : o1.d.edges[e1].a;
    EdgeEnd t2 = o2.forward[e2] ? o2.d.edges[e2].a : o2.d.edges[e2].b;
    EdgeEnd h2 = o2.forward[e2] ? o2.d.edges[e2].b : o2.d.edges[e2].a;

    const int v1 = o1.d.crossing_count;
    auto shift = [&](EdgeEnd end) { return EdgeEnd{end.crossing + v1, end.slot}; };

    PlanarDiagram d;
    d.crossing_count = v1 + o2.d.crossing_count;
    d.over_rising = o1.d.over_rising;
    d.over_rising.insert(d.over_rising.end(), o2.d.over_rising.begin(),
                         o2.d.over_rising.end());
    for (int e = 0; e < static_cast<int>(o1.d.edges.size()); ++e)
        if (e != e1) d.edges.push_back(o1.d.edges[e]);
    for (int e = 0; e < static_cast<int>(o2.d.edges.size()); ++e)
        if (e != e2) d.edges.push_back({shift(o2.d.edges[e].a), shift(o2.d.edges[e].b)});
    // Cross-join so flow enters each head exactly as before the cut.
    d.edges.push_back({t1, shift(h2)});
    d.edges.push_back({shift(t2), h1});
    d.free_loops = 0;
    index_slots(d);
    d.exterior_crossing = o1.d.exterior_crossing;
    d.exterior_slot = o1.d.exterior_slot;
    build_faces(d);
    return d;
}

std::string export_pd(const OrientedDiagram& o) {
    std::ostringstream out;
    if (o.d.crossing_count == 0) {
        out << "# empty diagram: one crossing-free loop\n";
        return out.str();
    }
    std::vector<int> label(o.d.edges.size(), 0);
    for (int i = 0; i < static_cast<int>(o.trace.size()); ++i)
        label[o.trace[i]] = i + 1;
    for (int c = 0; c < o.d.crossing_count; ++c) {
        int under0 = o.d.over_rising[c] ? 1 : 0;
        int u_in = is_out_slot(o, c, under0) ? under0 + 2 : under0;
        out << (o.sign[c] > 0 ? "Xp" : "Xm");
        for (int k = 0; k < 4; ++k) {
            int s = (u_in + k) & 3;
            out << (k == 0 ? " " : ",") << label[o.d.slot_edge[c][s]];
        }
        out << "\n";
    }
    return out.str();
}

PlanarDiagram import_pd(const std::string& text) {
    struct Line {
        int sign;
        std::array<long long, 4> labels;
    };
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = raw.substr(0, raw.find('#'));
        size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = s.find_last_not_of(" \t\r");
        s = s.substr(b, e - b + 1);
        std::string where = " (line " + std::to_string(lineno) + ")";
        size_t sp = s.find_first_of(" \t");
        if (sp == std::string::npos)
            throw ParseError("PD line needs a tag and four labels" + where);
        std::string tag = s.substr(0, sp);
        int sign;
        if (tag == "Xp") sign = 1;
        else if (tag == "Xm") sign = -1;
        else throw ParseError("unknown PD tag '" + tag + "'" + where);
        std::string rest = s.substr(sp);
        std::array<long long, 4> labels{};
        int got = 0;
        size_t pos = 0;
        while (pos < rest.size()) {
            while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == '\t' || rest[pos] == ','))
                ++pos;
            if (pos >= rest.size()) break;
            if (got == 4) throw ParseError("PD line has more than four labels" + where);
            long long val = 0;
            auto [p, ec] = std::from_chars(rest.data() + pos, rest.data() + rest.size(), val);
            if (ec != std::errc() || val <= 0)
                throw ParseError("PD labels must be positive integers" + where);
            labels[got++] = val;
            pos = p - rest.data();
        }
        if (got != 4) throw ParseError("PD line needs exactly four labels" + where);
        lines.push_back({sign, labels});
    }
    if (lines.empty()) throw ParseError("PD text contains no crossings");

    PlanarDiagram d;
    d.crossing_count = static_cast<int>(lines.size());
    // The format lists slots counterclockwise from the incoming under-strand,
    // so the under diagonal is slots 0 and 2 and the over-strand occupies the
    // falling diagonal, slots 1 and 3.
    d.over_rising.assign(d.crossing_count, false);

    std::map<long long, std::vector<EdgeEnd>> occurrences;
    for (int c = 0; c < d.crossing_count; ++c)
        for (int s = 0; s < 4; ++s)
            occurrences[lines[c].labels[s]].push_back({c, s});
    for (const auto& [lab, ends] : occurrences) {
        if (ends.size() != 2)
            throw ParseError("edge label " + std::to_string(lab) + " occurs " +
                             std::to_string(ends.size()) + " times; expected 2");
        d.edges.push_back({ends[0], ends[1]});
    }
    d.free_loops = 0;
    index_slots(d);
    // Exterior: the face of the first corner scanned, i.e. face 0.
    d.exterior_crossing = 0;
    d.exterior_slot = 0;
    build_faces(d);
    assert(d.exterior_face == 0);

    // Verify the declared signs against the traced orientation.  A diagram
    // that fails to orient as a knot propagates LinkError to the caller.
    OrientedDiagram o = orient(d);
    for (int c = 0; c < d.crossing_count; ++c) {
        if (o.sign[c] != lines[c].sign)
            throw ParseError("crossing " + std::to_string(c + 1) +
                             ": declared sign disagrees with the diagram");
    }
    return d;
}

}  // namespace twobridge
