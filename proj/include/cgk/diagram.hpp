#ifndef CGK_DIAGRAM_HPP
#define CGK_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgk/graph.hpp"

namespace cgk {

struct invalid_diagram : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unordered edge {u, v} of K_n, stored with u < v.
struct Edge {
    int u = 0, v = 0;
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Dense index of edge {u,v} (u < v) among the C(n,2) edges of K_n,
// row-major over u.
inline int edge_index(const Edge& e, int n) {
    if (e.u < 1 || e.v > n || e.u >= e.v) throw std::invalid_argument("edge_index: bad edge");
    return (e.u - 1) * n - (e.u - 1) * e.u / 2 + (e.v - e.u - 1);
}

inline Edge edge_of_index(int idx, int n) {
    for (int u = 1; u < n; ++u) {
        int row = n - u;
        if (idx < row) return Edge{u, u + 1 + idx};
        idx -= row;
    }
    throw std::invalid_argument("edge_of_index: index out of range");
}

enum class Role : std::uint8_t { over, under };

inline char role_char(Role r) { return r == Role::over ? 'O' : 'U'; }

// One pass of an edge through a crossing.
struct Passage {
    int crossing = -1;
    Role role = Role::over;
    bool operator==(const Passage&) const = default;
};

// Signed crossing between two edges; the sign is taken with respect to the
// low->high reference orientation of each edge.
struct Crossing {
    Edge over_edge, under_edge;
    int sign = 0; // +1 or -1
    bool operator==(const Crossing&) const = default;
};

// Construction provenance carried through serialization.
struct Provenance {
    std::string builder;
    std::vector<std::pair<std::string, std::string>> params;
    bool operator==(const Provenance&) const = default;

    void add(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
};

// Combinatorial diagram of a spatial K_n: per-edge ordered crossing
// traversals (from the smaller to the larger endpoint) plus the global
// signed crossing table. Immutable by convention once built.
struct Diagram {
    int n = 0;
    std::vector<std::vector<Passage>> walks; // indexed by edge_index, size C(n,2)
    std::vector<Crossing> crossings;         // crossing id = position
    Provenance meta;

    const std::vector<Passage>& walk(const Edge& e) const { return walks[edge_index(e, n)]; }
    std::vector<Passage>& walk(const Edge& e) { return walks[edge_index(e, n)]; }

    bool operator==(const Diagram&) const = default;
};

inline Diagram empty_diagram(int n) {
    if (n < 3) throw std::invalid_argument("Diagram: need n >= 3");
    Diagram d;
    d.n = n;
    d.walks.resize(static_cast<size_t>(n) * (n - 1) / 2);
    return d;
}

// ---- validation ----

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

inline ValidationReport validate(const Diagram& d) {
    ValidationReport rep;
    auto err = [&](std::string m) { rep.errors.push_back(std::move(m)); };

    if (d.n < 3) {
        err("vertex count must be >= 3");
        return rep;
    }
    const size_t ecount = static_cast<size_t>(d.n) * (d.n - 1) / 2;
    if (d.walks.size() != ecount) {
        err("walk table has " + std::to_string(d.walks.size()) + " edges, expected " + std::to_string(ecount));
        return rep;
    }

    auto edge_ok = [&](const Edge& e) { return e.u >= 1 && e.u < e.v && e.v <= d.n; };

    const int ncross = static_cast<int>(d.crossings.size());
    std::vector<int> over_seen(ncross, 0), under_seen(ncross, 0);

    for (int c = 0; c < ncross; ++c) {
        const Crossing& x = d.crossings[c];
        if (x.sign != 1 && x.sign != -1)
            err("crossing " + std::to_string(c) + ": sign must be +1 or -1");
        if (!edge_ok(x.over_edge) || !edge_ok(x.under_edge)) {
            err("crossing " + std::to_string(c) + ": dangling edge reference");
            continue;
        }
        if (x.over_edge == x.under_edge)
            rep.warnings.push_back("crossing " + std::to_string(c) + ": self-crossing of edge {" +
                                   std::to_string(x.over_edge.u) + "," + std::to_string(x.over_edge.v) + "}");
    }

    for (size_t ei = 0; ei < d.walks.size(); ++ei) {
        const Edge e = edge_of_index(static_cast<int>(ei), d.n);
        for (const Passage& p : d.walks[ei]) {
            if (p.crossing < 0 || p.crossing >= ncross) {
                err("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}: passage references unknown crossing " +
                    std::to_string(p.crossing));
                continue;
            }
            const Crossing& x = d.crossings[p.crossing];
            const Edge& want = (p.role == Role::over) ? x.over_edge : x.under_edge;
            if (want != e) {
                err("crossing " + std::to_string(p.crossing) + ": " +
                    std::string(p.role == Role::over ? "over" : "under") + " passage on wrong edge {" +
                    std::to_string(e.u) + "," + std::to_string(e.v) + "}");
                continue;
            }
            int& seen = (p.role == Role::over) ? over_seen[p.crossing] : under_seen[p.crossing];
            ++seen;
        }
    }

    for (int c = 0; c < ncross; ++c) {
        if (over_seen[c] != 1 || under_seen[c] != 1)
            err("unpaired crossing " + std::to_string(c) + ": over passages=" + std::to_string(over_seen[c]) +
                ", under passages=" + std::to_string(under_seen[c]) + " (want 1 and 1)");
    }
    return rep;
}

// ---- sub-diagram extraction ----

// One crossing passage along an extracted closed traversal. The sign is the
// crossing sign adjusted to the traversal orientation; it is identical at
// both passages of the same crossing.
struct KnotPassage {
    int crossing = -1;
    Role role = Role::over;
    int sign = 0;
    bool operator==(const KnotPassage&) const = default;
};

// Oriented Gauss-style sequence of one extracted knot.
struct KnotDiagram {
    std::vector<KnotPassage> passages; // cyclic order
    size_t crossing_count() const { return passages.size() / 2; }
};

// Two-component extraction; inter-component crossings appear once in each
// component list.
struct LinkDiagram {
    std::array<std::vector<KnotPassage>, 2> components;
    std::vector<int> inter_ids;
    std::vector<int> inter_signs; // adjusted, parallel to inter_ids
};

namespace detail {

struct CycleEdges {
    std::vector<int> edge_idx;  // traversal order
    std::vector<int> direction; // +1 low->high, -1 otherwise
};

inline CycleEdges cycle_edges(const Diagram& d, std::span<const int> traversal) {
    if (traversal.size() < 3) throw std::invalid_argument("cycle must have >= 3 vertices");
    for (size_t i = 0; i < traversal.size(); ++i) {
        if (traversal[i] < 1 || traversal[i] > d.n)
            throw std::invalid_argument("cycle vertex " + std::to_string(traversal[i]) + " not in diagram (n=" +
                                        std::to_string(d.n) + ")");
        for (size_t j = i + 1; j < traversal.size(); ++j)
            if (traversal[i] == traversal[j]) throw std::invalid_argument("cycle vertices must be distinct");
    }
    CycleEdges ce;
    for (size_t i = 0; i < traversal.size(); ++i) {
        int a = traversal[i], b = traversal[(i + 1) % traversal.size()];
        ce.edge_idx.push_back(edge_index(make_edge(a, b), d.n));
        ce.direction.push_back(a < b ? +1 : -1);
    }
    return ce;
}

} // namespace detail

// Extract the knot diagram of the closed traversal `cycle`: keeps exactly the
// crossings both of whose edges lie on the cycle; signs flipped once per edge
// traversed against its low->high reference orientation.
inline KnotDiagram extract_knot(const Diagram& d, std::span<const int> cycle) {
    auto ce = detail::cycle_edges(d, cycle);
    std::vector<int> dir_of_edge(d.walks.size(), 0);
    for (size_t i = 0; i < ce.edge_idx.size(); ++i) dir_of_edge[ce.edge_idx[i]] = ce.direction[i];

    KnotDiagram k;
    for (size_t i = 0; i < ce.edge_idx.size(); ++i) {
        const auto& w = d.walks[ce.edge_idx[i]];
        auto handle = [&](const Passage& p) {
            const Crossing& x = d.crossings[p.crossing];
            int od = dir_of_edge[edge_index(x.over_edge, d.n)];
            int ud = dir_of_edge[edge_index(x.under_edge, d.n)];
            if (od == 0 || ud == 0) return; // other edge not on the cycle
            k.passages.push_back(KnotPassage{p.crossing, p.role, x.sign * od * ud});
        };
        if (ce.direction[i] > 0)
            for (const Passage& p : w) handle(p);
        else
            for (auto it = w.rbegin(); it != w.rend(); ++it) handle(*it);
    }
    return k;
}

inline KnotDiagram extract_knot(const Diagram& d, const Cycle& c) { return extract_knot(d, std::span<const int>(c.vertices)); }

inline LinkDiagram extract_link(const Diagram& d, std::span<const int> first, std::span<const int> second) {
    for (int u : first)
        for (int v : second)
            if (u == v) throw std::invalid_argument("link components must be vertex-disjoint");
    auto ce1 = detail::cycle_edges(d, first);
    auto ce2 = detail::cycle_edges(d, second);

    // component + direction per edge: 0 = not present
    std::vector<int> dir_of_edge(d.walks.size(), 0);
    std::vector<int> comp_of_edge(d.walks.size(), -1);
    for (size_t i = 0; i < ce1.edge_idx.size(); ++i) {
        dir_of_edge[ce1.edge_idx[i]] = ce1.direction[i];
        comp_of_edge[ce1.edge_idx[i]] = 0;
    }
    for (size_t i = 0; i < ce2.edge_idx.size(); ++i) {
        dir_of_edge[ce2.edge_idx[i]] = ce2.direction[i];
        comp_of_edge[ce2.edge_idx[i]] = 1;
    }

    LinkDiagram l;
    auto emit_component = [&](const detail::CycleEdges& ce, int comp) {
        for (size_t i = 0; i < ce.edge_idx.size(); ++i) {
            const auto& w = d.walks[ce.edge_idx[i]];
            auto handle = [&](const Passage& p) {
                const Crossing& x = d.crossings[p.crossing];
                int oi = edge_index(x.over_edge, d.n), ui = edge_index(x.under_edge, d.n);
                if (comp_of_edge[oi] < 0 || comp_of_edge[ui] < 0) return;
                int sign = x.sign * dir_of_edge[oi] * dir_of_edge[ui];
                l.components[comp].push_back(KnotPassage{p.crossing, p.role, sign});
                // an inter crossing has exactly one passage on component 0
                if (comp == 0 && comp_of_edge[oi] != comp_of_edge[ui]) {
                    l.inter_ids.push_back(p.crossing);
                    l.inter_signs.push_back(sign);
                }
            };
            if (ce.direction[i] > 0)
                for (const Passage& p : w) handle(p);
            else
                for (auto it = w.rbegin(); it != w.rend(); ++it) handle(*it);
        }
    };
    emit_component(ce1, 0);
    emit_component(ce2, 1);
    return l;
}

inline LinkDiagram extract_link(const Diagram& d, const CyclePair& pair) {
    return extract_link(d, std::span<const int>(pair.first.vertices), std::span<const int>(pair.second.vertices));
}

} // namespace cgk

#endif
