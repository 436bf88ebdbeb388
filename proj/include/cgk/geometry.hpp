#ifndef CGK_GEOMETRY_HPP
#define CGK_GEOMETRY_HPP

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgk/diagram.hpp"
#include "cgk/numeric.hpp"

namespace cgk {

struct degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec3r {
    Rat x, y, z;
    bool operator==(const Vec3r&) const = default;
};

// n points in 3-space with exact rational coordinates; index i holds vertex i+1.
struct PointSet {
    std::vector<Vec3r> pts;
    Provenance meta;

    int n() const { return static_cast<int>(pts.size()); }
    const Vec3r& at(int vertex) const { return pts.at(static_cast<size_t>(vertex) - 1); }
};

// Piecewise-linear spatial K_n: vertex positions plus optional interior
// waypoints per edge (listed from the smaller to the larger endpoint).
// Straight-line embeddings have no waypoints.
struct EmbeddedGraph {
    int n = 0;
    std::vector<Vec3r> vertices;            // vertex v at index v-1
    std::vector<std::vector<Vec3r>> bends;  // per edge_index
    Provenance meta;

    const Vec3r& at(int vertex) const { return vertices.at(static_cast<size_t>(vertex) - 1); }

    std::vector<Vec3r> chain(const Edge& e) const {
        std::vector<Vec3r> c;
        c.push_back(at(e.u));
        const auto& b = bends[edge_index(e, n)];
        c.insert(c.end(), b.begin(), b.end());
        c.push_back(at(e.v));
        return c;
    }

    Rat max_abs_coord() const {
        Rat m = 0;
        auto upd = [&](const Vec3r& p) {
            for (const Rat* c : {&p.x, &p.y, &p.z})
                if (abs(*c) > m) m = abs(*c);
        };
        for (const auto& p : vertices) upd(p);
        for (const auto& eb : bends)
            for (const auto& p : eb) upd(p);
        return m;
    }
};

inline EmbeddedGraph embed_points(const PointSet& ps) {
    if (ps.n() < 3) throw std::invalid_argument("embed_points: need n >= 3");
    EmbeddedGraph g;
    g.n = ps.n();
    g.vertices = ps.pts;
    g.bends.resize(static_cast<size_t>(g.n) * (g.n - 1) / 2);
    g.meta = ps.meta;
    return g;
}

enum class Axis { x, y, z };

inline const char* axis_name(Axis a) { return a == Axis::x ? "x" : a == Axis::y ? "y" : "z"; }

namespace detail {

struct Vec2r {
    Rat a, b;
    bool operator==(const Vec2r&) const = default;
};

// Projection along `axis`; the remaining coordinates are taken in the
// right-handed order (z -> (x,y), x -> (y,z), y -> (z,x)), and the dropped
// coordinate is the height.
inline Vec2r project(const Vec3r& p, Axis axis) {
    switch (axis) {
        case Axis::z: return {p.x, p.y};
        case Axis::x: return {p.y, p.z};
        default: return {p.z, p.x};
    }
}

inline const Rat& height(const Vec3r& p, Axis axis) {
    switch (axis) {
        case Axis::z: return p.z;
        case Axis::x: return p.x;
        default: return p.y;
    }
}

inline Rat cross2(const Vec2r& p, const Vec2r& q) { return p.a * q.b - p.b * q.a; }
inline Vec2r sub2(const Vec2r& p, const Vec2r& q) { return {p.a - q.a, p.b - q.b}; }

struct SegIntersection {
    Rat t, u; // parameters along the two segments, in (0,1)
    Vec2r point;
};

// Transverse intersection of open segment interiors, if any. Parallel or
// collinear pairs yield nothing here (handled by the genericity checks).
inline std::optional<SegIntersection> interior_intersection(const Vec2r& A, const Vec2r& B, const Vec2r& C,
                                                            const Vec2r& D) {
    Vec2r r = sub2(B, A), s = sub2(D, C);
    Rat denom = cross2(r, s);
    if (denom == 0) return std::nullopt;
    Vec2r CA = sub2(C, A);
    Rat t = cross2(CA, s) / denom;
    Rat u = cross2(CA, r) / denom;
    if (t <= 0 || t >= 1 || u <= 0 || u >= 1) return std::nullopt;
    Vec2r pt{A.a + t * r.a, A.b + t * r.b};
    return SegIntersection{t, u, pt};
}

inline std::string ename(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

// flattened segment of an embedded graph
struct Seg {
    int edge;          // edge index
    int idx;           // position along the chain
    Vec3r p3, q3;      // 3-space endpoints (chain order)
    Vec2r p, q;        // projections
};

inline std::vector<Seg> flatten(const EmbeddedGraph& g, Axis axis) {
    std::vector<Seg> segs;
    for (int ei = 0; ei < static_cast<int>(g.bends.size()); ++ei) {
        auto c = g.chain(edge_of_index(ei, g.n));
        for (size_t i = 0; i + 1 < c.size(); ++i)
            segs.push_back(Seg{ei, static_cast<int>(i), c[i], c[i + 1], project(c[i], axis), project(c[i + 1], axis)});
    }
    return segs;
}

inline bool share_endpoint_3d(const Seg& s1, const Seg& s2) {
    return s1.p3 == s2.p3 || s1.p3 == s2.q3 || s1.q3 == s2.p3 || s1.q3 == s2.q3;
}

} // namespace detail

struct GenericityResult {
    bool ok = false;
    std::string detail; // violation description, or summary of checks passed

    explicit operator bool() const { return ok; }
};

// Exact general-position certificate for the projected drawing:
// (a) distinct points project apart, (b) no point projects into the open
// interior of a non-incident segment, (c) no collinear overlap of segment
// projections, (d) no three segments concurrent at an interior point,
// (e) distinct heights over every projected crossing.
inline GenericityResult validate_generic(const EmbeddedGraph& g, Axis axis = Axis::z) {
    using namespace detail;
    if (g.n < 3) return {false, "need at least 3 vertices"};

    const auto segs = flatten(g, axis);

    // endpoint catalogue: vertices may repeat across chains, nothing else may
    std::vector<std::pair<Vec3r, std::string>> points;
    for (int v = 1; v <= g.n; ++v) points.push_back({g.at(v), "vertex " + std::to_string(v)});
    for (int ei = 0; ei < static_cast<int>(g.bends.size()); ++ei)
        for (size_t k = 0; k < g.bends[ei].size(); ++k)
            points.push_back({g.bends[ei][k], "waypoint " + std::to_string(k) + " of edge " + ename(edge_of_index(ei, g.n))});

    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first)
                return {false, "coincident points: " + points[i].second + " and " + points[j].second};
            if (project(points[i].first, axis) == project(points[j].first, axis))
                return {false, "(a) " + points[i].second + " and " + points[j].second + " share a projection"};
        }
    }

    // (b) point interior to a non-incident segment
    for (const auto& [p3, name] : points) {
        const Vec2r P = project(p3, axis);
        for (const Seg& s : segs) {
            if (s.p3 == p3 || s.q3 == p3) continue;
            Vec2r r = sub2(s.q, s.p);
            if (cross2(sub2(P, s.p), r) != 0) continue;
            Rat dot = (P.a - s.p.a) * r.a + (P.b - s.p.b) * r.b;
            Rat len2 = r.a * r.a + r.b * r.b;
            if (dot > 0 && dot < len2)
                return {false, "(b) " + name + " projects into segment " + std::to_string(s.idx) + " of edge " +
                                   ename(edge_of_index(s.edge, g.n))};
        }
    }

    // (c) collinear overlap; (d) concurrency; (e) height ties
    std::map<std::pair<Rat, Rat>, std::vector<std::pair<int, int>>> at_point;
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg &s1 = segs[i], &s2 = segs[j];
            const bool touching = share_endpoint_3d(s1, s2);
            Vec2r r = sub2(s1.q, s1.p), s = sub2(s2.q, s2.p);
            if (cross2(r, s) == 0 && cross2(sub2(s2.p, s1.p), r) == 0) {
                // same projected line: reject any overlap beyond a shared endpoint
                Rat len2 = r.a * r.a + r.b * r.b;
                Rat c0 = ((s2.p.a - s1.p.a) * r.a + (s2.p.b - s1.p.b) * r.b) / len2;
                Rat c1 = ((s2.q.a - s1.p.a) * r.a + (s2.q.b - s1.p.b) * r.b) / len2;
                if (c0 > c1) std::swap(c0, c1);
                if (c1 > 0 && c0 < 1)
                    return {false, "(c) projected segments of edges " + ename(edge_of_index(s1.edge, g.n)) + " and " +
                                       ename(edge_of_index(s2.edge, g.n)) + " overlap"};
                continue;
            }
            if (touching) continue; // transverse at the shared endpoint only
            auto hit = interior_intersection(s1.p, s1.q, s2.p, s2.q);
            if (!hit) continue;

            auto& list = at_point[{hit->point.a, hit->point.b}];
            for (auto [pe, pi] : list)
                if (!(pe == static_cast<int>(i)) && !(pe == static_cast<int>(j)))
                    return {false, "(d) three projected segments concurrent near edges " +
                                       ename(edge_of_index(segs[pe].edge, g.n)) + ", " +
                                       ename(edge_of_index(s1.edge, g.n)) + ", " + ename(edge_of_index(s2.edge, g.n))};
            list.push_back({static_cast<int>(i), 0});
            list.push_back({static_cast<int>(j), 0});

            const Rat h1 = height(s1.p3, axis) + hit->t * (height(s1.q3, axis) - height(s1.p3, axis));
            const Rat h2 = height(s2.p3, axis) + hit->u * (height(s2.q3, axis) - height(s2.p3, axis));
            if (h1 == h2)
                return {false, "(e) segments of edges " + ename(edge_of_index(s1.edge, g.n)) + " and " +
                                   ename(edge_of_index(s2.edge, g.n)) + " meet at equal height"};
        }
    }

    return {true, "general position along " + std::string(axis_name(axis))};
}

inline GenericityResult validate_generic(const PointSet& ps, Axis axis = Axis::z) {
    if (ps.n() < 2) return {false, "need at least 2 points"};
    if (ps.n() < 3) {
        // no edges to speak of; only check projections
        if (detail::project(ps.pts[0], axis) == detail::project(ps.pts[1], axis))
            return {false, "(a) vertices 1 and 2 share a projection"};
        return {true, "general position"};
    }
    return validate_generic(embed_points(ps), axis);
}

// Diagram of the projected drawing: crossings are the transverse projected
// intersections of segment interiors; over/under by exact height comparison;
// sign by the right-hand rule with both edges oriented from the smaller to
// the larger endpoint. Crossing ids are dense in lexicographic order of the
// segment pair positions.
inline Diagram diagram_from_embedding(const EmbeddedGraph& g, Axis axis = Axis::z) {
    using namespace detail;
    auto gen = validate_generic(g, axis);
    if (!gen.ok) throw degeneracy_error("degenerate configuration: " + gen.detail);

    Diagram d = empty_diagram(g.n);
    d.meta = g.meta;
    const auto segs = flatten(g, axis);

    struct Hit {
        int id;
        int seg;
        Rat param;
    };
    std::vector<std::vector<Hit>> over_hits(d.walks.size()), under_hits(d.walks.size());

    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg &s1 = segs[i], &s2 = segs[j];
            if (share_endpoint_3d(s1, s2)) continue;
            auto hit = interior_intersection(s1.p, s1.q, s2.p, s2.q);
            if (!hit) continue;

            const Rat h1 = height(s1.p3, axis) + hit->t * (height(s1.q3, axis) - height(s1.p3, axis));
            const Rat h2 = height(s2.p3, axis) + hit->u * (height(s2.q3, axis) - height(s2.p3, axis));
            if (h1 == h2) throw degeneracy_error("equal heights at a crossing"); // unreachable after validation

            const bool first_over = h1 > h2;
            const Seg &os = first_over ? s1 : s2, &us = first_over ? s2 : s1;
            const Rat ot = first_over ? hit->t : hit->u, ut = first_over ? hit->u : hit->t;
            Rat orient = cross2(sub2(os.q, os.p), sub2(us.q, us.p));
            const int sign = orient > 0 ? +1 : -1;

            const int id = static_cast<int>(d.crossings.size());
            d.crossings.push_back(
                Crossing{edge_of_index(os.edge, g.n), edge_of_index(us.edge, g.n), sign});
            over_hits[os.edge].push_back({id, os.idx, ot});
            under_hits[us.edge].push_back({id, us.idx, ut});
        }
    }

    for (size_t ei = 0; ei < d.walks.size(); ++ei) {
        std::vector<std::tuple<int, Rat, Passage>> line;
        for (const Hit& h : over_hits[ei]) line.push_back({h.seg, h.param, Passage{h.id, Role::over}});
        for (const Hit& h : under_hits[ei]) line.push_back({h.seg, h.param, Passage{h.id, Role::under}});
        std::sort(line.begin(), line.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            return std::get<1>(a) < std::get<1>(b);
        });
        for (auto& [seg, param, p] : line) d.walks[ei].push_back(p);
    }
    return d;
}

inline Diagram diagram_from_points(const PointSet& ps, Axis axis = Axis::z) {
    return diagram_from_embedding(embed_points(ps), axis);
}

// Vertices 1..n placed in order on the moment curve (t, t^2, t^3). The plain
// parameters t_i = i go degenerate from n = 9 on (the projected chords {1,6},
// {3,7}, {4,9} meet at (5,29)), so the builder falls back to t_i = i + 2^-i,
// which restores general position; the choice is recorded in the provenance.
inline PointSet moment_curve_points(int n) {
    if (n < 3) throw std::invalid_argument("moment_curve_points: need n >= 3");
    auto place = [n](bool perturbed) {
        PointSet ps;
        ps.pts.reserve(n);
        for (int i = 1; i <= n; ++i) {
            Rat t = perturbed ? Rat(i) + Rat(1, Int(1) << i) : Rat(i);
            ps.pts.push_back(Vec3r{t, t * t, t * t * t});
        }
        ps.meta.builder = "moment-curve";
        ps.meta.add("n", std::to_string(n));
        ps.meta.add("t", perturbed ? "i+2^-i" : "i");
        return ps;
    };
    PointSet ps = place(false);
    if (validate_generic(ps).ok) return ps;
    ps = place(true);
    auto gen = validate_generic(ps);
    if (!gen.ok) throw degeneracy_error("moment curve with t_i = i + 2^-i is still degenerate: " + gen.detail);
    return ps;
}

// Standard rectilinear embedding h(K_n) and its diagram.
inline EmbeddedGraph standard_embedding(int n) {
    EmbeddedGraph g = embed_points(moment_curve_points(n));
    std::string t_choice = "i";
    for (const auto& [k, v] : g.meta.params)
        if (k == "t") t_choice = v;
    g.meta = Provenance{};
    g.meta.builder = "standard";
    g.meta.add("n", std::to_string(n));
    g.meta.add("t", t_choice);
    return g;
}

inline Diagram standard_diagram(int n) { return diagram_from_embedding(standard_embedding(n)); }

// Deterministic general-position integer embedding; resamples until the
// genericity checks pass.
inline PointSet random_embedding(int n, std::uint64_t seed, long long bound, int max_attempts = 1000) {
    if (n < 3) throw std::invalid_argument("random_embedding: need n >= 3");
    if (bound < n) throw std::invalid_argument("random_embedding: need bound >= n");

    std::mt19937_64 rng(seed);
    const std::uint64_t range = static_cast<std::uint64_t>(2 * bound + 1);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / range * range;
    auto draw = [&]() -> long long {
        std::uint64_t v;
        do {
            v = rng();
        } while (v >= limit);
        return static_cast<long long>(v % range) - bound;
    };

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        PointSet ps;
        ps.pts.reserve(n);
        for (int i = 0; i < n; ++i) {
            long long x = draw(), y = draw(), z = draw();
            ps.pts.push_back(Vec3r{Rat(x), Rat(y), Rat(z)});
        }
        if (validate_generic(ps).ok) {
            ps.meta.builder = "random";
            ps.meta.add("n", std::to_string(n));
            ps.meta.add("seed", std::to_string(seed));
            ps.meta.add("bound", std::to_string(bound));
            ps.meta.add("attempts", std::to_string(attempt));
            return ps;
        }
    }
    throw std::runtime_error("random_embedding: no general-position sample within " + std::to_string(max_attempts) +
                             " attempts (seed " + std::to_string(seed) + ", bound " + std::to_string(bound) + ")");
}

inline Diagram random_diagram(int n, std::uint64_t seed, long long bound = 0) {
    if (bound == 0) bound = std::max<long long>(8LL * n, 64);
    PointSet ps = random_embedding(n, seed, bound);
    return diagram_from_points(ps);
}

// ---- PointSet text format ----
// line 1: n, then n lines of three rationals ("p" or "p/q").

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal '" + s + "'");
    }
}

inline std::string pointset_to_text(const PointSet& ps) {
    std::ostringstream os;
    os << ps.n() << "\n";
    for (const auto& p : ps.pts) os << rat_to_string(p.x) << " " << rat_to_string(p.y) << " " << rat_to_string(p.z) << "\n";
    return os.str();
}

inline PointSet pointset_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] != '#')
                return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("point set: empty input");
    int n = 0;
    try {
        n = std::stoi(line);
    } catch (const std::exception&) {
        throw std::invalid_argument("point set line " + std::to_string(lineno) + ": expected vertex count");
    }
    if (n < 3) throw std::invalid_argument("point set: need n >= 3");
    PointSet ps;
    for (int i = 0; i < n; ++i) {
        if (!next_line())
            throw std::invalid_argument("point set: expected " + std::to_string(n) + " coordinate lines, got " +
                                        std::to_string(i));
        std::istringstream ls(line);
        std::string a, b, c;
        if (!(ls >> a >> b >> c))
            throw std::invalid_argument("point set line " + std::to_string(lineno) + ": expected three rationals");
        try {
            ps.pts.push_back(Vec3r{rat_from_string(a), rat_from_string(b), rat_from_string(c)});
        } catch (const std::exception& e) {
            throw std::invalid_argument("point set line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    ps.meta.builder = "points-file";
    ps.meta.add("n", std::to_string(n));
    return ps;
}

} // namespace cgk

#endif
