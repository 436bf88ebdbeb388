#ifndef CGK_GRAPH_HPP
#define CGK_GRAPH_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgk/numeric.hpp"

namespace cgk {

// Complete graph K_n with vertices labeled 1..n.
struct GraphSpec {
    int n;

    explicit GraphSpec(int n_) : n(n_) {
        if (n < 3) throw std::invalid_argument("GraphSpec: need n >= 3, got " + std::to_string(n));
    }

    Int edge_count() const { return Int(n) * (n - 1) / 2; }
};

// A p-cycle stored in canonical form: smallest label first, and of the two
// traversal directions the one whose second entry is smaller.
struct Cycle {
    std::vector<int> vertices;

    Cycle() = default;

    static Cycle canonical(std::span<const int> vs) {
        if (vs.size() < 3) throw std::invalid_argument("Cycle: need at least 3 vertices");
        std::vector<int> v(vs.begin(), vs.end());
        {
            std::vector<int> sorted = v;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw std::invalid_argument("Cycle: repeated vertex label");
            if (sorted.front() < 1) throw std::invalid_argument("Cycle: labels must be >= 1");
        }
        auto mn = std::min_element(v.begin(), v.end());
        std::rotate(v.begin(), mn, v.end());
        if (v[1] > v.back()) {
            std::reverse(v.begin() + 1, v.end());
        }
        Cycle c;
        c.vertices = std::move(v);
        return c;
    }

    int length() const { return static_cast<int>(vertices.size()); }

    // Traversal edges (from, to) following the stored orientation.
    std::vector<std::pair<int, int>> traversal_edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(vertices.size());
        for (size_t i = 0; i < vertices.size(); ++i)
            es.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
        return es;
    }

    bool operator==(const Cycle& o) const = default;
    auto operator<=>(const Cycle& o) const = default;
};

// Unordered pair of disjoint triangles; the triangle containing the overall
// smallest label comes first.
struct CyclePair {
    Cycle first, second;

    static CyclePair canonical(Cycle a, Cycle b) {
        if (a.vertices.front() > b.vertices.front()) std::swap(a, b);
        for (int u : a.vertices)
            for (int v : b.vertices)
                if (u == v) throw std::invalid_argument("CyclePair: cycles share vertex " + std::to_string(u));
        return CyclePair{std::move(a), std::move(b)};
    }

    bool operator==(const CyclePair& o) const = default;
    auto operator<=>(const CyclePair& o) const = default;
};

namespace detail {

// All k-subsets of {1..n} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// All cycles on the fixed vertex set `vs` (sorted ascending), canonical form,
// emitted in lexicographic order of the vertex sequence.
inline void cycles_on_set(const std::vector<int>& vs, std::vector<Cycle>& out) {
    const int p = static_cast<int>(vs.size());
    std::vector<int> rest(vs.begin() + 1, vs.end());
    std::sort(rest.begin(), rest.end());
    do {
        if (rest.front() > rest.back()) continue; // one traversal direction per cycle
        Cycle c;
        c.vertices.reserve(p);
        c.vertices.push_back(vs.front());
        c.vertices.insert(c.vertices.end(), rest.begin(), rest.end());
        out.push_back(std::move(c));
    } while (std::next_permutation(rest.begin(), rest.end()));
}

} // namespace detail

// Every p-cycle of K_n exactly once, canonical form, lexicographic order.
// Count: C(n,p) * (p-1)!/2.
inline std::vector<Cycle> p_cycles(const GraphSpec& g, int p) {
    if (p < 3 || p > g.n)
        throw std::invalid_argument("p_cycles: need 3 <= p <= n, got p=" + std::to_string(p));
    std::vector<Cycle> out;
    detail::for_each_subset(g.n, p, [&](const std::vector<int>& vs) { detail::cycles_on_set(vs, out); });
    std::sort(out.begin(), out.end());
    return out;
}

// Every Hamiltonian cycle of K_n exactly once; count (n-1)!/2.
inline std::vector<Cycle> hamiltonian_cycles(const GraphSpec& g) {
    return p_cycles(g, g.n);
}

// Every unordered pair of vertex-disjoint triangles; count C(n,6) * 10.
// Empty for n < 6.
inline std::vector<CyclePair> disjoint_triangle_pairs(const GraphSpec& g) {
    std::vector<CyclePair> out;
    if (g.n < 6) return out;
    detail::for_each_subset(g.n, 6, [&](const std::vector<int>& vs) {
        // companions of vs[0] in its triangle
        for (int i = 1; i <= 4; ++i) {
            for (int j = i + 1; j <= 5; ++j) {
                std::vector<int> t1{vs[0], vs[i], vs[j]};
                std::vector<int> t2;
                for (int k = 1; k <= 5; ++k)
                    if (k != i && k != j) t2.push_back(vs[k]);
                out.push_back(CyclePair::canonical(Cycle::canonical(t1), Cycle::canonical(t2)));
            }
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Number of Hamiltonian cycles containing all three edges of a fixed path of
// length 3; equals (n-4)!.
inline Int hamiltonian_cycles_through_path(const GraphSpec& g, std::span<const int> path) {
    if (path.size() != 4) throw std::invalid_argument("path must have exactly 4 vertices");
    for (size_t i = 0; i < 4; ++i) {
        if (path[i] < 1 || path[i] > g.n)
            throw std::invalid_argument("path vertex out of range: " + std::to_string(path[i]));
        for (size_t j = i + 1; j < 4; ++j)
            if (path[i] == path[j]) throw std::invalid_argument("path vertices must be distinct");
    }
    return factorial(g.n - 4);
}

} // namespace cgk

#endif
