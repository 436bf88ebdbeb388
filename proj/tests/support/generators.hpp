#ifndef CGK_TESTS_GENERATORS_HPP
#define CGK_TESTS_GENERATORS_HPP

// Seeded helpers for property tests: Gauss-sequence surgeries that must not
// change a2, and random gadget-built diagrams.

#include <algorithm>
#include <random>
#include <vector>

#include "cgk/constructions.hpp"
#include "cgk/diagram.hpp"

namespace cgk::tests {

inline KnotDiagram rotated(const KnotDiagram& k, size_t by) {
    KnotDiagram r = k;
    if (r.passages.empty()) return r;
    by %= r.passages.size();
    std::rotate(r.passages.begin(), r.passages.begin() + by, r.passages.end());
    return r;
}

inline KnotDiagram reversed(const KnotDiagram& k) {
    KnotDiagram r = k;
    std::reverse(r.passages.begin(), r.passages.end());
    return r;
}

// Insert a canceling poke: the new strand passes over twice with opposite
// signs, at two distinct gaps of the sequence. Knot type is unchanged.
inline KnotDiagram with_r2_pair(const KnotDiagram& k, size_t gap1, size_t gap2, int eps) {
    int next_id = 0;
    for (const KnotPassage& p : k.passages) next_id = std::max(next_id, p.crossing + 1);
    const int x = next_id, y = next_id + 1;
    KnotDiagram r = k;
    const size_t m = r.passages.size();
    gap1 %= (m + 1);
    gap2 %= (m + 1);
    if (gap1 == gap2) gap2 = (gap2 + 1) % (m + 1);
    const size_t first = std::min(gap1, gap2), second = std::max(gap1, gap2);
    r.passages.insert(r.passages.begin() + second, {KnotPassage{x, Role::under, eps}, KnotPassage{y, Role::under, -eps}});
    r.passages.insert(r.passages.begin() + first, {KnotPassage{x, Role::over, eps}, KnotPassage{y, Role::over, -eps}});
    return r;
}

// Random composite diagram: a twist gadget on h(K_n) plus a few delta gadgets.
inline Diagram random_gadget_diagram(std::mt19937_64& rng, int n) {
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    int k = 0, l = 0;
    while (true) {
        k = pick(0, n - 4);
        l = pick(0, n - 4);
        if (k + l <= n - 4) break;
    }
    const int s = pick(0, 3);
    Diagram d = twist_embedding(TwistParams{n, k, l, s});
    const int deltas = pick(0, 3);
    for (int i = 0; i < deltas; ++i) d = delta_gadget(std::move(d), {1, 2, 3, 4}, pick(0, 1) ? +1 : -1);
    return d;
}

} // namespace cgk::tests

#endif
