#ifndef CGK_INVARIANTS_HPP
#define CGK_INVARIANTS_HPP

#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "cgk/diagram.hpp"
#include "cgk/graph.hpp"
#include "cgk/numeric.hpp"

namespace cgk {

namespace detail {

// Local, mutable view of a knot's Gauss data: chord endpoints by position,
// plus current signs (roles are only needed at first encounters, tracked via
// the over-position).
struct ChordTable {
    std::vector<int> first_pos, second_pos; // per local chord, first_pos < second_pos
    std::vector<int> sign;
    std::vector<int> over_pos; // position at which the chord passes over
    std::vector<int> chord_at; // per position
};

inline ChordTable chord_table(const KnotDiagram& k) {
    const size_t m = k.passages.size();
    if (m % 2 != 0) throw invalid_diagram("knot diagram has an odd number of passages");
    ChordTable t;
    t.chord_at.assign(m, -1);
    std::vector<int> ids;
    for (size_t pos = 0; pos < m; ++pos) {
        const KnotPassage& p = k.passages[pos];
        int local = -1;
        for (size_t c = 0; c < ids.size(); ++c)
            if (ids[c] == p.crossing) local = static_cast<int>(c);
        if (local < 0) {
            local = static_cast<int>(ids.size());
            ids.push_back(p.crossing);
            t.first_pos.push_back(static_cast<int>(pos));
            t.second_pos.push_back(-1);
            t.sign.push_back(p.sign);
            t.over_pos.push_back(p.role == Role::over ? static_cast<int>(pos) : -1);
        } else {
            if (t.second_pos[local] != -1)
                throw invalid_diagram("crossing " + std::to_string(p.crossing) + " appears more than twice");
            t.second_pos[local] = static_cast<int>(pos);
            if (t.sign[local] != p.sign)
                throw invalid_diagram("crossing " + std::to_string(p.crossing) + " has mismatched signs");
            if (p.role == Role::over) {
                if (t.over_pos[local] != -1) throw invalid_diagram("crossing " + std::to_string(p.crossing) + " is over twice");
                t.over_pos[local] = static_cast<int>(pos);
            }
        }
        t.chord_at[pos] = local;
    }
    for (size_t c = 0; c < t.first_pos.size(); ++c) {
        if (t.second_pos[c] < 0) throw invalid_diagram("unpaired crossing " + std::to_string(ids[c]));
        if (t.over_pos[c] < 0) throw invalid_diagram("crossing " + std::to_string(ids[c]) + " is never over");
    }
    return t;
}

} // namespace detail

// Second Conway coefficient of the knot type presented by the diagram.
// Descending-diagram skein recursion: walk once around; whenever a crossing is
// first met on its under strand, the skein relation contributes
// sign * lk(oriented smoothing) and the crossing is switched; the final
// descending diagram is trivial. O(c^2).
inline long long a2(const KnotDiagram& k) {
    detail::ChordTable t = detail::chord_table(k);
    const int m = static_cast<int>(k.passages.size());
    const int nchords = static_cast<int>(t.first_pos.size());

    long long total = 0;
    for (int pos = 0; pos < m; ++pos) {
        const int c = t.chord_at[pos];
        if (t.first_pos[c] != pos) continue; // second encounter
        if (t.over_pos[c] == pos) continue;  // already descending here

        // smoothing at c splits the circle at (i, j); chords with exactly one
        // endpoint strictly inside (i, j) join the two components
        const int i = t.first_pos[c], j = t.second_pos[c];
        long long signed_count = 0;
        for (int y = 0; y < nchords; ++y) {
            if (y == c) continue;
            const bool p_in = t.first_pos[y] > i && t.first_pos[y] < j;
            const bool q_in = t.second_pos[y] > i && t.second_pos[y] < j;
            if (p_in != q_in) signed_count += t.sign[y];
        }
        if (signed_count % 2 != 0)
            throw invalid_diagram("smoothing has odd inter-component sign sum; not a classical diagram");
        total += static_cast<long long>(t.sign[c]) * (signed_count / 2);

        // switch the crossing
        t.sign[c] = -t.sign[c];
        t.over_pos[c] = pos;
    }
    return total;
}

// Linking number: half the signed count of inter-component crossings.
inline long long lk(const LinkDiagram& l) {
    long long s = std::accumulate(l.inter_signs.begin(), l.inter_signs.end(), 0LL);
    if (s % 2 != 0) throw invalid_diagram("inter-component sign sum is odd; not a classical link diagram");
    return s / 2;
}

// ---- aggregate sums over the cycle families ----

struct InvariantReport {
    int n = 0;
    long long sum_a2_hamiltonian = 0;
    long long sum_a2_pentagons = 0;
    long long sum_lk2_triangles = 0;
    long long sum_lk_triangles = 0;
    Int residue_modulus = 1; // (n-5)!
    Int residue = 0;         // sum_a2_hamiltonian mod (n-5)!, in [0, modulus)
};

namespace detail {

template <typename Item, typename Fn>
long long parallel_sum(const std::vector<Item>& items, int workers, Fn&& per_item) {
    if (workers < 1) workers = 1;
    const size_t w = std::min<size_t>(workers, items.size() ? items.size() : 1);
    if (w <= 1) {
        long long s = 0;
        for (const auto& it : items) s += per_item(it);
        return s;
    }
    std::vector<long long> partial(w, 0);
    std::vector<std::thread> threads;
    const size_t chunk = (items.size() + w - 1) / w;
    for (size_t t = 0; t < w; ++t) {
        threads.emplace_back([&, t]() {
            const size_t lo = t * chunk, hi = std::min(items.size(), lo + chunk);
            long long s = 0;
            for (size_t i = lo; i < hi; ++i) s += per_item(items[i]);
            partial[t] = s;
        });
    }
    for (auto& th : threads) th.join();
    long long s = 0;
    for (long long p : partial) s += p; // fixed combine order
    return s;
}

} // namespace detail

// Full enumeration of all four sums. Exact; deterministic for any worker count.
inline InvariantReport invariant_report(const Diagram& d, int workers = 1) {
    if (d.n < 6) throw std::invalid_argument("invariant_report: need n >= 6");
    GraphSpec g(d.n);

    InvariantReport rep;
    rep.n = d.n;

    const auto hams = hamiltonian_cycles(g);
    rep.sum_a2_hamiltonian = detail::parallel_sum(hams, workers, [&](const Cycle& c) { return a2(extract_knot(d, c)); });

    const auto pents = p_cycles(g, 5);
    rep.sum_a2_pentagons = detail::parallel_sum(pents, workers, [&](const Cycle& c) { return a2(extract_knot(d, c)); });

    const auto pairs = disjoint_triangle_pairs(g);
    rep.sum_lk2_triangles = detail::parallel_sum(pairs, workers, [&](const CyclePair& p) {
        long long v = lk(extract_link(d, p));
        return v * v;
    });
    rep.sum_lk_triangles = detail::parallel_sum(pairs, workers, [&](const CyclePair& p) { return lk(extract_link(d, p)); });

    rep.residue_modulus = factorial(d.n - 5);
    rep.residue = floor_mod(Int(rep.sum_a2_hamiltonian), rep.residue_modulus);
    return rep;
}

// ---- theorem-shaped checks on a computed report ----

struct IdentityCheck {
    Int lhs, rhs;
    bool pass = false;
};

// LHS = sum a2(Hamiltonian) - (n-5)! * sum a2(pentagons);
// RHS = (n-5)!/2 * (sum lk^2(triangle pairs) - C(n-1,5)). Exact equality.
inline IdentityCheck verify_identity(const InvariantReport& r) {
    const Int f = factorial(r.n - 5);
    IdentityCheck c;
    c.lhs = Int(r.sum_a2_hamiltonian) - f * Int(r.sum_a2_pentagons);
    c.rhs = exact_div(f * (Int(r.sum_lk2_triangles) - binomial(r.n - 1, 5)), 2, "identity rhs");
    c.pass = (c.lhs == c.rhs);
    return c;
}

inline IdentityCheck verify_identity(const Diagram& d, int workers = 1) {
    return verify_identity(invariant_report(d, workers));
}

// Universal residue of the Hamiltonian a2 sum: (n-5)!/2 for n = 0,7 (mod 8),
// otherwise 0 (and r_6 = 0).
inline Int r_n(int n) {
    if (n < 6) throw std::invalid_argument("r_n: need n >= 6");
    const int m = n % 8;
    if (m == 0 || m == 7) return factorial(n - 5) / 2;
    return 0;
}

struct CongruenceCheck {
    Int modulus;
    Int residue;          // sum mod modulus
    Int expected;         // r_n mod modulus (meaningful when verdict present)
    std::optional<bool> pass; // empty when modulus does not divide (n-5)!
};

// Verdict iff the modulus divides (n-5)!; otherwise the residue is reported
// without a verdict.
inline CongruenceCheck verify_congruence(const InvariantReport& r, std::optional<Int> modulus = std::nullopt) {
    CongruenceCheck c;
    c.modulus = modulus.value_or(factorial(r.n - 5));
    if (c.modulus <= 0) throw std::invalid_argument("verify_congruence: modulus must be positive");
    c.residue = floor_mod(Int(r.sum_a2_hamiltonian), c.modulus);
    if (factorial(r.n - 5) % c.modulus == 0) {
        c.expected = floor_mod(r_n(r.n), c.modulus);
        c.pass = (c.residue == c.expected);
    }
    return c;
}

inline CongruenceCheck verify_congruence(const Diagram& d, std::optional<Int> modulus = std::nullopt, int workers = 1) {
    return verify_congruence(invariant_report(d, workers), std::move(modulus));
}

struct SachsCheck {
    long long sum_lk = 0;
    bool odd = false;
    bool pass = false; // defined for n = 6: the triangle-pair lk sum is odd
};

inline SachsCheck verify_sachs(const InvariantReport& r) {
    if (r.n != 6) throw std::invalid_argument("verify_sachs: the parity verdict is defined for n = 6");
    SachsCheck s;
    s.sum_lk = r.sum_lk_triangles;
    s.odd = (floor_mod(Int(s.sum_lk), 2) == 1);
    s.pass = s.odd;
    return s;
}

inline SachsCheck verify_sachs(const Diagram& d, int workers = 1) { return verify_sachs(invariant_report(d, workers)); }

} // namespace cgk

#endif
