#ifndef CGK_REPORT_HPP
#define CGK_REPORT_HPP

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cgk/diagram_json.hpp"
#include "cgk/invariants.hpp"

namespace cgk {

// A check with both computed sides, never a bare boolean.
struct Verdict {
    std::string name;
    std::string expected;
    std::string actual;
    std::optional<bool> pass; // empty = informational only
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::optional<InvariantReport> invariants;
    std::vector<Verdict> verdicts;
    double timing_ms = 0;
    Provenance provenance;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (v.pass.has_value() && !*v.pass) return false;
        return true;
    }
};

inline void add_standard_verdicts(RunReport& rep, const InvariantReport& inv) {
    IdentityCheck ic = verify_identity(inv);
    rep.verdicts.push_back(Verdict{"identity", ic.rhs.str(), ic.lhs.str(), ic.pass});
    CongruenceCheck cc = verify_congruence(inv);
    rep.verdicts.push_back(Verdict{"congruence mod " + cc.modulus.str(), cc.expected.str(), cc.residue.str(), cc.pass});
    if (inv.n == 6) {
        SachsCheck sc = verify_sachs(inv);
        rep.verdicts.push_back(
            Verdict{"sachs parity", "odd", std::to_string(sc.sum_lk) + (sc.odd ? " (odd)" : " (even)"), sc.pass});
    }
}

inline json invariant_report_to_json(const InvariantReport& r) {
    json j;
    j["n"] = r.n;
    j["sum_a2_hamiltonian"] = r.sum_a2_hamiltonian;
    j["sum_a2_pentagons"] = r.sum_a2_pentagons;
    j["sum_lk2_triangles"] = r.sum_lk2_triangles;
    j["sum_lk_triangles"] = r.sum_lk_triangles;
    j["residue_modulus"] = r.residue_modulus.str();
    j["residue"] = r.residue.str();
    return j;
}

inline json run_report_to_json(const RunReport& r) {
    json j;
    j["command"] = r.command;
    json in = json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    j["inputs"] = in;
    if (r.invariants) j["invariants"] = invariant_report_to_json(*r.invariants);
    json vs = json::array();
    for (const auto& v : r.verdicts) {
        json vj;
        vj["name"] = v.name;
        vj["expected"] = v.expected;
        vj["actual"] = v.actual;
        if (v.pass.has_value())
            vj["pass"] = *v.pass;
        else
            vj["pass"] = nullptr;
        vs.push_back(vj);
    }
    j["verdicts"] = vs;
    if (!r.provenance.builder.empty() || !r.provenance.params.empty()) j["provenance"] = provenance_to_json(r.provenance);
    j["timing_ms"] = r.timing_ms;
    return j;
}

inline std::string run_report_to_table(const RunReport& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    for (const auto& [k, v] : r.inputs) os << "  " << k << " = " << v << "\n";
    if (r.invariants) {
        const InvariantReport& inv = *r.invariants;
        os << "invariant sums (n = " << inv.n << "):\n";
        os << "  sum a2 over Hamiltonian cycles : " << inv.sum_a2_hamiltonian << "\n";
        os << "  sum a2 over pentagons          : " << inv.sum_a2_pentagons << "\n";
        os << "  sum lk^2 over triangle pairs   : " << inv.sum_lk2_triangles << "\n";
        os << "  sum lk over triangle pairs     : " << inv.sum_lk_triangles << "\n";
        os << "  residue mod " << inv.residue_modulus.str() << "              : " << inv.residue.str() << "\n";
    }
    if (!r.verdicts.empty()) {
        os << "verdicts:\n";
        for (const auto& v : r.verdicts) {
            os << "  " << std::left << std::setw(24) << v.name << " expected " << v.expected << ", got " << v.actual
               << " -> " << (v.pass.has_value() ? (*v.pass ? "pass" : "FAIL") : "n/a") << "\n";
        }
    }
    os << "elapsed: " << std::fixed << std::setprecision(1) << r.timing_ms << " ms\n";
    return os.str();
}

} // namespace cgk

#endif
