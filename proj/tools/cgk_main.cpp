// cgk: build, inspect, verify, and realize spatial diagrams of complete
// graphs, tracking the Conway-Gordon type invariant sums.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cgk/constructions.hpp"
#include "cgk/diagram_json.hpp"
#include "cgk/geometry.hpp"
#include "cgk/invariants.hpp"
#include "cgk/report.hpp"

using namespace cgk;

namespace {

struct GlobalOpts {
    int workers = 0; // 0 = hardware
    std::string format = "table";
    bool force = false;

    int effective_workers() const {
        if (workers > 0) return workers;
        unsigned hc = std::thread::hardware_concurrency();
        return hc ? static_cast<int>(hc) : 1;
    }
};

constexpr int kBruteForceLimit = 9;

void guard_brute_force(int n, const GlobalOpts& g, int limit = kBruteForceLimit) {
    if (n > limit && !g.force)
        throw std::runtime_error("n = " + std::to_string(n) + " means enumerating " +
                                 ((factorial(n - 1) / 2).str()) +
                                 " Hamiltonian cycles; pass --force if you really want that");
    if (n > limit)
        std::cerr << "warning: brute-force enumeration over " << (factorial(n - 1) / 2).str()
                  << " Hamiltonian cycles; this may take a very long time\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_diagram(const Diagram& d, const std::string& out_path) {
    const std::string text = serialize(d);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
    std::cerr << "wrote " << out_path << " (n = " << d.n << ", " << d.crossings.size() << " crossings, builder "
              << (d.meta.builder.empty() ? "?" : d.meta.builder) << ")\n";
}

Diagram load_diagram(const std::string& path) {
    Diagram d = deserialize(slurp(path));
    ValidationReport v = validate(d);
    if (!v.ok()) {
        std::string msg = "'" + path + "' fails validation:";
        for (const auto& e : v.errors) msg += "\n  " + e;
        throw std::runtime_error(msg);
    }
    for (const auto& w : v.warnings) std::cerr << "warning: " << w << "\n";
    return d;
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> vs;
    std::istringstream is(text);
    int v;
    while (is >> v) vs.push_back(v);
    if (!is.eof() && !is.fail()) throw std::runtime_error("bad vertex list '" + text + "'");
    if (vs.empty()) throw std::runtime_error("empty vertex list '" + text + "'");
    return vs;
}

int emit(const RunReport& rep, const GlobalOpts& g) {
    if (g.format == "structured")
        std::cout << run_report_to_json(rep).dump(2) << "\n";
    else
        std::cout << run_report_to_table(rep);
    return rep.all_pass() ? 0 : 1;
}

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conway-Gordon type invariant sums and realizations for spatial complete graphs"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--workers", g.workers, "parallel workers for enumerations (0 = all cores)");
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"table", "structured"}));
    app.add_flag("--force", g.force, "override the brute-force size guardrail");

    // ---- build ----
    auto* build = app.add_subcommand("build", "construct a diagram and write it out");
    build->require_subcommand(1);
    std::string out_path;
    int bn = 7, bk = 1, bl = 0, bs = 1;
    std::uint64_t seed = 1;
    long long bound = 0;
    std::string points_path;

    auto* b_std = build->add_subcommand("standard", "standard rectilinear (moment curve) diagram");
    b_std->add_option("--n", bn, "vertex count")->required();
    b_std->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* b_twist = build->add_subcommand("twist", "standard diagram with s full twists on two edges");
    b_twist->add_option("--n", bn)->required();
    b_twist->add_option("--k", bk)->required();
    b_twist->add_option("--l", bl)->required();
    b_twist->add_option("--s", bs)->required();
    b_twist->add_option("-o,--out", out_path);

    auto* b_rand = build->add_subcommand("random", "random general-position straight-line diagram");
    b_rand->add_option("--n", bn)->required();
    b_rand->add_option("--seed", seed)->required();
    b_rand->add_option("--bound", bound, "coordinate bound (default 8n)");
    b_rand->add_option("-o,--out", out_path);

    auto* b_pts = build->add_subcommand("points-file", "diagram from a point-set text file");
    b_pts->add_option("--points", points_path, "point set file")->required();
    b_pts->add_option("-o,--out", out_path);

    // ---- report ----
    std::string diagram_path;
    auto* report = app.add_subcommand("report", "full invariant report with all applicable verdicts");
    report->add_option("file", diagram_path, "diagram file")->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check one of the structural identities");
    verify->require_subcommand(1);
    std::string vid_path, vcon_path, vsachs_path, modulus_str;
    auto* v_id = verify->add_subcommand("identity", "integral identity relating the three sums");
    v_id->add_option("file", vid_path)->required();
    auto* v_con = verify->add_subcommand("congruence", "Hamiltonian a2 sum residue");
    v_con->add_option("file", vcon_path)->required();
    v_con->add_option("--modulus", modulus_str, "modulus (default (n-5)!)");
    auto* v_sachs = verify->add_subcommand("sachs", "triangle-pair lk sum parity (n = 6)");
    v_sachs->add_option("file", vsachs_path)->required();
    int ln = 7, lmax_s = 2;
    auto* v_l21 = verify->add_subcommand("lemma21", "twist sums against the sigma/tau closed forms");
    v_l21->add_option("--n", ln)->required();
    v_l21->add_option("--max-s", lmax_s, "largest twist count to test");

    // ---- realize ----
    auto* realize_cmd = app.add_subcommand("realize", "construct a diagram with a prescribed Hamiltonian a2 sum");
    int rn = 7;
    std::string m_str;
    bool rverify = false;
    realize_cmd->add_option("--n", rn)->required();
    realize_cmd->add_option("--m", m_str, "target sum (integer)")->required();
    realize_cmd->add_flag("--verify", rverify, "re-verify the sum by full enumeration");
    realize_cmd->add_option("-o,--out", out_path);

    // ---- knot / link ----
    auto* knot = app.add_subcommand("knot", "invariants of one extracted knot");
    knot->require_subcommand(1);
    auto* k_a2 = knot->add_subcommand("a2", "second Conway coefficient of a cycle's knot");
    std::string cycle_str, k_path;
    k_a2->add_option("--cycle", cycle_str, "cycle as a vertex list, e.g. \"1 2 3 4 5 6 7\"")->required();
    k_a2->add_option("file", k_path)->required();

    auto* link = app.add_subcommand("link", "invariants of one extracted 2-component link");
    link->require_subcommand(1);
    auto* l_lk = link->add_subcommand("lk", "linking number of a disjoint cycle pair");
    std::string pair_str, l_path;
    l_lk->add_option("--pair", pair_str, "two cycles separated by '/', e.g. \"1 3 5 / 2 4 6\"")->required();
    l_lk->add_option("file", l_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Timer timer;
        if (b_std->parsed()) {
            write_diagram(standard_diagram(bn), out_path);
            return 0;
        }
        if (b_twist->parsed()) {
            write_diagram(twist_embedding(TwistParams{bn, bk, bl, bs}), out_path);
            return 0;
        }
        if (b_rand->parsed()) {
            write_diagram(random_diagram(bn, seed, bound), out_path);
            return 0;
        }
        if (b_pts->parsed()) {
            PointSet ps = pointset_from_text(slurp(points_path));
            Diagram d = diagram_from_points(ps);
            d.meta = ps.meta;
            write_diagram(d, out_path);
            return 0;
        }

        if (report->parsed()) {
            Diagram d = load_diagram(diagram_path);
            guard_brute_force(d.n, g);
            RunReport rep;
            rep.command = "report";
            rep.inputs = {{"file", diagram_path}, {"workers", std::to_string(g.effective_workers())}};
            rep.provenance = d.meta;
            InvariantReport inv = invariant_report(d, g.effective_workers());
            rep.invariants = inv;
            add_standard_verdicts(rep, inv);
            rep.timing_ms = timer.ms();
            return emit(rep, g);
        }

        if (v_id->parsed() || v_con->parsed() || v_sachs->parsed()) {
            const std::string path = v_id->parsed() ? vid_path : v_con->parsed() ? vcon_path : vsachs_path;
            Diagram d = load_diagram(path);
            guard_brute_force(d.n, g);
            InvariantReport inv = invariant_report(d, g.effective_workers());
            RunReport rep;
            rep.inputs = {{"file", path}};
            rep.provenance = d.meta;
            rep.invariants = inv;
            if (v_id->parsed()) {
                rep.command = "verify identity";
                IdentityCheck ic = verify_identity(inv);
                rep.verdicts.push_back(Verdict{"identity", ic.rhs.str(), ic.lhs.str(), ic.pass});
            } else if (v_con->parsed()) {
                rep.command = "verify congruence";
                std::optional<Int> modulus;
                if (!modulus_str.empty()) modulus = Int(modulus_str);
                CongruenceCheck cc = verify_congruence(inv, modulus);
                rep.verdicts.push_back(Verdict{"congruence mod " + cc.modulus.str(),
                                               cc.pass ? cc.expected.str() : "(no verdict)", cc.residue.str(), cc.pass});
            } else {
                rep.command = "verify sachs";
                SachsCheck sc = verify_sachs(inv); // throws for n != 6
                rep.verdicts.push_back(Verdict{"sachs parity", "odd",
                                               std::to_string(sc.sum_lk) + (sc.odd ? " (odd)" : " (even)"), sc.pass});
            }
            rep.timing_ms = timer.ms();
            return emit(rep, g);
        }

        if (v_l21->parsed()) {
            guard_brute_force(ln, g, 8);
            RunReport rep;
            rep.command = "verify lemma21";
            rep.inputs = {{"n", std::to_string(ln)}, {"max_s", std::to_string(lmax_s)}};
            const Int cn = Int(invariant_report(standard_diagram(ln), g.effective_workers()).sum_a2_hamiltonian);
            rep.verdicts.push_back(Verdict{"c_n (brute force)", c_n(ln).str(), cn.str(), cn == c_n(ln)});
            for (int k = 0; k + 4 <= ln; ++k) {
                for (int l = 0; k + l + 4 <= ln; ++l) {
                    for (int s = 0; s <= lmax_s; ++s) {
                        InvariantReport inv =
                            invariant_report(twist_embedding(TwistParams{ln, k, l, s}), g.effective_workers());
                        Int expect = cn + factorial(ln - 4) * sigma(k, l, s) + factorial(ln - 5) * tau(ln, k, l, s);
                        rep.verdicts.push_back(
                            Verdict{"k=" + std::to_string(k) + " l=" + std::to_string(l) + " s=" + std::to_string(s),
                                    expect.str(), std::to_string(inv.sum_a2_hamiltonian),
                                    Int(inv.sum_a2_hamiltonian) == expect});
                    }
                }
            }
            rep.timing_ms = timer.ms();
            return emit(rep, g);
        }

        if (realize_cmd->parsed()) {
            const Int m(m_str);
            RealizationPlan plan = plan_realization(rn, m); // throws for inadmissible m
            if (rverify) guard_brute_force(rn, g);
            Diagram d = realize(rn, m, false);
            if (out_path.empty()) out_path = "realize-n" + std::to_string(rn) + "-m" + m.str() + ".json";
            write_diagram(d, out_path);
            RunReport rep;
            rep.command = "realize";
            rep.inputs = {{"n", std::to_string(rn)},
                          {"m", m.str()},
                          {"plan", "k=" + std::to_string(plan.k) + " l=" + std::to_string(plan.l) +
                                       " s=" + std::to_string(plan.s) + " deltas=" + plan.delta_count.str()}};
            rep.provenance = d.meta;
            if (rverify) {
                InvariantReport inv = invariant_report(d, g.effective_workers());
                rep.invariants = inv;
                rep.verdicts.push_back(Verdict{"realized sum", m.str(), std::to_string(inv.sum_a2_hamiltonian),
                                               Int(inv.sum_a2_hamiltonian) == m});
                add_standard_verdicts(rep, inv);
            } else {
                rep.verdicts.push_back(Verdict{"planned twist sum", plan.predicted_sum.str(),
                                               plan.predicted_sum.str(), std::nullopt});
            }
            rep.timing_ms = timer.ms();
            return emit(rep, g);
        }

        if (k_a2->parsed()) {
            Diagram d = load_diagram(k_path);
            KnotDiagram k = extract_knot(d, parse_vertex_list(cycle_str));
            RunReport rep;
            rep.command = "knot a2";
            rep.inputs = {{"file", k_path}, {"cycle", cycle_str}};
            rep.verdicts.push_back(Verdict{"a2", "(computed)", std::to_string(a2(k)), std::nullopt});
            rep.verdicts.push_back(
                Verdict{"crossings on cycle", "(computed)", std::to_string(k.crossing_count()), std::nullopt});
            rep.timing_ms = timer.ms();
            return emit(rep, g);
        }

        if (l_lk->parsed()) {
            Diagram d = load_diagram(l_path);
            auto slash = pair_str.find('/');
            if (slash == std::string::npos) throw std::runtime_error("--pair needs two cycles separated by '/'");
            auto c1 = parse_vertex_list(pair_str.substr(0, slash));
            auto c2 = parse_vertex_list(pair_str.substr(slash + 1));
            LinkDiagram l = extract_link(d, c1, c2);
            RunReport rep;
            rep.command = "link lk";
            rep.inputs = {{"file", l_path}, {"pair", pair_str}};
            rep.verdicts.push_back(Verdict{"lk", "(computed)", std::to_string(lk(l)), std::nullopt});
            rep.verdicts.push_back(
                Verdict{"inter-component crossings", "(computed)", std::to_string(l.inter_ids.size()), std::nullopt});
            rep.timing_ms = timer.ms();
            return emit(rep, g);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
