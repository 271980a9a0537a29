#include "lclaw/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lclaw/family.hpp"
#include "lclaw/generators.hpp"
#include "lclaw/instance.hpp"
#include "lclaw/mwis.hpp"
#include "lclaw/patterns.hpp"

namespace lclaw {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitClass = 3;
constexpr int kExitVerify = 4;

std::string one_based(const VertexSet& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v + 1);
    }
    return out;
}

std::vector<int> make_ordering(const Graph& g, const std::string& kind) {
    if (kind == "degasc") return degree_ordering(g, true);
    if (kind == "degdesc") return degree_ordering(g, false);
    return identity_ordering(g.vertex_count());
}

ClawfreeSolver parse_solver(const std::string& s) {
    if (s == "matching") return ClawfreeSolver::Matching;
    if (s == "bnb") return ClawfreeSolver::BranchAndBound;
    if (s == "brute") return ClawfreeSolver::Brute;
    return ClawfreeSolver::Auto;
}

void print_claw_chain(std::ostream& err, const std::vector<Claw>& witness) {
    err << "witness claw chain (1-based):";
    for (const Claw& c : witness) {
        Claw shifted{c.center + 1,
                     {c.leaves[0] + 1, c.leaves[1] + 1, c.leaves[2] + 1}};
        err << " " << shifted.to_string();
    }
    err << "\n";
}

int threads_from_env() {
    const char* env = std::getenv("LCLAW_THREADS");
    if (!env) return 1;
    int t = std::atoi(env);
    return t >= 1 ? t : 1;
}

struct BenchRow {
    int n = 0;
    std::size_t family_size = 0;
    std::size_t embeddings = 0;
    std::size_t cap = 0;
    double wall_ms = 0.0;
};

BenchRow bench_trial(std::uint64_t seed, int n, int l, double density) {
    Instance inst = gen_lclaw_instance(seed, n, l, density);
    auto start = std::chrono::steady_clock::now();
    Family fam = gamma(inst.graph, l, identity_ordering(n));
    auto stop = std::chrono::steady_clock::now();
    BenchRow row;
    row.n = n;
    row.family_size = fam.size();
    row.embeddings = fam.stats.embeddings;
    row.cap = 1 + fam.stats.step2_candidates;
    row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return row;
}

int cmd_solve(const std::string& file, const std::string& l_flag, const std::string& solver,
              const std::string& ordering, bool skip_check, std::ostream& out,
              std::ostream& err) {
    Instance inst = load_instance(file);
    SolveOptions opts;
    opts.ordering = make_ordering(inst.graph, ordering);
    opts.skip_class_check = skip_check;
    opts.solver = parse_solver(solver);

    Solution sol;
    if (l_flag == "2k2") {
        sol = mwis_2k2free(inst.graph, inst.weights, opts);
    } else if (l_flag == "auto") {
        if (inst.tag && inst.tag->kind == ClassTag::Kind::TwoK2Free) {
            err << "declared class: 2k2free\n";
            sol = mwis_2k2free(inst.graph, inst.weights, opts);
        } else if (inst.tag && inst.tag->kind == ClassTag::Kind::ClawFree) {
            err << "declared class: clawfree\n";
            sol = mwis_lclaw(inst.graph, inst.weights, 1, opts);
        } else if (inst.tag && inst.tag->kind == ClassTag::Kind::LClaw) {
            err << "declared class: lclaw " << inst.tag->l << "\n";
            sol = mwis_lclaw(inst.graph, inst.weights, inst.tag->l, opts);
        } else {
            constexpr int kAutoCap = 4;
            int p = detect_claw_packing(inst.graph, kAutoCap);
            int l = p + 1;
            err << "auto-detected l=" << l << "\n";
            if (p == kAutoCap)
                err << "note: claw packing saturates the auto cap (" << kAutoCap
                    << "); pass --l explicitly if the packing is larger\n";
            sol = mwis_lclaw(inst.graph, inst.weights, l, opts);
        }
    } else {
        int l = std::stoi(l_flag);
        sol = mwis_lclaw(inst.graph, inst.weights, l, opts);
    }
    out << sol.weight << "\n" << one_based(sol.set) << "\n";
    return kExitOk;
}

int cmd_family(const std::string& file, const std::string& l_flag, const std::string& ordering,
               const std::string& out_path, std::ostream& out, std::ostream& /*err*/) {
    Instance inst = load_instance(file);
    std::vector<int> ord = make_ordering(inst.graph, ordering);
    Family fam = l_flag == "2k2" ? algorithm_alpha(inst.graph, ord)
                                 : gamma(inst.graph, std::stoi(l_flag), ord);
    std::string text = dump_family(fam);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << text;
    }
    return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& l_flag, const std::string& ordering,
               const std::string& family_path, std::ostream& out, std::ostream& /*err*/) {
    Instance inst = load_instance(file);
    FamilyKind kind =
        l_flag == "2k2" ? FamilyKind::AlphaIndependent : FamilyKind::GammaClawFree;
    Family fam(inst.graph.vertex_count());
    bool loaded = !family_path.empty();
    if (loaded) {
        std::ifstream f(family_path);
        if (!f) throw std::runtime_error("cannot open " + family_path);
        std::ostringstream buf;
        buf << f.rdbuf();
        fam = parse_family_dump(buf.str(), inst.graph.vertex_count());
    } else {
        std::vector<int> ord = make_ordering(inst.graph, ordering);
        fam = l_flag == "2k2" ? algorithm_alpha(inst.graph, ord)
                              : gamma(inst.graph, std::stoi(l_flag), ord);
    }
    // Loaded dumps carry no construction statistics; the size cap stays
    // unverified for them.
    GoodFamilyReport report =
        verify_good_family(inst.graph, fam, kind, std::size_t{1} << 21, !loaded);
    out << report.to_string();
    bool ok = loaded ? (report.member_condition == CheckState::Pass &&
                        report.coverage == CheckState::Pass)
                     : report.all_pass();
    return ok ? kExitOk : kExitVerify;
}

int cmd_gen(const std::string& kind, std::uint64_t seed, int n, int l, int root_n,
            double density, std::int64_t wmin, std::int64_t wmax, const std::string& out_path,
            std::ostream& out, std::ostream& /*err*/) {
    WeightRange range{wmin, wmax};
    Instance inst;
    if (kind == "lclaw")
        inst = gen_lclaw_instance(seed, n, l, density, range);
    else if (kind == "2k2")
        inst = gen_2k2free_instance(seed, n, range);
    else
        inst = gen_linegraph_instance(seed, root_n, density, range);
    std::string text = emit_dimacs(inst);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << text;
    }
    return kExitOk;
}

int cmd_bench(int l, const std::string& sizes_csv, int trials, std::uint64_t seed,
              double density, std::ostream& out, std::ostream& err) {
    std::vector<int> sizes;
    std::stringstream ss(sizes_csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) sizes.push_back(std::stoi(item));
    if (sizes.empty()) {
        err << "bench: no sizes given\n";
        return kExitUsage;
    }
    const int threads = threads_from_env();
    bool cap_ok = true;
    out << std::left << std::setw(6) << "n" << std::setw(8) << "trials" << std::setw(12)
        << "family_max" << std::setw(13) << "family_mean" << std::setw(12) << "embed_max"
        << std::setw(8) << "cap_ok" << "wall_ms\n";
    for (int n : sizes) {
        std::vector<BenchRow> rows(static_cast<std::size_t>(trials));
        for (int t = 0; t < trials; t += threads) {
            std::vector<std::future<BenchRow>> futs;
            for (int j = t; j < std::min(trials, t + threads); ++j) {
                std::uint64_t s = seed * 1000003ull + static_cast<std::uint64_t>(n) * 1009ull +
                                  static_cast<std::uint64_t>(j);
                futs.push_back(std::async(std::launch::async, bench_trial, s, n, l, density));
            }
            for (int j = t; j < std::min(trials, t + threads); ++j)
                rows[static_cast<std::size_t>(j)] = futs[static_cast<std::size_t>(j - t)].get();
        }
        std::size_t fam_max = 0, emb_max = 0;
        double fam_sum = 0.0, wall = 0.0;
        bool ok = true;
        for (const auto& r : rows) {
            fam_max = std::max(fam_max, r.family_size);
            emb_max = std::max(emb_max, r.embeddings);
            fam_sum += static_cast<double>(r.family_size);
            wall += r.wall_ms;
            ok = ok && r.family_size <= r.cap;
        }
        cap_ok = cap_ok && ok;
        out << std::left << std::setw(6) << n << std::setw(8) << trials << std::setw(12)
            << fam_max << std::setw(13) << std::fixed << std::setprecision(1)
            << fam_sum / trials << std::setw(12) << emb_max << std::setw(8)
            << (ok ? "yes" : "NO") << std::setprecision(1) << wall << "\n";
    }
    return cap_ok ? kExitOk : kExitVerify;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact MWIS solvers for graphs without many disjoint claws"};
    app.require_subcommand(1);

    std::string file, l_flag = "auto", solver = "auto", ordering = "input", out_path;
    bool skip_check = false;

    auto* solve = app.add_subcommand("solve", "solve MWIS for an instance file");
    solve->add_option("file", file, "DIMACS-style instance")->required();
    solve->add_option("--l", l_flag, "class parameter: positive integer, 'auto' or '2k2'");
    solve->add_option("--solver", solver, "auto|matching|bnb|brute")
        ->check(CLI::IsMember({"auto", "matching", "bnb", "brute"}));
    solve->add_option("--ordering", ordering, "input|degasc|degdesc")
        ->check(CLI::IsMember({"input", "degasc", "degdesc"}));
    solve->add_flag("--skip-class-check", skip_check, "skip the up-front class verification");

    auto* family = app.add_subcommand("family", "dump the covering family");
    family->add_option("file", file, "DIMACS-style instance")->required();
    family->add_option("--l", l_flag, "positive integer or '2k2'")->required();
    family->add_option("--ordering", ordering, "input|degasc|degdesc")
        ->check(CLI::IsMember({"input", "degasc", "degdesc"}));
    family->add_option("-o,--output", out_path, "write to file instead of stdout");

    std::string family_path;
    auto* verify = app.add_subcommand("verify", "verify the good-family properties");
    verify->add_option("file", file, "DIMACS-style instance")->required();
    verify->add_option("--l", l_flag, "positive integer or '2k2'")->required();
    verify->add_option("--ordering", ordering, "input|degasc|degdesc")
        ->check(CLI::IsMember({"input", "degasc", "degdesc"}));
    verify->add_option("--family", family_path,
                       "verify a dumped family file instead of rebuilding one");

    std::string gen_kind;
    std::uint64_t seed = 1;
    int n = 12, l = 2, root_n = 8, trials = 3;
    double density = 0.4;
    std::int64_t wmin = -5, wmax = 20;
    auto* gen = app.add_subcommand("gen", "generate a certified instance");
    gen->add_option("kind", gen_kind, "lclaw|2k2|linegraph")
        ->required()
        ->check(CLI::IsMember({"lclaw", "2k2", "linegraph"}));
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--n", n, "vertex count (lclaw, 2k2)");
    gen->add_option("--l", l, "claw packing bound + 1 (lclaw)");
    gen->add_option("--root-n", root_n, "root graph size (linegraph)");
    gen->add_option("--density", density, "edge density knob");
    gen->add_option("--wmin", wmin, "minimum vertex weight");
    gen->add_option("--wmax", wmax, "maximum vertex weight");
    gen->add_option("-o,--output", out_path, "write to file instead of stdout");

    std::string sizes_csv = "10,14,18,22";
    auto* bench = app.add_subcommand("bench", "family growth table over generated instances");
    bench->add_option("--l", l, "class parameter");
    bench->add_option("--sizes", sizes_csv, "comma-separated instance sizes");
    bench->add_option("--trials", trials, "trials per size");
    bench->add_option("--seed", seed, "base seed");
    bench->add_option("--density", density, "edge density knob");

    auto* patterns = app.add_subcommand("patterns", "print the pattern catalog as edge lists");

    std::vector<const char*> argv;
    argv.push_back("lclaw");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(file, l_flag, solver, ordering, skip_check, out, err);
        if (family->parsed()) return cmd_family(file, l_flag, ordering, out_path, out, err);
        if (verify->parsed()) return cmd_verify(file, l_flag, ordering, family_path, out, err);
        if (gen->parsed())
            return cmd_gen(gen_kind, seed, n, l, root_n, density, wmin, wmax, out_path, out, err);
        if (bench->parsed()) return cmd_bench(l, sizes_csv, trials, seed, density, out, err);
        if (patterns->parsed()) {
            out << pattern_atlas();
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ClassViolation& e) {
        err << "class violation: " << e.what() << "\n";
        print_claw_chain(err, e.witness());
        return kExitClass;
    } catch (const TwoK2Violation& e) {
        err << "class violation: " << e.what() << "\n";
        auto [e1, e2] = std::pair{e.witness()[0], e.witness()[1]};
        err << "witness 2K2 (1-based): " << e1.first + 1 << "-" << e1.second + 1 << ", "
            << e2.first + 1 << "-" << e2.second + 1 << "\n";
        return kExitClass;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}

} // namespace lclaw
