// Command line front end.  Subcommands map one-to-one onto the library:
// catalog, classify, complement, invariants, verify, scan, search.
//
// Exit codes: 0 success, 1 a verification or classification failed,
// 2 usage, parse, or input errors.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ryserlab/catalog.hpp"
#include "ryserlab/complement.hpp"
#include "ryserlab/design.hpp"
#include "ryserlab/feasibility.hpp"
#include "ryserlab/invariants.hpp"
#include "ryserlab/io.hpp"
#include "ryserlab/search.hpp"

namespace {

using namespace ryserlab;

IncidenceStructure load_design(const std::string& path) {
    if (path == "-") return parse_design(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_design(in);
}

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int run_catalog(const std::string& name) {
    if (name.empty()) {
        for (const CatalogEntry& e : catalog_list()) {
            std::cout << e.name << "\tv=" << e.v << " k=" << e.k
                      << " lambda=" << e.lambda << "\tcomplementable="
                      << (e.complementable ? "yes" : "no") << "\t" << e.summary
                      << "\n";
        }
        return 0;
    }
    const CatalogEntry* e = catalog_find(name);
    if (!e) return fail_usage("unknown catalog entry: " + name);
    std::cout << serialize_design(e->design);
    return 0;
}

int run_classify(const std::string& file) {
    const IncidenceStructure s = load_design(file);
    const DesignClass cls = classify(s);
    std::cout << describe(cls) << "\n";
    return std::holds_alternative<InvalidClass>(cls) ? 1 : 0;
}

int run_complement(const std::string& file, int block) {
    const IncidenceStructure s = load_design(file);
    IncidenceStructure out;
    try {
        out = complement_at(s, block);
    } catch (const std::out_of_range& e) {
        return fail_usage(e.what());
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << serialize_design(out);
    return 0;
}

int run_invariants(const std::string& file) {
    const IncidenceStructure s = load_design(file);
    const DesignClass cls = classify(s);
    if (!std::holds_alternative<RyserClass>(cls)) {
        std::cerr << "error: not a Ryser design: " << describe(cls) << "\n";
        return 1;
    }
    const RyserInvariants inv = ryser_invariants(s);
    std::cout << "v=" << inv.v << "\n"
              << "lambda=" << inv.lambda << "\n"
              << "r1=" << inv.r1 << "\n"
              << "r2=" << inv.r2 << "\n"
              << "e1=" << inv.e1 << "\n"
              << "e2=" << inv.e2 << "\n"
              << "g=" << inv.g << "\n"
              << "c=" << inv.c << "\n"
              << "d=" << inv.d << "\n"
              << "a=" << inv.a << "\n"
              << "rho=" << inv.rho << "\n"
              << "D=" << inv.D << "\n"
              << "x=" << inv.x << "\n"
              << "y=" << inv.y << "\n"
              << "E1=" << inv.E1.to_row() << "\n"
              << "E2=" << inv.E2.to_row() << "\n";
    return 0;
}

int run_verify(const std::string& file) {
    const IncidenceStructure s = load_design(file);
    const DesignClass cls = classify(s);
    const bool is_ryser = std::holds_alternative<RyserClass>(cls);
    std::cout << "classification\t" << describe(cls) << "\tRyser\t"
              << (is_ryser ? "PASS" : "FAIL") << "\n";
    if (!is_ryser) {
        std::cout << "OVERALL FAIL\n";
        return 1;
    }
    const RyserInvariants inv = ryser_invariants(s);
    const EquationReport rep = verify_equations(s, inv, all_block_profiles(s, inv));
    std::cout << serialize_report(rep);
    return rep.overall ? 0 : 1;
}

int run_scan(long long lo, long long hi, bool relaxed, int jobs) {
    ScanReport rep;
    try {
        rep = scan_report(lo, hi, relaxed, jobs);
    } catch (const std::invalid_argument& e) {
        return fail_usage(e.what());
    }
    std::cout << scan_tsv(rep);
    std::cerr << scan_summary_text(rep);
    return 0;
}

std::string tuple_line(const ParameterTuple& t) {
    std::ostringstream os;
    os << "v=" << t.v << " r1=" << t.r1 << " r2=" << t.r2 << " g=" << t.g
       << " c=" << t.c << " d=" << t.d << " a=" << t.a << " e1=" << t.e1
       << " e2=" << t.e2 << " D=" << t.D << " x=" << t.x << " y=" << t.y;
    return os.str();
}

const char* verdict_word(VerdictKind k) {
    switch (k) {
        case VerdictKind::Eliminated: return "eliminated";
        case VerdictKind::ForcedType1: return "forced-type1";
        case VerdictKind::Open: return "open";
    }
    return "unknown";
}

const char* status_word(SearchStatus s) {
    switch (s) {
        case SearchStatus::Complete: return "complete";
        case SearchStatus::Incomplete: return "incomplete";
        case SearchStatus::Infeasible: return "infeasible";
    }
    return "unknown";
}

// Writes solutions under dir as sol-001.txt ... plus a manifest.tsv row per
// file.  Returns the manifest lines for the files written by this call.
void write_solutions(const std::string& dir, const ParameterTuple& t,
                     const std::vector<SearchSolution>& sols, int& file_no,
                     std::ostream& manifest) {
    std::filesystem::create_directories(dir);
    for (const SearchSolution& sol : sols) {
        std::ostringstream name;
        name << "sol-" << std::setfill('0') << std::setw(3) << ++file_no
             << ".txt";
        const std::filesystem::path path = std::filesystem::path(dir) / name.str();
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << serialize_design(sol.design);
        manifest << name.str() << "\t" << t.lambda << "\t" << t.v << "\t"
                 << t.r1 << "\t" << t.r2 << "\t" << t.e1 << "\t" << t.e2
                 << "\t" << t.D << "\t" << (sol.type1 ? "yes" : "no") << "\n";
    }
}

int run_search(long long lambda, long long v, long long v_cap,
               const SearchLimits& limits, const PruneToggles& prunes,
               const std::string& out_dir, int jobs) {
    std::ostringstream manifest;
    manifest << "file\tlambda\tv\tr1\tr2\te1\te2\tD\ttype1\n";
    int file_no = 0;

    if (v > 0) {
        std::vector<ParameterTuple> picked;
        for (const ParameterTuple& t : enumerate_tuples(lambda))
            if (t.v == v) picked.push_back(t);
        if (picked.empty())
            return fail_usage("no parameter tuple with lambda=" +
                              std::to_string(lambda) + " and v=" + std::to_string(v));
        std::cout << "search lambda=" << lambda << " v=" << v << "\n";
        double wall = 0;
        for (const ParameterTuple& t : picked) {
            const Verdict verdict = apply_rules(t);
            SearchResult r = search_designs({t, limits, prunes}, jobs);
            wall += r.wall_secs;
            std::cout << "tuple " << tuple_line(t)
                      << " verdict=" << verdict_word(verdict.kind)
                      << " rule=" << (verdict.rule.empty() ? "-" : verdict.rule)
                      << "\n"
                      << "status " << status_word(r.status) << "\n"
                      << "nodes " << r.nodes << "\n"
                      << "found " << r.found << "\n";
            long long type2 = 0;
            for (const SearchSolution& sol : r.solutions)
                if (!sol.type1) ++type2;
            std::cout << "type2 " << type2 << "\n";
            int i = 0;
            for (const SearchSolution& sol : r.solutions) {
                std::cout << "solution " << ++i
                          << " type1=" << (sol.type1 ? "yes" : "no") << "\n";
                if (out_dir.empty()) std::cout << serialize_design(sol.design);
            }
            if (!out_dir.empty()) write_solutions(out_dir, t, r.solutions, file_no, manifest);
        }
        std::cerr << "wall " << wall << "s\n";
    } else {
        const Type2Report rep = search_type2(lambda, v_cap, limits, prunes, jobs);
        std::cout << "search-type2 lambda=" << lambda << " v-cap=" << v_cap << "\n";
        long long type2_total = 0;
        for (const Type2Row& row : rep.rows) {
            std::cout << "tuple " << tuple_line(row.tuple)
                      << " verdict=" << verdict_word(row.verdict.kind)
                      << " rule=" << (row.verdict.rule.empty() ? "-" : row.verdict.rule)
                      << " status=" << status_word(row.status)
                      << " found=" << row.solutions << " type2=" << row.type2
                      << " nodes=" << row.nodes << "\n";
            type2_total += row.type2;
        }
        std::cout << "type2-total " << type2_total << "\n"
                  << "complete " << (rep.all_complete ? "yes" : "no") << "\n";
    }

    if (!out_dir.empty() && file_no > 0) {
        const std::filesystem::path path =
            std::filesystem::path(out_dir) / "manifest.tsv";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << manifest.str();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for Ryser designs"};
    app.set_version_flag("--version", std::string("ryserlab 0.1.0"));
    app.require_subcommand(1);

    int jobs = 1;
    app.add_option("--jobs,-j", jobs,
                   "worker threads: 1 serial, 0 all cores, N fixed")
        ->capture_default_str();

    std::string cat_name;
    CLI::App* cat = app.add_subcommand("catalog", "list or print built-in designs");
    cat->add_option("--name", cat_name, "entry to print as a design file");

    std::string cls_file = "-";
    CLI::App* cls = app.add_subcommand("classify", "classify a design file");
    cls->add_option("file", cls_file, "design file, - for stdin");

    std::string comp_file = "-";
    int comp_block = -1;
    CLI::App* comp = app.add_subcommand("complement", "complement at a block");
    comp->add_option("file", comp_file, "design file, - for stdin");
    comp->add_option("--block", comp_block, "block index to complement at")
        ->required();

    std::string inv_file = "-";
    CLI::App* inv = app.add_subcommand("invariants", "print structure invariants");
    inv->add_option("file", inv_file, "design file, - for stdin");

    std::string ver_file = "-";
    CLI::App* ver = app.add_subcommand("verify", "run the invariant check suite");
    ver->add_option("file", ver_file, "design file, - for stdin");

    long long scan_lo = 0, scan_hi = 0;
    bool scan_relaxed = false;
    CLI::App* scan = app.add_subcommand("scan", "enumerate and vet parameter tuples");
    scan->fallthrough();
    scan->add_option("--lambda-min", scan_lo, "first lambda")->required();
    scan->add_option("--lambda-max", scan_hi, "last lambda")->required();
    scan->add_flag("--relaxed", scan_relaxed, "keep tuples with negative x or y");

    long long se_lambda = 0, se_v = 0, se_vcap = 0;
    SearchLimits se_limits;
    PruneToggles se_prunes;
    bool no_p1 = false, no_p2 = false, no_p3 = false;
    std::string se_out;
    CLI::App* se = app.add_subcommand("search", "search for designs by parameters");
    se->fallthrough();
    se->add_option("--lambda", se_lambda, "pair count")->required();
    CLI::Option* opt_v =
        se->add_option("--v", se_v, "point count: search every tuple at (lambda, v)");
    CLI::Option* opt_cap = se->add_option(
        "--v-cap", se_vcap, "sweep all surviving tuples with v <= cap");
    opt_v->excludes(opt_cap);
    opt_cap->excludes(opt_v);
    se->add_option("--max-solutions", se_limits.max_solutions,
                   "stop a task after this many solutions");
    se->add_option("--node-budget", se_limits.node_budget,
                   "per-task node limit, 0 unlimited");
    se->add_option("--budget-secs", se_limits.budget_secs,
                   "per-task wall clock limit, timing-dependent");
    se->add_option("--point-cap", se_limits.point_cap,
                   "refuse instances with more points than this")
        ->capture_default_str();
    se->add_option("--out", se_out, "directory for solution files and manifest");
    se->add_flag("--no-colsum-prune", no_p1, "disable replication commitment pruning");
    se->add_flag("--no-tau-prune", no_p2, "disable per-block point class pruning");
    se->add_flag("--no-multiset-prune", no_p3, "disable size completion pruning");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    se_prunes.column_sums = !no_p1;
    se_prunes.tau_bounds = !no_p2;
    se_prunes.size_multiset = !no_p3;

    try {
        if (cat->parsed()) return run_catalog(cat_name);
        if (cls->parsed()) return run_classify(cls_file);
        if (comp->parsed()) return run_complement(comp_file, comp_block);
        if (inv->parsed()) return run_invariants(inv_file);
        if (ver->parsed()) return run_verify(ver_file);
        if (scan->parsed()) return run_scan(scan_lo, scan_hi, scan_relaxed, jobs);
        if (se->parsed()) {
            if (se_v == 0 && se_vcap == 0)
                return fail_usage("search needs --v or --v-cap");
            return run_search(se_lambda, se_v, se_vcap, se_limits, se_prunes,
                              se_out, jobs);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ", column "
                  << e.col << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
