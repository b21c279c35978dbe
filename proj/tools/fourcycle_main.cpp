// Command-line front end: construct / profile / free / detect / solve /
// classify / foldout / growth. Exit codes: 0 success, 1 domain error,
// 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fourcycle/canonical.hpp"
#include "fourcycle/classify.hpp"
#include "fourcycle/construct.hpp"
#include "fourcycle/detect.hpp"
#include "fourcycle/growth.hpp"
#include "fourcycle/solve.hpp"
#include "fourcycle/tripartition.hpp"
#include "fourcycle/triple_system.hpp"

using json = nlohmann::json;
using namespace fourcycle;

namespace {

FamilySubset parse_family_or_throw(const std::string& csv) {
    auto fam = FamilySubset::parse(csv);
    if (!fam) throw std::invalid_argument("cannot parse family list: " + csv);
    return *fam;
}

// CLI arguments may name a built-in configuration (F1..F7) or a .tsys file.
TripleSystem load_source(const std::string& arg) {
    if (auto cls = pattern_from_name(arg)) return pattern_configuration(*cls);
    return read_system_file(arg);
}

void print_embedding(std::ostream& out, const Embedding& e) {
    out << "witness.base " << e.base[0] << ' ' << e.base[1] << ' ' << e.base[2] << ' '
        << e.base[3] << '\n';
    out << "witness.apex";
    for (int i = 0; i < 4; ++i) out << " w" << i + 1 << '=' << e.apex[static_cast<size_t>(i)];
    out << '\n';
    out << "witness.blocks";
    for (const auto& [block, w] : e.apex_by_block()) {
        out << " {";
        for (size_t i = 0; i < block.size(); ++i) out << (i ? "," : "") << block[i];
        out << "}=" << w;
    }
    out << '\n';
}

json embedding_json(const Embedding& e) {
    json j;
    j["base"] = e.base;
    j["apex"] = e.apex;
    j["class"] = pattern_name(e.cls);
    return j;
}

void write_report(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

// ---- construct --------------------------------------------------------------

struct ConstructArgs {
    std::string name, out, report;
    ConstructionParams params;
    int n = -1, m = -1, q = -1;
    bool verify = false, no_verify = false;
};

int run_construct(ConstructArgs& args) {
    if (args.n >= 0) args.params.n = args.n;
    if (args.m >= 0) args.params.m = args.m;
    if (args.q >= 0) args.params.q = args.q;
    BuiltConstruction built = run_construction(args.name, args.params);

    std::ostringstream rep;
    rep << "construction " << args.name << '\n';
    rep << "params " << built.params_text << '\n';
    if (args.name == "anti_pasch_sts") {
        rep << "nodes " << built.nodes << '\n';
        rep << "search-exhausted " << (built.exhausted ? "true" : "false") << '\n';
    }
    if (!built.found) {
        rep << "result NotFound\n";
        std::cout << rep.str();
        std::cerr << args.name << ": no system found"
                  << (built.exhausted ? " (search exhausted)" : " (budget hit)") << '\n';
        return 1;
    }
    const TripleSystem& sys = built.system;
    rep << "n " << sys.vertex_count() << '\n';
    rep << "edges " << sys.triple_count() << '\n';
    rep << "claimed-profile " << built.spec.claimed_profile.to_string() << '\n';

    bool do_verify =
        !args.no_verify &&
        (args.verify || (sys.vertex_count() <= 100 && sys.triple_count() <= 50000));
    bool ok = true;
    if (do_verify) {
        Profile prof = profile(sys);
        rep << "profile " << prof.present.to_string() << '\n';
        ok = prof.present.subset_of(built.spec.claimed_profile);
        rep << "profile-within-claim " << (ok ? "true" : "false") << '\n';
    } else {
        rep << "profile skipped (size; run with --verify to force)\n";
    }

    if (!args.out.empty()) {
        write_system_file(sys, args.out);
        std::ofstream side(args.out + ".report");
        side << rep.str();
    }
    std::cout << rep.str();
    if (!args.report.empty()) {
        json j{{"construction", args.name},
               {"params", built.params_text},
               {"n", sys.vertex_count()},
               {"edges", sys.triple_count()},
               {"claimed_profile", built.spec.claimed_profile.to_string()}};
        write_report(args.report, j);
    }
    if (!ok) {
        std::cerr << "detector found classes outside the claimed profile\n";
        return 1;
    }
    return 0;
}

// ---- profile / free / detect -----------------------------------------------

int run_profile(const std::string& file, const std::string& report) {
    TripleSystem sys = load_source(file);
    Profile prof = profile(sys);
    std::cout << "system " << file << '\n';
    std::cout << "n " << sys.vertex_count() << '\n';
    std::cout << "edges " << sys.triple_count() << '\n';
    std::cout << "present " << prof.present.to_string() << '\n';
    for (PatternClass c : prof.present.members()) {
        std::cout << "class " << pattern_name(c) << '\n';
        print_embedding(std::cout, *prof.witness_for(c));
    }
    if (!report.empty()) {
        json j{{"system", file},
               {"n", sys.vertex_count()},
               {"edges", sys.triple_count()},
               {"present", prof.present.to_string()}};
        for (PatternClass c : prof.present.members())
            j["witness"][pattern_name(c)] = embedding_json(*prof.witness_for(c));
        write_report(report, j);
    }
    return 0;
}

int run_free(const std::string& file, const std::string& forbid) {
    FamilySubset fam = parse_family_or_throw(forbid);
    TripleSystem sys = load_source(file);
    Profile prof = profile(sys);
    FamilySubset hit = prof.present.intersect(fam);
    if (hit.empty()) {
        std::cout << "free\n";
    } else {
        std::cout << "not free\n";
        std::cout << "violations " << hit.to_string() << '\n';
    }
    return 0;
}

int run_detect(const std::string& file, const std::string& pattern_arg, int limit, bool count,
               const std::string& report) {
    TripleSystem sys = load_source(file);
    std::vector<PatternClass> classes;
    if (!pattern_arg.empty()) {
        auto c = pattern_from_name(pattern_arg);
        if (!c) throw std::invalid_argument("unknown pattern: " + pattern_arg);
        classes.push_back(*c);
    } else {
        for (PatternClass c : all_patterns()) classes.push_back(c);
    }
    json j{{"system", file}};
    std::cout << "system " << file << '\n';
    for (PatternClass c : classes) {
        std::optional<int> lim;
        if (!count) lim = limit > 0 ? limit : 1;
        else if (limit > 0) lim = limit;
        auto embs = find_embeddings(sys, c, lim);
        std::cout << "class " << pattern_name(c) << '\n';
        std::cout << "present " << (embs.empty() ? "false" : "true") << '\n';
        if (count) std::cout << "count " << embs.size() << '\n';
        if (!embs.empty()) print_embedding(std::cout, embs.front());
        json cj{{"present", !embs.empty()}};
        if (count) cj["count"] = embs.size();
        if (!embs.empty()) cj["witness"] = embedding_json(embs.front());
        j["classes"][pattern_name(c)] = cj;
    }
    if (!report.empty()) write_report(report, j);
    return 0;
}

// ---- solve -------------------------------------------------------------------

int run_solve(int n, const std::string& forbid, const std::string& mode, uint64_t budget,
              int threads, bool isomorph, const std::string& out, const std::string& cache,
              const std::string& report) {
    FamilySubset fam = parse_family_or_throw(forbid);
    if (fam.empty()) throw std::invalid_argument("--forbid must name at least one class");

    if (!cache.empty() && out.empty()) {
        std::ifstream in(cache);
        int cn, cmask, cvalue, ccomplete;
        while (in >> cn >> cmask >> cvalue >> ccomplete) {
            if (cn == n && cmask == fam.mask() && ccomplete == 1) {
                std::cout << "n " << n << '\n';
                std::cout << "forbid " << fam.to_string() << '\n';
                std::cout << "value " << cvalue << '\n';
                std::cout << "complete true\n";
                std::cout << "cached true\n";
                return 0;
            }
        }
    }

    SolveResult res;
    if (mode == "brute") {
        res = turan_bruteforce(n, fam);
    } else if (mode == "exact") {
        SolveOptions opts;
        opts.node_budget = budget;
        opts.threads = threads;
        opts.isomorph_reject = isomorph;
        res = turan_exact(n, fam, opts);
    } else {
        throw std::invalid_argument("--mode must be exact or brute");
    }

    std::cout << "n " << res.n << '\n';
    std::cout << "forbid " << fam.to_string() << '\n';
    std::cout << "value " << res.value << '\n';
    std::cout << "nodes " << res.nodes << '\n';
    std::cout << "mode " << (res.mode == SolveMode::brute_force ? "brute" : "exact") << '\n';
    std::cout << "complete " << (res.complete ? "true" : "false") << '\n';
    if (!res.complete) std::cout << "note value is a lower bound; node budget exhausted\n";
    if (!out.empty()) {
        write_system_file(res.witness, out);
        std::cout << "witness " << out << '\n';
    }
    if (!cache.empty() && res.complete) {
        std::ofstream cf(cache, std::ios::app);
        cf << n << ' ' << static_cast<int>(fam.mask()) << ' ' << res.value << " 1\n";
    }
    if (!report.empty()) {
        json j{{"n", res.n},           {"forbid", fam.to_string()},
               {"value", res.value},   {"nodes", res.nodes},
               {"complete", res.complete}};
        write_report(report, j);
    }
    return 0;
}

// ---- classify -----------------------------------------------------------------

void print_row(std::ostream& out, const ClassificationStatus& row) {
    out << std::left << std::setw(5) << static_cast<int>(row.subset.mask()) << std::setw(22)
        << row.subset.to_string() << std::setw(13) << status_name(row.status) << std::setw(20)
        << rule_name(row.rule) << std::setw(34) << row.lower.to_string() << std::setw(44)
        << row.upper.to_string();
    if (row.open_group > 0) out << "group " << row.open_group;
    out << '\n';
}

int run_classify(bool all, const std::string& set, bool audit, const std::string& report) {
    if (!all && set.empty())
        throw std::invalid_argument("classify needs --all or --set F...");

    if (!set.empty()) {
        ClassificationStatus row = classify_subset(parse_family_or_throw(set));
        std::cout << "subset " << row.subset.to_string() << '\n';
        std::cout << "status " << status_name(row.status) << '\n';
        std::cout << "rule " << rule_name(row.rule) << '\n';
        std::cout << "lower " << row.lower.to_string() << '\n';
        std::cout << "upper " << row.upper.to_string() << '\n';
        if (row.open_group > 0) std::cout << "open-group " << row.open_group << '\n';
        for (const auto& note : row.notes) std::cout << "note " << note << '\n';
        return 0;
    }

    ClassificationTable table = classification_table();
    std::cout << std::left << std::setw(5) << "mask" << std::setw(22) << "members"
              << std::setw(13) << "status" << std::setw(20) << "rule" << std::setw(34)
              << "lower" << std::setw(44) << "upper" << '\n';
    for (const auto& row : table.rows) print_row(std::cout, row);

    auto hist = table.status_histogram();
    std::cout << "histogram THETA_N_3_2=" << hist[1] << " THETA_N_2=" << hist[3]
              << " OPEN=" << hist[4] << " ALL_TRIPLES=" << hist[0]
              << " THETA_N_5_2=" << hist[2] << '\n';
    std::cout << "histogram-compact " << hist[1] << ' ' << hist[3] << ' ' << hist[4] << ' '
              << hist[0] << ' ' << hist[2] << '\n';
    auto rules = table.rule_counts();
    std::cout << "rule-counts star-lower=" << rules[ClassifyRule::STAR_LOWER]
              << " matching-lower=" << rules[ClassifyRule::MATCHING_LOWER]
              << " anti-pasch-lower=" << rules[ClassifyRule::ANTI_PASCH_LOWER]
              << " projective-lower=" << rules[ClassifyRule::PROJECTIVE_LOWER] << '\n';
    auto groups = table.open_group_sizes();
    std::cout << "open-group-sizes";
    for (int g : groups) std::cout << ' ' << g;
    std::cout << '\n';

    int audit_failures = -1;
    if (audit) {
        AuditReport rep = consistency_audit(table);
        audit_failures = rep.failures;
        std::cout << "audit-checks " << rep.checks.size() << '\n';
        std::cout << "audit-failures " << rep.failures << '\n';
        for (const auto& check : rep.checks)
            if (!check.ok)
                std::cout << "audit-violation subset=" << check.subset.to_string()
                          << " witness=" << check.witness << '\n';
    }

    if (!report.empty()) {
        json rows = json::array();
        for (const auto& row : table.rows) {
            json r{{"mask", row.subset.mask()},
                   {"members", row.subset.to_string()},
                   {"status", status_name(row.status)},
                   {"rule", rule_name(row.rule)},
                   {"lower", row.lower.to_string()},
                   {"upper", row.upper.to_string()}};
            if (row.open_group > 0) r["open_group"] = row.open_group;
            if (!row.notes.empty()) r["notes"] = row.notes;
            rows.push_back(r);
        }
        json j{{"rows", rows},
               {"histogram",
                {{"THETA_N_3_2", hist[1]},
                 {"THETA_N_2", hist[3]},
                 {"OPEN", hist[4]},
                 {"ALL_TRIPLES", hist[0]},
                 {"THETA_N_5_2", hist[2]}}}};
        if (audit_failures >= 0) j["audit_failures"] = audit_failures;
        write_report(report, j);
    }
    return audit_failures > 0 ? 1 : 0;
}

// ---- foldout -------------------------------------------------------------------

int run_foldout(const std::string& source, const std::string& of, const std::string& out_prefix) {
    if (!of.empty()) {
        TripleSystem g1 = load_source(source);
        TripleSystem g = load_source(of);
        bool yes = is_fold_out(g1, g);
        std::cout << source << " is a fold-out of " << of << ": " << (yes ? "true" : "false")
                  << '\n';
        return 0;
    }
    TripleSystem g = load_source(source);
    auto outs = fold_outs(g);
    std::cout << "fold-outs " << outs.size() << '\n';
    for (size_t i = 0; i < outs.size(); ++i) {
        std::cout << "foldout " << i << " n " << outs[i].vertex_count() << " edges "
                  << outs[i].triple_count() << '\n';
        if (!out_prefix.empty())
            write_system_file(outs[i], out_prefix + std::to_string(i) + ".tsys");
    }
    return 0;
}

// ---- growth --------------------------------------------------------------------

int run_growth(const std::string& construction, const std::string& grid_csv, int seeds,
               uint64_t seed0, const std::string& report) {
    std::vector<int> grid;
    std::stringstream ss(grid_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) grid.push_back(std::stoi(tok));
    }
    GrowthSeries series = growth_series(construction, grid, seeds, seed0);
    std::cout << "construction " << series.construction << '\n';
    for (const auto& p : series.points)
        std::cout << "point param=" << p.param << " n=" << p.n << " edges=" << p.edges << '\n';
    std::cout << "seeds " << series.per_seed_slopes.size() << '\n';
    for (double s : series.per_seed_slopes) std::cout << "seed-slope " << s << '\n';
    std::cout << "slope " << series.mean_slope << '\n';
    std::cout << "intercept " << series.intercept << '\n';
    std::cout << "rms-residual " << series.rms_residual << '\n';
    if (series.excluded_smallest) std::cout << "smallest-point-excluded true\n";
    if (!report.empty()) {
        json pts = json::array();
        for (const auto& p : series.points)
            pts.push_back({{"param", p.param}, {"n", p.n}, {"edges", p.edges}});
        json j{{"construction", series.construction},
               {"points", pts},
               {"per_seed_slopes", series.per_seed_slopes},
               {"slope", series.mean_slope},
               {"intercept", series.intercept},
               {"excluded_smallest", series.excluded_smallest}};
        write_report(report, j);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triple-system four-cycle toolkit"};
    app.require_subcommand(1);

    // construct
    ConstructArgs cargs;
    auto* construct_cmd = app.add_subcommand("construct", "generate a named construction");
    construct_cmd->add_option("name", cargs.name, "construction name")->required();
    construct_cmd->add_option("--n", cargs.n, "vertex-count parameter");
    construct_cmd->add_option("--m", cargs.m, "size parameter");
    construct_cmd->add_option("--q", cargs.q, "prime order parameter");
    construct_cmd->add_option("--seed", cargs.params.seed, "random seed (default 0)");
    construct_cmd->add_option("--budget", cargs.params.budget, "search node budget");
    construct_cmd->add_option("-o,--out", cargs.out, "output .tsys path");
    construct_cmd->add_flag("--verify", cargs.verify, "force the detector profile");
    construct_cmd->add_flag("--no-verify", cargs.no_verify, "skip the detector profile");
    construct_cmd->add_option("--report", cargs.report, "structured report path");

    // profile
    std::string profile_file, profile_report;
    auto* profile_cmd = app.add_subcommand("profile", "which classes embed in a system");
    profile_cmd->add_option("file", profile_file, ".tsys file or F1..F7")->required();
    profile_cmd->add_option("--report", profile_report, "structured report path");

    // free
    std::string free_file, free_forbid;
    auto* free_cmd = app.add_subcommand("free", "test freeness against a family");
    free_cmd->add_option("file", free_file, ".tsys file or F1..F7")->required();
    free_cmd->add_option("--forbid", free_forbid, "comma-separated classes")->required();

    // detect
    std::string detect_file, detect_pattern, detect_report;
    int detect_limit = 0;
    bool detect_count = false;
    auto* detect_cmd = app.add_subcommand("detect", "find embeddings of the seven classes");
    detect_cmd->add_option("file", detect_file, ".tsys file or F1..F7")->required();
    detect_cmd->add_option("--pattern", detect_pattern, "restrict to one class");
    detect_cmd->add_option("--limit", detect_limit, "stop after this many embeddings");
    detect_cmd->add_flag("--count", detect_count, "enumerate and count embeddings");
    detect_cmd->add_option("--report", detect_report, "structured report path");

    // solve
    int solve_n = 0, solve_threads = 1;
    std::string solve_forbid, solve_mode = "exact", solve_out, solve_cache, solve_report;
    uint64_t solve_budget = SolveOptions{}.node_budget;
    bool solve_isomorph = false;
    auto* solve_cmd = app.add_subcommand("solve", "exact Turán number for small n");
    solve_cmd->add_option("--n", solve_n, "vertex count")->required();
    solve_cmd->add_option("--forbid", solve_forbid, "comma-separated classes")->required();
    solve_cmd->add_option("--mode", solve_mode, "exact | brute");
    solve_cmd->add_option("--budget", solve_budget, "search node budget");
    solve_cmd->add_option("--threads", solve_threads, "worker threads");
    solve_cmd->add_flag("--isomorph", solve_isomorph, "orderly isomorph rejection");
    solve_cmd->add_option("-o,--out", solve_out, "write the witness system here");
    solve_cmd->add_option("--cache", solve_cache, "plain-text result cache file");
    solve_cmd->add_option("--report", solve_report, "structured report path");

    // classify
    bool classify_all = false, classify_audit = false;
    std::string classify_set, classify_report;
    auto* classify_cmd = app.add_subcommand("classify", "order of magnitude for subsets of F");
    classify_cmd->add_flag("--all", classify_all, "classify all 128 subsets");
    classify_cmd->add_option("--set", classify_set, "classify one subset");
    classify_cmd->add_flag("--audit", classify_audit, "detector-check all lower-bound witnesses");
    classify_cmd->add_option("--report", classify_report, "structured report path");

    // foldout
    std::string foldout_source, foldout_of, foldout_out;
    auto* foldout_cmd = app.add_subcommand("foldout", "fold-out systems and relations");
    foldout_cmd->add_option("source", foldout_source, ".tsys file or F1..F7")->required();
    foldout_cmd->add_option("--of", foldout_of, "test: source is a fold-out of this system");
    foldout_cmd->add_option("-o,--out", foldout_out, "write fold-outs with this path prefix");

    // growth
    std::string growth_name, growth_grid, growth_report;
    int growth_seeds = 1;
    uint64_t growth_seed = 0;
    auto* growth_cmd = app.add_subcommand("growth", "fit the growth exponent of a construction");
    growth_cmd->add_option("construction", growth_name, "construction name")->required();
    growth_cmd->add_option("--grid", growth_grid, "comma-separated parameter grid")->required();
    growth_cmd->add_option("--seeds", growth_seeds, "seeds per grid point");
    growth_cmd->add_option("--seed", growth_seed, "base seed (default 0)");
    growth_cmd->add_option("--report", growth_report, "structured report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (construct_cmd->parsed()) return run_construct(cargs);
        if (profile_cmd->parsed()) return run_profile(profile_file, profile_report);
        if (free_cmd->parsed()) return run_free(free_file, free_forbid);
        if (detect_cmd->parsed())
            return run_detect(detect_file, detect_pattern, detect_limit, detect_count,
                              detect_report);
        if (solve_cmd->parsed())
            return run_solve(solve_n, solve_forbid, solve_mode, solve_budget, solve_threads,
                             solve_isomorph, solve_out, solve_cache, solve_report);
        if (classify_cmd->parsed())
            return run_classify(classify_all, classify_set, classify_audit, classify_report);
        if (foldout_cmd->parsed()) return run_foldout(foldout_source, foldout_of, foldout_out);
        if (growth_cmd->parsed())
            return run_growth(growth_name, growth_grid, growth_seeds, growth_seed,
                              growth_report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
