#include "gallai/cli.hpp"

#include "gallai/constructions.hpp"
#include "gallai/decompose.hpp"
#include "gallai/detect.hpp"
#include "gallai/formulas.hpp"
#include "gallai/gcg.hpp"
#include "gallai/json_io.hpp"
#include "gallai/repro.hpp"
#include "gallai/search.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>

namespace gallai::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
    int exit = kHolds;
};

void emit(std::ostream& out, const Report& r)
{
    Json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["result"] = r.result;
    j["exit"] = r.exit;
    out << j.dump(2) << '\n';
}

PatternKind family_kind(const std::string& family)
{
    return family == "path-plus" ? PatternKind::PathPlus : PatternKind::StarPlus;
}

const std::vector<std::string> kFamilies{"star-plus", "path-plus"};

// construct ---------------------------------------------------------------

struct ConstructArgs {
    std::string family;
    std::size_t t = 0;
    std::size_t k = 0;
    std::string output;
};

Report cmd_construct(const ConstructArgs& a)
{
    Report r{"construct"};
    const ConstructionRecipe recipe = lower_bound_recipe(a.t, a.k);
    const ColoredCompleteGraph g = recipe.build();
    const std::string path =
        a.output.empty() ? a.family + "_t" + std::to_string(a.t) + "_k" + std::to_string(a.k) + ".gcg" : a.output;
    r.inputs = {{"family", a.family}, {"t", a.t}, {"k", a.k}, {"output", path}};
    write_text_file(path, encode_with_comment(g, "recipe: " + recipe.to_string()));
    r.result = {{"order", g.order()}, {"colors", g.colors()}, {"recipe", recipe.to_string()}, {"file", path}};
    return r;
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string input;
    std::string family = "both";
    std::size_t t = 0;
    bool rainbow_only = false;
};

Report cmd_verify(const VerifyArgs& a)
{
    Report r{"verify"};
    r.inputs = {{"input", a.input}, {"family", a.family}, {"t", a.t}, {"rainbow_only", a.rainbow_only}};
    const ColoredCompleteGraph g = read_gcg_file(a.input);
    const ColorAdjacency adj(g);
    r.result["order"] = g.order();
    r.result["colors"] = g.colors();

    bool violated = false;
    const auto rainbow = find_rainbow_triangle(g, adj);
    r.result["rainbow"] = rainbow ? to_json(*rainbow) : Json(nullptr);
    violated = violated || rainbow.has_value();

    if (!a.rainbow_only) {
        std::vector<std::string> families;
        if (a.family == "both") {
            families = kFamilies;
        } else {
            families = {a.family};
        }
        Json mono = Json::object();
        for (const std::string& f : families) {
            const auto hit = contains_pattern(adj, Pattern(family_kind(f), a.t));
            mono[f] = hit ? to_json(*hit) : Json(nullptr);
            violated = violated || hit.has_value();
        }
        r.result["monochromatic"] = std::move(mono);
    }
    r.result["holds"] = !violated;
    r.exit = violated ? kViolated : kHolds;
    return r;
}

// decompose ---------------------------------------------------------------

struct DecomposeArgs {
    std::string input;
    std::string reduced_output;
};

Report cmd_decompose(const DecomposeArgs& a)
{
    Report r{"decompose"};
    r.inputs = {{"input", a.input}};
    if (!a.reduced_output.empty()) {
        r.inputs["reduced_output"] = a.reduced_output;
    }
    const ColoredCompleteGraph g = read_gcg_file(a.input);
    try {
        const GallaiPartition p = gallai_partition(g);
        const PartitionCheck check = validate_partition(g, p);
        const ColoredCompleteGraph reduced = reduced_graph(g, p);
        r.result["partition"] = to_json(p);
        r.result["between_colors"] = p.between_colors;
        r.result["valid"] = check.ok;
        r.result["reduced"] = {{"order", reduced.order()}, {"colors", reduced.colors()}, {"gcg", encode(reduced)}};
        if (!a.reduced_output.empty()) {
            write_text_file(a.reduced_output, encode(reduced));
        }
        r.exit = check.ok ? kHolds : kViolated;
    } catch (const RainbowTrianglePresent& e) {
        r.result["rainbow"] = to_json(e.witness());
        r.exit = kViolated;
    }
    return r;
}

// ramsey ------------------------------------------------------------------

struct RamseyArgs {
    std::string family;
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t n_max = 0;
    std::uint64_t max_nodes = 1'000'000'000;
    double max_seconds = 7200;
    std::size_t jobs = 1;
    std::string witness_dir = ".";
    bool omit_timing = false;
};

Json trail_json(const std::vector<SearchOutcome>& trail, bool with_time)
{
    Json out = Json::array();
    for (const SearchOutcome& o : trail) {
        Json j{{"order", o.order}, {"verdict", o.verdict == Verdict::Witness ? "witness" : "exhausted"}};
        j.update(to_json(o.stats, with_time));
        out.push_back(std::move(j));
    }
    return out;
}

Report cmd_ramsey(const RamseyArgs& a)
{
    Report r{"ramsey"};
    const std::size_t s = a.s == 0 ? a.t : a.s;
    const std::size_t lo = std::min(s, a.t);
    const std::size_t hi = std::max(s, a.t);
    const std::size_t n_max = a.n_max == 0 ? 2 * hi + 2 : a.n_max;
    r.inputs = {{"family", a.family}, {"s", lo},           {"t", hi},
                {"n_max", n_max},     {"max_nodes", a.max_nodes}, {"jobs", a.jobs}};
    if (!a.omit_timing) {
        r.inputs["max_seconds"] = a.max_seconds;
    }
    if (lo < 3) {
        throw DomainError("ramsey requires s, t >= 3");
    }
    const PatternKind kind = family_kind(a.family);
    const std::string claim = "R(" + Pattern(kind, lo).to_string() + ", " + Pattern(kind, hi).to_string() +
                              ") = " + std::to_string(2 * hi - 1);
    r.result["claim"] = claim;

    SearchBudget budget;
    budget.max_nodes = a.max_nodes;
    budget.max_time = std::chrono::duration<double>(a.max_seconds);
    SearchOptions options;
    options.jobs = a.jobs;
    try {
        const std::size_t cap = std::min(n_max, PartialColoring::kMaxOrder);
        if (cap < 2) {
            throw DomainError("--n-max must be >= 2");
        }
        const Pattern pa(kind, lo);
        const Pattern pb(kind, hi);
        RamseyCertificate cert = ramsey_number(pa, pb, cap, budget, options);
        const std::uint64_t claimed = 2 * hi - 1;
        const std::string stem = "ramsey_" + a.family + "_s" + std::to_string(lo) + "_t" + std::to_string(hi);
        fs::create_directories(a.witness_dir);
        const fs::path witness_file = fs::path(a.witness_dir) / (stem + "_witness.gcg");
        const fs::path certificate_file = fs::path(a.witness_dir) / (stem + "_exhaustion.json");
        write_text_file(witness_file, encode_with_comment(cert.witness, "witness: 2-coloring of K_" +
                                                                            std::to_string(cert.value - 1) +
                                                                            " avoiding " + pa.to_string() +
                                                                            " in color 1 and " + pb.to_string() +
                                                                            " in color 2"));
        Json certificate{{"claim", claim},
                         {"value", cert.value},
                         {"exhausted_order", cert.exhaustion.order},
                         {"trail", trail_json(cert.trail, !a.omit_timing)}};
        write_text_file(certificate_file, certificate.dump(2) + "\n");

        r.result["claimed"] = claimed;
        r.result["value"] = cert.value;
        r.result["pass"] = cert.value == claimed;
        if (lo == 3) {
            r.result["divergence"] = "order-3 patterns are triangles: R = 6 here, while the 2t-1 form predicts " +
                                     std::to_string(claimed);
        }
        r.result["witness_file"] = witness_file.string();
        r.result["certificate_file"] = certificate_file.string();
        r.result.update(to_json(cert.total, !a.omit_timing));
        r.exit = cert.value == claimed ? kHolds : kViolated;
    } catch (const BudgetExhausted& e) {
        r.result["status"] = "budget-exhausted";
        r.result["order"] = e.order();
        r.result.update(to_json(e.stats(), !a.omit_timing));
        r.exit = kBudget;
    } catch (const NotFoundBelowCap& e) {
        r.result["status"] = "not-found-below-cap";
        r.result["message"] = e.what();
        r.exit = kViolated;
    }
    return r;
}

// formula -----------------------------------------------------------------

struct FormulaArgs {
    std::string which;
    std::string family = "star-plus";
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t n = 0;
};

Report cmd_formula(const FormulaArgs& a)
{
    Report r{"formula"};
    r.inputs["which"] = a.which;
    if (a.which == "gr") {
        r.inputs.update({{"family", a.family}, {"t", a.t}, {"k", a.k}});
        const FormulaValue v = evaluate_gr({family_kind(a.family), a.t, a.k});
        r.result = {{"value", v.value}, {"branch", v.branch}};
    } else if (a.which == "ramsey") {
        const std::size_t s = a.s == 0 ? a.t : a.s;
        r.inputs.update({{"family", a.family}, {"s", s}, {"t", a.t}});
        const FormulaValue v = evaluate_ramsey(family_kind(a.family), s, a.t);
        r.result = {{"value", v.value}, {"branch", v.branch}};
    } else if (a.which == "cycle") {
        r.inputs.update({{"m", a.m}, {"n", a.n}});
        const FormulaValue v = evaluate_cycle_ramsey(a.m, a.n);
        r.result = {{"value", v.value}, {"branch", v.branch}};
    } else {
        r.inputs.update({{"n", a.n}, {"k", a.k}});
        const auto [lower, upper] = even_cycle_gr_bounds(a.n, a.k);
        r.result = {{"lower", lower}, {"upper", upper}, {"branch", "(n-1)k+n+1 <= gr_k(K3:C_2n) <= (n-1)k+3n"}};
    }
    return r;
}

// random ------------------------------------------------------------------

struct RandomArgs {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::string kind = "gallai";
    std::string output;
};

Report cmd_random(const RandomArgs& a)
{
    Report r{"random"};
    const std::string path = a.output.empty() ? "random_" + a.kind + "_n" + std::to_string(a.n) + "_k" +
                                                    std::to_string(a.k) + "_s" + std::to_string(a.seed) + ".gcg"
                                              : a.output;
    r.inputs = {{"n", a.n}, {"k", a.k}, {"seed", a.seed}, {"kind", a.kind}, {"output", path}};
    const ColoredCompleteGraph g = a.kind == "gallai" ? random_gallai(a.n, a.k, a.seed) : random_coloring(a.n, a.k, a.seed);
    write_text_file(path, encode_with_comment(g, "random " + a.kind + " n=" + std::to_string(a.n) + " k=" +
                                                     std::to_string(a.k) + " seed=" + std::to_string(a.seed)));
    r.result = {{"order", g.order()}, {"colors", g.colors()}, {"file", path}};
    return r;
}

// repro -------------------------------------------------------------------

Report cmd_repro(const repro::Options& o, std::ostream& err)
{
    Report r{"repro"};
    r.inputs = {{"jobs", o.jobs},
                {"stretch", o.stretch},
                {"samples", o.statistical_samples},
                {"seed", o.seed},
                {"scratch", o.scratch_dir.string()}};
    const std::vector<repro::CriterionResult> results = repro::run_all(o, &err);
    Json table = Json::array();
    bool all = true;
    for (const auto& c : results) {
        table.push_back({{"id", c.id},
                         {"name", c.name},
                         {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")},
                         {"seconds", c.seconds},
                         {"detail", c.detail}});
        all = all && (c.passed || c.skipped);
    }
    r.result = {{"criteria", table}, {"all_passed", all}};
    r.exit = all ? kHolds : kViolated;
    return r;
}

} // namespace

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("GALLAI_FORGE_SEED"); env != nullptr && *env != '\0') {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            return 0;
        }
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gallai colorings: constructions, detectors, decomposition and Ramsey search", "gallai-forge"};
    app.require_subcommand(1);

    ConstructArgs construct;
    auto* sc = app.add_subcommand("construct", "Build a lower-bound coloring and write it as GCG");
    sc->add_option("--family", construct.family, "Target family")->required()->check(CLI::IsMember(kFamilies));
    sc->add_option("-t", construct.t, "Target order (>= 4)")->required();
    sc->add_option("-k", construct.k, "Number of colors (>= 1)")->required();
    sc->add_option("-o,--output", construct.output, "Output GCG path");

    VerifyArgs verify;
    auto* sv = app.add_subcommand("verify", "Check a coloring for rainbow triangles and monochromatic targets");
    sv->add_option("-i,--input,input", verify.input, "GCG file")->required();
    sv->add_option("--family", verify.family, "star-plus, path-plus or both")
        ->check(CLI::IsMember({"star-plus", "path-plus", "both"}));
    auto* vt = sv->add_option("-t", verify.t, "Target order (>= 3)");
    sv->add_flag("--rainbow-only", verify.rainbow_only, "Only look for rainbow triangles");

    DecomposeArgs decompose;
    auto* sd = app.add_subcommand("decompose", "Extract a Gallai partition and its reduced graph");
    sd->add_option("-i,--input,input", decompose.input, "GCG file")->required();
    sd->add_option("--reduced-output", decompose.reduced_output, "Write the reduced graph here as GCG");

    RamseyArgs ramsey;
    auto* sr = app.add_subcommand("ramsey", "Certify a 2-color Ramsey number by exhaustive search");
    sr->add_option("--family", ramsey.family, "Target family")->required()->check(CLI::IsMember(kFamilies));
    sr->add_option("-s", ramsey.s, "Smaller order (defaults to t)");
    sr->add_option("-t", ramsey.t, "Order")->required();
    sr->add_option("--n-max", ramsey.n_max, "Largest order to search (default 2t+2)");
    sr->add_option("--max-nodes", ramsey.max_nodes, "Node budget for the whole sweep");
    sr->add_option("--max-seconds", ramsey.max_seconds, "Time budget for the whole sweep");
    sr->add_option("--jobs", ramsey.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sr->add_option("--witness-dir", ramsey.witness_dir, "Directory for certificate files");
    sr->add_flag("--omit-timing", ramsey.omit_timing, "Leave wall-clock fields out of the report");

    FormulaArgs formula;
    auto* sf = app.add_subcommand("formula", "Evaluate a closed form");
    sf->add_option("which", formula.which, "gr, ramsey, cycle or even-cycle")
        ->required()
        ->check(CLI::IsMember({"gr", "ramsey", "cycle", "even-cycle"}));
    sf->add_option("--family", formula.family)->check(CLI::IsMember(kFamilies));
    sf->add_option("-s", formula.s);
    sf->add_option("-t", formula.t);
    sf->add_option("-k", formula.k);
    sf->add_option("-m", formula.m);
    sf->add_option("-n", formula.n);

    RandomArgs random;
    random.seed = default_seed();
    auto* sx = app.add_subcommand("random", "Sample a random coloring");
    sx->add_option("-n", random.n, "Order")->required();
    sx->add_option("-k", random.k, "Number of colors")->required();
    sx->add_option("--seed", random.seed, "Seed (default: $GALLAI_FORGE_SEED or 0)");
    sx->add_option("--kind", random.kind, "gallai (rainbow-free) or uniform")
        ->check(CLI::IsMember({"gallai", "uniform"}));
    sx->add_option("-o,--output", random.output, "Output GCG path");

    repro::Options repro_options;
    repro_options.seed = default_seed();
    bool skip_stretch = false;
    std::string scratch;
    auto* sp = app.add_subcommand("repro", "Run the full acceptance matrix");
    sp->add_option("--jobs", repro_options.jobs, "Worker threads for the stretch search")->check(CLI::PositiveNumber);
    sp->add_flag("--skip-stretch", skip_stretch, "Skip the t = 5 certification");
    sp->add_option("--samples", repro_options.statistical_samples, "Random colorings for the statistical check");
    sp->add_option("--seed", repro_options.seed, "Base seed (default: $GALLAI_FORGE_SEED or 0)");
    sp->add_option("--scratch", scratch, "Directory for intermediate files");

    std::vector<const char*> argv;
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (sv->parsed() && !verify.rainbow_only && vt->count() == 0) {
            throw CLI::RequiredError("-t (unless --rainbow-only)");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kHolds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        Report r{"usage"};
        r.result = {{"error", e.what()}};
        r.exit = kUsage;
        emit(out, r);
        return kUsage;
    }

    std::string name = "unknown";
    std::function<Report()> action;
    if (sc->parsed()) {
        name = "construct";
        action = [&] { return cmd_construct(construct); };
    } else if (sv->parsed()) {
        name = "verify";
        action = [&] { return cmd_verify(verify); };
    } else if (sd->parsed()) {
        name = "decompose";
        action = [&] { return cmd_decompose(decompose); };
    } else if (sr->parsed()) {
        name = "ramsey";
        action = [&] { return cmd_ramsey(ramsey); };
    } else if (sf->parsed()) {
        name = "formula";
        action = [&] { return cmd_formula(formula); };
    } else if (sx->parsed()) {
        name = "random";
        action = [&] { return cmd_random(random); };
    } else {
        name = "repro";
        repro_options.stretch = !skip_stretch;
        if (!scratch.empty()) {
            repro_options.scratch_dir = scratch;
        }
        action = [&] { return cmd_repro(repro_options, err); };
    }

    try {
        const Report r = action();
        emit(out, r);
        return r.exit;
    } catch (const std::exception& e) {
        err << name << ": " << e.what() << '\n';
        Report r{name};
        r.result = {{"error", e.what()}};
        r.exit = kUsage;
        emit(out, r);
        return kUsage;
    }
}

} // namespace gallai::cli
