#include "gallai/repro.hpp"

#include "gallai/cli.hpp"
#include "gallai/constructions.hpp"
#include "gallai/decompose.hpp"
#include "gallai/detect.hpp"
#include "gallai/formulas.hpp"
#include "gallai/gcg.hpp"
#include "gallai/oracle.hpp"
#include "gallai/rng.hpp"
#include "gallai/search.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gallai::repro {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

CriterionResult start(int id, std::string name)
{
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    return r;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string read_bytes(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct CliRun {
    int exit;
    std::string out;
};

CliRun cli_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "gallai-forge");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

bool avoids_both(const ColoredCompleteGraph& g, const Pattern& red, const Pattern& blue)
{
    const ColorAdjacency adj(g);
    return !contains_pattern(adj, red, Color{1}) && !contains_pattern(adj, blue, Color{2});
}

// Each color class of a 2-colored K5 is a single 5-cycle.
bool is_pentagon(const ColoredCompleteGraph& g)
{
    if (g.order() != 5 || used_colors(g).size() != 2) {
        return false;
    }
    for (Color c : used_colors(g)) {
        Vertex prev = 0;
        Vertex cur = 0;
        for (int step = 0; step < 5; ++step) {
            const VertexSet nb = neighbors_in_color(g, cur, c);
            if (nb.count() != 2) {
                return false;
            }
            const Vertex a = nb.first();
            const Vertex b = nb.next(a + 1);
            const Vertex next = (step == 0 || a != prev) ? a : b;
            prev = cur;
            cur = next;
            if (cur == 0 && step < 4) {
                return false;
            }
        }
        if (cur != 0) {
            return false;
        }
    }
    return true;
}

std::string fmt_seconds(double s)
{
    std::ostringstream o;
    o << std::fixed << std::setprecision(s < 1 ? 4 : 1) << s;
    return o.str();
}

// 1 -----------------------------------------------------------------------

CriterionResult ramsey_t4(const Options&)
{
    CriterionResult r = start(1, "Ramsey certification t=4 (star-plus, path-plus) = 7");
    const auto t0 = Clock::now();
    SearchOptions single;
    single.jobs = 1;
    std::ostringstream detail;
    bool ok = true;
    for (const Pattern p : {Pattern::star_plus(4), Pattern::path_plus(4)}) {
        const RamseyCertificate cert = ramsey_number(p, p, 12, SearchBudget{}, single);
        const bool good = cert.value == 7 && cert.witness.order() == 6 && avoids_both(cert.witness, p, p) &&
                          cert.exhaustion.verdict == Verdict::Exhausted && cert.exhaustion.order == 7;
        ok = ok && good;
        detail << p.to_string() << ": value " << cert.value << ", K6 witness "
               << (avoids_both(cert.witness, p, p) ? "valid" : "INVALID") << ", K7 exhausted after "
               << cert.exhaustion.stats.nodes << " nodes; ";
    }
    r.seconds = since(t0);
    r.passed = ok && r.seconds < 60.0;
    detail << "limit 60 s";
    r.detail = detail.str();
    return r;
}

// 2 -----------------------------------------------------------------------

CriterionResult ramsey_t3(const Options& o)
{
    CriterionResult r = start(2, "Ramsey t=3 divergence: R(K3,K3) = 6");
    const auto t0 = Clock::now();
    const Pattern k3 = Pattern::clique(3);
    const RamseyCertificate cert = ramsey_number(k3, k3, 8, SearchBudget{});
    const double search_seconds = since(t0);
    const bool pentagon = is_pentagon(cert.witness) && avoids_both(cert.witness, k3, k3);

    const ClaimReport claim = verify_paper_claims(3, PatternKind::StarPlus, SearchBudget{});
    const bool flagged = claim.divergence.has_value() && claim.value == 6 && claim.claimed == 5 && !claim.pass;

    const fs::path dir = o.scratch_dir / "criterion2";
    fs::create_directories(dir);
    const CliRun run = cli_run({"ramsey", "--family", "star-plus", "-t", "3", "--witness-dir", dir.string()});
    const auto report = nlohmann::json::parse(run.out);
    const bool cli_flagged = report["result"].contains("divergence") && report["result"]["value"] == 6;

    r.seconds = since(t0);
    r.passed = cert.value == 6 && pentagon && flagged && cli_flagged && search_seconds < 1.0;
    r.detail = "value " + std::to_string(cert.value) + ", witness " + (pentagon ? "is" : "is NOT") +
               " the pentagon, divergence " + (flagged && cli_flagged ? "flagged" : "NOT flagged") + " (claimed " +
               std::to_string(claim.claimed) + "), search " + fmt_seconds(search_seconds) + " s, limit 1 s";
    return r;
}

// 3 -----------------------------------------------------------------------

CriterionResult ramsey_t5(const Options& o)
{
    CriterionResult r = start(3, "Stretch certification t=5 = 9");
    if (!o.stretch) {
        r.skipped = true;
        r.detail = "skipped (--skip-stretch)";
        return r;
    }
    const auto t0 = Clock::now();
    SearchBudget budget;
    budget.max_nodes = 1'000'000'000;
    budget.max_time = std::chrono::hours(2);
    SearchOptions parallel;
    parallel.jobs = std::max<std::size_t>(4, o.jobs);

    struct Case {
        PatternKind family;
        std::size_t s;
        std::size_t t;
    };
    std::ostringstream detail;
    bool ok = true;
    for (const Case c : {Case{PatternKind::StarPlus, 5, 5}, Case{PatternKind::PathPlus, 5, 5},
                         Case{PatternKind::PathPlus, 4, 5}}) {
        const std::string label = "R(" + Pattern(c.family, c.s).to_string() + "," + Pattern(c.family, c.t).to_string() + ")";
        try {
            const ClaimReport rep = verify_paper_claims(c.family, c.s, c.t, budget, parallel);
            const bool good = rep.value == 9 && rep.pass &&
                              avoids_both(rep.certificate.witness, rep.certificate.p_red, rep.certificate.p_blue);
            ok = ok && good;
            detail << label << " = " << rep.value << " (" << rep.certificate.total.nodes << " nodes); ";
        } catch (const BudgetExhausted& e) {
            ok = false;
            detail << label << ": BUDGET EXHAUSTED at order " << e.order() << " after " << e.stats().nodes
                   << " nodes; ";
        }
    }
    r.seconds = since(t0);
    r.passed = ok;
    detail << "jobs " << parallel.jobs << ", budget 1e9 nodes / 2 h";
    r.detail = detail.str();
    return r;
}

// 4 -----------------------------------------------------------------------

CriterionResult constructions(const Options& o)
{
    CriterionResult r = start(4, "Lower-bound constructions t in 4..6, k in 1..5");
    const auto t0 = Clock::now();
    const fs::path dir = o.scratch_dir / "criterion4";
    fs::create_directories(dir);
    std::size_t failures = 0;
    std::ostringstream bad;
    std::size_t largest = 0;
    for (std::size_t t = 4; t <= 6; ++t) {
        for (std::size_t k = 1; k <= 5; ++k) {
            const ColoredCompleteGraph g = lower_bound_construction(t, k);
            largest = std::max(largest, g.order());
            const std::uint64_t expected = gr_value({PatternKind::StarPlus, t, k}) - 1;
            const bool same_path_bound = gr_value({PatternKind::PathPlus, t, k}) - 1 == expected;
            std::vector<Color> all_colors;
            for (std::size_t c = 1; c <= k; ++c) {
                all_colors.push_back(static_cast<Color>(c));
            }
            const bool colors_ok = used_colors(g) == all_colors && g.colors() == k;
            const fs::path file = dir / ("lb_t" + std::to_string(t) + "_k" + std::to_string(k) + ".gcg");
            write_text_file(file, encode(g));
            const CliRun verify =
                cli_run({"verify", "-i", file.string(), "--family", "both", "-t", std::to_string(t)});
            if (g.order() != expected || !same_path_bound || !colors_ok || verify.exit != cli::kHolds) {
                ++failures;
                bad << "(t=" << t << ",k=" << k << ": order " << g.order() << " vs " << expected << ", verify exit "
                    << verify.exit << ") ";
            }
        }
    }
    r.seconds = since(t0);
    r.passed = failures == 0 && r.seconds < 300.0;
    r.detail = std::to_string(15 - failures) + "/15 constructions verified, largest order " + std::to_string(largest) +
               ", limit 300 s " + bad.str();
    return r;
}

// 5 -----------------------------------------------------------------------

CriterionResult formula_suite(const Options&)
{
    CriterionResult r = start(5, "Formula suite");
    const auto t0 = Clock::now();
    std::size_t failures = 0;
    for (PatternKind f : {PatternKind::StarPlus, PatternKind::PathPlus}) {
        for (std::size_t t = 4; t <= 64; ++t) {
            if (gr_value({f, t, 2}) != 2 * t - 1 || ramsey_value(f, t, t) != 2 * t - 1) {
                ++failures;
            }
        }
        for (std::size_t t = 4; t <= 16; ++t) {
            for (std::size_t k = 1; k <= 16; ++k) {
                if (gr_value({f, t, k + 2}) != 5 * (gr_value({f, t, k}) - 1) + 1) {
                    ++failures;
                }
            }
        }
    }
    failures += cycle_ramsey(5, 7) != 13;
    failures += cycle_ramsey(4, 6) != 7;
    failures += cycle_ramsey(4, 7) != 8;
    for (std::size_t n = 2; n <= 50; ++n) {
        for (std::size_t k = 1; k <= 50; ++k) {
            const auto [lower, upper] = even_cycle_gr_bounds(n, k);
            failures += lower > upper;
        }
    }
    r.seconds = since(t0);
    r.passed = failures == 0;
    r.detail = std::to_string(failures) + " failing checks";
    return r;
}

// 6 -----------------------------------------------------------------------

std::vector<Pattern> oracle_patterns()
{
    std::vector<Pattern> out;
    for (std::size_t s = 1; s <= 6; ++s) {
        out.push_back(Pattern::path(s));
        out.push_back(Pattern::star(s));
        out.push_back(Pattern::clique(s));
        if (s >= 3) {
            out.push_back(Pattern::star_plus(s));
            out.push_back(Pattern::path_plus(s));
            out.push_back(Pattern::cycle(s));
        }
    }
    return out;
}

// Returns the number of disagreements between fast detectors and the oracle.
std::size_t compare_with_oracle(const ColoredCompleteGraph& g, const std::vector<Pattern>& patterns)
{
    std::size_t bad = 0;
    const ColorAdjacency adj(g);
    const auto rainbow = find_rainbow_triangle(g, adj);
    if (rainbow.has_value() != brute_force_rainbow(g).has_value() || (rainbow && !witness_holds(g, *rainbow))) {
        ++bad;
    }
    for (const Pattern& p : patterns) {
        for (std::size_t c = 0; c <= g.colors(); ++c) {
            const std::optional<Color> color = c == 0 ? std::nullopt : std::optional<Color>(static_cast<Color>(c));
            const auto fast = contains_pattern(adj, p, color);
            const auto slow = brute_force_find(g, p, color);
            if (fast.has_value() != slow.has_value() || (fast && !witness_holds(g, *fast))) {
                ++bad;
            }
        }
    }
    return bad;
}

CriterionResult detector_oracle(const Options& o)
{
    CriterionResult r = start(6, "Detector-oracle equivalence");
    const auto t0 = Clock::now();
    const std::vector<Pattern> patterns = oracle_patterns();
    std::size_t disagreements = 0;
    std::size_t graphs = 0;
    Rng rng(o.seed ^ 0x6a09e667f3bcc908ULL);
    for (std::size_t i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + rng.below(8);
        const std::size_t k = 1 + rng.below(3);
        disagreements += compare_with_oracle(random_coloring(n, k, rng.next()), patterns);
        ++graphs;
    }
    for (unsigned mask = 0; mask < 64; ++mask) {
        ColoredCompleteGraph::Builder b(4, 2);
        for (Vertex v = 1, e = 0; v < 4; ++v) {
            for (Vertex u = 0; u < v; ++u, ++e) {
                b.set(u, v, ((mask >> e) & 1U) != 0 ? 2 : 1);
            }
        }
        disagreements += compare_with_oracle(std::move(b).build(), patterns);
        ++graphs;
    }
    r.seconds = since(t0);
    r.passed = disagreements == 0 && r.seconds < 120.0;
    r.detail = std::to_string(graphs) + " colorings x " + std::to_string(patterns.size()) + " patterns, " +
               std::to_string(disagreements) + " disagreements, limit 120 s";
    return r;
}

// 7 -----------------------------------------------------------------------

CriterionResult decomposition(const Options& o)
{
    CriterionResult r = start(7, "Gallai decomposition on random samples and constructions");
    const auto t0 = Clock::now();
    std::size_t failures = 0;
    std::size_t checked = 0;
    std::string first_failure;
    auto check = [&](const ColoredCompleteGraph& g, const std::string& label) {
        ++checked;
        try {
            const GallaiPartition p = gallai_partition(g);
            const PartitionCheck v = validate_partition(g, p);
            if (!v) {
                ++failures;
                if (first_failure.empty()) {
                    first_failure = label + ": " + v.violation;
                }
            }
        } catch (const std::exception& e) {
            ++failures;
            if (first_failure.empty()) {
                first_failure = label + ": " + e.what();
            }
        }
    };
    Rng rng(o.seed ^ 0xbb67ae8584caa73bULL);
    for (std::size_t i = 0; i < 500; ++i) {
        const std::size_t n = 2 + rng.below(199);
        const std::size_t k = 1 + rng.below(6);
        const std::uint64_t seed = rng.next();
        check(random_gallai(n, k, seed), "random_gallai(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                             std::to_string(seed) + ")");
    }
    for (std::size_t t = 4; t <= 6; ++t) {
        for (std::size_t k = 1; k <= 5; ++k) {
            check(lower_bound_construction(t, k),
                  "lower_bound_construction(" + std::to_string(t) + "," + std::to_string(k) + ")");
        }
    }
    r.seconds = since(t0);
    r.passed = failures == 0 && r.seconds < 300.0;
    r.detail = std::to_string(checked) + " colorings, " + std::to_string(failures) + " failures, limit 300 s" +
               (first_failure.empty() ? "" : "; first: " + first_failure);
    return r;
}

// 8 -----------------------------------------------------------------------

CriterionResult statistical_upper_bound(const Options& o)
{
    CriterionResult r = start(8, "Statistical upper bound t=4, k=3 at order 16");
    const auto t0 = Clock::now();
    const std::uint64_t order = gr_value({PatternKind::StarPlus, 4, 3});
    std::size_t counterexamples = 0;
    std::string saved;
    Rng rng(o.seed ^ 0x3c6ef372fe94f82bULL);
    for (std::size_t i = 0; i < o.statistical_samples; ++i) {
        const std::uint64_t seed = rng.next();
        const ColoredCompleteGraph g = random_gallai(order, 3, seed);
        if (!find_mono_star_plus(g, 4)) {
            ++counterexamples;
            fs::create_directories(o.scratch_dir);
            const fs::path file = o.scratch_dir / ("counterexample_t4_k3_seed" + std::to_string(seed) + ".gcg");
            write_text_file(file, encode_with_comment(g, "no monochromatic star-plus(4): seed " + std::to_string(seed)));
            if (saved.empty()) {
                saved = file.string();
            }
        }
    }
    r.seconds = since(t0);
    r.passed = order == 16 && counterexamples == 0 && o.statistical_samples >= 10'000;
    r.detail = std::to_string(o.statistical_samples) + " samples of order " + std::to_string(order) + ", " +
               std::to_string(counterexamples) + " counterexamples" + (saved.empty() ? "" : " (saved " + saved + ")");
    return r;
}

// 9 -----------------------------------------------------------------------

CriterionResult determinism(const Options& o)
{
    CriterionResult r = start(9, "Determinism of CLI outputs");
    const auto t0 = Clock::now();
    const fs::path dir = o.scratch_dir / "criterion9";
    fs::create_directories(dir);
    const std::string seed = std::to_string(o.seed + 9);
    const std::string cons = (dir / "construct.gcg").string();
    const std::string rnd = (dir / "random.gcg").string();
    const fs::path wdir = dir / "ramsey";

    std::vector<std::string> mismatches;
    auto same_thrice = [&](const std::string& label, const std::vector<std::string>& args,
                           const std::vector<fs::path>& files) {
        std::vector<std::string> outputs;
        for (int i = 0; i < 3; ++i) {
            std::string combined = cli_run(args).out;
            for (const fs::path& f : files) {
                combined += "\n--file--\n" + read_bytes(f);
            }
            outputs.push_back(std::move(combined));
        }
        if (outputs[0] != outputs[1] || outputs[1] != outputs[2]) {
            mismatches.push_back(label);
        }
    };
    same_thrice("construct", {"construct", "--family", "star-plus", "-t", "4", "-k", "3", "-o", cons}, {cons});
    same_thrice("random", {"random", "-n", "60", "-k", "4", "--seed", seed, "-o", rnd}, {rnd});
    same_thrice("verify", {"verify", "-i", rnd, "--family", "both", "-t", "4"}, {});
    same_thrice("decompose", {"decompose", "-i", rnd}, {});
    const fs::path witness = wdir / "ramsey_star-plus_s4_t4_witness.gcg";
    const fs::path cert = wdir / "ramsey_star-plus_s4_t4_exhaustion.json";
    same_thrice("ramsey --jobs 1",
                {"ramsey", "--family", "star-plus", "-t", "4", "--jobs", "1", "--omit-timing", "--witness-dir",
                 wdir.string()},
                {witness, cert});

    // Across worker counts the verdict, value and witness must agree.
    std::vector<std::string> signatures;
    for (const char* jobs : {"1", "4"}) {
        for (const char* family : {"star-plus", "path-plus"}) {
            const CliRun run = cli_run({"ramsey", "--family", family, "-t", "4", "--jobs", jobs, "--omit-timing",
                                        "--witness-dir", wdir.string()});
            const auto j = nlohmann::json::parse(run.out);
            std::string sig = std::string(family) + ":" + std::to_string(run.exit) + ":" + j["result"]["value"].dump() +
                              ":" + j["result"]["pass"].dump() + ":" +
                              read_bytes(wdir / ("ramsey_" + std::string(family) + "_s4_t4_witness.gcg"));
            signatures.push_back(std::move(sig));
        }
    }
    if (signatures[0] != signatures[2] || signatures[1] != signatures[3]) {
        mismatches.push_back("ramsey --jobs 1 vs 4");
    }

    r.seconds = since(t0);
    r.passed = mismatches.empty();
    std::string detail = "3 runs each of construct, random, verify, decompose, ramsey; jobs 1 vs 4";
    for (const std::string& m : mismatches) {
        detail += "; MISMATCH " + m;
    }
    r.detail = detail;
    return r;
}

} // namespace

CriterionResult run_criterion(int id, const Options& options)
{
    const auto t0 = Clock::now();
    CriterionResult r;
    try {
        switch (id) {
        case 1: r = ramsey_t4(options); break;
        case 2: r = ramsey_t3(options); break;
        case 3: r = ramsey_t5(options); break;
        case 4: r = constructions(options); break;
        case 5: r = formula_suite(options); break;
        case 6: r = detector_oracle(options); break;
        case 7: r = decomposition(options); break;
        case 8: r = statistical_upper_bound(options); break;
        case 9: r = determinism(options); break;
        default: throw DomainError("no criterion " + std::to_string(id));
        }
    } catch (const std::exception& e) {
        r.id = id;
        r.passed = false;
        r.seconds = since(t0);
        r.detail = std::string("error: ") + e.what();
    }
    return r;
}

std::vector<CriterionResult> run_all(const Options& options, std::ostream* log)
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id, options));
        if (log != nullptr) {
            *log << format_line(out.back()) << '\n' << std::flush;
        }
    }
    return out;
}

std::string format_line(const CriterionResult& r)
{
    const char* tag = r.skipped ? "[SKIP]" : (r.passed ? "[PASS]" : "[FAIL]");
    return std::string(tag) + " " + std::to_string(r.id) + "  " + r.name + "  (" + fmt_seconds(r.seconds) + " s)  " +
           r.detail;
}

} // namespace gallai::repro
