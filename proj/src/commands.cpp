#include "lieconn/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lieconn/random_system.hpp"
#include "lieconn/report.hpp"

namespace lieconn {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool write_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
    return static_cast<bool>(f);
}

template <class G>
std::string dot_of(const InteractionGraph& g, const std::string& name) {
    return to_dot(std::get<G>(g), name);
}

std::string dot_of(const InteractionGraph& g, const std::string& name) {
    return std::holds_alternative<UGraph>(g) ? dot_of<UGraph>(g, name) : dot_of<DiGraph>(g, name);
}

}  // namespace

// ---------------------------------------------------------------- analyze

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
    std::ifstream in(opts.path);
    if (!in) {
        err << "error: cannot read '" << opts.path << "'\n";
        return kExitNoInput;
    }

    PhaseTiming timing;
    auto t0 = Clock::now();
    std::optional<BilinearSystem> parsed;
    try {
        parsed.emplace(parse_system(in));
    } catch (const ParseError& e) {
        err << "error: " << opts.path << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << opts.path << ": " << e.what() << "\n";
        return kExitUsage;
    }
    timing.parse_ms = ms_since(t0);
    const BilinearSystem& sys = *parsed;

    t0 = Clock::now();
    Analysis analysis{check(sys), std::nullopt};
    timing.criteria_ms = ms_since(t0);

    if (opts.oracle || !analysis.verdict.decided()) {
        t0 = Clock::now();
        analysis.oracle = larc_oracle(sys);
        timing.oracle_ms = ms_since(t0);
        if (!consistent(analysis.verdict, *analysis.oracle)) {
            err << "error: criterion " << to_string(analysis.verdict.criterion) << " returned "
                << to_string(analysis.verdict.status) << " but the oracle found dimension "
                << analysis.oracle->dimension << "/" << analysis.oracle->full_dimension << "\n";
            return kExitSoftware;
        }
    }

    if (opts.dot_dir) {
        std::error_code ec;
        fs::create_directories(*opts.dot_dir, ec);
        const fs::path dir(*opts.dot_dir);
        const bool ok = write_file(dir / "contr.dot", dot_of(control_graph(sys), "contr")) &&
                        write_file(dir / "drift.dot", dot_of(drift_graph(sys), "drift")) &&
                        write_file(dir / "union.dot", dot_of(union_of(sys), "union"));
        if (!ok) {
            err << "error: cannot write DOT files to '" << *opts.dot_dir << "'\n";
            return kExitNoInput;
        }
    }

    Report report{sys, analysis, opts.timing ? std::optional(timing) : std::nullopt};
    out << (opts.json ? report_json(report) : report_text(report));

    if (opts.oracle) return analysis.oracle->holds ? kExitYes : kExitNo;
    switch (analysis.verdict.status) {
        case Status::GuaranteedYes: return kExitYes;
        case Status::GuaranteedNo: return kExitNo;
        case Status::HypothesisNotMet: return kExitNotMet;
    }
    return kExitSoftware;
}

// -------------------------------------------------------------- randcheck

RandcheckResult randcheck(const RandcheckOptions& opts) {
    const Family family = parse_family(opts.group);
    if (opts.n < 2) throw DomainError("--n must be at least 2");
    if (opts.trials < 1) throw DomainError("--trials must be at least 1");
    if (opts.jobs < 1) throw DomainError("--jobs must be at least 1");

    RandomSystemOptions gen;
    gen.family = family;
    gen.n = opts.n;
    gen.max_controls = opts.max_controls >= 0 ? opts.max_controls : (family == Family::SO ? 2 : 4) * opts.n;

    RandcheckResult total;
    total.family = family;
    total.n = opts.n;
    total.trials = opts.trials;

    std::atomic<int> next{0};
    std::mutex merge;
    auto worker = [&] {
        RandcheckResult local;
        for (int t; (t = next.fetch_add(1)) < opts.trials;) {
            std::mt19937_64 rng(trial_seed(opts.seed, static_cast<std::uint64_t>(t)));
            const BilinearSystem sys = random_system(gen, rng);
            const Verdict v = check(sys);
            const OracleReport o = larc_oracle(sys);
            if (o.holds) ++local.oracle_full;
            if (!consistent(v, o)) {
                ++local.violations;
                local.violating.emplace_back(t, format_system(sys));
            } else if (v.status == Status::GuaranteedYes) {
                ++local.yes;
            } else if (v.status == Status::GuaranteedNo) {
                ++local.no;
            } else {
                ++local.not_met;
            }
        }
        std::lock_guard lock(merge);
        total.yes += local.yes;
        total.no += local.no;
        total.not_met += local.not_met;
        total.violations += local.violations;
        total.oracle_full += local.oracle_full;
        for (auto& p : local.violating) total.violating.push_back(std::move(p));
    };

    const auto t0 = Clock::now();
    const int jobs = std::min(opts.jobs, opts.trials);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
    }
    total.seconds = ms_since(t0) / 1000.0;
    std::sort(total.violating.begin(), total.violating.end());
    return total;
}

int cmd_randcheck(const RandcheckOptions& opts, std::ostream& out, std::ostream& err) {
    RandcheckResult r;
    try {
        r = randcheck(opts);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (opts.json) {
        json violating = json::array();
        for (const auto& [t, text] : r.violating) violating.push_back({{"trial", t}, {"system", text}});
        json doc = {{"group", std::string(to_string(r.family))},
                    {"n", r.n},
                    {"seed", opts.seed},
                    {"trials", r.trials},
                    {"agree", r.agree()},
                    {"yes", r.yes},
                    {"no", r.no},
                    {"hypothesis_not_met", r.not_met},
                    {"violations", r.violations},
                    {"oracle_full", r.oracle_full},
                    {"violating", violating}};
        out << doc.dump(2) << "\n";
    } else {
        out << std::left << std::setw(6) << "group" << std::setw(4) << "n" << std::setw(8) << "trials"
            << std::setw(7) << "agree" << std::setw(6) << "yes" << std::setw(6) << "no" << std::setw(9) << "not-met"
            << std::setw(12) << "violations" << "seconds\n";
        out << std::setw(6) << to_string(r.family) << std::setw(4) << r.n << std::setw(8) << r.trials << std::setw(7)
            << r.agree() << std::setw(6) << r.yes << std::setw(6) << r.no << std::setw(9) << r.not_met
            << std::setw(12) << r.violations << std::fixed << std::setprecision(2) << r.seconds << "\n";
        for (const auto& [t, text] : r.violating) err << "violation in trial " << t << ":\n" << text;
    }
    return r.violations == 0 ? 0 : 1;
}

// --------------------------------------------------------------- examples

const std::vector<ExampleGolden>& example_goldens() {
    static const std::vector<ExampleGolden> goldens{
        {"ex1", Status::GuaranteedYes, Criterion::SoDrift, 15, 15},
        {"ex2", Status::HypothesisNotMet, Criterion::SoDrift, 11, 15},
        {"ex3", Status::GuaranteedYes, Criterion::SlDrift, 24, 24},
        {"ex4", Status::HypothesisNotMet, Criterion::SlDrift, 10, 15},
        {"ex5", Status::GuaranteedYes, Criterion::GlTrace, 25, 25},
        {"ex6", Status::GuaranteedYes, Criterion::GlSelfLoop, 16, 16},
        {"ex7", Status::HypothesisNotMet, Criterion::GlSelfLoop, 11, 16},
    };
    return goldens;
}

int cmd_examples(const ExamplesOptions& opts, std::ostream& out, std::ostream& err) {
    json results = json::array();
    std::vector<std::string> failing;
    for (const auto& g : example_goldens()) {
        const fs::path path = fs::path(opts.dir) / (g.name + ".sys");
        json entry = {{"name", g.name}, {"file", path.generic_string()}};
        std::string problem;
        try {
            std::ifstream in(path);
            if (!in) throw Error("cannot read " + path.generic_string());
            const BilinearSystem sys = parse_system(in);
            const Analysis a = analyze(sys, true);
            entry["status"] = std::string(to_string(a.verdict.status));
            entry["criterion"] = std::string(to_string(a.verdict.criterion));
            entry["dimension"] = a.oracle->dimension;
            entry["full_dimension"] = a.oracle->full_dimension;
            std::ostringstream why;
            if (a.verdict.status != g.status) why << " status " << to_string(a.verdict.status);
            if (a.verdict.criterion != g.criterion) why << " criterion " << to_string(a.verdict.criterion);
            if (a.oracle->dimension != g.dimension || a.oracle->full_dimension != g.full_dimension)
                why << " dimension " << a.oracle->dimension << "/" << a.oracle->full_dimension;
            problem = why.str();
            if (!problem.empty())
                problem = "expected " + std::string(to_string(g.status)) + " (" +
                          std::string(to_string(g.criterion)) + ") dim " + std::to_string(g.dimension) + "/" +
                          std::to_string(g.full_dimension) + ", got" + problem;
        } catch (const std::exception& e) {
            problem = e.what();
        }
        entry["pass"] = problem.empty();
        if (!problem.empty()) {
            entry["error"] = problem;
            failing.push_back(g.name);
            err << g.name << ": FAIL: " << problem << "\n";
        }
        if (!opts.json)
            out << g.name << "  " << (problem.empty() ? "pass" : "FAIL") << "  "
                << (entry.contains("status") ? entry["status"].get<std::string>() : "-") << "  dim "
                << (entry.contains("dimension") ? std::to_string(entry["dimension"].get<int>()) : "-") << "/"
                << (entry.contains("full_dimension") ? std::to_string(entry["full_dimension"].get<int>()) : "-")
                << "\n";
        results.push_back(std::move(entry));
    }
    if (opts.json) {
        json doc = {{"examples", results}, {"passed", failing.empty()}, {"failing", failing}};
        out << doc.dump(2) << "\n";
    } else if (!failing.empty()) {
        err << "failing examples:";
        for (const auto& f : failing) err << " " << f;
        err << "\n";
    }
    return failing.empty() ? 0 : 1;
}

}  // namespace lieconn
