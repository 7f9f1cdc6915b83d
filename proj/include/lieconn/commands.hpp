#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lieconn/criteria.hpp"

namespace lieconn {

// Exit codes shared by the subcommands.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitNotMet = 2;
inline constexpr int kExitUsage = 64;     // parse errors and bad flags
inline constexpr int kExitNoInput = 66;   // unreadable input file
inline constexpr int kExitSoftware = 70;  // verdict contradicted by the oracle

struct AnalyzeOptions {
    std::string path;
    bool oracle = false;
    std::optional<std::string> dot_dir;
    bool json = false;
    bool timing = false;
};

/// 0/1/2 from the verdict, or from the oracle when `oracle` is set.
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);

struct RandcheckOptions {
    std::string group = "so";
    int n = 4;
    int trials = 100;
    std::uint64_t seed = 1;
    /// Negative selects 2n for so and 4n for sl/gl (digraphs need more arcs).
    int max_controls = -1;
    int jobs = 1;
    bool json = false;
};

struct RandcheckResult {
    Family family;
    int n = 0;
    int trials = 0;
    int yes = 0;      // decided Yes, confirmed by the oracle
    int no = 0;       // decided No, confirmed by the oracle
    int not_met = 0;  // hypotheses failed; oracle only
    int violations = 0;
    int oracle_full = 0;
    /// Trial index and system text of each violation, ascending by trial.
    std::vector<std::pair<int, std::string>> violating;
    double seconds = 0;

    int agree() const noexcept { return yes + no; }
};

/// Runs the campaign; throws DomainError on invalid options. The result is
/// independent of `jobs`.
RandcheckResult randcheck(const RandcheckOptions& opts);

/// 0 iff there were no violations; 64 on invalid flags.
int cmd_randcheck(const RandcheckOptions& opts, std::ostream& out, std::ostream& err);

struct ExampleGolden {
    std::string name;  // file stem, e.g. "ex1"
    Status status;
    Criterion criterion;
    int dimension;
    int full_dimension;
};

const std::vector<ExampleGolden>& example_goldens();

struct ExamplesOptions {
    std::string dir;
    bool json = false;
};

/// 0 iff every bundled example matches its golden; otherwise 1 and the
/// failing names go to `err`.
int cmd_examples(const ExamplesOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace lieconn
