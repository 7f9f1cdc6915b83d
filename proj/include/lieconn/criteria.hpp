#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieconn/system.hpp"

namespace lieconn {

enum class Status { GuaranteedYes, GuaranteedNo, HypothesisNotMet };
enum class Property { Controllable, Accessible };

/// Which graphical criterion produced a verdict.
enum class Criterion {
    SoDriftless,   // so(n), A = 0: controllable iff G_contr connected
    SoDrift,       // so(n): union connected + control components >= 3 nodes
    SlDriftless,   // sl(n), A = 0: controllable iff G_contr strongly connected
    SlDrift,       // sl(n): union strongly connected + component conditions
    GlDriftless,   // gl(n), A = 0: strongly connected with a self-loop
    GlTrace,       // gl(n): component conditions, self-loop or tr A != 0
    GlSelfLoop,    // gl(n): sufficiency via a control self-loop
};

std::string_view to_string(Status s);
std::string_view to_string(Property p);
std::string_view to_string(Criterion c);

struct Verdict {
    Status status;
    Property property;
    Criterion criterion;
    /// Machine-readable reason codes, e.g. "union-connected",
    /// "component-too-small", "no-self-loop", "trace-nonzero".
    std::vector<std::string> reasons;

    bool decided() const noexcept { return status != Status::HypothesisNotMet; }
};

/// Rank-condition oracle: dimension of the generated Lie algebra.
struct OracleReport {
    int dimension;
    int full_dimension;
    bool holds;
};

OracleReport larc_oracle(const BilinearSystem& sys);

// Each checker returns HypothesisNotMet when its preconditions (family,
// presence or absence of drift, component hypotheses) fail.

Verdict check_so_driftless(const BilinearSystem& sys);
Verdict check_so(const BilinearSystem& sys);
Verdict check_sl_driftless(const BilinearSystem& sys);
Verdict check_sl(const BilinearSystem& sys);
Verdict check_gl_driftless(const BilinearSystem& sys);
Verdict check_gl(const BilinearSystem& sys);

/// The checker analyze() would route sys to.
Verdict check(const BilinearSystem& sys);

struct Analysis {
    Verdict verdict;
    std::optional<OracleReport> oracle;

    /// Final answer: the verdict when decided, else the oracle's. Empty if
    /// undecided and no oracle was run.
    std::optional<bool> holds() const;
};

/// Routes to the checker for the system's family and drift. Attaches the
/// oracle when requested or when the verdict is undecided, and throws
/// SoundnessError if a decided verdict disagrees with it.
Analysis analyze(const BilinearSystem& sys, bool with_oracle);

/// True iff `v` is consistent with `o` (undecided verdicts always are).
bool consistent(const Verdict& v, const OracleReport& o);

}  // namespace lieconn
