#include "lieconn/criteria.hpp"

#include "lieconn/closure.hpp"

namespace lieconn {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::GuaranteedYes: return "GuaranteedYes";
        case Status::GuaranteedNo: return "GuaranteedNo";
        case Status::HypothesisNotMet: return "HypothesisNotMet";
    }
    return "?";
}

std::string_view to_string(Property p) {
    return p == Property::Controllable ? "Controllable" : "Accessible";
}

std::string_view to_string(Criterion c) {
    switch (c) {
        case Criterion::SoDriftless: return "so-driftless";
        case Criterion::SoDrift: return "so-drift";
        case Criterion::SlDriftless: return "sl-driftless";
        case Criterion::SlDrift: return "sl-drift";
        case Criterion::GlDriftless: return "gl-driftless";
        case Criterion::GlTrace: return "gl-trace";
        case Criterion::GlSelfLoop: return "gl-self-loop";
    }
    return "?";
}

namespace {

Verdict not_met(Property p, Criterion c, std::vector<std::string> reasons) {
    return {Status::HypothesisNotMet, p, c, std::move(reasons)};
}

Verdict decided(bool yes, Property p, Criterion c, std::vector<std::string> reasons) {
    return {yes ? Status::GuaranteedYes : Status::GuaranteedNo, p, c, std::move(reasons)};
}

bool wrong_family(const BilinearSystem& sys, Family f) { return sys.algebra().family() != f; }

// Conditions on the weak components of a simple control digraph.
struct ComponentShape {
    bool all_strong = true;       // each weak component strongly connected
    bool all_at_least_two = true;
    bool one_at_least_three = false;
};

ComponentShape shape_of(const DiGraph& simple) {
    ComponentShape s;
    // A weak component is strongly connected iff it is also a strong
    // component, so the two partitions coincide exactly when all are.
    auto weak = weak_components(simple);
    s.all_strong = weak == strong_components(simple);
    for (const auto& c : weak) {
        if (c.size() < 2) s.all_at_least_two = false;
        if (c.size() >= 3) s.one_at_least_three = true;
    }
    return s;
}

void describe(const ComponentShape& s, bool need_three, std::vector<std::string>& reasons) {
    if (!s.all_strong) reasons.emplace_back("component-not-strongly-connected");
    if (!s.all_at_least_two) reasons.emplace_back("component-too-small");
    if (need_three && !s.one_at_least_three) reasons.emplace_back("no-component-with-three-nodes");
}

}  // namespace

OracleReport larc_oracle(const BilinearSystem& sys) {
    auto gens = sys.generators();
    const int dim = closure_dimension(sys.algebra(), gens);
    const int full = sys.algebra().full_dimension();
    return {dim, full, dim == full};
}

Verdict check_so_driftless(const BilinearSystem& sys) {
    constexpr auto P = Property::Controllable;
    constexpr auto C = Criterion::SoDriftless;
    if (wrong_family(sys, Family::SO)) return not_met(P, C, {"wrong-algebra"});
    if (!sys.driftless()) return not_met(P, C, {"drift-present"});
    const bool ok = connected(std::get<UGraph>(control_graph(sys)));
    return decided(ok, P, C, {ok ? "contr-connected" : "contr-disconnected"});
}

Verdict check_so(const BilinearSystem& sys) {
    constexpr auto P = Property::Controllable;
    constexpr auto C = Criterion::SoDrift;
    if (wrong_family(sys, Family::SO)) return not_met(P, C, {"wrong-algebra"});
    const auto contr = std::get<UGraph>(control_graph(sys));
    const auto drift = std::get<UGraph>(drift_graph(sys));
    if (!connected(union_graph(drift, contr))) return decided(false, P, C, {"union-disconnected"});

    for (const auto& comp : components(contr)) {
        if (comp.size() < 3) return not_met(P, C, {"union-connected", "component-too-small"});
    }
    return decided(true, P, C, {"union-connected", "components-at-least-three"});
}

Verdict check_sl_driftless(const BilinearSystem& sys) {
    constexpr auto P = Property::Controllable;
    constexpr auto C = Criterion::SlDriftless;
    if (wrong_family(sys, Family::SL)) return not_met(P, C, {"wrong-algebra"});
    if (!sys.driftless()) return not_met(P, C, {"drift-present"});
    const bool ok = strongly_connected(std::get<DiGraph>(control_graph(sys)));
    return decided(ok, P, C, {ok ? "contr-strongly-connected" : "contr-not-strongly-connected"});
}

Verdict check_sl(const BilinearSystem& sys) {
    constexpr auto P = Property::Accessible;
    constexpr auto C = Criterion::SlDrift;
    if (wrong_family(sys, Family::SL)) return not_met(P, C, {"wrong-algebra"});
    const auto contr = std::get<DiGraph>(control_graph(sys));
    const auto drift = std::get<DiGraph>(drift_graph(sys));
    if (!strongly_connected(union_graph(drift, contr)))
        return decided(false, P, C, {"union-not-strongly-connected"});

    std::vector<std::string> reasons{"union-strongly-connected"};
    auto shape = shape_of(contr);
    if (shape.all_strong && shape.all_at_least_two && shape.one_at_least_three) {
        reasons.emplace_back("components-strongly-connected");
        return decided(true, P, C, std::move(reasons));
    }
    describe(shape, true, reasons);
    return not_met(P, C, std::move(reasons));
}

Verdict check_gl_driftless(const BilinearSystem& sys) {
    constexpr auto P = Property::Controllable;
    constexpr auto C = Criterion::GlDriftless;
    if (wrong_family(sys, Family::GL)) return not_met(P, C, {"wrong-algebra"});
    if (!sys.driftless()) return not_met(P, C, {"drift-present"});
    const auto contr = std::get<DiGraph>(control_graph(sys));
    const bool strong = strongly_connected(contr);
    const bool loop = contr.self_loop_count() > 0;
    std::vector<std::string> reasons{strong ? "contr-strongly-connected" : "contr-not-strongly-connected",
                                     loop ? "self-loop" : "no-self-loop"};
    return decided(strong && loop, P, C, std::move(reasons));
}

Verdict check_gl(const BilinearSystem& sys) {
    constexpr auto P = Property::Accessible;
    if (wrong_family(sys, Family::GL)) return not_met(P, Criterion::GlTrace, {"wrong-algebra"});
    const auto contr = std::get<DiGraph>(control_graph(sys));
    const auto drift = std::get<DiGraph>(drift_graph(sys));
    const DiGraph contr_simple = contr.simple_shadow();
    if (!strongly_connected(union_graph(drift.simple_shadow(), contr_simple)))
        return decided(false, P, Criterion::GlTrace, {"union-not-strongly-connected"});

    const bool loop = contr.self_loop_count() > 0;
    const bool trace_nonzero = sgn(sys.drift().trace()) != 0;
    const auto shape = shape_of(contr_simple);
    std::vector<std::string> reasons{"union-strongly-connected"};

    if (shape.all_strong && shape.all_at_least_two && shape.one_at_least_three) {
        // Necessary and sufficient under these component hypotheses.
        reasons.emplace_back("components-strongly-connected");
        reasons.emplace_back(loop ? "self-loop" : "no-self-loop");
        reasons.emplace_back(trace_nonzero ? "trace-nonzero" : "trace-zero");
        return decided(loop || trace_nonzero, P, Criterion::GlTrace, std::move(reasons));
    }
    if (shape.all_strong && shape.all_at_least_two && loop) {
        reasons.emplace_back("components-strongly-connected");
        reasons.emplace_back("self-loop");
        return decided(true, P, Criterion::GlSelfLoop, std::move(reasons));
    }
    // The self-loop route was the last one tried; only sufficiency is known.
    describe(shape, true, reasons);
    reasons.emplace_back(loop ? "self-loop" : "no-self-loop");
    return not_met(P, Criterion::GlSelfLoop, std::move(reasons));
}

Verdict check(const BilinearSystem& sys) {
    const bool driftless = sys.driftless();
    switch (sys.algebra().family()) {
        case Family::SO: return driftless ? check_so_driftless(sys) : check_so(sys);
        case Family::SL: return driftless ? check_sl_driftless(sys) : check_sl(sys);
        case Family::GL: return driftless ? check_gl_driftless(sys) : check_gl(sys);
    }
    throw DomainError("unknown algebra family");
}

bool consistent(const Verdict& v, const OracleReport& o) {
    switch (v.status) {
        case Status::GuaranteedYes: return o.holds;
        case Status::GuaranteedNo: return !o.holds;
        case Status::HypothesisNotMet: return true;
    }
    return false;
}

std::optional<bool> Analysis::holds() const {
    if (verdict.decided()) return verdict.status == Status::GuaranteedYes;
    if (oracle) return oracle->holds;
    return std::nullopt;
}

Analysis analyze(const BilinearSystem& sys, bool with_oracle) {
    Analysis a{check(sys), std::nullopt};
    if (with_oracle || !a.verdict.decided()) a.oracle = larc_oracle(sys);
    if (a.oracle && !consistent(a.verdict, *a.oracle)) {
        throw SoundnessError("criterion " + std::string(to_string(a.verdict.criterion)) + " returned " +
                             std::string(to_string(a.verdict.status)) + " but the generated algebra has dimension " +
                             std::to_string(a.oracle->dimension) + "/" + std::to_string(a.oracle->full_dimension));
    }
    return a;
}

}  // namespace lieconn
