#include "lieconn/report.hpp"

#include <sstream>

#include <json.hpp>

namespace lieconn {

using nlohmann::json;

namespace {

json pairs(const std::vector<std::pair<int, int>>& ps) {
    json out = json::array();
    for (auto [i, j] : ps) out.push_back({i, j});
    return out;
}

json graph_json(const UGraph& g) {
    return {{"directed", false},
            {"nodes", g.n()},
            {"edges", pairs(g.edges())},
            {"components", components(g)},
            {"connected", connected(g)}};
}

json graph_json(const DiGraph& g) {
    return {{"directed", true},
            {"nodes", g.n()},
            {"arcs", pairs(g.arcs())},
            {"self_loops", g.self_loop_count()},
            {"weak_components", weak_components(g)},
            {"strong_components", strong_components(g)},
            {"strongly_connected", strongly_connected(g)}};
}

json graph_json(const InteractionGraph& g) {
    return std::visit([](const auto& x) { return graph_json(x); }, g);
}

}  // namespace

InteractionGraph union_of(const BilinearSystem& sys) {
    auto drift = drift_graph(sys);
    auto contr = control_graph(sys);
    if (sys.algebra().family() == Family::SO) return union_graph(std::get<UGraph>(drift), std::get<UGraph>(contr));
    return union_graph(std::get<DiGraph>(drift), std::get<DiGraph>(contr));
}

std::string report_json(const Report& r, int indent) {
    const auto& sys = r.system;
    const auto& v = r.analysis.verdict;

    json controls = json::array();
    for (const auto& c : sys.controls()) controls.push_back(c.str());

    json doc;
    doc["system"] = {{"algebra", sys.algebra().name()},
                     {"family", std::string(to_string(sys.algebra().family()))},
                     {"n", sys.algebra().n()},
                     {"m", sys.controls().size()},
                     {"controls", controls},
                     {"drift", sys.drift().str()},
                     {"driftless", sys.driftless()},
                     {"trace", sys.drift().trace().get_str()}};
    doc["graphs"] = {{"control", graph_json(control_graph(sys))},
                     {"drift", graph_json(drift_graph(sys))},
                     {"union", graph_json(union_of(sys))}};
    doc["verdict"] = {{"status", std::string(to_string(v.status))},
                      {"property", std::string(to_string(v.property))},
                      {"criterion", std::string(to_string(v.criterion))},
                      {"reasons", v.reasons}};
    if (const auto& o = r.analysis.oracle)
        doc["oracle"] = {{"dimension", o->dimension}, {"full_dimension", o->full_dimension}, {"holds", o->holds}};
    else
        doc["oracle"] = nullptr;
    if (auto h = r.analysis.holds())
        doc["holds"] = *h;
    else
        doc["holds"] = nullptr;
    if (r.timing)
        doc["timing_ms"] = {{"parse", r.timing->parse_ms},
                            {"criteria", r.timing->criteria_ms},
                            {"oracle", r.timing->oracle_ms}};
    return doc.dump(indent) + "\n";
}

std::string report_text(const Report& r) {
    const auto& sys = r.system;
    const auto& v = r.analysis.verdict;
    std::ostringstream os;
    os << "algebra:   " << sys.algebra().name() << "\n"
       << "drift:     " << sys.drift().str() << "\n"
       << "controls:  ";
    for (std::size_t k = 0; k < sys.controls().size(); ++k) os << (k ? " " : "") << sys.controls()[k].str();
    if (sys.controls().empty()) os << "(none)";
    os << "\n"
       << "verdict:   " << to_string(v.status) << " (" << to_string(v.property) << ", " << to_string(v.criterion)
       << ")\n"
       << "reasons:  ";
    for (const auto& reason : v.reasons) os << " " << reason;
    os << "\n";
    if (const auto& o = r.analysis.oracle)
        os << "oracle:    dim " << o->dimension << "/" << o->full_dimension << (o->holds ? " (full)" : " (deficient)")
           << "\n";
    if (r.timing)
        os << "timing:    parse " << r.timing->parse_ms << " ms, criteria " << r.timing->criteria_ms << " ms, oracle "
           << r.timing->oracle_ms << " ms\n";
    return os.str();
}

}  // namespace lieconn
