#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieconn/criteria.hpp"

namespace lieconn {

/// Wall-clock time per analysis phase, in milliseconds.
struct PhaseTiming {
    double parse_ms = 0;
    double criteria_ms = 0;
    double oracle_ms = 0;
};

struct Report {
    BilinearSystem system;
    Analysis analysis;
    /// Serialized only when present; keeps default output reproducible.
    std::optional<PhaseTiming> timing;
};

/// JSON document with sorted keys (layout in docs/report_schema.md).
std::string report_json(const Report& r, int indent = 2);

/// Multi-line human-readable summary.
std::string report_text(const Report& r);

/// Union of drift and control graphs, as drawn in union.dot.
InteractionGraph union_of(const BilinearSystem& sys);

}  // namespace lieconn
