#include "lieconn/closure.hpp"

#include <algorithm>

namespace lieconn {

LieVector SubalgebraBasis::reduce_impl(LieVector v) const {
    // Rows are fully reduced, so a single pass in pivot order suffices.
    for (const auto& row : rows_) {
        if (v.is_zero()) break;
        Rational c = v.coefficient_at_key(row.leading_key());
        if (sgn(c) != 0) v.axpy(-c, row);
    }
    return v;
}

LieVector SubalgebraBasis::reduce(LieVector v) const {
    if (!(v.algebra() == algebra_))
        throw MismatchError("reduce: algebra mismatch: " + v.algebra().name() + " vs " + algebra_.name());
    return reduce_impl(std::move(v));
}

LieVector SubalgebraBasis::insert(const LieVector& v) {
    LieVector r = reduce(v);
    if (r.is_zero()) return r;
    Rational lead = r.terms().front().coef;
    r *= Rational(1) / lead;
    const int pivot = r.leading_key();
    for (auto& row : rows_) {
        Rational c = row.coefficient_at_key(pivot);
        if (sgn(c) != 0) row.axpy(-c, r);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const LieVector& row, int k) { return row.leading_key() < k; });
    rows_.insert(pos, r);
    return r;
}

SubalgebraBasis lie_closure(const Algebra& alg, std::span<const LieVector> generators) {
    SubalgebraBasis span(alg);
    // `accepted` spans the same space as `span` but keeps the remainders as
    // inserted; brackets are taken between these.
    std::vector<LieVector> accepted;
    std::size_t frontier_begin = 0;

    for (const auto& g : generators) {
        if (!(g.algebra() == alg))
            throw MismatchError("lie_closure: generator in " + g.algebra().name() + ", expected " + alg.name());
        if (g.is_zero()) continue;
        LieVector r = span.insert(g);
        if (!r.is_zero()) accepted.push_back(std::move(r));
    }

    while (frontier_begin < accepted.size() && !span.is_full()) {
        const std::size_t frontier_end = accepted.size();
        for (std::size_t f = frontier_begin; f < frontier_end && !span.is_full(); ++f) {
            // Pair each frontier vector with everything before it; pairs
            // among old vectors were handled in earlier sweeps.
            for (std::size_t a = 0; a < f && !span.is_full(); ++a) {
                LieVector b = bracket(accepted[f], accepted[a]);
                if (b.is_zero()) continue;
                LieVector r = span.insert(b);
                if (!r.is_zero()) accepted.push_back(std::move(r));
            }
        }
        frontier_begin = frontier_end;
    }
    return span;
}

int closure_dimension(const Algebra& alg, std::span<const LieVector> generators) {
    return lie_closure(alg, generators).dimension();
}

bool membership(const LieVector& v, const SubalgebraBasis& s) { return s.contains(v); }

}  // namespace lieconn
