#pragma once

#include <span>
#include <vector>

#include "lieconn/algebra.hpp"

namespace lieconn {

/// A subspace in reduced row-echelon form over canonical coordinates:
/// every row has leading coefficient 1, pivots strictly increase, and each
/// pivot column is zero in every other row. The form is unique per subspace,
/// so two bases compare equal iff they span the same subspace.
class SubalgebraBasis {
public:
    explicit SubalgebraBasis(Algebra alg) : algebra_(alg) {}

    const Algebra& algebra() const noexcept { return algebra_; }
    const std::vector<LieVector>& basis() const noexcept { return rows_; }
    int dimension() const noexcept { return static_cast<int>(rows_.size()); }
    bool is_full() const noexcept { return dimension() == algebra_.full_dimension(); }

    /// Remainder of v after elimination against the rows.
    LieVector reduce(LieVector v) const;
    bool contains(const LieVector& v) const { return reduce(v).is_zero(); }

    /// Adds v to the span. Returns the inserted (normalised) row, or a zero
    /// vector when v was already in the span.
    LieVector insert(const LieVector& v);

    bool operator==(const SubalgebraBasis& o) const {
        return algebra_ == o.algebra_ && rows_ == o.rows_;
    }

private:
    LieVector reduce_impl(LieVector v) const;

    Algebra algebra_;
    std::vector<LieVector> rows_;  // sorted by pivot key
};

/// Generated Lie subalgebra of the generators, by fixpoint iteration:
/// brackets of each newly inserted vector against everything accepted so
/// far are reduced and inserted, until a sweep inserts nothing. Zero
/// generators are dropped. Stops early once the full algebra is reached.
///
/// `alg` is required so that an empty generator list is well defined; every
/// generator must belong to it.
SubalgebraBasis lie_closure(const Algebra& alg, std::span<const LieVector> generators);

int closure_dimension(const Algebra& alg, std::span<const LieVector> generators);

/// v lies in the span of s.
bool membership(const LieVector& v, const SubalgebraBasis& s);

}  // namespace lieconn
