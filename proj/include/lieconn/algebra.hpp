#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lieconn/error.hpp"

namespace lieconn {

using Rational = mpq_class;

enum class Family : std::uint8_t { SO, SL, GL };

std::string_view to_string(Family f);
/// Accepts "so", "sl", "gl" (case-insensitive).
Family parse_family(std::string_view s);

/// One of so(n), sl(n), gl(n).
class Algebra {
public:
    Algebra(Family family, int n);

    Family family() const noexcept { return family_; }
    int n() const noexcept { return n_; }

    /// n(n-1)/2, n^2-1, or n^2.
    int full_dimension() const noexcept;

    /// Number of canonical coordinates: n^2 for every family. For SO only
    /// keys with i < j are ever populated.
    int coordinate_count() const noexcept { return n_ * n_; }

    /// Canonical coordinate key of matrix position (i, j), 1-based.
    /// Keys order lexicographically on (i, j).
    int key(int i, int j) const noexcept { return (i - 1) * n_ + (j - 1); }
    std::pair<int, int> position(int key) const noexcept {
        return {key / n_ + 1, key % n_ + 1};
    }

    bool operator==(const Algebra&) const = default;

    std::string name() const;

private:
    Family family_;
    int n_;
};

enum class Tag : std::uint8_t { B, E, C };

std::string_view to_string(Tag t);

/// B_ij = E_ij - E_ji (i < j), E_ij the unit matrix, C_ij = E_ii - E_jj.
struct BasisElement {
    Tag tag;
    int i;
    int j;

    auto operator<=>(const BasisElement&) const = default;

    std::string str() const;
};

/// True iff `b` is a legal element of `alg` as drift term. Controls are
/// stricter; see is_legal_control.
bool is_legal_element(const Algebra& alg, const BasisElement& b);
/// SO: B only. SL: off-diagonal E or C. GL: E with diagonal allowed.
bool is_legal_control(const Algebra& alg, const BasisElement& b);
/// Throws DomainError with a description if the element is illegal.
void require_legal_element(const Algebra& alg, const BasisElement& b);
void require_legal_control(const Algebra& alg, const BasisElement& b);

/// Sparse exact element of so(n)/sl(n)/gl(n) over canonical coordinates.
///
/// SO vectors are stored on B-coordinates (keys with i < j); SL and GL
/// vectors on unit-matrix coordinates E_ij. Terms are sorted by key and no
/// stored coefficient is zero. SL vectors have zero trace.
class LieVector {
public:
    struct Term {
        int key;
        Rational coef;
    };

    explicit LieVector(Algebra alg) : algebra_(alg) {}

    /// From arbitrary (key, coefficient) pairs; duplicates are summed and
    /// zeros dropped. Validates support and trace invariants.
    static LieVector from_terms(Algebra alg, std::vector<Term> terms);
    static LieVector basis(Algebra alg, const BasisElement& b, const Rational& coef = 1);

    const Algebra& algebra() const noexcept { return algebra_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient at canonical coordinate (i, j); zero if absent.
    Rational coefficient(int i, int j) const;
    Rational coefficient_at_key(int key) const;
    /// Smallest key with a nonzero coefficient; requires !is_zero().
    int leading_key() const { return terms_.front().key; }

    /// Sum of diagonal coordinates (always zero for SO and SL).
    Rational trace() const;
    /// Entry (i, j) of the represented n x n matrix.
    Rational matrix_entry(int i, int j) const;

    LieVector& operator+=(const LieVector& o);
    LieVector& operator-=(const LieVector& o);
    LieVector& operator*=(const Rational& s);
    /// this += s * o
    LieVector& axpy(const Rational& s, const LieVector& o);

    friend LieVector operator+(LieVector a, const LieVector& b) { return a += b; }
    friend LieVector operator-(LieVector a, const LieVector& b) { return a -= b; }
    friend LieVector operator*(const Rational& s, LieVector a) { return a *= s; }
    friend LieVector operator-(LieVector a) { return a *= Rational(-1); }

    bool operator==(const LieVector& o) const;

    /// Human-readable form, e.g. "B12 + 2*B13 - 3*B14" or "0".
    std::string str() const;

private:
    void check_same(const LieVector& o) const;

    Algebra algebra_;
    std::vector<Term> terms_;
};

/// [x, y] = xy - yx via the basis structure constants.
LieVector bracket(const LieVector& x, const LieVector& y);

/// Every canonical basis element of the algebra (B_ij for SO; E_ij for GL;
/// off-diagonal E_ij and C_{i,i+1} for SL). Spans the full algebra.
std::vector<LieVector> canonical_generators(const Algebra& alg);

}  // namespace lieconn
