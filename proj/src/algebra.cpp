#include "lieconn/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lieconn {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::SO: return "so";
        case Family::SL: return "sl";
        case Family::GL: return "gl";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "so") return Family::SO;
    if (lower == "sl") return Family::SL;
    if (lower == "gl") return Family::GL;
    throw DomainError("unknown algebra family '" + std::string(s) + "' (expected so, sl or gl)");
}

Algebra::Algebra(Family family, int n) : family_(family), n_(n) {
    if (n < 2) throw DomainError("algebra dimension parameter n must be >= 2, got " + std::to_string(n));
}

int Algebra::full_dimension() const noexcept {
    switch (family_) {
        case Family::SO: return n_ * (n_ - 1) / 2;
        case Family::SL: return n_ * n_ - 1;
        case Family::GL: return n_ * n_;
    }
    return 0;
}

std::string Algebra::name() const {
    return std::string(to_string(family_)) + "(" + std::to_string(n_) + ")";
}

std::string_view to_string(Tag t) {
    switch (t) {
        case Tag::B: return "B";
        case Tag::E: return "E";
        case Tag::C: return "C";
    }
    return "?";
}

std::string BasisElement::str() const {
    std::string s(to_string(tag));
    // Two-digit indices get a separator so B1_12 stays unambiguous.
    if (i < 10 && j < 10) return s + std::to_string(i) + std::to_string(j);
    return s + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

std::string describe_illegal(const Algebra& alg, const BasisElement& b) {
    const int n = alg.n();
    if (b.i < 1 || b.i > n || b.j < 1 || b.j > n)
        return "index out of range 1.." + std::to_string(n) + " in " + b.str();
    switch (b.tag) {
        case Tag::B:
            if (alg.family() != Family::SO) return "tag B is only legal under so";
            if (b.i >= b.j) return "B_ij requires i < j, got " + b.str();
            return {};
        case Tag::E:
            if (alg.family() == Family::SO) return "tag E is not legal under so";
            if (alg.family() == Family::SL && b.i == b.j)
                return "diagonal E_ii is not legal under sl";
            return {};
        case Tag::C:
            if (alg.family() == Family::SO) return "tag C is not legal under so";
            if (b.i == b.j) return "C_ij requires i != j, got " + b.str();
            return {};
    }
    return "unknown tag";
}

}  // namespace

bool is_legal_element(const Algebra& alg, const BasisElement& b) {
    return describe_illegal(alg, b).empty();
}

bool is_legal_control(const Algebra& alg, const BasisElement& b) {
    if (!is_legal_element(alg, b)) return false;
    return !(alg.family() == Family::GL && b.tag == Tag::C);
}

void require_legal_element(const Algebra& alg, const BasisElement& b) {
    if (auto why = describe_illegal(alg, b); !why.empty()) throw DomainError(why);
}

void require_legal_control(const Algebra& alg, const BasisElement& b) {
    require_legal_element(alg, b);
    if (!is_legal_control(alg, b)) throw DomainError("controls under gl must use tag E, got " + b.str());
}

namespace {

// Sorts by key, merges duplicates and drops zeros.
void normalize(std::vector<LieVector::Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < terms.size();) {
        const int key = terms[k].key;
        Rational sum = terms[k].coef;
        std::size_t m = k + 1;
        for (; m < terms.size() && terms[m].key == key; ++m) sum += terms[m].coef;
        if (sgn(sum) != 0) {
            terms[out].key = key;
            terms[out].coef = std::move(sum);
            ++out;
        }
        k = m;
    }
    terms.resize(out);
}

}  // namespace

LieVector LieVector::from_terms(Algebra alg, std::vector<Term> terms) {
    const int count = alg.coordinate_count();
    for (const auto& t : terms) {
        if (t.key < 0 || t.key >= count)
            throw DomainError("coordinate key " + std::to_string(t.key) + " out of range for " + alg.name());
    }
    normalize(terms);
    LieVector v(alg);
    v.terms_ = std::move(terms);
    for (const auto& t : v.terms_) {
        auto [i, j] = alg.position(t.key);
        if (alg.family() == Family::SO && i >= j)
            throw DomainError("so(n) coordinates must satisfy i < j");
    }
    if (alg.family() == Family::SL && sgn(v.trace()) != 0)
        throw DomainError("sl(n) element must have zero trace");
    return v;
}

LieVector LieVector::basis(Algebra alg, const BasisElement& b, const Rational& coef) {
    require_legal_element(alg, b);
    LieVector v(alg);
    if (sgn(coef) == 0) return v;
    switch (b.tag) {
        case Tag::B:
        case Tag::E:
            v.terms_.push_back({alg.key(b.i, b.j), coef});
            break;
        case Tag::C:
            v.terms_.push_back({alg.key(b.i, b.i), coef});
            v.terms_.push_back({alg.key(b.j, b.j), -coef});
            normalize(v.terms_);
            break;
    }
    return v;
}

Rational LieVector::coefficient_at_key(int key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, int k) { return t.key < k; });
    if (it != terms_.end() && it->key == key) return it->coef;
    return 0;
}

Rational LieVector::coefficient(int i, int j) const {
    return coefficient_at_key(algebra_.key(i, j));
}

Rational LieVector::trace() const {
    Rational tr = 0;
    if (algebra_.family() == Family::SO) return tr;
    for (const auto& t : terms_) {
        auto [i, j] = algebra_.position(t.key);
        if (i == j) tr += t.coef;
    }
    return tr;
}

Rational LieVector::matrix_entry(int i, int j) const {
    if (algebra_.family() == Family::SO) {
        if (i < j) return coefficient(i, j);
        if (i > j) return -coefficient(j, i);
        return 0;
    }
    return coefficient(i, j);
}

void LieVector::check_same(const LieVector& o) const {
    if (!(algebra_ == o.algebra_))
        throw MismatchError("algebra mismatch: " + algebra_.name() + " vs " + o.algebra_.name());
}

LieVector& LieVector::axpy(const Rational& s, const LieVector& o) {
    check_same(o);
    if (sgn(s) == 0 || o.is_zero()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->key < b->key)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->key < a->key) {
            merged.push_back({b->key, s * b->coef});
            ++b;
        } else {
            Rational c = a->coef + s * b->coef;
            if (sgn(c) != 0) merged.push_back({a->key, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LieVector& LieVector::operator+=(const LieVector& o) { return axpy(1, o); }
LieVector& LieVector::operator-=(const LieVector& o) { return axpy(-1, o); }

LieVector& LieVector::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coef *= s;
    return *this;
}

bool LieVector::operator==(const LieVector& o) const {
    if (!(algebra_ == o.algebra_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (terms_[k].key != o.terms_[k].key || terms_[k].coef != o.terms_[k].coef) return false;
    }
    return true;
}

std::string LieVector::str() const {
    if (terms_.empty()) return "0";
    const char tag = algebra_.family() == Family::SO ? 'B' : 'E';
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        auto [i, j] = algebra_.position(t.key);
        Rational c = t.coef;
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        if (c != 1) os << c.get_str() << "*";
        os << BasisElement{tag == 'B' ? Tag::B : Tag::E, i, j}.str();
        first = false;
    }
    return os.str();
}

LieVector bracket(const LieVector& x, const LieVector& y) {
    if (!(x.algebra() == y.algebra()))
        throw MismatchError("bracket: algebra mismatch: " + x.algebra().name() + " vs " + y.algebra().name());
    const Algebra& alg = x.algebra();
    std::vector<LieVector::Term> out;
    out.reserve(2 * x.size() * y.size());

    if (alg.family() == Family::SO) {
        // [B_ij, B_kl] = d_jk B_il + d_il B_jk + d_jl B_ki + d_ik B_lj,
        // with B_ab = -B_ba and B_aa = 0.
        auto emit = [&](int a, int b, const Rational& c) {
            if (a < b) out.push_back({alg.key(a, b), c});
            else if (a > b) out.push_back({alg.key(b, a), -c});
        };
        for (const auto& s : x.terms()) {
            auto [i, j] = alg.position(s.key);
            for (const auto& t : y.terms()) {
                auto [k, l] = alg.position(t.key);
                if (j != k && i != l && j != l && i != k) continue;
                Rational c = s.coef * t.coef;
                if (j == k) emit(i, l, c);
                if (i == l) emit(j, k, c);
                if (j == l) emit(k, i, c);
                if (i == k) emit(l, j, c);
            }
        }
    } else {
        // [E_ij, E_kl] = d_jk E_il - d_li E_kj
        for (const auto& s : x.terms()) {
            auto [i, j] = alg.position(s.key);
            for (const auto& t : y.terms()) {
                auto [k, l] = alg.position(t.key);
                if (j == k) out.push_back({alg.key(i, l), s.coef * t.coef});
                if (l == i) out.push_back({alg.key(k, j), -(s.coef * t.coef)});
            }
        }
    }
    return LieVector::from_terms(alg, std::move(out));
}

std::vector<LieVector> canonical_generators(const Algebra& alg) {
    std::vector<LieVector> gens;
    const int n = alg.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            switch (alg.family()) {
                case Family::SO:
                    if (i < j) gens.push_back(LieVector::basis(alg, {Tag::B, i, j}));
                    break;
                case Family::SL:
                    if (i != j) gens.push_back(LieVector::basis(alg, {Tag::E, i, j}));
                    else if (i < n) gens.push_back(LieVector::basis(alg, {Tag::C, i, i + 1}));
                    break;
                case Family::GL:
                    gens.push_back(LieVector::basis(alg, {Tag::E, i, j}));
                    break;
            }
        }
    }
    return gens;
}

}  // namespace lieconn
