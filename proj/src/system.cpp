#include "lieconn/system.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace lieconn {

BilinearSystem::BilinearSystem(Algebra alg, LieVector drift, std::vector<BasisElement> controls)
    : algebra_(alg), drift_(std::move(drift)) {
    if (!(drift_.algebra() == alg))
        throw MismatchError("drift lives in " + drift_.algebra().name() + ", system in " + alg.name());
    std::set<BasisElement> seen;
    for (const auto& c : controls) {
        require_legal_control(alg, c);
        if (seen.insert(c).second) controls_.push_back(c);
    }
}

std::vector<LieVector> BilinearSystem::control_vectors() const {
    std::vector<LieVector> out;
    out.reserve(controls_.size());
    for (const auto& c : controls_) out.push_back(LieVector::basis(algebra_, c));
    return out;
}

std::vector<LieVector> BilinearSystem::generators() const {
    std::vector<LieVector> out;
    if (!drift_.is_zero()) out.push_back(drift_);
    for (auto& v : control_vectors()) out.push_back(std::move(v));
    return out;
}

// ---------------------------------------------------------------- graphs

InteractionGraph drift_graph(const BilinearSystem& sys) {
    const Algebra& alg = sys.algebra();
    const int n = alg.n();
    switch (alg.family()) {
        case Family::SO: {
            UGraph g(n);
            for (const auto& t : sys.drift().terms()) {
                auto [i, j] = alg.position(t.key);
                g.add_edge(i, j);
            }
            return g;
        }
        case Family::SL: {
            DiGraph g(n, false);
            for (const auto& t : sys.drift().terms()) {
                auto [i, j] = alg.position(t.key);
                if (i != j) g.add_arc(i, j);
            }
            return g;
        }
        case Family::GL: {
            DiGraph g(n, true);
            for (const auto& t : sys.drift().terms()) {
                auto [i, j] = alg.position(t.key);
                g.add_arc(i, j);
            }
            return g;
        }
    }
    throw DomainError("unknown algebra family");
}

InteractionGraph control_graph(const BilinearSystem& sys) {
    const Algebra& alg = sys.algebra();
    const int n = alg.n();
    if (alg.family() == Family::SO) {
        UGraph g(n);
        for (const auto& c : sys.controls()) g.add_edge(c.i, c.j);
        return g;
    }
    DiGraph g(n, alg.family() == Family::GL);
    for (const auto& c : sys.controls()) {
        // C controls carry no arc.
        if (c.tag == Tag::E) g.add_arc(c.i, c.j);
    }
    return g;
}

InteractionGraph phi(const LieVector& v) {
    const Algebra& alg = v.algebra();
    if (alg.family() == Family::SO) {
        UGraph g(alg.n());
        for (const auto& t : v.terms()) {
            auto [i, j] = alg.position(t.key);
            g.add_edge(i, j);
        }
        return g;
    }
    DiGraph g(alg.n(), false);
    for (const auto& t : v.terms()) {
        auto [i, j] = alg.position(t.key);
        if (i != j) g.add_arc(i, j);
    }
    return g;
}

ValidDecomposition valid_decomposition(const BilinearSystem& sys) {
    const Algebra& alg = sys.algebra();
    auto contr = control_graph(sys);
    auto drift = drift_graph(sys);

    ValidDecomposition out{UGraph(alg.n()), {}, LieVector(alg)};
    std::vector<LieVector::Term> kept;
    if (alg.family() == Family::SO) {
        UGraph closure = transitive_closure_fix(std::get<UGraph>(contr));
        for (auto [i, j] : std::get<UGraph>(drift).edges())
            if (!closure.has_edge(i, j)) out.valid_edges.emplace_back(i, j);
        out.closure_of_controls = std::move(closure);
    } else {
        DiGraph closure = simple_transitive_closure_fix(std::get<DiGraph>(contr).simple_shadow());
        for (auto [i, j] : std::get<DiGraph>(drift).arcs())
            if (i != j && !closure.has_arc(i, j)) out.valid_edges.emplace_back(i, j);
        out.closure_of_controls = std::move(closure);
    }
    for (auto [i, j] : out.valid_edges) kept.push_back({alg.key(i, j), sys.drift().coefficient(i, j)});
    out.a_tilde = LieVector::from_terms(alg, std::move(kept));
    return out;
}

// --------------------------------------------------------------- parsing

Rational parse_rational(std::string_view s) {
    auto digits = [](std::string_view d) {
        return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw DomainError("malformed rational '" + std::string(s) + "'");
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw DomainError("zero denominator in '" + std::string(s) + "'");
    Rational r(p, q);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

namespace {

std::optional<int> to_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

Tag parse_tag(std::string_view s, int line) {
    if (s == "B") return Tag::B;
    if (s == "E") return Tag::E;
    if (s == "C") return Tag::C;
    throw ParseError(line, "unknown basis tag '" + std::string(s) + "' (expected B, E or C)");
}

}  // namespace

BilinearSystem parse_system(std::istream& in) {
    std::optional<Algebra> alg;
    std::vector<BasisElement> controls;
    // Drift accumulates as a LieVector so C terms expand correctly.
    std::optional<LieVector> drift;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        const std::string& kw = tok[0];
        if (kw == "group") {
            if (alg) throw ParseError(line, "duplicate group statement");
            if (tok.size() != 3) throw ParseError(line, "expected 'group <so|sl|gl> <n>'");
            auto n = to_int(tok[2]);
            if (!n) throw ParseError(line, "n must be an integer, got '" + tok[2] + "'");
            try {
                alg.emplace(parse_family(tok[1]), *n);
            } catch (const DomainError& e) {
                throw ParseError(line, e.what());
            }
            drift.emplace(*alg);
            continue;
        }
        if (kw != "drift" && kw != "control") throw ParseError(line, "unknown statement '" + kw + "'");
        if (!alg) throw ParseError(line, "the first statement must be 'group <so|sl|gl> <n>'");

        const bool is_drift = kw == "drift";
        const std::size_t expected = is_drift ? 5 : 4;
        if (tok.size() != expected)
            throw ParseError(line, is_drift ? "expected 'drift <B|E|C> <i> <j> <coeff>'"
                                            : "expected 'control <B|E|C> <i> <j>'");
        Tag tag = parse_tag(tok[1], line);
        auto i = to_int(tok[2]);
        auto j = to_int(tok[3]);
        if (!i || !j) throw ParseError(line, "node indices must be integers");
        if (*i < 1 || *i > alg->n() || *j < 1 || *j > alg->n())
            throw ParseError(line, "index out of range 1.." + std::to_string(alg->n()));
        BasisElement b{tag, *i, *j};
        try {
            if (is_drift) {
                Rational c = parse_rational(tok[4]);
                if (sgn(c) == 0) throw ParseError(line, "zero coefficient on a drift line");
                drift->axpy(c, LieVector::basis(*alg, b));
            } else {
                require_legal_control(*alg, b);
                controls.push_back(b);
            }
        } catch (const DomainError& e) {
            throw ParseError(line, e.what());
        }
    }
    if (!alg) throw ParseError(line == 0 ? 1 : line, "missing 'group <so|sl|gl> <n>' statement");
    return BilinearSystem(*alg, std::move(*drift), std::move(controls));
}

BilinearSystem parse_system_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_system(in);
}

std::string format_system(const BilinearSystem& sys) {
    const Algebra& alg = sys.algebra();
    std::ostringstream os;
    os << "group " << to_string(alg.family()) << " " << alg.n() << "\n";
    const int n = alg.n();
    for (const auto& t : sys.drift().terms()) {
        auto [i, j] = alg.position(t.key);
        if (alg.family() == Family::SO) {
            os << "drift B " << i << " " << j << " " << t.coef.get_str() << "\n";
        } else if (i != j || alg.family() == Family::GL) {
            os << "drift E " << i << " " << j << " " << t.coef.get_str() << "\n";
        } else if (i != n) {
            // traceless diagonal: sum_i d_i E_ii = sum_{i<n} d_i C_{i,n}
            os << "drift C " << i << " " << n << " " << t.coef.get_str() << "\n";
        }
    }
    for (const auto& c : sys.controls())
        os << "control " << to_string(c.tag) << " " << c.i << " " << c.j << "\n";
    return os.str();
}

}  // namespace lieconn
