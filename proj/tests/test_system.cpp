#include <doctest.h>

#include "lieconn/closure.hpp"
#include "lieconn/random_system.hpp"
#include "lieconn/system.hpp"
#include "support/dense.hpp"

using namespace lieconn;
using namespace lieconn::testing;

namespace {

using Edges = std::vector<std::pair<int, int>>;

const char* kSo6Connected =
    "group so 6\n"
    "drift B 1 2 1\ndrift B 1 3 2\ndrift B 1 4 -3\n"
    "control B 1 3\ncontrol B 2 4\ncontrol B 3 5\ncontrol B 4 6\n";

const char* kSl5 =
    "group sl 5\n"
    "drift E 1 2 1\ndrift E 1 5 2\ndrift E 3 2 1\ndrift E 5 4 -3\ndrift C 3 5 2\n"
    "control E 1 2\ncontrol E 2 1\ncontrol E 5 4\ncontrol E 4 3\ncontrol E 3 5\ncontrol C 4 5\n";

const char* kGl5 =
    "group gl 5\n"
    "drift E 1 2 1\ndrift E 1 5 2\ndrift E 3 2 1\ndrift E 5 4 -3\ndrift E 1 1 4\ndrift E 2 2 -1\n"
    "control E 1 2\ncontrol E 2 1\ncontrol E 5 4\ncontrol E 4 3\ncontrol E 3 5\n";

const char* kGl4Loop =
    "group gl 4\ndrift E 2 3 2\ndrift E 4 1 -3\n"
    "control E 1 2\ncontrol E 2 1\ncontrol E 3 4\ncontrol E 4 3\ncontrol E 1 1\n";

int parse_error_line(const std::string& text) {
    try {
        parse_system_string(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

// Union of the support graphs of a set of vectors.
UGraph support_union(int n, const std::vector<LieVector>& vs) {
    UGraph g(n);
    for (const auto& v : vs)
        for (auto [i, j] : std::get<UGraph>(phi(v)).edges()) g.add_edge(i, j);
    return g;
}

DiGraph support_union_d(int n, const std::vector<LieVector>& vs) {
    DiGraph g(n);
    for (const auto& v : vs)
        for (auto [i, j] : std::get<DiGraph>(phi(v)).arcs()) g.add_arc(i, j);
    return g;
}

// Random systems whose drift coefficients are distinct primes.
BilinearSystem generic_system(std::mt19937_64& rng, Family f, int n) {
    RandomSystemOptions opts;
    opts.family = f;
    opts.n = n;
    opts.max_controls = 2 * n;
    opts.driftless_probability = 0;
    return random_system(opts, rng);
}

}  // namespace

TEST_CASE("parse the so(6) example") {
    auto sys = parse_system_string(kSo6Connected);
    const Algebra so6(Family::SO, 6);
    CHECK(sys.algebra() == so6);
    CHECK(sys.drift() == LieVector::from_terms(so6, {{so6.key(1, 2), 1}, {so6.key(1, 3), 2}, {so6.key(1, 4), -3}}));
    CHECK(sys.controls().size() == 4);
    CHECK(sys.controls()[3] == BasisElement{Tag::B, 4, 6});
}

TEST_CASE("parse edge cases") {
    auto zero = parse_system_string("group gl 2\n");
    CHECK(zero.driftless());
    CHECK(zero.controls().empty());

    auto sys = parse_system_string(
        "# leading comment\n\n  group   sl 3  # trailing\n"
        "drift E 1 2 1/2\ndrift E 1 2 3/2\ndrift C 1 3 -2/4\ncontrol E 1 2\ncontrol E 1 2\n");
    CHECK(sys.drift().coefficient(1, 2) == 2);
    CHECK(sys.drift().coefficient(1, 1) == Rational(-1, 2));
    CHECK(sys.drift().coefficient(3, 3) == Rational(1, 2));
    CHECK(sys.controls().size() == 1);  // deduplicated

    // cancelling drift lines leave a zero drift
    CHECK(parse_system_string("group so 3\ndrift B 1 2 1\ndrift B 1 2 -1\n").driftless());
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("group sl 3\ncontrol E 1 1\n") == 2);
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("control B 1 2\n") == 1);
    CHECK(parse_error_line("group so 3\ngroup so 3\n") == 2);
    CHECK(parse_error_line("group su 3\n") == 1);
    CHECK(parse_error_line("group so 1\n") == 1);
    CHECK(parse_error_line("group so x\n") == 1);
    CHECK(parse_error_line("group so 3\n\n# c\ndrift B 1 4 1\n") == 4);
    CHECK(parse_error_line("group so 3\ndrift B 2 1 1\n") == 2);
    CHECK(parse_error_line("group so 3\ndrift E 1 2 1\n") == 2);
    CHECK(parse_error_line("group so 3\ndrift B 1 2 0\n") == 2);
    CHECK(parse_error_line("group so 3\ndrift B 1 2 0/5\n") == 2);
    CHECK(parse_error_line("group so 3\ndrift B 1 2 1/0\n") == 2);
    CHECK(parse_error_line("group so 3\ndrift B 1 2 abc\n") == 2);
    CHECK(parse_error_line("group so 3\ndrift B 1 2\n") == 2);
    CHECK(parse_error_line("group so 3\ncontrol B 1 2 7\n") == 2);
    CHECK(parse_error_line("group so 3\ncontrol X 1 2\n") == 2);
    CHECK(parse_error_line("group so 3\ncontrols B 1 2\n") == 2);
    CHECK(parse_error_line("group gl 3\ncontrol C 1 2\n") == 2);
    CHECK(parse_error_line("group sl 3\ndrift E 2 2 1\n") == 2);
    CHECK(parse_error_line("group sl 3\ndrift C 2 2 1\n") == 2);

    try {
        parse_system_string("group so 3\ncontrol B 0 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
    }
}

TEST_CASE("rationals") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("+4/2") == 2);
    CHECK_THROWS_AS(parse_rational("1/-2"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
}

TEST_CASE("format and parse round-trip") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        RandomSystemOptions opts{static_cast<Family>(trial % 3), uniform_int(rng, 2, 6), 10, 0.1};
        auto sys = random_system(opts, rng);
        auto back = parse_system_string(format_system(sys));
        REQUIRE(back.algebra() == sys.algebra());
        REQUIRE(back.drift() == sys.drift());
        REQUIRE(back.controls() == sys.controls());
    }
}

TEST_CASE("system construction validates") {
    const Algebra so(Family::SO, 3);
    CHECK_THROWS_AS(BilinearSystem(so, LieVector(Algebra(Family::SO, 4)), {}), MismatchError);
    CHECK_THROWS_AS(BilinearSystem(so, LieVector(so), {{Tag::E, 1, 2}}), DomainError);
    BilinearSystem sys(so, LieVector(so), {{Tag::B, 1, 2}, {Tag::B, 2, 3}, {Tag::B, 1, 2}});
    CHECK(sys.controls() == std::vector<BasisElement>{{Tag::B, 1, 2}, {Tag::B, 2, 3}});
    CHECK(sys.generators().size() == 2);
}

TEST_CASE("interaction graphs") {
    auto s1 = parse_system_string(kSo6Connected);
    CHECK(std::get<UGraph>(drift_graph(s1)).edges() == Edges{{1, 2}, {1, 3}, {1, 4}});
    CHECK(std::get<UGraph>(control_graph(s1)).edges() == Edges{{1, 3}, {2, 4}, {3, 5}, {4, 6}});

    auto zero = parse_system_string("group sl 3\n");
    CHECK(std::get<DiGraph>(drift_graph(zero)).empty());
    CHECK(std::get<DiGraph>(control_graph(zero)).empty());

    auto s3 = parse_system_string(kSl5);
    CHECK(std::get<DiGraph>(control_graph(s3)).arcs() == Edges{{1, 2}, {2, 1}, {3, 5}, {4, 3}, {5, 4}});
    // the C part of the drift draws nothing
    CHECK(std::get<DiGraph>(drift_graph(s3)).arcs() == Edges{{1, 2}, {1, 5}, {3, 2}, {5, 4}});

    auto s5 = parse_system_string(kGl5);
    CHECK(std::get<DiGraph>(drift_graph(s5)).arcs() == Edges{{1, 1}, {1, 2}, {1, 5}, {2, 2}, {3, 2}, {5, 4}});

    auto s6 = parse_system_string(kGl4Loop);
    CHECK(std::get<DiGraph>(control_graph(s6)).arcs() == Edges{{1, 1}, {1, 2}, {2, 1}, {3, 4}, {4, 3}});
}

TEST_CASE("valid decomposition examples") {
    auto d1 = valid_decomposition(parse_system_string(kSo6Connected));
    const Algebra so6(Family::SO, 6);
    CHECK(d1.valid_edges == Edges{{1, 2}, {1, 4}});
    CHECK(d1.a_tilde ==
          LieVector::basis(so6, {Tag::B, 1, 2}) - LieVector::basis(so6, {Tag::B, 1, 4}, 3));
    CHECK(std::get<UGraph>(d1.closure_of_controls) == transitive_closure_fix(UGraph(6, Edges{{1, 3}, {2, 4}, {3, 5}, {4, 6}})));
    CHECK(std::get<UGraph>(phi(d1.a_tilde)).edges() == Edges{{1, 2}, {1, 4}});

    auto inside = valid_decomposition(parse_system_string("group so 4\ndrift B 1 3 5\ncontrol B 1 2\ncontrol B 2 3\n"));
    CHECK(inside.valid_edges.empty());
    CHECK(inside.a_tilde.is_zero());

    auto d3 = valid_decomposition(parse_system_string(kSl5));
    const Algebra sl5(Family::SL, 5);
    CHECK(d3.valid_edges == Edges{{1, 5}, {3, 2}});
    CHECK(d3.a_tilde == LieVector::basis(sl5, {Tag::E, 1, 5}, 2) + LieVector::basis(sl5, {Tag::E, 3, 2}));
}

TEST_CASE("support graph") {
    const Algebra so(Family::SO, 3), gl2(Family::GL, 2);
    CHECK(std::get<UGraph>(phi(LieVector(so))).empty());
    auto v = LieVector::basis(gl2, {Tag::E, 1, 1}) + LieVector::basis(gl2, {Tag::E, 1, 2}, 2);
    CHECK(std::get<DiGraph>(phi(v)).arcs() == Edges{{1, 2}});
}

TEST_CASE("bracket support of a basis subset is one transitive-closure step (undirected)") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = uniform_int(rng, 2, 6);
        const Algebra so(Family::SO, n);
        UGraph g = random_ugraph(rng, n, std::uniform_real_distribution<double>(0.1, 0.7)(rng));
        std::vector<LieVector> s;
        for (auto [i, j] : g.edges()) s.push_back(LieVector::basis(so, {Tag::B, i, j}));
        std::vector<LieVector> f = s;
        for (const auto& x : s)
            for (const auto& y : s) f.push_back(bracket(x, y));
        REQUIRE(support_union(n, f) == transitive_closure_step(g));
    }
}

TEST_CASE("bracket support of an off-diagonal subset is one transitive-closure step (directed)") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = uniform_int(rng, 2, 6);
        const Algebra sl(Family::SL, n);
        DiGraph g = random_digraph(rng, n, std::uniform_real_distribution<double>(0.1, 0.6)(rng));
        std::vector<LieVector> s;
        for (auto [i, j] : g.arcs()) s.push_back(LieVector::basis(sl, {Tag::E, i, j}));
        std::vector<LieVector> f = s;
        for (const auto& x : s)
            for (const auto& y : s) f.push_back(bracket(x, y));
        REQUIRE(support_union_d(n, f) == simple_transitive_closure_step(g));
    }
}

TEST_CASE("bracketing the valid drift with a closure edge acts as the circumjacent closure") {
    std::mt19937_64 rng(15);
    int checked_u = 0, checked_d = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const int n = uniform_int(rng, 3, 6);
        auto so = generic_system(rng, Family::SO, n);
        auto dec = valid_decomposition(so);
        const UGraph valid = std::get<UGraph>(phi(dec.a_tilde));
        for (auto [i, j] : std::get<UGraph>(dec.closure_of_controls).edges()) {
            auto b = LieVector::basis(so.algebra(), {Tag::B, i, j});
            REQUIRE(std::get<UGraph>(phi(bracket(dec.a_tilde, b))) == circumjacent_closure(valid, i, j));
            ++checked_u;
        }

        auto sl = generic_system(rng, trial % 2 ? Family::SL : Family::GL, n);
        auto ddec = valid_decomposition(sl);
        const DiGraph dvalid = std::get<DiGraph>(phi(ddec.a_tilde));
        for (auto [i, j] : std::get<DiGraph>(ddec.closure_of_controls).arcs()) {
            auto e = LieVector::basis(sl.algebra(), {Tag::E, i, j});
            REQUIRE(std::get<DiGraph>(phi(bracket(ddec.a_tilde, e))) == circumjacent_closure(dvalid, i, j));
            ++checked_d;
        }
    }
    CHECK(checked_u >= 500);
    CHECK(checked_d >= 500);
}

TEST_CASE("the valid drift generates the same algebra as the drift") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = uniform_int(rng, 3, 6);
        auto so = generic_system(rng, Family::SO, n);
        auto dec = valid_decomposition(so);
        std::vector<LieVector> with_a = so.generators();
        std::vector<LieVector> with_tilde = so.control_vectors();
        with_tilde.push_back(dec.a_tilde);
        REQUIRE(closure_dimension(so.algebra(), with_a) == closure_dimension(so.algebra(), with_tilde));

        auto sl = generic_system(rng, Family::SL, n);
        auto sdec = valid_decomposition(sl);
        auto span = lie_closure(sl.algebra(), sl.generators());
        for (auto [i, j] : std::get<DiGraph>(sdec.closure_of_controls).arcs()) {
            auto e = LieVector::basis(sl.algebra(), {Tag::E, i, j});
            REQUIRE(membership(bracket(sdec.a_tilde, e), span));
        }
    }
}
