#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lieconn/algebra.hpp"
#include "lieconn/graph.hpp"

namespace lieconn {

/// X' = A X + (sum_k u_k(t) B_k) X on SO(n), SL(n) or GL+(n).
class BilinearSystem {
public:
    /// Validates that drift and controls belong to `alg` and that every
    /// control is a legal control element. Duplicate controls are dropped,
    /// keeping first occurrences in order.
    BilinearSystem(Algebra alg, LieVector drift, std::vector<BasisElement> controls);

    const Algebra& algebra() const noexcept { return algebra_; }
    const LieVector& drift() const noexcept { return drift_; }
    const std::vector<BasisElement>& controls() const noexcept { return controls_; }
    bool driftless() const noexcept { return drift_.is_zero(); }

    /// Controls as algebra elements, in order.
    std::vector<LieVector> control_vectors() const;
    /// Drift (when nonzero) followed by the controls.
    std::vector<LieVector> generators() const;

private:
    Algebra algebra_;
    LieVector drift_;
    std::vector<BasisElement> controls_;
};

/// Undirected for so(n); digraph for sl(n) (simple) and gl(n) (self-loops
/// allowed).
using InteractionGraph = std::variant<UGraph, DiGraph>;

InteractionGraph drift_graph(const BilinearSystem& sys);
InteractionGraph control_graph(const BilinearSystem& sys);

/// Support graph of v over off-diagonal coordinates: B-coordinates for
/// so(n), off-diagonal E-coordinates for sl(n)/gl(n) as a simple digraph.
InteractionGraph phi(const LieVector& v);

/// The part of the drift that lies outside the clique closure of the
/// control graph.
struct ValidDecomposition {
    /// Fixpoint of the transitive closure of the (simple shadow of the)
    /// control graph.
    InteractionGraph closure_of_controls;
    /// Off-diagonal drift edges/arcs not in closure_of_controls.
    std::vector<std::pair<int, int>> valid_edges;
    /// Drift restricted to coordinates in valid_edges.
    LieVector a_tilde;
};

ValidDecomposition valid_decomposition(const BilinearSystem& sys);

/// Line-oriented system file:
///
///     group <so|sl|gl> <n>
///     drift <B|E|C> <i> <j> <coeff>     coeff is p, -p or p/q, nonzero
///     control <B|E|C> <i> <j>
///
/// `#` starts a comment. Repeated drift lines on one coordinate add up.
/// Throws ParseError carrying the 1-based line number.
BilinearSystem parse_system(std::istream& in);
BilinearSystem parse_system_string(std::string_view text);

/// Inverse of parse_system (drift written per canonical coordinate).
std::string format_system(const BilinearSystem& sys);

/// Parses "p", "-p", "p/q" (q > 0 after sign handling) exactly.
Rational parse_rational(std::string_view s);

}  // namespace lieconn
