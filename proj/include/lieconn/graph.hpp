#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lieconn/error.hpp"

namespace lieconn {

/// Node sets are always {1..n}.
using Partition = std::vector<std::vector<int>>;

/// Simple undirected graph on {1..n}.
class UGraph {
public:
    explicit UGraph(int n);
    UGraph(int n, std::span<const std::pair<int, int>> edges);

    int n() const noexcept { return n_; }

    /// Adds {i, j}; i == j or out-of-range indices throw DomainError.
    void add_edge(int i, int j);
    void remove_edge(int i, int j);
    bool has_edge(int i, int j) const;

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return edge_count_ == 0; }
    /// Edges as (i, j), i < j, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool is_complete() const noexcept {
        return edge_count_ == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    }

    bool operator==(const UGraph&) const = default;

private:
    void check_node(int v) const;
    std::size_t idx(int i, int j) const noexcept {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    int n_;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> adj_;  // symmetric n x n
};

/// Digraph on {1..n}. Self-loops are accepted only when allow_self_loops.
class DiGraph {
public:
    explicit DiGraph(int n, bool allow_self_loops = false);
    DiGraph(int n, std::span<const std::pair<int, int>> arcs, bool allow_self_loops = false);

    int n() const noexcept { return n_; }
    bool allows_self_loops() const noexcept { return allow_self_loops_; }

    void add_arc(int i, int j);
    void remove_arc(int i, int j);
    bool has_arc(int i, int j) const;

    int in_degree(int v) const;
    int out_degree(int v) const;
    std::vector<int> out_neighbors(int v) const;
    std::vector<int> in_neighbors(int v) const;
    std::size_t arc_count() const noexcept { return arc_count_; }
    bool empty() const noexcept { return arc_count_ == 0; }
    /// Arcs in lexicographic order, self-loops included.
    std::vector<std::pair<int, int>> arcs() const;

    std::size_t self_loop_count() const;
    bool is_simple() const { return self_loop_count() == 0; }
    /// Same arcs minus self-loops; the result disallows self-loops.
    DiGraph simple_shadow() const;
    bool is_simple_complete() const;

    bool operator==(const DiGraph&) const = default;

private:
    void check_node(int v) const;
    std::size_t idx(int i, int j) const noexcept {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    int n_;
    bool allow_self_loops_;
    std::size_t arc_count_ = 0;
    std::vector<std::uint8_t> adj_;
};

// Connectivity. Partitions list blocks in ascending order of their smallest
// node, each block sorted ascending.

bool connected(const UGraph& g);
Partition components(const UGraph& g);
/// Self-loops are ignored.
bool strongly_connected(const DiGraph& g);
/// Components of the undirected shadow; self-loops join nothing.
Partition weak_components(const DiGraph& g);
/// Strongly connected components (Tarjan).
Partition strong_components(const DiGraph& g);

/// Transitive closure mapping on undirected graphs: adds {i, k} for every
/// length-two path i - j - k with i != k.
UGraph transitive_closure_step(const UGraph& g);
/// Fixpoint of transitive_closure_step: each component becomes a clique.
UGraph transitive_closure_fix(const UGraph& g);

/// Directed variant on simple digraphs: adds (i, k) for i -> j -> k, i != k.
/// Throws DomainError if g has self-loops.
DiGraph simple_transitive_closure_step(const DiGraph& g);
DiGraph simple_transitive_closure_fix(const DiGraph& g);

/// Circumjacent closure at {i, j}: keeps only the edges {i, k} with
/// {j, k} in E and {j, k} with {i, k} in E (pairs k == i or k == j drop out).
UGraph circumjacent_closure(const UGraph& g, int i, int j);
/// Directed circumjacent closure at <i, j> of a simple digraph:
/// (i, k) for (j, k) in E, k != i; and (k, j) for (k, i) in E, k != j.
DiGraph circumjacent_closure(const DiGraph& g, int i, int j);

UGraph union_graph(const UGraph& a, const UGraph& b);
/// The result allows self-loops iff either input does.
DiGraph union_graph(const DiGraph& a, const DiGraph& b);

/// Constructive reduction of a bi-graph to a single crossing edge by a
/// sequence of circumjacent closures at pairs inside one part.
///
/// `part` lists the nodes of one side; the complement is the other side.
/// Requires a bi-graph whose parts have at least three nodes each, with at
/// least one edge. The cases follow the classical argument: if a
/// zero-degree node z exists (smallest index first), close at (z, p) with
/// p the smallest nonisolated node of z's side; if that leaves edges
/// {z, q1}, {z, q2}, ..., close at (q1, q2) and then at (q2, q3) for the
/// smallest unused q3 of the other side. With no isolated node, close at
/// the two smallest nodes of `part` first.
struct BigraphReduction {
    std::vector<std::pair<int, int>> pairs;
    UGraph result;
};
BigraphReduction reduce_bigraph(const UGraph& g, std::span<const int> part);

/// Graphviz DOT. Nodes 1..n are listed first, then edges/arcs in
/// lexicographic order.
std::string to_dot(const UGraph& g, const std::string& name = "G");
std::string to_dot(const DiGraph& g, const std::string& name = "G");

}  // namespace lieconn
