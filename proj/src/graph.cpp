#include "lieconn/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace lieconn {

// ---------------------------------------------------------------- UGraph

UGraph::UGraph(int n) : n_(n) {
    if (n < 1) throw DomainError("graph needs at least one node, got n = " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

UGraph::UGraph(int n, std::span<const std::pair<int, int>> edges) : UGraph(n) {
    for (auto [i, j] : edges) add_edge(i, j);
}

void UGraph::check_node(int v) const {
    if (v < 1 || v > n_)
        throw DomainError("node " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

void UGraph::add_edge(int i, int j) {
    check_node(i);
    check_node(j);
    if (i == j) throw DomainError("undirected graphs have no self-loops (node " + std::to_string(i) + ")");
    if (adj_[idx(i, j)]) return;
    adj_[idx(i, j)] = adj_[idx(j, i)] = 1;
    ++edge_count_;
}

void UGraph::remove_edge(int i, int j) {
    check_node(i);
    check_node(j);
    if (i == j || !adj_[idx(i, j)]) return;
    adj_[idx(i, j)] = adj_[idx(j, i)] = 0;
    --edge_count_;
}

bool UGraph::has_edge(int i, int j) const {
    check_node(i);
    check_node(j);
    return adj_[idx(i, j)] != 0;
}

int UGraph::degree(int v) const {
    check_node(v);
    int d = 0;
    for (int u = 1; u <= n_; ++u) d += adj_[idx(v, u)];
    return d;
}

std::vector<int> UGraph::neighbors(int v) const {
    check_node(v);
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (adj_[idx(v, u)]) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> UGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (adj_[idx(i, j)]) out.emplace_back(i, j);
    return out;
}

// --------------------------------------------------------------- DiGraph

DiGraph::DiGraph(int n, bool allow_self_loops) : n_(n), allow_self_loops_(allow_self_loops) {
    if (n < 1) throw DomainError("graph needs at least one node, got n = " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

DiGraph::DiGraph(int n, std::span<const std::pair<int, int>> arcs, bool allow_self_loops)
    : DiGraph(n, allow_self_loops) {
    for (auto [i, j] : arcs) add_arc(i, j);
}

void DiGraph::check_node(int v) const {
    if (v < 1 || v > n_)
        throw DomainError("node " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

void DiGraph::add_arc(int i, int j) {
    check_node(i);
    check_node(j);
    if (i == j && !allow_self_loops_)
        throw DomainError("self-loop (" + std::to_string(i) + "," + std::to_string(i) + ") in a simple digraph");
    if (adj_[idx(i, j)]) return;
    adj_[idx(i, j)] = 1;
    ++arc_count_;
}

void DiGraph::remove_arc(int i, int j) {
    check_node(i);
    check_node(j);
    if (!adj_[idx(i, j)]) return;
    adj_[idx(i, j)] = 0;
    --arc_count_;
}

bool DiGraph::has_arc(int i, int j) const {
    check_node(i);
    check_node(j);
    return adj_[idx(i, j)] != 0;
}

int DiGraph::in_degree(int v) const {
    check_node(v);
    int d = 0;
    for (int u = 1; u <= n_; ++u) d += adj_[idx(u, v)];
    return d;
}

int DiGraph::out_degree(int v) const {
    check_node(v);
    int d = 0;
    for (int u = 1; u <= n_; ++u) d += adj_[idx(v, u)];
    return d;
}

std::vector<int> DiGraph::out_neighbors(int v) const {
    check_node(v);
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (adj_[idx(v, u)]) out.push_back(u);
    return out;
}

std::vector<int> DiGraph::in_neighbors(int v) const {
    check_node(v);
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (adj_[idx(u, v)]) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> DiGraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arc_count_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (adj_[idx(i, j)]) out.emplace_back(i, j);
    return out;
}

std::size_t DiGraph::self_loop_count() const {
    std::size_t c = 0;
    for (int i = 1; i <= n_; ++i) c += adj_[idx(i, i)];
    return c;
}

DiGraph DiGraph::simple_shadow() const {
    DiGraph s(n_, false);
    for (auto [i, j] : arcs())
        if (i != j) s.add_arc(i, j);
    return s;
}

bool DiGraph::is_simple_complete() const {
    return is_simple() && arc_count_ == static_cast<std::size_t>(n_) * (n_ - 1);
}

// ---------------------------------------------------------- connectivity

namespace {

// Partition from a union-find style labelling; blocks ordered by smallest
// member.
Partition blocks_from_labels(const std::vector<int>& label, int n) {
    Partition out;
    std::vector<int> block_of(n + 1, -1);
    for (int v = 1; v <= n; ++v) {
        int l = label[v];
        if (block_of[l] < 0) {
            block_of[l] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[block_of[l]].push_back(v);
    }
    return out;
}

template <class Neighbors>
std::vector<int> bfs_labels(int n, Neighbors&& nbrs) {
    std::vector<int> label(n + 1, 0);
    std::vector<int> queue;
    for (int s = 1; s <= n; ++s) {
        if (label[s]) continue;
        label[s] = s;
        queue.assign(1, s);
        for (std::size_t q = 0; q < queue.size(); ++q) {
            for (int u : nbrs(queue[q])) {
                if (!label[u]) {
                    label[u] = s;
                    queue.push_back(u);
                }
            }
        }
    }
    return label;
}

std::vector<bool> reachable_from(const DiGraph& g, int s, bool reverse) {
    std::vector<bool> seen(g.n() + 1, false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : reverse ? g.in_neighbors(v) : g.out_neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
        }
    }
    return seen;
}

}  // namespace

Partition components(const UGraph& g) {
    auto label = bfs_labels(g.n(), [&](int v) { return g.neighbors(v); });
    return blocks_from_labels(label, g.n());
}

bool connected(const UGraph& g) { return components(g).size() == 1; }

Partition weak_components(const DiGraph& g) {
    auto label = bfs_labels(g.n(), [&](int v) {
        auto out = g.out_neighbors(v);
        auto in = g.in_neighbors(v);
        out.insert(out.end(), in.begin(), in.end());
        return out;
    });
    return blocks_from_labels(label, g.n());
}

bool strongly_connected(const DiGraph& g) {
    auto fwd = reachable_from(g, 1, false);
    auto bwd = reachable_from(g, 1, true);
    for (int v = 1; v <= g.n(); ++v)
        if (!fwd[v] || !bwd[v]) return false;
    return true;
}

Partition strong_components(const DiGraph& g) {
    const int n = g.n();
    std::vector<int> index(n + 1, -1), low(n + 1, 0), label(n + 1, 0);
    std::vector<bool> on_stack(n + 1, false);
    std::vector<int> stack;
    int counter = 0;

    std::function<void(int)> visit = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int u : g.out_neighbors(v)) {
            if (index[u] < 0) {
                visit(u);
                low[v] = std::min(low[v], low[u]);
            } else if (on_stack[u]) {
                low[v] = std::min(low[v], index[u]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> members;
            int u;
            do {
                u = stack.back();
                stack.pop_back();
                on_stack[u] = false;
                members.push_back(u);
            } while (u != v);
            int root = *std::min_element(members.begin(), members.end());
            for (int m : members) label[m] = root;
        }
    };
    for (int v = 1; v <= n; ++v)
        if (index[v] < 0) visit(v);
    return blocks_from_labels(label, n);
}

// ------------------------------------------------------ closure operators

UGraph transitive_closure_step(const UGraph& g) {
    UGraph out = g;
    const int n = g.n();
    for (int j = 1; j <= n; ++j) {
        auto nb = g.neighbors(j);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) out.add_edge(nb[a], nb[b]);
    }
    return out;
}

UGraph transitive_closure_fix(const UGraph& g) {
    UGraph cur = g;
    for (int sweep = 0; sweep <= g.n() + 1; ++sweep) {
        UGraph next = transitive_closure_step(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw SoundnessError("transitive_closure_fix did not converge within n+1 sweeps");
}

DiGraph simple_transitive_closure_step(const DiGraph& g) {
    if (!g.is_simple()) throw DomainError("simple_transitive_closure_step requires a simple digraph");
    DiGraph out = g;
    const int n = g.n();
    for (int j = 1; j <= n; ++j) {
        auto in = g.in_neighbors(j);
        auto outs = g.out_neighbors(j);
        for (int i : in)
            for (int k : outs)
                if (i != k) out.add_arc(i, k);
    }
    return out;
}

DiGraph simple_transitive_closure_fix(const DiGraph& g) {
    DiGraph cur = g;
    for (int sweep = 0; sweep <= g.n() + 1; ++sweep) {
        DiGraph next = simple_transitive_closure_step(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw SoundnessError("simple_transitive_closure_fix did not converge within n+1 sweeps");
}

UGraph circumjacent_closure(const UGraph& g, int i, int j) {
    if (i == j) throw DomainError("circumjacent closure needs distinct nodes, got " + std::to_string(i) + " twice");
    UGraph out(g.n());
    for (int k : g.neighbors(j))
        if (k != i) out.add_edge(i, k);
    for (int k : g.neighbors(i))
        if (k != j) out.add_edge(j, k);
    return out;
}

DiGraph circumjacent_closure(const DiGraph& g, int i, int j) {
    if (i == j) throw DomainError("circumjacent closure needs distinct nodes, got " + std::to_string(i) + " twice");
    if (!g.is_simple()) throw DomainError("directed circumjacent closure requires a simple digraph");
    DiGraph out(g.n());
    for (int k : g.out_neighbors(j))
        if (k != i) out.add_arc(i, k);
    for (int k : g.in_neighbors(i))
        if (k != j) out.add_arc(k, j);
    return out;
}

UGraph union_graph(const UGraph& a, const UGraph& b) {
    if (a.n() != b.n())
        throw MismatchError("union of graphs on " + std::to_string(a.n()) + " and " + std::to_string(b.n()) + " nodes");
    UGraph out = a;
    for (auto [i, j] : b.edges()) out.add_edge(i, j);
    return out;
}

DiGraph union_graph(const DiGraph& a, const DiGraph& b) {
    if (a.n() != b.n())
        throw MismatchError("union of digraphs on " + std::to_string(a.n()) + " and " + std::to_string(b.n()) + " nodes");
    DiGraph out(a.n(), a.allows_self_loops() || b.allows_self_loops());
    for (auto [i, j] : a.arcs()) out.add_arc(i, j);
    for (auto [i, j] : b.arcs()) out.add_arc(i, j);
    return out;
}

// ------------------------------------------------------ bi-graph reduction

BigraphReduction reduce_bigraph(const UGraph& g, std::span<const int> part) {
    const int n = g.n();
    std::vector<int> side(n + 1, 1);
    for (int v : part) {
        if (v < 1 || v > n) throw DomainError("part node " + std::to_string(v) + " out of range");
        if (side[v] == 0) throw DomainError("part lists node " + std::to_string(v) + " twice");
        side[v] = 0;
    }
    std::vector<int> xs, ys;
    for (int v = 1; v <= n; ++v) (side[v] == 0 ? xs : ys).push_back(v);
    if (xs.size() < 3 || ys.size() < 3) throw DomainError("reduce_bigraph: both parts need at least three nodes");
    if (g.empty()) throw DomainError("reduce_bigraph: graph has no edges");
    for (auto [i, j] : g.edges())
        if (side[i] == side[j]) throw DomainError("reduce_bigraph: edge inside one part, not a bi-graph");

    BigraphReduction r{{}, g};
    auto apply = [&r](int a, int b) {
        r.result = circumjacent_closure(r.result, a, b);
        r.pairs.emplace_back(a, b);
    };
    auto isolated = [&r, n]() {
        for (int v = 1; v <= n; ++v)
            if (r.result.degree(v) == 0) return v;
        return 0;
    };

    if (r.result.edge_count() == 1) return r;

    // No isolated node: close at two nodes of the same side, which leaves
    // every other node of that side isolated.
    if (isolated() == 0) apply(xs[0], xs[1]);

    const int z = isolated();
    const int p_side = side[z];
    int p = 0;
    for (int v = 1; v <= n && p == 0; ++v)
        if (side[v] == p_side && r.result.degree(v) > 0) p = v;
    apply(z, p);  // edges become {z, q} for every former neighbour q of p
    if (r.result.edge_count() == 1) return r;

    auto qs = r.result.neighbors(z);
    const int q1 = qs[0], q2 = qs[1];
    apply(q1, q2);  // leaves {z, q1}, {z, q2}
    int q3 = 0;
    for (int v = 1; v <= n && q3 == 0; ++v)
        if (side[v] != p_side && v != q1 && v != q2) q3 = v;
    apply(q2, q3);  // leaves {z, q3}
    return r;
}

// -------------------------------------------------------------------- DOT

std::string to_dot(const UGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 1; v <= g.n(); ++v) os << "  " << v << ";\n";
    for (auto [i, j] : g.edges()) os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const DiGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int v = 1; v <= g.n(); ++v) os << "  " << v << ";\n";
    for (auto [i, j] : g.arcs()) os << "  " << i << " -> " << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace lieconn
