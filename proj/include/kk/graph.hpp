#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kk/binomial.hpp"

namespace kk {

namespace detail {

// Fixed-width bit rows: one uint64_t word for graphs up to 64 vertices,
// a word vector above that. All adjacency work reduces to AND + popcount.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        r.words_.resize(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(wi * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

  private:
    std::vector<std::uint64_t> words_;
};

}  // namespace detail

// Simple undirected labeled graph; vertices are 1..n externally, 0..n-1
// internally. No loops or multi-edges.
class Graph {
  public:
    explicit Graph(std::size_t n) : n_(n), adj_(n, detail::VertexSet(n)) {
        if (n < 1) throw std::invalid_argument("Graph: need n >= 1");
    }

    std::size_t vertex_count() const { return n_; }

    std::size_t edge_count() const {
        std::size_t deg_sum = 0;
        for (const auto& row : adj_) deg_sum += row.count();
        return deg_sum / 2;
    }

    // 1-based labels
    void add_edge(std::size_t u, std::size_t v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        adj_[u - 1].set(v - 1);
        adj_[v - 1].set(u - 1);
    }

    void remove_edge(std::size_t u, std::size_t v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u - 1].reset(v - 1);
        adj_[v - 1].reset(u - 1);
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u - 1].test(v - 1);
    }

    std::size_t degree(std::size_t v) const {
        check_vertex(v);
        return adj_[v - 1].count();
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t u = 0; u < n_; ++u)
            adj_[u].for_each([&](std::size_t v) {
                if (u < v) out.emplace_back(u + 1, v + 1);
            });
        return out;
    }

    const detail::VertexSet& row(std::size_t v) const { return adj_[v - 1]; }

  private:
    void check_vertex(std::size_t v) const {
        if (v < 1 || v > n_) throw std::out_of_range("Graph: vertex label out of range");
    }

    std::size_t n_;
    std::vector<detail::VertexSet> adj_;
};

// k_r(g) for every r in 1..r_max
struct CliqueProfile {
    std::map<std::uint64_t, Count> counts;
};

/// K_n.
inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

/// K_n plus one external vertex per attachment entry; the i-th external
/// vertex is joined to vertices 1..a_i of K_n. External vertices are
/// mutually non-adjacent. Two entries [m, w] give the tight-bound witness.
inline Graph apex_construction(std::size_t n, const std::vector<std::size_t>& attachments) {
    for (auto a : attachments)
        if (a > n) throw std::invalid_argument("apex_construction: attachment exceeds n");
    Graph g(n + attachments.size());
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v) g.add_edge(u, v);
    for (std::size_t i = 0; i < attachments.size(); ++i)
        for (std::size_t v = 1; v <= attachments[i]; ++v) g.add_edge(n + 1 + i, v);
    return g;
}

/// K_n with edges (n,1), ..., (n,p) removed. Requires p < n.
inline Graph complete_minus_star(std::size_t n, std::size_t p) {
    if (p >= n) throw std::invalid_argument("complete_minus_star: need p < n");
    Graph g = complete_graph(n);
    for (std::size_t v = 1; v <= p; ++v) g.remove_edge(n, v);
    return g;
}

/// Turan graph T(n,k): complete k-partite, part sizes as equal as possible.
/// Vertex v goes to part ((v-1) mod k) + 1, so parts 1..(n mod k) get the
/// extra vertex.
inline Graph turan_graph(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw std::invalid_argument("turan_graph: need 1 <= k <= n");
    Graph g(n);
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if ((u - 1) % k != (v - 1) % k) g.add_edge(u, v);
    return g;
}

/// K_n minus the two disjoint edges (1,2) and (3,4); isomorphic to T(n,n-2).
inline Graph complete_minus_two_disjoint_edges(std::size_t n) {
    if (n < 4) throw std::invalid_argument("complete_minus_two_disjoint_edges: need n >= 4");
    Graph g = complete_graph(n);
    g.remove_edge(1, 2);
    g.remove_edge(3, 4);
    return g;
}

namespace detail {

// Degeneracy order by iterated min-degree removal (bucket queue), ties
// broken by smallest label. Returns internal 0-based vertex ids in order.
inline std::vector<std::size_t> degeneracy_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n), order;
    std::vector<bool> removed(n, false);
    std::size_t max_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v + 1);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::vector<std::size_t>> bucket(max_deg + 1);
    for (std::size_t v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
    order.reserve(n);
    std::size_t cur = 0;
    while (order.size() < n) {
        while (cur <= max_deg && bucket[cur].empty()) ++cur;
        if (cur > max_deg) break;
        // smallest label with minimum current degree; entries may be stale
        std::size_t pick = n;
        for (std::size_t v : bucket[cur])
            if (!removed[v] && deg[v] == cur) pick = std::min(pick, v);
        if (pick == n) {
            bucket[cur].clear();
            continue;
        }
        std::erase(bucket[cur], pick);
        removed[pick] = true;
        order.push_back(pick);
        g.row(pick + 1).for_each([&](std::size_t u) {
            if (!removed[u]) {
                --deg[u];
                bucket[deg[u]].push_back(u);
                cur = std::min(cur, deg[u]);
            }
        });
    }
    return order;
}

// Count cliques of size `need` inside the candidate set, where every
// candidate is adjacent to all clique vertices chosen so far.
inline void count_rec(const std::vector<VertexSet>& out_adj, const VertexSet& cand,
                      std::size_t need, Count& acc) {
    if (need == 1) {
        acc += cand.count();
        return;
    }
    if (cand.count() < need) return;
    cand.for_each([&](std::size_t v) { count_rec(out_adj, cand & out_adj[v], need - 1, acc); });
}

// Forward-adjacency rows in degeneracy order: out_adj[v] holds the
// neighbors of v that come later in the order.
inline std::vector<VertexSet> forward_adjacency(const Graph& g) {
    const std::size_t n = g.vertex_count();
    auto order = degeneracy_order(g);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<VertexSet> out_adj(n, VertexSet(n));
    for (std::size_t v = 0; v < n; ++v)
        g.row(v + 1).for_each([&](std::size_t u) {
            if (pos[u] > pos[v]) out_adj[v].set(u);
        });
    return out_adj;
}

}  // namespace detail

/// Exact number of K_r subgraphs, counted (never materialized) over the
/// degeneracy order.
inline Count count_cliques(const Graph& g, std::uint64_t r) {
    if (r < 1) throw std::invalid_argument("count_cliques: need r >= 1");
    const std::size_t n = g.vertex_count();
    if (r > n) return 0;
    if (r == 1) return n;
    auto out_adj = detail::forward_adjacency(g);
    Count acc = 0;
    for (std::size_t v = 0; v < n; ++v) detail::count_rec(out_adj, out_adj[v], r - 1, acc);
    return acc;
}

/// k_r for all r in 1..r_max in a single traversal.
inline CliqueProfile clique_profile(const Graph& g, std::uint64_t r_max) {
    if (r_max < 1) throw std::invalid_argument("clique_profile: need r_max >= 1");
    const std::size_t n = g.vertex_count();
    CliqueProfile profile;
    for (std::uint64_t r = 1; r <= r_max; ++r) profile.counts[r] = 0;
    profile.counts[1] = n;
    if (r_max == 1) return profile;
    auto out_adj = detail::forward_adjacency(g);
    // each recursion node is one clique; record its extensions by size
    auto walk = [&](auto&& self, const detail::VertexSet& cand, std::uint64_t size) -> void {
        profile.counts[size + 1] += cand.count();
        if (size + 1 >= r_max) return;
        cand.for_each([&](std::size_t v) { self(self, cand & out_adj[v], size + 1); });
    };
    for (std::size_t v = 0; v < n; ++v) walk(walk, out_adj[v], 1);
    return profile;
}

/// Maximal induced subgraph with minimum degree >= k; vertices are
/// relabeled 1..n' preserving relative order. Returns the core together
/// with its vertex count (a 1-vertex edgeless graph stands in for the
/// empty core, since Graph has no empty state).
struct CoreResult {
    Graph core;
    std::size_t core_size;  // 0 when the core is empty
};

inline CoreResult k_core(const Graph& g, std::size_t k) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<bool> dead(n, false);
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v + 1);
        if (deg[v] < k) {
            dead[v] = true;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        std::size_t v = queue.back();
        queue.pop_back();
        g.row(v + 1).for_each([&](std::size_t u) {
            if (!dead[u] && --deg[u] < k) {
                dead[u] = true;
                queue.push_back(u);
            }
        });
    }
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < n; ++v)
        if (!dead[v]) keep.push_back(v);
    if (keep.empty()) return {Graph(1), 0};
    std::vector<std::size_t> new_label(n, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) new_label[keep[i]] = i + 1;
    Graph core(keep.size());
    for (std::size_t v : keep)
        g.row(v + 1).for_each([&](std::size_t u) {
            if (!dead[u] && v < u) core.add_edge(new_label[v], new_label[u]);
        });
    return {std::move(core), keep.size()};
}

struct PruneCountResult {
    Count count;
    std::size_t core_size;
};

/// Count K_s after restricting to the (s-1)-core; pruning removes no K_s.
inline PruneCountResult prune_then_count(const Graph& g, std::uint64_t s) {
    if (s < 2) throw std::invalid_argument("prune_then_count: need s >= 2");
    auto [core, size] = k_core(g, s - 1);
    if (size == 0) return {0, 0};
    return {count_cliques(core, s), size};
}

}  // namespace kk
