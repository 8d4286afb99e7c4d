#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kk/binomial.hpp"
#include "kk/extremal.hpp"
#include "kk/graph.hpp"

namespace kk {

inline constexpr std::size_t kExhaustiveVertexCap = 8;  // 2^28 edge masks

struct ExtremalRecord {
    std::uint64_t r = 0, s = 0;
    Count x;      // budget on k_r
    Count bound;  // [x]^r_s
    Count best;   // max k_s found
    Graph witness{1};
    std::string scope;
    bool exhaustive_within_scope = false;
};

namespace detail {

// Dense graphs on <= 8 vertices: one adjacency byte per vertex.
struct MaskGraph {
    std::array<std::uint32_t, 8> adj{};

    void add(int u, int v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    void remove(int u, int v) {
        adj[u] &= ~(1u << v);
        adj[v] &= ~(1u << u);
    }
};

// Number of j-cliques inside the vertex mask; clique vertices are taken
// in increasing order so each clique is counted once.
inline std::uint64_t cliques_in_mask(const MaskGraph& g, std::uint32_t mask, std::uint64_t j) {
    if (j == 0) return 1;
    if (j == 1) return std::popcount(mask);
    std::uint64_t acc = 0;
    std::uint32_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        acc += cliques_in_mask(g, g.adj[v] & rest, j - 1);
    }
    return acc;
}

inline std::vector<std::pair<int, int>> edge_slots(std::size_t v) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < static_cast<int>(v); ++a)
        for (int b = a + 1; b < static_cast<int>(v); ++b) slots.emplace_back(a, b);
    return slots;
}

inline Graph mask_to_graph(std::size_t v, const std::vector<std::pair<int, int>>& slots,
                           std::uint64_t mask) {
    Graph g(v);
    for (std::size_t e = 0; e < slots.size(); ++e)
        if ((mask >> e) & 1) g.add_edge(slots[e].first + 1, slots[e].second + 1);
    return g;
}

struct ScanBest {
    std::uint64_t ks = 0;
    std::uint64_t mask = 0;
    bool found = false;

    // max ks, ties broken by the smaller edge mask: deterministic no
    // matter how the mask space was partitioned
    void offer(std::uint64_t cand_ks, std::uint64_t cand_mask) {
        if (!found || cand_ks > ks || (cand_ks == ks && cand_mask < mask)) {
            ks = cand_ks;
            mask = cand_mask;
            found = true;
        }
    }
    void merge(const ScanBest& o) {
        if (o.found) offer(o.ks, o.mask);
    }
};

// DFS over the remaining edge slots with incremental clique counts.
// Adding an edge can only increase k_r, so a partial graph with k_r > x
// prunes its whole subtree. `leaf` receives (k_r, k_s, mask) per graph.
inline void scan_rec(MaskGraph& g, const std::vector<std::pair<int, int>>& slots, std::size_t e,
                     std::uint64_t mask, std::uint64_t kr, std::uint64_t ks, std::uint64_t r,
                     std::uint64_t s, std::uint64_t x,
                     const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& leaf) {
    if (e == slots.size()) {
        leaf(kr, ks, mask);
        return;
    }
    scan_rec(g, slots, e + 1, mask, kr, ks, r, s, x, leaf);
    auto [a, b] = slots[e];
    std::uint32_t common = g.adj[a] & g.adj[b];
    std::uint64_t dr = cliques_in_mask(g, common, r - 2);
    if (kr + dr > x) return;
    std::uint64_t ds = cliques_in_mask(g, common, s - 2);
    g.add(a, b);
    scan_rec(g, slots, e + 1, mask | (std::uint64_t{1} << e), kr + dr, ks + ds, r, s, x, leaf);
    g.remove(a, b);
}

struct ScanPrefix {
    MaskGraph g;
    std::uint64_t mask = 0, kr = 0, ks = 0;
    bool alive = true;
};

// Materialize a fixed assignment of the first `depth` edge slots.
inline ScanPrefix make_prefix(const std::vector<std::pair<int, int>>& slots, std::size_t depth,
                              std::uint64_t bits, std::uint64_t r, std::uint64_t s,
                              std::uint64_t x) {
    ScanPrefix p;
    for (std::size_t e = 0; e < depth; ++e) {
        if (!((bits >> e) & 1)) continue;
        auto [a, b] = slots[e];
        std::uint32_t common = p.g.adj[a] & p.g.adj[b];
        p.kr += cliques_in_mask(p.g, common, r - 2);
        if (p.kr > x) {
            p.alive = false;
            return p;
        }
        p.ks += cliques_in_mask(p.g, common, s - 2);
        p.g.add(a, b);
        p.mask |= std::uint64_t{1} << e;
    }
    return p;
}

// Full labeled-graph sweep on exactly `v` vertices. The mask space is
// split at a fixed prefix depth; prefix blocks are processed by a thread
// pool in chunks so a checkpoint can record completed chunks.
// `per_leaf`, when set, is called under a mutex-free single-consumer
// discipline only in the single-threaded path.
inline ScanBest exhaustive_scan(std::size_t v, std::uint64_t r, std::uint64_t s, std::uint64_t x,
                                const std::string& checkpoint_path = {},
                                const std::function<void(std::uint64_t, std::uint64_t,
                                                         std::uint64_t)>& per_leaf = nullptr) {
    auto slots = edge_slots(v);
    const std::size_t total_edges = slots.size();
    ScanBest best;

    if (per_leaf) {
        // observer mode: single-threaded, every leaf reported
        MaskGraph g;
        scan_rec(g, slots, 0, 0, 0, 0, r, s, x,
                 [&](std::uint64_t kr, std::uint64_t ks, std::uint64_t mask) {
                     best.offer(ks, mask);
                     per_leaf(kr, ks, mask);
                 });
        return best;
    }

    const std::size_t prefix_depth = std::min<std::size_t>(total_edges, 10);
    const std::uint64_t n_prefixes = std::uint64_t{1} << prefix_depth;
    const std::uint64_t chunk_size = 64;
    std::uint64_t start_chunk = 0;

    std::string header;
    {
        std::ostringstream ss;
        ss << "kk-checkpoint " << v << ' ' << r << ' ' << s << ' ' << x;
        header = ss.str();
    }
    if (!checkpoint_path.empty()) {
        std::ifstream in(checkpoint_path);
        std::string line;
        if (in && std::getline(in, line) && line == header) {
            std::uint64_t done = 0, bks = 0, bmask = 0;
            int found = 0;
            if (in >> done >> bks >> bmask >> found) {
                start_chunk = done;
                if (found) best.offer(bks, bmask);
            }
        }
    }
    auto save_checkpoint = [&](std::uint64_t done_chunks) {
        if (checkpoint_path.empty()) return;
        std::ofstream out(checkpoint_path, std::ios::trunc);
        out << header << '\n'
            << done_chunks << ' ' << best.ks << ' ' << best.mask << ' ' << (best.found ? 1 : 0)
            << '\n';
    };

    const unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t n_chunks = (n_prefixes + chunk_size - 1) / chunk_size;
    for (std::uint64_t chunk = start_chunk; chunk < n_chunks; ++chunk) {
        const std::uint64_t lo = chunk * chunk_size;
        const std::uint64_t hi = std::min(n_prefixes, lo + chunk_size);
        std::atomic<std::uint64_t> next{lo};
        std::vector<ScanBest> partial(n_threads);
        auto worker = [&](unsigned tid) {
            for (std::uint64_t p = next.fetch_add(1); p < hi; p = next.fetch_add(1)) {
                ScanPrefix pre = make_prefix(slots, prefix_depth, p, r, s, x);
                if (!pre.alive) continue;
                scan_rec(pre.g, slots, prefix_depth, pre.mask, pre.kr, pre.ks, r, s, x,
                         [&](std::uint64_t, std::uint64_t ks, std::uint64_t mask) {
                             partial[tid].offer(ks, mask);
                         });
            }
        };
        if (n_threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
            for (auto& th : pool) th.join();
        }
        for (const auto& pb : partial) best.merge(pb);
        save_checkpoint(chunk + 1);
    }
    return best;
}

}  // namespace detail

/// Max k_s over all labeled graphs on exactly v_max vertices with
/// k_r <= x. Isolated vertices are free, so this covers every graph on at
/// most v_max vertices; the result is certified only relative to that cap.
inline ExtremalRecord exhaustive_extremal(std::size_t v_max, std::uint64_t r, std::uint64_t s,
                                          const Count& x, const std::string& checkpoint_path = {}) {
    if (!(2 <= r && r < s && s <= v_max))
        throw std::invalid_argument("exhaustive_extremal: need 2 <= r < s <= v_max");
    if (v_max > kExhaustiveVertexCap)
        throw std::invalid_argument("exhaustive_extremal: v_max exceeds hard cap " +
                                    std::to_string(kExhaustiveVertexCap) +
                                    " (2^28 edge masks is the supported limit)");
    if (x < 0) throw std::invalid_argument("exhaustive_extremal: need x >= 0");
    // a budget beyond C(v_max, r) never binds inside the scope
    Count cap = binom(v_max, r);
    std::uint64_t x_eff = Count(x < cap ? x : cap).convert_to<std::uint64_t>();

    auto slots = detail::edge_slots(v_max);
    detail::ScanBest best = detail::exhaustive_scan(v_max, r, s, x_eff, checkpoint_path);

    ExtremalRecord rec;
    rec.r = r;
    rec.s = s;
    rec.x = x;
    rec.bound = kk_bound(x, r, s);
    rec.best = best.ks;
    rec.witness = detail::mask_to_graph(v_max, slots, best.mask);
    rec.scope = "exhaustive over all graphs on <= " + std::to_string(v_max) + " vertices";
    rec.exhaustive_within_scope = true;
    return rec;
}

/// Seeded hill climbing over edge flips maximizing k_s subject to
/// k_r <= x. Restarts cycle through the apex and Turan construction
/// starts, then random graphs; deterministic for a fixed seed. The result
/// never falls below the best feasible construction start.
inline ExtremalRecord heuristic_extremal(std::size_t v_max, std::uint64_t r, std::uint64_t s,
                                         const Count& x, std::uint64_t seed,
                                         std::uint64_t iterations) {
    if (!(2 <= r && r < s && s <= v_max))
        throw std::invalid_argument("heuristic_extremal: need 2 <= r < s <= v_max");
    if (iterations < 1) throw std::invalid_argument("heuristic_extremal: need iterations >= 1");

    std::vector<Graph> starts;
    starts.push_back(Graph(v_max));  // edgeless, always feasible
    for (std::size_t k = 1; k <= v_max; ++k) starts.push_back(turan_graph(v_max, k));
    if (v_max >= 2)
        for (std::size_t m = 0; m <= v_max - 1; ++m)
            starts.push_back(apex_construction(v_max - 1, {m}));
    if (v_max >= 3)
        for (std::size_t m = 0; m <= v_max - 2; ++m)
            for (std::size_t w = 0; w <= m; ++w)
                starts.push_back(apex_construction(v_max - 2, {m, w}));

    Count best_ks = -1;
    Graph best_g(1);
    auto consider = [&](const Graph& g) {
        if (count_cliques(g, r) > x) return false;
        Count ks = count_cliques(g, s);
        if (ks > best_ks) {
            best_ks = ks;
            best_g = g;
        }
        return true;
    };
    std::vector<Graph> feasible;
    for (const auto& g : starts)
        if (consider(g)) feasible.push_back(g);

    std::mt19937_64 rng(seed);
    auto climb = [&](Graph g) {
        Count kr = count_cliques(g, r);
        Count ks = count_cliques(g, s);
        bool improved = true;
        while (improved) {
            improved = false;
            // first-improvement over vertex pairs in lexicographic order
            for (std::size_t u = 1; u <= v_max && !improved; ++u)
                for (std::size_t v = u + 1; v <= v_max && !improved; ++v) {
                    bool had = g.has_edge(u, v);
                    if (had)
                        g.remove_edge(u, v);
                    else
                        g.add_edge(u, v);
                    Count nkr = count_cliques(g, r);
                    Count nks = count_cliques(g, s);
                    if (nkr <= x && nks > ks) {
                        kr = nkr;
                        ks = nks;
                        improved = true;
                    } else {
                        if (had)
                            g.add_edge(u, v);
                        else
                            g.remove_edge(u, v);
                    }
                }
        }
        consider(g);
    };

    for (std::uint64_t it = 0; it < iterations; ++it) {
        if (it < feasible.size()) {
            climb(feasible[it]);
        } else {
            // random start, repaired to feasibility by deleting edges
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            double p = 0.2 + 0.6 * coin(rng);
            Graph g(v_max);
            for (std::size_t u = 1; u <= v_max; ++u)
                for (std::size_t v = u + 1; v <= v_max; ++v)
                    if (coin(rng) < p) g.add_edge(u, v);
            while (count_cliques(g, r) > x) {
                auto es = g.edges();
                std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
                auto [eu, ev] = es[pick(rng)];
                g.remove_edge(eu, ev);
            }
            climb(g);
        }
    }

    ExtremalRecord rec;
    rec.r = r;
    rec.s = s;
    rec.x = x;
    rec.bound = kk_bound(x, r, s);
    rec.best = best_ks;
    rec.witness = best_g;
    rec.scope = "heuristic hill climb on " + std::to_string(v_max) + " vertices, seed " +
                std::to_string(seed) + ", " + std::to_string(iterations) + " restarts";
    rec.exhaustive_within_scope = false;
    return rec;
}

struct ConjectureReport {
    std::uint64_t n = 0;
    Count x;
    Count bound;          // [x]^3_4
    Count best_in_scope;  // exhaustive max k_4 with k_3 <= x on <= v_max vertices
    bool bound_attained_in_scope = false;
    bool scope_sufficient = false;  // false when the budget never binds at v_max
    ExtremalRecord record{};
};

/// Exhaustively probe k_4(k_3 <= x) for x = C(n,3) - 2(n-2) on graphs
/// with at most v_max vertices. The true value always sits in
/// [bound-1, bound]; a graph attaining `bound` in scope would refute the
/// conjectured value bound-1.
inline ConjectureReport conjecture_check(std::uint64_t n, std::size_t v_max) {
    if (n <= 6) throw std::invalid_argument("conjecture_check: need n > 6");
    ConjectureReport rep;
    rep.n = n;
    rep.x = turan_k3_count(n);
    rep.bound = kk_bound(rep.x, 3, 4);
    rep.record = exhaustive_extremal(v_max, 3, 4, rep.x);
    rep.best_in_scope = rep.record.best;
    rep.bound_attained_in_scope = rep.best_in_scope == rep.bound;
    rep.scope_sufficient = rep.x < binom(v_max, 3);
    return rep;
}

struct TightnessRow {
    Count x;
    Count bound;
    Count best;  // exhaustive best within scope
    bool tight;  // best == bound
};

/// For each x in 0..x_max, compare the exhaustive best-in-scope with the
/// bound [x]^r_s. A single sweep collects the best k_s at every exact
/// k_r value; per-budget bests are its running maximum.
inline std::vector<TightnessRow> tightness_scan(std::uint64_t r, std::uint64_t s,
                                                std::uint64_t x_max, std::size_t v_max) {
    if (!(2 <= r && r < s && s <= v_max))
        throw std::invalid_argument("tightness_scan: need 2 <= r < s <= v_max");
    if (v_max > kExhaustiveVertexCap)
        throw std::invalid_argument("tightness_scan: v_max exceeds hard cap");
    Count cap = binom(v_max, r);
    std::uint64_t x_eff = Count(Count(x_max) < cap ? Count(x_max) : cap).convert_to<std::uint64_t>();

    std::vector<std::uint64_t> best_at(x_eff + 1, 0);
    detail::exhaustive_scan(v_max, r, s, x_eff, {},
                            [&](std::uint64_t kr, std::uint64_t ks, std::uint64_t) {
                                if (kr <= x_eff) best_at[kr] = std::max(best_at[kr], ks);
                            });
    for (std::size_t i = 1; i < best_at.size(); ++i) best_at[i] = std::max(best_at[i], best_at[i - 1]);

    std::vector<TightnessRow> rows;
    for (std::uint64_t x = 0; x <= x_max; ++x) {
        TightnessRow row;
        row.x = x;
        row.bound = kk_bound(Count(x), r, s);
        row.best = best_at[std::min<std::uint64_t>(x, x_eff)];
        row.tight = row.best == row.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kk
