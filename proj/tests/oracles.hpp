#pragma once

// Independent oracles used to freeze expected values. These deliberately
// avoid the library's own code paths: binomials come from a literal
// Pascal recurrence, clique counts from subset enumeration.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "kk/binomial.hpp"
#include "kk/graph.hpp"

namespace oracle {

// C(n,k) by the Pascal recurrence, no closed form, no tables shared with
// the implementation.
inline kk::Count pascal_binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::vector<kk::Count> row(k + 1, 0);
    row[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

// Largest t with C(t,b) <= x, by linear scan from t = b upward. The
// Pascal row is extended one t at a time, never via a closed form.
inline std::uint64_t scan_max_top(const kk::Count& x, std::uint64_t b) {
    std::vector<kk::Count> row(b + 1, 0);  // row[j] = C(t, j) for j <= b
    row[0] = 1;
    std::uint64_t t = 0;
    for (;;) {
        // extend from C(t,.) to C(t+1,.)
        for (std::uint64_t j = b; j >= 1; --j) row[j] += row[j - 1];
        if (row[b] > x) return t;
        ++t;
    }
}

// k_r by enumerating all r-subsets of the vertex set.
inline kk::Count enumerate_cliques(const kk::Graph& g, std::uint64_t r) {
    const std::size_t n = g.vertex_count();
    if (r > n) return 0;
    std::vector<std::size_t> pick(r);
    kk::Count total = 0;
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == r) {
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i + 1; j < r; ++j)
                    if (!g.has_edge(pick[i], pick[j])) return;
            ++total;
            return;
        }
        for (std::size_t v = start; v <= n; ++v) {
            pick[depth] = v;
            self(self, depth + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return total;
}

inline kk::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    kk::Graph g(n);
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

// Relabel vertices by a uniformly random permutation.
inline kk::Graph permute(const kk::Graph& g, std::mt19937_64& rng) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    kk::Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u - 1], perm[v - 1]);
    return h;
}

}  // namespace oracle
