#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kk/binomial.hpp"
#include "kk/graph.hpp"

namespace kk {

/// k_3 of T(n,n-2): C(n,3) - 2(n-2).
inline Count turan_k3_count(std::uint64_t n) {
    if (n < 4) throw std::invalid_argument("turan_k3_count: need n >= 4");
    return binom(n, 3) - 2 * Count(n - 2);
}

/// k_4 of T(n,n-2): C(n,4) - 2*C(n-2,2) + 1.
inline Count turan_k4_count(std::uint64_t n) {
    if (n < 4) throw std::invalid_argument("turan_k4_count: need n >= 4");
    return binom(n, 4) - 2 * binom(n - 2, 2) + 1;
}

/// k_5 of T(n,n-2): C(n,5) - 2*C(n-2,3) + (n-4).
inline Count turan_k5_count(std::uint64_t n) {
    if (n < 5) throw std::invalid_argument("turan_k5_count: need n >= 5");
    return binom(n, 5) - 2 * binom(n - 2, 3) + Count(n - 4);
}

struct VerifyReport {
    bool pass = false;
    std::string detail;
};

/// Tight-bound check for the single-apex construction: build K_n plus one
/// external vertex joined to m base vertices, count k_r and k_s, and
/// compare against C(n,r)+C(m,r-1), C(n,s)+C(m,s-1), and the bound
/// kk_bound(k_r, r, s).
inline VerifyReport verify_bollobas(std::uint64_t n, std::uint64_t m, std::uint64_t r,
                                    std::uint64_t s) {
    if (!(r < s && s < n)) throw std::invalid_argument("verify_bollobas: need r < s < n");
    if (m >= n) throw std::invalid_argument("verify_bollobas: need m < n");
    if (m + 1 < r) throw std::invalid_argument("verify_bollobas: need m >= r-1");
    Graph g = apex_construction(n, {m});
    Count kr = count_cliques(g, r);
    Count ks = count_cliques(g, s);
    Count kr_formula = binom(n, r) + binom(m, r - 1);
    Count ks_formula = binom(n, s) + binom(m, s - 1);
    Count bound = kk_bound(kr, r, s);
    bool pass = kr == kr_formula && ks == ks_formula && ks == bound;
    std::ostringstream ss;
    ss << "k_" << r << "=" << kr << " (formula " << kr_formula << "), k_" << s << "=" << ks
       << " (formula " << ks_formula << "), bound=" << bound;
    return {pass, ss.str()};
}

/// Locate t >= r-2 with C(t,r-2) = C(w,r-1), scanning t up to `cap`
/// (default 4w).
inline std::optional<std::uint64_t> find_theorem3_t(std::uint64_t w, std::uint64_t r,
                                                    std::uint64_t cap = 0) {
    if (r < 2) return std::nullopt;
    if (cap == 0) cap = 4 * w > 8 ? 4 * w : 8;
    Count target = binom(w, r - 1);
    for (std::uint64_t t = r - 2; t <= cap; ++t)
        if (binom(t, r - 2) == target) return t;
    return std::nullopt;
}

/// Tight-bound check for the double-apex construction [m, w]:
/// x = C(n,r)+C(m,r-1)+C(w,r-1) must be attained as k_r, and
/// k_s = C(n,s)+C(m,s-1) must equal the bound [x]^r_s.
inline VerifyReport verify_theorem3(std::uint64_t n, std::uint64_t m, std::uint64_t w,
                                    std::uint64_t r, std::uint64_t s) {
    if (!(r < s)) throw std::invalid_argument("verify_theorem3: need r < s");
    if (m >= n) throw std::invalid_argument("verify_theorem3: need m < n");
    if (w > m) throw std::invalid_argument("verify_theorem3: need w <= m");
    auto t = find_theorem3_t(w, r);
    if (!t)
        throw std::invalid_argument("verify_theorem3: no t with C(t," + std::to_string(r - 2) +
                                    ") = C(" + std::to_string(w) + "," + std::to_string(r - 1) +
                                    ")");
    if (!(s >= 2 && s - 2 > *t))
        throw std::invalid_argument("verify_theorem3: need s-2 > t (t=" + std::to_string(*t) + ")");
    if (!(s - 1 > w)) throw std::invalid_argument("verify_theorem3: need s-1 > w");
    Graph g = apex_construction(n, {m, w});
    Count x = binom(n, r) + binom(m, r - 1) + binom(w, r - 1);
    Count kr = count_cliques(g, r);
    Count ks = count_cliques(g, s);
    Count ks_formula = binom(n, s) + binom(m, s - 1);
    Count bound = kk_bound(x, r, s);
    bool pass = kr == x && ks == ks_formula && ks == bound;
    std::ostringstream ss;
    ss << "x=" << x << " (counted k_" << r << "=" << kr << "), k_" << s << "=" << ks
       << " (formula " << ks_formula << "), bound=" << bound << ", t=" << *t;
    return {pass, ss.str()};
}

struct Corollary1Params {
    std::uint64_t r, t, w;
};

/// For u > 1, s >= 2u+2: the central identity C(2u-1,u-1) = C(2u-1,u)
/// supplies t = w = 2u-1 for the double-apex construction with r = u+1.
inline Corollary1Params corollary1_params(std::uint64_t u, std::uint64_t s) {
    if (u <= 1) throw std::invalid_argument("corollary1_params: need u > 1");
    if (s < 2 * u + 2) throw std::invalid_argument("corollary1_params: need s >= 2u+2");
    std::uint64_t r = u + 1, tw = 2 * u - 1;
    if (binom(tw, r - 2) != binom(tw, r - 1))
        throw std::logic_error("corollary1_params: central identity failed");
    return {r, tw, tw};
}

struct PlateauReport {
    bool pass = false;
    Count plateau_length;
    Count constant_bound;
    std::string detail;
};

/// The bound [y]^r_s is constant over y in [C(n,r)+C(m,r-1), x] with
/// x = C(n,r)+C(m,r-1)+C(t,r-2); plateau length is C(t,r-2)+1.
inline PlateauReport plateau_check(std::uint64_t n, std::uint64_t m, std::uint64_t t,
                                   std::uint64_t r, std::uint64_t s) {
    if (!(r >= 2 && r < s)) throw std::invalid_argument("plateau_check: need 2 <= r < s");
    if (m >= n) throw std::invalid_argument("plateau_check: need m < n");
    if (!(s - 2 > t)) throw std::invalid_argument("plateau_check: need s-2 > t");
    Count lo = binom(n, r) + binom(m, r - 1);
    Count x = lo + binom(t, r - 2);
    Count expected = binom(n, s) + binom(m, s - 1);
    bool pass = true;
    for (Count y = lo; y <= x; ++y)
        if (kk_bound(y, r, s) != expected) {
            pass = false;
            break;
        }
    PlateauReport rep;
    rep.pass = pass;
    rep.plateau_length = x - lo + 1;
    rep.constant_bound = expected;
    std::ostringstream ss;
    ss << "bound " << expected << " constant over [" << lo << "," << x << "], length "
       << rep.plateau_length;
    rep.detail = ss.str();
    return rep;
}

/// Counted k_s of K_n minus a p-edge star matches the single-apex formula
/// C(n-1,s) + C(n-1-p,s-1).
inline VerifyReport verify_theorem4(std::uint64_t n, std::uint64_t p, std::uint64_t s) {
    if (p >= n) throw std::invalid_argument("verify_theorem4: need p < n");
    Graph g = complete_minus_star(n, p);
    Count ks = count_cliques(g, s);
    Count formula = binom(n - 1, s) + binom(n - 1 - p, s - 1);
    std::ostringstream ss;
    ss << "k_" << s << "=" << ks << ", formula C(" << n - 1 << "," << s << ")+C(" << n - 1 - p
       << "," << s - 1 << ")=" << formula;
    return {ks == formula, ss.str()};
}

/// C(n,4) - 2C(n-2,2) + 1 = C(n-1,4) + C(n-4,3) + C(n-5,2) - 1, n > 6.
inline bool verify_identity_t5(std::uint64_t n) {
    if (n <= 6) throw std::invalid_argument("verify_identity_t5: need n > 6");
    Count lhs = binom(n, 4) - 2 * binom(n - 2, 2) + 1;
    Count rhs = binom(n - 1, 4) + binom(n - 4, 3) + binom(n - 5, 2) - 1;
    return lhs == rhs;
}

/// C(n,5) - 2C(n-2,3) + (2n-9) = C(n-1,5) + C(n-4,4) + C(n-5,3), n > 6.
inline bool verify_identity_t6(std::uint64_t n) {
    if (n <= 6) throw std::invalid_argument("verify_identity_t6: need n > 6");
    Count lhs = binom(n, 5) - 2 * binom(n - 2, 3) + Count(2 * n - 9);
    Count rhs = binom(n - 1, 5) + binom(n - 4, 4) + binom(n - 5, 3);
    return lhs == rhs;
}

/// The 3-canonical form of x = C(n,3) - 2(n-2) is
/// C(n-1,3) + C(n-4,2) + C(n-5,1), n > 6.
inline bool verify_canonical_x(std::uint64_t n) {
    if (n <= 6) throw std::invalid_argument("verify_canonical_x: need n > 6");
    CanonicalRep rep = canonical_rep(turan_k3_count(n), 3);
    return rep.terms == std::vector<BinomTerm>{{n - 1, 3}, {n - 4, 2}, {n - 5, 1}};
}

struct GapRow {
    std::uint64_t n;
    Count x;       // k_r of T(n,n-2), r = 3
    Count actual;  // k_s of T(n,n-2)
    Count bound;   // [x]^3_s
    Count gap;     // bound - actual, >= 0 by the Kruskal-Katona theorem
};

/// Rows (n, k3, k5, [k3]^3_5, gap) for T(n,n-2), n in [n_min, n_max].
/// Formula values are cross-checked against direct counting.
inline std::vector<GapRow> table_section3(std::uint64_t n_min, std::uint64_t n_max) {
    if (n_min < 6 || n_min > n_max)
        throw std::invalid_argument("table_section3: need 6 <= n_min <= n_max");
    std::vector<GapRow> rows;
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        GapRow row;
        row.n = n;
        row.x = turan_k3_count(n);
        row.actual = turan_k5_count(n);
        Graph t = turan_graph(n, n - 2);
        if (count_cliques(t, 3) != row.x || count_cliques(t, 5) != row.actual)
            throw std::logic_error("table_section3: formula/count mismatch at n=" +
                                   std::to_string(n));
        row.bound = kk_bound(row.x, 3, 5);
        row.gap = row.bound - row.actual;
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Gap rows for (r,s) = (3,4) or (3,5) on T(n,n-2); the gap column must be
/// the constant 1 for (3,4) and n-5 for (3,5). `pass` is false on any
/// deviation.
struct GapReport {
    std::vector<GapRow> rows;
    bool pass = true;
};

inline GapReport gap_report(std::uint64_t s, std::uint64_t n_min, std::uint64_t n_max) {
    if (s != 4 && s != 5) throw std::invalid_argument("gap_report: pair must be (3,4) or (3,5)");
    if (n_min <= 6 || n_min > n_max)
        throw std::invalid_argument("gap_report: need 6 < n_min <= n_max");
    GapReport rep;
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        GapRow row;
        row.n = n;
        row.x = turan_k3_count(n);
        row.actual = s == 4 ? turan_k4_count(n) : turan_k5_count(n);
        row.bound = kk_bound(row.x, 3, s);
        row.gap = row.bound - row.actual;
        Count expected_gap = s == 4 ? Count(1) : Count(n - 5);
        if (row.gap != expected_gap) rep.pass = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

inline std::string to_csv(const std::vector<GapRow>& rows, std::uint64_t s) {
    std::ostringstream ss;
    ss << "n,K3,K" << s << ",bound,gap\n";
    for (const auto& r : rows)
        ss << r.n << ',' << r.x << ',' << r.actual << ',' << r.bound << ',' << r.gap << '\n';
    return ss.str();
}

}  // namespace kk
