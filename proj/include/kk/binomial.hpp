#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kk {

// Exact non-negative integer used for all clique counts and binomials.
using Count = boost::multiprecision::cpp_int;

namespace detail {

// C(n,k) for n <= 62 fits in uint64_t; precomputed Pascal triangle.
inline const std::vector<std::vector<std::uint64_t>>& pascal_table() {
    static const auto table = [] {
        std::vector<std::vector<std::uint64_t>> t(63);
        for (unsigned n = 0; n <= 62; ++n) {
            t[n].resize(n + 1);
            t[n][0] = t[n][n] = 1;
            for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

}  // namespace detail

/// C(n,k); 0 when n < k, 1 when k = 0.
inline Count binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    if (n <= 62) return detail::pascal_table()[n][k];
    // multiply/divide one factor at a time; each prefix is itself a binomial,
    // so the division is always exact
    Count r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

struct BinomTerm {
    std::uint64_t top;     // n, m, ..., u
    std::uint64_t bottom;  // r, r-1, ..., r-j

    bool operator==(const BinomTerm&) const = default;
};

// Cascade representation x = C(n,r) + C(m,r-1) + ... + C(u,r-j) with
// strictly decreasing tops and consecutive descending bottoms.
// An empty term list represents x = 0.
struct CanonicalRep {
    std::uint64_t r = 1;
    std::vector<BinomTerm> terms;
};

/// Largest t with C(t,b) <= x. Requires x >= 1.
inline std::uint64_t max_top(const Count& x, std::uint64_t b) {
    if (x <= 0) throw std::invalid_argument("max_top: x must be >= 1");
    if (b == 0) throw std::invalid_argument("max_top: b must be >= 1");
    // exponential probe from t = b (where C(b,b) = 1 <= x), then binary search
    std::uint64_t lo = b, hi = b;
    while (binom(hi, b) <= x) {
        lo = hi;
        hi = hi < 2 * b ? 2 * b : 2 * hi;
    }
    // invariant: C(lo,b) <= x < C(hi,b)
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (binom(mid, b) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

/// Greedy cascade expansion of x at level r.
inline CanonicalRep canonical_rep(const Count& x, std::uint64_t r) {
    if (r < 1) throw std::invalid_argument("canonical_rep: r must be >= 1");
    if (x < 0) throw std::invalid_argument("canonical_rep: x must be >= 0");
    CanonicalRep rep;
    rep.r = r;
    Count rem = x;
    std::uint64_t b = r;
    while (rem > 0) {
        std::uint64_t t = max_top(rem, b);
        rep.terms.push_back({t, b});
        rem -= binom(t, b);
        --b;  // reaches 0 only after rem hits 0: level 1 always closes exactly
    }
    return rep;
}

/// Sum of C(top, bottom) over the representation's terms.
inline Count eval_rep(const CanonicalRep& rep) {
    Count sum = 0;
    for (const auto& t : rep.terms) sum += binom(t.top, t.bottom);
    return sum;
}

/// [x]^r_s: re-evaluate the cascade with every bottom index shifted r -> s.
/// Terms whose top drops below the shifted bottom contribute 0.
inline Count shift_rep(const CanonicalRep& rep, std::uint64_t s) {
    if (s <= rep.r) throw std::invalid_argument("shift_rep: s must exceed rep.r");
    const std::uint64_t d = s - rep.r;
    Count sum = 0;
    for (const auto& t : rep.terms) sum += binom(t.top, t.bottom + d);
    return sum;
}

/// Kruskal-Katona bound [x]^r_s on k_s of any graph with k_r <= x.
inline Count kk_bound(const Count& x, std::uint64_t r, std::uint64_t s) {
    if (r < 1 || r >= s) throw std::invalid_argument("kk_bound: need 1 <= r < s");
    return shift_rep(canonical_rep(x, r), s);
}

/// Render as "C(11,3)+C(8,2)+C(7,1)"; "0" for the empty representation.
inline std::string to_string(const CanonicalRep& rep) {
    if (rep.terms.empty()) return "0";
    std::string out;
    for (const auto& t : rep.terms) {
        if (!out.empty()) out += '+';
        out += "C(" + std::to_string(t.top) + "," + std::to_string(t.bottom) + ")";
    }
    return out;
}

}  // namespace kk
