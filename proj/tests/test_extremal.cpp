#include <catch2/catch_amalgamated.hpp>

#include "kk/extremal.hpp"
#include "oracles.hpp"

using kk::binom;
using kk::Count;

TEST_CASE("closed-form T(n,n-2) clique counts") {
    CHECK(kk::turan_k3_count(12) == 200);
    CHECK(kk::turan_k3_count(6) == 12);
    CHECK(kk::turan_k3_count(15) == 429);
    CHECK(kk::turan_k4_count(12) == 406);
    CHECK(kk::turan_k4_count(4) == 0);
    CHECK(kk::turan_k4_count(7) == 16);
    CHECK(kk::turan_k5_count(10) == 146);
    CHECK(kk::turan_k5_count(6) == 0);
    CHECK(kk::turan_k5_count(15) == 2442);
    CHECK_THROWS_AS(kk::turan_k3_count(3), std::invalid_argument);
    CHECK_THROWS_AS(kk::turan_k5_count(4), std::invalid_argument);
}

TEST_CASE("formulas agree with enumeration on T(n,n-2)") {
    for (std::uint64_t n = 5; n <= 16; ++n) {
        kk::Graph t = kk::turan_graph(n, n - 2);
        CAPTURE(n);
        REQUIRE(kk::turan_k3_count(n) == kk::count_cliques(t, 3));
        REQUIRE(kk::turan_k4_count(n) == kk::count_cliques(t, 4));
        REQUIRE(kk::turan_k5_count(n) == kk::count_cliques(t, 5));
    }
}

TEST_CASE("verify_bollobas") {
    auto r1 = kk::verify_bollobas(11, 10, 5, 10);
    CHECK(r1.pass);
    CHECK(kk::count_cliques(kk::apex_construction(11, {10}), 5) == 672);
    CHECK(kk::count_cliques(kk::apex_construction(11, {10}), 10) == 21);
    CHECK(kk::verify_bollobas(6, 3, 2, 3).pass);
    CHECK(kk::count_cliques(kk::apex_construction(6, {3}), 3) == 23);
    CHECK(kk::verify_bollobas(5, 4, 2, 3).pass);
    CHECK(kk::count_cliques(kk::apex_construction(5, {4}), 3) == 16);
    CHECK_THROWS_AS(kk::verify_bollobas(5, 4, 3, 5), std::invalid_argument);  // s !< n
}

TEST_CASE("verify_theorem3") {
    auto r = kk::verify_theorem3(11, 10, 7, 5, 10);
    CHECK(r.pass);
    auto r2 = kk::verify_theorem3(12, 10, 7, 5, 10);
    CHECK(r2.pass);
    CHECK(kk::count_cliques(kk::apex_construction(12, {10, 7}), 5) == 1037);
    CHECK(kk::count_cliques(kk::apex_construction(12, {10, 7}), 10) == 76);
    // s-1 > w violated
    CHECK_THROWS_AS(kk::verify_theorem3(11, 10, 7, 5, 8), std::invalid_argument);
    // no t with C(t,1) = C(4,2)... C(6,1)=6 works, so pick an impossible pair instead:
    // C(t,0) = 1 never equals C(3,1) = 3
    CHECK_THROWS_AS(kk::verify_theorem3(11, 10, 3, 2, 10), std::invalid_argument);
}

TEST_CASE("corollary1_params") {
    auto p4 = kk::corollary1_params(4, 10);
    CHECK(p4.r == 5);
    CHECK(p4.t == 7);
    CHECK(p4.w == 7);
    auto p2 = kk::corollary1_params(2, 6);
    CHECK(p2.r == 3);
    CHECK(p2.t == 3);
    auto p3 = kk::corollary1_params(3, 8);
    CHECK(p3.r == 4);
    CHECK(p3.t == 5);
    CHECK(binom(5, 2) == binom(5, 3));
    CHECK_THROWS_AS(kk::corollary1_params(1, 6), std::invalid_argument);
    CHECK_THROWS_AS(kk::corollary1_params(4, 9), std::invalid_argument);
}

TEST_CASE("plateau_check") {
    auto r = kk::plateau_check(11, 10, 7, 5, 10);
    CHECK(r.pass);
    CHECK(r.plateau_length == 36);  // C(7,3) + 1
    CHECK(r.constant_bound == 21);
    auto r2 = kk::plateau_check(12, 10, 7, 5, 10);
    CHECK(r2.pass);
    CHECK(r2.constant_bound == 76);
    CHECK(r2.plateau_length == 36);
    // C(t,r-2) = 0 gives a single-point plateau
    auto r3 = kk::plateau_check(11, 10, 1, 5, 10);
    CHECK(r3.pass);
    CHECK(r3.plateau_length == 1);
}

TEST_CASE("verify_theorem4 against direct counting") {
    CHECK(kk::verify_theorem4(6, 2, 3).pass);
    CHECK(kk::verify_theorem4(5, 4, 3).pass);
    CHECK(kk::verify_theorem4(12, 3, 5).pass);
    for (std::uint64_t n = 4; n <= 10; ++n)
        for (std::uint64_t p = 0; p < n; ++p)
            for (std::uint64_t s = 2; s <= n; ++s) {
                CAPTURE(n, p, s);
                REQUIRE(kk::verify_theorem4(n, p, s).pass);
            }
}

TEST_CASE("identity suites") {
    CHECK(kk::verify_identity_t5(12));
    CHECK(kk::verify_identity_t5(7));
    CHECK(kk::verify_identity_t5(100));
    CHECK(kk::verify_identity_t6(10));
    CHECK(kk::verify_identity_t6(7));
    CHECK(kk::verify_identity_t6(150));
    CHECK(kk::verify_canonical_x(12));
    CHECK(kk::verify_canonical_x(7));
    CHECK(kk::verify_canonical_x(20));
    CHECK_THROWS_AS(kk::verify_identity_t5(6), std::invalid_argument);
    CHECK_THROWS_AS(kk::verify_identity_t6(6), std::invalid_argument);
    CHECK_THROWS_AS(kk::verify_canonical_x(6), std::invalid_argument);
}

TEST_CASE("table_section3 reproduces the printed table") {
    auto rows = kk::table_section3(6, 15);
    REQUIRE(rows.size() == 10);
    const std::uint64_t expected[10][4] = {
        {6, 12, 0, 1},      {7, 25, 4, 6},      {8, 44, 20, 23},    {9, 70, 61, 65},
        {10, 104, 146, 151}, {11, 147, 301, 307}, {12, 200, 560, 567}, {13, 264, 966, 974},
        {14, 340, 1572, 1581}, {15, 429, 2442, 2452}};
    for (std::size_t i = 0; i < 10; ++i) {
        CAPTURE(i);
        REQUIRE(rows[i].n == expected[i][0]);
        REQUIRE(rows[i].x == expected[i][1]);
        REQUIRE(rows[i].actual == expected[i][2]);
        REQUIRE(rows[i].bound == expected[i][3]);
        REQUIRE(rows[i].gap >= 0);
    }
    CHECK(rows[7].gap == 8);  // n = 13
    // extension beyond the printed range
    auto ext = kk::table_section3(16, 16);
    CHECK(ext[0].gap == 11);
    CHECK_THROWS_AS(kk::table_section3(5, 10), std::invalid_argument);
}

TEST_CASE("gap_report") {
    auto g34 = kk::gap_report(4, 7, 20);
    CHECK(g34.pass);
    for (const auto& row : g34.rows) CHECK(row.gap == 1);
    auto g35 = kk::gap_report(5, 7, 15);
    CHECK(g35.pass);
    Count expect = 2;
    for (const auto& row : g35.rows) {
        CHECK(row.gap == expect);
        expect += 1;
    }
    auto one = kk::gap_report(5, 7, 7);
    CHECK(one.pass);
    CHECK(one.rows[0].gap == 2);
    CHECK_THROWS_AS(kk::gap_report(6, 7, 9), std::invalid_argument);
}

TEST_CASE("gap identity holds far beyond the table") {
    for (std::uint64_t n = 7; n <= 200; ++n) {
        CAPTURE(n);
        Count bound = kk::kk_bound(kk::turan_k3_count(n), 3, 5);
        REQUIRE(kk::turan_k5_count(n) <= bound);
        REQUIRE(bound - kk::turan_k5_count(n) == n - 5);
    }
}

TEST_CASE("csv rendering") {
    auto rows = kk::table_section3(6, 7);
    CHECK(kk::to_csv(rows, 5) == "n,K3,K5,bound,gap\n6,12,0,1,1\n7,25,4,6,2\n");
}
