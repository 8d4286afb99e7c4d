#include <catch2/catch_amalgamated.hpp>

#include "kk/search.hpp"
#include "oracles.hpp"

using kk::Count;
using kk::count_cliques;

namespace {

void check_record(const kk::ExtremalRecord& rec) {
    REQUIRE(rec.best <= rec.bound);
    REQUIRE(count_cliques(rec.witness, rec.r) <= rec.x);
    REQUIRE(count_cliques(rec.witness, rec.s) == rec.best);
}

}  // namespace

TEST_CASE("exhaustive_extremal small cases") {
    auto one_k4 = kk::exhaustive_extremal(6, 3, 4, 4);
    CHECK(one_k4.best == 1);
    CHECK(one_k4.exhaustive_within_scope);
    check_record(one_k4);

    auto k5 = kk::exhaustive_extremal(6, 2, 3, 10);
    CHECK(k5.best == 10);
    CHECK(count_cliques(k5.witness, 2) == 10);  // a K_5 spends the whole edge budget
    check_record(k5);

    CHECK_THROWS_AS(kk::exhaustive_extremal(9, 3, 4, 10), std::invalid_argument);
    CHECK_THROWS_AS(kk::exhaustive_extremal(6, 4, 3, 10), std::invalid_argument);
}

TEST_CASE("exhaustive_extremal reproduces the conjectured value at n = 7") {
    auto rec = kk::exhaustive_extremal(7, 3, 4, 25);
    CHECK(rec.best == 16);
    CHECK(rec.bound == 17);
    check_record(rec);
    // T(7,5) attains the same value, so it is one of the optima
    CHECK(count_cliques(kk::turan_graph(7, 5), 3) == 25);
    CHECK(count_cliques(kk::turan_graph(7, 5), 4) == 16);
    CHECK(count_cliques(rec.witness, 4) == 16);
}

TEST_CASE("exhaustive best is monotone in the budget") {
    Count prev = 0;
    for (std::uint64_t x = 0; x <= 10; ++x) {
        auto rec = kk::exhaustive_extremal(5, 2, 3, x);
        CAPTURE(x);
        REQUIRE(rec.best >= prev);
        check_record(rec);
        prev = rec.best;
    }
}

TEST_CASE("exhaustive checkpoint resume") {
    std::string path = "checkpoint_test.tmp";
    std::remove(path.c_str());
    auto full = kk::exhaustive_extremal(6, 3, 4, 8);
    auto first = kk::exhaustive_extremal(6, 3, 4, 8, path);
    CHECK(first.best == full.best);
    // resuming a finished run must return the recorded result unchanged
    auto resumed = kk::exhaustive_extremal(6, 3, 4, 8, path);
    CHECK(resumed.best == full.best);
    CHECK(resumed.witness.edges() == full.witness.edges());
    std::remove(path.c_str());
}

TEST_CASE("heuristic_extremal never falls below its construction starts") {
    auto apex = kk::heuristic_extremal(13, 5, 10, 707, 42, 1);
    CHECK(apex.best >= 21);
    CHECK_FALSE(apex.exhaustive_within_scope);
    check_record(apex);

    auto turan = kk::heuristic_extremal(12, 3, 4, 200, 1, 1);
    CHECK(turan.best >= 406);
    check_record(turan);
}

TEST_CASE("heuristic_extremal with a zero budget") {
    auto rec = kk::heuristic_extremal(5, 2, 3, 0, 5, 100);
    CHECK(rec.best == 0);
    CHECK(count_cliques(rec.witness, 2) == 0);
    check_record(rec);
}

TEST_CASE("heuristic_extremal is deterministic for a fixed seed") {
    auto a = kk::heuristic_extremal(8, 3, 4, 12, 99, 20);
    auto b = kk::heuristic_extremal(8, 3, 4, 12, 99, 20);
    CHECK(a.best == b.best);
    CHECK(a.witness.edges() == b.witness.edges());
    check_record(a);
}

TEST_CASE("heuristic matches exhaustive on a small instance") {
    auto ex = kk::exhaustive_extremal(6, 3, 4, 10);
    auto h = kk::heuristic_extremal(6, 3, 4, 10, 3, 40);
    CHECK(h.best <= ex.best);
    CHECK(h.best >= ex.best - 0);  // hill climb finds the optimum here
}

TEST_CASE("conjecture_check") {
    auto r7 = kk::conjecture_check(7, 7);
    CHECK(r7.x == 25);
    CHECK(r7.bound == 17);
    CHECK(r7.best_in_scope == 16);
    CHECK_FALSE(r7.bound_attained_in_scope);
    CHECK(r7.scope_sufficient);

    auto r12 = kk::conjecture_check(12, 7);
    CHECK(r12.x == 200);
    CHECK(r12.best_in_scope == 35);  // C(7,4): the budget never binds at 7 vertices
    CHECK_FALSE(r12.scope_sufficient);

    CHECK_THROWS_AS(kk::conjecture_check(6, 7), std::invalid_argument);
}

TEST_CASE("tightness_scan") {
    auto rows34 = kk::tightness_scan(3, 4, 4, 6);
    CHECK(rows34[4].tight);  // x = 4: a single K_4

    auto rows = kk::tightness_scan(2, 3, 15, 6);
    for (const auto& row : rows) {
        CAPTURE(row.x);
        REQUIRE(row.best <= row.bound);
    }
    // r = 2: colex graphs attain the bound at every budget
    for (const auto& row : rows) {
        CAPTURE(row.x);
        REQUIRE(row.tight);
    }
}
