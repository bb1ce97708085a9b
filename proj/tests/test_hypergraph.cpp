#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorian/equivalence.hpp"
#include "cantorian/errors.hpp"
#include "cantorian/hypergraph.hpp"
#include "cantorian/oracle.hpp"
#include "cantorian/permanent.hpp"

#include "test_util.hpp"

#include <set>

using namespace cantorian;

TEST_CASE("structure of the colored hypergraph") {
    for (int n = 2; n <= 4; ++n) {
        Tableau t(n, 2);
        ColoredHypergraph h = build_hypergraph(t);
        CHECK(int(h.row_blocks.size()) == n);
        CHECK(h.diagonal_blocks.size() == factorial_u64(n));
        std::vector<int> degree(std::size_t(n) * n, 0);
        for (const auto& blk : h.row_blocks) {
            CHECK(int(blk.size()) == n);
            for (int v : blk) ++degree[std::size_t(v)];
        }
        std::set<std::vector<int>> distinct_diagonals;
        for (const auto& blk : h.diagonal_blocks) {
            CHECK(int(blk.size()) == n);
            distinct_diagonals.insert(blk);
            for (int v : blk) ++degree[std::size_t(v)];
        }
        CHECK(distinct_diagonals.size() == factorial_u64(n)); // blocks are distinct vertex sets
        const int want = int(factorial_u64(n - 1)) + 1;
        for (int d : degree) CHECK(d == want);
    }
    Budgets tight;
    tight.max_orbit = 10;
    CHECK_THROWS_AS(build_hypergraph(Tableau(4, 2), tight), budget_error);
}

TEST_CASE("intersecting coloring equals non-cantorian, exhaustively") {
    oracle::all_tableaux(3, 2, Budgets{}, [&](const Tableau& t) {
        CHECK(is_intersecting(build_hypergraph(t)) == !is_cantorian(t));
    });
    CHECK(is_intersecting(build_hypergraph(Tableau(2, 2))));
    CHECK(!is_intersecting(build_hypergraph(Tableau::from_rows({{1, 1}, {2, 2}}, 2))));
    CHECK(is_intersecting(build_hypergraph(Tableau::from_rows({{1, 2}, {2, 2}}, 2))));
}

TEST_CASE("coloring isomorphism basics") {
    ColoredHypergraph a = build_hypergraph(Tableau::from_rows({{1, 1}, {2, 2}}, 2));
    CHECK(coloring_isomorphic(a, a));
    ColoredHypergraph ones = build_hypergraph(Tableau(2, 2));
    CHECK(!coloring_isomorphic(a, ones));
    CHECK(!coloring_isomorphic(a, build_hypergraph(Tableau(3, 2))));
}

TEST_CASE("equivalent tableaux yield isomorphic colored hypergraphs") {
    testutil::SplitMix64 rng(59);
    for (int i = 0; i < 100; ++i) {
        int n = 2 + rng.below(3);
        int s = 2 + rng.below(2);
        Tableau t = testutil::random_tableau(rng, n, s);
        Tableau u = apply(t, testutil::random_group_element(rng, n, s));
        CHECK(coloring_isomorphic(build_hypergraph(t), build_hypergraph(u)));
    }
}

TEST_CASE("the three-tableau converse counterexample") {
    ConverseCheckReport report = converse_counterexample_check();
    for (const auto& [name, ok] : report.clauses) {
        INFO(name);
        CHECK(ok);
    }
    CHECK(report.all_ok);
}

TEST_CASE("psi on worked examples") {
    CycleColoring k = psi_bijection(Tableau::from_rows({{1, 2}, {2, 1}}, 2));
    CHECK(k.colors == std::array<Letter, 4>{1, 2, 1, 2});
    CHECK(k.proper());

    CycleColoring k2 = psi_bijection(Tableau::from_rows({{1, 2}, {3, 4}}, 4));
    CHECK(k2.colors == std::array<Letter, 4>{1, 2, 4, 3});
    CHECK(k2.proper());

    CHECK_THROWS_AS(psi_bijection(Tableau::from_rows({{1, 1}, {2, 2}}, 2)), input_error);
    CHECK_THROWS_AS(psi_inverse(CycleColoring{{1, 1, 2, 2}}, 2), input_error);
}

TEST_CASE("psi is a bijection onto proper colorings") {
    for (int s = 2; s <= 6; ++s) {
        std::set<CycleColoring> images;
        std::uint64_t b_count = 0;
        oracle::all_tableaux(2, s, Budgets{}, [&](const Tableau& t) {
            if (!is_bicantorian(t)) return;
            ++b_count;
            CycleColoring k = psi_bijection(t);
            CHECK(k.proper());
            CHECK(psi_inverse(k, s) == t);
            images.insert(k);
        });
        CHECK(b_count == count_K(s));
        CHECK(images.size() == b_count);
        // the image is exactly the set of proper colorings
        std::uint64_t proper = 0;
        for (int a = 1; a <= s; ++a)
            for (int b = 1; b <= s; ++b)
                for (int c = 1; c <= s; ++c)
                    for (int d = 1; d <= s; ++d) {
                        CycleColoring cc{{Letter(a), Letter(b), Letter(c), Letter(d)}};
                        if (!cc.proper()) continue;
                        ++proper;
                        CHECK(images.count(cc) == 1);
                        CHECK(is_bicantorian(psi_inverse(cc, s)));
                    }
        CHECK(proper == b_count);
    }
}

TEST_CASE("count_K values") {
    CHECK(count_K(1) == 0);
    CHECK(count_K(2) == 2);
    CHECK(count_K(3) == 18);
    CHECK(count_K(4) == 84);
    CHECK(count_K(5) == 260);
    CHECK(count_K(6) == 630);
}
