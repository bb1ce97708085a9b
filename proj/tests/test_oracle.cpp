#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorian/equivalence.hpp"
#include "cantorian/errors.hpp"
#include "cantorian/oracle.hpp"
#include "cantorian/permanent.hpp"

#include "test_util.hpp"

#include <map>

using namespace cantorian;

TEST_CASE("odometer enumeration counts") {
    auto count = [](int n, int s) {
        std::uint64_t k = 0;
        TableauSet seen(n, s);
        oracle::all_tableaux(n, s, Budgets{}, [&](const Tableau& t) {
            ++k;
            CHECK(seen.insert(t));
        });
        return k;
    };
    CHECK(count(2, 2) == 16);
    CHECK(count(3, 2) == 512);
    CHECK(count(2, 3) == 81);
    Budgets tight;
    tight.max_cells = 100;
    CHECK_THROWS_AS(oracle::all_tableaux(3, 3, tight, [](const Tableau&) {}), budget_error);
}

TEST_CASE("exhaustive cantorian counts") {
    CHECK(oracle::count_cantorian(2, 2) == 4);
    CHECK(oracle::count_cantorian(3, 2) == 24);
    CHECK(oracle::count_cantorian(2, 3) == 36);
}

TEST_CASE("exhaustive bi-cantorian counts") {
    CHECK(oracle::count_bicantorian(2, 2) == 2);
    CHECK(oracle::count_bicantorian(3, 2) == 6);
    CHECK(oracle::count_bicantorian(2, 4) == 84);
}

TEST_CASE("oracle predicates agree with the matching-based ones") {
    for (auto [n, s] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
        oracle::all_tableaux(n, s, Budgets{}, [&](const Tableau& t) {
            CHECK(oracle::is_cantorian_perm(t) == is_cantorian(t));
            CHECK(oracle::is_bicantorian_perm(t) == is_bicantorian(t));
        });
    }
}

TEST_CASE("closure is the class") {
    Tableau r2 = Tableau::from_rows({{1, 1}, {2, 2}}, 2);
    CHECK(oracle::class_closure(r2).size() == 4);

    Tableau r4 = Tableau::from_rows({{1, 1, 1}, {1, 2, 2}, {1, 3, 3}}, 3);
    CHECK(oracle::class_closure(r4).size() == 324);

    Tableau ones(2, 2);
    std::vector<Tableau> closure = oracle::class_closure(ones);
    CHECK(closure.size() == class_cardinality(ones).cardinality.as_u64());
}

TEST_CASE("closure size equals the cardinality formula on random input") {
    testutil::SplitMix64 rng(53);
    for (int i = 0; i < 25; ++i) {
        Tableau t = testutil::random_tableau(rng, 2 + rng.below(2), 2 + rng.below(2));
        CHECK(BigUint(std::uint64_t(oracle::class_closure(t).size())) ==
              class_cardinality(t).cardinality);
    }
}

TEST_CASE("classes partition the cantorian tableaux") {
    // group every Cantorian tableau by its minimal reduced form; the class
    // sizes must add up to the exhaustive count
    for (auto [n, s] : {std::pair{3, 2}, {2, 3}, {3, 3}}) {
        std::map<std::string, std::uint64_t> by_class;
        std::uint64_t cantorian_total = 0;
        oracle::all_tableaux(n, s, Budgets{}, [&](const Tableau& t) {
            if (!oracle::is_cantorian_perm(t)) return;
            ++cantorian_total;
            ++by_class[pack_string(minimal_reduced(t))];
        });
        CHECK(cantorian_total == oracle::count_cantorian(n, s));
        std::uint64_t sum = 0;
        for (const auto& [key, size] : by_class) sum += size;
        CHECK(sum == cantorian_total);
        if (n == 3 && s == 2) CHECK(by_class.size() == 1);
        if (n == 3 && s == 3) CHECK(by_class.size() == 5);
    }
}
