#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorian/enumeration.hpp"
#include "cantorian/errors.hpp"
#include "cantorian/io.hpp"
#include "cantorian/oracle.hpp"
#include "cantorian/permanent.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <set>

using namespace cantorian;

namespace {

CensusOptions serial() {
    CensusOptions opt;
    opt.workers = 1;
    return opt;
}

InvariantKey key_of(std::initializer_list<Composition> parts) {
    InvariantKey k;
    k.partitions = parts;
    return k;
}

} // namespace

TEST_CASE("positive partitions") {
    CHECK(positive_partitions(3, 2) ==
          std::vector<Composition>{Composition{3}, Composition{2, 1}});
    CHECK(positive_partitions(4, 4).size() == 5);
    CHECK(positive_partitions(5, 3).size() == 5);
}

TEST_CASE("candidate key counts before pruning") {
    CHECK(candidate_invariant_keys(2, 2).size() == 3);
    CHECK(candidate_invariant_keys(3, 2).size() == 4);
    CHECK(candidate_invariant_keys(3, 3).size() == 10);
    CHECK_THROWS_AS(candidate_invariant_keys(2, 1), input_error);
}

TEST_CASE("candidate keys are sorted and within bounds") {
    for (const InvariantKey& key : candidate_invariant_keys(4, 3)) {
        CHECK(int(key.partitions.size()) == 4);
        for (std::size_t i = 0; i < key.partitions.size(); ++i) {
            CHECK(key.partitions[i].length() <= 3);
            CHECK(key.partitions[i].weight() == 4);
            if (i) CHECK(cmp_composition(key.partitions[i - 1], key.partitions[i]) <= 0);
        }
    }
}

TEST_CASE("key pruning") {
    // all-constant columns are hopeless: letter count n^2 >= n^2 - n + 1
    CHECK(!prune_key(key_of({Composition{3}, Composition{3}, Composition{3}}), 3, 3));
    // two letters, minority total n+1 with n >= 4 has no Cantorian tableaux
    CHECK(!prune_key(key_of({Composition{3, 1}, Composition{3, 1}, Composition{3, 1},
                             Composition{2, 2}}),
                     4, 2));
    // two letters, minority total exactly n survives on the one viable key
    CHECK(prune_key(key_of({Composition{2, 1}, Composition{2, 1}, Composition{2, 1}}), 3, 2));
    // minority below n dies even when the majority count is small enough
    CHECK(!prune_key(key_of({Composition{2, 1}, Composition{3}, Composition{3}}), 3, 2));
    // minority total n on any other key shape holds no Cantorian tableaux
    CHECK(!prune_key(key_of({Composition{4}, Composition{4}, Composition{2, 2},
                             Composition{2, 2}}),
                     4, 2));
}

TEST_CASE("representatives for the named keys") {
    std::vector<Tableau> reps;
    representatives_for_key(key_of({Composition{1, 1}, Composition{1, 1}}), 2, 2, Budgets{},
                            [&](const Tableau& t) { reps.push_back(t); });
    REQUIRE(reps.size() == 1);
    CHECK(reps[0] == Tableau::from_rows({{1, 1}, {2, 2}}, 2));

    reps.clear();
    representatives_for_key(
        key_of({Composition{1, 1, 1}, Composition{1, 1, 1}, Composition{1, 1, 1}}), 3, 3,
        Budgets{}, [&](const Tableau& t) { reps.push_back(t); });
    REQUIRE(reps.size() == 1);
    CHECK(reps[0] == Tableau::from_rows({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}, 3));
}

TEST_CASE("emitted representatives are minimal reduced and key-faithful") {
    for (const InvariantKey& key : candidate_invariant_keys(4, 2)) {
        if (!prune_key(key, 4, 2)) continue;
        representatives_for_key(key, 4, 2, Budgets{}, [&](const Tableau& t) {
            CHECK(is_reduced(t));
            CHECK(minimal_reduced(t) == t);
            CHECK(cmp_key(class_invariant(t), key) == 0);
        });
    }
}

TEST_CASE("census small cases") {
    CensusResult c22 = census(2, 2, serial());
    CHECK(c22.representative_count == 1);
    CHECK(c22.tested_count == 1);
    CHECK(c22.total_cantorian == BigUint(4));

    CensusResult c32 = census(3, 2, serial());
    CHECK(c32.representative_count == 1);
    CHECK(c32.tested_count == 3);
    CHECK(c32.total_cantorian == BigUint(24));

    CensusResult c33 = census(3, 3, serial());
    CHECK(c33.representative_count == 5);
    CHECK(c33.tested_count == 9);
    CHECK(c33.total_cantorian == BigUint(5076));

    CensusResult c25 = census(2, 5, serial());
    CHECK(c25.representative_count == 1);
    CHECK(c25.tested_count == 1);
    CHECK(c25.total_cantorian == BigUint(400));

    CHECK_THROWS_AS(census(1, 2, serial()), input_error);
}

TEST_CASE("census invariants hold") {
    CensusResult c = census(4, 2, serial());
    CHECK(c.representative_count == 6);
    CHECK(c.tested_count == 21);
    BigUint sum;
    std::set<std::string> distinct;
    for (const ClassReport& r : c.per_class) {
        sum += r.cardinality;
        CHECK(is_cantorian(r.representative));
        CHECK(minimal_reduced(r.representative) == r.representative);
        distinct.insert(pack_string(r.representative));
    }
    CHECK(sum == c.total_cantorian);
    CHECK(distinct.size() == c.per_class.size());
    CHECK(c.tested_count >= c.representative_count);
}

TEST_CASE("census totals agree with the exhaustive oracle") {
    for (auto [n, s] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        CHECK(census(n, s, serial()).total_cantorian ==
              BigUint(oracle::count_cantorian(n, s)));
    }
}

TEST_CASE("representatives coincide for s = n and s = n + 1") {
    auto reps_of = [&](int n, int s) {
        std::set<std::string> out;
        for (const ClassReport& r : census(n, s, serial()).per_class) {
            Tableau rep = r.representative;
            rep.s = n; // compare the underlying grids
            out.insert(pack_string(rep));
        }
        return out;
    };
    CHECK(reps_of(2, 2) == reps_of(2, 3));
    CHECK(reps_of(3, 3) == reps_of(3, 4));
}

TEST_CASE("eta and theta are unchanged at a larger alphabet") {
    for (const ClassReport& r : census(3, 3, serial()).per_class) {
        Tableau rep = r.representative;
        rep.s = 4;
        ClassReport wide = class_cardinality_at(rep, 4);
        CHECK(wide.eta == r.eta);
        CHECK(wide.theta == r.theta);
    }
}

TEST_CASE("closed forms") {
    CHECK(closed_form_C(2, 3) == BigUint(36));
    CHECK(closed_form_C(3, 2) == BigUint(24));
    CHECK(closed_form_C(4, 2) == BigUint(1744));
    CHECK_THROWS_AS(closed_form_C(5, 2), input_error);
    for (int n = 2; n <= 3; ++n)
        for (int s = 2; s <= 4; ++s)
            CHECK(closed_form_C(n, s) == census(n, s, serial()).total_cantorian);
}

TEST_CASE("two-letter counts by minority occurrences") {
    CHECK(count_c_n_p(5, 4) == BigUint(0));
    CHECK(count_c_n_p(4, 4) == BigUint(4));
    CHECK(count_c_n_p(5, 7) == BigUint(0));
    CHECK(count_c_n_p(4, 5) == BigUint(0));
    for (int n = 2; n <= 4; ++n) {
        BigUint sum;
        for (int p = 0; p <= n * n; ++p) sum += count_c_n_p(n, p);
        CHECK(sum == census(n, 2, serial()).total_cantorian);
    }
}

TEST_CASE("bi-cantorian totals") {
    CHECK(count_bicantorian(2, 2, serial()).total_bicantorian == BigUint(2));
    CHECK(count_bicantorian(3, 2, serial()).total_bicantorian ==
          BigUint(oracle::count_bicantorian(3, 2)));
    CHECK(count_bicantorian(2, 4, serial()).total_bicantorian == BigUint(84));
    CHECK(count_bicantorian(2, 3, serial()).total_bicantorian ==
          BigUint(oracle::count_bicantorian(2, 3)));
}

TEST_CASE("bi-cantorian classes, small") {
    BClassesResult r24 = bicantorian_classes(2, 4, serial());
    CHECK(r24.representatives.size() == 3);
    CHECK(r24.member_count == 84);
    // representatives are distinguished by their distinct-letter counts
    std::multiset<int> letter_counts;
    for (const Tableau& rep : r24.representatives) {
        std::set<Letter> letters(rep.cells.begin(), rep.cells.end());
        letter_counts.insert(int(letters.size()));
    }
    CHECK(letter_counts == std::multiset<int>{2, 3, 4});

    BClassesResult r32 = bicantorian_classes(3, 2, serial());
    CHECK(r32.representatives.size() == 1);
    CHECK(r32.member_count == 6);
}

TEST_CASE("ratio rendering") {
    CHECK(ratio_b_over_c(2, 2, serial()).decimal == "0.5");
    CHECK(ratio_b_over_c(3, 2, serial()).decimal == "0.25");
    Ratio r = ratio_b_over_c(2, 3, serial());
    CHECK(r.numerator == BigUint(18));
    CHECK(r.denominator == BigUint(36));
}

TEST_CASE("factored renderings") {
    CHECK(factored_census_total(BigUint(5076), 3, 3) == "47*2^2*3^3");
    CHECK(factored_census_total(BigUint(1744), 4, 2) == "109*2^4");
    CHECK(factored_bicensus_total(BigUint(2202), 3) == "2*3*367");
}

TEST_CASE("census is deterministic across worker counts") {
    CensusOptions four;
    four.workers = 4;
    CHECK(json_census(census(3, 3, serial())) == json_census(census(3, 3, four)));
}

TEST_CASE("census respects the time budget") {
    CensusOptions opt = serial();
    opt.budgets.time_budget_s = 1;
    // the (5,3) census takes well over a second on one worker
    CHECK_THROWS_AS(census(5, 3, opt), budget_error);
    opt.budgets.time_budget_s = 0; // no limit: must succeed
    CHECK(census(3, 3, opt).representative_count == 5);
}
