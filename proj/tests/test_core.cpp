#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorian/equivalence.hpp"
#include "cantorian/errors.hpp"
#include "cantorian/tableau.hpp"

#include "test_util.hpp"

using namespace cantorian;

namespace {

Word word(std::initializer_list<int> letters) {
    Word w;
    for (int l : letters) w.push_back(Letter(l));
    return w;
}

const Tableau kT1 = Tableau::from_rows({{1, 1, 3}, {1, 1, 2}, {2, 3, 1}}, 3);
const Tableau kT2 =
    Tableau::from_rows({{2, 1, 1, 2}, {3, 1, 2, 1}, {2, 1, 1, 1}, {2, 1, 2, 1}}, 3);

} // namespace

TEST_CASE("parikh compositions of words") {
    CHECK(parikh_word(word({1, 2, 3, 2, 3}), 3) == Composition{1, 2, 2});
    CHECK(parikh_word(word({2, 2, 3, 3}), 3) == Composition{0, 2, 2});
    CHECK(parikh_word(word({1, 1, 1, 1}), 2) == Composition{4, 0});
    CHECK(parikh_word(word({}), 2) == Composition{0, 0});
    CHECK_THROWS_AS(parikh_word(word({1, 4}), 3), input_error);
}

TEST_CASE("parikh weight and length") {
    testutil::SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        int s = 1 + rng.below(5);
        Word w = testutil::random_word(rng, rng.below(8), s);
        Composition p = parikh_word(w, s);
        CHECK(p.length() == s);
        CHECK(p.weight() == int(w.size()));
    }
}

TEST_CASE("composition order chain of weight 5") {
    // positive compositions of weight 5, length <= 3, in increasing order
    const std::vector<Composition> chain = {{5},       {4, 1},    {3, 2},    {2, 3},
                                            {1, 4},    {3, 1, 1}, {2, 2, 1}, {2, 1, 2},
                                            {1, 3, 1}, {1, 2, 2}, {1, 1, 3}};
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = 0; j < chain.size(); ++j) {
            int want = i == j ? 0 : (i < j ? -1 : 1);
            CHECK(cmp_composition(chain[i], chain[j]) == want);
        }
}

TEST_CASE("composition order basics") {
    CHECK(cmp_composition({5}, {4, 1}) < 0);
    CHECK(cmp_composition({3, 2}, {2, 3}) < 0);
    CHECK(cmp_composition({2, 2, 1}, {2, 2, 1}) == 0);
    // length is semantic: (2,1) and (2,1,0) differ
    CHECK(cmp_composition({2, 1}, {2, 1, 0}) < 0);
}

TEST_CASE("composition order is a total order") {
    testutil::SplitMix64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Composition a = testutil::random_composition(rng, 4, 4);
        Composition b = testutil::random_composition(rng, 4, 4);
        Composition c = testutil::random_composition(rng, 4, 4);
        CHECK(cmp_composition(a, b) == -cmp_composition(b, a));
        CHECK((cmp_composition(a, b) == 0) == (a == b));
        if (cmp_composition(a, b) <= 0 && cmp_composition(b, c) <= 0)
            CHECK(cmp_composition(a, c) <= 0);
    }
}

TEST_CASE("word order") {
    Word w = word({1, 2, 3, 2, 3}), v = word({2, 1, 2, 3, 3}), u = word({3, 2, 1, 2, 1});
    CHECK(cmp_word(u, w, 3) < 0);
    CHECK(cmp_word(w, v, 3) < 0);
    CHECK(cmp_word(u, v, 3) < 0);
    CHECK(cmp_word(w, w, 3) == 0);
    // equal Parikh composition, lexicographic tie-break
    CHECK(cmp_word(word({1, 1, 2}), word({1, 2, 1}), 3) < 0);
    CHECK_THROWS_AS(cmp_word(word({1}), word({1, 2}), 2), input_error);
}

TEST_CASE("word order is total on random triples") {
    testutil::SplitMix64 rng(13);
    for (int i = 0; i < 300; ++i) {
        int s = 2 + rng.below(3);
        Word a = testutil::random_word(rng, 4, s);
        Word b = testutil::random_word(rng, 4, s);
        Word c = testutil::random_word(rng, 4, s);
        CHECK(cmp_word(a, b, s) == -cmp_word(b, a, s));
        CHECK((cmp_word(a, b, s) == 0) == (a == b));
        if (cmp_word(a, b, s) <= 0 && cmp_word(b, c, s) <= 0) CHECK(cmp_word(a, c, s) <= 0);
    }
}

TEST_CASE("parikh vector of a tableau") {
    ParikhVector p1 = parikh_tableau(kT1);
    CHECK(p1 == ParikhVector{{2, 1, 0}, {2, 0, 1}, {1, 1, 1}});
    ParikhVector p2 = parikh_tableau(kT2);
    CHECK(p2 == ParikhVector{{0, 3, 1}, {4, 0, 0}, {2, 2, 0}, {3, 1, 0}});
    Tableau ones(4, 2);
    for (const Composition& c : parikh_tableau(ones)) CHECK(c == Composition{4, 0});
}

TEST_CASE("tableau order on the equivalent chain") {
    // five equivalent tableaux, strictly decreasing left to right
    const std::vector<Tableau> chain = {
        Tableau::from_rows({{2, 3, 1}, {2, 2, 2}, {2, 3, 1}}, 3),
        Tableau::from_rows({{1, 1, 1}, {1, 3, 2}, {1, 1, 1}}, 3),
        Tableau::from_rows({{1, 1, 1}, {1, 2, 3}, {1, 1, 1}}, 3),
        Tableau::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 2, 3}}, 3),
        Tableau::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 2, 2}}, 3),
    };
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        CHECK(cmp_tableau(chain[i + 1], chain[i]) < 0);
    CHECK(cmp_tableau(chain[0], chain[0]) == 0);
}

TEST_CASE("tableau order small cases and errors") {
    Tableau a = Tableau::from_rows({{1, 1}, {2, 2}}, 2);
    Tableau b = Tableau::from_rows({{1, 2}, {2, 1}}, 2);
    // columns (1,2) vs (1,2), then (1,2) vs (2,1): a is smaller
    CHECK(cmp_tableau(a, b) < 0);
    CHECK_THROWS_AS(cmp_tableau(a, Tableau(3, 2)), input_error);
    CHECK_THROWS_AS(cmp_tableau(a, Tableau(2, 3)), input_error);
}

TEST_CASE("class invariant of the worked examples") {
    InvariantKey key = class_invariant(kT1);
    REQUIRE(key.partitions.size() == 3);
    CHECK(key.partitions[0] == Composition{2, 1});
    CHECK(key.partitions[1] == Composition{2, 1});
    CHECK(key.partitions[2] == Composition{1, 1, 1});
}

TEST_CASE("class invariant is constant on orbits") {
    testutil::SplitMix64 rng(17);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + rng.below(3);
        int s = 2 + rng.below(3);
        Tableau t = testutil::random_tableau(rng, n, s);
        Tableau u = apply(t, testutil::random_group_element(rng, n, s));
        CHECK(cmp_key(class_invariant(t), class_invariant(u)) == 0);
    }
}

TEST_CASE("class invariant on the five-tableau chain") {
    const std::vector<Tableau> chain = {
        Tableau::from_rows({{2, 3, 1}, {2, 2, 2}, {2, 3, 1}}, 3),
        Tableau::from_rows({{1, 1, 1}, {1, 3, 2}, {1, 1, 1}}, 3),
        Tableau::from_rows({{1, 1, 1}, {1, 2, 3}, {1, 1, 1}}, 3),
        Tableau::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 2, 3}}, 3),
        Tableau::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 2, 2}}, 3),
    };
    for (const Tableau& t : chain)
        CHECK(cmp_key(class_invariant(t), class_invariant(chain[0])) == 0);
}

TEST_CASE("class invariant separates the three counterexample tableaux") {
    Tableau a = Tableau::from_rows({{1, 1, 1}, {1, 2, 2}, {1, 3, 3}}, 3);
    Tableau b = Tableau::from_rows({{1, 1, 1}, {1, 2, 2}, {2, 3, 3}}, 3);
    Tableau c = Tableau::from_rows({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}, 3);
    CHECK(cmp_key(class_invariant(a), class_invariant(b)) != 0);
    CHECK(cmp_key(class_invariant(a), class_invariant(c)) != 0);
    CHECK(cmp_key(class_invariant(b), class_invariant(c)) != 0);
}

TEST_CASE("invariant entries are positive sorted partitions") {
    testutil::SplitMix64 rng(19);
    for (int i = 0; i < 100; ++i) {
        int n = 2 + rng.below(3);
        int s = 2 + rng.below(3);
        Tableau t = testutil::random_tableau(rng, n, s);
        InvariantKey key = class_invariant(t);
        for (std::size_t k = 0; k < key.partitions.size(); ++k) {
            const Composition& p = key.partitions[k];
            CHECK(p.is_partition());
            CHECK(p.weight() == n);
            CHECK(p.positive_length() == p.length());
            CHECK(p.length() <= std::min(n, s));
            if (k) CHECK(cmp_composition(key.partitions[k - 1], p) <= 0);
        }
    }
}

TEST_CASE("tableau validation and accessors") {
    CHECK_THROWS_AS(Tableau::from_rows({{1, 2}, {3}}, 3), input_error);
    CHECK_THROWS_AS(Tableau::from_rows({{1, 9}, {1, 1}}, 3), input_error);
    Tableau t = kT1;
    CHECK(t.row_word(2) == word({2, 3, 1}));
    CHECK(t.col_word(0) == word({1, 1, 2}));
    CHECK(t.distinct_rows().size() == 3);
    Tableau ones(3, 2);
    CHECK(ones.distinct_rows().size() == 1);
}

TEST_CASE("packing round-trips through the set") {
    CHECK(fits_u64(4, 3));
    CHECK(fits_u64(5, 3));
    CHECK(!fits_u64(6, 3));
    testutil::SplitMix64 rng(23);
    TableauSet set(3, 3);
    std::vector<Tableau> members;
    for (int i = 0; i < 50; ++i) {
        Tableau t = testutil::random_tableau(rng, 3, 3);
        if (set.insert(t)) members.push_back(t);
    }
    for (const Tableau& t : members) CHECK(set.contains(t));
    CHECK(set.size() == members.size());
}
