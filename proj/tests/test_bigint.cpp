#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorian/bigint.hpp"
#include "cantorian/errors.hpp"

#include "test_util.hpp"

using cantorian::BigUint;

TEST_CASE("construction and decimal rendering") {
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(7).to_string() == "7");
    CHECK(BigUint(1'000'000'000).to_string() == "1000000000");
    CHECK(BigUint(UINT64_MAX).to_string() == "18446744073709551615");
    CHECK(BigUint::from_decimal("18446744073709551615").as_u64() == UINT64_MAX);
    CHECK(BigUint::from_decimal("0") == BigUint(0));
}

TEST_CASE("arithmetic agrees with 128-bit reference") {
    testutil::SplitMix64 rng(42);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t a = rng.next() >> (rng.below(40)), b = rng.next() >> (rng.below(40));
        unsigned __int128 sum = (unsigned __int128)a + b;
        unsigned __int128 prod = (unsigned __int128)a * b;
        BigUint big_sum = BigUint(a) + BigUint(b);
        BigUint big_prod = BigUint(a) * BigUint(b);
        // render the 128-bit reference via decimal strings
        auto dec128 = [](unsigned __int128 v) {
            if (v == 0) return std::string("0");
            std::string out;
            while (v) {
                out.insert(out.begin(), char('0' + int(v % 10)));
                v /= 10;
            }
            return out;
        };
        CHECK(big_sum.to_string() == dec128(sum));
        CHECK(big_prod.to_string() == dec128(prod));
    }
}

TEST_CASE("multiplication by machine words") {
    BigUint v(123456789);
    v *= 1'000'000'007ULL;
    CHECK(v.to_string() == "123456789864197523");
    BigUint big = cantorian::big_pow(2, 100);
    CHECK(big.to_string() == "1267650600228229401496703205376");
}

TEST_CASE("exact division") {
    BigUint v = cantorian::big_pow(3, 40) * 7;
    CHECK(v.divisible_by(7));
    CHECK(v.divide_exact(7) == cantorian::big_pow(3, 40));
    CHECK(!v.divisible_by(11));
    CHECK_THROWS_AS(v.divide_exact(11), cantorian::consistency_error);
}

TEST_CASE("comparisons") {
    CHECK(BigUint(3) < BigUint(5));
    CHECK(cantorian::big_pow(10, 25) > cantorian::big_pow(9, 25));
    CHECK(BigUint(77) == BigUint::from_decimal("77"));
}

TEST_CASE("as_u64 rejects oversized values") {
    CHECK_THROWS_AS(cantorian::big_pow(2, 80).as_u64(), cantorian::input_error);
}
