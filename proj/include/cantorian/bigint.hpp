#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cantorian {

// Unsigned arbitrary-precision integer on base-2^32 limbs.  Just enough
// arithmetic for exact enumeration totals: add, multiply, divide by a
// machine word, decimal conversion.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    static BigUint from_decimal(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t as_u64() const; // throws input_error when the value does not fit

    BigUint& operator+=(const BigUint& other);
    BigUint& operator*=(std::uint64_t m);
    BigUint operator*(const BigUint& other) const;

    friend BigUint operator+(BigUint a, const BigUint& b) {
        a += b;
        return a;
    }
    friend BigUint operator*(BigUint a, std::uint64_t m) {
        a *= m;
        return a;
    }

    // In-place quotient; returns the remainder.  d must be non-zero.
    std::uint64_t divmod(std::uint64_t d);
    // Quotient when the division leaves no remainder; consistency_error otherwise.
    BigUint divide_exact(std::uint64_t d) const;
    bool divisible_by(std::uint64_t d) const;

    std::strong_ordering operator<=>(const BigUint& other) const;
    bool operator==(const BigUint& other) const = default;

    std::string to_string() const;

private:
    std::vector<std::uint32_t> limbs_; // little-endian, no leading zero limb
    void trim();
};

BigUint big_pow(std::uint64_t base, unsigned exp);

} // namespace cantorian
