#include "cantorian/bigint.hpp"

#include "cantorian/errors.hpp"

#include <algorithm>

namespace cantorian {

BigUint::BigUint(std::uint64_t v) {
    if (v) limbs_.push_back(std::uint32_t(v));
    if (v >> 32) limbs_.push_back(std::uint32_t(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::uint64_t BigUint::as_u64() const {
    if (limbs_.size() > 2) throw input_error("BigUint::as_u64: value exceeds 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = std::uint64_t(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

BigUint& BigUint::operator+=(const BigUint& other) {
    const std::size_t m = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(m, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < other.limbs_.size()) sum += other.limbs_[i];
        limbs_[i] = std::uint32_t(sum);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(std::uint32_t(carry));
    return *this;
}

BigUint& BigUint::operator*=(std::uint64_t m) {
    if (m == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    if (m >> 32) {
        *this = *this * BigUint(m);
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t prod = std::uint64_t(limb) * m + carry;
        limb = std::uint32_t(prod);
        carry = prod >> 32;
    }
    while (carry) {
        limbs_.push_back(std::uint32_t(carry));
        carry >>= 32;
    }
    return *this;
}

BigUint BigUint::operator*(const BigUint& other) const {
    BigUint out;
    if (is_zero() || other.is_zero()) return out;
    out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                std::uint64_t(limbs_[i]) * other.limbs_[j] + carry;
            out.limbs_[i + j] = std::uint32_t(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + other.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = std::uint32_t(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

std::uint64_t BigUint::divmod(std::uint64_t d) {
    if (d == 0) throw input_error("BigUint::divmod: division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 32) | limbs_[i];
        limbs_[i] = std::uint32_t(std::uint64_t(cur / d));
        rem = cur % d;
    }
    trim();
    return std::uint64_t(rem);
}

BigUint BigUint::divide_exact(std::uint64_t d) const {
    BigUint q = *this;
    std::uint64_t r = q.divmod(d);
    if (r != 0) throw consistency_error("BigUint::divide_exact: non-zero remainder");
    return q;
}

bool BigUint::divisible_by(std::uint64_t d) const {
    BigUint q = *this;
    return q.divmod(d) == 0;
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() <=> other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint64_t chunk = tmp.divmod(1'000'000'000);
        std::string part = std::to_string(chunk);
        if (!tmp.is_zero()) part.insert(part.begin(), 9 - part.size(), '0');
        out.insert(0, part);
    }
    return out;
}

BigUint BigUint::from_decimal(const std::string& s) {
    if (s.empty()) throw input_error("BigUint::from_decimal: empty string");
    BigUint out;
    for (char c : s) {
        if (c < '0' || c > '9') throw input_error("BigUint::from_decimal: non-digit");
        out *= 10;
        out += BigUint(std::uint64_t(c - '0'));
    }
    return out;
}

BigUint big_pow(std::uint64_t base, unsigned exp) {
    BigUint out(1);
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

} // namespace cantorian
