#pragma once

#include "cantorian/equivalence.hpp"
#include "cantorian/tableau.hpp"

#include <cstdint>

namespace testutil {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int bound) { return int(next() % std::uint64_t(bound)); }
};

inline cantorian::Tableau random_tableau(SplitMix64& rng, int n, int s) {
    cantorian::Tableau t(n, s);
    for (cantorian::Letter& a : t.cells) a = cantorian::Letter(1 + rng.below(s));
    return t;
}

inline cantorian::Word random_word(SplitMix64& rng, int n, int s) {
    cantorian::Word w(static_cast<std::size_t>(n));
    for (cantorian::Letter& a : w) a = cantorian::Letter(1 + rng.below(s));
    return w;
}

inline cantorian::GroupElement random_group_element(SplitMix64& rng, int n, int s) {
    cantorian::GroupElement g = cantorian::GroupElement::identity(n, s);
    for (int i = n - 1; i > 0; --i)
        std::swap(g.row_perm[std::size_t(i)], g.row_perm[std::size_t(rng.below(i + 1))]);
    for (int i = n - 1; i > 0; --i)
        std::swap(g.col_perm[std::size_t(i)], g.col_perm[std::size_t(rng.below(i + 1))]);
    for (auto& b : g.col_bijections)
        for (int i = s - 1; i > 0; --i)
            std::swap(b[std::size_t(i)], b[std::size_t(rng.below(i + 1))]);
    return g;
}

inline cantorian::Composition random_composition(SplitMix64& rng, int max_len, int max_part) {
    cantorian::Composition c;
    int len = 1 + rng.below(max_len);
    for (int i = 0; i < len; ++i) c.parts.push_back(rng.below(max_part + 1));
    return c;
}

} // namespace testutil
