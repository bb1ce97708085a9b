#pragma once

#include <cstdint>

namespace cantorian {

// Feasibility limits for the exact algorithms.  Everything here is a hard
// refusal threshold, not a tuning knob: exceeding a budget raises
// budget_error instead of silently truncating a result.
struct Budgets {
    // Orbit materialization cap: (n!)^2 for row/column orbits, the product
    // formula for bijection orbits, and n!*n^2 for canonicalization scans.
    std::uint64_t max_orbit = 10'000'000;
    // Exhaustive tableau enumeration cap on s^(n^2).
    std::uint64_t max_cells = std::uint64_t(1) << 26;
    // Permanent enumeration iterates n! permutations.
    int max_perm_n = 8;
    // Wall-clock limit in seconds for census-scale runs; 0 = unlimited.
    std::uint64_t time_budget_s = 0;
};

inline std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= std::uint64_t(i);
    return f;
}

} // namespace cantorian
