#pragma once

#include "cantorian/budgets.hpp"
#include "cantorian/tableau.hpp"

#include <functional>
#include <vector>

namespace cantorian::oracle {

// Brute-force reference implementations, deliberately independent of the
// matching- and formula-based code paths they validate.  Single-threaded.

// Every n x n tableau over 1..s exactly once, row-major odometer order.
// Refuses when s^(n^2) exceeds budgets.max_cells.
void all_tableaux(int n, int s, const Budgets& budgets,
                  const std::function<void(const Tableau&)>& visit);

// Cantorian test by enumerating all n! diagonal words.
bool is_cantorian_perm(const Tableau& t);
bool is_bicantorian_perm(const Tableau& t);

std::uint64_t count_cantorian(int n, int s, const Budgets& budgets = {});
std::uint64_t count_bicantorian(int n, int s, const Budgets& budgets = {});

// Breadth-first closure of {t} under adjacent row swaps, adjacent column
// swaps and single-column adjacent-letter transpositions; these generate
// the whole equivalence, so the closure is the class of t.
std::vector<Tableau> class_closure(const Tableau& t, const Budgets& budgets = {});

} // namespace cantorian::oracle
