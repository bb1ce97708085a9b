#pragma once

#include "cantorian/budgets.hpp"
#include "cantorian/tableau.hpp"

#include <optional>
#include <vector>

namespace cantorian {

// True iff some permutation pi of rows realizes w as a diagonal word:
// entry(pi(j), j) == w[j] for every column j.  Decided by perfect
// matching between columns and rows, polynomial in n.
bool permanent_contains(const Tableau& t, const Word& w);

// The realizing permutation when one exists: result[j] = row matched to
// column j (0-based).
std::optional<std::vector<int>> permanent_witness(const Tableau& t, const Word& w);

// The exact diagonal-word set, deduplicated and sorted.  Iterates all n!
// permutations, so it refuses for n > budgets.max_perm_n.
std::vector<Word> enumerate_permanent(const Tableau& t, const Budgets& budgets = {});

// No distinct row-word of t lies in its permanent.
bool is_cantorian(const Tableau& t);

// Cantorian, and additionally no column-word lies in the permanent.
bool is_bicantorian(const Tableau& t);

// Column half of the bi-Cantorian test; callers that already know t is
// Cantorian (orbit expansions) use this directly.
bool permanent_meets_columns(const Tableau& t);

} // namespace cantorian
