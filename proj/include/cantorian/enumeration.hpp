#pragma once

#include "cantorian/bigint.hpp"
#include "cantorian/budgets.hpp"
#include "cantorian/equivalence.hpp"
#include "cantorian/tableau.hpp"

#include <functional>
#include <vector>

namespace cantorian {

struct CensusOptions {
    int workers = 0; // 0 = hardware concurrency
    Budgets budgets;
};

struct CensusResult {
    int n = 0;
    int s = 0;
    std::uint64_t representative_count = 0; // Cantorian classes found
    std::uint64_t tested_count = 0;         // minimal reduced tableaux examined
    BigUint total_cantorian;
    std::vector<ClassReport> per_class;
};

struct BiCensusResult {
    int n = 0;
    int s = 0;
    BigUint total_bicantorian;
};

struct BClassesResult {
    int n = 0;
    int s = 0;
    std::uint64_t member_count = 0; // bi-Cantorian tableaux expanded
    std::vector<Tableau> representatives; // order-minimal member per class
};

// Positive partitions of n with at most max_parts parts, ascending under
// the composition order.
std::vector<Composition> positive_partitions(int n, int max_parts);

// All candidate class invariants for n x n tableaux over s letters:
// non-decreasing sequences of n positive partitions of weight n with at
// most min(n, s) parts.  Unpruned.
std::vector<InvariantKey> candidate_invariant_keys(int n, int s);

// Keep/discard filter on candidate keys.  A key dies when the forced
// count of its most frequent letter already makes every realization
// non-Cantorian, and over two letters when the minority-letter total hits
// a count with no Cantorian tableaux at all.
bool prune_key(const InvariantKey& key, int n, int s);

// Exactly the minimal reduced tableaux whose class invariant equals key,
// built column by column with canonical-prefix pruning and an exact
// minimality check at the leaves.  Emission order is deterministic.
void representatives_for_key(const InvariantKey& key, int n, int s, const Budgets& budgets,
                             const std::function<void(const Tableau&)>& emit);

// Full symmetry-reduced census of Cantorian tableaux.  For s > n the
// representatives over n letters are reused and each class cardinality is
// evaluated at alphabet size s.
CensusResult census(int n, int s, const CensusOptions& options = {});

BigUint count_cantorian(int n, int s, const CensusOptions& options = {});

// Closed-form Cantorian counts for n = 2, 3, 4.
BigUint closed_form_C(int n, int s);

// Cantorian tableaux over two letters with exactly p occurrences of the
// second letter; closed value where known, brute force otherwise.
BigUint count_c_n_p(int n, int p, const Budgets& budgets = {});

// Every member of every Cantorian class, visited exactly once.
void for_each_cantorian(int n, int s, const CensusOptions& options,
                        const std::function<void(const Tableau&)>& visit);

BiCensusResult count_bicantorian(int n, int s, const CensusOptions& options = {});

// Connected components of the bi-Cantorian set under: identical row and
// column permutation, global alphabet bijection, and any row/column
// permutation pair whose image is again bi-Cantorian.
BClassesResult bicantorian_classes(int n, int s, const CensusOptions& options = {});

struct Ratio {
    BigUint numerator;   // bi-Cantorian count
    BigUint denominator; // Cantorian count
    std::string decimal; // 3 places, trailing zeros trimmed
};

Ratio ratio_b_over_c(int n, int s, const CensusOptions& options = {});

} // namespace cantorian
