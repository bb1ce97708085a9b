#pragma once

#include "cantorian/bigint.hpp"
#include "cantorian/budgets.hpp"
#include "cantorian/tableau.hpp"

#include <vector>

namespace cantorian {

// One element of the group acting on tableaux: per-column alphabet
// bijections applied first, then a row permutation and a column
// permutation.  Permutations are 0-based images: row i moves to
// row_perm[i], column j moves to col_perm[j]; col_bijections[j][a-1] is
// the image of letter a in column j (indexed before columns move).
struct GroupElement {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    std::vector<std::vector<Letter>> col_bijections;

    static GroupElement identity(int n, int s);
};

Tableau apply(const Tableau& t, const GroupElement& g);

// Composition in action order: apply(T, compose(second, first)) equals
// apply(apply(T, first), second).
GroupElement compose(const GroupElement& second, const GroupElement& first);

// Orbit under row x column permutations; refuses when (n!)^2 exceeds
// budgets.max_orbit.  Distinct members in first-seen order.
std::vector<Tableau> orbit_phi(const Tableau& t, const Budgets& budgets = {});

// Orbit under per-column alphabet bijections; size is the product of the
// falling factorials s!/(s - l+)! over the columns.
std::vector<Tableau> orbit_psi(const Tableau& t, const Budgets& budgets = {});

// Number of (sigma, tau) pairs fixing t jointly but not by rows alone.
std::uint64_t eta(const Tableau& t, const Budgets& budgets = {});

// Size of the intersection of the bijection orbit and the permutation
// orbit.  Independent of the ambient alphabet size: a permutation-orbit
// member lies in the bijection orbit iff its columns carry the same
// equal-letter pattern as the corresponding columns of t.
std::uint64_t theta(const Tableau& t, const Budgets& budgets = {});

struct ClassReport {
    Tableau representative; // minimal reduced form
    InvariantKey invariant;
    std::vector<int> row_multiplicities; // f, sorted decreasingly
    std::vector<int> col_multiplicities; // g, sorted decreasingly
    std::uint64_t eta = 0;
    std::uint64_t theta = 1;
    std::uint64_t orbit_phi_size = 0;
    std::uint64_t orbit_psi_size = 0;
    BigUint cardinality;
};

// Full class data for t, with the bijection-orbit factor evaluated at
// alphabet size t.s.
ClassReport class_cardinality(const Tableau& t, const Budgets& budgets = {});

// Same, at an explicit alphabet size s_eval >= every letter used in t.
// eta and theta do not depend on s_eval.
ClassReport class_cardinality_at(const Tableau& t, int s_eval, const Budgets& budgets = {});

// Validation path for the cardinality formula: the exact class size as the
// breadth-first closure of {t} under generator moves, sharing nothing with
// the orbit-stabilizer computation.
BigUint class_cardinality_oracle(const Tableau& t, const Budgets& budgets = {});

// Each column composition is already decreasing and the stripped column
// partitions are non-decreasing under the composition order.
bool is_reduced(const Tableau& t);

// The unique order-minimum of the equivalence class of t.  Scans all n!
// row orders; for each, every column is relabeled to its minimal pattern
// and equal-partition columns are sorted, which realizes the class
// minimum exactly.
Tableau minimal_reduced(const Tableau& t, const Budgets& budgets = {});

// Minimal pattern of a single column word: letters renamed to 1.. by
// decreasing count, ties by first occurrence.
Word min_relabel(const Word& w);

} // namespace cantorian
