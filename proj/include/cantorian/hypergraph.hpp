#pragma once

#include "cantorian/budgets.hpp"
#include "cantorian/tableau.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace cantorian {

// The colored hypergraph of an n x n tableau: one vertex per cell, one
// block per row and one block per diagonal {v_{pi(i), i}}.  Every block is
// ordered by column index; chi_L and chi_P hold the realized color
// sequences of the row and diagonal blocks.
struct ColoredHypergraph {
    int n = 0;
    int s = 0;
    std::vector<Letter> colors;                    // colors[i*n + j] = chi(v_ij)
    std::vector<std::vector<int>> row_blocks;      // vertex indices i*n + j
    std::vector<std::vector<int>> diagonal_blocks; // n! blocks
    std::set<Word> chi_L;
    std::set<Word> chi_P;
};

// Builds the ((n-1)!+1)-regular, n-uniform colored hypergraph of t.
// Materializes all n! diagonal blocks, hence the budget on n.
ColoredHypergraph build_hypergraph(const Tableau& t, const Budgets& budgets = {});

// Some ordered color sequence appears in both a row block and a diagonal
// block; equivalent to the underlying tableau not being Cantorian.
bool is_intersecting(const ColoredHypergraph& h);

// Existence of a part-preserving bijection between the realized color
// sequence sets: |chi_L|, |chi_P| and |chi_L n chi_P| must agree.
bool coloring_isomorphic(const ColoredHypergraph& a, const ColoredHypergraph& b);

struct ConverseCheckReport {
    bool all_ok = false;
    std::vector<std::pair<std::string, bool>> clauses;
};

// Three pairwise non-equivalent 3x3 tableaux whose hypergraphs are
// isomorphic: hypergraph isomorphism does not refine back to tableau
// equivalence.
ConverseCheckReport converse_counterexample_check();

// Proper coloring of the 4-cycle v1-v2-v3-v4, clockwise.
struct CycleColoring {
    std::array<Letter, 4> colors{};
    bool proper() const;
    bool operator==(const CycleColoring&) const = default;
    auto operator<=>(const CycleColoring&) const = default;
};

// The bijection between 2x2 bi-Cantorian tableaux and proper 4-cycle
// colorings: (v1, v2, v3, v4) = (a11, a12, a22, a21).
CycleColoring psi_bijection(const Tableau& b);
Tableau psi_inverse(const CycleColoring& k, int s);

// |K(s)| = s(s-1)(s^2 - 3s + 3), the shared count of proper 4-cycle
// colorings and 2x2 bi-Cantorian tableaux over s letters.
std::uint64_t count_K(int s);

} // namespace cantorian
