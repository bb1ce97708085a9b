#include "cantorian/hypergraph.hpp"

#include "cantorian/equivalence.hpp"
#include "cantorian/errors.hpp"
#include "cantorian/permanent.hpp"

#include <algorithm>
#include <numeric>

namespace cantorian {

ColoredHypergraph build_hypergraph(const Tableau& t, const Budgets& budgets) {
    if (factorial_u64(t.n) * std::uint64_t(t.n) > budgets.max_orbit)
        throw budget_error("build_hypergraph: n! diagonal blocks exceed the orbit budget");

    ColoredHypergraph h;
    h.n = t.n;
    h.s = t.s;
    h.colors = t.cells;

    for (int i = 0; i < t.n; ++i) {
        std::vector<int> block(static_cast<std::size_t>(t.n));
        for (int j = 0; j < t.n; ++j) block[std::size_t(j)] = i * t.n + j;
        h.chi_L.insert(t.row_word(i));
        h.row_blocks.push_back(std::move(block));
    }

    std::vector<int> pi(static_cast<std::size_t>(t.n));
    std::iota(pi.begin(), pi.end(), 0);
    do {
        std::vector<int> block(static_cast<std::size_t>(t.n));
        Word colors(static_cast<std::size_t>(t.n));
        for (int j = 0; j < t.n; ++j) {
            block[std::size_t(j)] = pi[std::size_t(j)] * t.n + j;
            colors[std::size_t(j)] = t.at(pi[std::size_t(j)], j);
        }
        h.diagonal_blocks.push_back(std::move(block));
        h.chi_P.insert(std::move(colors));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return h;
}

bool is_intersecting(const ColoredHypergraph& h) {
    for (const Word& row : h.chi_L)
        if (h.chi_P.count(row)) return true;
    return false;
}

namespace {

std::size_t intersection_size(const std::set<Word>& a, const std::set<Word>& b) {
    std::size_t k = 0;
    for (const Word& w : a) k += b.count(w);
    return k;
}

} // namespace

bool coloring_isomorphic(const ColoredHypergraph& a, const ColoredHypergraph& b) {
    if (a.n != b.n) return false;
    return a.chi_L.size() == b.chi_L.size() && a.chi_P.size() == b.chi_P.size() &&
           intersection_size(a.chi_L, a.chi_P) == intersection_size(b.chi_L, b.chi_P);
}

ConverseCheckReport converse_counterexample_check() {
    const std::vector<Tableau> three = {
        Tableau::from_rows({{1, 1, 1}, {1, 2, 2}, {1, 3, 3}}, 3),
        Tableau::from_rows({{1, 1, 1}, {1, 2, 2}, {2, 3, 3}}, 3),
        Tableau::from_rows({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}, 3),
    };

    ConverseCheckReport report;
    auto clause = [&](const std::string& name, bool ok) {
        report.clauses.emplace_back(name, ok);
    };

    std::vector<ColoredHypergraph> hs;
    for (const Tableau& t : three) hs.push_back(build_hypergraph(t));

    for (std::size_t i = 0; i < three.size(); ++i)
        for (std::size_t j = i + 1; j < three.size(); ++j)
            clause("distinct invariants " + std::to_string(i) + "," + std::to_string(j),
                   !(class_invariant(three[i]) == class_invariant(three[j])));

    for (std::size_t i = 0; i < three.size(); ++i) {
        clause("cantorian " + std::to_string(i), is_cantorian(three[i]));
        clause("3 distinct row sequences " + std::to_string(i), hs[i].chi_L.size() == 3);
        clause("6 distinct diagonal sequences " + std::to_string(i), hs[i].chi_P.size() == 6);
        clause("empty intersection " + std::to_string(i),
               intersection_size(hs[i].chi_L, hs[i].chi_P) == 0);
    }

    for (std::size_t i = 0; i < three.size(); ++i)
        for (std::size_t j = i + 1; j < three.size(); ++j)
            clause("isomorphic " + std::to_string(i) + "," + std::to_string(j),
                   coloring_isomorphic(hs[i], hs[j]));

    report.all_ok = std::all_of(report.clauses.begin(), report.clauses.end(),
                                [](const auto& c) { return c.second; });
    return report;
}

bool CycleColoring::proper() const {
    for (int e = 0; e < 4; ++e)
        if (colors[std::size_t(e)] == colors[std::size_t((e + 1) % 4)]) return false;
    return true;
}

CycleColoring psi_bijection(const Tableau& b) {
    if (b.n != 2) throw input_error("psi_bijection: tableau must be 2x2");
    if (!is_bicantorian(b)) throw input_error("psi_bijection: tableau must be bi-Cantorian");
    return CycleColoring{{b.at(0, 0), b.at(0, 1), b.at(1, 1), b.at(1, 0)}};
}

Tableau psi_inverse(const CycleColoring& k, int s) {
    if (!k.proper()) throw input_error("psi_inverse: coloring must be proper");
    for (Letter c : k.colors)
        if (c < 1 || int(c) > s) throw input_error("psi_inverse: color out of range 1..s");
    Tableau t(2, s);
    t.at(0, 0) = k.colors[0];
    t.at(0, 1) = k.colors[1];
    t.at(1, 1) = k.colors[2];
    t.at(1, 0) = k.colors[3];
    return t;
}

std::uint64_t count_K(int s) {
    if (s < 1) throw input_error("count_K: need s >= 1");
    const std::uint64_t u = std::uint64_t(s);
    return u * (u - 1) * (u * u - 3 * u + 3);
}

} // namespace cantorian
