#include "cantorian/oracle.hpp"

#include "cantorian/errors.hpp"

#include <algorithm>
#include <numeric>

namespace cantorian::oracle {

void all_tableaux(int n, int s, const Budgets& budgets,
                  const std::function<void(const Tableau&)>& visit) {
    if (n < 1 || s < 1) throw input_error("all_tableaux: need n >= 1 and s >= 1");
    const int cells = n * n;
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) {
        if (total > budgets.max_cells / std::uint64_t(s))
            throw budget_error("all_tableaux: s^(n^2) exceeds the cell budget");
        total *= std::uint64_t(s);
    }
    Tableau t(n, s);
    for (;;) {
        visit(t);
        int i = cells - 1;
        while (i >= 0 && t.cells[std::size_t(i)] == Letter(s)) {
            t.cells[std::size_t(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++t.cells[std::size_t(i)];
    }
}

namespace {

// Diagonal words by explicit permutation enumeration; no matching.
bool any_diagonal_equals(const Tableau& t, const std::vector<Word>& targets) {
    std::vector<int> perm(static_cast<std::size_t>(t.n));
    std::iota(perm.begin(), perm.end(), 0);
    Word diag(static_cast<std::size_t>(t.n));
    do {
        for (int j = 0; j < t.n; ++j) diag[std::size_t(j)] = t.at(perm[std::size_t(j)], j);
        for (const Word& w : targets)
            if (w == diag) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

bool is_cantorian_perm(const Tableau& t) {
    return !any_diagonal_equals(t, t.distinct_rows());
}

bool is_bicantorian_perm(const Tableau& t) {
    std::vector<Word> targets = t.distinct_rows();
    for (const Word& c : t.distinct_cols()) targets.push_back(c);
    return !any_diagonal_equals(t, targets);
}

std::uint64_t count_cantorian(int n, int s, const Budgets& budgets) {
    std::uint64_t count = 0;
    all_tableaux(n, s, budgets, [&](const Tableau& t) {
        if (is_cantorian_perm(t)) ++count;
    });
    return count;
}

std::uint64_t count_bicantorian(int n, int s, const Budgets& budgets) {
    std::uint64_t count = 0;
    all_tableaux(n, s, budgets, [&](const Tableau& t) {
        if (is_bicantorian_perm(t)) ++count;
    });
    return count;
}

std::vector<Tableau> class_closure(const Tableau& t, const Budgets& budgets) {
    std::vector<Tableau> frontier{t}, members{t};
    TableauSet seen(t.n, t.s);
    seen.insert(t);

    auto push = [&](const Tableau& u) {
        if (seen.insert(u)) {
            members.push_back(u);
            frontier.push_back(u);
        }
    };

    while (!frontier.empty()) {
        Tableau cur = std::move(frontier.back());
        frontier.pop_back();
        if (members.size() > budgets.max_orbit)
            throw budget_error("class_closure: class exceeds the orbit budget");
        for (int i = 0; i + 1 < t.n; ++i) {
            Tableau u = cur;
            for (int j = 0; j < t.n; ++j) std::swap(u.at(i, j), u.at(i + 1, j));
            push(u);
        }
        for (int j = 0; j + 1 < t.n; ++j) {
            Tableau u = cur;
            for (int i = 0; i < t.n; ++i) std::swap(u.at(i, j), u.at(i, j + 1));
            push(u);
        }
        for (int j = 0; j < t.n; ++j) {
            for (int a = 1; a < t.s; ++a) {
                Tableau u = cur;
                for (int i = 0; i < t.n; ++i) {
                    if (u.at(i, j) == Letter(a))
                        u.at(i, j) = Letter(a + 1);
                    else if (u.at(i, j) == Letter(a + 1))
                        u.at(i, j) = Letter(a);
                }
                push(u);
            }
        }
    }
    return members;
}

} // namespace cantorian::oracle
