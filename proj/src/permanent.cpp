#include "cantorian/permanent.hpp"

#include "cantorian/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace cantorian {

namespace {

// Hopcroft-Karp maximum matching on the columns-to-rows graph where
// column j accepts row i iff entry(i, j) == w[j].
class DiagonalMatcher {
public:
    DiagonalMatcher(const Tableau& t, const Word& w) : n_(t.n) {
        adj_.resize(std::size_t(n_));
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < n_; ++i)
                if (t.at(i, j) == w[std::size_t(j)]) adj_[std::size_t(j)].push_back(i);
    }

    // Returns the matching (column -> row) when it is perfect.
    std::optional<std::vector<int>> solve() {
        match_col_.assign(std::size_t(n_), -1);
        match_row_.assign(std::size_t(n_), -1);
        int matched = 0;
        while (bfs_layers()) {
            for (int j = 0; j < n_; ++j)
                if (match_col_[std::size_t(j)] < 0 && dfs_augment(j)) ++matched;
        }
        if (matched != n_) return std::nullopt;
        return match_col_;
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs_layers() {
        std::queue<int> q;
        dist_.assign(std::size_t(n_), kInf);
        for (int j = 0; j < n_; ++j) {
            if (match_col_[std::size_t(j)] < 0) {
                dist_[std::size_t(j)] = 0;
                q.push(j);
            }
        }
        bool reachable_free = false;
        while (!q.empty()) {
            int j = q.front();
            q.pop();
            for (int i : adj_[std::size_t(j)]) {
                int j2 = match_row_[std::size_t(i)];
                if (j2 < 0) {
                    reachable_free = true;
                } else if (dist_[std::size_t(j2)] == kInf) {
                    dist_[std::size_t(j2)] = dist_[std::size_t(j)] + 1;
                    q.push(j2);
                }
            }
        }
        return reachable_free;
    }

    bool dfs_augment(int j) {
        for (int i : adj_[std::size_t(j)]) {
            int j2 = match_row_[std::size_t(i)];
            if (j2 < 0 || (dist_[std::size_t(j2)] == dist_[std::size_t(j)] + 1 && dfs_augment(j2))) {
                match_col_[std::size_t(j)] = i;
                match_row_[std::size_t(i)] = j;
                return true;
            }
        }
        dist_[std::size_t(j)] = kInf;
        return false;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_col_, match_row_, dist_;
};

void check_query(const Tableau& t, const Word& w) {
    if (int(w.size()) != t.n)
        throw input_error("permanent query: word length must equal n");
    for (Letter a : w)
        if (a < 1 || int(a) > t.s)
            throw input_error("permanent query: letter out of range 1..s");
}

} // namespace

std::optional<std::vector<int>> permanent_witness(const Tableau& t, const Word& w) {
    check_query(t, w);
    return DiagonalMatcher(t, w).solve();
}

bool permanent_contains(const Tableau& t, const Word& w) {
    return permanent_witness(t, w).has_value();
}

std::vector<Word> enumerate_permanent(const Tableau& t, const Budgets& budgets) {
    if (t.n > budgets.max_perm_n)
        throw budget_error("enumerate_permanent: n exceeds the permutation budget; "
                           "use permanent_contains for membership queries");
    std::vector<int> perm(static_cast<std::size_t>(t.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::set<Word> words;
    Word w(static_cast<std::size_t>(t.n));
    do {
        for (int j = 0; j < t.n; ++j) w[std::size_t(j)] = t.at(perm[std::size_t(j)], j);
        words.insert(w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {words.begin(), words.end()};
}

bool is_cantorian(const Tableau& t) {
    for (const Word& row : t.distinct_rows())
        if (permanent_contains(t, row)) return false;
    return true;
}

bool permanent_meets_columns(const Tableau& t) {
    for (const Word& col : t.distinct_cols())
        if (permanent_contains(t, col)) return true;
    return false;
}

bool is_bicantorian(const Tableau& t) {
    return is_cantorian(t) && !permanent_meets_columns(t);
}

} // namespace cantorian
