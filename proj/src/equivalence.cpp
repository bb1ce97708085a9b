#include "cantorian/equivalence.hpp"

#include "cantorian/errors.hpp"
#include "cantorian/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cantorian {

namespace {

bool is_permutation_of(const std::vector<int>& p, int n) {
    if (int(p.size()) != n) return false;
    std::vector<bool> seen(std::size_t(n), false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[std::size_t(v)]) return false;
        seen[std::size_t(v)] = true;
    }
    return true;
}

bool is_letter_bijection(const std::vector<Letter>& b, int s) {
    if (int(b.size()) != s) return false;
    std::vector<bool> seen(std::size_t(s), false);
    for (Letter v : b) {
        if (v < 1 || int(v) > s || seen[std::size_t(v) - 1]) return false;
        seen[std::size_t(v) - 1] = true;
    }
    return true;
}

std::vector<int> identity_perm(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

void check_orbit_phi_budget(int n, const Budgets& budgets) {
    // (10!)^2 ~ 1.3e13 already dwarfs any sane budget; larger n would
    // overflow the squared factorial.
    if (n > 10 || factorial_u64(n) * factorial_u64(n) > budgets.max_orbit)
        throw budget_error("orbit_phi: (n!)^2 exceeds the orbit budget");
}

} // namespace

GroupElement GroupElement::identity(int n, int s) {
    GroupElement g;
    g.row_perm = identity_perm(n);
    g.col_perm = identity_perm(n);
    std::vector<Letter> id(static_cast<std::size_t>(s));
    for (int a = 0; a < s; ++a) id[std::size_t(a)] = Letter(a + 1);
    g.col_bijections.assign(std::size_t(n), id);
    return g;
}

Tableau apply(const Tableau& t, const GroupElement& g) {
    if (!is_permutation_of(g.row_perm, t.n) || !is_permutation_of(g.col_perm, t.n))
        throw input_error("apply: permutation does not match tableau dimensions");
    if (int(g.col_bijections.size()) != t.n)
        throw input_error("apply: need one alphabet bijection per column");
    for (const auto& b : g.col_bijections)
        if (!is_letter_bijection(b, t.s))
            throw input_error("apply: column map is not a bijection of 1..s");

    Tableau out = t;
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            out.at(g.row_perm[std::size_t(i)], g.col_perm[std::size_t(j)]) =
                g.col_bijections[std::size_t(j)][std::size_t(t.at(i, j)) - 1];
    return out;
}

GroupElement compose(const GroupElement& second, const GroupElement& first) {
    const int n = int(first.row_perm.size());
    const int s = int(first.col_bijections.empty() ? 0 : first.col_bijections[0].size());
    GroupElement g;
    g.row_perm.resize(std::size_t(n));
    g.col_perm.resize(std::size_t(n));
    g.col_bijections.resize(std::size_t(n));
    for (int i = 0; i < n; ++i)
        g.row_perm[std::size_t(i)] = second.row_perm[std::size_t(first.row_perm[std::size_t(i)])];
    for (int j = 0; j < n; ++j) {
        g.col_perm[std::size_t(j)] = second.col_perm[std::size_t(first.col_perm[std::size_t(j)])];
        // first's bijection acts while the column still sits at j; second's
        // acts after the column moved to first.col_perm[j]
        const auto& b1 = first.col_bijections[std::size_t(j)];
        const auto& b2 = second.col_bijections[std::size_t(first.col_perm[std::size_t(j)])];
        std::vector<Letter> b(static_cast<std::size_t>(s));
        for (int a = 0; a < s; ++a) b[std::size_t(a)] = b2[std::size_t(b1[std::size_t(a)]) - 1];
        g.col_bijections[std::size_t(j)] = std::move(b);
    }
    return g;
}

std::vector<Tableau> orbit_phi(const Tableau& t, const Budgets& budgets) {
    check_orbit_phi_budget(t.n, budgets);
    std::vector<Tableau> out;
    TableauSet seen(t.n, t.s);
    std::vector<int> sigma = identity_perm(t.n);
    Tableau rowperm(t.n, t.s), full(t.n, t.s);
    do {
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j)
                rowperm.at(sigma[std::size_t(i)], j) = t.at(i, j);
        std::vector<int> tau = identity_perm(t.n);
        do {
            for (int i = 0; i < t.n; ++i)
                for (int j = 0; j < t.n; ++j)
                    full.at(i, tau[std::size_t(j)]) = rowperm.at(i, j);
            if (seen.insert(full)) out.push_back(full);
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

namespace {

// All images of one column under alphabet bijections: the distinct
// letters map to any ordered choice of l+ distinct letters from 1..s.
std::vector<Word> column_images(const Word& col, int s) {
    std::vector<Letter> distinct;
    std::vector<int> code(col.size()); // position -> index into distinct
    for (std::size_t i = 0; i < col.size(); ++i) {
        auto it = std::find(distinct.begin(), distinct.end(), col[i]);
        if (it == distinct.end()) {
            distinct.push_back(col[i]);
            code[i] = int(distinct.size()) - 1;
        } else {
            code[i] = int(it - distinct.begin());
        }
    }
    const int k = int(distinct.size());
    std::vector<Word> images;
    std::vector<Letter> target;
    std::vector<bool> used(std::size_t(s), false);
    auto rec = [&](auto&& self) -> void {
        if (int(target.size()) == k) {
            Word w(col.size());
            for (std::size_t i = 0; i < col.size(); ++i) w[i] = target[std::size_t(code[i])];
            images.push_back(std::move(w));
            return;
        }
        for (int a = 1; a <= s; ++a) {
            if (used[std::size_t(a) - 1]) continue;
            used[std::size_t(a) - 1] = true;
            target.push_back(Letter(a));
            self(self);
            target.pop_back();
            used[std::size_t(a) - 1] = false;
        }
    };
    rec(rec);
    return images;
}

std::uint64_t orbit_psi_size_formula(const Tableau& t, int s_eval) {
    std::uint64_t size = 1;
    for (int j = 0; j < t.n; ++j) {
        int k = parikh_word(t.col_word(j), t.s).positive_length();
        for (int i = 0; i < k; ++i) {
            std::uint64_t factor = std::uint64_t(s_eval - i);
            if (size > UINT64_MAX / factor)
                throw budget_error("orbit_psi: orbit size exceeds 64 bits");
            size *= factor;
        }
    }
    return size;
}

} // namespace

std::vector<Tableau> orbit_psi(const Tableau& t, const Budgets& budgets) {
    if (orbit_psi_size_formula(t, t.s) > budgets.max_orbit)
        throw budget_error("orbit_psi: orbit size exceeds the orbit budget");
    std::vector<std::vector<Word>> images(static_cast<std::size_t>(t.n));
    for (int j = 0; j < t.n; ++j) images[std::size_t(j)] = column_images(t.col_word(j), t.s);

    std::vector<Tableau> out;
    std::vector<std::size_t> idx(std::size_t(t.n), 0);
    Tableau cur(t.n, t.s);
    for (;;) {
        for (int j = 0; j < t.n; ++j)
            for (int i = 0; i < t.n; ++i)
                cur.at(i, j) = images[std::size_t(j)][idx[std::size_t(j)]][std::size_t(i)];
        out.push_back(cur);
        int j = t.n - 1;
        while (j >= 0 && ++idx[std::size_t(j)] == images[std::size_t(j)].size()) {
            idx[std::size_t(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

std::uint64_t eta(const Tableau& t, const Budgets& budgets) {
    check_orbit_phi_budget(t.n, budgets);
    // Pairs (sigma, tau) with sigma.T.tau^-1 == T and sigma.T != T: for each
    // sigma that changes T but preserves the column multiset, the column
    // permutations mapping T onto sigma.T number prod(multiplicity!).
    std::map<Word, int> col_mult;
    for (int j = 0; j < t.n; ++j) ++col_mult[t.col_word(j)];
    std::uint64_t per_match = 1;
    for (const auto& [w, m] : col_mult) per_match *= factorial_u64(m);

    std::uint64_t count = 0;
    std::vector<int> sigma = identity_perm(t.n);
    Tableau rowperm(t.n, t.s);
    do {
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j)
                rowperm.at(sigma[std::size_t(i)], j) = t.at(i, j);
        if (rowperm == t) continue;
        std::map<Word, int> mult;
        for (int j = 0; j < t.n; ++j) ++mult[rowperm.col_word(j)];
        if (mult == col_mult) count += per_match;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

namespace {

// Pattern code of a word: letters renamed by first occurrence, ignoring
// counts.  Two words are bijection-related iff their codes agree.
Word first_occurrence_code(const Word& w) {
    Word code(w.size());
    std::vector<int> label(256, 0);
    int next = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int& l = label[w[i]];
        if (l == 0) l = next++;
        code[i] = Letter(l);
    }
    return code;
}

std::vector<int> word_multiplicities(std::vector<Word> ws) {
    std::sort(ws.begin(), ws.end());
    std::vector<int> mult;
    for (std::size_t i = 0; i < ws.size();) {
        std::size_t j = i;
        while (j < ws.size() && ws[j] == ws[i]) ++j;
        mult.push_back(int(j - i));
        i = j;
    }
    std::sort(mult.begin(), mult.end(), std::greater<int>());
    return mult;
}

} // namespace

std::uint64_t theta(const Tableau& t, const Budgets& budgets) {
    std::vector<Word> want(static_cast<std::size_t>(t.n));
    for (int j = 0; j < t.n; ++j) want[std::size_t(j)] = first_occurrence_code(t.col_word(j));
    std::uint64_t count = 0;
    for (const Tableau& u : orbit_phi(t, budgets)) {
        bool match = true;
        for (int j = 0; j < t.n && match; ++j)
            match = first_occurrence_code(u.col_word(j)) == want[std::size_t(j)];
        if (match) ++count;
    }
    return count;
}

ClassReport class_cardinality_at(const Tableau& t, int s_eval, const Budgets& budgets) {
    for (Letter a : t.cells)
        if (int(a) > s_eval)
            throw input_error("class_cardinality_at: tableau uses letters beyond s_eval");

    ClassReport r;
    r.invariant = class_invariant(t);
    r.row_multiplicities = word_multiplicities(t.row_words());
    r.col_multiplicities = word_multiplicities(t.col_words());
    r.eta = eta(t, budgets);
    r.theta = theta(t, budgets);

    std::uint64_t stab = 1;
    for (int f : r.row_multiplicities) stab *= factorial_u64(f);
    for (int g : r.col_multiplicities) stab *= factorial_u64(g);
    stab += r.eta;
    const std::uint64_t pairs = factorial_u64(t.n) * factorial_u64(t.n);
    if (pairs % stab != 0)
        throw consistency_error("class_cardinality: stabilizer does not divide (n!)^2");
    r.orbit_phi_size = pairs / stab;

    r.orbit_psi_size = orbit_psi_size_formula(t, s_eval);

    BigUint product = BigUint(r.orbit_phi_size) * BigUint(r.orbit_psi_size);
    if (!product.divisible_by(r.theta))
        throw consistency_error("class_cardinality: theta does not divide the orbit product");
    r.cardinality = product.divide_exact(r.theta);
    r.representative = minimal_reduced(t, budgets);
    r.representative.s = s_eval;
    return r;
}

ClassReport class_cardinality(const Tableau& t, const Budgets& budgets) {
    return class_cardinality_at(t, t.s, budgets);
}

BigUint class_cardinality_oracle(const Tableau& t, const Budgets& budgets) {
    return BigUint(std::uint64_t(oracle::class_closure(t, budgets).size()));
}

bool is_reduced(const Tableau& t) {
    Composition prev;
    for (int j = 0; j < t.n; ++j) {
        Composition p = parikh_word(t.col_word(j), t.s);
        if (!p.is_partition()) return false;
        Composition stripped = p.stripped();
        if (j > 0 && cmp_composition(prev, stripped) > 0) return false;
        prev = std::move(stripped);
    }
    return true;
}

Word min_relabel(const Word& w) {
    int count[256] = {0};
    int first[256];
    std::vector<Letter> distinct;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (count[w[i]]++ == 0) {
            first[w[i]] = int(i);
            distinct.push_back(w[i]);
        }
    }
    std::sort(distinct.begin(), distinct.end(), [&](Letter a, Letter b) {
        if (count[a] != count[b]) return count[a] > count[b];
        return first[a] < first[b];
    });
    Letter label[256];
    for (std::size_t k = 0; k < distinct.size(); ++k) label[distinct[k]] = Letter(k + 1);
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = label[w[i]];
    return out;
}

Tableau minimal_reduced(const Tableau& t, const Budgets& budgets) {
    const int n = t.n;
    if (factorial_u64(n) * std::uint64_t(n) * std::uint64_t(n) > budgets.max_orbit)
        throw budget_error("minimal_reduced: n! scan exceeds the orbit budget");

    // Column positions group by the column's Parikh partition; groups are
    // ordered by the composition order of the full-length partitions, which
    // is how the class minimum orders its columns.
    std::vector<Composition> part(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) part[std::size_t(j)] = parikh_word(t.col_word(j), t.s).sorted_desc();
    std::vector<int> order = [&] {
        std::vector<int> o(static_cast<std::size_t>(n));
        std::iota(o.begin(), o.end(), 0);
        std::stable_sort(o.begin(), o.end(), [&](int a, int b) {
            return cmp_composition(part[std::size_t(a)], part[std::size_t(b)]) < 0;
        });
        return o;
    }();
    std::vector<std::pair<int, int>> groups; // [begin, end) ranges into `order`
    for (int b = 0; b < n;) {
        int e = b + 1;
        while (e < n && cmp_composition(part[std::size_t(order[std::size_t(b)])],
                                        part[std::size_t(order[std::size_t(e)])]) == 0)
            ++e;
        groups.emplace_back(b, e);
        b = e;
    }

    // Flat candidate: column words concatenated in final position order.
    // Within a fixed partition multiset, comparing flats lexicographically
    // agrees with the tableau order.
    std::vector<Letter> best;
    std::vector<int> sigma = identity_perm(n); // sigma[i] = original row placed at i
    std::vector<Word> relabeled(static_cast<std::size_t>(n));
    Word scratch(static_cast<std::size_t>(n));
    std::vector<Letter> flat(std::size_t(n) * n);
    do {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i)
                scratch[std::size_t(i)] = t.at(sigma[std::size_t(i)], j);
            relabeled[std::size_t(j)] = min_relabel(scratch);
        }
        std::vector<int> arrange = order;
        for (auto [b, e] : groups)
            std::sort(arrange.begin() + b, arrange.begin() + e, [&](int a, int c) {
                return relabeled[std::size_t(a)] < relabeled[std::size_t(c)];
            });
        for (int pos = 0; pos < n; ++pos)
            std::copy(relabeled[std::size_t(arrange[std::size_t(pos)])].begin(),
                      relabeled[std::size_t(arrange[std::size_t(pos)])].end(),
                      flat.begin() + std::size_t(pos) * n);
        if (best.empty() || flat < best) best = flat;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    Tableau out(n, t.s);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            out.at(i, j) = best[std::size_t(j) * n + i];
    return out;
}

} // namespace cantorian
