#include "cantorian/enumeration.hpp"

#include "cantorian/errors.hpp"
#include "cantorian/permanent.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace cantorian {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point start = Clock::now();
    std::uint64_t limit_s = 0;

    void check(const char* what) const {
        if (limit_s == 0) return;
        auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - start);
        if (std::uint64_t(elapsed.count()) >= limit_s)
            throw budget_error(std::string(what) + ": time budget exhausted");
    }
};

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

} // namespace

std::vector<Composition> positive_partitions(int n, int max_parts) {
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (int(cur.parts.size()) == max_parts) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.parts.push_back(p);
            self(self, remaining - p, p);
            cur.parts.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        return cmp_composition(a, b) < 0;
    });
    return out;
}

std::vector<InvariantKey> candidate_invariant_keys(int n, int s) {
    if (n < 2 || s < 2)
        throw input_error("candidate_invariant_keys: need n >= 2 and s >= 2");
    const std::vector<Composition> parts = positive_partitions(n, std::min(n, s));
    std::vector<InvariantKey> keys;
    InvariantKey cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (int(cur.partitions.size()) == n) {
            keys.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < parts.size(); ++i) {
            cur.partitions.push_back(parts[i]);
            self(self, i);
            cur.partitions.pop_back();
        }
    };
    rec(rec, 0);
    return keys;
}

bool prune_key(const InvariantKey& key, int n, int s) {
    int top_letter = 0;
    int total = 0;
    for (const Composition& p : key.partitions) {
        top_letter += p.parts.front();
        total += p.weight();
    }
    // Reduced realizations give their largest column counts to one common
    // letter, so this letter count is forced.
    if (top_letter >= n * n - n + 1) return false;
    if (s == 2) {
        const int minority = total - top_letter;
        if (minority < n) return false;
        if (minority == n + 1 && n >= 4) return false;
        if (minority == n + 2 && n >= 5) return false;
        if (minority == n && n >= 3) {
            // the n Cantorian tableaux with minority total n form one class,
            // and its key repeats (n-1, 1); any other key with that total
            // holds no Cantorian tableaux
            for (const Composition& p : key.partitions)
                if (p.parts != std::vector<int>{n - 1, 1}) return false;
        }
    }
    return true;
}

namespace {

/*
 * Minimal-reduced generation for one invariant key.
 *
 * Columns are filled left to right in the key's partition order.  A column
 * for partition (l_1 >= l_2 >= ...) uses letter k exactly l_k times.  Three
 * necessary conditions prune the search:
 *   1. letters of equal count must first occur in letter order (otherwise a
 *      column bijection lowers the word),
 *   2. rows with identical prefixes are interchangeable, so the column must
 *      be non-decreasing on every such block,
 *   3. equal-partition columns must be non-decreasing left to right.
 * Survivors are confirmed by the exact canonicalizer.
 */
class KeyGenerator {
public:
    KeyGenerator(const InvariantKey& key, int n, int s, const Budgets& budgets,
                 const std::function<void(const Tableau&)>& emit)
        : n_(n), s_(s), budgets_(budgets), emit_(emit) {
        parts_ = key.partitions;
        std::stable_sort(parts_.begin(), parts_.end(),
                         [&](const Composition& a, const Composition& b) {
                             return cmp_composition(pad(a), pad(b)) < 0;
                         });
        columns_.assign(std::size_t(n_), Word(std::size_t(n_)));
        block_.assign(std::size_t(n_), 0);
    }

    void run() { fill_column(0); }

private:
    Composition pad(const Composition& p) const {
        Composition out = p;
        out.parts.resize(std::size_t(s_), 0);
        return out;
    }

    void fill_column(int j) {
        if (j == n_) {
            leaf();
            return;
        }
        const Composition& part = parts_[std::size_t(j)];
        std::vector<int> rem(std::size_t(part.length()) + 1, 0);
        for (int l = 1; l <= part.length(); ++l) rem[std::size_t(l)] = part.parts[std::size_t(l) - 1];
        const bool tied_to_prev = j > 0 && parts_[std::size_t(j)] == parts_[std::size_t(j - 1)];
        place_row(j, 0, 0, !tied_to_prev, rem);
    }

    // tie_free: the column already exceeds the previous equal-partition
    // column on some earlier row, so deeper rows are unconstrained by it.
    void place_row(int j, int i, int seen_mask, bool tie_free, std::vector<int>& rem) {
        if (i == n_) {
            std::vector<int> saved_block = block_;
            refine_blocks(j);
            fill_column(j + 1);
            block_ = std::move(saved_block);
            return;
        }
        Word& col = columns_[std::size_t(j)];
        const Composition& part = parts_[std::size_t(j)];
        for (int l = 1; l <= part.length(); ++l) {
            if (rem[std::size_t(l)] == 0) continue;
            // block-monotone: interchangeable rows in non-decreasing order
            if (i > 0 && block_[std::size_t(i)] == block_[std::size_t(i - 1)] &&
                l < int(col[std::size_t(i) - 1]))
                continue;
            // canonical pattern: equal-count letters appear in letter order
            if (!(seen_mask & (1 << l))) {
                bool ok = true;
                for (int m = 1; m < l && ok; ++m)
                    if (part.parts[std::size_t(m) - 1] == part.parts[std::size_t(l) - 1] &&
                        !(seen_mask & (1 << m)))
                        ok = false;
                if (!ok) continue;
            }
            // group-sorted: not below the previous equal-partition column
            bool next_tie_free = tie_free;
            if (!tie_free) {
                Letter prev = columns_[std::size_t(j) - 1][std::size_t(i)];
                if (l < int(prev)) continue;
                if (l > int(prev)) next_tie_free = true;
            }
            col[std::size_t(i)] = Letter(l);
            --rem[std::size_t(l)];
            place_row(j, i + 1, seen_mask | (1 << l), next_tie_free, rem);
            ++rem[std::size_t(l)];
        }
    }

    void refine_blocks(int j) {
        // rows with equal (block, new letter) stay interchangeable
        std::map<std::pair<int, Letter>, int> ids;
        for (int i = 0; i < n_; ++i) {
            auto kv = std::make_pair(block_[std::size_t(i)],
                                     columns_[std::size_t(j)][std::size_t(i)]);
            auto it = ids.emplace(kv, int(ids.size())).first;
            block_[std::size_t(i)] = it->second;
        }
    }

    void leaf() {
        Tableau t(n_, s_);
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < n_; ++i)
                t.at(i, j) = columns_[std::size_t(j)][std::size_t(i)];
        if (minimal_reduced(t, budgets_) == t) emit_(t);
    }

    int n_, s_;
    const Budgets& budgets_;
    const std::function<void(const Tableau&)>& emit_;
    std::vector<Composition> parts_;
    std::vector<Word> columns_;
    std::vector<int> block_;
};

} // namespace

void representatives_for_key(const InvariantKey& key, int n, int s, const Budgets& budgets,
                             const std::function<void(const Tableau&)>& emit) {
    for (const Composition& p : key.partitions) {
        if (!p.is_partition() || p.weight() != n || p.positive_length() != p.length())
            throw input_error("representatives_for_key: key entries must be positive partitions of n");
        if (p.length() > std::min(n, s))
            throw input_error("representatives_for_key: partition has more than min(n, s) parts");
    }
    KeyGenerator(key, n, s, budgets, emit).run();
}

namespace {

struct KeyCensus {
    std::uint64_t tested = 0;
    std::vector<ClassReport> reports;
};

// Shard candidate keys over a small pool; slots merge in key order so the
// result is identical for any worker count.
std::vector<KeyCensus> census_by_key(int n, int s, const CensusOptions& options,
                                     const std::vector<InvariantKey>& keys) {
    const int gen_s = std::min(n, s);
    std::vector<KeyCensus> slots(keys.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    Deadline deadline{Clock::now(), options.budgets.time_budget_s};

    std::atomic<std::size_t> done{0};
    auto progress = [&] {
        return "census " + std::to_string(n) + " " + std::to_string(s) + ": " +
               std::to_string(done.load()) + "/" + std::to_string(keys.size()) +
               " candidate keys finished";
    };
    auto work = [&]() {
        try {
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= keys.size() || failed.load()) return;
                deadline.check(progress().c_str());
                KeyCensus& slot = slots[idx];
                representatives_for_key(keys[idx], n, gen_s, options.budgets,
                                        [&](const Tableau& rep) {
                                            deadline.check(progress().c_str());
                                            ++slot.tested;
                                            if (!is_cantorian(rep)) return;
                                            Tableau at_s = rep;
                                            at_s.s = s;
                                            slot.reports.push_back(
                                                class_cardinality_at(at_s, s, options.budgets));
                                        });
                done.fetch_add(1);
            }
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true);
        }
    };

    const int workers = std::min<int>(resolve_workers(options.workers), int(keys.size()) + 1);
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return slots;
}

} // namespace

CensusResult census(int n, int s, const CensusOptions& options) {
    if (n < 2 || s < 2) throw input_error("census: need n >= 2 and s >= 2");
    std::vector<InvariantKey> keys = candidate_invariant_keys(n, s);
    std::erase_if(keys, [&](const InvariantKey& k) { return !prune_key(k, n, s); });

    CensusResult result;
    result.n = n;
    result.s = s;
    for (KeyCensus& slot : census_by_key(n, s, options, keys)) {
        result.tested_count += slot.tested;
        for (ClassReport& report : slot.reports) {
            result.total_cantorian += report.cardinality;
            result.per_class.push_back(std::move(report));
        }
    }
    result.representative_count = result.per_class.size();
    return result;
}

BigUint count_cantorian(int n, int s, const CensusOptions& options) {
    return census(n, s, options).total_cantorian;
}

BigUint closed_form_C(int n, int s) {
    if (s < 2) throw input_error("closed_form_C: need s >= 2");
    const auto S = std::int64_t(s);
    auto poly = [&](std::initializer_list<std::int64_t> coeffs) {
        // Horner over signed 128-bit; the inner factors stay positive for s >= 2
        __int128 acc = 0;
        for (std::int64_t c : coeffs) acc = acc * S + c;
        if (acc < 0) throw consistency_error("closed_form_C: negative inner polynomial");
        BigUint out(std::uint64_t(acc >> 64));
        for (int i = 0; i < 64; ++i) out *= 2;
        out += BigUint(std::uint64_t(acc & ~std::uint64_t(0)));
        return out;
    };
    BigUint base = big_pow(std::uint64_t(s), unsigned(n)) * big_pow(std::uint64_t(s - 1), 2);
    switch (n) {
    case 2:
        return base;
    case 3:
        return base * poly({1, 2, -15, 16, -1});
    case 4:
        return base * poly({1, 2, 3, -92, -43, 1014, -449, -5680, 12045, -9406, 2629});
    default:
        throw input_error("closed_form_C: closed forms exist for n in {2, 3, 4}");
    }
}

namespace {

std::uint64_t brute_count_c_n_p(int n, int p, const Budgets& budgets) {
    const int cells = n * n;
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) {
        if (total > budgets.max_cells / 2)
            throw budget_error("count_c_n_p: 2^(n^2) exceeds the cell budget");
        total *= 2;
    }
    std::uint64_t count = 0;
    Tableau t(n, 2);
    int twos = 0;
    for (;;) {
        if (twos == p && is_cantorian(t)) ++count;
        int i = cells - 1;
        while (i >= 0 && t.cells[std::size_t(i)] == 2) {
            t.cells[std::size_t(i)] = 1;
            --twos;
            --i;
        }
        if (i < 0) break;
        ++t.cells[std::size_t(i)];
        ++twos;
    }
    return count;
}

} // namespace

BigUint count_c_n_p(int n, int p, const Budgets& budgets) {
    if (n < 1 || p < 0 || p > n * n) throw input_error("count_c_n_p: need 0 <= p <= n^2");
    if (p < n) return BigUint(0);
    if (p == n && n >= 3) return BigUint(std::uint64_t(n));
    if (p == n + 1 && n >= 4) return BigUint(0);
    if (p == n + 2 && n >= 5) return BigUint(0);
    return BigUint(brute_count_c_n_p(n, p, budgets));
}

void for_each_cantorian(int n, int s, const CensusOptions& options,
                        const std::function<void(const Tableau&)>& visit) {
    CensusResult c = census(n, s, options);
    const Budgets& b = options.budgets;
    std::vector<int> sigma(static_cast<std::size_t>(n)), tau(static_cast<std::size_t>(n));
    Tableau rowperm(n, s), full(n, s);
    for (const ClassReport& report : c.per_class) {
        // distinct class members: permutation images of the bijection orbit
        Tableau rep = report.representative;
        rep.s = s;
        TableauSet seen(n, s);
        for (const Tableau& v : orbit_psi(rep, b)) {
            std::iota(sigma.begin(), sigma.end(), 0);
            do {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        rowperm.at(sigma[std::size_t(i)], j) = v.at(i, j);
                std::iota(tau.begin(), tau.end(), 0);
                do {
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            full.at(i, tau[std::size_t(j)]) = rowperm.at(i, j);
                    if (seen.insert(full)) visit(full);
                } while (std::next_permutation(tau.begin(), tau.end()));
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        }
        if (BigUint(std::uint64_t(seen.size())) != report.cardinality)
            throw consistency_error("for_each_cantorian: expansion disagrees with the class formula");
    }
}

BiCensusResult count_bicantorian(int n, int s, const CensusOptions& options) {
    BiCensusResult result;
    result.n = n;
    result.s = s;
    std::uint64_t count = 0;
    for_each_cantorian(n, s, options, [&](const Tableau& u) {
        // members of a Cantorian class are Cantorian; only columns to check
        if (!permanent_meets_columns(u)) ++count;
    });
    result.total_bicantorian = BigUint(count);
    return result;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t k) : parent(k) {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

BClassesResult bicantorian_classes(int n, int s, const CensusOptions& options) {
    std::vector<Tableau> members;
    for_each_cantorian(n, s, options, [&](const Tableau& u) {
        if (!permanent_meets_columns(u)) members.push_back(u);
    });

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < members.size(); ++i) index[pack_string(members[i])] = i;

    UnionFind uf(members.size());
    std::vector<int> sigma(static_cast<std::size_t>(n)), tau(static_cast<std::size_t>(n));
    std::vector<Letter> gamma(static_cast<std::size_t>(s));
    Tableau image(n, s);

    for (std::size_t i = 0; i < members.size(); ++i) {
        const Tableau& t = members[i];
        // global alphabet bijections always preserve bi-Cantorianity
        for (int a = 0; a < s; ++a) gamma[std::size_t(a)] = Letter(a + 1);
        do {
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    image.at(r, c) = gamma[std::size_t(t.at(r, c)) - 1];
            auto it = index.find(pack_string(image));
            if (it == index.end())
                throw consistency_error("bicantorian_classes: bijection image missing");
            uf.unite(i, it->second);
        } while (std::next_permutation(gamma.begin(), gamma.end()));

        // row/column permutation pairs whose image stays bi-Cantorian
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            std::iota(tau.begin(), tau.end(), 0);
            do {
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        image.at(sigma[std::size_t(r)], tau[std::size_t(c)]) = t.at(r, c);
                auto it = index.find(pack_string(image));
                if (it != index.end()) uf.unite(i, it->second);
            } while (std::next_permutation(tau.begin(), tau.end()));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }

    std::map<std::size_t, std::size_t> root_to_rep;
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::size_t root = uf.find(i);
        auto [it, fresh] = root_to_rep.emplace(root, i);
        if (!fresh && cmp_tableau(members[i], members[it->second]) < 0) it->second = i;
    }

    BClassesResult result;
    result.n = n;
    result.s = s;
    result.member_count = members.size();
    for (const auto& [root, rep] : root_to_rep) result.representatives.push_back(members[rep]);
    std::sort(result.representatives.begin(), result.representatives.end(),
              [](const Tableau& a, const Tableau& b) { return cmp_tableau(a, b) < 0; });
    return result;
}

Ratio ratio_b_over_c(int n, int s, const CensusOptions& options) {
    Ratio r;
    r.numerator = count_bicantorian(n, s, options).total_bicantorian;
    r.denominator = count_cantorian(n, s, options);
    if (!r.denominator.fits_u64())
        throw budget_error("ratio_b_over_c: denominator exceeds 64 bits");
    const std::uint64_t den = r.denominator.as_u64();
    BigUint scaled = r.numerator * std::uint64_t(1000);
    scaled += BigUint(den / 2); // round half up
    scaled.divmod(den);
    const std::uint64_t milli = scaled.as_u64();
    std::string digits = std::to_string(milli % 1000);
    digits.insert(digits.begin(), 3 - digits.size(), '0');
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    r.decimal = std::to_string(milli / 1000) + "." + digits;
    return r;
}

} // namespace cantorian
