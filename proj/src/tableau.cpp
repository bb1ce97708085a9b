#include "cantorian/tableau.hpp"

#include "cantorian/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cantorian {

int Composition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Composition::positive_length() const {
    int k = 0;
    for (int p : parts)
        if (p != 0) ++k;
    return k;
}

bool Composition::is_partition() const {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i]) return false;
    return true;
}

Composition Composition::sorted_desc() const {
    Composition out = *this;
    std::sort(out.parts.begin(), out.parts.end(), std::greater<int>());
    return out;
}

Composition Composition::stripped() const {
    Composition out;
    for (int p : parts)
        if (p != 0) out.parts.push_back(p);
    return out;
}

int cmp_composition(const Composition& a, const Composition& b) {
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    // inverse lexicographic: the lexicographically larger one comes first
    for (int i = 0; i < a.length(); ++i) {
        if (a.parts[i] != b.parts[i]) return a.parts[i] > b.parts[i] ? -1 : 1;
    }
    return 0;
}

Composition parikh_word(const Word& w, int s) {
    if (s < 1) throw input_error("parikh_word: alphabet size must be positive");
    Composition p;
    p.parts.assign(std::size_t(s), 0);
    for (Letter a : w) {
        if (a < 1 || int(a) > s) throw input_error("parikh_word: letter out of range 1..s");
        ++p.parts[std::size_t(a) - 1];
    }
    return p;
}

int cmp_word(const Word& a, const Word& b, int s) {
    if (a.size() != b.size()) throw input_error("cmp_word: words must have equal length");
    int c = cmp_composition(parikh_word(a, s), parikh_word(b, s));
    if (c != 0) return c;
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

Tableau::Tableau(int n_, int s_) : n(n_), s(s_), cells(std::size_t(n_) * n_, 1) {
    validate();
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows, int s) {
    Tableau t;
    t.n = int(rows.size());
    t.s = s;
    t.cells.reserve(std::size_t(t.n) * t.n);
    for (const auto& row : rows) {
        if (int(row.size()) != t.n)
            throw input_error("Tableau::from_rows: grid is not square");
        for (int v : row) {
            if (v < 1 || v > s) throw input_error("Tableau::from_rows: letter out of range 1..s");
            t.cells.push_back(Letter(v));
        }
    }
    t.validate();
    return t;
}

void Tableau::validate() const {
    if (n < 1) throw input_error("Tableau: side length must be >= 1");
    if (s < 1) throw input_error("Tableau: alphabet size must be >= 1");
    if (cells.size() != std::size_t(n) * n)
        throw input_error("Tableau: cell count does not match n*n");
    for (Letter a : cells)
        if (a < 1 || int(a) > s) throw input_error("Tableau: letter out of range 1..s");
}

Word Tableau::row_word(int i) const {
    return Word(cells.begin() + std::size_t(i) * n, cells.begin() + std::size_t(i + 1) * n);
}

Word Tableau::col_word(int j) const {
    Word w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[std::size_t(i)] = at(i, j);
    return w;
}

std::vector<Word> Tableau::row_words() const {
    std::vector<Word> out;
    out.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) out.push_back(row_word(i));
    return out;
}

std::vector<Word> Tableau::col_words() const {
    std::vector<Word> out;
    out.reserve(std::size_t(n));
    for (int j = 0; j < n; ++j) out.push_back(col_word(j));
    return out;
}

static std::vector<Word> dedup(std::vector<Word> ws) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

std::vector<Word> Tableau::distinct_rows() const { return dedup(row_words()); }
std::vector<Word> Tableau::distinct_cols() const { return dedup(col_words()); }

int cmp_tableau(const Tableau& a, const Tableau& b) {
    if (a.n != b.n || a.s != b.s)
        throw input_error("cmp_tableau: tableaux of different n or s do not compare");
    for (int j = 0; j < a.n; ++j) {
        int c = cmp_word(a.col_word(j), b.col_word(j), a.s);
        if (c != 0) return c;
    }
    return 0;
}

ParikhVector parikh_tableau(const Tableau& t) {
    ParikhVector pv;
    pv.reserve(std::size_t(t.n));
    for (int j = 0; j < t.n; ++j) pv.push_back(parikh_word(t.col_word(j), t.s));
    return pv;
}

int cmp_key(const InvariantKey& a, const InvariantKey& b) {
    if (a.partitions.size() != b.partitions.size())
        return a.partitions.size() < b.partitions.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.partitions.size(); ++i) {
        int c = cmp_composition(a.partitions[i], b.partitions[i]);
        if (c != 0) return c;
    }
    return 0;
}

InvariantKey class_invariant(const Tableau& t) {
    InvariantKey key;
    key.partitions.reserve(std::size_t(t.n));
    for (int j = 0; j < t.n; ++j)
        key.partitions.push_back(parikh_word(t.col_word(j), t.s).sorted_desc().stripped());
    std::sort(key.partitions.begin(), key.partitions.end(),
              [](const Composition& a, const Composition& b) { return cmp_composition(a, b) < 0; });
    return key;
}

// --- hashing support -------------------------------------------------------

static int bits_per_letter(int s) {
    unsigned range = unsigned(s > 1 ? s - 1 : 1);
    return std::bit_width(range);
}

bool fits_u64(int n, int s) {
    return n * n * bits_per_letter(s) <= 64;
}

std::uint64_t pack_u64(const Tableau& t) {
    const int bits = bits_per_letter(t.s);
    std::uint64_t v = 0;
    for (Letter a : t.cells) v = (v << bits) | std::uint64_t(a - 1);
    return v;
}

std::string pack_string(const Tableau& t) {
    return std::string(reinterpret_cast<const char*>(t.cells.data()), t.cells.size());
}

TableauSet::TableauSet(int n, int s) : packed_(fits_u64(n, s)) {}

bool TableauSet::insert(const Tableau& t) {
    return packed_ ? u_.insert(pack_u64(t)).second : s_.insert(pack_string(t)).second;
}

bool TableauSet::contains(const Tableau& t) const {
    return packed_ ? u_.count(pack_u64(t)) != 0 : s_.count(pack_string(t)) != 0;
}

} // namespace cantorian
