#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace cantorian {

// Letters of an ordered alphabet are the integers 1..s.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Finite sequence of naturals; zero parts are allowed and length is
// semantic: (2,1) and (2,1,0) are different compositions.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p) : parts(p) {}
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

    int weight() const;
    int length() const { return int(parts.size()); }
    int positive_length() const; // number of non-zero parts
    bool is_partition() const;   // non-increasing parts
    Composition sorted_desc() const;
    Composition stripped() const; // zero parts removed

    bool operator==(const Composition&) const = default;
};

// Composition order: shorter length first; equal lengths compare by
// inverse lexicographic order (the lexicographically larger composition
// is the smaller one).  Returns -1, 0 or +1.
int cmp_composition(const Composition& a, const Composition& b);

// Letter counts (|w|_1, ..., |w|_s) of a word over 1..s.
Composition parikh_word(const Word& w, int s);

// Word order on equal-length words over the same alphabet: Parikh
// compositions first, plain lexicographic tie-break.
int cmp_word(const Word& a, const Word& b, int s);

struct Tableau {
    int n = 0;
    int s = 0;
    std::vector<Letter> cells; // row-major, cells[i*n + j] = entry in row i, column j (0-based)

    Tableau() = default;
    Tableau(int n_, int s_);
    static Tableau from_rows(const std::vector<std::vector<int>>& rows, int s);

    Letter at(int i, int j) const { return cells[std::size_t(i) * n + j]; }
    Letter& at(int i, int j) { return cells[std::size_t(i) * n + j]; }

    Word row_word(int i) const;
    Word col_word(int j) const;
    std::vector<Word> row_words() const;
    std::vector<Word> col_words() const;
    std::vector<Word> distinct_rows() const; // the set L
    std::vector<Word> distinct_cols() const; // the set C

    void validate() const; // throws input_error on malformed data

    bool operator==(const Tableau&) const = default;
};

// Tableau order: column-word sequences compared entrywise left to right
// under cmp_word.  Tableaux of different n or s do not compare.
int cmp_tableau(const Tableau& a, const Tableau& b);

// Per-column Parikh compositions (p_{c_1}, ..., p_{c_n}).
using ParikhVector = std::vector<Composition>;
ParikhVector parikh_tableau(const Tableau& t);

// Class invariant of the row/column/bijection equivalence: every column
// composition sorted decreasingly, zeros stripped, the n partitions then
// sorted non-decreasingly under the composition order.
struct InvariantKey {
    std::vector<Composition> partitions;
    bool operator==(const InvariantKey&) const = default;
};
int cmp_key(const InvariantKey& a, const InvariantKey& b);
InvariantKey class_invariant(const Tableau& t);

// --- hashing support -------------------------------------------------------

// True when an n x n tableau over s letters packs into one 64-bit word.
bool fits_u64(int n, int s);
std::uint64_t pack_u64(const Tableau& t);
std::string pack_string(const Tableau& t);

// Set of tableaux with a packed fast path for small n*s.
class TableauSet {
public:
    TableauSet(int n, int s);
    bool insert(const Tableau& t); // true when newly inserted
    bool contains(const Tableau& t) const;
    std::size_t size() const { return packed_ ? u_.size() : s_.size(); }
    void reserve(std::size_t k) { packed_ ? u_.reserve(k) : s_.reserve(k); }

private:
    bool packed_;
    std::unordered_set<std::uint64_t> u_;
    std::unordered_set<std::string> s_;
};

} // namespace cantorian
