#pragma once

#include "cantorian/enumeration.hpp"
#include "cantorian/equivalence.hpp"
#include "cantorian/hypergraph.hpp"
#include "cantorian/tableau.hpp"

#include <iosfwd>
#include <string>

namespace cantorian {

// Text format: first line "n s", then n rows of n space-separated letters.
// A compact variant (s <= 9) writes each row as one digit string.
Tableau parse_tableau(std::istream& in);
Tableau parse_tableau_text(const std::string& text);
std::string format_tableau(const Tableau& t);       // canonical space-separated form
std::string format_tableau_inline(const Tableau& t); // rows joined by ';', no header

// Word as digits for s <= 9, space-separated integers otherwise.
std::string format_word(const Word& w, int s);
Word parse_word(const std::string& text, int n, int s);

std::string format_composition(const Composition& c);
std::string format_key(const InvariantKey& key);

// Factored total in the census table style: k.s^n or k.(s-1)^2.s^n; empty
// when the total does not factor that way.
std::string factored_census_total(const BigUint& total, int n, int s);
// Factored bi-census style (s-1).s.m; empty when not divisible.
std::string factored_bicensus_total(const BigUint& total, int s);

std::string render_class_report(const ClassReport& r);
std::string render_census(const CensusResult& c);

// Structured outputs (JSON text, stable field order).
std::string json_class_report(const ClassReport& r);
std::string json_census(const CensusResult& c);
std::string json_hypergraph(const ColoredHypergraph& h);

// Wraps a results payload in the versioned envelope used by every
// structured command output.
std::string json_envelope(const std::string& command, const std::string& inputs_json,
                          const std::string& results_json);

} // namespace cantorian
