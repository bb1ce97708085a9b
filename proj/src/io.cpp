#include "cantorian/io.hpp"

#include "cantorian/errors.hpp"

#include <json.hpp>

#include <istream>
#include <sstream>

namespace cantorian {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<int> parse_row_line(const std::string& line, int n, int s, int row_no) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    const std::string where = "row " + std::to_string(row_no);

    std::vector<int> out;
    if (int(tokens.size()) == n) {
        for (const std::string& w : tokens) {
            try {
                out.push_back(std::stoi(w));
            } catch (const std::exception&) {
                throw input_error(where + ": '" + w + "' is not an integer");
            }
        }
    } else if (tokens.size() == 1 && int(tokens[0].size()) == n && s <= 9) {
        for (char c : tokens[0]) {
            if (c < '0' || c > '9') throw input_error(where + ": '" + tokens[0] + "' is not a digit row");
            out.push_back(c - '0');
        }
    } else {
        throw input_error(where + ": expected " + std::to_string(n) +
                          " entries, got " + std::to_string(tokens.size()) + " token(s)");
    }
    return out;
}

} // namespace

Tableau parse_tableau(std::istream& in) {
    std::string line;
    do {
        if (!std::getline(in, line)) throw input_error("header: missing 'n s' line");
    } while (line.find_first_not_of(" \t\r\n") == std::string::npos);

    std::istringstream head(line);
    int n = 0, s = 0;
    if (!(head >> n >> s)) throw input_error("header: expected 'n s'");
    std::string extra;
    if (head >> extra) throw input_error("header: trailing token '" + extra + "'");
    if (n < 1 || s < 1) throw input_error("header: need n >= 1 and s >= 1");

    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= n; ++i) {
        do {
            if (!std::getline(in, line))
                throw input_error("row " + std::to_string(i) + ": unexpected end of input");
        } while (line.find_first_not_of(" \t\r\n") == std::string::npos);
        rows.push_back(parse_row_line(line, n, s, i));
    }
    return Tableau::from_rows(rows, s);
}

Tableau parse_tableau_text(const std::string& text) {
    std::istringstream in(text);
    return parse_tableau(in);
}

std::string format_tableau(const Tableau& t) {
    std::string out = std::to_string(t.n) + " " + std::to_string(t.s) + "\n";
    for (int i = 0; i < t.n; ++i) {
        for (int j = 0; j < t.n; ++j) {
            if (j) out += ' ';
            out += std::to_string(int(t.at(i, j)));
        }
        out += '\n';
    }
    return out;
}

std::string format_tableau_inline(const Tableau& t) {
    std::string out;
    for (int i = 0; i < t.n; ++i) {
        if (i) out += ';';
        for (int j = 0; j < t.n; ++j) {
            if (j) out += ' ';
            out += std::to_string(int(t.at(i, j)));
        }
    }
    return out;
}

std::string format_word(const Word& w, int s) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (s > 9 && i) out += ' ';
        out += std::to_string(int(w[i]));
    }
    return out;
}

Word parse_word(const std::string& text, int n, int s) {
    std::vector<int> values;
    if (text.find_first_of(" ,") != std::string::npos) {
        std::string normalized = text;
        for (char& c : normalized)
            if (c == ',') c = ' ';
        std::istringstream ss(normalized);
        int v;
        while (ss >> v) values.push_back(v);
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw input_error("word: '" + text + "' is not a digit string");
            values.push_back(c - '0');
        }
    }
    if (int(values.size()) != n)
        throw input_error("word: expected " + std::to_string(n) + " letters");
    Word w;
    for (int v : values) {
        if (v < 1 || v > s) throw input_error("word: letter out of range 1..s");
        w.push_back(Letter(v));
    }
    return w;
}

std::string format_composition(const Composition& c) {
    std::string out = "(";
    for (int i = 0; i < c.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.parts[std::size_t(i)]);
    }
    return out + ")";
}

std::string format_key(const InvariantKey& key) {
    std::string out = "[";
    for (std::size_t i = 0; i < key.partitions.size(); ++i) {
        if (i) out += ' ';
        out += format_composition(key.partitions[i]);
    }
    return out + "]";
}

std::string factored_census_total(const BigUint& total, int n, int s) {
    const std::uint64_t sn = big_pow(std::uint64_t(s), unsigned(n)).as_u64();
    const std::uint64_t sq = std::uint64_t(s - 1) * std::uint64_t(s - 1);
    if (total.is_zero() || !total.divisible_by(sn)) return {};
    BigUint k = total.divide_exact(sn);
    if (!k.divisible_by(sq)) return {};
    k = k.divide_exact(sq);
    std::string out = k.to_string();
    if (s > 2) out += "*" + std::to_string(s - 1) + "^2";
    out += "*" + std::to_string(s) + "^" + std::to_string(n);
    return out;
}

std::string factored_bicensus_total(const BigUint& total, int s) {
    const std::uint64_t d = std::uint64_t(s) * std::uint64_t(s - 1);
    if (total.is_zero() || !total.divisible_by(d)) return {};
    return std::to_string(s - 1) + "*" + std::to_string(s) + "*" +
           total.divide_exact(d).to_string();
}

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

} // namespace

std::string render_class_report(const ClassReport& r) {
    std::ostringstream out;
    out << "invariant:   " << format_key(r.invariant) << "\n"
        << "f:           " << join_ints(r.row_multiplicities) << "\n"
        << "g:           " << join_ints(r.col_multiplicities) << "\n"
        << "eta:         " << r.eta << "\n"
        << "theta:       " << r.theta << "\n"
        << "orbit_phi:   " << r.orbit_phi_size << "\n"
        << "orbit_psi:   " << r.orbit_psi_size << "\n"
        << "cardinality: " << r.cardinality.to_string() << "\n"
        << "representative:\n"
        << format_tableau(r.representative);
    return out.str();
}

std::string render_census(const CensusResult& c) {
    std::ostringstream out;
    out << "n=" << c.n << " s=" << c.s << "\n"
        << "classes/tested: " << c.representative_count << "/" << c.tested_count << "\n"
        << "total: " << c.total_cantorian.to_string();
    if (std::string f = factored_census_total(c.total_cantorian, c.n, c.s); !f.empty())
        out << " (= " << f << ")";
    out << "\n";
    return out.str();
}

namespace {

ordered_json tableau_json(const Tableau& t) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < t.n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < t.n; ++j) row.push_back(int(t.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json key_json(const InvariantKey& key) {
    ordered_json parts = ordered_json::array();
    for (const Composition& p : key.partitions) parts.push_back(p.parts);
    return parts;
}

ordered_json class_report_json(const ClassReport& r) {
    ordered_json j;
    j["representative"] = tableau_json(r.representative);
    j["invariant"] = key_json(r.invariant);
    j["f"] = r.row_multiplicities;
    j["g"] = r.col_multiplicities;
    j["eta"] = r.eta;
    j["theta"] = r.theta;
    j["orbit_phi"] = r.orbit_phi_size;
    j["orbit_psi"] = r.orbit_psi_size;
    j["cardinality"] = r.cardinality.to_string();
    return j;
}

} // namespace

std::string json_class_report(const ClassReport& r) {
    return class_report_json(r).dump();
}

std::string json_census(const CensusResult& c) {
    ordered_json j;
    j["n"] = c.n;
    j["s"] = c.s;
    j["classes"] = c.representative_count;
    j["tested"] = c.tested_count;
    j["total"] = c.total_cantorian.to_string();
    ordered_json per_class = ordered_json::array();
    for (const ClassReport& r : c.per_class) per_class.push_back(class_report_json(r));
    j["per_class"] = std::move(per_class);
    return j.dump();
}

std::string json_hypergraph(const ColoredHypergraph& h) {
    ordered_json j;
    j["n"] = h.n;
    ordered_json vertices = ordered_json::array();
    for (int i = 0; i < h.n; ++i)
        for (int jj = 0; jj < h.n; ++jj) {
            ordered_json v;
            v["i"] = i + 1;
            v["j"] = jj + 1;
            v["color"] = int(h.colors[std::size_t(i) * h.n + jj]);
            vertices.push_back(std::move(v));
        }
    j["vertices"] = std::move(vertices);
    j["row_blocks"] = h.row_blocks;
    j["diagonal_block_count"] = h.diagonal_blocks.size();
    ordered_json chi_l = ordered_json::array();
    for (const Word& w : h.chi_L) chi_l.push_back(format_word(w, h.s));
    ordered_json chi_p = ordered_json::array();
    for (const Word& w : h.chi_P) chi_p.push_back(format_word(w, h.s));
    j["chi_L"] = std::move(chi_l);
    j["chi_P"] = std::move(chi_p);
    return j.dump();
}

std::string json_envelope(const std::string& command, const std::string& inputs_json,
                          const std::string& results_json) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["inputs"] = ordered_json::parse(inputs_json);
    j["results"] = ordered_json::parse(results_json);
    return j.dump();
}

} // namespace cantorian
