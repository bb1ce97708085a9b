#include "cantorian/enumeration.hpp"
#include "cantorian/equivalence.hpp"
#include "cantorian/errors.hpp"
#include "cantorian/hypergraph.hpp"
#include "cantorian/io.hpp"
#include "cantorian/oracle.hpp"
#include "cantorian/permanent.hpp"
#include "cantorian/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using cantorian::Budgets;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct Options {
    std::string format = "plain";
    int workers = 0;
    Budgets budgets;

    bool structured() const { return format == "structured"; }
    cantorian::CensusOptions census() const {
        cantorian::CensusOptions opt;
        opt.workers = workers;
        opt.budgets = budgets;
        return opt;
    }
};

// CANTORIAN_BUDGETS="max-orbit=N,max-cells=N,time-budget=S" seeds the
// defaults; command-line flags still win.
void apply_env_budgets(Budgets& budgets) {
    const char* env = std::getenv("CANTORIAN_BUDGETS");
    if (!env) return;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw cantorian::input_error("CANTORIAN_BUDGETS: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::uint64_t value = std::stoull(item.substr(eq + 1));
        if (key == "max-orbit")
            budgets.max_orbit = value;
        else if (key == "max-cells")
            budgets.max_cells = value;
        else if (key == "time-budget")
            budgets.time_budget_s = value;
        else
            throw cantorian::input_error("CANTORIAN_BUDGETS: unknown key '" + key + "'");
    }
}

cantorian::Tableau load_tableau(const std::string& path) {
    if (path == "-") return cantorian::parse_tableau(std::cin);
    std::ifstream in(path);
    if (!in) throw cantorian::input_error("cannot open '" + path + "'");
    return cantorian::parse_tableau(in);
}

void emit(const Options& opt, const std::string& command, const ordered_json& inputs,
          const ordered_json& results, const std::string& plain) {
    if (opt.structured())
        std::cout << cantorian::json_envelope(command, inputs.dump(), results.dump()) << "\n";
    else
        std::cout << plain;
}

ordered_json tableau_inputs(const cantorian::Tableau& t) {
    ordered_json j;
    j["n"] = t.n;
    j["s"] = t.s;
    j["tableau"] = cantorian::format_tableau_inline(t);
    return j;
}

// --- subcommands -------------------------------------------------------------

int cmd_check(const Options& opt, const std::string& path, bool witness) {
    cantorian::Tableau t = load_tableau(path);
    const bool cant = cantorian::is_cantorian(t);
    const bool bicant = cant && cantorian::is_bicantorian(t);

    ordered_json results;
    results["cantorian"] = cant;
    results["bi_cantorian"] = bicant;
    std::ostringstream plain;
    plain << "cantorian: " << (cant ? "yes" : "no") << "\n"
          << "bi-cantorian: " << (bicant ? "yes" : "no") << "\n";

    if (witness && !bicant) {
        for (const cantorian::Word& w :
             cant ? t.distinct_cols() : t.distinct_rows()) {
            auto match = cantorian::permanent_witness(t, w);
            if (!match) continue;
            ordered_json rows = ordered_json::array();
            std::ostringstream perm;
            for (std::size_t j = 0; j < match->size(); ++j) {
                rows.push_back((*match)[j] + 1);
                if (j) perm << " ";
                perm << (*match)[j] + 1;
            }
            results["witness"] = ordered_json{{"word", cantorian::format_word(w, t.s)},
                                              {"rows", rows}};
            plain << "witness: word=" << cantorian::format_word(w, t.s)
                  << " rows=(" << perm.str() << ")\n";
            break;
        }
    }
    emit(opt, "check", tableau_inputs(t), results, plain.str());
    return kExitOk;
}

int cmd_permanent(const Options& opt, const std::string& path, const std::string& word_text) {
    cantorian::Tableau t = load_tableau(path);
    ordered_json inputs = tableau_inputs(t);
    if (!word_text.empty()) {
        cantorian::Word w = cantorian::parse_word(word_text, t.n, t.s);
        auto match = cantorian::permanent_witness(t, w);
        inputs["word"] = cantorian::format_word(w, t.s);
        ordered_json results;
        results["contains"] = match.has_value();
        std::ostringstream plain;
        plain << "contains: " << (match ? "yes" : "no") << "\n";
        if (match) {
            ordered_json rows = ordered_json::array();
            std::ostringstream perm;
            for (std::size_t j = 0; j < match->size(); ++j) {
                rows.push_back((*match)[j] + 1);
                if (j) perm << " ";
                perm << (*match)[j] + 1;
            }
            results["rows"] = rows;
            plain << "rows: (" << perm.str() << ")\n";
        }
        emit(opt, "permanent", inputs, results, plain.str());
        return kExitOk;
    }
    std::vector<cantorian::Word> words = cantorian::enumerate_permanent(t, opt.budgets);
    ordered_json list = ordered_json::array();
    std::ostringstream plain;
    plain << "size: " << words.size() << "\n";
    for (const cantorian::Word& w : words) {
        list.push_back(cantorian::format_word(w, t.s));
        plain << cantorian::format_word(w, t.s) << "\n";
    }
    ordered_json results;
    results["size"] = words.size();
    results["words"] = std::move(list);
    emit(opt, "permanent", inputs, results, plain.str());
    return kExitOk;
}

int cmd_reduce(const Options& opt, const std::string& path) {
    cantorian::Tableau t = load_tableau(path);
    cantorian::Tableau m = cantorian::minimal_reduced(t, opt.budgets);
    ordered_json results;
    results["already_minimal"] = m == t;
    results["reduced"] = cantorian::is_reduced(t);
    results["minimal_reduced"] = cantorian::format_tableau_inline(m);
    std::ostringstream plain;
    plain << "reduced: " << (cantorian::is_reduced(t) ? "yes" : "no") << "\n"
          << "already-minimal: " << (m == t ? "yes" : "no") << "\n"
          << cantorian::format_tableau(m);
    emit(opt, "reduce", tableau_inputs(t), results, plain.str());
    return kExitOk;
}

int cmd_classify(const Options& opt, const std::string& path) {
    cantorian::Tableau t = load_tableau(path);
    cantorian::ClassReport report = cantorian::class_cardinality(t, opt.budgets);
    emit(opt, "classify", tableau_inputs(t),
         ordered_json::parse(cantorian::json_class_report(report)),
         cantorian::render_class_report(report));
    return kExitOk;
}

int cmd_census(const Options& opt, int n, int s, bool bicantorian) {
    ordered_json inputs;
    inputs["n"] = n;
    inputs["s"] = s;
    if (bicantorian) {
        cantorian::BiCensusResult b = cantorian::count_bicantorian(n, s, opt.census());
        ordered_json results;
        results["n"] = n;
        results["s"] = s;
        results["total_bicantorian"] = b.total_bicantorian.to_string();
        std::ostringstream plain;
        plain << "n=" << n << " s=" << s << "\n"
              << "bi-cantorian total: " << b.total_bicantorian.to_string();
        if (std::string f = cantorian::factored_bicensus_total(b.total_bicantorian, s); !f.empty())
            plain << " (= " << f << ")";
        plain << "\n";
        emit(opt, "census", inputs, results, plain.str());
        return kExitOk;
    }
    cantorian::CensusResult c = cantorian::census(n, s, opt.census());
    emit(opt, "census", inputs, ordered_json::parse(cantorian::json_census(c)),
         cantorian::render_census(c));
    return kExitOk;
}

int cmd_bicensus(const Options& opt, int n, int s) { return cmd_census(opt, n, s, true); }

int cmd_bclasses(const Options& opt, int n, int s) {
    cantorian::BClassesResult r = cantorian::bicantorian_classes(n, s, opt.census());
    ordered_json inputs;
    inputs["n"] = n;
    inputs["s"] = s;
    ordered_json reps = ordered_json::array();
    std::ostringstream plain;
    plain << "n=" << n << " s=" << s << "\n"
          << "bi-cantorian tableaux: " << r.member_count << "\n"
          << "classes: " << r.representatives.size() << "\n";
    for (const cantorian::Tableau& rep : r.representatives) {
        reps.push_back(cantorian::format_tableau_inline(rep));
        plain << "  " << cantorian::format_tableau_inline(rep) << "\n";
    }
    ordered_json results;
    results["members"] = r.member_count;
    results["classes"] = r.representatives.size();
    results["representatives"] = std::move(reps);
    emit(opt, "bclasses", inputs, results, plain.str());
    return kExitOk;
}

int cmd_hypergraph(const Options& opt, const std::string& path) {
    cantorian::Tableau t = load_tableau(path);
    cantorian::ColoredHypergraph h = cantorian::build_hypergraph(t, opt.budgets);
    std::ostringstream plain;
    plain << "n: " << h.n << "\n"
          << "row blocks: " << h.row_blocks.size() << "\n"
          << "diagonal blocks: " << h.diagonal_blocks.size() << "\n"
          << "distinct chi(L): " << h.chi_L.size() << "\n"
          << "distinct chi(P): " << h.chi_P.size() << "\n"
          << "intersecting: " << (cantorian::is_intersecting(h) ? "yes" : "no") << "\n";
    emit(opt, "hypergraph", tableau_inputs(t),
         ordered_json::parse(cantorian::json_hypergraph(h)), plain.str());
    return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& level) {
    if (level != "quick" && level != "full")
        throw cantorian::input_error("verify: level must be 'quick' or 'full'");
    auto results = cantorian::run_verification(
        level == "quick" ? cantorian::VerifyLevel::quick : cantorian::VerifyLevel::full,
        opt.workers);

    ordered_json checks = ordered_json::array();
    std::ostringstream plain;
    for (const cantorian::CheckResult& r : results) {
        ordered_json j;
        j["name"] = r.name;
        j["pass"] = r.pass;
        j["required"] = r.required;
        j["detail"] = r.detail;
        checks.push_back(std::move(j));
        plain << (r.pass ? "ok   " : (r.required ? "FAIL " : "warn ")) << r.name << " ("
              << std::fixed << r.seconds << "s): " << r.detail << "\n";
    }
    const bool ok = cantorian::all_required_pass(results);
    plain << (ok ? "verification passed" : "verification FAILED") << "\n";
    ordered_json inputs;
    inputs["level"] = level;
    ordered_json envelope;
    envelope["checks"] = std::move(checks);
    envelope["pass"] = ok;
    emit(opt, "verify", inputs, envelope, plain.str());
    return ok ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of Cantorian and bi-Cantorian tableaux"};
    app.require_subcommand(1);

    Options opt;
    try {
        apply_env_budgets(opt.budgets);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"plain", "structured"}))
        ->capture_default_str();
    app.add_option("--workers", opt.workers, "worker threads (0 = auto)");
    app.add_option("--max-orbit", opt.budgets.max_orbit, "orbit materialization budget");
    app.add_option("--max-cells", opt.budgets.max_cells, "exhaustive enumeration budget");
    app.add_option("--time-budget", opt.budgets.time_budget_s,
                   "census wall-clock budget in seconds (0 = unlimited)");

    std::string path, word_text, level = "quick";
    int n = 0, s = 0;
    bool witness = false, bicantorian = false;

    CLI::App* check = app.add_subcommand("check", "Cantorian / bi-Cantorian verdicts");
    check->add_option("input", path, "tableau file, or - for stdin")->required();
    check->add_flag("--witness", witness, "print a realizing diagonal when non-Cantorian");

    CLI::App* permanent = app.add_subcommand("permanent", "permanent enumeration or membership");
    permanent->add_option("input", path)->required();
    permanent->add_option("--word", word_text, "test one word instead of enumerating");

    CLI::App* reduce = app.add_subcommand("reduce", "minimal reduced representative");
    reduce->add_option("input", path)->required();

    CLI::App* classify = app.add_subcommand("classify", "equivalence class report");
    classify->add_option("input", path)->required();

    CLI::App* census = app.add_subcommand("census", "count Cantorian classes and tableaux");
    census->add_option("n", n)->required();
    census->add_option("s", s)->required();
    census->add_flag("--bicantorian", bicantorian, "count bi-Cantorian tableaux instead");

    CLI::App* bicensus = app.add_subcommand("bicensus", "count bi-Cantorian tableaux");
    bicensus->add_option("n", n)->required();
    bicensus->add_option("s", s)->required();

    CLI::App* bclasses = app.add_subcommand("bclasses", "bi-Cantorian equivalence classes");
    bclasses->add_option("n", n)->required();
    bclasses->add_option("s", s)->required();

    CLI::App* hypergraph = app.add_subcommand("hypergraph", "colored hypergraph export");
    hypergraph->add_option("input", path)->required();

    CLI::App* verify = app.add_subcommand("verify", "run the cross-validation battery");
    verify->add_option("level", level, "quick or full")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*check) return cmd_check(opt, path, witness);
        if (*permanent) return cmd_permanent(opt, path, word_text);
        if (*reduce) return cmd_reduce(opt, path);
        if (*classify) return cmd_classify(opt, path);
        if (*census) return cmd_census(opt, n, s, bicantorian);
        if (*bicensus) return cmd_bicensus(opt, n, s);
        if (*bclasses) return cmd_bclasses(opt, n, s);
        if (*hypergraph) return cmd_hypergraph(opt, path);
        if (*verify) return cmd_verify(opt, level);
    } catch (const cantorian::budget_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const cantorian::consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const cantorian::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
