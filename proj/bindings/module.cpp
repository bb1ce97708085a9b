#include "cantorian/enumeration.hpp"
#include "cantorian/equivalence.hpp"
#include "cantorian/errors.hpp"
#include "cantorian/hypergraph.hpp"
#include "cantorian/io.hpp"
#include "cantorian/oracle.hpp"
#include "cantorian/permanent.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cantorian;

namespace {

py::int_ to_py_int(const BigUint& v) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(v.to_string()));
}

std::vector<std::vector<int>> tableau_rows(const Tableau& t) {
    std::vector<std::vector<int>> rows(std::size_t(t.n), std::vector<int>(std::size_t(t.n)));
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j) rows[std::size_t(i)][std::size_t(j)] = t.at(i, j);
    return rows;
}

Word to_word(const std::vector<int>& letters) {
    Word w;
    for (int v : letters) w.push_back(Letter(v));
    return w;
}

std::vector<std::vector<int>> key_parts(const InvariantKey& key) {
    std::vector<std::vector<int>> out;
    for (const Composition& p : key.partitions) out.push_back(p.parts);
    return out;
}

py::dict report_dict(const ClassReport& r) {
    py::dict d;
    d["representative"] = tableau_rows(r.representative);
    d["invariant"] = key_parts(r.invariant);
    d["f"] = r.row_multiplicities;
    d["g"] = r.col_multiplicities;
    d["eta"] = r.eta;
    d["theta"] = r.theta;
    d["orbit_phi"] = r.orbit_phi_size;
    d["orbit_psi"] = r.orbit_psi_size;
    d["cardinality"] = to_py_int(r.cardinality);
    return d;
}

CensusOptions options_for(int workers) {
    CensusOptions opt;
    opt.workers = workers;
    return opt;
}

} // namespace

PYBIND11_MODULE(_cantorian, m) {
    m.doc() = "exact enumeration of Cantorian and bi-Cantorian tableaux";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<Tableau>(m, "Tableau")
        .def(py::init([](const std::vector<std::vector<int>>& rows, int s) {
                 return Tableau::from_rows(rows, s);
             }),
             py::arg("rows"), py::arg("s"))
        .def_readonly("n", &Tableau::n)
        .def_readonly("s", &Tableau::s)
        .def("rows", &tableau_rows)
        .def("row_word", [](const Tableau& t, int i) { return t.row_word(i); })
        .def("col_word", [](const Tableau& t, int j) { return t.col_word(j); })
        .def("__eq__", [](const Tableau& a, const Tableau& b) { return a == b; })
        .def("__repr__", [](const Tableau& t) {
            return "Tableau(" + format_tableau_inline(t) + ", s=" + std::to_string(t.s) + ")";
        });

    m.def(
        "parikh_word",
        [](const std::vector<int>& w, int s) { return parikh_word(to_word(w), s).parts; },
        py::arg("word"), py::arg("s"));
    m.def("parikh_tableau", [](const Tableau& t) {
        std::vector<std::vector<int>> out;
        for (const Composition& p : parikh_tableau(t)) out.push_back(p.parts);
        return out;
    });
    m.def("class_invariant", [](const Tableau& t) { return key_parts(class_invariant(t)); });

    m.def(
        "cmp_composition",
        [](const std::vector<int>& a, const std::vector<int>& b) {
            return cmp_composition(Composition(a), Composition(b));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "cmp_word",
        [](const std::vector<int>& a, const std::vector<int>& b, int s) {
            return cmp_word(to_word(a), to_word(b), s);
        },
        py::arg("a"), py::arg("b"), py::arg("s"));
    m.def("cmp_tableau", &cmp_tableau, py::arg("a"), py::arg("b"));

    m.def(
        "permanent_contains",
        [](const Tableau& t, const std::vector<int>& w) {
            return permanent_contains(t, to_word(w));
        },
        py::arg("tableau"), py::arg("word"));
    m.def("enumerate_permanent", [](const Tableau& t) {
        std::vector<std::vector<int>> out;
        for (const Word& w : enumerate_permanent(t)) out.emplace_back(w.begin(), w.end());
        return out;
    });
    m.def("is_cantorian", &is_cantorian);
    m.def("is_bicantorian", &is_bicantorian);

    m.def("is_reduced", &is_reduced);
    m.def("minimal_reduced", [](const Tableau& t) { return minimal_reduced(t); });
    m.def("class_cardinality", [](const Tableau& t) { return report_dict(class_cardinality(t)); });
    m.def("class_cardinality_oracle",
          [](const Tableau& t) { return to_py_int(class_cardinality_oracle(t)); });
    m.def(
        "class_cardinality_at",
        [](const Tableau& t, int s) { return report_dict(class_cardinality_at(t, s)); },
        py::arg("tableau"), py::arg("s"));

    m.def(
        "census",
        [](int n, int s, int workers, bool per_class) {
            CensusResult c = census(n, s, options_for(workers));
            py::dict d;
            d["n"] = c.n;
            d["s"] = c.s;
            d["classes"] = c.representative_count;
            d["tested"] = c.tested_count;
            d["total"] = to_py_int(c.total_cantorian);
            if (per_class) {
                py::list reports;
                for (const ClassReport& r : c.per_class) reports.append(report_dict(r));
                d["per_class"] = reports;
            }
            return d;
        },
        py::arg("n"), py::arg("s"), py::arg("workers") = 0, py::arg("per_class") = false);
    m.def(
        "count_cantorian",
        [](int n, int s, int workers) {
            return to_py_int(count_cantorian(n, s, options_for(workers)));
        },
        py::arg("n"), py::arg("s"), py::arg("workers") = 0);
    m.def(
        "closed_form_C", [](int n, int s) { return to_py_int(closed_form_C(n, s)); },
        py::arg("n"), py::arg("s"));
    m.def(
        "count_c_n_p", [](int n, int p) { return to_py_int(count_c_n_p(n, p)); }, py::arg("n"),
        py::arg("p"));
    m.def(
        "count_bicantorian",
        [](int n, int s, int workers) {
            return to_py_int(count_bicantorian(n, s, options_for(workers)).total_bicantorian);
        },
        py::arg("n"), py::arg("s"), py::arg("workers") = 0);
    m.def(
        "bicantorian_classes",
        [](int n, int s, int workers) {
            BClassesResult r = bicantorian_classes(n, s, options_for(workers));
            py::dict d;
            d["members"] = r.member_count;
            d["classes"] = r.representatives.size();
            py::list reps;
            for (const Tableau& rep : r.representatives) reps.append(tableau_rows(rep));
            d["representatives"] = reps;
            return d;
        },
        py::arg("n"), py::arg("s"), py::arg("workers") = 0);
    m.def(
        "ratio_b_over_c",
        [](int n, int s) {
            Ratio r = ratio_b_over_c(n, s);
            return py::make_tuple(to_py_int(r.numerator), to_py_int(r.denominator), r.decimal);
        },
        py::arg("n"), py::arg("s"));

    m.def("count_K", &count_K, py::arg("s"));
    m.def("psi", [](const Tableau& b) {
        CycleColoring k = psi_bijection(b);
        return py::make_tuple(int(k.colors[0]), int(k.colors[1]), int(k.colors[2]),
                              int(k.colors[3]));
    });
    m.def(
        "psi_inverse",
        [](const std::vector<int>& colors, int s) {
            if (colors.size() != 4) throw input_error("psi_inverse: need 4 colors");
            CycleColoring k{{Letter(colors[0]), Letter(colors[1]), Letter(colors[2]),
                             Letter(colors[3])}};
            return psi_inverse(k, s);
        },
        py::arg("colors"), py::arg("s"));
    m.def("hypergraph_json", [](const Tableau& t) { return json_hypergraph(build_hypergraph(t)); });

    auto oracle_mod = m.def_submodule("oracle", "brute-force reference implementations");
    oracle_mod.def("count_cantorian",
                   [](int n, int s) { return oracle::count_cantorian(n, s); });
    oracle_mod.def("count_bicantorian",
                   [](int n, int s) { return oracle::count_bicantorian(n, s); });
    oracle_mod.def("class_closure_size", [](const Tableau& t) {
        return oracle::class_closure(t).size();
    });
}
