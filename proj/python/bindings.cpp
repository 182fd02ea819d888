#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diffrad/divisor.hpp"
#include "diffrad/error.hpp"
#include "diffrad/fermat.hpp"
#include "diffrad/mason.hpp"
#include "diffrad/parser.hpp"
#include "diffrad/radical.hpp"
#include "diffrad/report.hpp"

namespace py = pybind11;
using namespace diffrad;

namespace {

using Adjoin = std::vector<long>;

TowerPtr tower_for(const Adjoin& adjoin) {
    TowerPtr t = default_tower();
    for (long d : adjoin) t = adjoin_sqrt(t, FieldElement(d));
    return t;
}

FieldElement constant(const std::string& text, const TowerPtr& t) { return parse_constant(text, t); }

std::vector<Polynomial> polys(const std::vector<std::string>& texts, const TowerPtr& t) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& s : texts) out.push_back(parse_poly(s, t));
    return out;
}

Coprimality coprimality(const std::string& mode) {
    if (mode == "pairwise") return Coprimality::Pairwise;
    if (mode == "setwise") return Coprimality::Setwise;
    throw Error(ErrorCode::InvalidArgument, "coprimality must be 'pairwise' or 'setwise'");
}

Divisor divisor(const std::vector<std::pair<std::string, long>>& points, const TowerPtr& t) {
    Divisor d;
    for (const auto& [w, m] : points) d.add(parse_constant(w, t), m);
    return d;
}

std::vector<Rational> radii(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& r : texts) {
        Rational q;
        try {
            q = Rational(r);
        } catch (const std::invalid_argument&) {
            throw Error(ErrorCode::InvalidArgument, "radius '" + r + "' is not a rational number");
        }
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

py::dict radical_dict(const RadicalResult& r) {
    py::dict d;
    d["radical"] = print_poly(r.radical);
    d["cofactor"] = print_poly(r.cofactor);
    d["n_tilde"] = r.n_tilde;
    d["leading"] = to_string(r.leading);
    return d;
}

}  // namespace

PYBIND11_MODULE(diffrad, m) {
    m.doc() = "Exact difference radicals, difference Mason inequalities and Fermat-type checks";

    // Raised with `.code` (the error code name); parse errors also carry `.position` and `.expected`.
    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&]() { return py::exception<Error>(m, "DiffradError", PyExc_ValueError); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const py::object& type = error_type.get_stored();
            py::object exc = type(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
                exc.attr("position") = pe->position();
                exc.attr("expected") = pe->expected();
            }
            PyErr_SetObject(type.ptr(), exc.ptr());
        }
    });

    py::class_<CheckReport>(m, "Report")
        .def_property_readonly("statement", [](const CheckReport& r) { return std::string(to_string(r.statement)); })
        .def_property_readonly("hypotheses",
                               [](const CheckReport& r) {
                                   py::list out;
                                   for (const auto& h : r.hypotheses) out.append(py::make_tuple(h.name, h.pass, h.detail));
                                   return out;
                               })
        .def_property_readonly("lhs", [](const CheckReport& r) { return r.lhs.get_str(); })
        .def_property_readonly("rhs", [](const CheckReport& r) { return r.rhs.get_str(); })
        .def_readonly("holds", &CheckReport::holds)
        .def_property_readonly("sharp", &CheckReport::sharp)
        .def_property_readonly("hypotheses_pass", &CheckReport::hypotheses_pass)
        .def_readonly("counts", &CheckReport::counts)
        .def_property_readonly("artifacts",
                               [](const CheckReport& r) {
                                   py::dict out;
                                   for (const auto& [k, v] : r.artifacts) out[py::str(k)] = v;
                                   return out;
                               })
        .def_property_readonly("entries",
                               [](const CheckReport& r) {
                                   py::list out;
                                   for (const auto& e : r.entries) {
                                       out.append(py::make_tuple(e.label, entry_value(e, e.lhs), entry_value(e, e.rhs),
                                                                 e.holds, e.detail));
                                   }
                                   return out;
                               })
        .def_property_readonly("exit_code", [](const CheckReport& r) { return exit_code(r); })
        .def("__str__", [](const CheckReport& r) { return format_report(r); });

    m.def(
        "radical",
        [](const std::string& expr, const std::string& kappa, long order, const Adjoin& adjoin) {
            const TowerPtr t = tower_for(adjoin);
            return radical_dict(diff_radical_m(parse_poly(expr, t), constant(kappa, t), order));
        },
        py::arg("expr"), py::arg("kappa") = "1", py::arg("m") = 2, py::arg("adjoin") = Adjoin{},
        "Difference radical of order m (m = 2 is the single-step radical).");

    m.def(
        "radical_from_roots",
        [](const std::string& factored, const std::string& kappa, long order, const Adjoin& adjoin) {
            const TowerPtr t = tower_for(adjoin);
            return radical_dict(diff_radical_from_roots(parse_factored(factored, t), constant(kappa, t), order));
        },
        py::arg("factored"), py::arg("kappa") = "1", py::arg("m") = 2, py::arg("adjoin") = Adjoin{},
        "Root-based radical of a factored polynomial 'gamma ; (root, mult), ...'.");

    m.def(
        "classical_radical",
        [](const std::string& expr, const Adjoin& adjoin) {
            return radical_dict(classical_radical(parse_poly(expr, tower_for(adjoin))));
        },
        py::arg("expr"), py::arg("adjoin") = Adjoin{});

    m.def(
        "normalize",
        [](const std::string& expr, const Adjoin& adjoin) { return print_poly(parse_poly(expr, tower_for(adjoin))); },
        py::arg("expr"), py::arg("adjoin") = Adjoin{}, "Parse and print in canonical form.");

    m.def(
        "casoratian",
        [](const std::vector<std::string>& ps, const std::string& kappa, const Adjoin& adjoin) {
            const TowerPtr t = tower_for(adjoin);
            return print_poly(casoratian(polys(ps, t), constant(kappa, t)));
        },
        py::arg("polys"), py::arg("kappa") = "1", py::arg("adjoin") = Adjoin{});

    m.def(
        "check_mason",
        [](const std::vector<std::string>& ps, const std::string& kappa, const std::string& mode, bool multi,
           const Adjoin& adjoin) {
            const TowerPtr t = tower_for(adjoin);
            const auto as = polys(ps, t);
            const FieldElement k = constant(kappa, t);
            if (as.size() == 3 && !multi) return check_mason_triple(as[0], as[1], as[2], k);
            return check_mason_multi(as, k, coprimality(mode));
        },
        py::arg("polys"), py::arg("kappa") = "1", py::arg("coprimality") = "setwise", py::arg("multi") = false,
        py::arg("adjoin") = Adjoin{}, "Three inputs a, b, c check a + b = c; more inputs use the m-term form.");

    m.def(
        "factorial_poly",
        [](const std::string& expr, const std::string& kappa, long n, const Adjoin& adjoin) {
            const TowerPtr t = tower_for(adjoin);
            return print_poly(factorial_poly(parse_poly(expr, t), constant(kappa, t), n));
        },
        py::arg("expr"), py::arg("kappa") = "1", py::arg("n") = 1, py::arg("adjoin") = Adjoin{});

    m.def(
        "check_fermat",
        [](const std::vector<std::string>& ps, long n, const std::string& form, const std::string& kappa,
           const std::string& mode, const Adjoin& adjoin) {
            const TowerPtr t = tower_for(adjoin);
            FermatInstance inst;
            inst.ps = polys(ps, t);
            inst.kappa = constant(kappa, t);
            inst.n = n;
            inst.form = parse_fermat_form(form);
            return check_fermat_theorem(inst, coprimality(mode));
        },
        py::arg("polys"), py::arg("n") = 1, py::arg("form") = "xyz", py::arg("kappa") = "1",
        py::arg("coprimality") = "setwise", py::arg("adjoin") = Adjoin{});

    m.def(
        "fermat_bound",
        [](const std::string& form, long terms, long max_deg, bool has_constant) {
            const FermatBound b = fermat_bound(parse_fermat_form(form), terms, max_deg, has_constant);
            return py::make_tuple(b.bound.get_str(), b.integer_bound);
        },
        py::arg("form"), py::arg("m"), py::arg("max_deg"), py::arg("has_constant") = false,
        "Returns (rational bound as text, largest admissible integer n).");

    m.def(
        "n_count",
        [](const std::vector<std::pair<std::string, long>>& points, const std::string& r, const Adjoin& adjoin) {
            return n_count(divisor(points, tower_for(adjoin)), radii({r})[0]);
        },
        py::arg("points"), py::arg("r"), py::arg("adjoin") = Adjoin{});

    m.def(
        "n_tilde_q",
        [](const std::vector<std::pair<std::string, long>>& points, const std::string& kappa, long q,
           const std::string& r, const Adjoin& adjoin) {
            const TowerPtr t = tower_for(adjoin);
            return n_tilde_q(divisor(points, t), constant(kappa, t), q, radii({r})[0]);
        },
        py::arg("points"), py::arg("kappa"), py::arg("q"), py::arg("r"), py::arg("adjoin") = Adjoin{});

    m.def(
        "N_integrated",
        [](const std::vector<std::pair<std::string, long>>& points, const std::string& r, const Adjoin& adjoin) {
            const CountingValue v = N_integrated(divisor(points, tower_for(adjoin)), radii({r})[0]);
            return py::make_tuple(v.N_value, v.error_bound);
        },
        py::arg("points"), py::arg("r"), py::arg("adjoin") = Adjoin{}, "Returns (value, absolute error bound).");

    m.def(
        "check_truncation",
        [](const std::vector<std::pair<std::string, long>>& points, const std::string& kappa, long q, long n,
           const std::vector<std::string>& rs, const Adjoin& adjoin) {
            const TowerPtr t = tower_for(adjoin);
            const auto rr = radii(rs);
            return check_truncation(divisor(points, t), constant(kappa, t), q, n, rr);
        },
        py::arg("points"), py::arg("kappa") = "1", py::arg("q") = 1, py::arg("n") = 1,
        py::arg("radii") = std::vector<std::string>{"1", "2", "3"}, py::arg("adjoin") = Adjoin{});

    m.def(
        "check_ord_inequality",
        [](const std::vector<std::string>& factored, const std::string& kappa, const std::vector<std::string>& rs,
           const Adjoin& adjoin) {
            const TowerPtr t = tower_for(adjoin);
            std::vector<FactoredPoly> gs;
            for (const auto& f : factored) gs.push_back(parse_factored(f, t));
            const auto rr = radii(rs);
            return check_ord_inequality(gs, constant(kappa, t), rr);
        },
        py::arg("factored"), py::arg("kappa") = "1", py::arg("radii") = std::vector<std::string>{},
        py::arg("adjoin") = Adjoin{});
}
