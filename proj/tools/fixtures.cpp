#include <functional>
#include <future>

#include "cli.hpp"
#include "diffrad/divisor.hpp"
#include "diffrad/fermat.hpp"
#include "diffrad/mason.hpp"
#include "diffrad/parser.hpp"
#include "diffrad/radical.hpp"

namespace diffrad::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string verdict(const CheckReport& r) {
    if (!r.holds) return "no verdict";
    if (!*r.holds) return "violated";
    return r.sharp() ? "holds (sharp)" : "holds";
}

void add_report(Observed& out, const CheckReport& r) {
    out.emplace_back("hypotheses", yes_no(r.hypotheses_pass()));
    out.emplace_back("lhs", r.lhs.get_str());
    out.emplace_back("rhs", r.rhs.get_str());
    out.emplace_back("verdict", verdict(r));
}

std::string artifact_or_empty(const CheckReport& r, std::string_view name) {
    const std::string* v = r.artifact(name);
    return v ? *v : "";
}

Observed plain_difference_radical() {
    const auto t = default_tower();
    const FieldElement kappa(1L);
    const Polynomial p = parse_poly("z^2*(z-1)*(z-2)^3", t);
    const FactoredPoly f = parse_factored("1; (0, 2), (1, 1), (2, 3)", t);
    Observed out;
    const RadicalResult gcd_path = diff_radical(p, kappa);
    const RadicalResult root_path = diff_radical_from_roots(f, kappa, 2);
    out.emplace_back("radical", print_poly(gcd_path.radical));
    out.emplace_back("n_tilde", std::to_string(gcd_path.n_tilde));
    out.emplace_back("oracle_agrees", yes_no(gcd_path.radical == root_path.radical));
    std::string exps;
    for (const auto& [w, d] : radical_exponents(f, kappa, 2)) {
        exps += (exps.empty() ? "" : ",") + to_string(w) + ":" + std::to_string(d);
    }
    out.emplace_back("exponents", exps);
    const Divisor d = divisor_of(f);
    std::string counts;
    for (long r = 1; r <= 3; ++r) counts += (r > 1 ? "," : "") + std::to_string(n_tilde_q(d, kappa, 1, r));
    out.emplace_back("n_tilde_at_r_1_2_3", counts);
    return out;
}

Observed triple_two_term_roots() {
    const auto t = default_tower();
    const CheckReport r = check_mason_triple(parse_poly("z*(z+1)", t), parse_poly("-(z+2)*(z+3)", t),
                                             parse_poly("-4*z-6", t), FieldElement(1L));
    Observed out;
    add_report(out, r);
    out.emplace_back("n_tilde", artifact_or_empty(r, "n_tilde"));
    return out;
}

Observed triple_cube_roots_of_unity() {
    const auto t = default_tower();
    const std::string nu = "((1+sqrt(3)*i)/2)";
    const std::string A = "(i/(4*sqrt(3)))";
    const std::string alpha = "(1-" + nu + ")";
    const Polynomial a = parse_poly(A + "*(z+" + alpha + ")^2*(z+" + alpha + "+1)^2", t);
    const Polynomial b = parse_poly("-" + A + "*(z+" + nu + ")^2*(z+" + nu + "+1)^2", t);
    const Polynomial c = parse_poly("z*(z+1)*(z+2)", t);
    Observed out;
    out.emplace_back("a_plus_b", print_poly(a + b));
    const CheckReport r = check_mason_triple(a, b, c, FieldElement(1L));
    add_report(out, r);
    out.emplace_back("n_tilde", artifact_or_empty(r, "n_tilde"));
    return out;
}

Observed quadruple_constant_sum() {
    const auto t = default_tower();
    std::vector<Polynomial> as;
    for (const char* s : {"(z^2-4)*((z+1)^2-4)", "(z^2+4)*((z+1)^2+4)", "-2*z^2*(z+1)^2"}) as.push_back(parse_poly(s, t));
    Observed out;
    out.emplace_back("a4", print_poly(as[0] + as[1] + as[2]));
    as.push_back(as[0] + as[1] + as[2]);
    const CheckReport r = check_mason_multi(as, FieldElement(1L));
    add_report(out, r);
    out.emplace_back("n_tilde_order_m", artifact_or_empty(r, "n_tilde_order_m"));
    out.emplace_back("n_tilde_single", artifact_or_empty(r, "n_tilde_single"));
    out.emplace_back("single_step_bound", artifact_or_empty(r, "radical_bound"));
    out.emplace_back("single_step_bound_holds", artifact_or_empty(r, "radical_bound_holds"));
    return out;
}

Observed quadruple_complex_shifts() {
    const auto t = default_tower();
    const std::string alpha = "(i/(2*sqrt(2)))", A = "(2-sqrt(2)*i)";
    const std::string beta = "(-i/(2*sqrt(2)))", B = "(2+sqrt(2)*i)";
    std::vector<Polynomial> as{
        parse_poly(A + "*(z+" + alpha + ")*(z+" + alpha + "+1)*(z+" + alpha + "+2)^2", t),
        parse_poly(B + "*(z+" + beta + ")*(z+" + beta + "+1)*(z+" + beta + "+2)^2", t),
        parse_poly("-(" + A + "+" + B + ")*z*(z+1)*(z+2)*(z+3)", t),
    };
    Observed out;
    out.emplace_back("a4", print_poly(as[0] + as[1] + as[2]));
    as.push_back(as[0] + as[1] + as[2]);
    const CheckReport r = check_mason_multi(as, FieldElement(1L));
    add_report(out, r);
    out.emplace_back("n_tilde_order_m", artifact_or_empty(r, "n_tilde_order_m"));
    return out;
}

Observed fermat_degree_two() {
    const auto t = default_tower();
    FermatInstance inst;
    inst.ps = {parse_poly("z^2", t), parse_poly("-i/2*(sqrt(2)*z^2+2*z-sqrt(2))", t),
               parse_poly("-1/2*(sqrt(2)*z^2-2*z-sqrt(2))", t)};
    inst.n = 2;
    inst.form = FermatForm::Xyz;
    Observed out;
    const CheckReport xyz = check_fermat_theorem(inst, Coprimality::Pairwise);
    out.emplace_back("equation_holds", yes_no(xyz.hypotheses.at(0).pass));
    out.emplace_back("pairwise_coprime", yes_no(xyz.hypotheses.at(1).pass));
    out.emplace_back("xyz_verdict", verdict(xyz));
    inst.form = FermatForm::SumEqFactorial;
    const CheckReport sum = check_fermat_theorem(inst, Coprimality::Pairwise);
    out.emplace_back("bound", artifact_or_empty(sum, "bound"));
    out.emplace_back("integer_bound", artifact_or_empty(sum, "integer_bound"));
    out.emplace_back("verdict", verdict(sum));
    return out;
}

struct Fixture {
    const char* name;
    Observed (*compute)();
};

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all{
        {"difference-radical", plain_difference_radical},
        {"mason-triple-sharp", triple_two_term_roots},
        {"mason-triple-cube-roots", triple_cube_roots_of_unity},
        {"mason-multi-constant-sum", quadruple_constant_sum},
        {"mason-multi-complex-shifts", quadruple_complex_shifts},
        {"fermat-degree-two", fermat_degree_two},
    };
    return all;
}

FixtureResult evaluate_fixture(const Fixture& fx, const Expected& expected) {
    FixtureResult res;
    res.name = fx.name;
    try {
        res.observed = fx.compute();
    } catch (const std::exception& e) {
        res.mismatches.push_back(std::string("error: ") + e.what());
        return res;
    }
    auto it = expected.find(res.name);
    if (it == expected.end()) {
        res.mismatches.push_back("no expected values");
        return res;
    }
    for (const auto& [key, want] : it->second) {
        std::string got = "<missing>";
        for (const auto& [k, v] : res.observed) {
            if (k == key) got = v;
        }
        if (got != want) res.mismatches.push_back(key + ": expected " + want + ", got " + got);
    }
    return res;
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& fx : fixtures()) names.emplace_back(fx.name);
    return names;
}

Expected expected_fixture_values() {
    return {
        {"difference-radical",
         {{"radical", "z^4 - 6*z^3 + 12*z^2 - 8*z"},
          {"n_tilde", "4"},
          {"oracle_agrees", "yes"},
          {"exponents", "0:1,1:0,2:3"},
          {"n_tilde_at_r_1_2_3", "1,4,4"}}},
        {"mason-triple-sharp",
         {{"hypotheses", "yes"}, {"lhs", "2"}, {"rhs", "2"}, {"verdict", "holds (sharp)"}, {"n_tilde", "1,1,1"}}},
        {"mason-triple-cube-roots",
         {{"a_plus_b", "z^3 + 3*z^2 + 2*z"},
          {"hypotheses", "yes"},
          {"lhs", "4"},
          {"rhs", "4"},
          {"verdict", "holds (sharp)"},
          {"n_tilde", "2,2,1"}}},
        {"mason-multi-constant-sum",
         {{"a4", "32"},
          {"hypotheses", "yes"},
          {"lhs", "4"},
          {"rhs", "9"},
          {"verdict", "holds"},
          {"n_tilde_order_m", "4,4,4,0"},
          {"n_tilde_single", "2,2,2,0"},
          {"single_step_bound", "3"},
          {"single_step_bound_holds", "no"}}},
        {"mason-multi-complex-shifts",
         {{"a4", "-9/16"},
          {"hypotheses", "yes"},
          {"lhs", "4"},
          {"rhs", "5"},
          {"verdict", "holds"},
          {"n_tilde_order_m", "3,3,2,0"}}},
        {"fermat-degree-two",
         {{"equation_holds", "yes"},
          {"pairwise_coprime", "yes"},
          {"xyz_verdict", "holds (sharp)"},
          {"bound", "5/2"},
          {"integer_bound", "2"},
          {"verdict", "holds"}}},
    };
}

std::vector<FixtureResult> run_fixtures(const Expected& expected, long jobs) {
    const auto& all = fixtures();
    std::vector<FixtureResult> results(all.size());
    if (jobs <= 1) {
        for (std::size_t k = 0; k < all.size(); ++k) results[k] = evaluate_fixture(all[k], expected);
        return results;
    }
    for (std::size_t start = 0; start < all.size(); start += static_cast<std::size_t>(jobs)) {
        std::vector<std::future<FixtureResult>> batch;
        const std::size_t end = std::min(all.size(), start + static_cast<std::size_t>(jobs));
        for (std::size_t k = start; k < end; ++k) {
            batch.push_back(std::async(std::launch::async, evaluate_fixture, std::cref(all[k]), std::cref(expected)));
        }
        for (std::size_t k = start; k < end; ++k) results[k] = batch[k - start].get();
    }
    return results;
}

}  // namespace diffrad::cli
