#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "diffrad/divisor.hpp"
#include "diffrad/error.hpp"
#include "diffrad/fermat.hpp"
#include "diffrad/mason.hpp"
#include "diffrad/parser.hpp"
#include "diffrad/radical.hpp"

namespace diffrad::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Session {
    TowerPtr tower;
    FieldElement kappa;
    std::string kappa_text = "1";
    bool json = false;
    std::uint64_t seed = 1;
    Coprimality coprimality = Coprimality::Setwise;
    long jobs = 1;
};

struct Options {
    std::string kappa = "1";
    std::vector<long> adjoin;
    bool json = false;
    std::uint64_t seed = 1;
    std::string coprimality = "setwise";
    long jobs = 1;
};

Session make_session(const Options& o) {
    Session s;
    s.tower = default_tower();
    for (long d : o.adjoin) s.tower = adjoin_sqrt(s.tower, FieldElement(d));
    s.kappa = parse_constant(o.kappa, s.tower);
    if (s.kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "--kappa must be nonzero");
    s.kappa_text = to_string(s.kappa);
    s.json = o.json;
    s.seed = o.seed;
    if (o.coprimality == "pairwise") {
        s.coprimality = Coprimality::Pairwise;
    } else if (o.coprimality == "setwise") {
        s.coprimality = Coprimality::Setwise;
    } else {
        throw Error(ErrorCode::InvalidArgument, "--coprimality must be pairwise or setwise");
    }
    s.jobs = std::max(1L, o.jobs);
    return s;
}

ordered_json session_json(const Session& s) {
    return {{"tower", s.tower->describe()},
            {"kappa", s.kappa_text},
            {"coprimality", std::string(to_string(s.coprimality))},
            {"seed", s.seed}};
}

ordered_json report_json(const std::string& command, const Session& s, const CheckReport& r) {
    ordered_json j;
    j["command"] = command;
    j["session"] = session_json(s);
    j["statement"] = std::string(to_string(r.statement));
    j["hypotheses"] = ordered_json::array();
    for (const auto& h : r.hypotheses) j["hypotheses"].push_back({{"name", h.name}, {"pass", h.pass}, {"detail", h.detail}});
    if (r.holds) {
        j["lhs"] = r.lhs.get_str();
        j["rhs"] = r.rhs.get_str();
        j["holds"] = *r.holds;
    } else {
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["holds"] = nullptr;
    }
    j["artifacts"] = ordered_json::object();
    for (const auto& [k, v] : r.artifacts) j["artifacts"][k] = v;
    j["entries"] = ordered_json::array();
    for (const auto& e : r.entries) {
        j["entries"].push_back({{"label", e.label},
                                {"lhs", entry_value(e, e.lhs)},
                                {"rhs", entry_value(e, e.rhs)},
                                {"holds", e.holds},
                                {"detail", e.detail}});
    }
    j["counts"] = r.counts;
    return j;
}

// Report-less commands still emit the common top-level keys.
ordered_json plain_json(const std::string& command, const Session& s, const Observed& artifacts,
                        std::optional<bool> holds = std::nullopt) {
    ordered_json j;
    j["command"] = command;
    j["session"] = session_json(s);
    j["hypotheses"] = ordered_json::array();
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    if (holds) {
        j["holds"] = *holds;
    } else {
        j["holds"] = nullptr;
    }
    j["artifacts"] = ordered_json::object();
    for (const auto& [k, v] : artifacts) j["artifacts"][k] = v;
    return j;
}

int emit_report(const std::string& command, const Session& s, const CheckReport& r, std::ostream& out) {
    if (s.json) {
        out << report_json(command, s, r).dump(2) << '\n';
    } else {
        out << "tower: " << s.tower->describe() << ", kappa = " << s.kappa_text << '\n' << format_report(r);
    }
    return exit_code(r);
}

std::vector<Polynomial> read_polys(const std::vector<std::string>& exprs, const std::string& file, const Session& s) {
    std::vector<std::string> lines = exprs;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + file);
        for (auto& line : read_object_lines(in)) lines.push_back(std::move(line));
    }
    std::vector<Polynomial> ps;
    for (const auto& e : lines) ps.push_back(parse_poly(e, s.tower));
    return ps;
}

std::vector<Rational> parse_radii(const std::string& text, const Session& s) {
    std::vector<Rational> radii;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const FieldElement v = parse_constant(item, s.tower);
        auto q = v.as_rational();
        if (!q || sgn(*q) < 0) throw Error(ErrorCode::InvalidArgument, "radius '" + item + "' is not a non-negative rational");
        radii.push_back(*q);
    }
    if (radii.empty()) throw Error(ErrorCode::InvalidArgument, "--radii needs at least one value");
    return radii;
}

// --- radical ------------------------------------------------------------------------------

struct RadicalArgs {
    std::string expr;
    std::string factored;
    long m = 0;
    bool classical = false;
    bool oracle = false;
};

int cmd_radical(const Session& s, const RadicalArgs& a, std::ostream& out) {
    if (a.expr.empty() == a.factored.empty()) {
        throw Error(ErrorCode::InvalidArgument, "give exactly one of EXPR or --factored");
    }
    if (a.oracle && a.factored.empty()) throw Error(ErrorCode::InvalidArgument, "--oracle needs --factored input");
    std::optional<FactoredPoly> f;
    Polynomial p;
    if (!a.factored.empty()) {
        f = parse_factored(a.factored, s.tower);
        p = expand(*f);
    } else {
        p = parse_poly(a.expr, s.tower);
    }
    const long m = a.m == 0 ? 2 : a.m;
    Observed obs;
    obs.emplace_back("input", print_poly(p));
    const RadicalResult single = diff_radical(p, s.kappa);
    obs.emplace_back("radical", print_poly(single.radical));
    obs.emplace_back("cofactor", print_poly(single.cofactor));
    obs.emplace_back("leading", to_string(single.leading));
    obs.emplace_back("n_tilde", std::to_string(single.n_tilde));
    if (a.m != 0) {
        const RadicalResult rm = diff_radical_m(p, s.kappa, m);
        const std::string tag = "[m=" + std::to_string(m) + "]";
        obs.emplace_back("radical" + tag, print_poly(rm.radical));
        obs.emplace_back("cofactor" + tag, print_poly(rm.cofactor));
        obs.emplace_back("n_tilde" + tag, std::to_string(rm.n_tilde));
    }
    if (a.classical) {
        const RadicalResult c = classical_radical(p);
        obs.emplace_back("classical_radical", print_poly(c.radical));
        obs.emplace_back("distinct_roots", std::to_string(c.n_tilde));
    }
    std::optional<bool> agrees;
    if (a.oracle) {
        const RadicalResult via_gcd = m == 2 ? single : diff_radical_m(p, s.kappa, m);
        const RadicalResult via_roots = diff_radical_from_roots(*f, s.kappa, m);
        agrees = via_gcd.radical == via_roots.radical && via_gcd.cofactor == via_roots.cofactor;
        obs.emplace_back("oracle_radical", print_poly(via_roots.radical));
        obs.emplace_back("oracle_agrees", *agrees ? "yes" : "no");
    }
    if (s.json) {
        out << plain_json("radical", s, obs, agrees).dump(2) << '\n';
    } else {
        out << "tower: " << s.tower->describe() << ", kappa = " << s.kappa_text << '\n';
        for (const auto& [k, v] : obs) out << k << ": " << v << '\n';
    }
    return agrees.value_or(true) ? kVerified : kViolation;
}

// --- mason / fermat --------------------------------------------------------------------------

int cmd_mason(const Session& s, const std::vector<std::string>& exprs, const std::string& file, bool multi,
              std::ostream& out) {
    const auto ps = read_polys(exprs, file, s);
    if (ps.size() < 3) throw Error(ErrorCode::BadArity, "mason needs at least 3 polynomials");
    if (!multi && ps.size() == 3) return emit_report("mason", s, check_mason_triple(ps[0], ps[1], ps[2], s.kappa), out);
    return emit_report("mason", s, check_mason_multi(ps, s.kappa, s.coprimality), out);
}

int cmd_fermat(const Session& s, const std::vector<std::string>& exprs, const std::string& file, long n,
               const std::string& form, std::ostream& out) {
    FermatInstance inst;
    inst.ps = read_polys(exprs, file, s);
    inst.kappa = s.kappa;
    inst.n = n;
    inst.form = parse_fermat_form(form);
    return emit_report("fermat", s, check_fermat_theorem(inst, s.coprimality), out);
}

// --- divisor --------------------------------------------------------------------------------

struct DivisorArgs {
    std::string file;
    std::vector<std::string> factored;
    long q = 1;
    long n = 1;
    std::string radii = "1,2,3";
    bool truncation = false;
    bool ord = false;
};

std::string fixed(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(9) << x;
    return os.str();
}

int cmd_divisor(const Session& s, const DivisorArgs& a, std::ostream& out) {
    const auto radii = parse_radii(a.radii, s);
    std::vector<FactoredPoly> fs;
    for (const auto& text : a.factored) fs.push_back(parse_factored(text, s.tower));
    if (a.ord) {
        if (fs.size() < 2) throw Error(ErrorCode::InvalidArgument, "--ord needs at least two --factored inputs");
        return emit_report("divisor", s, check_ord_inequality(fs, s.kappa, radii), out);
    }
    Divisor d;
    if (!a.file.empty()) {
        std::ifstream in(a.file);
        if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + a.file);
        d = read_divisor(in, s.tower);
    }
    for (const auto& f : fs) {
        for (const auto& [w, mult] : f.factors()) d.add(w, mult);
    }
    if (a.q < 1) throw Error(ErrorCode::InvalidArgument, "--q must be positive");
    if (a.truncation) return emit_report("divisor", s, check_truncation(d, s.kappa, a.q, a.n, radii), out);

    ordered_json rows = ordered_json::array();
    std::ostringstream table;
    table << "r\tn\tn~[q=" << a.q << "]\tN\tN~[q=" << a.q << "]\n";
    for (const auto& r : radii) {
        const long n = n_count(d, r);
        const long nt = n_tilde_q(d, s.kappa, a.q, r);
        std::string big_n = "n/a", big_nt = "n/a";
        if (sgn(r) > 0) {
            big_n = fixed(N_integrated(d, r).N_value);
            big_nt = fixed(N_tilde_q_integrated(d, s.kappa, a.q, r).N_value);
        }
        table << r.get_str() << '\t' << n << '\t' << nt << '\t' << big_n << '\t' << big_nt << '\n';
        rows.push_back({{"r", r.get_str()}, {"n", n}, {"n_tilde", nt}, {"N", big_n}, {"N_tilde", big_nt}});
    }
    if (s.json) {
        ordered_json j = plain_json("divisor", s, {{"q", std::to_string(a.q)}, {"points", std::to_string(d.size())}});
        j["table"] = rows;
        out << j.dump(2) << '\n';
    } else {
        out << "tower: " << s.tower->describe() << ", kappa = " << s.kappa_text << '\n';
        out << "divisor:";
        for (const auto& [w, mult] : d.points()) out << " (" << to_string(w) << ", " << mult << ")";
        out << (d.empty() ? " empty\n" : "\n") << table.str();
    }
    return kVerified;
}

// --- paper examples -------------------------------------------------------------------------

Expected load_expected(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("bad expected-values file: ") + e.what());
    }
    Expected out;
    for (const auto& [name, values] : j.items()) {
        for (const auto& [key, v] : values.items()) out[name][key] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

int cmd_paper_examples(const Session& s, const std::string& expected_file, std::ostream& out) {
    const Expected expected = expected_file.empty() ? expected_fixture_values() : load_expected(expected_file);
    const auto results = run_fixtures(expected, s.jobs);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.pass() ? 1 : 0;
    const bool all = passed == results.size();
    if (s.json) {
        ordered_json j = plain_json("paper-examples", s, {}, all);
        for (const auto& r : results) {
            std::string detail;
            for (const auto& m : r.mismatches) detail += (detail.empty() ? "" : "; ") + m;
            j["hypotheses"].push_back({{"name", r.name}, {"pass", r.pass()}, {"detail", detail}});
            for (const auto& [k, v] : r.observed) j["artifacts"][r.name + "." + k] = v;
        }
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.pass() ? "PASS " : "FAIL ") << r.name << '\n';
            for (const auto& m : r.mismatches) out << "  " << m << '\n';
        }
        out << passed << "/" << results.size() << " fixtures reproduced\n";
    }
    return all ? kVerified : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact difference radicals, difference Mason inequalities and Fermat-type checks"};
    app.name("diffrad");
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--kappa", opt.kappa, "shift kappa as a constant expression")->capture_default_str();
    app.add_option("--adjoin", opt.adjoin, "adjoin sqrt(N) to the default tower Q(i)(sqrt 2)(sqrt 3); repeatable");
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
    app.add_option("--coprimality", opt.coprimality, "pairwise or setwise")
        ->check(CLI::IsMember({"pairwise", "setwise"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "parallel fixtures")->capture_default_str();

    RadicalArgs rad;
    auto* radical = app.add_subcommand("radical", "difference radical of a polynomial");
    radical->add_option("expr", rad.expr, "polynomial in z");
    radical->add_option("--factored", rad.factored, "'gamma; (root, mult), ...'");
    radical->add_option("--m", rad.m, "also compute the order-m radical (m >= 2)");
    radical->add_flag("--classical", rad.classical, "also print the classical radical");
    radical->add_flag("--oracle", rad.oracle, "compare the gcd path with the root-based path");

    std::vector<std::string> mason_polys;
    std::string mason_file;
    bool multi = false;
    auto* mason = app.add_subcommand("mason", "check a + b = c, or a_1 + ... + a_m = a_{m+1}");
    mason->add_option("polys", mason_polys, "polynomials; the last one is the sum");
    mason->add_option("--file", mason_file, "read polynomials from a file, one per line");
    mason->add_flag("--multi", multi, "use the m-term inequality even for three inputs");

    std::vector<std::string> fermat_polys;
    std::string fermat_file;
    long fermat_n = 1;
    std::string form = "xyz";
    auto* fermat = app.add_subcommand("fermat", "verify a Fermat-type difference equation and its bound");
    fermat->add_option("polys", fermat_polys, "base polynomials");
    fermat->add_option("--file", fermat_file, "read polynomials from a file, one per line");
    fermat->add_option("--n", fermat_n, "factorial length n")->capture_default_str();
    fermat->add_option("--form", form, "xyz, sum or sum1")
        ->check(CLI::IsMember({"xyz", "sum", "sum1"}))
        ->capture_default_str();

    DivisorArgs div;
    auto* divisor = app.add_subcommand("divisor", "counting functions of a zero divisor");
    divisor->add_option("--file", div.file, "divisor file: one '(root, mult)' per line");
    divisor->add_option("--factored", div.factored, "factored polynomial(s); repeatable");
    divisor->add_option("--q", div.q, "truncation depth q")->capture_default_str();
    divisor->add_option("--n", div.n, "factorial length for --truncation")->capture_default_str();
    divisor->add_option("--radii", div.radii, "comma-separated radii")->capture_default_str();
    divisor->add_flag("--truncation", div.truncation, "check the truncation inequality for [f]^n");
    divisor->add_flag("--ord", div.ord, "check the pointwise inequality for g_1..g_m (from --factored)");

    std::string expected_file;
    auto* examples = app.add_subcommand("paper-examples", "replay the built-in worked examples");
    examples->add_option("--expected", expected_file, "JSON file overriding the expected values");

    // Every option is long, so a single-dash argument is a polynomial such as "-(z+2)*(z+3)".
    // A leading space keeps CLI11 from reading it as a flag; the expression parser ignores it.
    std::vector<std::string> argv_rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
        const bool negative_expr = it->size() > 1 && (*it)[0] == '-' && (*it)[1] != '-' && *it != "-h";
        argv_rev.push_back(negative_expr ? " " + *it : *it);
    }
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kVerified;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kVerified;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        const Session s = make_session(opt);
        if (radical->parsed()) return cmd_radical(s, rad, out);
        if (mason->parsed()) return cmd_mason(s, mason_polys, mason_file, multi, out);
        if (fermat->parsed()) return cmd_fermat(s, fermat_polys, fermat_file, fermat_n, form, out);
        if (divisor->parsed()) return cmd_divisor(s, div, out);
        if (examples->parsed()) return cmd_paper_examples(s, expected_file, out);
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace diffrad::cli
