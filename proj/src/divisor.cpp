#include "diffrad/divisor.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "diffrad/error.hpp"
#include "diffrad/mason.hpp"
#include "diffrad/parser.hpp"

namespace diffrad {

Divisor::Divisor(std::vector<Point> points) {
    for (const auto& [w, mult] : points) add(w, mult);
}

void Divisor::add(const FieldElement& w, long mult) {
    if (mult <= 0) {
        throw Error(ErrorCode::NonPositiveMultiplicity, "multiplicity must be positive, got " + std::to_string(mult));
    }
    support_[w] += mult;
}

long Divisor::ord(const FieldElement& w) const {
    auto it = support_.find(w);
    return it == support_.end() ? 0 : it->second;
}

std::vector<Divisor::Point> Divisor::points() const { return {support_.begin(), support_.end()}; }

long Divisor::degree() const {
    long total = 0;
    for (const auto& [w, mult] : support_) total += mult;
    return total;
}

bool operator==(const Divisor& a, const Divisor& b) {
    if (a.support_.size() != b.support_.size()) return false;
    auto it = b.support_.begin();
    for (const auto& [w, mult] : a.support_) {
        if (!(w == it->first) || mult != it->second) return false;
        ++it;
    }
    return true;
}

Divisor divisor_of(const FactoredPoly& f) {
    Divisor d;
    for (const auto& [w, mult] : f.factors()) d.add(w, mult);
    return d;
}

Divisor shift_divisor(const Divisor& d, const FieldElement& kappa) {
    Divisor out;
    for (const auto& [w, mult] : d.points()) out.add(w - kappa, mult);
    return out;
}

Divisor factorial_divisor(const Divisor& d, const FieldElement& kappa, long n) {
    if (kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "shift kappa must be nonzero");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    Divisor out;
    FieldElement step;
    for (long i = 0; i < n; ++i) {
        for (const auto& [w, mult] : d.points()) out.add(w - step, mult);
        step += kappa;
    }
    return out;
}

bool in_closed_disc(const FieldElement& w, const Rational& r) {
    if (sgn(r) < 0) throw Error(ErrorCode::InvalidArgument, "radius must be non-negative");
    return compare_real(abs_squared(w), r * r) <= 0;
}

long n_count(const Divisor& d, const Rational& r) {
    long total = 0;
    for (const auto& [w, mult] : d.points()) {
        if (in_closed_disc(w, r)) total += mult;
    }
    return total;
}

namespace {

void require_q(const FieldElement& kappa, long q) {
    if (kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "shift kappa must be nonzero");
    if (q < 1) throw Error(ErrorCode::InvalidArgument, "q must be positive");
}

// Weight of each point for log(r/|w|), with the origin weighted by log r.
Interval log_weight(const FieldElement& w, const Interval& log_r, mpfr_prec_t prec) {
    if (w.is_zero()) return log_r;
    const ComplexInterval sq = embed(abs_squared(w), static_cast<unsigned>(prec));
    return log_r - sq.re.log().half();
}

CountingValue integrate(const std::vector<Divisor::Point>& weights, const Rational& r, unsigned precision_bits) {
    if (sgn(r) <= 0) throw Error(ErrorCode::InvalidArgument, "radius must be positive for integrated counts");
    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    CountingValue out;
    const Interval log_r = Interval(r, prec).log();
    Interval sum(Rational(0), prec);
    for (const auto& [w, c] : weights) {
        if (!in_closed_disc(w, r)) continue;
        out.n_value += c;
        sum = sum + Interval(Rational(c), prec) * log_weight(w, log_r, prec);
    }
    out.N_value = sum.midpoint();
    out.error_bound = sum.radius();
    out.N_enclosure = sum;
    return out;
}

std::string radius_label(const Rational& r) { return "r=" + r.get_str(); }

}  // namespace

std::vector<Divisor::Point> truncated_weights(const Divisor& d, const FieldElement& kappa, long q) {
    require_q(kappa, q);
    std::vector<Divisor::Point> out;
    for (const auto& [w, mult] : d.points()) {
        long lowest = mult;
        FieldElement point = w;
        for (long j = 1; j <= q && lowest > 0; ++j) {
            point += kappa;
            lowest = std::min(lowest, d.ord(point));
        }
        if (mult - lowest > 0) out.emplace_back(w, mult - lowest);
    }
    return out;
}

long n_tilde_q(const Divisor& d, const FieldElement& kappa, long q, const Rational& r) {
    long total = 0;
    for (const auto& [w, c] : truncated_weights(d, kappa, q)) {
        if (in_closed_disc(w, r)) total += c;
    }
    return total;
}

CountingValue N_integrated(const Divisor& d, const Rational& r, unsigned precision_bits) {
    return integrate(d.points(), r, precision_bits);
}

CountingValue N_tilde_q_integrated(const Divisor& d, const FieldElement& kappa, long q, const Rational& r,
                                   unsigned precision_bits) {
    return integrate(truncated_weights(d, kappa, q), r, precision_bits);
}

CheckReport check_truncation(const Divisor& d, const FieldElement& kappa, long q, long n,
                             std::span<const Rational> radii) {
    require_q(kappa, q);
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    CheckReport report;
    report.statement = Statement::Truncation;
    report.set_artifact("q", std::to_string(q));
    report.set_artifact("n", std::to_string(n));
    const Divisor fact = factorial_divisor(d, kappa, n);
    std::vector<Divisor> shifts;
    FieldElement step;
    for (long i = 0; i < q; ++i) {
        shifts.push_back(shift_divisor(d, step));
        step += kappa;
    }
    for (const auto& r : radii) {
        if (sgn(r) < 0) throw Error(ErrorCode::InvalidArgument, "radius must be non-negative");
        const long lhs = n_tilde_q(fact, kappa, q, r);
        long rhs = 0;
        for (const auto& s : shifts) rhs += n_count(s, r);
        report.entries.push_back({"n-level " + radius_label(r), lhs, rhs, lhs <= rhs, ""});
        report.counts.push_back(lhs);
        report.lhs = lhs;
        report.rhs = rhs;

        // The origin term carries log r < 0 when r < 1, so the integrated form is only asserted for r >= 1.
        if (r < 1) continue;
        const CountingValue left = N_tilde_q_integrated(fact, kappa, q, r);
        double right = 0.0, right_err = 0.0;
        for (const auto& s : shifts) {
            const CountingValue v = N_integrated(s, r);
            right += v.N_value;
            right_err += v.error_bound;
        }
        const bool ok = left.N_value <= right + kIntegratedTolerance &&
                        left.error_bound + right_err <= kIntegratedTolerance;
        std::ostringstream detail;
        detail.precision(12);
        detail << "error <= " << left.error_bound + right_err;
        report.entries.push_back({"integrated " + radius_label(r), Rational(left.N_value), Rational(right), ok,
                                  detail.str(), true});
    }
    report.conclude();
    return report;
}

CheckReport check_ord_inequality(std::span<const FactoredPoly> gs, const FieldElement& kappa,
                                 std::span<const Rational> radii) {
    if (kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "shift kappa must be nonzero");
    if (gs.size() < 2) throw Error(ErrorCode::BadArity, "need m >= 2 functions");
    const long m = static_cast<long>(gs.size());
    std::vector<Polynomial> g;
    for (const auto& f : gs) g.push_back(expand(f));
    if (!linearly_independent(g)) throw Error(ErrorCode::DependentInputs, "g_1..g_m are linearly dependent");
    Polynomial sum;
    for (const auto& p : g) sum += p;
    if (sum.is_zero()) throw Error(ErrorCode::ZeroSum, "g_1 + ... + g_m vanishes");
    g.push_back(sum);

    CheckReport report;
    report.statement = Statement::OrdInequality;
    report.set_artifact("m", std::to_string(m));
    report.set_artifact("independence", "over constants (equivalent to periodic functions for polynomials)");
    const Polynomial common = multi_gcd(std::span<const Polynomial>(g.data(), static_cast<std::size_t>(m)));
    report.add_hypothesis("no common zeros", common.degree() == 0,
                          common.degree() == 0 ? "" : "common factor " + print_poly(common));
    if (!report.hypotheses_pass()) {
        report.conclude();
        return report;
    }

    const Polynomial cas = casoratian(std::span<const Polynomial>(g.data(), static_cast<std::size_t>(m)), kappa);
    report.set_artifact("casoratian", print_poly(cas));

    // Candidate points: the known roots of g_1..g_m and their forward translates.
    Divisor candidates;
    for (const auto& f : gs) {
        for (const auto& [w, mult] : f.factors()) {
            FieldElement point = w;
            for (long i = 0; i < m; ++i) {
                if (candidates.ord(point) == 0) candidates.add(point, 1);
                point += kappa;
            }
        }
    }

    struct PointData {
        FieldElement w;
        long ord_g;
        long bound;
    };
    std::vector<PointData> zeros;
    Rational total_lhs = 0, total_rhs = 0;
    for (const auto& [w, unused] : candidates.points()) {
        long ord_g = -ord_at(cas, w);
        long bound = 0;
        for (const auto& p : g) {
            const long here = ord_at(p, w);
            ord_g += here;
            long lowest = here;
            FieldElement point = w;
            for (long i = 1; i < m && lowest > 0; ++i) {
                point += kappa;
                lowest = std::min(lowest, ord_at(p, point));
            }
            bound += here - lowest;
        }
        if (ord_g <= 0) continue;
        zeros.push_back({w, ord_g, bound});
        total_lhs += ord_g;
        total_rhs += bound;
        report.entries.push_back({"w=" + to_string(w), ord_g, bound, ord_g <= bound, ""});
    }

    // Outside the candidates only g_{m+1} can vanish, and there the inequality reduces to
    // ord_w(C) >= min_i ord_{w+i kappa}(g_{m+1}). Strip candidate roots and compare exactly.
    std::vector<Polynomial> shifted;
    FieldElement step;
    for (long i = 0; i < m; ++i) {
        shifted.push_back(taylor_shift(sum, step));
        step += kappa;
    }
    Polynomial q = multi_gcd(shifted);
    Polynomial c = monic(cas);
    for (const auto& [w, unused] : candidates.points()) {
        const Polynomial lin = Polynomial::linear(w);
        for (long k = ord_at(q, w); k > 0; --k) q = divide_exact(q, lin);
        for (long k = ord_at(c, w); k > 0; --k) c = divide_exact(c, lin);
    }
    const Polynomial excess = divide_exact(q, gcd(q, c));
    const bool outside_ok = excess.degree() == 0;
    report.entries.push_back({"points outside candidates", outside_ok ? 0 : excess.degree(), 0, outside_ok,
                              outside_ok ? "" : "violating factor " + print_poly(excess)});

    for (const auto& r : radii) {
        Rational lhs = 0, rhs = 0;
        for (const auto& z : zeros) {
            if (!in_closed_disc(z.w, r)) continue;
            lhs += z.ord_g;
            rhs += z.bound;
        }
        report.entries.push_back({"n-level over candidates " + radius_label(r), lhs, rhs, lhs <= rhs, ""});
    }
    report.lhs = total_lhs;
    report.rhs = total_rhs;
    report.conclude();
    return report;
}

Divisor read_divisor(std::istream& in, const TowerPtr& tower) {
    Divisor d;
    for (const auto& line : read_object_lines(in)) {
        auto [w, mult] = parse_root_pair(line, tower);
        d.add(w, mult);
    }
    return d;
}

}  // namespace diffrad
