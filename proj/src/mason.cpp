#include "diffrad/mason.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "diffrad/error.hpp"
#include "diffrad/parser.hpp"
#include "diffrad/radical.hpp"

namespace diffrad {

std::string_view to_string(Coprimality mode) noexcept {
    return mode == Coprimality::Pairwise ? "pairwise" : "setwise";
}

Polynomial casoratian(std::span<const Polynomial> ps, const FieldElement& kappa) {
    if (ps.empty()) throw Error(ErrorCode::EmptyList, "casoratian of an empty list");
    if (kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "shift kappa must be nonzero");
    const std::size_t m = ps.size();
    std::vector<std::vector<Polynomial>> a(m, std::vector<Polynomial>(m));
    FieldElement step;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = taylor_shift(ps[j], step);
        step += kappa;
    }
    bool negate = false;
    Polynomial prev = Polynomial::constant(FieldElement(1L));
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < m && a[r][k].is_zero()) ++r;
            if (r == m) return {};
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            }
        }
        prev = a[k][k];
    }
    Polynomial det = a[m - 1][m - 1];
    return negate ? -det : det;
}

bool linearly_independent(std::span<const Polynomial> ps) {
    long width = 0;
    for (const auto& p : ps) {
        if (p.is_zero()) return false;
        width = std::max(width, p.degree() + 1);
    }
    if (static_cast<long>(ps.size()) > width) return false;
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(ps.size());
    for (const auto& p : ps) {
        std::vector<FieldElement> row(static_cast<std::size_t>(width));
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) row[k] = p.coeffs()[k];
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(width) && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const FieldElement inv = rows[rank][col].inverse();
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            const FieldElement f = rows[r][col] * inv;
            for (std::size_t c = col; c < rows[r].size(); ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank == ps.size();
}

CoprimeResult pairwise_coprime(std::span<const Polynomial> ps) {
    for (const auto& p : ps) {
        if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "coprimality of the zero polynomial");
    }
    CoprimeResult out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            Polynomial g = gcd(ps[i], ps[j]);
            if (g.degree() > 0) {
                out.coprime = false;
                out.witness = std::move(g);
                out.first = i;
                out.second = j;
                return out;
            }
        }
    }
    return out;
}

bool setwise_coprime(std::span<const Polynomial> ps) {
    for (const auto& p : ps) {
        if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "coprimality of the zero polynomial");
    }
    return multi_gcd(ps).degree() == 0;
}

Polynomial casoratian_gcd_product(std::span<const Polynomial> as, const FieldElement& kappa, long m) {
    Polynomial q = Polynomial::constant(FieldElement(1L));
    for (const auto& a : as) q *= diff_radical_m(a, kappa, m).cofactor;
    return q;
}

namespace {

Polynomial sum_of(std::span<const Polynomial> ps) {
    Polynomial s;
    for (const auto& p : ps) s += p;
    return s;
}

bool all_nonzero(std::span<const Polynomial> ps) {
    return std::none_of(ps.begin(), ps.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string join(const std::vector<long>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

void add_coprimality(CheckReport& r, std::span<const Polynomial> ps, Coprimality mode) {
    if (!all_nonzero(ps)) {
        r.add_hypothesis(std::string(to_string(mode)) + " coprime", false, "skipped: zero input");
        return;
    }
    if (mode == Coprimality::Pairwise) {
        auto c = pairwise_coprime(ps);
        std::string detail;
        if (!c.coprime) {
            detail = "inputs " + std::to_string(c.first + 1) + " and " + std::to_string(c.second + 1) +
                     " share " + print_poly(*c.witness);
            r.set_artifact("common_factor", print_poly(*c.witness));
        }
        r.add_hypothesis("pairwise coprime", c.coprime, detail);
    } else {
        Polynomial g = multi_gcd(ps);
        const bool ok = g.degree() == 0;
        if (!ok) r.set_artifact("common_factor", print_poly(g));
        r.add_hypothesis("setwise coprime", ok, ok ? "" : "common factor " + print_poly(g));
    }
}

}  // namespace

CheckReport check_mason_triple(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                               const FieldElement& kappa) {
    if (kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "shift kappa must be nonzero");
    CheckReport r;
    r.statement = Statement::Mason3;
    const Polynomial residual = a + b - c;
    r.add_hypothesis("a + b = c", residual.is_zero(), residual.is_zero() ? "" : "a + b - c = " + print_poly(residual));
    const Polynomial abc[] = {a, b, c};
    const bool nonzero = all_nonzero(abc);
    r.add_hypothesis("all nonzero", nonzero);
    add_coprimality(r, abc, Coprimality::Pairwise);
    const bool all_constant = a.is_constant() && b.is_constant() && c.is_constant();
    r.add_hypothesis("not all constant", !all_constant);
    if (nonzero) {
        long rhs = -1;
        for (const auto& p : abc) {
            RadicalResult rad = diff_radical(p, kappa);
            r.counts.push_back(rad.n_tilde);
            rhs += rad.n_tilde;
        }
        r.lhs = std::max({a.degree(), b.degree(), c.degree()});
        r.rhs = rhs;
        r.set_artifact("n_tilde", join(r.counts));
    }
    r.conclude();
    return r;
}

CheckReport check_mason_multi(std::span<const Polynomial> as, const FieldElement& kappa, Coprimality mode) {
    if (kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "shift kappa must be nonzero");
    if (as.size() < 3) throw Error(ErrorCode::BadArity, "need m + 1 >= 3 polynomials, got " + std::to_string(as.size()));
    const long m = static_cast<long>(as.size()) - 1;
    CheckReport r;
    r.statement = Statement::MasonM;
    r.set_artifact("m", std::to_string(m));
    r.set_artifact("coprimality", std::string(to_string(mode)));
    auto head = as.first(static_cast<std::size_t>(m));
    const Polynomial residual = sum_of(head) - as.back();
    r.add_hypothesis("a_1 + ... + a_m = a_{m+1}", residual.is_zero(),
                     residual.is_zero() ? "" : "residual " + print_poly(residual));
    const bool nonzero = all_nonzero(as);
    r.add_hypothesis("all nonzero", nonzero);
    add_coprimality(r, as, mode);
    const bool independent = linearly_independent(head);
    r.add_hypothesis("a_1..a_m linearly independent", independent);
    if (nonzero) {
        const long correction = m * (m - 1) / 2;
        long total = 0, single_total = 0;
        long max_deg = 0;
        std::vector<long> singles;
        for (const auto& a : as) {
            const long n_m = diff_radical_m(a, kappa, m).n_tilde;
            const long n_1 = diff_radical(a, kappa).n_tilde;
            r.counts.push_back(n_m);
            singles.push_back(n_1);
            total += n_m;
            single_total += n_1;
            max_deg = std::max(max_deg, a.degree());
        }
        r.lhs = max_deg;
        r.rhs = total - correction;
        r.set_artifact("n_tilde_order_m", join(r.counts));
        r.set_artifact("n_tilde_single", join(singles));
        r.set_artifact("radical_bound", std::to_string(single_total - correction));
        r.set_artifact("radical_bound_holds", max_deg <= single_total - correction ? "yes" : "no");
        if (independent) {
            const Polynomial cas = casoratian(head, kappa);
            const Polynomial q = casoratian_gcd_product(as, kappa, m);
            r.set_artifact("casoratian_degree", std::to_string(cas.degree()));
            r.set_artifact("gcd_product_divides_casoratian", divides(q, cas) ? "yes" : "no");
        }
    }
    r.conclude();
    return r;
}

}  // namespace diffrad
