#include "diffrad/fermat.hpp"

#include <algorithm>
#include <string>

#include "diffrad/error.hpp"
#include "diffrad/parser.hpp"

namespace diffrad {

std::string_view to_string(FermatForm form) noexcept {
    switch (form) {
    case FermatForm::Xyz: return "xyz";
    case FermatForm::SumEqFactorial: return "sum";
    case FermatForm::SumEqOne: return "sum1";
    }
    return "?";
}

FermatForm parse_fermat_form(std::string_view text) {
    if (text == "xyz") return FermatForm::Xyz;
    if (text == "sum") return FermatForm::SumEqFactorial;
    if (text == "sum1") return FermatForm::SumEqOne;
    throw Error(ErrorCode::InvalidArgument, "unknown form '" + std::string(text) + "' (expected xyz, sum or sum1)");
}

long FermatInstance::m() const {
    const long size = static_cast<long>(ps.size());
    return form == FermatForm::SumEqOne ? size : size - 1;
}

Polynomial factorial_poly(const Polynomial& p, const FieldElement& kappa, long n) {
    if (kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "shift kappa must be nonzero");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorial length n must be positive");
    Polynomial out = p;
    FieldElement step = kappa;
    for (long i = 1; i < n; ++i) {
        out *= taylor_shift(p, step);
        step += kappa;
    }
    return out;
}

namespace {

void validate(const FermatInstance& inst) {
    if (inst.kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "shift kappa must be nonzero");
    if (inst.n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    const std::size_t k = inst.ps.size();
    switch (inst.form) {
    case FermatForm::Xyz:
        if (k != 3) throw Error(ErrorCode::BadArity, "form xyz takes exactly 3 polynomials, got " + std::to_string(k));
        break;
    case FermatForm::SumEqFactorial:
        if (k < 3) throw Error(ErrorCode::BadArity, "form sum takes m + 1 >= 3 polynomials, got " + std::to_string(k));
        break;
    case FermatForm::SumEqOne:
        if (k < 2) throw Error(ErrorCode::BadArity, "form sum1 takes m >= 2 polynomials, got " + std::to_string(k));
        break;
    }
}

Statement statement_of(FermatForm form) {
    switch (form) {
    case FermatForm::Xyz: return Statement::FermatXYZ;
    case FermatForm::SumEqFactorial: return Statement::FermatSumM;
    case FermatForm::SumEqOne: return Statement::FermatSum1;
    }
    return Statement::FermatXYZ;
}

std::optional<Rational> rational_root(const Rational& q, long n) {
    Integer num = abs(q.get_num());
    Integer den = q.get_den();
    Integer rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n))) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n))) return std::nullopt;
    Rational r(rn, rd);
    if (sgn(q) < 0) {
        if (n % 2 == 0) return std::nullopt;
        r = -r;
    }
    return r;
}

std::optional<FieldElement> nth_root(const FieldElement& x, long n) {
    if (n == 1) return x;
    if (auto q = x.as_rational()) {
        if (auto r = rational_root(*q, n)) return FieldElement::rational(x.tower(), *r);
    }
    if (n % 2 != 0) return std::nullopt;
    auto s = sqrt_in_tower(x);
    if (!s) return std::nullopt;
    if (auto r = nth_root(*s, n / 2)) return r;
    return nth_root(-*s, n / 2);
}

}  // namespace

std::optional<Polynomial> factorial_root(const Polynomial& s, const FieldElement& kappa, long n) {
    if (kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "shift kappa must be nonzero");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorial length n must be positive");
    if (s.is_zero()) return s;
    if (s.degree() % n != 0) return std::nullopt;
    auto lead = nth_root(s.leading(), n);
    if (!lead) return std::nullopt;
    const long d = s.degree() / n;
    const Polynomial target = monic(s);
    std::vector<FieldElement> c(static_cast<std::size_t>(d + 1));
    c[static_cast<std::size_t>(d)] = FieldElement(1L);
    const FieldElement inv_n = FieldElement(Rational(1, n));
    // The coefficient of z^{nd-k} in [q]^n is n * q_{d-k} plus terms in higher coefficients of q.
    for (long k = 1; k <= d; ++k) {
        const auto idx = static_cast<std::size_t>(n * d - k);
        const Polynomial f = factorial_poly(Polynomial(c), kappa, n);
        c[static_cast<std::size_t>(d - k)] += (target.coeff(idx) - f.coeff(idx)) * inv_n;
    }
    const Polynomial q(std::move(c));
    if (!(factorial_poly(q, kappa, n) == target)) return std::nullopt;
    return scale(q, *lead);
}

CheckReport verify_fermat(const FermatInstance& inst, Coprimality mode) {
    validate(inst);
    CheckReport r;
    r.statement = statement_of(inst.form);
    r.set_artifact("form", std::string(to_string(inst.form)));
    r.set_artifact("n", std::to_string(inst.n));
    r.set_artifact("m", std::to_string(inst.m()));

    std::vector<Polynomial> facts;
    facts.reserve(inst.ps.size());
    for (const auto& p : inst.ps) facts.push_back(factorial_poly(p, inst.kappa, inst.n));

    Polynomial lhs, rhs;
    if (inst.form == FermatForm::SumEqOne) {
        for (const auto& f : facts) lhs += f;
        rhs = Polynomial::constant(FieldElement(1L));
    } else {
        for (std::size_t k = 0; k + 1 < facts.size(); ++k) lhs += facts[k];
        rhs = facts.back();
    }
    const Polynomial residual = lhs - rhs;
    r.set_artifact("residual", print_poly(residual));
    r.add_hypothesis("equation holds", residual.is_zero(),
                     residual.is_zero() ? "" : "left minus right = " + print_poly(residual));

    const bool nonzero = std::none_of(facts.begin(), facts.end(), [](const Polynomial& f) { return f.is_zero(); });
    if (!nonzero) {
        r.add_hypothesis("factorials coprime", false, "a base polynomial is zero");
    } else if (mode == Coprimality::Pairwise) {
        auto c = pairwise_coprime(facts);
        r.add_hypothesis("factorials pairwise coprime", c.coprime,
                         c.coprime ? "" : "factorials " + std::to_string(c.first + 1) + " and " +
                                              std::to_string(c.second + 1) + " share " + print_poly(*c.witness));
        if (!c.coprime) r.set_artifact("common_factor", print_poly(*c.witness));
    } else {
        // For sum1 the right-hand side is 1, so coprimality concerns the left-hand terms only.
        const Polynomial g = multi_gcd(facts);
        const bool ok = g.degree() == 0;
        r.add_hypothesis("factorials setwise coprime", ok, ok ? "" : "common factor " + print_poly(g));
        if (!ok) r.set_artifact("common_factor", print_poly(g));
    }
    r.conclude();
    return r;
}

FermatBound fermat_bound(FermatForm form, long m, long max_deg, bool has_constant) {
    if (max_deg < 1) throw Error(ErrorCode::BadArity, "max_deg must be at least 1");
    FermatBound b;
    switch (form) {
    case FermatForm::Xyz:
        b.bound = has_constant ? 1 : 2;
        b.integer_bound = has_constant ? 1 : 2;
        return b;
    case FermatForm::SumEqFactorial:
        if (m < 2) throw Error(ErrorCode::BadArity, "m must be at least 2");
        b.bound = Rational(m * m - 1) - Rational(m * (m - 1), 2 * max_deg);
        break;
    case FermatForm::SumEqOne:
        if (m < 2) throw Error(ErrorCode::BadArity, "m must be at least 2");
        b.bound = Rational(m * m - m) - Rational(m * (m - 1), 2 * max_deg);
        break;
    }
    b.bound.canonicalize();
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), b.bound.get_num_mpz_t(), b.bound.get_den_mpz_t());
    b.integer_bound = fl.get_si();
    return b;
}

CheckReport check_fermat_theorem(const FermatInstance& inst, Coprimality mode) {
    CheckReport r = verify_fermat(inst, mode);
    long max_deg = 0;
    bool has_constant = false;
    for (const auto& p : inst.ps) {
        if (p.is_zero()) continue;
        max_deg = std::max(max_deg, p.degree());
        has_constant = has_constant || p.is_constant();
    }
    if (inst.form == FermatForm::Xyz) {
        r.add_hypothesis("not all constant", max_deg > 0);
    } else {
        r.add_hypothesis("all non-constant", !has_constant);
    }
    r.lhs = inst.n;
    if (max_deg > 0) {
        const FermatBound b = fermat_bound(inst.form, inst.m(), max_deg, has_constant);
        r.rhs = b.bound;
        r.set_artifact("bound", b.bound.get_str());
        r.set_artifact("integer_bound", std::to_string(b.integer_bound));
        if (inst.form == FermatForm::SumEqFactorial) {
            r.set_artifact("corollary_bound", std::to_string(inst.m() * inst.m() - 2));
        } else if (inst.form == FermatForm::SumEqOne) {
            r.set_artifact("corollary_bound", std::to_string(inst.m() * inst.m() - inst.m() - 1));
        }
    }
    r.set_artifact("max_deg", std::to_string(max_deg));
    r.conclude();
    return r;
}

}  // namespace diffrad
