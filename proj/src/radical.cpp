#include "diffrad/radical.hpp"

#include <algorithm>
#include <vector>

#include "diffrad/error.hpp"

namespace diffrad {

namespace {

void require_nonzero(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "radical of the zero polynomial");
}

void require_shift(const FieldElement& kappa) {
    if (kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "shift kappa must be nonzero");
}

void require_order(long m) {
    if (m < 2) throw Error(ErrorCode::BadOrder, "order m must be at least 2, got " + std::to_string(m));
}

RadicalResult from_cofactor(const Polynomial& p, Polynomial cofactor) {
    RadicalResult r;
    r.leading = p.leading();
    r.radical = monic(divide_exact(monic(p), cofactor));
    r.n_tilde = r.radical.degree();
    r.cofactor = std::move(cofactor);
    return r;
}

}  // namespace

RadicalResult diff_radical(const Polynomial& p, const FieldElement& kappa) {
    require_nonzero(p);
    require_shift(kappa);
    return from_cofactor(p, gcd(p, taylor_shift(p, kappa)));
}

RadicalResult diff_radical_m(const Polynomial& p, const FieldElement& kappa, long m) {
    require_nonzero(p);
    require_shift(kappa);
    require_order(m);
    std::vector<Polynomial> shifts;
    shifts.reserve(static_cast<std::size_t>(m));
    FieldElement step;
    for (long j = 0; j < m; ++j) {
        shifts.push_back(taylor_shift(p, step));
        step += kappa;
    }
    return from_cofactor(p, multi_gcd(shifts));
}

RadicalResult classical_radical(const Polynomial& p) {
    require_nonzero(p);
    return from_cofactor(p, gcd(p, derivative(p)));
}

std::vector<std::pair<FieldElement, long>> radical_exponents(const FactoredPoly& f, const FieldElement& kappa,
                                                             long m) {
    require_shift(kappa);
    require_order(m);
    std::vector<std::pair<FieldElement, long>> out;
    out.reserve(f.factors().size());
    for (const auto& [w, mult] : f.factors()) {
        long lowest = mult;
        FieldElement point = w;
        for (long j = 1; j < m && lowest > 0; ++j) {
            point += kappa;
            lowest = std::min(lowest, f.multiplicity(point));
        }
        out.emplace_back(w, mult - lowest);
    }
    return out;
}

RadicalResult diff_radical_from_roots(const FactoredPoly& f, const FieldElement& kappa, long m) {
    RadicalResult r;
    r.leading = f.leading();
    std::vector<FactoredPoly::Factor> rad, cof;
    for (const auto& [w, d] : radical_exponents(f, kappa, m)) {
        if (d > 0) rad.emplace_back(w, d);
        const long rest = f.multiplicity(w) - d;
        if (rest > 0) cof.emplace_back(w, rest);
    }
    r.radical = expand(FactoredPoly(FieldElement(1L), std::move(rad)));
    r.cofactor = expand(FactoredPoly(FieldElement(1L), std::move(cof)));
    r.n_tilde = r.radical.degree();
    return r;
}

std::pair<long, long> n_tilde_sum_bound(const FactoredPoly& f, const FieldElement& kappa, long m) {
    require_shift(kappa);
    require_order(m);
    const long lhs = diff_radical_from_roots(f, kappa, m).n_tilde;
    long rhs = 0;
    for (long j = 1; j < m; ++j) {
        rhs += diff_radical_from_roots(f, kappa * FieldElement(j), 2).n_tilde;
    }
    return {lhs, rhs};
}

}  // namespace diffrad
