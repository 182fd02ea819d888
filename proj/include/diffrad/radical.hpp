#pragma once

#include <utility>

#include "diffrad/field.hpp"
#include "diffrad/poly.hpp"

namespace diffrad {

/// p = leading * cofactor * radical, with cofactor and radical monic.
struct RadicalResult {
    Polynomial radical;
    Polynomial cofactor;
    long n_tilde = 0;
    FieldElement leading;
};

/// kappa-difference radical: cofactor = gcd(p, p(z + kappa)), radical = p / cofactor.
RadicalResult diff_radical(const Polynomial& p, const FieldElement& kappa);

/// Order-m radical: cofactor = gcd(p, p(z+kappa), ..., p(z+(m-1)kappa)). m = 2 is diff_radical.
RadicalResult diff_radical_m(const Polynomial& p, const FieldElement& kappa, long m);

/// Squarefree part p / gcd(p, p'); n_tilde is the number of distinct roots.
RadicalResult classical_radical(const Polynomial& p);

/// Root-multiset oracle: exponent d(w) = ord_w - min_{0<=j<m} ord_{w+j kappa} per root,
/// radical = prod (z - w)^d(w). No gcd is involved.
RadicalResult diff_radical_from_roots(const FactoredPoly& f, const FieldElement& kappa, long m);

/// Exponent d(w) of every stored root of f, in factor order.
std::vector<std::pair<FieldElement, long>> radical_exponents(const FactoredPoly& f, const FieldElement& kappa,
                                                             long m);

/// (order-m count, sum over j = 1..m-1 of the single-step counts with shift j*kappa).
/// The first never exceeds the second.
std::pair<long, long> n_tilde_sum_bound(const FactoredPoly& f, const FieldElement& kappa, long m);

}  // namespace diffrad
