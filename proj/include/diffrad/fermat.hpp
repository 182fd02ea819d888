#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diffrad/field.hpp"
#include "diffrad/mason.hpp"
#include "diffrad/poly.hpp"
#include "diffrad/report.hpp"

namespace diffrad {

/// xyz:   [a]^n + [b]^n = [c]^n                       (ps = a, b, c)
/// sum:   [p_1]^n + ... + [p_m]^n = [p_{m+1}]^n       (ps = p_1 .. p_{m+1})
/// sum1:  [p_1]^n + ... + [p_m]^n = 1                 (ps = p_1 .. p_m)
enum class FermatForm { Xyz, SumEqFactorial, SumEqOne };

std::string_view to_string(FermatForm form) noexcept;
FermatForm parse_fermat_form(std::string_view text);

struct FermatInstance {
    std::vector<Polynomial> ps;
    FieldElement kappa{1L};
    long n = 1;
    FermatForm form = FermatForm::Xyz;

    /// Number of terms m on the left-hand side.
    long m() const;
};

/// [p]_kappa^n = p(z) p(z + kappa) ... p(z + (n-1) kappa).
Polynomial factorial_poly(const Polynomial& p, const FieldElement& kappa, long n);

/// Checks the equation exactly and the coprimality of the factorial polynomials.
/// `holds` is true when both pass. The residual (left minus right) is an artifact.
CheckReport verify_fermat(const FermatInstance& inst, Coprimality mode = Coprimality::Setwise);

struct FermatBound {
    Rational bound;
    long integer_bound = 0;  // largest integer n the theorem still allows
};

/// Upper bound on n. For xyz, `m` is ignored and `has_constant` selects the n = 1 case.
FermatBound fermat_bound(FermatForm form, long m, long max_deg, bool has_constant = false);

/// verify_fermat plus the non-constancy hypothesis; lhs = n, rhs = the rational bound.
CheckReport check_fermat_theorem(const FermatInstance& inst, Coprimality mode = Coprimality::Setwise);

/// Some q with [q]_kappa^n = s, if one exists (found by matching coefficients from the top).
/// The leading coefficient must have an n-th root reachable by rational roots and square roots
/// in the tower of s; otherwise nullopt.
std::optional<Polynomial> factorial_root(const Polynomial& s, const FieldElement& kappa, long n);

}  // namespace diffrad
