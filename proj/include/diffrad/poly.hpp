#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "diffrad/field.hpp"

namespace diffrad {

/// Dense univariate polynomial in z over a quadratic tower. Coefficient k multiplies z^k;
/// the highest stored coefficient is never zero, and the zero polynomial stores nothing.
class Polynomial {
public:
    /// Degree reported for the zero polynomial.
    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<FieldElement> coeffs);

    static Polynomial constant(const FieldElement& c);
    static Polynomial monomial(const FieldElement& c, std::size_t power);
    /// z - root
    static Polynomial linear(const FieldElement& root);
    static Polynomial variable() { return monomial(FieldElement(1L), 1); }

    long degree() const noexcept {
        return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    FieldElement coeff(std::size_t power) const;
    /// Leading coefficient; zero for the zero polynomial.
    FieldElement leading() const;

    FieldElement operator()(const FieldElement& at) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void trim();

    std::vector<FieldElement> coeffs_;
};

Polynomial scale(const Polynomial& p, const FieldElement& c);
Polynomial pow(const Polynomial& p, unsigned exponent);
/// p divided by its leading coefficient; the zero polynomial maps to itself.
Polynomial monic(const Polynomial& p);

/// p(z + shift).
Polynomial taylor_shift(const Polynomial& p, const FieldElement& shift);
/// p(z + kappa) - p(z); kappa must be nonzero.
Polynomial delta(const Polynomial& p, const FieldElement& kappa);
Polynomial derivative(const Polynomial& p);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};
DivMod divmod(const Polynomial& p, const Polynomial& d);
/// Quotient p / d; throws NotDivisible when the remainder is nonzero.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);
bool divides(const Polynomial& d, const Polynomial& p);

/// Monic greatest common divisor (Euclid over the tower). gcd(p, 0) = monic(p).
Polynomial gcd(const Polynomial& p, const Polynomial& q);
/// Monic gcd of all entries; zero entries are ignored unless every entry is zero.
Polynomial multi_gcd(std::span<const Polynomial> ps);

/// Order of vanishing of p at w; p must be nonzero.
long ord_at(const Polynomial& p, const FieldElement& w);

/// gamma * prod (z - root)^mult with pairwise distinct roots.
class FactoredPoly {
public:
    using Factor = std::pair<FieldElement, long>;

    FactoredPoly() : leading_(1L) {}
    /// Merges repeated roots by summing multiplicities; rejects a zero leading
    /// coefficient and non-positive multiplicities.
    FactoredPoly(FieldElement leading, std::vector<Factor> factors);

    const FieldElement& leading() const noexcept { return leading_; }
    const std::vector<Factor>& factors() const noexcept { return factors_; }
    long degree() const noexcept;
    /// Stored multiplicity of w (0 when w is not a root).
    long multiplicity(const FieldElement& w) const;

private:
    FieldElement leading_;
    std::vector<Factor> factors_;
};

Polynomial expand(const FactoredPoly& f);

}  // namespace diffrad
