#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diffrad/interval.hpp"

namespace diffrad {

using Rational = mpq_class;
using Integer = mpz_class;

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Exact element of a tower of quadratic extensions Q(s_0)(s_1)...(s_{k-1}), s_j^2 = d_j.
///
/// Coordinates are taken over the basis of square-free products of generators:
/// coordinate index b multiplies the product of s_j over the set bits j of b.
/// Elements of a tower lift into any tower that extends it, so mixed arithmetic
/// between e.g. a rational constant and an element of Q(i)(sqrt 2) just works.
class FieldElement {
public:
    FieldElement();
    FieldElement(long value);
    FieldElement(const Rational& value);
    FieldElement(TowerPtr tower, std::vector<Rational> coords);

    static FieldElement rational(TowerPtr tower, const Rational& value);
    /// The square root s_j adjoined at level j of the tower.
    static FieldElement generator(TowerPtr tower, std::size_t index);

    const TowerPtr& tower() const noexcept { return tower_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    /// Value as a rational number if every irrational coordinate vanishes.
    std::optional<Rational> as_rational() const;
    FieldElement lifted_to(const TowerPtr& target) const;

    FieldElement inverse() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& other);
    FieldElement& operator-=(const FieldElement& other);
    FieldElement& operator*=(const FieldElement& other);
    FieldElement& operator/=(const FieldElement& other);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    TowerPtr tower_;
    std::vector<Rational> coords_;
};

/// Branch and sign data for one adjoined square root.
struct Generator {
    FieldElement radicand;  // lives in the tower below this generator
    int sign = 1;           // sign of the (real) radicand; +1 picks the positive root, -1 the root on the positive imaginary axis
    std::string symbol;
};

class FieldTower : public std::enable_shared_from_this<FieldTower> {
public:
    /// The prime field Q (no generators).
    static const TowerPtr& rationals();

    std::size_t generator_count() const noexcept { return generators_.size(); }
    std::size_t dimension() const noexcept { return std::size_t{1} << generators_.size(); }
    const Generator& generator(std::size_t j) const { return generators_.at(j); }
    const std::vector<Generator>& generators() const noexcept { return generators_; }

    /// Tower with only the first k generators.
    TowerPtr prefix(std::size_t k) const;
    /// True if `base` is (structurally) an initial segment of this tower.
    bool extends(const FieldTower& base) const;
    bool same_as(const FieldTower& other) const;

    std::string describe() const;

private:
    friend TowerPtr adjoin_sqrt(const TowerPtr& tower, const FieldElement& d);
    FieldTower() = default;

    TowerPtr parent_;
    std::vector<Generator> generators_;
};

/// Extends `tower` by a square root of `d`. `d` must be a nonzero real element that
/// is not already a square in `tower`.
TowerPtr adjoin_sqrt(const TowerPtr& tower, const FieldElement& d);
/// Tower built from integer radicands in order, e.g. {-1, 2, 3} for Q(i)(sqrt 2)(sqrt 3).
TowerPtr make_tower(std::span<const long> radicands);
TowerPtr default_tower();

FieldElement conj(const FieldElement& x);
FieldElement abs_squared(const FieldElement& x);
bool is_real(const FieldElement& x);
/// Exact sign of a real element (-1, 0, +1).
int real_sign(const FieldElement& x);
/// Compares the real element x with the rational q exactly.
int compare_real(const FieldElement& x, const Rational& q);

/// Some y in the tower with y^2 = x, if one exists.
std::optional<FieldElement> sqrt_in_tower(const FieldElement& x);
/// Square root of a real element following the branch rule: positive real root
/// for x > 0, root with positive imaginary part for x < 0.
std::optional<FieldElement> principal_sqrt(const FieldElement& x);

/// Complex rectangle guaranteed to contain the value of x under the branch rules.
ComplexInterval embed(const FieldElement& x, unsigned precision_bits);

/// Total order on canonical coordinates (not a numeric order).
bool canonical_less(const FieldElement& a, const FieldElement& b);

/// Deterministic constant-literal text: rational part, then square roots, then i.
std::string to_string(const FieldElement& x);
/// Signed terms of x in basis order: (negative?, unsigned body). A bare rational body
/// is its absolute value; otherwise "q*monomial" or "monomial" when |q| = 1.
std::vector<std::pair<bool, std::string>> signed_terms(const FieldElement& x);
std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace diffrad
