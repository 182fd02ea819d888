#include "diffrad/field.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "diffrad/error.hpp"

namespace diffrad {

namespace {

using Coords = std::vector<Rational>;
using CSpan = std::span<const Rational>;
using MSpan = std::span<Rational>;

bool all_zero(CSpan x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) == 0; });
}

void set_zero(MSpan x) {
    for (auto& q : x) q = 0;
}

// out = x * y at the given level; out must not alias x or y.
void mul_into(const FieldTower& t, std::size_t level, CSpan x, CSpan y, MSpan out) {
    if (level == 0) {
        out[0] = x[0] * y[0];
        return;
    }
    if (all_zero(x) || all_zero(y)) {
        set_zero(out);
        return;
    }
    const std::size_t h = std::size_t{1} << (level - 1);
    CSpan a = x.first(h), b = x.subspan(h), c = y.first(h), e = y.subspan(h);
    MSpan lo = out.first(h), hi = out.subspan(h);
    const bool bz = all_zero(b), ez = all_zero(e);
    if (bz && ez) {
        mul_into(t, level - 1, a, c, lo);
        set_zero(hi);
        return;
    }
    if (bz) {
        mul_into(t, level - 1, a, c, lo);
        mul_into(t, level - 1, a, e, hi);
        return;
    }
    if (ez) {
        mul_into(t, level - 1, a, c, lo);
        mul_into(t, level - 1, b, c, hi);
        return;
    }
    Coords tmp(h), tmp2(h);
    // lo = a c + b e d
    mul_into(t, level - 1, a, c, lo);
    mul_into(t, level - 1, b, e, tmp);
    const Coords& d = t.generator(level - 1).radicand.coords();
    if (all_zero(CSpan(d).subspan(1))) {
        for (std::size_t k = 0; k < h; ++k) lo[k] += tmp[k] * d[0];
    } else {
        mul_into(t, level - 1, tmp, d, tmp2);
        for (std::size_t k = 0; k < h; ++k) lo[k] += tmp2[k];
    }
    // hi = a e + b c
    mul_into(t, level - 1, a, e, hi);
    mul_into(t, level - 1, b, c, tmp);
    for (std::size_t k = 0; k < h; ++k) hi[k] += tmp[k];
}

Coords mul(const FieldTower& t, std::size_t level, CSpan x, CSpan y) {
    Coords out(x.size());
    mul_into(t, level, x, y, out);
    return out;
}

Coords inverse(const FieldTower& t, std::size_t level, CSpan x) {
    if (level == 0) return {1 / Rational(x[0])};
    const std::size_t h = std::size_t{1} << (level - 1);
    CSpan a = x.first(h), b = x.subspan(h);
    Coords out(x.size());
    if (all_zero(b)) {
        Coords ai = inverse(t, level - 1, a);
        std::copy(ai.begin(), ai.end(), out.begin());
        return out;
    }
    // (a + b s)^{-1} = (a - b s) / (a^2 - b^2 d)
    Coords norm = mul(t, level - 1, a, a);
    Coords bb = mul(t, level - 1, b, b);
    Coords bbd = mul(t, level - 1, bb, t.generator(level - 1).radicand.coords());
    for (std::size_t k = 0; k < h; ++k) norm[k] -= bbd[k];
    Coords ninv = inverse(t, level - 1, norm);
    Coords lo = mul(t, level - 1, a, ninv);
    Coords hi = mul(t, level - 1, b, ninv);
    for (std::size_t k = 0; k < h; ++k) {
        out[k] = lo[k];
        out[h + k] = -hi[k];
    }
    return out;
}

Coords conj_coords(const FieldTower& t, std::size_t level, CSpan x) {
    if (level == 0) return {x[0]};
    const std::size_t h = std::size_t{1} << (level - 1);
    Coords lo = conj_coords(t, level - 1, x.first(h));
    Coords hi = conj_coords(t, level - 1, x.subspan(h));
    Coords out(x.size());
    const bool flip = t.generator(level - 1).sign < 0;
    for (std::size_t k = 0; k < h; ++k) {
        out[k] = lo[k];
        out[h + k] = flip ? Rational(-hi[k]) : hi[k];
    }
    return out;
}

std::optional<Rational> sqrt_rational(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const Integer& n = q.get_num();
    const Integer& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<Coords> sqrt_coords(const FieldTower& t, std::size_t level, CSpan x) {
    if (level == 0) {
        auto r = sqrt_rational(x[0]);
        if (!r) return std::nullopt;
        return Coords{*r};
    }
    const std::size_t h = std::size_t{1} << (level - 1);
    CSpan a = x.first(h), b = x.subspan(h);
    const Coords& d = t.generator(level - 1).radicand.coords();
    Coords out(x.size());
    if (all_zero(b)) {
        if (auto r = sqrt_coords(t, level - 1, a)) {
            std::copy(r->begin(), r->end(), out.begin());
            return out;
        }
        // a = e^2 d  ->  e = sqrt(a / d), y = e s
        Coords ad = mul(t, level - 1, a, inverse(t, level - 1, d));
        if (auto r = sqrt_coords(t, level - 1, ad)) {
            std::copy(r->begin(), r->end(), out.begin() + static_cast<std::ptrdiff_t>(h));
            return out;
        }
        return std::nullopt;
    }
    // y = c + e s:  c^2 + e^2 d = a,  2 c e = b,  (c^2 - e^2 d)^2 = a^2 - b^2 d.
    Coords norm = mul(t, level - 1, a, a);
    Coords bbd = mul(t, level - 1, mul(t, level - 1, b, b), d);
    for (std::size_t k = 0; k < h; ++k) norm[k] -= bbd[k];
    auto root_norm = sqrt_coords(t, level - 1, norm);
    if (!root_norm) return std::nullopt;
    for (int sign : {1, -1}) {
        Coords c2(h);
        for (std::size_t k = 0; k < h; ++k) c2[k] = (a[k] + sign * (*root_norm)[k]) / 2;
        auto c = sqrt_coords(t, level - 1, c2);
        if (!c || all_zero(*c)) continue;
        Coords two_c = *c;
        for (auto& q : two_c) q *= 2;
        Coords e = mul(t, level - 1, b, inverse(t, level - 1, two_c));
        std::copy(c->begin(), c->end(), out.begin());
        std::copy(e.begin(), e.end(), out.begin() + static_cast<std::ptrdiff_t>(h));
        return out;
    }
    return std::nullopt;
}

ComplexInterval embed_coords(std::size_t level, CSpan x, const std::vector<ComplexInterval>& gens,
                             mpfr_prec_t prec) {
    if (level == 0) return ComplexInterval(Interval(x[0], prec), Interval(prec));
    const std::size_t h = std::size_t{1} << (level - 1);
    ComplexInterval lo = embed_coords(level - 1, x.first(h), gens, prec);
    if (all_zero(x.subspan(h))) return lo;
    ComplexInterval hi = embed_coords(level - 1, x.subspan(h), gens, prec);
    return lo + hi * gens[level - 1];
}

std::vector<ComplexInterval> embed_generators(const FieldTower& t, mpfr_prec_t prec) {
    std::vector<ComplexInterval> gens;
    gens.reserve(t.generator_count());
    for (std::size_t j = 0; j < t.generator_count(); ++j) {
        const Generator& g = t.generator(j);
        ComplexInterval d = embed_coords(j, g.radicand.coords(), gens, prec);
        // The radicand is real, so only its real part matters.
        if (g.sign > 0) {
            gens.emplace_back(d.re.sqrt(), Interval(prec));
        } else {
            gens.emplace_back(Interval(prec), (-d.re).sqrt());
        }
    }
    return gens;
}

const TowerPtr& common_tower(const TowerPtr& a, const TowerPtr& b) {
    if (a == b) return a;
    if (a->extends(*b)) return a;
    if (b->extends(*a)) return b;
    throw Error(ErrorCode::TowerMismatch, "elements of " + a->describe() + " and " + b->describe());
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string generator_symbol(const FieldElement& radicand) {
    if (auto q = radicand.as_rational()) {
        if (*q == -1) return "i";
        return "sqrt(" + rational_text(*q) + ")";
    }
    return "sqrt(" + to_string(radicand) + ")";
}

}  // namespace

// FieldElement ---------------------------------------------------------------

FieldElement::FieldElement() : tower_(FieldTower::rationals()), coords_{Rational(0)} {}

FieldElement::FieldElement(long value) : tower_(FieldTower::rationals()), coords_{Rational(value)} {}

FieldElement::FieldElement(const Rational& value) : tower_(FieldTower::rationals()), coords_{value} {
    coords_[0].canonicalize();
}

FieldElement::FieldElement(TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
    if (!tower_) tower_ = FieldTower::rationals();
    if (coords_.size() != tower_->dimension()) {
        throw Error(ErrorCode::InvalidArgument, "coordinate count " + std::to_string(coords_.size()) +
                                                    " does not match tower dimension " +
                                                    std::to_string(tower_->dimension()));
    }
    for (auto& q : coords_) q.canonicalize();
}

FieldElement FieldElement::rational(TowerPtr tower, const Rational& value) {
    std::vector<Rational> c(tower->dimension());
    c[0] = value;
    return FieldElement(std::move(tower), std::move(c));
}

FieldElement FieldElement::generator(TowerPtr tower, std::size_t index) {
    if (index >= tower->generator_count()) {
        throw Error(ErrorCode::InvalidArgument, "generator index out of range");
    }
    std::vector<Rational> c(tower->dimension());
    c[std::size_t{1} << index] = 1;
    return FieldElement(std::move(tower), std::move(c));
}

bool FieldElement::is_zero() const { return all_zero(coords_); }

bool FieldElement::is_one() const { return coords_[0] == 1 && all_zero(CSpan(coords_).subspan(1)); }

std::optional<Rational> FieldElement::as_rational() const {
    if (!all_zero(CSpan(coords_).subspan(1))) return std::nullopt;
    return coords_[0];
}

FieldElement FieldElement::lifted_to(const TowerPtr& target) const {
    if (target == tower_) return *this;
    if (!target->extends(*tower_)) {
        throw Error(ErrorCode::TowerMismatch, "cannot lift from " + tower_->describe() + " into " + target->describe());
    }
    std::vector<Rational> c(target->dimension());
    std::copy(coords_.begin(), coords_.end(), c.begin());
    FieldElement out;
    out.tower_ = target;
    out.coords_ = std::move(c);
    return out;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    FieldElement out;
    out.tower_ = tower_;
    out.coords_ = diffrad::inverse(*tower_, tower_->generator_count(), coords_);
    return out;
}

FieldElement FieldElement::operator-() const {
    FieldElement out = *this;
    for (auto& q : out.coords_) q = -q;
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
    if (tower_ != other.tower_) {
        const TowerPtr& t = common_tower(tower_, other.tower_);
        if (t != tower_) *this = lifted_to(t);
        if (t != other.tower_) return *this += other.lifted_to(t);
    }
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
    if (tower_ != other.tower_) {
        const TowerPtr& t = common_tower(tower_, other.tower_);
        if (t != tower_) *this = lifted_to(t);
        if (t != other.tower_) return *this -= other.lifted_to(t);
    }
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
    if (tower_ != other.tower_) {
        const TowerPtr& t = common_tower(tower_, other.tower_);
        if (t != tower_) *this = lifted_to(t);
        if (t != other.tower_) return *this *= other.lifted_to(t);
    }
    if (auto q = other.as_rational()) {
        for (auto& c : coords_) c *= *q;
        return *this;
    }
    coords_ = mul(*tower_, tower_->generator_count(), coords_, other.coords_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
    if (other.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    if (auto q = other.as_rational()) {
        if (tower_ != other.tower_) {
            const TowerPtr& t = common_tower(tower_, other.tower_);
            if (t != tower_) *this = lifted_to(t);
        }
        for (auto& c : coords_) c /= *q;
        return *this;
    }
    return *this *= other.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.tower_ == b.tower_) return a.coords_ == b.coords_;
    const TowerPtr& t = common_tower(a.tower_, b.tower_);
    return a.lifted_to(t).coords_ == b.lifted_to(t).coords_;
}

// FieldTower -----------------------------------------------------------------

const TowerPtr& FieldTower::rationals() {
    static const TowerPtr q{new FieldTower()};
    return q;
}

TowerPtr FieldTower::prefix(std::size_t k) const {
    if (k > generators_.size()) throw Error(ErrorCode::InvalidArgument, "prefix longer than tower");
    TowerPtr t = shared_from_this();
    while (t->generator_count() > k) t = t->parent_;
    return t;
}

bool FieldTower::extends(const FieldTower& base) const {
    if (&base == this) return true;
    if (base.generators_.size() > generators_.size()) return false;
    for (std::size_t j = 0; j < base.generators_.size(); ++j) {
        if (base.generators_[j].radicand.coords() != generators_[j].radicand.coords()) return false;
    }
    return true;
}

bool FieldTower::same_as(const FieldTower& other) const {
    return generators_.size() == other.generators_.size() && extends(other);
}

std::string FieldTower::describe() const {
    std::string s = "Q";
    for (const auto& g : generators_) s += "(" + g.symbol + ")";
    return s;
}

TowerPtr adjoin_sqrt(const TowerPtr& tower, const FieldElement& d) {
    FieldElement rad = d.lifted_to(tower);
    if (rad.is_zero()) throw Error(ErrorCode::ZeroRadicand, "cannot adjoin sqrt(0)");
    if (!is_real(rad)) {
        throw Error(ErrorCode::NonRealRadicand, "radicand " + to_string(rad) + " is not real");
    }
    if (sqrt_in_tower(rad)) {
        throw Error(ErrorCode::DIsSquare, to_string(rad) + " is already a square in " + tower->describe());
    }
    std::shared_ptr<FieldTower> t(new FieldTower());
    t->parent_ = tower;
    t->generators_ = tower->generators_;
    Generator g;
    g.sign = real_sign(rad);
    g.symbol = generator_symbol(rad);
    g.radicand = std::move(rad);
    t->generators_.push_back(std::move(g));
    return t;
}

TowerPtr make_tower(std::span<const long> radicands) {
    TowerPtr t = FieldTower::rationals();
    for (long d : radicands) t = adjoin_sqrt(t, FieldElement(d));
    return t;
}

TowerPtr default_tower() {
    static const TowerPtr t = [] {
        const long rads[] = {-1, 2, 3};
        return make_tower(rads);
    }();
    return t;
}

// Free functions -------------------------------------------------------------

FieldElement conj(const FieldElement& x) {
    const auto& t = x.tower();
    return FieldElement(t, conj_coords(*t, t->generator_count(), x.coords()));
}

FieldElement abs_squared(const FieldElement& x) { return x * conj(x); }

bool is_real(const FieldElement& x) { return conj(x) == x; }

int real_sign(const FieldElement& x) {
    if (x.is_zero()) return 0;
    if (auto q = x.as_rational()) return sgn(*q);
    if (!is_real(x)) throw Error(ErrorCode::InvalidArgument, "sign of a non-real element " + to_string(x));
    for (unsigned bits = 64; bits <= (1u << 16); bits *= 2) {
        ComplexInterval e = embed(x, bits);
        if (e.re.strictly_positive()) return 1;
        if (e.re.strictly_negative()) return -1;
    }
    throw Error(ErrorCode::InvalidArgument, "sign refinement did not terminate for " + to_string(x));
}

int compare_real(const FieldElement& x, const Rational& q) { return real_sign(x - FieldElement(q)); }

std::optional<FieldElement> sqrt_in_tower(const FieldElement& x) {
    const auto& t = x.tower();
    auto r = sqrt_coords(*t, t->generator_count(), x.coords());
    if (!r) return std::nullopt;
    return FieldElement(t, std::move(*r));
}

std::optional<FieldElement> principal_sqrt(const FieldElement& x) {
    auto r = sqrt_in_tower(x);
    if (!r || r->is_zero()) return r;
    const int s = real_sign(x);
    // r is real when x > 0 and purely imaginary when x < 0.
    for (unsigned bits = 64; bits <= (1u << 16); bits *= 2) {
        ComplexInterval e = embed(*r, bits);
        const Interval& part = s > 0 ? e.re : e.im;
        if (part.strictly_positive()) return r;
        if (part.strictly_negative()) return -*r;
    }
    throw Error(ErrorCode::InvalidArgument, "branch selection did not terminate");
}

ComplexInterval embed(const FieldElement& x, unsigned precision_bits) {
    if (precision_bits < 8) throw Error(ErrorCode::InvalidArgument, "precision_bits must be at least 8");
    const auto& t = x.tower();
    const auto prec = static_cast<mpfr_prec_t>(precision_bits + 16 + 8 * t->generator_count());
    if (x.is_zero()) return ComplexInterval(prec);
    auto gens = embed_generators(*t, prec);
    return embed_coords(t->generator_count(), x.coords(), gens, prec);
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
    const TowerPtr& t = common_tower(a.tower(), b.tower());
    const FieldElement la = a.lifted_to(t), lb = b.lifted_to(t);
    const auto& ca = la.coords();
    const auto& cb = lb.coords();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::vector<std::pair<bool, std::string>> signed_terms(const FieldElement& x) {
    std::vector<std::pair<bool, std::string>> out;
    const auto& t = *x.tower();
    const auto& c = x.coords();
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
        if (sgn(c[idx]) == 0) continue;
        const bool negative = sgn(c[idx]) < 0;
        const Rational mag = abs(c[idx]);
        std::vector<std::string> roots, units;
        for (std::size_t j = 0; j < t.generator_count(); ++j) {
            if (!(idx & (std::size_t{1} << j))) continue;
            const auto& sym = t.generator(j).symbol;
            (sym == "i" ? units : roots).push_back(sym);
        }
        std::string mono;
        for (const auto& part : roots) mono += (mono.empty() ? "" : "*") + part;
        for (const auto& part : units) mono += (mono.empty() ? "" : "*") + part;
        std::string body;
        if (mono.empty()) {
            body = rational_text(mag);
        } else if (mag == 1) {
            body = mono;
        } else {
            body = rational_text(mag) + "*" + mono;
        }
        out.emplace_back(negative, std::move(body));
    }
    return out;
}

std::string to_string(const FieldElement& x) {
    auto terms = signed_terms(x);
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& [neg, body] = terms[k];
        if (k == 0) {
            s += neg ? "-" + body : body;
        } else {
            s += neg ? " - " : " + ";
            s += body;
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << to_string(x); }

}  // namespace diffrad
