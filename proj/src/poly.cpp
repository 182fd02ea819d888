#include "diffrad/poly.hpp"

#include <algorithm>

#include "diffrad/error.hpp"

namespace diffrad {

Polynomial::Polynomial(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(std::vector<FieldElement>{c}); }

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t power) {
    std::vector<FieldElement> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const FieldElement& root) {
    return Polynomial(std::vector<FieldElement>{-root, FieldElement(1L)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : FieldElement();
}

FieldElement Polynomial::leading() const { return coeffs_.empty() ? FieldElement() : coeffs_.back(); }

FieldElement Polynomial::operator()(const FieldElement& at) const {
    FieldElement acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
        if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    }
    return true;
}

Polynomial scale(const Polynomial& p, const FieldElement& c) {
    std::vector<FieldElement> v = p.coeffs();
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(FieldElement(1L));
    Polynomial base = p;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero() || p.leading().is_one()) return p;
    return scale(p, p.leading().inverse());
}

Polynomial taylor_shift(const Polynomial& p, const FieldElement& shift) {
    if (shift.is_zero() || p.is_constant()) return p;
    // Horner in the shifted variable: acc <- acc * (z + shift) + c.
    const auto& c = p.coeffs();
    std::vector<FieldElement> acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc.emplace_back();
        for (std::size_t k = acc.size() - 1; k > 0; --k) {
            acc[k] = acc[k - 1] + acc[k] * shift;
        }
        acc[0] = acc[0] * shift + *it;
    }
    return Polynomial(std::move(acc));
}

Polynomial delta(const Polynomial& p, const FieldElement& kappa) {
    if (kappa.is_zero()) throw Error(ErrorCode::ZeroShift, "difference step must be nonzero");
    return taylor_shift(p, kappa) - p;
}

Polynomial derivative(const Polynomial& p) {
    if (p.is_constant()) return {};
    std::vector<FieldElement> v(p.coeffs().size() - 1);
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) {
        v[k - 1] = p.coeffs()[k] * FieldElement(static_cast<long>(k));
    }
    return Polynomial(std::move(v));
}

DivMod divmod(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (p.degree() < d.degree()) return {Polynomial(), p};
    std::vector<FieldElement> rem = p.coeffs();
    const auto& dc = d.coeffs();
    const std::size_t dn = dc.size() - 1;
    const FieldElement lead_inv = d.leading().inverse();
    std::vector<FieldElement> quot(rem.size() - dn);
    for (std::size_t k = rem.size(); k-- > dn;) {
        if (rem[k].is_zero()) continue;
        FieldElement f = rem[k] * lead_inv;
        const std::size_t shift = k - dn;
        for (std::size_t j = 0; j <= dn; ++j) {
            if (!dc[j].is_zero()) rem[shift + j] -= f * dc[j];
        }
        quot[shift] = std::move(f);
    }
    rem.resize(dn);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw Error(ErrorCode::NotDivisible, "remainder is nonzero");
    return q;
}

bool divides(const Polynomial& d, const Polynomial& p) {
    if (d.is_zero()) return p.is_zero();
    return divmod(p, d).remainder.is_zero();
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    Polynomial a = monic(p), b = monic(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = monic(divmod(a, b).remainder);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Polynomial multi_gcd(std::span<const Polynomial> ps) {
    if (ps.empty()) throw Error(ErrorCode::EmptyList, "multi_gcd of an empty list");
    Polynomial g;
    bool any = false;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        g = any ? gcd(g, p) : monic(p);
        any = true;
        if (g.degree() == 0) break;
    }
    if (!any) throw Error(ErrorCode::BothZero, "multi_gcd of all-zero polynomials");
    return g;
}

long ord_at(const Polynomial& p, const FieldElement& w) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "order of vanishing of the zero polynomial");
    long k = 0;
    std::vector<FieldElement> c = p.coeffs();
    while (c.size() > 1) {
        // Synthetic division by (z - w).
        std::vector<FieldElement> q(c.size() - 1);
        FieldElement acc;
        for (std::size_t j = c.size(); j-- > 1;) {
            acc = acc * w + c[j];
            q[j - 1] = acc;
        }
        acc = acc * w + c[0];
        if (!acc.is_zero()) break;
        ++k;
        c = std::move(q);
    }
    return k;
}

FactoredPoly::FactoredPoly(FieldElement leading, std::vector<Factor> factors) : leading_(std::move(leading)) {
    if (leading_.is_zero()) throw Error(ErrorCode::ZeroLeading, "leading coefficient must be nonzero");
    for (auto& [root, mult] : factors) {
        if (mult <= 0) {
            throw Error(ErrorCode::NonPositiveMultiplicity, "multiplicity " + std::to_string(mult) + " of root " +
                                                                 to_string(root));
        }
        auto it = std::find_if(factors_.begin(), factors_.end(), [&](const Factor& f) { return f.first == root; });
        if (it != factors_.end()) {
            it->second += mult;
        } else {
            factors_.emplace_back(std::move(root), mult);
        }
    }
}

long FactoredPoly::degree() const noexcept {
    long d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

long FactoredPoly::multiplicity(const FieldElement& w) const {
    for (const auto& [root, mult] : factors_) {
        if (root == w) return mult;
    }
    return 0;
}

Polynomial expand(const FactoredPoly& f) {
    std::vector<FieldElement> c{f.leading()};
    for (const auto& [root, mult] : f.factors()) {
        for (long m = 0; m < mult; ++m) {
            // c <- c * (z - root)
            c.emplace_back();
            for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - c[k] * root;
            c[0] = -(c[0] * root);
        }
    }
    return Polynomial(std::move(c));
}

}  // namespace diffrad
