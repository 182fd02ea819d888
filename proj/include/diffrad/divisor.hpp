#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "diffrad/field.hpp"
#include "diffrad/poly.hpp"
#include "diffrad/report.hpp"

namespace diffrad {

/// Finitely supported zero divisor: point -> positive multiplicity.
class Divisor {
public:
    using Point = std::pair<FieldElement, long>;

    Divisor() = default;
    /// Repeated points are merged; multiplicities must be positive.
    explicit Divisor(std::vector<Point> points);

    void add(const FieldElement& w, long mult);
    /// Multiplicity at w (0 outside the support).
    long ord(const FieldElement& w) const;
    /// Support in canonical coordinate order.
    std::vector<Point> points() const;
    bool empty() const noexcept { return support_.empty(); }
    std::size_t size() const noexcept { return support_.size(); }
    long degree() const;

    friend bool operator==(const Divisor& a, const Divisor& b);

private:
    struct Less {
        bool operator()(const FieldElement& a, const FieldElement& b) const { return canonical_less(a, b); }
    };
    std::map<FieldElement, long, Less> support_;
};

Divisor divisor_of(const FactoredPoly& f);
/// Divisor of f(z + kappa) given the divisor of f: every point moves to w - kappa.
Divisor shift_divisor(const Divisor& d, const FieldElement& kappa);
/// Divisor of [f]_kappa^n: the sum of the shifts by 0, kappa, ..., (n-1) kappa.
Divisor factorial_divisor(const Divisor& d, const FieldElement& kappa, long n);

/// |w| <= r, decided exactly.
bool in_closed_disc(const FieldElement& w, const Rational& r);

/// Multiplicities inside the closed disc of radius r.
long n_count(const Divisor& d, const Rational& r);
/// Sum over the closed disc of ord_w - min_{0 <= j <= q} ord_{w + j kappa}. Note the q + 1 shifts.
long n_tilde_q(const Divisor& d, const FieldElement& kappa, long q, const Rational& r);
/// Per-point weights ord_w - min_{0 <= j <= q} ord_{w + j kappa}, zeros dropped.
std::vector<Divisor::Point> truncated_weights(const Divisor& d, const FieldElement& kappa, long q);

/// Unintegrated count (exact) and integrated count (enclosed by an interval).
struct CountingValue {
    long n_value = 0;
    double N_value = 0.0;
    double error_bound = 0.0;  // |true N - N_value| <= error_bound
    Interval N_enclosure{64};
};

/// N(r) = sum_{0<|w|<=r} mult_w log(r/|w|) + mult_0 log r.
CountingValue N_integrated(const Divisor& d, const Rational& r, unsigned precision_bits = 128);
/// Same scheme applied to the step function t -> n_tilde_q(d, kappa, q, t).
CountingValue N_tilde_q_integrated(const Divisor& d, const FieldElement& kappa, long q, const Rational& r,
                                   unsigned precision_bits = 128);

/// Absolute tolerance used when comparing integrated counts.
inline constexpr double kIntegratedTolerance = 1e-9;

/// For each radius: n_tilde_q of [f]^n against sum_{i<q} n(r, f(z + i kappa)) exactly, and the
/// integrated counterpart within kIntegratedTolerance for radii >= 1.
CheckReport check_truncation(const Divisor& d, const FieldElement& kappa, long q, long n,
                             std::span<const Rational> radii);

/// Pointwise inequality ord_w(G) <= sum_j (ord_w g_j - min_{0<=i<m} ord_{w+i kappa} g_j) for
/// G = g_1 ... g_{m+1} / Casoratian(g_1..g_m), g_{m+1} = g_1 + ... + g_m. Points outside the
/// known roots are covered by an exact polynomial argument; `radii` adds aggregated n-level entries.
CheckReport check_ord_inequality(std::span<const FactoredPoly> gs, const FieldElement& kappa,
                                 std::span<const Rational> radii = {});

/// Divisor text: one `(root, mult)` per line, `#` comments allowed.
Divisor read_divisor(std::istream& in, const TowerPtr& tower);

}  // namespace diffrad
