#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace diffrad {

/// Closed real interval with MPFR endpoints; every operation rounds the lower
/// endpoint down and the upper endpoint up, so the true value is always enclosed.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision = 64);
    Interval(const mpq_class& value, mpfr_prec_t precision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(lo_); }

    double lower() const;  // rounded toward -inf
    double upper() const;  // rounded toward +inf
    double midpoint() const;
    /// Upper bound on |x - midpoint()| for every x in the interval, including the
    /// rounding of the midpoint to double.
    double radius() const;
    double width() const;

    bool is_point() const;
    bool contains_zero() const;
    bool strictly_positive() const;
    bool strictly_negative() const;
    bool contains(double x) const;

    Interval operator-() const;
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);

    /// Square root of the non-negative part of the interval.
    Interval sqrt() const;
    /// Natural logarithm; the interval must be strictly positive.
    Interval log() const;
    /// Halves both endpoints (exact).
    Interval half() const;

    std::string to_string(int digits = 17) const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

/// Rectangle in the complex plane.
struct ComplexInterval {
    Interval re;
    Interval im;

    explicit ComplexInterval(mpfr_prec_t precision = 64) : re(precision), im(precision) {}
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace diffrad
