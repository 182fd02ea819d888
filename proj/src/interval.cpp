#include "diffrad/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace diffrad {

Interval::Interval(mpfr_prec_t precision) {
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const mpq_class& value, mpfr_prec_t precision) {
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision()) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision());
        mpfr_set_prec(hi_, other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::midpoint() const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

double Interval::radius() const {
    double mid = midpoint();
    double a = std::abs(mid - lower());
    double b = std::abs(upper() - mid);
    double r = std::max(a, b);
    return std::nextafter(r, std::numeric_limits<double>::infinity());
}

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::strictly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::strictly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::contains(double x) const {
    return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0;
}

Interval Interval::operator-() const {
    Interval out(precision());
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision(), b.precision()));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision(), b.precision()));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval out(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    for (auto* x : {&a.lo_, &a.hi_}) {
        for (auto* y : {&b.lo_, &b.hi_}) {
            mpfr_mul(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return out;
}

Interval Interval::sqrt() const {
    Interval out(precision());
    if (mpfr_sgn(lo_) <= 0) {
        mpfr_set_zero(out.lo_, 1);
    } else {
        mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
    }
    if (mpfr_sgn(hi_) <= 0) {
        mpfr_set_zero(out.hi_, 1);
    } else {
        mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
    }
    return out;
}

Interval Interval::log() const {
    if (!strictly_positive()) throw std::domain_error("Interval::log of a non-positive interval");
    Interval out(precision());
    mpfr_log(out.lo_, lo_, MPFR_RNDD);
    mpfr_log(out.hi_, hi_, MPFR_RNDU);
    return out;
}

Interval Interval::half() const {
    Interval out(*this);
    mpfr_div_2ui(out.lo_, out.lo_, 1, MPFR_RNDD);
    mpfr_div_2ui(out.hi_, out.hi_, 1, MPFR_RNDU);
    return out;
}

std::string Interval::to_string(int digits) const {
    auto fmt = [digits](const mpfr_t v, mpfr_rnd_t rnd) {
        char* buf = nullptr;
        mpfr_asprintf(&buf, rnd == MPFR_RNDD ? "%.*RDg" : "%.*RUg", digits, v);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    };
    if (is_point()) return fmt(lo_, MPFR_RNDD);
    return "[" + fmt(lo_, MPFR_RNDD) + ", " + fmt(hi_, MPFR_RNDU) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.to_string(); }

}  // namespace diffrad
