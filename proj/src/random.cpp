#include "diffrad/random.hpp"

#include <algorithm>

namespace diffrad {

RandomSource::RandomSource(std::uint64_t seed, TowerPtr tower) : tower_(std::move(tower)), rng_(seed) {}

long RandomSource::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

bool RandomSource::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

FieldElement RandomSource::point() {
    const long den = coin(0.2) ? 2 : 1;
    FieldElement w = FieldElement::rational(tower_, Rational(uniform(-4, 4), den));
    if (tower_->generator_count() > 0 && coin(0.3)) {
        w += FieldElement::rational(tower_, uniform(-2, 2)) * FieldElement::generator(tower_, 0);
    }
    if (tower_->generator_count() > 1 && coin(0.1)) {
        w += FieldElement::rational(tower_, uniform(-1, 1)) * FieldElement::generator(tower_, 1);
    }
    return w;
}

FieldElement RandomSource::constant() {
    FieldElement c;
    do {
        c = point();
    } while (c.is_zero());
    return c;
}

FieldElement RandomSource::shift() {
    switch (uniform(0, 4)) {
    case 0: return FieldElement::rational(tower_, 1);
    case 1: return FieldElement::rational(tower_, 2);
    case 2: return FieldElement::rational(tower_, Rational(1, 2));
    case 3:
        if (tower_->generator_count() > 0 && tower_->generator(0).sign < 0) return FieldElement::generator(tower_, 0);
        return FieldElement::rational(tower_, 3);
    default: return FieldElement::rational(tower_, -1);
    }
}

FactoredPoly RandomSource::factored(const FieldElement& kappa, long min_deg, long max_deg) {
    const long target = uniform(min_deg, max_deg);
    std::vector<FactoredPoly::Factor> roots;
    long deg = 0;
    while (deg < target) {
        FieldElement w = point();
        const long length = uniform(1, 4);
        for (long j = 0; j < length && deg < target; ++j) {
            const long mult = std::min(uniform(1, 3), target - deg);
            roots.emplace_back(w, mult);
            deg += mult;
            w += kappa;
        }
    }
    return FactoredPoly(constant(), std::move(roots));
}

Polynomial RandomSource::polynomial(const FieldElement& kappa, long min_deg, long max_deg) {
    return expand(factored(kappa, min_deg, max_deg));
}

Divisor RandomSource::divisor(const FieldElement& kappa, long max_points) {
    Divisor d;
    const long target = uniform(0, max_points);
    long count = 0;
    while (count < target) {
        FieldElement w = point();
        const long length = uniform(1, 4);
        for (long j = 0; j < length && count < target; ++j, ++count) {
            d.add(w, uniform(1, 3));
            w += kappa;
        }
    }
    return d;
}

}  // namespace diffrad
