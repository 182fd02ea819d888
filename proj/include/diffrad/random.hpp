#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "diffrad/divisor.hpp"
#include "diffrad/field.hpp"
#include "diffrad/poly.hpp"

namespace diffrad {

/// Seeded generators for property checks. Roots are drawn from a small grid in the tower
/// and grouped into kappa-chains w, w + kappa, w + 2 kappa, ... so that shifts actually overlap.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, TowerPtr tower = default_tower());

    const TowerPtr& tower() const noexcept { return tower_; }
    std::mt19937_64& engine() noexcept { return rng_; }

    long uniform(long lo, long hi);  // inclusive
    bool coin(double p = 0.5);

    /// Small grid point a + b i (+ c sqrt 2) with a, b, c small, some halves.
    FieldElement point();
    /// Nonzero constant from the same grid.
    FieldElement constant();
    /// One of 1, 2, 1/2, i, or -1.
    FieldElement shift();

    /// Random product of chains of total degree in [min_deg, max_deg].
    FactoredPoly factored(const FieldElement& kappa, long min_deg, long max_deg);
    Polynomial polynomial(const FieldElement& kappa, long min_deg, long max_deg);
    Divisor divisor(const FieldElement& kappa, long max_points);

private:
    TowerPtr tower_;
    std::mt19937_64 rng_;
};

}  // namespace diffrad
