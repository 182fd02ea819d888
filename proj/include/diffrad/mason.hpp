#pragma once

#include <optional>
#include <span>

#include "diffrad/field.hpp"
#include "diffrad/poly.hpp"
#include "diffrad/report.hpp"

namespace diffrad {

enum class Coprimality { Pairwise, Setwise };

std::string_view to_string(Coprimality mode) noexcept;

/// det[p_j(z + i*kappa)]_{i,j}, computed by fraction-free (Bareiss) elimination over the polynomial ring.
Polynomial casoratian(std::span<const Polynomial> ps, const FieldElement& kappa);

/// Rank of the coefficient matrix equals the number of polynomials.
bool linearly_independent(std::span<const Polynomial> ps);

struct CoprimeResult {
    bool coprime = true;
    std::optional<Polynomial> witness;  // first nontrivial common factor found
    std::size_t first = 0;
    std::size_t second = 0;
};
CoprimeResult pairwise_coprime(std::span<const Polynomial> ps);
bool setwise_coprime(std::span<const Polynomial> ps);

/// prod_i gcd(a_i(z), a_i(z+kappa), ..., a_i(z+(m-1)kappa)), the factor that divides the Casoratian.
Polynomial casoratian_gcd_product(std::span<const Polynomial> as, const FieldElement& kappa, long m);

/// max(deg a, deg b, deg c) <= n~(a) + n~(b) + n~(c) - 1 for coprime a + b = c, not all constant.
CheckReport check_mason_triple(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                               const FieldElement& kappa);

/// a_1 + ... + a_m = a_{m+1}: max deg <= sum of order-m counts - m(m-1)/2.
/// `as` holds all m+1 polynomials, the last one being the sum.
CheckReport check_mason_multi(std::span<const Polynomial> as, const FieldElement& kappa,
                              Coprimality mode = Coprimality::Setwise);

}  // namespace diffrad
