#pragma once

// Independent reference computations used only by the tests. None of these call the
// gcd, Bareiss or root-oracle code paths they are compared against.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "diffrad/field.hpp"
#include "diffrad/poly.hpp"

namespace oracle {

using diffrad::FieldElement;
using diffrad::Polynomial;
using Roots = std::vector<std::pair<FieldElement, long>>;

// Laplace expansion along the first row.
inline Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    Polynomial det;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) row.push_back(a[r][c]);
            }
            minor.push_back(std::move(row));
        }
        Polynomial term = a[0][col] * cofactor_det(minor);
        det = (col % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// p(z + s) by substituting the binomial (z + s) into the coefficient list, no Horner recentering.
inline Polynomial substitute_shift(const Polynomial& p, const FieldElement& s) {
    const Polynomial lin({s, FieldElement(1L)});
    Polynomial out, power = Polynomial::constant(FieldElement(1L));
    for (const auto& c : p.coeffs()) {
        out += Polynomial::constant(c) * power;
        power *= lin;
    }
    return out;
}

inline Polynomial casoratian(const std::vector<Polynomial>& ps, const FieldElement& kappa) {
    std::vector<std::vector<Polynomial>> a(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (const auto& p : ps) a[i].push_back(substitute_shift(p, kappa * FieldElement(static_cast<long>(i))));
    }
    return cofactor_det(a);
}

inline long mult_of(const Roots& roots, const FieldElement& w) {
    long total = 0;
    for (const auto& [r, m] : roots) {
        if (r == w) total += m;
    }
    return total;
}

// Distinct roots with summed multiplicities, in first-seen order.
inline Roots merged(const Roots& roots) {
    Roots out;
    for (const auto& [r, m] : roots) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == r; });
        if (it == out.end()) {
            out.emplace_back(r, m);
        } else {
            it->second += m;
        }
    }
    return out;
}

// d(w) = ord_w - min_{0 <= j < shifts} ord_{w + j kappa}, summed.
inline long truncated_degree(const Roots& roots, const FieldElement& kappa, long shifts) {
    long total = 0;
    for (const auto& [w, m] : merged(roots)) {
        long lowest = m;
        for (long j = 1; j < shifts; ++j) {
            lowest = std::min(lowest, mult_of(roots, w + kappa * FieldElement(j)));
        }
        total += m - lowest;
    }
    return total;
}

inline Polynomial product_of_linears(const Roots& roots) {
    Polynomial out = Polynomial::constant(FieldElement(1L));
    for (const auto& [r, m] : roots) {
        for (long k = 0; k < m; ++k) out *= Polynomial({-r, FieldElement(1L)});
    }
    return out;
}

}  // namespace oracle
