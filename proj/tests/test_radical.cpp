#include <doctest.h>

#include "diffrad/error.hpp"
#include "diffrad/parser.hpp"
#include "diffrad/radical.hpp"
#include "diffrad/random.hpp"
#include "support/oracles.hpp"

using namespace diffrad;

namespace {

const TowerPtr& tower() {
    static const TowerPtr t = default_tower();
    return t;
}

Polynomial P(const std::string& text) { return parse_poly(text, tower()); }
FactoredPoly F(const std::string& text) { return parse_factored(text, tower()); }
const FieldElement one(1L);

}  // namespace

TEST_CASE("single-step radical") {
    const RadicalResult r = diff_radical(P("z^2*(z-1)*(z-2)^3"), one);
    CHECK(r.radical == P("z*(z-2)^3"));
    CHECK(r.cofactor == P("z*(z-1)"));
    CHECK(r.n_tilde == 4);

    const RadicalResult k = diff_radical(P("5"), one);
    CHECK(k.radical == P("1"));
    CHECK(k.n_tilde == 0);
    CHECK(k.leading == FieldElement(5L));

    CHECK(diff_radical(P("z^2*(z+1)"), one).radical == P("z^2"));
    // Leading coefficient is kept separately; the radical is monic.
    const RadicalResult s = diff_radical(P("3*z*(z+1)"), one);
    CHECK(s.radical == P("z"));
    CHECK(scale(s.radical * s.cofactor, s.leading) == P("3*z*(z+1)"));

    CHECK_THROWS_AS(diff_radical(Polynomial(), one), Error);
    CHECK_THROWS_AS(diff_radical(P("z"), FieldElement()), Error);
}

TEST_CASE("order-m radical") {
    const std::string alpha = "(i/(2*sqrt(2)))";
    const Polynomial a1 = P("(2-sqrt(2)*i)*(z+" + alpha + ")*(z+" + alpha + "+1)*(z+" + alpha + "+2)^2");
    CHECK(diff_radical_m(a1, one, 3).n_tilde == 3);
    const Polynomial a3 = P("-4*z*(z+1)*(z+2)*(z+3)");
    CHECK(diff_radical_m(a3, one, 3).n_tilde == 2);

    const Polynomial p = P("z^3*(z+1)*(z-1/2)^2");
    CHECK(diff_radical_m(p, one, 2).radical == diff_radical(p, one).radical);
    try {
        diff_radical_m(p, one, 1);
        FAIL("order 1 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadOrder);
    }
}

TEST_CASE("classical radical") {
    CHECK(classical_radical(P("z^3")).radical == P("z"));
    CHECK(classical_radical(P("z^2*(z+1)")).radical == P("z*(z+1)"));
    CHECK(classical_radical(P("(z^2-1)^2")).radical == P("z^2-1"));
    CHECK(classical_radical(P("(z^2-1)^2")).n_tilde == 2);
}

TEST_CASE("root oracle") {
    const auto ex = radical_exponents(F("1; (0,2), (1,1), (2,3)"), one, 2);
    REQUIRE(ex.size() == 3);
    CHECK(ex[0].second == 1);
    CHECK(ex[1].second == 0);
    CHECK(ex[2].second == 3);
    CHECK(diff_radical_from_roots(F("7;"), one, 2).radical == P("1"));
    CHECK(diff_radical_from_roots(F("1; (0,2), (-1,1)"), one, 2).radical == P("z^2"));
}

TEST_CASE("order-m count against the sum of single-step counts") {
    const auto chain = n_tilde_sum_bound(F("1; (0,1), (-1,1), (-2,1)"), one, 3);
    CHECK(chain.first == oracle::truncated_degree(F("1; (0,1), (-1,1), (-2,1)").factors(), one, 3));
    long single_sum = 0;
    for (long j = 1; j < 3; ++j) {
        single_sum += oracle::truncated_degree(F("1; (0,1), (-1,1), (-2,1)").factors(), one * FieldElement(j), 2);
    }
    CHECK(chain.second == single_sum);
    CHECK(chain.first == 2);
    CHECK(chain.second == 3);

    const auto plain = n_tilde_sum_bound(F("1; (0,1), (1/2,2), (i,1)"), one, 2);
    CHECK(plain.first == plain.second);
    const auto constant = n_tilde_sum_bound(F("4;"), one, 4);
    CHECK(constant.first == 0);
    CHECK(constant.second == 0);
}

TEST_CASE("radical properties on random inputs") {
    RandomSource rs(41);
    for (int trial = 0; trial < 500; ++trial) {
        const FieldElement kappa = rs.shift();
        const FactoredPoly f = rs.factored(kappa, 0, 8);
        const FactoredPoly g = rs.factored(kappa, 0, 6);
        const Polynomial p = expand(f), q = expand(g);
        const RadicalResult rp = diff_radical(p, kappa);

        CHECK(rp.n_tilde <= p.degree());
        CHECK(rp.n_tilde == oracle::truncated_degree(f.factors(), kappa, 2));
        CHECK(monic(p) == rp.cofactor * rp.radical);
        CHECK(p.degree() == rp.cofactor.degree() + rp.n_tilde);

        const unsigned e = p.degree() <= 5 ? 3 : 2;
        CHECK(diff_radical(pow(p, e), kappa).n_tilde == static_cast<long>(e) * rp.n_tilde);

        const RadicalResult rq = diff_radical(q, kappa);
        const long joint = diff_radical(p * q, kappa).n_tilde;
        CHECK(joint <= rp.n_tilde + rq.n_tilde);
        const bool criterion =
            gcd(diff_radical(taylor_shift(p, kappa), -kappa).radical, rq.radical).degree() == 0 &&
            gcd(rp.radical, diff_radical(taylor_shift(q, kappa), -kappa).radical).degree() == 0;
        CHECK((joint == rp.n_tilde + rq.n_tilde) == criterion);

        for (long m = 2; m <= 4; ++m) {
            const RadicalResult rm = diff_radical_m(p, kappa, m);
            CHECK(rm.n_tilde >= rp.n_tilde);
            CHECK(rm.n_tilde == oracle::truncated_degree(f.factors(), kappa, m));
            const auto [lhs, rhs] = n_tilde_sum_bound(f, kappa, m);
            CHECK(lhs == rm.n_tilde);
            CHECK(lhs <= rhs);
        }
    }
}

TEST_CASE("product count equality criterion on constructed pairs") {
    const auto strict = [](const Polynomial& p, const Polynomial& q, const FieldElement& kappa) {
        const bool blocked =
            gcd(diff_radical(taylor_shift(p, kappa), -kappa).radical, diff_radical(q, kappa).radical).degree() > 0 ||
            gcd(diff_radical(p, kappa).radical, diff_radical(taylor_shift(q, kappa), -kappa).radical).degree() > 0;
        const long joint = diff_radical(p * q, kappa).n_tilde;
        const long separate = diff_radical(p, kappa).n_tilde + diff_radical(q, kappa).n_tilde;
        return std::pair{blocked, joint < separate};
    };
    // q supplies the forward neighbour of p's root.
    CHECK(strict(P("z"), P("z+1"), one) == std::pair{true, true});
    CHECK(strict(P("z+1"), P("z"), one) == std::pair{true, true});
    CHECK(strict(P("z^2"), P("(z+1)^3"), one) == std::pair{true, true});
    // Same root in both factors never cancels.
    CHECK(strict(P("z"), P("z"), one) == std::pair{false, false});
    CHECK(strict(P("z"), P("z+5"), one) == std::pair{false, false});
    CHECK(strict(P("z*(z+1)"), P("z+2"), one) == std::pair{true, true});
    CHECK(strict(P("z"), P("z+i"), one) == std::pair{false, false});
    CHECK(strict(P("z"), P("z+i"), FieldElement::generator(tower(), 0)) == std::pair{true, true});
}
