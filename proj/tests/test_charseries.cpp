#include "pinidx/charseries.hpp"
#include "pinidx/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace pinidx;
using namespace pinidx::series;

namespace {

RationalSeries series_of(std::vector<Rational> c) {
    const auto order = static_cast<unsigned>(c.size() - 1);
    return {order, std::move(c)};
}

long double evaluate(const RationalSeries& f, long double e) {
    long double acc = 0, pw = 1;
    for (unsigned k = 0; k <= f.order(); ++k, pw *= e) acc += f[k].get_d() * pw;
    return acc;
}

}  // namespace

TEST_CASE("hyperbolic Taylor coefficients") {
    CHECK(hyperbolic(Hyperbolic::Sinh, 1, 5) ==
          series_of({0, 1, 0, make_rational(1, 6), 0, make_rational(1, 120)}));
    CHECK(hyperbolic(Hyperbolic::Tanh, make_rational(1, 4), 3) ==
          series_of({0, make_rational(1, 4), 0, make_rational(-1, 192)}));
    CHECK(hyperbolic(Hyperbolic::Cosh, 0, 4) == RationalSeries::constant(4, 1));
    CHECK(hyperbolic(Hyperbolic::XOverSinh, 0, 4) == RationalSeries::constant(4, 1));
    CHECK(hyperbolic(Hyperbolic::XOverSinh, make_rational(1, 2), 2) == series_of({1, 0, make_rational(-1, 24)}));
}

TEST_CASE("Chern character of a complexified oriented plane bundle") {
    CHECK(ch_rank2_complexified(4) == series_of({2, 0, 1, 0, make_rational(1, 12)}));
    const auto diff = ch_rank2_complexified(2) - hyperbolic(Hyperbolic::Cosh, make_rational(1, 2), 2) * Rational(2);
    CHECK(diff == series_of({0, 0, make_rational(3, 4)}));
}

TEST_CASE("division guards") {
    const auto e = RationalSeries::variable(4);
    CHECK_THROWS_AS(e.inverse(), std::domain_error);
    CHECK_THROWS_AS(RationalSeries::constant(4, 1).divided_by_e(), std::domain_error);
    CHECK(e.divided_by_e() == RationalSeries::constant(3, 1));
    CHECK(RationalSeries::constant(3, 1).times_e() == series_of({0, 1, 0, 0}));
}

TEST_CASE("closed forms at e = 0.4 in long double") {
    const long double e = 0.4L;
    const long double t2 = std::tanh(e / 2);
    const long double a45 = (t2 - e / 2) / (e * t2) + ((e / 2) / std::sinh(e / 2) - 1) / e;
    const long double a8 = std::tanh(e / 4) * std::cosh(e) + (std::cosh(e) - std::cosh(e / 2)) / std::sinh(e / 2);
    CHECK(std::fabs(a45 + 0.5L * std::tanh(e / 4)) < 1e-15L);
    CHECK(std::fabs(a8 - std::sinh(e)) < 1e-15L);
    CHECK(std::fabs(evaluate(a45_lhs(30), e) - a45) < 1e-15L);
    CHECK(std::fabs(evaluate(a8_lhs(30), e) - a8) < 1e-15L);
}

TEST_CASE("appendix identities") {
    CHECK(identity_a45(24));
    CHECK(identity_a8(24));
    CHECK(identity_a45(40));
    CHECK(identity_a8(40));
    CHECK(a45_lhs(24)[0] == 0);
    CHECK(a45_lhs(24)[2] == a45_rhs(24)[2]);
    CHECK(a8_lhs(8)[1] == 1);
    CHECK(a8_lhs(24).is_odd());
    CHECK(a8_rhs(24).is_odd());
    CHECK(normal_bundle_correction(3)[1] == make_rational(3, 4));
    CHECK_THROWS_AS(identity_a45(3), std::invalid_argument);
    CHECK_THROWS_AS(identity_a8(0), std::invalid_argument);
}

TEST_CASE("A-hat polynomials") {
    const auto a = a_hat_polys(4);
    REQUIRE(a.size() == 5);
    CHECK(a[0] == GradedPoly::constant(16, 1));
    CHECK(a[1].to_string() == "-1/24*p1");
    CHECK(a[2].coefficient(parse_monomial("p1^2")) == make_rational(7, 5760));
    CHECK(a[2].coefficient(parse_monomial("p2")) == make_rational(-4, 5760));
    CHECK(a[3].coefficient(parse_monomial("p3")) == make_rational(-16, 967680));
    for (unsigned i = 1; i <= 3; ++i) CHECK(verify::a_hat_matches_root_oracle(a[i], i, 2 * i));
    CHECK(verify::a_hat_matches_root_oracle(a[4], 4, 4));
    CHECK_THROWS_AS(a_hat_polys(5), std::invalid_argument);
    CHECK(verify::a_hat_genus_coefficient(1) == make_rational(-1, 24));
    CHECK(verify::bernoulli(12) == make_rational(-691, 2730));
}

TEST_CASE("Chern character of a complexified real bundle") {
    const auto ch = ch_complexified(4, 'p', 8);
    CHECK(ch.coefficient({}) == 4);
    CHECK(ch.coefficient(parse_monomial("p1")) == 1);
    CHECK(ch.coefficient(parse_monomial("p1^2")) == make_rational(1, 12));
    CHECK(ch.coefficient(parse_monomial("p2")) == make_rational(-1, 6));
    CHECK_THROWS_AS(ch_complexified(4, 'x', 8), std::invalid_argument);
}

TEST_CASE("combinatorics helpers") {
    CHECK(count_01_matrices({1, 1}, {1, 1}) == 2);
    CHECK(count_01_matrices({2}, {1, 1}) == 1);
    CHECK(count_01_matrices({2}, {2}) == 0);
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(8).size() == 22);
}

TEST_CASE("monomials") {
    CHECK(monomial_degree(parse_monomial("p1*e^3")) == 10);
    CHECK(parse_monomial("1").empty());
    CHECK(to_string(parse_monomial("e^2 * p2")) == "p2*e^2");
    for (const char* bad : {"", "p0", "x1", "p1^", "p1*", "e^-1", "p"})
        CHECK_THROWS_AS(parse_monomial(bad), std::invalid_argument);
    CHECK(monomials_of_degree(8, true, "p").size() == 4);  // p2, p1^2, p1 e^2, e^4
}

TEST_CASE("pairings") {
    PairingFunctional f(4, {{parse_monomial("p1"), 3}});
    CHECK(f(GradedPoly::symbol(4, "p1")) == 3);
    PairingFunctional g(4, {{parse_monomial("p1"), -48}});
    CHECK(pair(a_hat_polys(1)[1], g) == 2);
    PairingFunctional h(4, {{parse_monomial("e^2"), 5}}, true);
    CHECK(h(GradedPoly::from_series(4, hyperbolic(Hyperbolic::Sinh, 1, 2))) == 0);
    CHECK_THROWS_AS(f(GradedPoly(8)), std::invalid_argument);
    CHECK_THROWS_AS(f(GradedPoly::symbol(4, "e") * GradedPoly::symbol(4, "e")), std::out_of_range);
    CHECK_THROWS_AS(PairingFunctional(4, {{parse_monomial("e"), 1}}), std::invalid_argument);
}

TEST_CASE("pairing documents") {
    const auto f = PairingFunctional::parse("# test\ndim = 8\np1^2 = -7/4\ne^4 = 3\nmissing = zero\n");
    CHECK(f.dimension() == 8);
    CHECK(f.missing_as_zero());
    CHECK(f.values().at(parse_monomial("p1^2")) == make_rational(-7, 4));
    const auto g = PairingFunctional::parse(f.serialize());
    CHECK(g.values() == f.values());
    CHECK(g.missing_as_zero());
    CHECK_THROWS_AS(PairingFunctional::parse("dim = 4\np1 = 0.5\n"), std::invalid_argument);
    CHECK_THROWS_AS(PairingFunctional::parse("p1 = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(PairingFunctional::parse("dim = 4\np1^2 = 1\n"), std::invalid_argument);
}
