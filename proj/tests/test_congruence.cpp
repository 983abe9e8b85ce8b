#include "pinidx/congruence.hpp"
#include "pinidx/verify.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace pinidx;
using namespace pinidx::congruence;

TEST_CASE("degenerate data passes a1") {
    const auto d = Data::parse("level = 0\nrank_E = 2\n[K]\nmissing = zero\n[B]\nmissing = zero\n[index]\nE = 0\n");
    const auto r = check(Which::A1, d);
    CHECK(r.passed);
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 0);
}

TEST_CASE("index entries") {
    const auto d = Data::parse("level = 0\n[index]\nN = ko 1 3\nRplusO = 3/4\n");
    CHECK(d.index.at("N").value() == make_rational(7, 4));
    CHECK(d.index.at("RplusO").value() == make_rational(3, 4));
    CHECK_THROWS_AS(Data::parse("level = 0\n[index]\nN = 1/3\n"), std::invalid_argument);
    CHECK_THROWS_AS(Data::parse("level = 0\n[index]\nX = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(Data::parse("level = 0\n[index]\nN = ko 1\n"), std::invalid_argument);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(Data::parse("[K]\n"), std::invalid_argument);
    CHECK_THROWS_AS(Data::parse("level = 0\n[K]\ndim = 6\n"), std::invalid_argument);
    CHECK_THROWS_AS(Data::parse("level = 0\n[B]\np1 = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(Data::parse("level = 0\n[Q]\n"), std::invalid_argument);
    CHECK_THROWS_AS(Data::parse("level = 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(check(Which::A8, Data::parse("level = 0\n[B]\ne = 0\n")), std::invalid_argument);
    CHECK_THROWS_AS(parse_which("a2"), std::invalid_argument);
}

TEST_CASE("a8 and a9 by hand at level 0") {
    // dim B = 2: <A(TB) sinh e, [B]> = <e, [B]>.
    const auto d = Data::parse("level = 0\n[B]\ne = 1/4\n[index]\nN = 1/2\nRplusO = 1/4\n");
    const auto r8 = check(Which::A8, d);
    CHECK(r8.passed);
    CHECK(r8.rhs == make_rational(1, 4));
    const auto r9 = check(Which::A9, d);
    CHECK(r9.passed == false);
    CHECK(r9.residue == make_rational(1, 2));
    const auto d2 = Data::parse("level = 0\n[index]\nN = 1/4\nRplusO = 3/4\n");
    CHECK(check(Which::A9, d2).passed);
}

TEST_CASE("synthetic data: a6 and a7 imply a8") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 20; ++t) {
        const unsigned level = static_cast<unsigned>(t % 2);
        const auto d = verify::synthetic_dataset(rng, level);
        CHECK(check(Which::A6, d).passed);
        CHECK(check(Which::A7, d).passed);
        CHECK(check(Which::A8, d).passed);
        const auto back = Data::parse(d.serialize());
        CHECK(check(Which::A8, back).passed);
        CHECK(check(Which::A6, back).lhs == check(Which::A6, d).lhs);
    }
}

TEST_CASE("negative control reports residue 1/2") {
    std::mt19937_64 rng(17);
    auto d = verify::synthetic_dataset(rng, 1);
    d.index["N"] = d.index["N"] + ko::DyadicMod2(make_rational(1, 2));
    const auto r = check(Which::A8, d);
    CHECK_FALSE(r.passed);
    CHECK(r.residue == make_rational(1, 2));
    CHECK_FALSE(check(Which::A6, d).passed);
}

TEST_CASE("integrands") {
    // dim K = 4: <A(TK) ch(TK_C), [K]> = 4 * (-p1/24) + p1 = (5/6) p1.
    const auto k = k_integrand_tangent(0);
    CHECK(k.part(4).coefficient(series::parse_monomial("p1")) == make_rational(5, 6));
    CHECK_THROWS_AS(k_integrand_tangent(2), std::invalid_argument);
}
