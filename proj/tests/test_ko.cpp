#include "pinidx/ko.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace pinidx;
using namespace pinidx::ko;

TEST_CASE("group orders") {
    CHECK(ko_order(0) == 4);
    CHECK(ko_order(1) == 64);
    for (unsigned k = 0; k <= 8; ++k) CHECK(ko_order_general(8 * k + 2) == ko_order(k));
    CHECK(adams_phi(2) == 2);
    CHECK(adams_phi(8) == 4);
    CHECK(ko_order_general(1) == 2);
    CHECK_THROWS_AS(ko_order_general(0), std::invalid_argument);
    CHECK_THROWS_AS(ko_order(max_level + 1), std::invalid_argument);
}

TEST_CASE("index values") {
    // m/2^{4k+2} + n/2^{4k+1}
    CHECK(q_index(KOClassRP(0, 1, 3)).value() == make_rational(7, 4));
    CHECK(q_index(KOClassRP(1, 1, 0)).value() == make_rational(1, 64));
    CHECK(q_index(KOClassRP(0, 1, 0)).value() == make_rational(1, 4));
    // gamma = 1 - (1 - gamma)
    CHECK(q_index(KOClassRP(0, 1, -1)).value() == make_rational(7, 4));
    CHECK(q_index(KOClassRP(0, 8, 0)).value() == 0);
}

TEST_CASE("normalization of the torsion coefficient") {
    const KOClassRP a(0, 2, -1);
    CHECK(a.torsion() == 3);
    CHECK(KOClassRP(0, 2, 7) == a);
    CHECK(q_index(KOClassRP(2, 0, ko_order(2))).value() == 0);
}

TEST_CASE("dyadic values mod 2") {
    CHECK(DyadicMod2(make_rational(-1, 2)).value() == make_rational(3, 2));
    CHECK(DyadicMod2(make_rational(9, 4)).value() == make_rational(1, 4));
    CHECK(DyadicMod2(make_rational(3, 8)).denominator_exponent() == 3);
    CHECK_THROWS_AS(DyadicMod2(make_rational(1, 3)), std::invalid_argument);
    CHECK(DyadicMod2(make_rational(3, 2)) + DyadicMod2(make_rational(3, 4)) == DyadicMod2(make_rational(1, 4)));
}

TEST_CASE("additivity including carries") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> m(-100000, 100000);
    for (unsigned k : {0U, 1U, 2U, 5U}) {
        const long order = 1L << (4 * k + 2);
        std::uniform_int_distribution<long> n(0, order - 1);
        for (int t = 0; t < 300; ++t) {
            const KOClassRP a(k, m(rng), n(rng)), b(k, m(rng), n(rng));
            CHECK(q_index(a + b) == q_index(a) + q_index(b));
            CHECK(q_index(a - b) == q_index(a) - q_index(b));
            CHECK(ind_t(a) == q_index(a));
            CHECK(eta_prediction(a) == q_index(a));
            CHECK(q_index(a).denominator_exponent() <= 4 * k + 2);
        }
        const KOClassRP full(k, 0, order - 1), one(k, 0, 1);
        CHECK(q_index(full + one).value() == 0);
    }
}

TEST_CASE("sums of line bundles") {
    const auto c = ko_from_sum(2, 3, 0);
    CHECK(c.rank() == 5);
    CHECK(c.torsion() == 1);  // -3 mod 4
    CHECK_THROWS_AS(ko_from_sum(-1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(KOClassRP(0, 1, 0) + KOClassRP(1, 1, 0), std::invalid_argument);
}
