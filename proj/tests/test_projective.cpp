#include "pinidx/projective.hpp"

#include <doctest.h>

#include <gmpxx.h>

#include <random>
#include <stdexcept>

using namespace pinidx::rp;

TEST_CASE("Stiefel-Whitney class of RP^2") {
    const auto w = sw_total(2);
    CHECK(w.to_string() == "1 + a + a^2");
    CHECK(w.coeff(1));
    CHECK(w.coeff(2));
}

TEST_CASE("Stiefel-Whitney class of RP^3 is trivial") { CHECK(sw_total(3) == Z2Poly::one(3)); }

TEST_CASE("pin obstruction") {
    CHECK_FALSE(pin_obstruction(2));
    CHECK_FALSE(pin_obstruction(3));
    CHECK(pin_obstruction(4));
    CHECK(pin_obstruction(5));
    CHECK_FALSE(pin_obstruction(6));
    for (unsigned q = 2; q <= 3000; ++q) CHECK(pin_obstruction(q) == pin_obstruction_closed_form(q));
    CHECK_THROWS_AS(pin_obstruction(1), std::invalid_argument);
}

TEST_CASE("structure kinds") {
    CHECK(structure_kind(2) == StructureKind::PinMinusNonorientable);
    CHECK(structure_kind(3) == StructureKind::Spin);
    CHECK(structure_kind(4) == StructureKind::NotPinMinus);
    CHECK(structure_kind(10) == StructureKind::PinMinusNonorientable);
    CHECK(to_string(StructureKind::NotPinMinus) == "not pin-");
}

TEST_CASE("binomial parity against GMP") {
    for (unsigned n = 0; n <= 200; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), n, k);
            CHECK(binomial_odd(n, k) == (mpz_odd_p(c.get_mpz_t()) != 0));
        }
}

TEST_CASE("truncated multiplication against convolution") {
    std::mt19937_64 rng(1);
    std::bernoulli_distribution coin(0.4);
    for (int t = 0; t < 50; ++t) {
        const unsigned q = 1 + static_cast<unsigned>(rng() % 40);
        Z2Poly a(q), b(q);
        for (unsigned i = 0; i <= q; ++i) {
            a.set_coeff(i, coin(rng));
            b.set_coeff(i, coin(rng));
        }
        const Z2Poly p = a * b;
        for (unsigned d = 0; d <= q; ++d) {
            bool bit = false;
            for (unsigned i = 0; i <= d; ++i) bit ^= a.coeff(i) && b.coeff(d - i);
            CHECK(p.coeff(d) == bit);
        }
        CHECK(a * b == b * a);
        CHECK((a + b) * a == a * a + b * a);
    }
}

TEST_CASE("ring mismatch") {
    CHECK_THROWS_AS(admits_pin_minus(Z2Poly(3), Z2Poly(4)), std::invalid_argument);
    CHECK_THROWS_AS(Z2Poly(0), std::invalid_argument);
    Z2Poly p(3);
    CHECK_THROWS_AS(p.set_coeff(4, true), std::out_of_range);
    CHECK(Z2Poly::monomial(3, 5).is_zero());
}
