#include "pinidx/clifford.hpp"
#include "pinidx/exterior.hpp"
#include "pinidx/verify.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace pinidx;
using namespace pinidx::exterior;

TEST_CASE("S at m = 2 in the basis 1, e1*, e2*, e1*^e2*") {
    const auto s = s_operator(2);
    CHECK(s.matrix().is_diagonal());
    CHECK(s.get(0, 0) == -2);
    CHECK(s.get(1, 1) == 0);
    CHECK(s.get(2, 2) == 0);
    CHECK(s.get(3, 3) == 2);
}

TEST_CASE("spectrum of S at m = 4") {
    const std::vector<SpectrumEntry> expected{{-4, 1}, {-2, 4}, {0, 6}, {2, 4}, {4, 1}};
    CHECK(s_spectrum(4) == expected);
}

TEST_CASE("closed forms for m = 2..10") {
    for (unsigned m = 2; m <= 10; m += 2) {
        CHECK(s_operator(m) == s_operator_closed_form(m));
        CHECK(clifford_hat_sum(m) == two_n_minus_m(m));
        const auto ground = lowest_eigenspace(s_operator(m));
        CHECK(ground.eigenvalue == -Rational(m));
        REQUIRE(ground.basis.size() == 1);
        CHECK(ground.basis[0][0] != 0);  // the constant 1
    }
}

TEST_CASE("rank guard") {
    CHECK_THROWS_AS(s_operator(3), std::invalid_argument);
    CHECK_THROWS_AS(s_operator(0), std::invalid_argument);
    CHECK_THROWS_AS(s_operator(14), std::invalid_argument);
}

TEST_CASE("Clifford relations for random rational vectors") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> v(-4, 4);
    for (unsigned m = 2; m <= 6; m += 2) {
        const auto id = OperatorMatrix::identity(m);
        for (int t = 0; t < 10; ++t) {
            Vector e(m);
            for (auto& x : e) x = make_rational(v(rng), 3);
            const Rational norm2 = clifford::dot(e, e);
            const auto c = clifford_op(m, e), h = hat_op(m, e);
            CHECK(c == wedge_op(m, e) - contraction_op(m, e));
            CHECK(c * c == id * (-norm2));
            CHECK(h * h == id * norm2);
            CHECK(c * h + h * c == OperatorMatrix::zero(m));
        }
    }
}

TEST_CASE("grading operators") {
    const auto ops = structure_ops(2);
    CHECK(ops.tau_star * ops.tau_star == -OperatorMatrix::identity(2));
    const auto ops4 = structure_ops(4);
    CHECK(ops4.tau_star * ops4.tau_star == OperatorMatrix::identity(4));
    CHECK(ops4.tau_star == ops4.sigma * ops4.tau);
}

TEST_CASE("Gaussian sections: derivatives carry the Gaussian factor") {
    const OscillatorOperators ops(2);
    const auto beta = GaussianSection::gaussian(2);
    // d/dZ_1 exp(-|Z|^2/2) = -Z_1 exp(-|Z|^2/2)
    CHECK(ops.partial(0, beta) == GaussianSection::monomial(2, {1, 0}, 0, -1));
    CHECK(ops.apply_D_plus_V(beta).is_zero());
    CHECK(ops.apply_conjugated(GaussianSection::monomial(2, {0, 0}, 0)).is_zero());
}

namespace {

GaussianSection random_section(std::mt19937_64& rng, unsigned m) {
    std::uniform_int_distribution<unsigned> e(0, 2);
    std::uniform_int_distribution<Blade> b(0, (Blade{1} << m) - 1);
    std::uniform_int_distribution<int> c(1, 5);
    GaussianSection s(m);
    for (int t = 0; t < 3; ++t) {
        Exponents alpha(m);
        for (auto& a : alpha) a = e(rng);
        s.add_term(alpha, b(rng), c(rng));
    }
    return s;
}

}  // namespace

TEST_CASE("square of D + V at m = 4") {
    std::mt19937_64 rng(5);
    const OscillatorOperators ops(4);
    for (int t = 0; t < 20; ++t) {
        const auto s = random_section(rng, 4);
        CHECK(ops.apply_D_plus_V(ops.apply_D_plus_V(s)) == ops.apply_harmonic(s));
    }
}

TEST_CASE("square of D + V at m = 2 carries the sign of tau*^2") {
    // tau*^2 = -1 in rank 2, so the square is the negative of -Delta + |Z|^2 + S.
    std::mt19937_64 rng(6);
    const OscillatorOperators ops(2);
    for (int t = 0; t < 20; ++t) {
        const auto s = random_section(rng, 2);
        CHECK(ops.apply_D_plus_V(ops.apply_D_plus_V(s)) == ops.apply_harmonic(s) * Rational(-1));
    }
}

TEST_CASE("harmonic operator agrees with its conjugated form") {
    std::mt19937_64 rng(8);
    for (unsigned m : {2U, 4U}) {
        const OscillatorOperators ops(m);
        for (int t = 0; t < 10; ++t) {
            const auto s = random_section(rng, m);
            CHECK(ops.apply_harmonic(s) == ops.apply_conjugated(s));
        }
    }
}

TEST_CASE("oscillator kernel is spanned by the Gaussian") {
    for (unsigned m : {2U, 4U})
        for (unsigned d = 0; d <= 3; ++d) {
            const auto k = oscillator_kernel(m, d);
            CHECK(k.dimension == 1);
            REQUIRE(k.basis.size() == 1);
            CHECK(k.basis[0].terms().size() == 1);
            CHECK(k.basis[0].terms().begin()->first.blade == 0);
            CHECK(k.basis[0].max_degree() == 0);
        }
    CHECK(oscillator_kernel(6, 1).dimension == 1);
    CHECK_THROWS_AS(oscillator_kernel(12, 4), std::length_error);
}

TEST_CASE("monomial enumeration") {
    CHECK(monomials_up_to(2, 2).size() == 6);
    CHECK(monomials_up_to(4, 2).size() == 15);
}

TEST_CASE("Clifford algebra to exterior algebra") {
    for (unsigned m = 2; m <= 8; m += 2) {
        const auto iso = clifford_exterior_iso(m);
        CHECK(is_bijective(iso));
        CHECK(preserves_grading(iso));
    }
}
