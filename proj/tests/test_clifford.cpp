#include "pinidx/clifford.hpp"
#include "pinidx/verify.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

using namespace pinidx;
using namespace pinidx::clifford;

namespace {

// Sort the concatenated factor list by adjacent swaps, cancelling e_i e_i = -1.
int word_sign(Blade a, Blade b) {
    std::vector<unsigned> w;
    for (unsigned i = 0; i < 32; ++i)
        if ((a >> i) & 1U) w.push_back(i);
    for (unsigned i = 0; i < 32; ++i)
        if ((b >> i) & 1U) w.push_back(i);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                sign = -sign;
                changed = true;
            } else if (w[i] == w[i + 1]) {
                w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    return sign;
}

}  // namespace

TEST_CASE("blade product sign against word reduction") {
    CHECK(blade_product_sign(1, 1) == -1);
    CHECK(blade_product_sign(1, 2) == 1);
    CHECK(blade_product_sign(2, 1) == -1);
    for (Blade a = 0; a < 32; ++a)
        for (Blade b = 0; b < 32; ++b) CHECK(blade_product_sign(a, b) == word_sign(a, b));
}

TEST_CASE("classification table") {
    struct Row {
        unsigned n;
        const char* text;
        std::uint64_t irrep;
    };
    const Row rows[] = {{1, "M1(C)", 2},         {2, "M1(H)", 4},  {3, "M1(H) + M1(H)", 4},
                        {4, "M2(H)", 8},         {5, "M4(C)", 8},  {6, "M8(R)", 8},
                        {7, "M8(R) + M8(R)", 8}, {8, "M16(R)", 16}, {11, "M16(H) + M16(H)", 64}};
    for (const auto& r : rows) {
        const auto t = classify(r.n);
        CHECK(t.describe() == r.text);
        CHECK(t.irrep_real_dim == r.irrep);
    }
    for (unsigned n = 1; n <= 40; ++n) CHECK(classify(n).total_real_dim() == (std::uint64_t{1} << n));
    CHECK_THROWS_AS(classify(0), std::invalid_argument);
    CHECK_THROWS_AS(classify(64), std::invalid_argument);
}

TEST_CASE("basic products") {
    const auto e1 = CliffordElement::basis(3, 1), e2 = CliffordElement::basis(3, 2);
    CHECK(e1 * e1 == CliffordElement::scalar(3, -1));
    CHECK(e1 * e2 == -(e2 * e1));
    CHECK(square_sign(e1 * e2) == -1);
    CHECK(e1.reversed() == e1);
    CHECK((e1 * e2).reversed() == e2 * e1);
    CHECK(e1.graded_involution() == -e1);
    CHECK_THROWS_AS(clifford_mul(e1, CliffordElement::basis(4, 1)), std::invalid_argument);
}

TEST_CASE("pin words and the twisted adjoint") {
    const auto w = PinWord::of_basis(3, {1});
    CHECK(chi(w) == -1);
    const Vector e1{1, 0, 0}, e2{0, 1, 0};
    CHECK(twisted_adjoint(w, e1) == Vector{-1, 0, 0});
    CHECK(twisted_adjoint(w, e2) == e2);
    CHECK_THROWS_AS(PinWord(2, {Vector{1, 1}}), std::invalid_argument);
    const Vector u{make_rational(3, 5), make_rational(4, 5)};
    CHECK_NOTHROW(PinWord(2, {u}));
}

TEST_CASE("random pin words: reflections compose") {
    std::mt19937_64 rng(11);
    for (unsigned n = 2; n <= 5; ++n) {
        for (int t = 0; t < 10; ++t) {
            const Vector u = verify::random_unit_vector(rng, n);
            CHECK(dot(u, u) == 1);
            const Vector v = verify::random_unit_vector(rng, n);
            // Single factor: reflection in the hyperplane orthogonal to u.
            Vector expected = v;
            const Rational uv = dot(u, v);
            for (unsigned i = 0; i < n; ++i) expected[i] -= 2 * uv * u[i];
            CHECK(twisted_adjoint(PinWord(n, {u}), v) == expected);
        }
    }
}

TEST_CASE("representations satisfy the relations and have irreducible dimension") {
    for (unsigned n = 1; n <= 12; ++n) {
        const auto rep = build_rep(n);
        CHECK(satisfies_clifford_relations(rep));
        CHECK(rep.dim() == classify(n).irrep_real_dim);
        if (n % 4 == 3) CHECK(rep.act(volume_element(n)) == QMatrix::identity(rep.dim()));
    }
    CHECK_THROWS_AS(build_rep(13), std::invalid_argument);
}

TEST_CASE("equivariance needs a genuine representation") {
    auto rep = build_rep(3);
    const auto w = PinWord::of_basis(3, {1, 2});
    const Vector e{0, 0, 1};
    CHECK(equivariance_check(w, e, rep));
    rep.generators[0] = rep.generators[0] * Rational(2);
    CHECK_THROWS_AS(equivariance_check(w, e, rep), std::invalid_argument);
}

TEST_CASE("volume element") {
    CHECK(is_central(volume_element(3)));
    CHECK_FALSE(is_central(volume_element(4)));
    CHECK(square_sign(volume_element(3)) == 1);
    CHECK(square_sign(volume_element(2)) == -1);
    CHECK_THROWS_AS(square_sign(CliffordElement::basis(2, 1) + CliffordElement::basis(2, 2) * Rational(2)),
                    std::domain_error);
}

TEST_CASE("spinor dimension factorization") {
    CHECK(factorization_dim_check(0, 1));
    CHECK(factorization_dim_check(1, 2));
    CHECK_THROWS_AS(factorization_dim_check(0, 0), std::invalid_argument);
}
