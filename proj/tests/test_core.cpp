#include "pinidx/matrix.hpp"
#include "pinidx/rational.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace pinidx;

TEST_CASE("rational literals") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-6/8") == make_rational(-3, 4));
    CHECK(parse_rational("+5") == 5);
    CHECK(parse_rational(" 12 ") == 12);
    for (const char* bad : {"0.5", "1e3", "1/0", "", "3/", "/3", "abc", "1/-2", "--1"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("rational rendering") {
    CHECK(to_string(make_rational(7, 4)) == "7/4");
    CHECK(to_string(make_rational(-4, 2)) == "-2");
    CHECK(to_string(Integer(0)) == "0");
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("reduce_mod and dyadic exponents") {
    CHECK(reduce_mod(make_rational(-1, 2), 2) == make_rational(3, 2));
    CHECK(reduce_mod(5, 2) == 1);
    CHECK(reduce_mod(make_rational(-5, 4), 1) == make_rational(3, 4));
    CHECK(dyadic_exponent(make_rational(3, 8)) == 3);
    CHECK(dyadic_exponent(5) == 0);
    CHECK(dyadic_exponent(make_rational(1, 3)) == -1);
    CHECK(dyadic_exponent(make_rational(1, 12)) == -1);
    CHECK(pow2(10) == 1024);
}

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> v(-3, 3);
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, make_rational(v(rng), 1 + (i + j) % 3));
    return m;
}

}  // namespace

TEST_CASE("matrix algebra laws on random matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2), c = random_matrix(rng, 2, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        CHECK(QMatrix::identity(3) * a == a);
        CHECK((a - a).is_zero());
        CHECK(a + a == a * Rational(2));
    }
}

TEST_CASE("kron matches the block formula") {
    QMatrix a(2, 2), b(2, 2);
    a.set(0, 1, 1);
    a.set(1, 0, -1);
    b.set(0, 0, 2);
    b.set(1, 1, 3);
    const QMatrix k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k.get(0, 2) == 2);
    CHECK(k.get(1, 3) == 3);
    CHECK(k.get(2, 0) == -2);
    CHECK(k.get(3, 1) == -3);
    CHECK(k.nonzeros() == 4);
}

TEST_CASE("rank and nullspace") {
    QMatrix m(3, 4);
    // rows: (1 2 0 1), (2 4 1 3), (3 6 1 4) = r1 + r2
    const int rows[3][4] = {{1, 2, 0, 1}, {2, 4, 1, 3}, {3, 6, 1, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.set(i, j, rows[i][j]);
    CHECK(rank(m) == 2);
    const auto null = nullspace(m);
    CHECK(null.size() == 2);
    for (const auto& v : null) {
        const Vector image = m.apply(v);
        for (const auto& x : image) CHECK(x == 0);
    }
}

TEST_CASE("diagonal detection") {
    const Vector d{1, 0, make_rational(-1, 2)};
    const QMatrix m = QMatrix::diagonal(d);
    CHECK(m.is_diagonal());
    CHECK(m.nonzeros() == 2);
    QMatrix n = m;
    n.set(0, 2, 1);
    CHECK_FALSE(n.is_diagonal());
}
