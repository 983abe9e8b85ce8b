#pragma once

// Truncated power series in the Euler class e, graded polynomials in
// Pontryagin classes, the A-hat multiplicative sequence, and evaluation
// against user-supplied fundamental-class pairings.

#include "pinidx/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pinidx::series {

// c_0 + c_1 e + ... + c_D e^D, everything above e^D discarded.
class RationalSeries {
public:
    explicit RationalSeries(unsigned order);
    RationalSeries(unsigned order, std::vector<Rational> coeffs);

    static RationalSeries constant(unsigned order, const Rational& c);
    static RationalSeries variable(unsigned order);  // e
    // exp(scale * e)
    static RationalSeries exp_scaled(unsigned order, const Rational& scale);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const Rational& operator[](unsigned k) const { return coeffs_.at(k); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    RationalSeries truncated(unsigned order) const;

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator-() const;
    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries operator*(const Rational& s) const;
    friend RationalSeries operator*(const Rational& s, const RationalSeries& f) { return f * s; }
    RationalSeries operator/(const RationalSeries& o) const;
    bool operator==(const RationalSeries& o) const = default;

    // Multiplicative inverse; throws std::domain_error when c_0 == 0.
    RationalSeries inverse() const;
    // f / e, one order lower; throws std::domain_error when c_0 != 0.
    RationalSeries divided_by_e() const;
    // e * f at the same order.
    RationalSeries times_e() const;

    bool is_odd() const;
    bool is_even() const;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

enum class Hyperbolic { Sinh, Cosh, Tanh, XOverSinh };

// Taylor series of f(scale * e) through e^order. XOverSinh is
// (scale e) / sinh(scale e), equal to 1 at scale 0.
RationalSeries hyperbolic(Hyperbolic f, const Rational& scale, unsigned order);

// ch(N (x) C) = 2 cosh(e) for an oriented 2-plane bundle N with Euler class e.
RationalSeries ch_rank2_complexified(unsigned order);

// (tanh(e/2) - e/2) / (e tanh(e/2)) + (1/e)((e/2)/sinh(e/2) - 1)
RationalSeries a45_lhs(unsigned order);
// -(1/2) tanh(e/4)
RationalSeries a45_rhs(unsigned order);
// tanh(e/4) cosh(e) + (cosh(e) - cosh(e/2)) / sinh(e/2)
RationalSeries a8_lhs(unsigned order);
// sinh(e)
RationalSeries a8_rhs(unsigned order);
// (ch(N_C) - 2 cosh(e/2)) / (2 sinh(e/2)) with ch(N_C) = 2 cosh(e)
RationalSeries normal_bundle_correction(unsigned order);

// Throw std::invalid_argument for order < 4.
bool identity_a45(unsigned order);
bool identity_a8(unsigned order);

// --- graded polynomials ----------------------------------------------------------

// Symbol -> exponent. Symbols: "e" (degree 2), "p<i>" and "q<i>" (degree 4i;
// Pontryagin classes of the tangent bundle and of a coefficient bundle).
using Monomial = std::map<std::string, unsigned>;

unsigned symbol_degree(std::string_view symbol);
unsigned monomial_degree(const Monomial& m);
std::string to_string(const Monomial& m);
// "1", "e", "p1^2", "p1*e^3", ...
Monomial parse_monomial(std::string_view text);

class GradedPoly {
public:
    explicit GradedPoly(unsigned degree_bound);

    static GradedPoly constant(unsigned degree_bound, const Rational& c);
    static GradedPoly symbol(unsigned degree_bound, const std::string& name);
    // sum_k c_k e^k with 2k <= degree_bound.
    static GradedPoly from_series(unsigned degree_bound, const RationalSeries& f);

    unsigned degree_bound() const { return bound_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    bool is_zero() const { return terms_.empty(); }

    // Terms above the degree bound are truncated away.
    void add_term(const Monomial& m, const Rational& c);
    GradedPoly part(unsigned degree) const;

    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly operator*(const Rational& s) const;
    bool operator==(const GradedPoly& o) const = default;

    std::string to_string() const;

private:
    unsigned bound_;
    std::map<Monomial, Rational> terms_;
};

// Number of 0/1 matrices with the given row and column sums.
Integer count_01_matrices(const std::vector<unsigned>& rows, const std::vector<unsigned>& cols);

std::vector<std::vector<unsigned>> partitions(unsigned n);

// [A_0, A_1, ..., A_max_i], A_i of degree 4i in p1..pi, from the
// multiplicative sequence of (x/2)/sinh(x/2). max_i <= 4.
std::vector<GradedPoly> a_hat_polys(unsigned max_i);

// Sum of A_i over 4i <= degree_bound, in the tangent classes p1, p2, ...
GradedPoly a_hat_total(unsigned degree_bound);

// ch(V (x) C) for a real bundle of the given rank with Pontryagin classes
// named "<prefix>1", "<prefix>2", ...: rank + sum_k 2/(2k)! s_k.
GradedPoly ch_complexified(const Integer& rank, char prefix, unsigned degree_bound);

// --- pairings ---------------------------------------------------------------------

// <x, [M]> given as values on top-degree monomials.
class PairingFunctional {
public:
    // Throws std::invalid_argument if a value is attached to a monomial of
    // degree other than `dimension`.
    PairingFunctional(unsigned dimension, std::map<Monomial, Rational> values, bool missing_as_zero = false);

    unsigned dimension() const { return dim_; }
    const std::map<Monomial, Rational>& values() const { return values_; }
    bool missing_as_zero() const { return missing_as_zero_; }

    // Throws std::invalid_argument when x.degree_bound() > dimension() and
    // std::out_of_range for a top-degree monomial without a value unless
    // missing_as_zero is set.
    Rational operator()(const GradedPoly& x) const;

    void set(const Monomial& m, const Rational& value);

    // "dim = N" followed by "monomial = rational" lines; '#' starts a
    // comment; "missing = zero" opts into treating absent monomials as 0.
    static PairingFunctional parse(std::string_view text);
    std::string serialize() const;

private:
    unsigned dim_;
    std::map<Monomial, Rational> values_;
    bool missing_as_zero_;
};

Rational pair(const GradedPoly& x, const PairingFunctional& f);

// All monomials of exactly the given degree in e (when allowed) and the
// symbols "<prefix><i>" for each prefix.
std::vector<Monomial> monomials_of_degree(unsigned degree, bool with_e, const std::string& prefixes);

}  // namespace pinidx::series
