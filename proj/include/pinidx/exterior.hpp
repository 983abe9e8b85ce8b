#pragma once

// Operator calculus on the exterior algebra Lambda((R^m)^*), m even.
//
// Basis: blades as bitmasks, bit (i-1) for e_i^*, ordered by mask value, so
// for m = 2 the basis is {1, e1*, e2*, e1*^e2*}.
//
// Under Lambda(E*) = c(E) (x -> c(x) 1) left Clifford multiplication by e is
// c(e) and right multiplication is c~(e) = c^(e) sigma. The gradings tau and
// tau* are left and right multiplication by the volume element s_m:
//
//     tau  e_B = s_m e_B = blade_product_sign(full, B) e_{full \ B}
//     tau* e_B = e_B s_m = blade_product_sign(B, full) e_{full \ B}
//
// so tau = c(e_1)...c(e_m), tau* = c~(e_m)...c~(e_1), and tau* = sigma tau for
// every even m. tau^2 = tau*^2 = s_m^2 = (-1)^(m/2): a genuine +-1 splitting
// only when m = 0 (mod 4). For m = 2 (mod 4) there is no real involution that
// commutes with every c(e_i) and anticommutes with every c~(e_i), and the
// square of D + V comes out as tau*^2 (-Delta + |Z|^2 + S).

#include "pinidx/matrix.hpp"
#include "pinidx/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace pinidx::exterior {

using Blade = std::uint32_t;

inline constexpr unsigned max_rank = 12;

class OperatorMatrix {
public:
    OperatorMatrix(unsigned m, QMatrix entries);
    static OperatorMatrix identity(unsigned m);
    static OperatorMatrix zero(unsigned m);

    unsigned rank() const { return m_; }
    std::size_t size() const { return std::size_t{1} << m_; }
    const QMatrix& matrix() const { return entries_; }
    Rational get(Blade row, Blade col) const { return entries_.get(row, col); }

    OperatorMatrix operator*(const OperatorMatrix& o) const;
    OperatorMatrix operator+(const OperatorMatrix& o) const;
    OperatorMatrix operator-(const OperatorMatrix& o) const;
    OperatorMatrix operator-() const;
    OperatorMatrix operator*(const Rational& s) const;
    friend OperatorMatrix operator*(const Rational& s, const OperatorMatrix& x) { return x * s; }
    bool operator==(const OperatorMatrix& o) const { return m_ == o.m_ && entries_ == o.entries_; }

    Vector apply(std::span<const Rational> v) const { return entries_.apply(v); }
    bool is_zero() const { return entries_.is_zero(); }

private:
    unsigned m_;
    QMatrix entries_;
};

// Throws std::invalid_argument unless m is even and within [2, max_rank].
void require_even_rank(unsigned m);

OperatorMatrix wedge_op(unsigned m, std::span<const Rational> e);        // e^* ^ .
OperatorMatrix contraction_op(unsigned m, std::span<const Rational> e);  // i_e
OperatorMatrix clifford_op(unsigned m, std::span<const Rational> e);     // c(e) = e^* ^ - i_e
OperatorMatrix hat_op(unsigned m, std::span<const Rational> e);          // c^(e) = e^* ^ + i_e
OperatorMatrix tilde_op(unsigned m, std::span<const Rational> e);        // c~(e) = c^(e) sigma

Vector unit_vector(unsigned m, unsigned index);  // e_index, 1-based

struct StructureOps {
    OperatorMatrix sigma;
    OperatorMatrix tau;
    OperatorMatrix tau_star;
    OperatorMatrix number;
};

StructureOps structure_ops(unsigned m);

// S = sum_i c(e_i) c~(e_i), assembled from the definition.
OperatorMatrix s_operator(unsigned m);
// (2N - m) sigma.
OperatorMatrix s_operator_closed_form(unsigned m);
// sum_i c(e_i) c^(e_i).
OperatorMatrix clifford_hat_sum(unsigned m);
// 2N - m.
OperatorMatrix two_n_minus_m(unsigned m);

struct SpectrumEntry {
    Integer eigenvalue;
    std::uint64_t multiplicity;
    auto operator<=>(const SpectrumEntry&) const = default;
};

// Eigenvalues of S read off its exact diagonal, ascending.
std::vector<SpectrumEntry> s_spectrum(unsigned m);

struct Eigenspace {
    Rational eigenvalue;
    std::vector<Vector> basis;
};

// Smallest eigenvalue of a diagonal operator and a basis of its eigenspace.
Eigenspace lowest_eigenspace(const OperatorMatrix& diagonal_op);

// Column B is c(e_{b1}) ... c(e_{bk}) 1 for the Clifford blade e_B.
OperatorMatrix clifford_exterior_iso(unsigned m);
bool is_bijective(const OperatorMatrix& op);
bool preserves_grading(const OperatorMatrix& op);

// --- Gaussian-weighted polynomial sections ------------------------------------

using Exponents = std::vector<unsigned>;

struct SectionKey {
    Exponents exponents;
    Blade blade = 0;
    auto operator<=>(const SectionKey&) const = default;
};

// sum coeff * Z^alpha exp(-|Z|^2/2) (x) blade, Gaussian factor implicit.
class GaussianSection {
public:
    explicit GaussianSection(unsigned m);
    static GaussianSection gaussian(unsigned m);  // beta = exp(-|Z|^2/2) (x) 1
    static GaussianSection monomial(unsigned m, Exponents alpha, Blade blade, const Rational& coeff = 1);

    unsigned rank() const { return m_; }
    const std::map<SectionKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned max_degree() const;

    void add_term(const Exponents& alpha, Blade blade, const Rational& coeff);

    GaussianSection operator+(const GaussianSection& o) const;
    GaussianSection operator-(const GaussianSection& o) const;
    GaussianSection operator*(const Rational& s) const;
    bool operator==(const GaussianSection& o) const = default;

private:
    unsigned m_;
    std::map<SectionKey, Rational> terms_;
};

// Precomputed operators for one rank m; all methods are const.
class OscillatorOperators {
public:
    explicit OscillatorOperators(unsigned m);

    unsigned rank() const { return m_; }

    // d/dZ_i of p exp(-|Z|^2/2) = (d_i p - Z_i p) exp(-|Z|^2/2)
    GaussianSection partial(unsigned i, const GaussianSection& s) const;
    GaussianSection multiply_coordinate(unsigned i, const GaussianSection& s) const;
    GaussianSection apply_blade_op(const OperatorMatrix& op, const GaussianSection& s) const;

    // D = sum_i c(e_i) tau* d/dZ_i
    GaussianSection apply_D(const GaussianSection& s) const;
    // V = tau* c~(Z) = sum_i Z_i tau* c^(e_i) sigma
    GaussianSection apply_V(const GaussianSection& s) const;
    GaussianSection apply_D_plus_V(const GaussianSection& s) const;

    // -Delta + |Z|^2 + S, with Delta from two applications of `partial`.
    GaussianSection apply_harmonic(const GaussianSection& s) const;
    // The same operator conjugated onto polynomial coefficients:
    // H = -Delta + 2 Z.grad + m + S acting on p, no Gaussian bookkeeping.
    GaussianSection apply_conjugated(const GaussianSection& s) const;

    const OperatorMatrix& s_op() const { return s_; }
    const OperatorMatrix& tau_star() const { return tau_star_; }

private:
    unsigned m_;
    std::vector<QMatrix> d_cols_;  // transpose of c(e_i) tau*
    std::vector<QMatrix> v_cols_;  // transpose of tau* c~(e_i)
    QMatrix s_cols_;
    OperatorMatrix s_;
    OperatorMatrix tau_star_;
};

GaussianSection apply_D(const GaussianSection& s);
GaussianSection apply_V(const GaussianSection& s);

// All exponent vectors in m variables of total degree <= d, graded.
std::vector<Exponents> monomials_up_to(unsigned m, unsigned d);

struct OscillatorKernel {
    std::size_t dimension = 0;
    std::vector<GaussianSection> basis;
    std::size_t space_dimension = 0;  // number of (monomial, blade) pairs
};

inline constexpr std::size_t max_oscillator_space = 8192;

// Kernel of H restricted to polynomial degree <= d. Throws
// std::length_error when the truncated space exceeds max_oscillator_space.
OscillatorKernel oscillator_kernel(unsigned m, unsigned d);

}  // namespace pinidx::exterior
