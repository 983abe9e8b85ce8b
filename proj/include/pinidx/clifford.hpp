#pragma once

// Real Clifford algebra c(R^n) with e_i e_j + e_j e_i = -2 delta_ij, the
// pin^- group inside it, and explicit matrix representations.
//
// Blades are bitmasks: bit (i-1) set means e_i is a factor, and the blade is
// the product of its factors in increasing index order.

#include "pinidx/matrix.hpp"
#include "pinidx/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pinidx::clifford {

using Blade = std::uint32_t;

inline constexpr unsigned max_dimension = 32;

// Sign s with e_A e_B = s * e_{A xor B}.
int blade_product_sign(Blade a, Blade b);

class CliffordElement {
public:
    explicit CliffordElement(unsigned n);

    static CliffordElement scalar(unsigned n, const Rational& value);
    static CliffordElement basis(unsigned n, unsigned index);  // e_index, 1-based
    static CliffordElement blade(unsigned n, Blade b, const Rational& coeff = 1);
    static CliffordElement from_vector(std::span<const Rational> v);

    unsigned dim() const { return n_; }
    const std::map<Blade, Rational>& terms() const { return terms_; }
    Rational coefficient(Blade b) const;
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous(unsigned grade) const;

    // Coordinates when the element lies purely in degree 1.
    std::optional<Vector> as_vector() const;

    CliffordElement reversed() const;
    CliffordElement graded_involution() const;

    CliffordElement operator+(const CliffordElement& other) const;
    CliffordElement operator-(const CliffordElement& other) const;
    CliffordElement operator-() const;
    CliffordElement operator*(const CliffordElement& other) const;
    CliffordElement operator*(const Rational& s) const;
    friend CliffordElement operator*(const Rational& s, const CliffordElement& x) { return x * s; }
    bool operator==(const CliffordElement& other) const = default;

    std::string to_string() const;

private:
    void add_term(Blade b, const Rational& c);

    unsigned n_;
    std::map<Blade, Rational> terms_;
};

// Throws std::invalid_argument when the ambient dimensions differ.
CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y);

Rational dot(std::span<const Rational> u, std::span<const Rational> v);

// An element of pin^-(n), stored as the ordered unit vectors whose product it is.
class PinWord {
public:
    explicit PinWord(unsigned n, std::vector<Vector> factors = {});
    static PinWord of_basis(unsigned n, std::initializer_list<unsigned> indices);

    unsigned dim() const { return n_; }
    std::size_t length() const { return factors_.size(); }
    const std::vector<Vector>& factors() const { return factors_; }

    CliffordElement element() const;
    // (-1)^length times the reversed word.
    CliffordElement inverse_element() const;
    PinWord concat(const PinWord& other) const;

private:
    unsigned n_;
    std::vector<Vector> factors_;
};

// The character chi: pin^-(n) -> O(1).
int chi(const PinWord& w);

// gamma(w)(v), built by applying v -> u v u for each factor u, innermost
// factor first. Throws std::logic_error if the result leaves degree 1.
Vector twisted_adjoint(const PinWord& w, std::span<const Rational> v);

enum class Field { Real, Complex, Quaternion };

struct AlgebraType {
    unsigned n = 0;
    Field field = Field::Real;
    std::uint64_t matrix_size = 1;  // irreducible module dimension over `field`
    bool two_summands = false;      // c(R^n) = M(F) + M(F)
    std::uint64_t irrep_real_dim = 1;

    std::uint64_t field_dim() const;
    std::uint64_t total_real_dim() const;
    std::string describe() const;
};

// Isomorphism type of c(R^n), n in [1, 63].
AlgebraType classify(unsigned n);

struct CliffordRep {
    unsigned n = 0;
    std::vector<QMatrix> generators;

    std::size_t dim() const { return generators.empty() ? 0 : generators.front().rows(); }
    QMatrix act(std::span<const Rational> v) const;
    QMatrix act(const PinWord& w) const;
    QMatrix act(const CliffordElement& x) const;
};

bool satisfies_clifford_relations(const CliffordRep& rep);

// Irreducible representation of c(R^n), n in [1, 12]. For n = 3 (mod 4) the
// volume element acts as +Id.
CliffordRep build_rep(unsigned n);

// Dimension of the span of all 2^n generator products in the representation.
std::size_t span_dimension(const CliffordRep& rep);

// omega (e s) == chi(omega) (gamma(omega) e)(omega s) for all s, as a matrix
// identity. Throws std::invalid_argument if `rep` violates the Clifford relations.
bool equivariance_check(const PinWord& w, std::span<const Rational> e, const CliffordRep& rep);

CliffordElement volume_element(unsigned n);
// Commutes with every generator e_i.
bool is_central(const CliffordElement& x);
// x*x as +1 or -1; throws std::domain_error when x*x is not a signed unit.
int square_sign(const CliffordElement& x);

// dim S+(G + E) == dim S+(G) * dim F(E) for dim G = 8k+2, dim E = 8l, l >= 1.
bool factorization_dim_check(unsigned k, unsigned l);

}  // namespace pinidx::clifford
