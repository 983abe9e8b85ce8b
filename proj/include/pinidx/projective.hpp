#pragma once

// Mod 2 cohomology of RP^q, Z_2[a]/(a^{q+1}), and the pin^- criterion
// w1^2 + w2 = 0 applied to it.
//
// RP^{4k+2} carries exactly two pin^- structures. This library does not model
// the choice; index computations take the structure induced from the
// antipodal involution on D^{4k+3} as fixed.

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>

namespace pinidx::rp {

class Z2Poly {
public:
    explicit Z2Poly(unsigned q);
    static Z2Poly one(unsigned q);
    static Z2Poly monomial(unsigned q, unsigned degree);  // a^degree, zero above q

    unsigned truncation() const { return q_; }
    bool coeff(unsigned degree) const { return degree <= q_ && bits_[degree]; }
    void set_coeff(unsigned degree, bool value);
    bool is_zero() const { return bits_.none(); }

    // Homogeneous part of the given degree.
    Z2Poly part(unsigned degree) const;

    Z2Poly operator+(const Z2Poly& o) const;
    Z2Poly operator*(const Z2Poly& o) const;
    bool operator==(const Z2Poly& o) const { return q_ == o.q_ && bits_ == o.bits_; }

    std::string to_string() const;

private:
    void require_same_ring(const Z2Poly& o) const;

    unsigned q_;
    boost::dynamic_bitset<std::uint64_t> bits_;
};

// C(n, k) mod 2 by Lucas: odd iff every bit of k is set in n.
inline bool binomial_odd(std::uint64_t n, std::uint64_t k) { return k <= n && (k & ~n) == 0; }

// w(RP^q) = (1 + a)^{q+1}.
Z2Poly sw_total(unsigned q);

// Coefficient of a^2 in w1^2 + w2, read from sw_total(q).
bool pin_obstruction(unsigned q);
// (q+1)(3q+2)/2 mod 2.
bool pin_obstruction_closed_form(unsigned q);

enum class StructureKind { Spin, PinMinusNonorientable, NotPinMinus };

StructureKind structure_kind(unsigned q);
std::string to_string(StructureKind kind);

// w1^2 + w2 == 0; throws std::invalid_argument if the classes live in different rings.
bool admits_pin_minus(const Z2Poly& w1, const Z2Poly& w2);

}  // namespace pinidx::rp
