#pragma once

// KO(RP^{8k+2}) = Z + Z/2^{4k+2} (1 - gamma) and the index homomorphism
//
//     q_{8k+2}(m + n(1 - gamma)) = m / 2^{4k+2} + n / 2^{4k+1}   (mod 2).
//
// For a bundle E over a general pin^- manifold B the topological index is q
// of the class in KO(RP^{8k+2}) obtained by pushing E forward along an
// embedding B -> RP^{8k+2} x S^{8m} and pulling back along RP^{8k+2} -> pt.
// That geometric pushforward is not constructed here: callers supply the
// resulting RP^{8k+2} class.

#include "pinidx/rational.hpp"

#include <string>

namespace pinidx::ko {

// Largest supported level; 2^{4k+2} stays comfortably small for fuzzing.
inline constexpr unsigned max_level = 64;

// An element of Z[1/2] / 2Z, stored as its representative in [0, 2).
class DyadicMod2 {
public:
    DyadicMod2() = default;
    // Throws std::invalid_argument if the denominator is not a power of two.
    explicit DyadicMod2(const Rational& value);

    const Rational& value() const { return value_; }
    // e with denominator 2^e.
    unsigned denominator_exponent() const;

    DyadicMod2 operator+(const DyadicMod2& o) const { return DyadicMod2(value_ + o.value_); }
    DyadicMod2 operator-(const DyadicMod2& o) const { return DyadicMod2(value_ - o.value_); }
    DyadicMod2 operator-() const { return DyadicMod2(-value_); }
    bool operator==(const DyadicMod2& o) const { return value_ == o.value_; }

    std::string to_string() const { return pinidx::to_string(value_); }

private:
    Rational value_ = 0;
};

class KOClassRP {
public:
    // m + n (1 - gamma) over RP^{8k+2}; n is reduced into [0, 2^{4k+2}).
    KOClassRP(unsigned k, Integer m, Integer n);

    unsigned level() const { return k_; }
    const Integer& rank() const { return m_; }
    const Integer& torsion() const { return n_; }

    KOClassRP operator+(const KOClassRP& o) const;
    KOClassRP operator-(const KOClassRP& o) const;
    KOClassRP operator-() const;
    KOClassRP operator*(const Integer& s) const;
    bool operator==(const KOClassRP& o) const = default;

    std::string to_string() const;

private:
    void require_same_level(const KOClassRP& o) const;

    unsigned k_;
    Integer m_;
    Integer n_;
};

// 2^{4k+2}, the order of the reduced group generated by 1 - gamma.
Integer ko_order(unsigned k);

// a copies of the trivial line plus b copies of gamma: (a+b) - b(1 - gamma).
KOClassRP ko_from_sum(const Integer& a, const Integer& b, unsigned k);

DyadicMod2 q_index(const KOClassRP& alpha);

// Topological index of a class already expressed over RP^{8k+2}.
DyadicMod2 ind_t(const KOClassRP& alpha);

// Reduced eta invariant mod 2 of the twisted Dirac operator on RP^{8k+2}
// with coefficients alpha, as predicted by the index theorem.
DyadicMod2 eta_prediction(const KOClassRP& alpha);

// #{0 < s <= n : s = 0, 1, 2, 4 (mod 8)}.
unsigned adams_phi(unsigned n);
// 2^phi(n), the order of the reduced KO group of RP^n.
Integer ko_order_general(unsigned n);

}  // namespace pinidx::ko
