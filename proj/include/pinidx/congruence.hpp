#pragma once

// Mechanical assembly of the codimension-two congruences relating
// characteristic numbers of K^{8k+4}, characteristic numbers of the pin^-
// submanifold B^{8k+2} with normal bundle N (Euler class e), and mod 2
// topological indices on B.
//
// Data document:
//
//     level = 1            # k
//     rank_E = 3           # only for a1
//     [K]                  # pairing on [K], dimension 8k+4 implied
//     p1^3 = 2
//     [B]                  # pairing on [B], dimension 8k+2 implied
//     e^5 = 1/3
//     [index]
//     E = ko 3 1           # q_{8k+2}(3 + 1(1-gamma))
//     N = 3/4              # or a dyadic rational directly
//
// Index names: E, TB, N, RplusO (the bundle R + o(TB)). Sections may repeat
// "dim = D", which must agree with the level. Everything is computed in
// Q/2Z, or Q/Z for a9.

#include "pinidx/charseries.hpp"
#include "pinidx/ko.hpp"
#include "pinidx/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pinidx::congruence {

enum class Which { A1, A6, A7, A8, A9 };

Which parse_which(std::string_view name);
std::string to_string(Which w);

// Levels with dim K <= 16, the A-hat range.
inline constexpr unsigned max_level = 1;

struct Data {
    unsigned level = 0;
    Integer rank_E = 0;
    std::optional<series::PairingFunctional> K;
    std::optional<series::PairingFunctional> B;
    std::map<std::string, ko::DyadicMod2> index;

    unsigned dim_K() const { return 8 * level + 4; }
    unsigned dim_B() const { return 8 * level + 2; }

    static Data parse(std::string_view text);
    std::string serialize() const;
};

struct Term {
    std::string name;
    Rational value;
};

struct Report {
    Which which;
    Rational lhs;
    Rational rhs;
    Rational modulus;
    Rational residue;  // (lhs - rhs) reduced into [0, modulus)
    bool passed = false;
    std::vector<Term> terms;
};

// Throws std::invalid_argument on missing inputs for the chosen congruence.
Report check(Which which, const Data& data);

// Building blocks, exposed for tests.
series::GradedPoly k_integrand_tangent(unsigned level);
series::GradedPoly k_integrand_twisted(unsigned level, const Integer& rank_E);
// A(TB) tanh(e/4) ch, with ch given on B.
series::GradedPoly b_tanh_term(unsigned level, const series::GradedPoly& ch);
series::GradedPoly b_normal_correction(unsigned level);
series::GradedPoly b_sinh_term(unsigned level);

}  // namespace pinidx::congruence
