#pragma once

// Self-checks shared by `pinidx verify-all` and the acceptance test binary.
// Each check recomputes its expected values with an oracle that does not
// share code with the routine under test where that is practical.

#include "pinidx/congruence.hpp"
#include "pinidx/matrix.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace pinidx::verify {

inline constexpr std::uint64_t default_seed = 0x5eed2024ULL;

struct Check {
    std::string name;
    int criterion = 0;  // acceptance criterion number, 0 for plain property suites
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;  // 0 means unbounded
};

// Acceptance criteria 1..9. Wall time above the budget counts as a failure.
Check criterion_ko_order();
Check criterion_pin_obstruction();
Check criterion_homomorphism(std::uint64_t seed = default_seed);
Check criterion_clifford_reps();
Check criterion_exterior_identities();
Check criterion_oscillator(std::uint64_t seed = default_seed);
Check criterion_series();
Check criterion_congruence(std::uint64_t seed = default_seed);
Check criterion_denominators(std::uint64_t seed = default_seed);

std::vector<Check> acceptance(std::uint64_t seed = default_seed);

// Module property suites beyond the acceptance list.
std::vector<Check> properties(std::uint64_t seed = default_seed);

// acceptance() followed by properties().
std::vector<Check> all(std::uint64_t seed = default_seed);

// --- oracles and generators, exposed for the unit tests ----------------------------

// Rational point on S^{n-1} from a stereographic parameter in Q^{n-1}.
Vector random_unit_vector(std::mt19937_64& rng, unsigned n);

// (2 - 2^{2k}) B_{2k} / ((2k)! 4^k), the x^{2k} coefficient of (x/2)/sinh(x/2).
Rational a_hat_genus_coefficient(unsigned k);
Rational bernoulli(unsigned n);

// A_i expanded over r formal roots y_j = x_j^2 and compared with the
// candidate after substituting p_k = e_k(y_1..y_r).
bool a_hat_matches_root_oracle(const series::GradedPoly& candidate, unsigned i, unsigned roots);

// Dataset satisfying a6 and a7 exactly: everything random except the B value
// of e^{4k+1} and one K value, which are solved for.
congruence::Data synthetic_dataset(std::mt19937_64& rng, unsigned level);

}  // namespace pinidx::verify
