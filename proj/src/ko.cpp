#include "pinidx/ko.hpp"

#include <stdexcept>

namespace pinidx::ko {

DyadicMod2::DyadicMod2(const Rational& value) {
    if (dyadic_exponent(value) < 0) throw std::invalid_argument("not a dyadic rational: " + pinidx::to_string(value));
    value_ = reduce_mod(value, 2);
}

unsigned DyadicMod2::denominator_exponent() const { return static_cast<unsigned>(dyadic_exponent(value_)); }

namespace {

void require_level(unsigned k) {
    if (k > max_level) throw std::invalid_argument("KO level k must be <= " + std::to_string(max_level));
}

Integer mod_nonnegative(const Integer& a, const Integer& modulus) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

}  // namespace

Integer ko_order(unsigned k) {
    require_level(k);
    return pow2(4 * k + 2);
}

KOClassRP::KOClassRP(unsigned k, Integer m, Integer n) : k_(k), m_(std::move(m)), n_(std::move(n)) {
    n_ = mod_nonnegative(n_, ko_order(k));
}

void KOClassRP::require_same_level(const KOClassRP& o) const {
    if (k_ != o.k_) throw std::invalid_argument("KO classes over different projective spaces");
}

KOClassRP KOClassRP::operator+(const KOClassRP& o) const {
    require_same_level(o);
    return {k_, m_ + o.m_, n_ + o.n_};
}

KOClassRP KOClassRP::operator-() const { return {k_, -m_, -n_}; }

KOClassRP KOClassRP::operator-(const KOClassRP& o) const { return *this + (-o); }

KOClassRP KOClassRP::operator*(const Integer& s) const { return {k_, m_ * s, n_ * s}; }

std::string KOClassRP::to_string() const {
    return pinidx::to_string(m_) + " + " + pinidx::to_string(n_) + "(1-gamma) over RP^" + std::to_string(8 * k_ + 2);
}

KOClassRP ko_from_sum(const Integer& a, const Integer& b, unsigned k) {
    if (a < 0 || b < 0) throw std::invalid_argument("ko_from_sum: multiplicities must be non-negative");
    return {k, a + b, -b};
}

DyadicMod2 q_index(const KOClassRP& alpha) {
    const unsigned k = alpha.level();
    return DyadicMod2(make_rational(alpha.rank(), pow2(4 * k + 2)) + make_rational(alpha.torsion(), pow2(4 * k + 1)));
}

DyadicMod2 ind_t(const KOClassRP& alpha) { return q_index(alpha); }

DyadicMod2 eta_prediction(const KOClassRP& alpha) { return q_index(alpha); }

unsigned adams_phi(unsigned n) {
    unsigned count = 0;
    for (unsigned s = 1; s <= n; ++s) {
        const unsigned r = s % 8;
        if (r == 0 || r == 1 || r == 2 || r == 4) ++count;
    }
    return count;
}

Integer ko_order_general(unsigned n) {
    if (n == 0) throw std::invalid_argument("ko_order_general: n must be >= 1");
    return pow2(adams_phi(n));
}

}  // namespace pinidx::ko
