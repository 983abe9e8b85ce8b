#include "pinidx/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pinidx {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not an exact rational literal: '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return make_rational(n, d);
}

Rational reduce_mod(const Rational& r, const Rational& modulus) {
    if (modulus <= 0) throw std::domain_error("reduce_mod needs a positive modulus");
    Rational q = r / modulus;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational out = r - Rational(fl) * modulus;
    out.canonicalize();
    return out;
}

Integer pow2(unsigned exponent) {
    Integer z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, exponent);
    return z;
}

long dyadic_exponent(const Rational& r) {
    const Integer& d = r.get_den();
    const auto scan = mpz_scan1(d.get_mpz_t(), 0);
    Integer rest;
    mpz_tdiv_q_2exp(rest.get_mpz_t(), d.get_mpz_t(), scan);
    if (rest != 1) return -1;
    return static_cast<long>(scan);
}

}  // namespace pinidx
