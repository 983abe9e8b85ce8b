#include "pinidx/projective.hpp"

#include <stdexcept>

namespace pinidx::rp {

Z2Poly::Z2Poly(unsigned q) : q_(q), bits_(q + 1) {
    if (q == 0) throw std::invalid_argument("Z2Poly: truncation degree must be positive");
}

Z2Poly Z2Poly::one(unsigned q) { return monomial(q, 0); }

Z2Poly Z2Poly::monomial(unsigned q, unsigned degree) {
    Z2Poly p(q);
    if (degree <= q) p.bits_.set(degree);
    return p;
}

void Z2Poly::set_coeff(unsigned degree, bool value) {
    if (degree > q_) throw std::out_of_range("Z2Poly: degree above truncation");
    bits_[degree] = value;
}

Z2Poly Z2Poly::part(unsigned degree) const {
    Z2Poly p(q_);
    if (coeff(degree)) p.bits_.set(degree);
    return p;
}

void Z2Poly::require_same_ring(const Z2Poly& o) const {
    if (q_ != o.q_) throw std::invalid_argument("Z2Poly: classes live in different truncated rings");
}

Z2Poly Z2Poly::operator+(const Z2Poly& o) const {
    require_same_ring(o);
    Z2Poly out = *this;
    out.bits_ ^= o.bits_;
    return out;
}

Z2Poly Z2Poly::operator*(const Z2Poly& o) const {
    require_same_ring(o);
    Z2Poly out(q_);
    // Shifting left drops bits beyond the stored size, which is the truncation.
    for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i)) out.bits_ ^= o.bits_ << i;
    return out;
}

std::string Z2Poly::to_string() const {
    std::string s;
    for (unsigned d = 0; d <= q_; ++d) {
        if (!bits_[d]) continue;
        if (!s.empty()) s += " + ";
        s += d == 0 ? "1" : d == 1 ? "a" : "a^" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

Z2Poly sw_total(unsigned q) {
    Z2Poly w(q);
    for (unsigned i = 0; i <= q; ++i)
        if (binomial_odd(std::uint64_t{q} + 1, i)) w.set_coeff(i, true);
    return w;
}

bool pin_obstruction(unsigned q) {
    if (q < 2) throw std::invalid_argument("pin_obstruction: q must be >= 2");
    const Z2Poly w = sw_total(q);
    const Z2Poly w1 = w.part(1);
    const Z2Poly w2 = w.part(2);
    return (w1 * w1 + w2).coeff(2);
}

bool pin_obstruction_closed_form(unsigned q) {
    const std::uint64_t v = (std::uint64_t{q} + 1) * (3 * std::uint64_t{q} + 2) / 2;
    return (v & 1U) != 0;
}

StructureKind structure_kind(unsigned q) {
    if (q < 2) throw std::invalid_argument("structure_kind: q must be >= 2");
    if (pin_obstruction(q)) return StructureKind::NotPinMinus;
    const bool orientable = !sw_total(q).coeff(1);
    return orientable ? StructureKind::Spin : StructureKind::PinMinusNonorientable;
}

std::string to_string(StructureKind kind) {
    switch (kind) {
        case StructureKind::Spin: return "spin";
        case StructureKind::PinMinusNonorientable: return "pin- nonorientable";
        case StructureKind::NotPinMinus: return "not pin-";
    }
    return "?";
}

bool admits_pin_minus(const Z2Poly& w1, const Z2Poly& w2) { return (w1 * w1 + w2).is_zero(); }

}  // namespace pinidx::rp
