#include "pinidx/exterior.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pinidx::exterior {

namespace {

int sign_below(Blade s, unsigned i) { return (std::popcount(s & ((Blade{1} << i) - 1)) & 1) ? -1 : 1; }

std::size_t dim_of(unsigned m) { return std::size_t{1} << m; }

}  // namespace

void require_even_rank(unsigned m) {
    if (m == 0 || m % 2 != 0 || m > max_rank)
        throw std::invalid_argument("exterior rank must be even and in [2, " + std::to_string(max_rank) + "], got " +
                                    std::to_string(m));
}

OperatorMatrix::OperatorMatrix(unsigned m, QMatrix entries) : m_(m), entries_(std::move(entries)) {
    require_even_rank(m);
    if (entries_.rows() != dim_of(m) || entries_.cols() != dim_of(m))
        throw std::invalid_argument("operator matrix must be 2^m x 2^m");
}

OperatorMatrix OperatorMatrix::identity(unsigned m) {
    require_even_rank(m);
    return {m, QMatrix::identity(dim_of(m))};
}

OperatorMatrix OperatorMatrix::zero(unsigned m) {
    require_even_rank(m);
    return {m, QMatrix(dim_of(m), dim_of(m))};
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& o) const {
    if (m_ != o.m_) throw std::invalid_argument("operator rank mismatch");
    return {m_, entries_ * o.entries_};
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& o) const {
    if (m_ != o.m_) throw std::invalid_argument("operator rank mismatch");
    return {m_, entries_ + o.entries_};
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& o) const {
    if (m_ != o.m_) throw std::invalid_argument("operator rank mismatch");
    return {m_, entries_ - o.entries_};
}

OperatorMatrix OperatorMatrix::operator-() const { return {m_, -entries_}; }

OperatorMatrix OperatorMatrix::operator*(const Rational& s) const { return {m_, entries_ * s}; }

Vector unit_vector(unsigned m, unsigned index) {
    if (index == 0 || index > m) throw std::invalid_argument("unit_vector: index out of range");
    Vector v(m);
    v[index - 1] = 1;
    return v;
}

namespace {

void require_vector(unsigned m, std::span<const Rational> e) {
    require_even_rank(m);
    if (e.size() != m) throw std::invalid_argument("vector dimension does not match exterior rank");
}

}  // namespace

OperatorMatrix wedge_op(unsigned m, std::span<const Rational> e) {
    require_vector(m, e);
    QMatrix q(dim_of(m), dim_of(m));
    for (Blade s = 0; s < dim_of(m); ++s)
        for (unsigned i = 0; i < m; ++i) {
            if (e[i] == 0 || (s >> i & 1U)) continue;
            q.add_to(s | (Blade{1} << i), s, e[i] * sign_below(s, i));
        }
    return {m, std::move(q)};
}

OperatorMatrix contraction_op(unsigned m, std::span<const Rational> e) {
    require_vector(m, e);
    QMatrix q(dim_of(m), dim_of(m));
    for (Blade s = 0; s < dim_of(m); ++s)
        for (unsigned i = 0; i < m; ++i) {
            if (e[i] == 0 || !(s >> i & 1U)) continue;
            q.add_to(s & ~(Blade{1} << i), s, e[i] * sign_below(s, i));
        }
    return {m, std::move(q)};
}

OperatorMatrix clifford_op(unsigned m, std::span<const Rational> e) { return wedge_op(m, e) - contraction_op(m, e); }

OperatorMatrix hat_op(unsigned m, std::span<const Rational> e) { return wedge_op(m, e) + contraction_op(m, e); }

OperatorMatrix tilde_op(unsigned m, std::span<const Rational> e) { return hat_op(m, e) * structure_ops(m).sigma; }

StructureOps structure_ops(unsigned m) {
    require_even_rank(m);
    std::vector<Rational> sigma(dim_of(m)), number(dim_of(m));
    for (Blade s = 0; s < dim_of(m); ++s) {
        const auto p = std::popcount(s);
        sigma[s] = (p & 1) ? -1 : 1;
        number[s] = p;
    }
    const OperatorMatrix sigma_op{m, QMatrix::diagonal(sigma)};

    OperatorMatrix tau = OperatorMatrix::identity(m);
    OperatorMatrix tau_star = OperatorMatrix::identity(m);
    for (unsigned i = 1; i <= m; ++i) {
        const Vector e = unit_vector(m, i);
        tau = tau * clifford_op(m, e);
        tau_star = hat_op(m, e) * sigma_op * tau_star;
    }
    return {sigma_op, std::move(tau), std::move(tau_star), OperatorMatrix{m, QMatrix::diagonal(number)}};
}

OperatorMatrix s_operator(unsigned m) {
    require_even_rank(m);
    const OperatorMatrix sigma = structure_ops(m).sigma;
    OperatorMatrix s = OperatorMatrix::zero(m);
    for (unsigned i = 1; i <= m; ++i) {
        const Vector e = unit_vector(m, i);
        s = s + clifford_op(m, e) * (hat_op(m, e) * sigma);
    }
    return s;
}

OperatorMatrix two_n_minus_m(unsigned m) {
    const auto ops = structure_ops(m);
    return ops.number * Rational(2) - OperatorMatrix::identity(m) * Rational(m);
}

OperatorMatrix s_operator_closed_form(unsigned m) { return two_n_minus_m(m) * structure_ops(m).sigma; }

OperatorMatrix clifford_hat_sum(unsigned m) {
    require_even_rank(m);
    OperatorMatrix s = OperatorMatrix::zero(m);
    for (unsigned i = 1; i <= m; ++i) {
        const Vector e = unit_vector(m, i);
        s = s + clifford_op(m, e) * hat_op(m, e);
    }
    return s;
}

std::vector<SpectrumEntry> s_spectrum(unsigned m) {
    const OperatorMatrix s = s_operator(m);
    if (!s.matrix().is_diagonal()) throw std::logic_error("S is not diagonal in the blade basis");
    std::map<Integer, std::uint64_t> counts;
    for (Blade b = 0; b < dim_of(m); ++b) {
        const Rational v = s.get(b, b);
        if (v.get_den() != 1) throw std::logic_error("S has a non-integral eigenvalue");
        ++counts[v.get_num()];
    }
    std::vector<SpectrumEntry> out;
    for (const auto& [value, count] : counts) out.push_back({value, count});
    return out;
}

Eigenspace lowest_eigenspace(const OperatorMatrix& op) {
    if (!op.matrix().is_diagonal()) throw std::invalid_argument("lowest_eigenspace expects a diagonal operator");
    Rational lowest = op.get(0, 0);
    for (Blade b = 1; b < op.size(); ++b) lowest = std::min(lowest, op.get(b, b));
    const OperatorMatrix shifted = op - OperatorMatrix::identity(op.rank()) * lowest;
    return {lowest, nullspace(shifted.matrix())};
}

OperatorMatrix clifford_exterior_iso(unsigned m) {
    require_even_rank(m);
    if (m > 10) throw std::invalid_argument("clifford_exterior_iso: m must be <= 10");
    std::vector<OperatorMatrix> c;
    for (unsigned i = 1; i <= m; ++i) c.push_back(clifford_op(m, unit_vector(m, i)));
    QMatrix q(dim_of(m), dim_of(m));
    for (Blade b = 0; b < dim_of(m); ++b) {
        Vector v(dim_of(m));
        v[0] = 1;
        // e_{b1} ... e_{bk} 1: apply the highest index first.
        for (unsigned i = m; i-- > 0;)
            if (b >> i & 1U) v = c[i].apply(v);
        for (Blade r = 0; r < dim_of(m); ++r)
            if (v[r] != 0) q.set(r, b, v[r]);
    }
    return {m, std::move(q)};
}

bool is_bijective(const OperatorMatrix& op) { return rank(op.matrix()) == op.size(); }

bool preserves_grading(const OperatorMatrix& op) {
    for (Blade r = 0; r < op.size(); ++r)
        for (const auto& entry : op.matrix().row(r))
            if (std::popcount(r) != std::popcount(static_cast<Blade>(entry.first))) return false;
    return true;
}

// --- sections ----------------------------------------------------------------

GaussianSection::GaussianSection(unsigned m) : m_(m) { require_even_rank(m); }

GaussianSection GaussianSection::gaussian(unsigned m) { return monomial(m, Exponents(m, 0), 0); }

GaussianSection GaussianSection::monomial(unsigned m, Exponents alpha, Blade blade, const Rational& coeff) {
    GaussianSection s(m);
    s.add_term(alpha, blade, coeff);
    return s;
}

unsigned GaussianSection::max_degree() const {
    unsigned d = 0;
    for (const auto& [key, c] : terms_)
        d = std::max(d, std::accumulate(key.exponents.begin(), key.exponents.end(), 0U));
    return d;
}

void GaussianSection::add_term(const Exponents& alpha, Blade blade, const Rational& coeff) {
    if (alpha.size() != m_) throw std::invalid_argument("section monomial has wrong number of variables");
    if (blade >= dim_of(m_)) throw std::invalid_argument("section blade outside Lambda(R^m)");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(SectionKey{alpha, blade}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GaussianSection GaussianSection::operator+(const GaussianSection& o) const {
    if (m_ != o.m_) throw std::invalid_argument("section rank mismatch");
    GaussianSection out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.exponents, key.blade, c);
    return out;
}

GaussianSection GaussianSection::operator-(const GaussianSection& o) const { return *this + o * Rational(-1); }

GaussianSection GaussianSection::operator*(const Rational& s) const {
    GaussianSection out(m_);
    if (s == 0) return out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * s);
    return out;
}

OscillatorOperators::OscillatorOperators(unsigned m)
    : m_(m), s_(s_operator(m)), tau_star_(structure_ops(m).tau_star) {
    const auto sigma = structure_ops(m).sigma;
    for (unsigned i = 1; i <= m; ++i) {
        const Vector e = unit_vector(m, i);
        d_cols_.push_back((clifford_op(m, e) * tau_star_).matrix().transpose());
        v_cols_.push_back((tau_star_ * hat_op(m, e) * sigma).matrix().transpose());
    }
    s_cols_ = s_.matrix().transpose();
}

namespace {

void check_rank(unsigned m, const GaussianSection& s) {
    if (s.rank() != m) throw std::invalid_argument("section rank does not match operator rank");
}

void push_through(const QMatrix& cols, const Exponents& alpha, Blade b, const Rational& c, GaussianSection& out) {
    for (const auto& [row, v] : cols.row(b)) out.add_term(alpha, static_cast<Blade>(row), c * v);
}

}  // namespace

GaussianSection OscillatorOperators::partial(unsigned i, const GaussianSection& s) const {
    check_rank(m_, s);
    if (i >= m_) throw std::invalid_argument("partial: coordinate index out of range");
    GaussianSection out(m_);
    for (const auto& [key, c] : s.terms()) {
        Exponents alpha = key.exponents;
        if (alpha[i] > 0) {
            const Rational k = alpha[i];
            --alpha[i];
            out.add_term(alpha, key.blade, c * k);
            ++alpha[i];
        }
        ++alpha[i];
        out.add_term(alpha, key.blade, -c);
    }
    return out;
}

GaussianSection OscillatorOperators::multiply_coordinate(unsigned i, const GaussianSection& s) const {
    check_rank(m_, s);
    if (i >= m_) throw std::invalid_argument("multiply_coordinate: coordinate index out of range");
    GaussianSection out(m_);
    for (const auto& [key, c] : s.terms()) {
        Exponents alpha = key.exponents;
        ++alpha[i];
        out.add_term(alpha, key.blade, c);
    }
    return out;
}

GaussianSection OscillatorOperators::apply_blade_op(const OperatorMatrix& op, const GaussianSection& s) const {
    check_rank(m_, s);
    const QMatrix cols = op.matrix().transpose();
    GaussianSection out(m_);
    for (const auto& [key, c] : s.terms()) push_through(cols, key.exponents, key.blade, c, out);
    return out;
}

GaussianSection OscillatorOperators::apply_D(const GaussianSection& s) const {
    GaussianSection out(m_);
    for (unsigned i = 0; i < m_; ++i) {
        const GaussianSection d = partial(i, s);
        for (const auto& [key, c] : d.terms()) push_through(d_cols_[i], key.exponents, key.blade, c, out);
    }
    return out;
}

GaussianSection OscillatorOperators::apply_V(const GaussianSection& s) const {
    check_rank(m_, s);
    GaussianSection out(m_);
    for (unsigned i = 0; i < m_; ++i)
        for (const auto& [key, c] : s.terms()) {
            Exponents alpha = key.exponents;
            ++alpha[i];
            push_through(v_cols_[i], alpha, key.blade, c, out);
        }
    return out;
}

GaussianSection OscillatorOperators::apply_D_plus_V(const GaussianSection& s) const { return apply_D(s) + apply_V(s); }

GaussianSection OscillatorOperators::apply_harmonic(const GaussianSection& s) const {
    GaussianSection out(m_);
    for (unsigned i = 0; i < m_; ++i) {
        out = out - partial(i, partial(i, s));
        out = out + multiply_coordinate(i, multiply_coordinate(i, s));
    }
    for (const auto& [key, c] : s.terms()) push_through(s_cols_, key.exponents, key.blade, c, out);
    return out;
}

GaussianSection OscillatorOperators::apply_conjugated(const GaussianSection& s) const {
    check_rank(m_, s);
    GaussianSection out(m_);
    for (const auto& [key, c] : s.terms()) {
        Exponents alpha = key.exponents;
        unsigned degree = 0;
        for (unsigned i = 0; i < m_; ++i) {
            degree += alpha[i];
            if (alpha[i] >= 2) {
                const Rational k = alpha[i] * (alpha[i] - 1);
                alpha[i] -= 2;
                out.add_term(alpha, key.blade, -c * k);
                alpha[i] += 2;
            }
        }
        // 2 Z.grad is 2 * degree on a monomial; m + S acts on the blade.
        out.add_term(alpha, key.blade, c * Rational(2 * degree + m_));
        push_through(s_cols_, alpha, key.blade, c, out);
    }
    return out;
}

GaussianSection apply_D(const GaussianSection& s) { return OscillatorOperators(s.rank()).apply_D(s); }

GaussianSection apply_V(const GaussianSection& s) { return OscillatorOperators(s.rank()).apply_V(s); }

std::vector<Exponents> monomials_up_to(unsigned m, unsigned d) {
    std::vector<Exponents> out;
    Exponents current(m, 0);
    // Enumerate by total degree, then lexicographically within a degree.
    for (unsigned total = 0; total <= d; ++total) {
        auto recurse = [&](auto&& self, unsigned idx, unsigned remaining) -> void {
            if (idx + 1 == m) {
                current[idx] = remaining;
                out.push_back(current);
                return;
            }
            for (unsigned k = remaining + 1; k-- > 0;) {
                current[idx] = k;
                self(self, idx + 1, remaining - k);
            }
        };
        recurse(recurse, 0, total);
    }
    return out;
}

OscillatorKernel oscillator_kernel(unsigned m, unsigned d) {
    require_even_rank(m);
    const auto monomials = monomials_up_to(m, d);
    const std::size_t blades = dim_of(m);
    const std::size_t space = monomials.size() * blades;
    if (space > max_oscillator_space)
        throw std::length_error("oscillator_kernel: truncated space of dimension " + std::to_string(space) +
                                " exceeds " + std::to_string(max_oscillator_space));

    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

    const OscillatorOperators ops(m);
    QMatrix h(space, space);
    for (std::size_t mi = 0; mi < monomials.size(); ++mi)
        for (Blade b = 0; b < blades; ++b) {
            const auto image = ops.apply_conjugated(GaussianSection::monomial(m, monomials[mi], b));
            const std::size_t col = mi * blades + b;
            for (const auto& [key, c] : image.terms()) h.set(index.at(key.exponents) * blades + key.blade, col, c);
        }

    OscillatorKernel out;
    out.space_dimension = space;
    for (const auto& v : nullspace(h)) {
        GaussianSection s(m);
        for (std::size_t i = 0; i < space; ++i)
            if (v[i] != 0) s.add_term(monomials[i / blades], static_cast<Blade>(i % blades), v[i]);
        out.basis.push_back(std::move(s));
    }
    out.dimension = out.basis.size();
    return out;
}

}  // namespace pinidx::exterior
