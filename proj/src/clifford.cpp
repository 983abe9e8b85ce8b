#include "pinidx/clifford.hpp"

#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace pinidx::clifford {

int blade_product_sign(Blade a, Blade b) {
    // Moving each factor of b left past the larger factors of a, then
    // contracting e_i e_i = -1 for every shared index.
    unsigned swaps = 0;
    for (Blade rest = b; rest != 0; rest &= rest - 1) {
        const Blade bit = rest & (~rest + 1);
        swaps += static_cast<unsigned>(std::popcount(a & ~((bit << 1) - 1)));
    }
    swaps += static_cast<unsigned>(std::popcount(a & b));
    return (swaps & 1U) ? -1 : 1;
}

namespace {

void require_dim(unsigned n) {
    if (n == 0 || n > max_dimension)
        throw std::invalid_argument("Clifford dimension must be in [1, " + std::to_string(max_dimension) + "]");
}

Blade full_blade(unsigned n) { return n == 32 ? ~Blade{0} : ((Blade{1} << n) - 1); }

}  // namespace

CliffordElement::CliffordElement(unsigned n) : n_(n) { require_dim(n); }

CliffordElement CliffordElement::scalar(unsigned n, const Rational& value) { return blade(n, 0, value); }

CliffordElement CliffordElement::basis(unsigned n, unsigned index) {
    if (index == 0 || index > n) throw std::invalid_argument("basis index out of range");
    return blade(n, Blade{1} << (index - 1));
}

CliffordElement CliffordElement::blade(unsigned n, Blade b, const Rational& coeff) {
    CliffordElement x(n);
    if ((b & ~full_blade(n)) != 0) throw std::invalid_argument("blade outside {1..n}");
    x.add_term(b, coeff);
    return x;
}

CliffordElement CliffordElement::from_vector(std::span<const Rational> v) {
    CliffordElement x(static_cast<unsigned>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) x.add_term(Blade{1} << i, v[i]);
    return x;
}

void CliffordElement::add_term(Blade b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational CliffordElement::coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool CliffordElement::is_homogeneous(unsigned grade) const {
    for (const auto& [b, c] : terms_)
        if (static_cast<unsigned>(std::popcount(b)) != grade) return false;
    return true;
}

std::optional<Vector> CliffordElement::as_vector() const {
    if (!is_homogeneous(1)) return std::nullopt;
    Vector v(n_);
    for (const auto& [b, c] : terms_) v[static_cast<std::size_t>(std::countr_zero(b))] = c;
    return v;
}

CliffordElement CliffordElement::reversed() const {
    CliffordElement out(n_);
    for (const auto& [b, c] : terms_) {
        const auto k = static_cast<unsigned>(std::popcount(b));
        out.add_term(b, ((k * (k - 1) / 2) & 1U) ? Rational(-c) : c);
    }
    return out;
}

CliffordElement CliffordElement::graded_involution() const {
    CliffordElement out(n_);
    for (const auto& [b, c] : terms_) out.add_term(b, (std::popcount(b) & 1) ? Rational(-c) : c);
    return out;
}

CliffordElement CliffordElement::operator+(const CliffordElement& other) const {
    if (n_ != other.n_) throw std::invalid_argument("Clifford dimension mismatch");
    CliffordElement out = *this;
    for (const auto& [b, c] : other.terms_) out.add_term(b, c);
    return out;
}

CliffordElement CliffordElement::operator-() const { return *this * Rational(-1); }

CliffordElement CliffordElement::operator-(const CliffordElement& other) const { return *this + (-other); }

CliffordElement CliffordElement::operator*(const Rational& s) const {
    CliffordElement out(n_);
    for (const auto& [b, c] : terms_) out.add_term(b, c * s);
    return out;
}

CliffordElement CliffordElement::operator*(const CliffordElement& other) const {
    if (n_ != other.n_) throw std::invalid_argument("Clifford dimension mismatch");
    CliffordElement out(n_);
    for (const auto& [a, x] : terms_)
        for (const auto& [b, y] : other.terms_) {
            const Rational p = x * y;
            out.add_term(a ^ b, blade_product_sign(a, b) > 0 ? p : Rational(-p));
        }
    return out;
}

std::string CliffordElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << pinidx::to_string(c);
        for (unsigned i = 0; i < n_; ++i)
            if (b >> i & 1U) os << "*e" << (i + 1);
    }
    return os.str();
}

CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y) { return x * y; }

Rational dot(std::span<const Rational> u, std::span<const Rational> v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

// --- pin^- words -----------------------------------------------------------

PinWord::PinWord(unsigned n, std::vector<Vector> factors) : n_(n), factors_(std::move(factors)) {
    require_dim(n);
    for (const auto& f : factors_) {
        if (f.size() != n) throw std::invalid_argument("pin word factor has wrong dimension");
        if (dot(f, f) != 1) throw std::invalid_argument("pin word factor is not a unit vector");
    }
}

PinWord PinWord::of_basis(unsigned n, std::initializer_list<unsigned> indices) {
    std::vector<Vector> factors;
    for (unsigned i : indices) {
        if (i == 0 || i > n) throw std::invalid_argument("basis index out of range");
        Vector v(n);
        v[i - 1] = 1;
        factors.push_back(std::move(v));
    }
    return PinWord(n, std::move(factors));
}

CliffordElement PinWord::element() const {
    CliffordElement x = CliffordElement::scalar(n_, 1);
    for (const auto& f : factors_) x = x * CliffordElement::from_vector(f);
    return x;
}

CliffordElement PinWord::inverse_element() const {
    CliffordElement x = CliffordElement::scalar(n_, (factors_.size() & 1U) ? -1 : 1);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) x = x * CliffordElement::from_vector(*it);
    return x;
}

PinWord PinWord::concat(const PinWord& other) const {
    if (n_ != other.n_) throw std::invalid_argument("pin word dimension mismatch");
    std::vector<Vector> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return PinWord(n_, std::move(all));
}

int chi(const PinWord& w) { return sign_of_parity(w.length()); }

Vector twisted_adjoint(const PinWord& w, std::span<const Rational> v) {
    if (v.size() != w.dim()) throw std::invalid_argument("twisted_adjoint: dimension mismatch");
    CliffordElement x = CliffordElement::from_vector(v);
    for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it) {
        const CliffordElement u = CliffordElement::from_vector(*it);
        x = u * x * u;
    }
    auto out = x.as_vector();
    if (!out) throw std::logic_error("twisted adjoint left the degree-1 part: " + x.to_string());
    return *out;
}

// --- classification ----------------------------------------------------------

std::uint64_t AlgebraType::field_dim() const {
    switch (field) {
        case Field::Real: return 1;
        case Field::Complex: return 2;
        case Field::Quaternion: return 4;
    }
    return 1;
}

std::uint64_t AlgebraType::total_real_dim() const {
    return (two_summands ? 2 : 1) * matrix_size * matrix_size * field_dim();
}

std::string AlgebraType::describe() const {
    const char* f = field == Field::Real ? "R" : field == Field::Complex ? "C" : "H";
    std::string one = "M" + std::to_string(matrix_size) + "(" + f + ")";
    return two_summands ? one + " + " + one : one;
}

AlgebraType classify(unsigned n) {
    if (n == 0 || n > 63) throw std::invalid_argument("classify: n must be in [1, 63]");
    struct Row {
        Field field;
        std::uint64_t size;
        bool doubled;
    };
    // c(R^r), r = 0..7, for the convention e^2 = -1.
    static constexpr std::array<Row, 8> table{{
        {Field::Real, 1, false},
        {Field::Complex, 1, false},
        {Field::Quaternion, 1, false},
        {Field::Quaternion, 1, true},
        {Field::Quaternion, 2, false},
        {Field::Complex, 4, false},
        {Field::Real, 8, false},
        {Field::Real, 8, true},
    }};
    const Row& r = table[n % 8];
    AlgebraType t;
    t.n = n;
    t.field = r.field;
    t.two_summands = r.doubled;
    t.matrix_size = r.size << (4 * (n / 8));
    t.irrep_real_dim = t.matrix_size * t.field_dim();
    return t;
}

// --- representations -----------------------------------------------------------

QMatrix CliffordRep::act(std::span<const Rational> v) const {
    if (v.size() != n) throw std::invalid_argument("representation: vector dimension mismatch");
    QMatrix out(dim(), dim());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out += generators[i] * v[i];
    return out;
}

QMatrix CliffordRep::act(const PinWord& w) const {
    if (w.dim() != n) throw std::invalid_argument("representation: word dimension mismatch");
    QMatrix out = QMatrix::identity(dim());
    for (const auto& f : w.factors()) out = out * act(f);
    return out;
}

QMatrix CliffordRep::act(const CliffordElement& x) const {
    if (x.dim() != n) throw std::invalid_argument("representation: element dimension mismatch");
    QMatrix out(dim(), dim());
    for (const auto& [b, c] : x.terms()) {
        QMatrix term = QMatrix::identity(dim());
        for (unsigned i = 0; i < n; ++i)
            if (b >> i & 1U) term = term * generators[i];
        out += term * c;
    }
    return out;
}

bool satisfies_clifford_relations(const CliffordRep& rep) {
    if (rep.generators.size() != rep.n) return false;
    const std::size_t d = rep.dim();
    const QMatrix minus_two = QMatrix::identity(d) * Rational(-2);
    for (std::size_t i = 0; i < rep.n; ++i) {
        const QMatrix& gi = rep.generators[i];
        if (gi.rows() != d || gi.cols() != d) return false;
        for (std::size_t j = i; j < rep.n; ++j) {
            const QMatrix& gj = rep.generators[j];
            const QMatrix anti = gi * gj + gj * gi;
            if (i == j ? !(anti == minus_two) : !anti.is_zero()) return false;
        }
    }
    return true;
}

namespace {

struct Quaternion {
    std::array<int, 4> c{};  // 1, i, j, k

    Quaternion operator*(const Quaternion& o) const {
        const auto& [a1, b1, c1, d1] = c;
        const auto& [a2, b2, c2, d2] = o.c;
        return {{a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                 a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2}};
    }
    Quaternion operator+(const Quaternion& o) const {
        return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}};
    }
    Quaternion operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }
    Quaternion conj() const { return {{c[0], -c[1], -c[2], -c[3]}}; }
    static Quaternion unit(int idx) {
        Quaternion q;
        q.c[static_cast<std::size_t>(idx)] = 1;
        return q;
    }
};

// Octonions by Cayley-Dickson doubling: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
struct Octonion {
    Quaternion lo, hi;

    Octonion operator*(const Octonion& o) const {
        return {lo * o.lo + -(o.hi.conj() * hi), o.hi * lo + hi * o.lo.conj()};
    }
    static Octonion unit(int idx) {
        Octonion x;
        if (idx < 4)
            x.lo = Quaternion::unit(idx);
        else
            x.hi = Quaternion::unit(idx - 4);
        return x;
    }
    int coord(int idx) const {
        return idx < 4 ? lo.c[static_cast<std::size_t>(idx)] : hi.c[static_cast<std::size_t>(idx - 4)];
    }
};

QMatrix quaternion_left(int unit) {
    QMatrix m(4, 4);
    const Quaternion q = Quaternion::unit(unit);
    for (int col = 0; col < 4; ++col) {
        const Quaternion p = q * Quaternion::unit(col);
        for (int row = 0; row < 4; ++row)
            if (p.c[static_cast<std::size_t>(row)] != 0)
                m.set(static_cast<std::size_t>(row), static_cast<std::size_t>(col), p.c[static_cast<std::size_t>(row)]);
    }
    return m;
}

QMatrix octonion_left(int unit) {
    QMatrix m(8, 8);
    const Octonion q = Octonion::unit(unit);
    for (int col = 0; col < 8; ++col) {
        const Octonion p = q * Octonion::unit(col);
        for (int row = 0; row < 8; ++row)
            if (p.coord(row) != 0) m.set(static_cast<std::size_t>(row), static_cast<std::size_t>(col), p.coord(row));
    }
    return m;
}

QMatrix rotation_2x2() {
    QMatrix j(2, 2);
    j.set(0, 1, -1);
    j.set(1, 0, 1);
    return j;
}

std::vector<QMatrix> seed_generators(unsigned n) {
    std::vector<QMatrix> g;
    if (n == 1) {
        g.push_back(rotation_2x2());
    } else if (n <= 3) {
        for (unsigned i = 1; i <= n; ++i) g.push_back(-quaternion_left(static_cast<int>(i)));
    } else if (n <= 7) {
        for (unsigned i = 1; i <= n; ++i) g.push_back(octonion_left(static_cast<int>(i)));
    } else {
        // c(R^8) on R^8 (x) R^2 from the seven octonion generators.
        QMatrix z(2, 2);
        z.set(0, 0, 1);
        z.set(1, 1, -1);
        for (unsigned i = 1; i <= 7; ++i) g.push_back(kron(octonion_left(static_cast<int>(i)), z));
        g.push_back(kron(QMatrix::identity(8), rotation_2x2()));
    }
    return g;
}

QMatrix product(const std::vector<QMatrix>& gens) {
    QMatrix p = QMatrix::identity(gens.front().rows());
    for (const auto& g : gens) p = p * g;
    return p;
}

}  // namespace

CliffordRep build_rep(unsigned n) {
    if (n == 0 || n > 12) throw std::invalid_argument("build_rep: n must be in [1, 12]");
    CliffordRep rep{n, {}};
    if (n <= 8) {
        rep.generators = seed_generators(n);
    } else {
        // c(R^{r+8}) = c(R^r) (x) M16(R): g_i (x) w8 and 1 (x) E_j, where
        // w8 = E_1...E_8 anticommutes with every E_j and squares to +1.
        const auto base = seed_generators(n - 8);
        const auto eight = seed_generators(8);
        const QMatrix w8 = product(eight);
        for (const auto& g : base) rep.generators.push_back(kron(g, w8));
        const QMatrix id = QMatrix::identity(base.front().rows());
        for (const auto& e : eight) rep.generators.push_back(kron(id, e));
    }
    if (n % 4 == 3) {
        const QMatrix s = product(rep.generators);
        if (s == -QMatrix::identity(rep.dim()))
            rep.generators.front() = -rep.generators.front();
        else if (!(s == QMatrix::identity(rep.dim())))
            throw std::logic_error("build_rep: volume element is not +-Id");
    }
    if (!satisfies_clifford_relations(rep)) throw std::logic_error("build_rep: Clifford relation check failed");
    return rep;
}

std::size_t span_dimension(const CliffordRep& rep) {
    if (rep.n > 16) throw std::invalid_argument("span_dimension: too many generators");
    const std::size_t d = rep.dim();
    std::vector<SparseRow> flat;
    const std::size_t count = std::size_t{1} << rep.n;
    flat.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        QMatrix p = QMatrix::identity(d);
        for (unsigned i = 0; i < rep.n; ++i)
            if (mask >> i & 1U) p = p * rep.generators[i];
        SparseRow row;
        for (std::size_t r = 0; r < d; ++r)
            for (const auto& [c, v] : p.row(r)) row.emplace(r * d + c, v);
        flat.push_back(std::move(row));
    }
    return rank(std::move(flat));
}

bool equivariance_check(const PinWord& w, std::span<const Rational> e, const CliffordRep& rep) {
    if (!satisfies_clifford_relations(rep))
        throw std::invalid_argument("equivariance_check: representation violates the Clifford relations");
    if (w.dim() != rep.n || e.size() != rep.n) throw std::invalid_argument("equivariance_check: dimension mismatch");
    const QMatrix omega = rep.act(w);
    const QMatrix lhs = omega * rep.act(e);
    const Vector moved = twisted_adjoint(w, e);
    const QMatrix rhs = rep.act(moved) * omega * Rational(chi(w));
    return lhs == rhs;
}

CliffordElement volume_element(unsigned n) {
    require_dim(n);
    return CliffordElement::blade(n, full_blade(n));
}

bool is_central(const CliffordElement& x) {
    for (unsigned i = 1; i <= x.dim(); ++i) {
        const auto e = CliffordElement::basis(x.dim(), i);
        if (!(e * x == x * e)) return false;
    }
    return true;
}

int square_sign(const CliffordElement& x) {
    const CliffordElement sq = x * x;
    if (sq == CliffordElement::scalar(x.dim(), 1)) return 1;
    if (sq == CliffordElement::scalar(x.dim(), -1)) return -1;
    throw std::domain_error("square_sign: x*x is not +-1");
}

bool factorization_dim_check(unsigned k, unsigned l) {
    if (l == 0) throw std::invalid_argument("factorization_dim_check: E must have positive dimension (l >= 1)");
    const auto s_plus_g = classify(8 * k + 3).irrep_real_dim;
    const auto f_e = classify(8 * l).irrep_real_dim;
    const auto s_plus_sum = classify(8 * (k + l) + 3).irrep_real_dim;
    return s_plus_sum == s_plus_g * f_e;
}

}  // namespace pinidx::clifford
