#include "pinidx/charseries.hpp"

#include "pinidx/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pinidx::series {

// --- RationalSeries -------------------------------------------------------------

RationalSeries::RationalSeries(unsigned order) : coeffs_(order + 1) {}

RationalSeries::RationalSeries(unsigned order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

RationalSeries RationalSeries::constant(unsigned order, const Rational& c) {
    RationalSeries f(order);
    f.coeffs_[0] = c;
    return f;
}

RationalSeries RationalSeries::variable(unsigned order) {
    RationalSeries f(order);
    if (order >= 1) f.coeffs_[1] = 1;
    return f;
}

RationalSeries RationalSeries::exp_scaled(unsigned order, const Rational& scale) {
    RationalSeries f(order);
    Rational term = 1;
    for (unsigned k = 0; k <= order; ++k) {
        f.coeffs_[k] = term;
        term = term * scale / (k + 1);
    }
    return f;
}

RationalSeries RationalSeries::truncated(unsigned order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return {order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1)};
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    RationalSeries out(std::min(order(), o.order()));
    for (unsigned k = 0; k <= out.order(); ++k) out.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return out;
}

RationalSeries RationalSeries::operator-() const { return *this * Rational(-1); }

RationalSeries RationalSeries::operator-(const RationalSeries& o) const { return *this + (-o); }

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    RationalSeries out(std::min(order(), o.order()));
    for (unsigned i = 0; i <= out.order(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; i + j <= out.order(); ++j) out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return out;
}

RationalSeries RationalSeries::operator*(const Rational& s) const {
    RationalSeries out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

RationalSeries RationalSeries::inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("series inverse: constant term is zero");
    RationalSeries out(order());
    const Rational inv0 = 1 / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (unsigned k = 1; k <= order(); ++k) {
        Rational acc = 0;
        for (unsigned j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
        out.coeffs_[k] = -acc * inv0;
    }
    return out;
}

RationalSeries RationalSeries::operator/(const RationalSeries& o) const { return *this * o.inverse(); }

RationalSeries RationalSeries::divided_by_e() const {
    if (coeffs_[0] != 0) throw std::domain_error("series division by e: constant term is nonzero");
    if (order() == 0) throw std::domain_error("series division by e: no coefficients left");
    return {order() - 1, std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end())};
}

RationalSeries RationalSeries::times_e() const {
    RationalSeries out(order());
    for (unsigned k = 0; k < order(); ++k) out.coeffs_[k + 1] = coeffs_[k];
    return out;
}

bool RationalSeries::is_odd() const {
    for (unsigned k = 0; k <= order(); k += 2)
        if (coeffs_[k] != 0) return false;
    return true;
}

bool RationalSeries::is_even() const {
    for (unsigned k = 1; k <= order(); k += 2)
        if (coeffs_[k] != 0) return false;
    return true;
}

std::string RationalSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned k = 0; k <= order(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << pinidx::to_string(coeffs_[k]);
        if (k == 1) os << "*e";
        if (k > 1) os << "*e^" << k;
    }
    if (first) os << "0";
    os << " + O(e^" << order() + 1 << ")";
    return os.str();
}

RationalSeries hyperbolic(Hyperbolic f, const Rational& scale, unsigned order) {
    switch (f) {
        case Hyperbolic::Sinh:
            return (RationalSeries::exp_scaled(order, scale) - RationalSeries::exp_scaled(order, -scale)) *
                   Rational(1, 2);
        case Hyperbolic::Cosh:
            return (RationalSeries::exp_scaled(order, scale) + RationalSeries::exp_scaled(order, -scale)) *
                   Rational(1, 2);
        case Hyperbolic::Tanh:
            return hyperbolic(Hyperbolic::Sinh, scale, order) / hyperbolic(Hyperbolic::Cosh, scale, order);
        case Hyperbolic::XOverSinh: {
            if (scale == 0) return RationalSeries::constant(order, 1);
            const RationalSeries sinh_over_e = hyperbolic(Hyperbolic::Sinh, scale, order + 1).divided_by_e();
            return sinh_over_e.inverse() * scale;
        }
    }
    throw std::invalid_argument("unknown hyperbolic function");
}

RationalSeries ch_rank2_complexified(unsigned order) {
    return RationalSeries::exp_scaled(order, 1) + RationalSeries::exp_scaled(order, -1);
}

namespace {

void require_meaningful(unsigned order) {
    if (order < 4) throw std::invalid_argument("series identity needs truncation order >= 4");
}

const Rational half(1, 2);
const Rational quarter(1, 4);

// (a - b) / (2 sinh(e/2)) where a - b vanishes at e = 0.
RationalSeries over_two_sinh_half(const RationalSeries& numerator) {
    const unsigned w = numerator.order();
    const RationalSeries den = hyperbolic(Hyperbolic::Sinh, half, w) * Rational(2);
    return numerator.divided_by_e() / den.divided_by_e();
}

}  // namespace

RationalSeries a45_lhs(unsigned order) {
    const unsigned w = order + 4;
    const RationalSeries t = hyperbolic(Hyperbolic::Tanh, half, w);
    const RationalSeries num = t - RationalSeries::variable(w) * half;  // O(e^3)
    // num / (e t) = e * (num / e^3) / (t / e)
    const RationalSeries first = (num.divided_by_e().divided_by_e().divided_by_e() / t.divided_by_e()).times_e();
    const RationalSeries second =
        (hyperbolic(Hyperbolic::XOverSinh, half, w) - RationalSeries::constant(w, 1)).divided_by_e();
    return (first + second).truncated(order);
}

RationalSeries a45_rhs(unsigned order) { return hyperbolic(Hyperbolic::Tanh, quarter, order) * -half; }

RationalSeries normal_bundle_correction(unsigned order) {
    const unsigned w = order + 2;
    const RationalSeries numerator = ch_rank2_complexified(w) - hyperbolic(Hyperbolic::Cosh, half, w) * Rational(2);
    return over_two_sinh_half(numerator).truncated(order);
}

RationalSeries a8_lhs(unsigned order) {
    const unsigned w = order + 2;
    const RationalSeries first = hyperbolic(Hyperbolic::Tanh, quarter, w) * hyperbolic(Hyperbolic::Cosh, 1, w);
    const RationalSeries numerator = hyperbolic(Hyperbolic::Cosh, 1, w) - hyperbolic(Hyperbolic::Cosh, half, w);
    const RationalSeries second =
        numerator.divided_by_e() / hyperbolic(Hyperbolic::Sinh, half, w).divided_by_e();
    return (first.truncated(order) + second.truncated(order));
}

RationalSeries a8_rhs(unsigned order) { return hyperbolic(Hyperbolic::Sinh, 1, order); }

bool identity_a45(unsigned order) {
    require_meaningful(order);
    return a45_lhs(order) == a45_rhs(order);
}

bool identity_a8(unsigned order) {
    require_meaningful(order);
    return a8_lhs(order) == a8_rhs(order);
}

// --- monomials and graded polynomials ---------------------------------------------

unsigned symbol_degree(std::string_view symbol) {
    if (symbol == "e") return 2;
    if (symbol.size() >= 2 && (symbol[0] == 'p' || symbol[0] == 'q')) {
        unsigned idx = 0;
        for (char c : symbol.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("unknown symbol");
            idx = idx * 10 + static_cast<unsigned>(c - '0');
            if (idx > 1000) throw std::invalid_argument("symbol index too large");
        }
        if (idx == 0 || symbol[1] == '0') throw std::invalid_argument("Pontryagin index must be positive");
        return 4 * idx;
    }
    throw std::invalid_argument("unknown characteristic-class symbol '" + std::string(symbol) + "'");
}

unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [s, k] : m) d += symbol_degree(s) * k;
    return d;
}

std::string to_string(const Monomial& m) {
    if (m.empty()) return "1";
    // e last, Pontryagin classes by name.
    std::string out;
    auto emit = [&](const std::string& s, unsigned k) {
        if (!out.empty()) out += "*";
        out += s;
        if (k > 1) out += "^" + std::to_string(k);
    };
    for (const auto& [s, k] : m)
        if (s != "e") emit(s, k);
    if (auto it = m.find("e"); it != m.end()) emit(it->first, it->second);
    return out;
}

Monomial parse_monomial(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    Monomial m;
    if (text == "1") return m;
    if (text.empty()) throw std::invalid_argument("empty monomial");
    while (!text.empty()) {
        const auto star = text.find('*');
        std::string_view factor = trim(text.substr(0, star));
        text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
        if (star != std::string_view::npos && trim(text).empty()) throw std::invalid_argument("dangling '*'");
        unsigned power = 1;
        if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
            const std::string_view exp = trim(factor.substr(caret + 1));
            if (exp.empty() || !std::all_of(exp.begin(), exp.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw std::invalid_argument("bad exponent in monomial factor '" + std::string(factor) + "'");
            power = static_cast<unsigned>(std::stoul(std::string(exp)));
            factor = trim(factor.substr(0, caret));
        }
        symbol_degree(factor);
        if (power > 0) m[std::string(factor)] += power;
    }
    return m;
}

GradedPoly::GradedPoly(unsigned degree_bound) : bound_(degree_bound) {}

GradedPoly GradedPoly::constant(unsigned degree_bound, const Rational& c) {
    GradedPoly p(degree_bound);
    p.add_term({}, c);
    return p;
}

GradedPoly GradedPoly::symbol(unsigned degree_bound, const std::string& name) {
    GradedPoly p(degree_bound);
    p.add_term({{name, 1}}, 1);
    return p;
}

GradedPoly GradedPoly::from_series(unsigned degree_bound, const RationalSeries& f) {
    GradedPoly p(degree_bound);
    for (unsigned k = 0; k <= f.order() && 2 * k <= degree_bound; ++k) {
        Monomial m;
        if (k > 0) m["e"] = k;
        p.add_term(m, f[k]);
    }
    return p;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0 || monomial_degree(m) > bound_) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedPoly GradedPoly::part(unsigned degree) const {
    GradedPoly p(bound_);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) == degree) p.terms_.emplace(m, c);
    return p;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    GradedPoly out(std::min(bound_, o.bound_));
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const { return *this + o * Rational(-1); }

GradedPoly GradedPoly::operator*(const Rational& s) const {
    GradedPoly out(bound_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    GradedPoly out(std::min(bound_, o.bound_));
    for (const auto& [a, x] : terms_) {
        const unsigned da = monomial_degree(a);
        for (const auto& [b, y] : o.terms_) {
            if (da + monomial_degree(b) > out.bound_) continue;
            Monomial m = a;
            for (const auto& [s, k] : b) m[s] += k;
            out.add_term(m, x * y);
        }
    }
    return out;
}

std::string GradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += pinidx::to_string(c);
        if (!m.empty()) out += "*" + series::to_string(m);
    }
    return out;
}

// --- A-hat ------------------------------------------------------------------------

Integer count_01_matrices(const std::vector<unsigned>& rows, const std::vector<unsigned>& cols) {
    std::vector<unsigned> remaining = cols;
    std::function<Integer(std::size_t)> place = [&](std::size_t r) -> Integer {
        if (r == rows.size())
            return std::all_of(remaining.begin(), remaining.end(), [](unsigned c) { return c == 0; }) ? 1 : 0;
        Integer total = 0;
        // Choose rows[r] distinct columns with remaining capacity.
        std::function<void(std::size_t, unsigned)> choose = [&](std::size_t start, unsigned need) {
            if (need == 0) {
                total += place(r + 1);
                return;
            }
            for (std::size_t c = start; c < remaining.size(); ++c) {
                if (remaining[c] == 0) continue;
                --remaining[c];
                choose(c + 1, need - 1);
                ++remaining[c];
            }
        };
        choose(0, rows[r]);
        return total;
    };
    return place(0);
}

std::vector<std::vector<unsigned>> partitions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned max_part) {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (unsigned p = std::min(left, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(left - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<GradedPoly> a_hat_polys(unsigned max_i) {
    if (max_i > 4) throw std::invalid_argument("a_hat_polys: max_i must be <= 4");
    const unsigned bound = 4 * max_i;
    // (y/2)/sinh(y/2) = sum_k q_k y^{2k}
    const RationalSeries genus = hyperbolic(Hyperbolic::XOverSinh, half, 2 * max_i);
    std::vector<GradedPoly> out;
    out.push_back(GradedPoly::constant(bound, 1));
    for (unsigned i = 1; i <= max_i; ++i) {
        const auto parts = partitions(i);
        const std::size_t n = parts.size();
        // Degree-i part of prod_j Q(z_j) is sum_lambda (prod q_{lambda_k}) m_lambda.
        // Write it as sum_mu c_mu e_mu with e_mu = sum_lambda M(mu, lambda) m_lambda.
        std::vector<SparseRow> system;
        for (std::size_t l = 0; l < n; ++l) {
            SparseRow row;
            for (std::size_t mu = 0; mu < n; ++mu) {
                const Integer count = count_01_matrices(parts[mu], parts[l]);
                if (count != 0) row.emplace(mu, Rational(count));
            }
            Rational target = 1;
            for (unsigned part : parts[l]) target *= genus[2 * part];
            if (target != 0) row.emplace(n, target);
            system.push_back(std::move(row));
        }
        const auto pivots = row_reduce(system);
        if (pivots.size() != n || pivots.back() >= n) throw std::logic_error("a_hat_polys: singular change of basis");
        GradedPoly a(bound);
        for (std::size_t r = 0; r < n; ++r) {
            auto it = system[r].find(n);
            if (it == system[r].end()) continue;
            Monomial m;
            for (unsigned part : parts[pivots[r]]) m["p" + std::to_string(part)] += 1;
            a.add_term(m, it->second);
        }
        out.push_back(std::move(a));
    }
    return out;
}

GradedPoly a_hat_total(unsigned degree_bound) {
    const unsigned max_i = std::min(4U, degree_bound / 4);
    if (degree_bound / 4 > 4) throw std::invalid_argument("a_hat_total: degree bound above 16 unsupported");
    GradedPoly total(degree_bound);
    for (const auto& a : a_hat_polys(max_i)) total = total + a;
    GradedPoly out(degree_bound);
    for (const auto& [m, c] : total.terms()) out.add_term(m, c);
    return out;
}

GradedPoly ch_complexified(const Integer& rank, char prefix, unsigned degree_bound) {
    if (prefix != 'p' && prefix != 'q') throw std::invalid_argument("ch_complexified: prefix must be 'p' or 'q'");
    auto el = [&](unsigned i) { return GradedPoly::symbol(degree_bound, std::string(1, prefix) + std::to_string(i)); };
    // Newton: s_k = sum_{i<k} (-1)^{i-1} e_i s_{k-i} + (-1)^{k-1} k e_k
    std::vector<GradedPoly> s{GradedPoly(degree_bound)};
    GradedPoly ch = GradedPoly::constant(degree_bound, Rational(rank));
    Rational factorial = 1;
    for (unsigned k = 1; 4 * k <= degree_bound; ++k) {
        GradedPoly sk = el(k) * Rational(static_cast<long>(k) * sign_of_parity(k - 1));
        for (unsigned i = 1; i < k; ++i) sk = sk + el(i) * s[k - i] * Rational(sign_of_parity(i - 1));
        s.push_back(sk);
        factorial *= (2 * k - 1) * (2 * k);
        ch = ch + sk * (Rational(2) / factorial);
    }
    return ch;
}

// --- pairings ---------------------------------------------------------------------

PairingFunctional::PairingFunctional(unsigned dimension, std::map<Monomial, Rational> values, bool missing_as_zero)
    : dim_(dimension), missing_as_zero_(missing_as_zero) {
    for (auto& [m, v] : values) set(m, v);
}

void PairingFunctional::set(const Monomial& m, const Rational& value) {
    if (monomial_degree(m) != dim_)
        throw std::invalid_argument("pairing value on monomial '" + series::to_string(m) + "' of degree " +
                                    std::to_string(monomial_degree(m)) + " != dimension " + std::to_string(dim_));
    values_[m] = value;
}

Rational PairingFunctional::operator()(const GradedPoly& x) const {
    if (x.degree_bound() > dim_)
        throw std::invalid_argument("pairing: polynomial degree bound " + std::to_string(x.degree_bound()) +
                                    " exceeds dimension " + std::to_string(dim_));
    Rational total = 0;
    for (const auto& [m, c] : x.terms()) {
        if (monomial_degree(m) != dim_) continue;
        auto it = values_.find(m);
        if (it == values_.end()) {
            if (missing_as_zero_) continue;
            throw std::out_of_range("pairing: no value for top-degree monomial '" + series::to_string(m) + "'");
        }
        total += c * it->second;
    }
    return total;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

PairingFunctional PairingFunctional::parse(std::string_view text) {
    std::optional<unsigned> dim;
    bool missing_zero = false;
    std::vector<std::pair<Monomial, Rational>> entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("pairing line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string_view key = strip(line.substr(0, eq));
        const std::string_view value = strip(line.substr(eq + 1));
        if (key == "dim") {
            const Rational d = parse_rational(value);
            if (d.get_den() != 1 || d < 0) throw std::invalid_argument("pairing: dim must be a non-negative integer");
            dim = static_cast<unsigned>(d.get_num().get_ui());
        } else if (key == "missing") {
            if (value != "zero" && value != "error") throw std::invalid_argument("pairing: missing must be zero|error");
            missing_zero = value == "zero";
        } else {
            entries.emplace_back(parse_monomial(key), parse_rational(value));
        }
    }
    if (!dim) throw std::invalid_argument("pairing: missing 'dim = N' tag");
    PairingFunctional f(*dim, {}, missing_zero);
    for (const auto& [m, v] : entries) f.set(m, v);
    return f;
}

std::string PairingFunctional::serialize() const {
    std::string out = "dim = " + std::to_string(dim_) + "\n";
    if (missing_as_zero_) out += "missing = zero\n";
    for (const auto& [m, v] : values_) out += series::to_string(m) + " = " + pinidx::to_string(v) + "\n";
    return out;
}

Rational pair(const GradedPoly& x, const PairingFunctional& f) { return f(x); }

std::vector<Monomial> monomials_of_degree(unsigned degree, bool with_e, const std::string& prefixes) {
    std::vector<std::string> symbols;
    if (with_e) symbols.push_back("e");
    for (char p : prefixes)
        for (unsigned i = 1; 4 * i <= degree; ++i) symbols.push_back(std::string(1, p) + std::to_string(i));
    std::vector<Monomial> out;
    Monomial current;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned left) {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        if (idx == symbols.size()) return;
        const unsigned d = symbol_degree(symbols[idx]);
        for (unsigned k = 0; k * d <= left; ++k) {
            if (k > 0) current[symbols[idx]] = k;
            rec(idx + 1, left - k * d);
        }
        current.erase(symbols[idx]);
    };
    rec(0, degree);
    return out;
}

}  // namespace pinidx::series
