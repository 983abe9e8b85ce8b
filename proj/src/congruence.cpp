#include "pinidx/congruence.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pinidx::congruence {

using series::GradedPoly;
using series::Hyperbolic;
using series::PairingFunctional;

Which parse_which(std::string_view name) {
    if (name == "a1") return Which::A1;
    if (name == "a6") return Which::A6;
    if (name == "a7") return Which::A7;
    if (name == "a8") return Which::A8;
    if (name == "a9") return Which::A9;
    throw std::invalid_argument("unknown congruence '" + std::string(name) + "' (a1|a6|a7|a8|a9)");
}

std::string to_string(Which w) {
    switch (w) {
        case Which::A1: return "a1";
        case Which::A6: return "a6";
        case Which::A7: return "a7";
        case Which::A8: return "a8";
        case Which::A9: return "a9";
    }
    return "?";
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void require_level(unsigned k) {
    if (k > max_level) throw std::invalid_argument("congruence level must be <= " + std::to_string(max_level));
}

bool known_index(std::string_view name) { return name == "E" || name == "TB" || name == "N" || name == "RplusO"; }

ko::DyadicMod2 parse_index_value(std::string_view value, unsigned level) {
    if (value.substr(0, 3) == "ko ") {
        std::istringstream in{std::string(value.substr(3))};
        std::string m, n, extra;
        if (!(in >> m >> n) || (in >> extra)) throw std::invalid_argument("index value: expected 'ko M N'");
        const Rational rm = parse_rational(m), rn = parse_rational(n);
        if (rm.get_den() != 1 || rn.get_den() != 1) throw std::invalid_argument("index value: KO coefficients must be integers");
        return ko::q_index(ko::KOClassRP(level, rm.get_num(), rn.get_num()));
    }
    return ko::DyadicMod2(parse_rational(value));
}

PairingFunctional parse_section(const std::string& body, unsigned dim, const char* name) {
    const PairingFunctional parsed = PairingFunctional::parse("dim = " + std::to_string(dim) + "\n" + body);
    if (parsed.dimension() != dim)
        throw std::invalid_argument(std::string("section [") + name + "] has dim " + std::to_string(parsed.dimension()) +
                                    " but level implies " + std::to_string(dim));
    return parsed;
}

const ko::DyadicMod2& index_of(const Data& d, const std::string& name) {
    auto it = d.index.find(name);
    if (it == d.index.end()) throw std::invalid_argument("congruence data lacks index value '" + name + "'");
    return it->second;
}

const PairingFunctional& pairing(const std::optional<PairingFunctional>& f, const char* name) {
    if (!f) throw std::invalid_argument(std::string("congruence data lacks section [") + name + "]");
    return *f;
}

GradedPoly ch_normal(unsigned bound) {
    return GradedPoly::from_series(bound, series::ch_rank2_complexified(bound / 2));
}

Report finish(Which which, const Rational& lhs, const Rational& rhs, const Rational& modulus, std::vector<Term> terms) {
    Report r{which, lhs, rhs, modulus, reduce_mod(lhs - rhs, modulus), false, std::move(terms)};
    r.passed = r.residue == 0;
    return r;
}

}  // namespace

Data Data::parse(std::string_view text) {
    Data d;
    bool have_level = false;
    std::string section;
    std::string k_body, b_body;
    bool have_k = false, have_b = false;
    std::vector<std::pair<std::string, std::string>> raw_index;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line == "[K]") have_k = true;
            else if (line == "[B]") have_b = true;
            else if (line != "[index]") throw std::invalid_argument("unknown section " + std::string(line));
            section = std::string(line);
            continue;
        }
        if (section == "[K]") {
            k_body += std::string(line) + "\n";
            continue;
        }
        if (section == "[B]") {
            b_body += std::string(line) + "\n";
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("congruence data line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key(strip(line.substr(0, eq)));
        const std::string value(strip(line.substr(eq + 1)));
        if (section == "[index]") {
            if (!known_index(key)) throw std::invalid_argument("unknown index name '" + key + "'");
            raw_index.emplace_back(key, value);
        } else if (key == "level") {
            const Rational k = parse_rational(value);
            if (k.get_den() != 1 || k < 0 || k > max_level) throw std::invalid_argument("level must be an integer in [0, 1]");
            d.level = static_cast<unsigned>(k.get_num().get_ui());
            have_level = true;
        } else if (key == "rank_E") {
            const Rational r = parse_rational(value);
            if (r.get_den() != 1 || r < 0) throw std::invalid_argument("rank_E must be a non-negative integer");
            d.rank_E = r.get_num();
        } else {
            throw std::invalid_argument("unknown header key '" + key + "'");
        }
    }
    if (!have_level) throw std::invalid_argument("congruence data lacks 'level = k'");
    if (have_k) d.K = parse_section(k_body, d.dim_K(), "K");
    if (have_b) d.B = parse_section(b_body, d.dim_B(), "B");
    for (const auto& [key, value] : raw_index) d.index[key] = parse_index_value(value, d.level);
    return d;
}

std::string Data::serialize() const {
    std::string out = "level = " + std::to_string(level) + "\n";
    if (rank_E != 0) out += "rank_E = " + pinidx::to_string(rank_E) + "\n";
    auto body = [](const PairingFunctional& f) {
        std::string s;
        if (f.missing_as_zero()) s += "missing = zero\n";
        for (const auto& [m, v] : f.values()) s += series::to_string(m) + " = " + pinidx::to_string(v) + "\n";
        return s;
    };
    if (K) out += "[K]\n" + body(*K);
    if (B) out += "[B]\n" + body(*B);
    if (!index.empty()) {
        out += "[index]\n";
        for (const auto& [name, v] : index) out += name + " = " + v.to_string() + "\n";
    }
    return out;
}

GradedPoly k_integrand_tangent(unsigned level) {
    require_level(level);
    const unsigned dim = 8 * level + 4;
    return series::a_hat_total(dim) * series::ch_complexified(dim, 'p', dim);
}

GradedPoly k_integrand_twisted(unsigned level, const Integer& rank_E) {
    require_level(level);
    const unsigned dim = 8 * level + 4;
    return series::a_hat_total(dim) * series::ch_complexified(rank_E, 'q', dim);
}

GradedPoly b_tanh_term(unsigned level, const GradedPoly& ch) {
    require_level(level);
    const unsigned dim = 8 * level + 2;
    const GradedPoly t = GradedPoly::from_series(dim, series::hyperbolic(Hyperbolic::Tanh, Rational(1, 4), dim / 2));
    return series::a_hat_total(dim) * t * ch;
}

GradedPoly b_normal_correction(unsigned level) {
    require_level(level);
    const unsigned dim = 8 * level + 2;
    return series::a_hat_total(dim) * GradedPoly::from_series(dim, series::normal_bundle_correction(dim / 2));
}

GradedPoly b_sinh_term(unsigned level) {
    require_level(level);
    const unsigned dim = 8 * level + 2;
    return series::a_hat_total(dim) *
           GradedPoly::from_series(dim, series::hyperbolic(Hyperbolic::Sinh, Rational(1), dim / 2));
}

Report check(Which which, const Data& d) {
    require_level(d.level);
    const unsigned dB = d.dim_B();
    const Rational two = 2;
    const Rational half(1, 2);
    switch (which) {
        case Which::A1: {
            const PairingFunctional& K = pairing(d.K, "K");
            const PairingFunctional& B = pairing(d.B, "B");
            const Rational lhs = K(k_integrand_twisted(d.level, d.rank_E));
            const Rational ind = index_of(d, "E").value();
            const Rational boundary = B(b_tanh_term(d.level, series::ch_complexified(d.rank_E, 'q', dB)));
            return finish(which, lhs, ind - half * boundary, two,
                          {{"<A(TK)ch(E_C),[K]>", lhs}, {"ind(E)", ind}, {"<A(TB)tanh(e/4)ch(E_C),[B]>", boundary}});
        }
        case Which::A6: {
            const PairingFunctional& K = pairing(d.K, "K");
            const PairingFunctional& B = pairing(d.B, "B");
            const Rational lhs = K(k_integrand_tangent(d.level));
            const Rational ind_tb = index_of(d, "TB").value();
            const Rational ind_n = index_of(d, "N").value();
            const GradedPoly ch = series::ch_complexified(dB, 'p', dB) + ch_normal(dB);
            const Rational boundary = B(b_tanh_term(d.level, ch));
            return finish(which, lhs, ind_tb + ind_n - half * boundary, two,
                          {{"<A(TK)ch(TK_C),[K]>", lhs},
                           {"ind(TB)", ind_tb},
                           {"ind(N)", ind_n},
                           {"<A(TB)tanh(e/4)ch(TB_C+N_C),[B]>", boundary}});
        }
        case Which::A7: {
            const PairingFunctional& K = pairing(d.K, "K");
            const PairingFunctional& B = pairing(d.B, "B");
            const Rational lhs = K(k_integrand_tangent(d.level));
            const Rational ind_tb = index_of(d, "TB").value();
            const Rational ind_ro = index_of(d, "RplusO").value();
            const Rational boundary = B(b_tanh_term(d.level, series::ch_complexified(dB, 'p', dB)));
            const Rational correction = B(b_normal_correction(d.level));
            return finish(which, lhs, ind_tb + ind_ro - half * boundary + correction, two,
                          {{"<A(TK)ch(TK_C),[K]>", lhs},
                           {"ind(TB)", ind_tb},
                           {"ind(R+o(TB))", ind_ro},
                           {"<A(TB)tanh(e/4)ch(TB_C),[B]>", boundary},
                           {"<A(TB)(ch(N_C)-2cosh(e/2))/(2sinh(e/2)),[B]>", correction}});
        }
        case Which::A8: {
            const PairingFunctional& B = pairing(d.B, "B");
            const Rational ind_n = index_of(d, "N").value();
            const Rational ind_ro = index_of(d, "RplusO").value();
            const Rational rhs = B(b_sinh_term(d.level));
            return finish(which, ind_n - ind_ro, rhs, two,
                          {{"ind(N)", ind_n}, {"ind(R+o(TB))", ind_ro}, {"<A(TB)sinh(e),[B]>", rhs}});
        }
        case Which::A9: {
            const Rational ind_n = index_of(d, "N").value();
            const Rational ind_ro = index_of(d, "RplusO").value();
            return finish(which, 2 * ind_n, 2 * ind_ro, 1, {{"ind(N)", ind_n}, {"ind(R+o(TB))", ind_ro}});
        }
    }
    throw std::invalid_argument("unknown congruence");
}

}  // namespace pinidx::congruence
