#include "pinidx/verify.hpp"

#include "pinidx/clifford.hpp"
#include "pinidx/exterior.hpp"
#include "pinidx/ko.hpp"
#include "pinidx/projective.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pinidx::verify {

namespace {

using Clock = std::chrono::steady_clock;

Check timed(std::string name, int criterion, double budget, const std::function<bool(std::string&)>& body) {
    Check c;
    c.name = std::move(name);
    c.criterion = criterion;
    c.budget_seconds = budget;
    const auto start = Clock::now();
    try {
        c.passed = body(c.detail);
    } catch (const std::exception& ex) {
        c.passed = false;
        c.detail += std::string(c.detail.empty() ? "" : "; ") + "exception: " + ex.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget > 0 && c.seconds > budget) {
        c.passed = false;
        std::ostringstream os;
        os << "; over time budget " << budget << " s";
        c.detail += os.str();
    }
    return c;
}

Integer random_integer(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    return Integer(std::to_string(dist(rng)));
}

Integer random_below(std::mt19937_64& rng, const Integer& bound) {
    // bound <= 2^66 here; assemble from two 64-bit draws.
    Integer r = Integer(std::to_string(rng())) * Integer(std::to_string(rng())) + Integer(std::to_string(rng()));
    Integer out;
    mpz_fdiv_r(out.get_mpz_t(), r.get_mpz_t(), bound.get_mpz_t());
    return out;
}

Rational random_rational(std::mt19937_64& rng, int span = 9, int max_den = 7) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string join_failures(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
    return out;
}

}  // namespace

// --- oracles --------------------------------------------------------------------

Vector random_unit_vector(std::mt19937_64& rng, unsigned n) {
    if (n == 0) throw std::invalid_argument("random_unit_vector: n must be positive");
    std::vector<Rational> t(n - 1);
    Rational norm2 = 0;
    for (auto& x : t) {
        x = random_rational(rng, 5, 4);
        norm2 += x * x;
    }
    Vector v(n);
    for (unsigned i = 0; i + 1 < n; ++i) v[i] = 2 * t[i] / (norm2 + 1);
    v[n - 1] = (norm2 - 1) / (norm2 + 1);
    // Shuffle the special coordinate so the pole is not always e_n.
    std::uniform_int_distribution<unsigned> pick(0, n - 1);
    std::swap(v[n - 1], v[pick(rng)]);
    return v;
}

Rational bernoulli(unsigned n) {
    // B_0 = 1, sum_{k<=m} C(m+1, k) B_k = 0.
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
        b[m] = -acc / (m + 1);
    }
    return b[n];
}

Rational a_hat_genus_coefficient(unsigned k) {
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), 2 * k);
    return Rational(2 - pow2(2 * k)) * bernoulli(2 * k) / Rational(fact * pow2(2 * k));
}

namespace {

using YPoly = std::map<std::vector<unsigned>, Rational>;

unsigned ydeg(const std::vector<unsigned>& a) {
    unsigned d = 0;
    for (unsigned x : a) d += x;
    return d;
}

YPoly ymul(const YPoly& a, const YPoly& b, unsigned bound) {
    YPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<unsigned> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (ydeg(e) > bound) continue;
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

YPoly elementary(unsigned k, unsigned roots) {
    YPoly out;
    for (std::uint32_t mask = 0; mask < (1U << roots); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
        std::vector<unsigned> e(roots);
        for (unsigned j = 0; j < roots; ++j) e[j] = (mask >> j) & 1U;
        out[e] += 1;
    }
    return out;
}

}  // namespace

bool a_hat_matches_root_oracle(const series::GradedPoly& candidate, unsigned i, unsigned roots) {
    const std::vector<unsigned> zero(roots, 0);
    YPoly product{{zero, 1}};
    for (unsigned j = 0; j < roots; ++j) {
        YPoly factor;
        for (unsigned k = 0; k <= i; ++k) {
            std::vector<unsigned> e(roots, 0);
            e[j] = k;
            factor[e] = a_hat_genus_coefficient(k);
        }
        product = ymul(product, factor, i);
    }
    YPoly expected;
    for (const auto& [e, c] : product)
        if (ydeg(e) == i) expected[e] = c;

    YPoly substituted;
    for (const auto& [mono, c] : candidate.terms()) {
        YPoly term{{zero, c}};
        for (const auto& [sym, power] : mono) {
            if (sym.empty() || sym[0] != 'p') return false;
            const unsigned k = series::symbol_degree(sym) / 4;
            const YPoly ek = elementary(k, roots);
            for (unsigned r = 0; r < power; ++r) term = ymul(term, ek, i);
        }
        for (const auto& [e, v] : term) substituted[e] += v;
    }
    std::erase_if(substituted, [](const auto& kv) { return kv.second == 0; });
    return substituted == expected;
}

// --- synthetic congruence data ------------------------------------------------------

congruence::Data synthetic_dataset(std::mt19937_64& rng, unsigned level) {
    using congruence::Which;
    congruence::Data d;
    d.level = level;
    const unsigned dK = d.dim_K(), dB = d.dim_B();

    series::PairingFunctional K(dK, {}, true);
    for (const auto& m : series::monomials_of_degree(dK, false, "p")) K.set(m, random_rational(rng));
    series::PairingFunctional B(dB, {}, true);
    for (const auto& m : series::monomials_of_degree(dB, true, "p")) B.set(m, random_rational(rng));

    auto random_index = [&]() {
        const Integer order = ko::ko_order(level);
        return ko::q_index(ko::KOClassRP(level, random_integer(rng, -1000, 1000), random_below(rng, order)));
    };
    d.index["TB"] = random_index();
    d.index["N"] = random_index();
    d.index["RplusO"] = random_index();

    const series::Monomial x_mono{{"e", 4 * level + 1}};
    const series::GradedPoly k_poly = congruence::k_integrand_tangent(level);
    std::optional<series::Monomial> y_mono;
    for (const auto& [m, c] : k_poly.terms())
        if (series::monomial_degree(m) == dK && c != 0) {
            y_mono = m;
            break;
        }
    if (!y_mono) throw std::logic_error("synthetic_dataset: K integrand has no top-degree term");

    auto residual = [&](Which w, const Rational& x, const Rational& y) {
        B.set(x_mono, x);
        K.set(*y_mono, y);
        d.K = K;
        d.B = B;
        const congruence::Report r = congruence::check(w, d);
        return Rational(r.lhs - r.rhs);
    };
    // r_w(x, y) = r_w(0,0) + a_w x + b_w y
    const Rational r6 = residual(Which::A6, 0, 0), r7 = residual(Which::A7, 0, 0);
    const Rational a6 = residual(Which::A6, 1, 0) - r6, b6 = residual(Which::A6, 0, 1) - r6;
    const Rational a7 = residual(Which::A7, 1, 0) - r7, b7 = residual(Which::A7, 0, 1) - r7;
    const Rational det = a6 * b7 - a7 * b6;
    if (det == 0) throw std::logic_error("synthetic_dataset: singular 2x2 system");
    const Rational x = (-r6 * b7 + r7 * b6) / det;
    const Rational y = (-a6 * r7 + a7 * r6) / det;
    B.set(x_mono, x);
    K.set(*y_mono, y);
    d.K = K;
    d.B = B;
    return d;
}

// --- acceptance criteria ------------------------------------------------------------

Check criterion_ko_order() {
    return timed("KO(RP^{8k+2}) reduced order 2^{4k+2}", 1, 1.0, [](std::string& detail) {
        for (unsigned k = 0; k <= 8; ++k) {
            Integer expected = 1;
            for (unsigned j = 0; j < 4 * k + 2; ++j) expected *= 2;
            if (ko::ko_order(k) != expected || ko::ko_order_general(8 * k + 2) != expected) {
                detail = "mismatch at k=" + std::to_string(k);
                return false;
            }
        }
        detail = "k=0..8 exact";
        return true;
    });
}

Check criterion_pin_obstruction() {
    return timed("w1^2+w2 of RP^q vs (q+1)(3q+2)/2 mod 2", 2, 5.0, [](std::string& detail) {
        for (unsigned q = 2; q <= 10000; ++q) {
            if (rp::pin_obstruction(q) != rp::pin_obstruction_closed_form(q)) {
                detail = "mismatch at q=" + std::to_string(q);
                return false;
            }
        }
        detail = "q=2..10000";
        return true;
    });
}

Check criterion_homomorphism(std::uint64_t seed) {
    return timed("q_{8k+2} additive mod 2", 3, 5.0, [seed](std::string& detail) {
        std::mt19937_64 rng(seed);
        std::size_t carries = 0;
        for (unsigned k : {0U, 1U, 2U}) {
            const Integer order = ko::ko_order(k);
            for (int trial = 0; trial < 1000; ++trial) {
                Integer na = random_below(rng, order);
                Integer nb = random_below(rng, order);
                if (trial < 200) {
                    // Forced carry: n_a + n_b >= order.
                    na = order / 2 + random_below(rng, order / 2);
                    nb = order - na + random_below(rng, na);
                }
                if (na + nb >= order) ++carries;
                const ko::KOClassRP a(k, random_integer(rng, -1000000, 1000000), na);
                const ko::KOClassRP b(k, random_integer(rng, -1000000, 1000000), nb);
                if (!(ko::q_index(a + b) == ko::q_index(a) + ko::q_index(b))) {
                    detail = "failure at k=" + std::to_string(k) + ": " + a.to_string() + " and " + b.to_string();
                    return false;
                }
            }
        }
        detail = "3000 pairs, " + std::to_string(carries) + " carry cases";
        return carries >= 600;
    });
}

Check criterion_clifford_reps() {
    return timed("Clifford classification and representations n<=11", 4, 30.0, [](std::string& detail) {
        std::vector<std::string> failures;
        for (unsigned k : {0U, 1U}) {
            const auto t = clifford::classify(8 * k + 3);
            if (t.field != clifford::Field::Quaternion || t.matrix_size != (std::uint64_t{1} << (4 * k)))
                failures.push_back("classify(" + std::to_string(8 * k + 3) + ") = " + t.describe());
        }
        for (unsigned n = 1; n <= 11; ++n) {
            const auto rep = clifford::build_rep(n);
            if (!clifford::satisfies_clifford_relations(rep))
                failures.push_back("relations fail at n=" + std::to_string(n));
            if (rep.dim() != clifford::classify(n).irrep_real_dim)
                failures.push_back("dimension " + std::to_string(rep.dim()) + " at n=" + std::to_string(n));
            if (n % 4 == 3 && !(rep.act(clifford::volume_element(n)) == QMatrix::identity(rep.dim())))
                failures.push_back("volume element not +Id at n=" + std::to_string(n));
        }
        detail = failures.empty() ? "n=1..11 relations exact; s_3, s_7, s_11 = +Id" : join_failures(failures);
        return failures.empty();
    });
}

Check criterion_exterior_identities() {
    return timed("S = (2N-m)sigma, sum c c^ = 2N-m, spectrum, ground state", 5, 30.0, [](std::string& detail) {
        std::vector<std::string> failures;
        for (unsigned m : {2U, 4U, 6U, 8U}) {
            const std::string at = " at m=" + std::to_string(m);
            if (!(exterior::s_operator(m) == exterior::s_operator_closed_form(m))) failures.push_back("S" + at);
            if (!(exterior::clifford_hat_sum(m) == exterior::two_n_minus_m(m))) failures.push_back("sum c c^" + at);
            std::map<Integer, std::uint64_t> expected;
            for (unsigned p = 0; p <= m; ++p)
                expected[Integer(sign_of_parity(p) * (2 * static_cast<int>(p) - static_cast<int>(m)))] +=
                    binomial(m, p).get_ui();
            std::vector<exterior::SpectrumEntry> want;
            for (const auto& [ev, mult] : expected) want.push_back({ev, mult});
            if (exterior::s_spectrum(m) != want) failures.push_back("spectrum" + at);
            const auto ground = exterior::lowest_eigenspace(exterior::s_operator(m));
            if (ground.eigenvalue != -Rational(m) || ground.basis.size() != 1) failures.push_back("ground state" + at);
        }
        detail = failures.empty() ? "m=2,4,6,8 exact" : join_failures(failures);
        return failures.empty();
    });
}

namespace {

exterior::GaussianSection random_section(std::mt19937_64& rng, unsigned m, unsigned max_degree) {
    exterior::GaussianSection s(m);
    std::uniform_int_distribution<int> terms(1, 4);
    std::uniform_int_distribution<unsigned> var(0, m - 1);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<exterior::Blade> blade(0, (exterior::Blade{1} << m) - 1);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        exterior::Exponents alpha(m, 0);
        const unsigned d = deg(rng);
        for (unsigned j = 0; j < d; ++j) ++alpha[var(rng)];
        Rational c = random_rational(rng);
        if (c == 0) c = 1;
        s.add_term(alpha, blade(rng), c);
    }
    return s;
}

}  // namespace

Check criterion_oscillator(std::uint64_t seed) {
    return timed("(D+V)beta = 0, (D+V)^2 = -Delta+|Z|^2+S, kernel dimension 1", 6, 60.0, [seed](std::string& detail) {
        std::mt19937_64 rng(seed);
        std::vector<std::string> notes;
        bool ok = true;
        for (unsigned m : {2U, 4U}) {
            const exterior::OscillatorOperators ops(m);
            const std::string at = " at m=" + std::to_string(m);
            if (!ops.apply_D_plus_V(exterior::GaussianSection::gaussian(m)).is_zero()) {
                ok = false;
                notes.push_back("(D+V)beta != 0" + at);
            }
            int mismatches = 0, negated = 0;
            const int samples = 100;
            for (int t = 0; t < samples; ++t) {
                const auto s = random_section(rng, m, 4);
                const auto square = ops.apply_D_plus_V(ops.apply_D_plus_V(s));
                const auto harmonic = ops.apply_harmonic(s);
                if (!(square == harmonic)) {
                    ++mismatches;
                    if (square == harmonic * Rational(-1)) ++negated;
                }
            }
            if (mismatches > 0) {
                ok = false;
                notes.push_back("(D+V)^2 != -Delta+|Z|^2+S on " + std::to_string(mismatches) + "/" +
                                std::to_string(samples) + " sections" + at + " (" + std::to_string(negated) +
                                " equal to its negative; tau*^2 = -1 here)");
            } else {
                notes.push_back("(D+V)^2 identity holds on " + std::to_string(samples) + " sections" + at);
            }
            for (unsigned d = 0; d <= 2; ++d) {
                const auto kernel = exterior::oscillator_kernel(m, d);
                if (kernel.dimension != 1) {
                    ok = false;
                    notes.push_back("kernel dimension " + std::to_string(kernel.dimension) + at + ", d=" +
                                    std::to_string(d));
                }
            }
        }
        detail = join_failures(notes);
        return ok;
    });
}

Check criterion_series() {
    return timed("series identities and A-hat", 7, 10.0, [](std::string& detail) {
        std::vector<std::string> failures;
        for (unsigned d : {24U, 40U}) {
            if (!series::identity_a45(d)) failures.push_back("a45 identity at D=" + std::to_string(d));
            if (!series::identity_a8(d)) failures.push_back("a8 identity at D=" + std::to_string(d));
        }
        const auto a = series::a_hat_polys(2);
        series::GradedPoly a1(8), a2(8);
        a1.add_term({{"p1", 1}}, Rational(-1, 24));
        a2.add_term({{"p1", 2}}, make_rational(7, 5760));
        a2.add_term({{"p2", 1}}, make_rational(-4, 5760));
        if (!(a[1] == a1)) failures.push_back("A1 = " + a[1].to_string());
        if (!(a[2] == a2)) failures.push_back("A2 = " + a[2].to_string());
        if (!a_hat_matches_root_oracle(a[1], 1, 2)) failures.push_back("A1 vs root oracle");
        if (!a_hat_matches_root_oracle(a[2], 2, 4)) failures.push_back("A2 vs root oracle");
        detail = failures.empty() ? "identities at D=24,40; A1, A2 match root oracle" : join_failures(failures);
        return failures.empty();
    });
}

Check criterion_congruence(std::uint64_t seed) {
    return timed("a6 and a7 imply a8 on synthetic data", 8, 10.0, [seed](std::string& detail) {
        using congruence::Which;
        std::mt19937_64 rng(seed);
        const int datasets = 50;
        for (int t = 0; t < datasets; ++t) {
            const unsigned level = static_cast<unsigned>(t % 2);
            const auto d = synthetic_dataset(rng, level);
            const auto r6 = congruence::check(Which::A6, d);
            const auto r7 = congruence::check(Which::A7, d);
            if (!r6.passed || !r7.passed) {
                detail = "generator produced data violating a6/a7 at dataset " + std::to_string(t);
                return false;
            }
            const auto r8 = congruence::check(Which::A8, d);
            if (!r8.passed) {
                detail = "a8 fails at dataset " + std::to_string(t) + " with residue " + to_string(r8.residue);
                return false;
            }
        }
        auto bad = synthetic_dataset(rng, 1);
        bad.index["N"] = bad.index["N"] + ko::DyadicMod2(Rational(1, 2));
        const auto r = congruence::check(Which::A8, bad);
        if (r.passed || r.residue != Rational(1, 2)) {
            detail = "negative control: residue " + to_string(r.residue);
            return false;
        }
        detail = std::to_string(datasets) + " datasets at k=0,1; perturbed control residue 1/2";
        return true;
    });
}

Check criterion_denominators(std::uint64_t seed) {
    return timed("q_{8k+2} denominators divide 2^{4k+2}", 9, 5.0, [seed](std::string& detail) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<unsigned> level(0, 8);
        std::uniform_int_distribution<std::int64_t> any(INT64_MIN, INT64_MAX);
        const int samples = 100000;
        for (int t = 0; t < samples; ++t) {
            const unsigned k = level(rng);
            const ko::KOClassRP a(k, Integer(std::to_string(any(rng))), Integer(std::to_string(any(rng))));
            const Rational v = ko::q_index(a).value();
            Rational scaled = v * Rational(pow2(4 * k + 2));
            scaled.canonicalize();
            if (scaled.get_den() != 1) {
                detail = "denominator of " + to_string(v) + " at k=" + std::to_string(k);
                return false;
            }
        }
        detail = std::to_string(samples) + " samples, k=0..8";
        return true;
    });
}

std::vector<Check> acceptance(std::uint64_t seed) {
    return {criterion_ko_order(),          criterion_pin_obstruction(), criterion_homomorphism(seed),
            criterion_clifford_reps(),     criterion_exterior_identities(), criterion_oscillator(seed),
            criterion_series(),            criterion_congruence(seed),  criterion_denominators(seed)};
}

// --- property suites ------------------------------------------------------------------

namespace {

Check clifford_properties(std::uint64_t seed) {
    return timed("clifford: pin^- words, twisted adjoint, chi, equivariance", 0, 0, [seed](std::string& detail) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> len(1, 4);
        for (unsigned n = 2; n <= 6; ++n) {
            const auto rep = clifford::build_rep(n);
            for (int t = 0; t < 20; ++t) {
                auto word = [&]() {
                    std::vector<Vector> f(len(rng));
                    for (auto& v : f) v = random_unit_vector(rng, n);
                    return clifford::PinWord(n, f);
                };
                const auto w1 = word(), w2 = word();
                const Vector v = random_unit_vector(rng, n);
                const Vector gv = clifford::twisted_adjoint(w1, v);
                if (clifford::dot(gv, gv) != clifford::dot(v, v)) {
                    detail = "twisted adjoint not isometric at n=" + std::to_string(n);
                    return false;
                }
                if (clifford::twisted_adjoint(w1.concat(w2), v) !=
                    clifford::twisted_adjoint(w1, clifford::twisted_adjoint(w2, v))) {
                    detail = "twisted adjoint not a homomorphism at n=" + std::to_string(n);
                    return false;
                }
                if (clifford::chi(w1.concat(w2)) != clifford::chi(w1) * clifford::chi(w2)) {
                    detail = "chi not multiplicative";
                    return false;
                }
                if (!(w1.element() * w1.inverse_element() == clifford::CliffordElement::scalar(n, 1))) {
                    detail = "inverse_element wrong at n=" + std::to_string(n);
                    return false;
                }
                if (!clifford::equivariance_check(w1, v, rep)) {
                    detail = "equivariance fails at n=" + std::to_string(n);
                    return false;
                }
            }
        }
        for (unsigned n = 1; n <= 12; ++n) {
            const auto omega = clifford::volume_element(n);
            const int expected = sign_of_parity(static_cast<unsigned long>(n) * (n + 1) / 2);
            if (clifford::square_sign(omega) != expected || clifford::is_central(omega) != (n % 2 == 1)) {
                detail = "volume element at n=" + std::to_string(n);
                return false;
            }
        }
        for (unsigned n = 1; n <= 6; ++n) {
            const auto t = clifford::classify(n);
            const std::size_t expected = t.total_real_dim() / (t.two_summands ? 2 : 1);
            if (clifford::span_dimension(clifford::build_rep(n)) != expected) {
                detail = "image dimension at n=" + std::to_string(n);
                return false;
            }
        }
        for (unsigned k = 0; k <= 1; ++k)
            for (unsigned l = 1; l <= 2; ++l)
                if (!clifford::factorization_dim_check(k, l)) {
                    detail = "factorization at k=" + std::to_string(k) + ", l=" + std::to_string(l);
                    return false;
                }
        detail = "random words n=2..6; volume elements n<=12; image dimensions n<=6";
        return true;
    });
}

Check exterior_properties() {
    return timed("exterior: tau, tau*, sigma relations and Clifford isomorphism", 0, 0, [](std::string& detail) {
        for (unsigned m = 2; m <= 8; m += 2) {
            const auto ops = exterior::structure_ops(m);
            const auto id = exterior::OperatorMatrix::identity(m);
            const Rational sq = sign_of_parity(m / 2);
            if (!(ops.tau_star == ops.sigma * ops.tau) || !(ops.tau * ops.tau == id * sq) ||
                !(ops.tau_star * ops.tau_star == id * sq) || !(ops.sigma * ops.sigma == id)) {
                detail = "structure relations at m=" + std::to_string(m);
                return false;
            }
            for (unsigned i = 1; i <= m; ++i) {
                const auto e = exterior::unit_vector(m, i);
                const auto c = exterior::clifford_op(m, e);
                const auto ct = exterior::tilde_op(m, e);
                if (!(c * ops.tau == ops.tau * c * Rational(sign_of_parity(m - 1))) || !(ct * ops.tau == ops.tau * ct) ||
                    !(c * ops.tau_star == ops.tau_star * c) || !(ct * ops.tau_star == -(ops.tau_star * ct))) {
                    detail = "commutation with tau/tau* at m=" + std::to_string(m);
                    return false;
                }
                if (!(c * c == -id) || !(ct * ct == -id)) {
                    detail = "Clifford squares at m=" + std::to_string(m);
                    return false;
                }
            }
            const auto iso = exterior::clifford_exterior_iso(m);
            if (!exterior::is_bijective(iso) || !exterior::preserves_grading(iso)) {
                detail = "Clifford-exterior isomorphism at m=" + std::to_string(m);
                return false;
            }
        }
        detail = "m=2..8";
        return true;
    });
}

Check projective_properties() {
    return timed("rp: structure kinds by q mod 4, admits_pin_minus", 0, 0, [](std::string& detail) {
        for (unsigned q = 2; q <= 2000; ++q) {
            const auto kind = rp::structure_kind(q);
            const auto expected = q % 4 == 3   ? rp::StructureKind::Spin
                                  : q % 4 == 2 ? rp::StructureKind::PinMinusNonorientable
                                               : rp::StructureKind::NotPinMinus;
            const auto w = rp::sw_total(q);
            if (kind != expected || rp::admits_pin_minus(w.part(1), w.part(2)) == rp::pin_obstruction(q)) {
                detail = "q=" + std::to_string(q);
                return false;
            }
        }
        detail = "q=2..2000";
        return true;
    });
}

Check ko_properties(std::uint64_t seed) {
    return timed("ko: annihilation, agreement of index maps, ko_from_sum", 0, 0, [seed](std::string& detail) {
        std::mt19937_64 rng(seed);
        for (unsigned k = 0; k <= 8; ++k) {
            const Integer order = ko::ko_order(k);
            if (!(ko::q_index(ko::KOClassRP(k, 0, order)) == ko::DyadicMod2(0))) {
                detail = "annihilation at k=" + std::to_string(k);
                return false;
            }
            for (int t = 0; t < 200; ++t) {
                const ko::KOClassRP a(k, random_integer(rng, -100000, 100000), random_below(rng, order));
                const auto q = ko::q_index(a);
                if (!(ko::ind_t(a) == q) || !(ko::eta_prediction(a) == q)) {
                    detail = "index maps disagree at k=" + std::to_string(k);
                    return false;
                }
                // gamma itself: rank 1, torsion -1.
                const Integer b = random_below(rng, Integer(50));
                const auto sum = ko::ko_from_sum(0, b, k);
                if (!(ko::q_index(sum) == ko::q_index(ko::KOClassRP(k, 1, -1) * b))) {
                    detail = "ko_from_sum at k=" + std::to_string(k);
                    return false;
                }
            }
        }
        detail = "k=0..8";
        return true;
    });
}

Check series_properties(std::uint64_t seed) {
    return timed("series: ring laws, parity, identities D<=40, A-hat i<=3, pairing", 0, 0, [seed](std::string& detail) {
        using series::Hyperbolic;
        using series::RationalSeries;
        std::mt19937_64 rng(seed);
        const unsigned order = 12;
        auto random_series = [&](bool invertible) {
            std::vector<Rational> c(order + 1);
            for (auto& x : c) x = random_rational(rng);
            if (invertible && c[0] == 0) c[0] = 1;
            return RationalSeries(order, c);
        };
        for (int t = 0; t < 30; ++t) {
            const auto f = random_series(true), g = random_series(false), h = random_series(false);
            if (!((f * g) * h == f * (g * h)) || !(f * f.inverse() == RationalSeries::constant(order, 1)) ||
                !(f * (g + h) == f * g + f * h)) {
                detail = "ring law";
                return false;
            }
        }
        for (const Rational& s : {Rational(1, 4), Rational(1, 2), Rational(1)}) {
            if (!series::hyperbolic(Hyperbolic::Tanh, s, 30).is_odd() ||
                !series::hyperbolic(Hyperbolic::Sinh, s, 30).is_odd() ||
                !series::hyperbolic(Hyperbolic::Cosh, s, 30).is_even() ||
                !series::hyperbolic(Hyperbolic::XOverSinh, s, 30).is_even()) {
                detail = "parity at scale " + to_string(s);
                return false;
            }
        }
        if (!series::a45_lhs(30).is_odd() || !series::a8_lhs(30).is_odd() ||
            !series::normal_bundle_correction(30).is_odd()) {
            detail = "parity of appendix series";
            return false;
        }
        for (unsigned d = 4; d <= 40; ++d)
            if (!series::identity_a45(d) || !series::identity_a8(d)) {
                detail = "identity at D=" + std::to_string(d);
                return false;
            }
        // Closed forms in long double at e = 0.4 against the exact series.
        {
            const long double e = 0.4L;
            auto eval = [&](const RationalSeries& f) {
                long double acc = 0, pw = 1;
                for (unsigned k = 0; k <= f.order(); ++k, pw *= e) acc += f[k].get_d() * pw;
                return acc;
            };
            const long double t2 = std::tanh(e / 2);
            const long double a45 = (t2 - e / 2) / (e * t2) + ((e / 2) / std::sinh(e / 2) - 1) / e;
            const long double a8 = std::tanh(e / 4) * std::cosh(e) + (std::cosh(e) - std::cosh(e / 2)) / std::sinh(e / 2);
            const long double tol = 1e-15L;
            if (std::fabs(a45 + 0.5L * std::tanh(e / 4)) > tol || std::fabs(a8 - std::sinh(e)) > tol ||
                std::fabs(eval(series::a45_lhs(40)) - a45) > tol || std::fabs(eval(series::a8_lhs(40)) - a8) > tol) {
                detail = "floating check at e=0.4";
                return false;
            }
        }
        const auto a = series::a_hat_polys(3);
        for (unsigned i = 1; i <= 3; ++i)
            if (!a_hat_matches_root_oracle(a[i], i, 2 * i)) {
                detail = "A-hat " + std::to_string(i) + " vs root oracle";
                return false;
            }
        for (int t = 0; t < 30; ++t) {
            series::PairingFunctional f(8, {}, true);
            for (const auto& m : series::monomials_of_degree(8, true, "p")) f.set(m, random_rational(rng));
            series::GradedPoly x(8), y(8);
            for (const auto& m : series::monomials_of_degree(8, true, "p")) x.add_term(m, random_rational(rng));
            for (const auto& m : series::monomials_of_degree(4, true, "p")) y.add_term(m, random_rational(rng));
            const Rational s = random_rational(rng);
            if (f(x + y * s) != f(x) + s * f(y) || f(y) != 0) {
                detail = "pairing linearity";
                return false;
            }
        }
        detail = "ring laws, parity, D=4..40, A-hat i<=3, pairing linearity";
        return true;
    });
}

}  // namespace

std::vector<Check> properties(std::uint64_t seed) {
    return {clifford_properties(seed), exterior_properties(), projective_properties(), ko_properties(seed),
            series_properties(seed)};
}

std::vector<Check> all(std::uint64_t seed) {
    auto out = acceptance(seed);
    for (auto& c : properties(seed)) out.push_back(std::move(c));
    return out;
}

}  // namespace pinidx::verify
