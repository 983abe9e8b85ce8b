// pinidx: command-line front end for the exact mod 2 index toolkit.

#include "pinidx/charseries.hpp"
#include "pinidx/clifford.hpp"
#include "pinidx/congruence.hpp"
#include "pinidx/exterior.hpp"
#include "pinidx/ko.hpp"
#include "pinidx/projective.hpp"
#include "pinidx/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;
using namespace pinidx;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Output {
    json result = json::object();
    std::optional<bool> passed;
};

void print_human(const json& j, int indent = 0) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            std::cout << pad << key << ":\n";
            print_human(value, indent + 2);
        } else if (value.is_array()) {
            std::cout << pad << key << ":\n";
            for (const auto& item : value) {
                if (item.is_object()) {
                    std::string line;
                    for (const auto& [k, v] : item.items())
                        line += (line.empty() ? "" : "  ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
                    std::cout << pad << "  - " << line << "\n";
                } else {
                    std::cout << pad << "  - " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
                }
            }
        } else {
            std::cout << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

std::string field_name(clifford::Field f) {
    switch (f) {
        case clifford::Field::Real: return "R";
        case clifford::Field::Complex: return "C";
        case clifford::Field::Quaternion: return "H";
    }
    return "?";
}

std::string section_to_string(const exterior::GaussianSection& s) {
    std::string out;
    for (const auto& [key, c] : s.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < key.exponents.size(); ++i) {
            if (key.exponents[i] == 0) continue;
            mono += (mono.empty() ? "" : "*") + std::string("Z") + std::to_string(i + 1);
            if (key.exponents[i] > 1) mono += "^" + std::to_string(key.exponents[i]);
        }
        std::string blade;
        for (unsigned i = 0; i < s.rank(); ++i)
            if ((key.blade >> i) & 1U) blade += (blade.empty() ? "" : "^") + std::string("e") + std::to_string(i + 1);
        out += (out.empty() ? "" : " + ") + to_string(c) + (mono.empty() ? "" : "*" + mono) + " (x) " +
               (blade.empty() ? "1" : blade);
    }
    return (out.empty() ? "0" : out) + " times exp(-|Z|^2/2)";
}

json report_json(const congruence::Report& r) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back({{"term", t.name}, {"value", to_string(t.value)}});
    return {{"which", congruence::to_string(r.which)},
            {"lhs", to_string(r.lhs)},
            {"rhs", to_string(r.rhs)},
            {"modulus", to_string(r.modulus)},
            {"residue", to_string(r.residue)},
            {"passed", r.passed},
            {"terms", terms}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open data file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for mod 2 indices of pin^- manifolds"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit a JSON document instead of a table");

    std::string command;
    std::function<Output()> action;

    // clifford
    auto* cl = app.add_subcommand("clifford", "Clifford algebras and pin^- representations");
    cl->require_subcommand(1);
    unsigned cl_n = 0;
    auto* cl_classify = cl->add_subcommand("classify", "Isomorphism type of c(R^n)");
    cl_classify->add_option("--n", cl_n, "Dimension n")->required()->check(CLI::Range(1U, 63U));
    cl_classify->callback([&] {
        command = "clifford classify";
        action = [&] {
            const auto t = clifford::classify(cl_n);
            Output o;
            o.result = {{"n", cl_n},
                        {"algebra", t.describe()},
                        {"field", field_name(t.field)},
                        {"matrix_size", t.matrix_size},
                        {"two_summands", t.two_summands},
                        {"irrep_real_dim", t.irrep_real_dim}};
            return o;
        };
    });
    auto* cl_rep = cl->add_subcommand("rep-check", "Build an irreducible representation and verify it");
    cl_rep->add_option("--n", cl_n, "Dimension n")->required()->check(CLI::Range(1U, 12U));
    cl_rep->callback([&] {
        command = "clifford rep-check";
        action = [&] {
            const auto rep = clifford::build_rep(cl_n);
            const auto t = clifford::classify(cl_n);
            const bool relations = clifford::satisfies_clifford_relations(rep);
            const bool dim_ok = rep.dim() == t.irrep_real_dim;
            Output o;
            o.result = {{"n", cl_n}, {"dim", rep.dim()}, {"relations", relations}, {"irreducible_dim", dim_ok}};
            bool ok = relations && dim_ok;
            if (cl_n % 4 == 3) {
                const bool plus = rep.act(clifford::volume_element(cl_n)) == QMatrix::identity(rep.dim());
                o.result["volume_is_plus_identity"] = plus;
                ok = ok && plus;
            }
            o.passed = ok;
            return o;
        };
    });

    // exterior
    auto* ex = app.add_subcommand("exterior", "Exterior algebra operators and the harmonic oscillator");
    ex->require_subcommand(1);
    unsigned ex_m = 0, ex_deg = 0;
    auto* ex_spec = ex->add_subcommand("s-spectrum", "Spectrum of S = sum c(e_i)c~(e_i)");
    ex_spec->add_option("--m", ex_m, "Even rank m")->required();
    ex_spec->callback([&] {
        command = "exterior s-spectrum";
        action = [&] {
            exterior::require_even_rank(ex_m);
            json spectrum = json::array();
            for (const auto& e : exterior::s_spectrum(ex_m))
                spectrum.push_back({{"eigenvalue", to_string(e.eigenvalue)}, {"multiplicity", e.multiplicity}});
            const bool closed = exterior::s_operator(ex_m) == exterior::s_operator_closed_form(ex_m);
            Output o;
            o.result = {{"m", ex_m}, {"closed_form_matches", closed}, {"spectrum", spectrum}};
            o.passed = closed;
            return o;
        };
    });
    auto* ex_osc = ex->add_subcommand("oscillator", "Kernel of the oscillator on polynomial-Gaussian sections");
    ex_osc->add_option("--m", ex_m, "Even rank m")->required();
    ex_osc->add_option("--deg", ex_deg, "Polynomial degree bound")->required();
    ex_osc->callback([&] {
        command = "exterior oscillator";
        action = [&] {
            const auto k = exterior::oscillator_kernel(ex_m, ex_deg);
            json basis = json::array();
            for (const auto& s : k.basis) basis.push_back(section_to_string(s));
            Output o;
            o.result = {{"m", ex_m},
                        {"deg", ex_deg},
                        {"space_dimension", k.space_dimension},
                        {"kernel_dimension", k.dimension},
                        {"basis", basis}};
            return o;
        };
    });

    // rp
    auto* rpc = app.add_subcommand("rp", "Stiefel-Whitney classes and pin^- structures on RP^q");
    rpc->require_subcommand(1);
    unsigned rp_q = 0;
    auto* rp_sw = rpc->add_subcommand("sw", "Total Stiefel-Whitney class (1+a)^{q+1}");
    rp_sw->add_option("--q", rp_q, "Dimension q")->required()->check(CLI::Range(2U, 1000000U));
    rp_sw->callback([&] {
        command = "rp sw";
        action = [&] {
            const auto w = rp::sw_total(rp_q);
            Output o;
            o.result = {{"q", rp_q},
                        {"w", w.to_string()},
                        {"w1", w.coeff(1) ? "a" : "0"},
                        {"w2", w.coeff(2) ? "a^2" : "0"},
                        {"w1^2+w2", rp::pin_obstruction(rp_q) ? "a^2" : "0"}};
            return o;
        };
    });
    auto* rp_kind = rpc->add_subcommand("kind", "Spin / pin^- / neither");
    rp_kind->add_option("--q", rp_q, "Dimension q")->required()->check(CLI::Range(2U, 1000000U));
    rp_kind->callback([&] {
        command = "rp kind";
        action = [&] {
            Output o;
            o.result = {{"q", rp_q}, {"kind", rp::to_string(rp::structure_kind(rp_q))}};
            return o;
        };
    });

    // ko
    auto* koc = app.add_subcommand("ko", "KO(RP^{8k+2}) and the index homomorphism");
    koc->require_subcommand(1);
    unsigned ko_k = 0;
    std::string ko_m = "0", ko_n = "0";
    auto* ko_index = koc->add_subcommand("index", "q_{8k+2}(m + n(1-gamma)) in Z[1/2]/2Z");
    ko_index->add_option("--k", ko_k, "Level k")->required()->check(CLI::Range(0U, ko::max_level));
    ko_index->add_option("--m", ko_m, "Virtual rank m")->required();
    ko_index->add_option("--n", ko_n, "Coefficient of 1-gamma")->required();
    ko_index->callback([&] {
        command = "ko index";
        action = [&] {
            const Rational m = parse_rational(ko_m), n = parse_rational(ko_n);
            if (m.get_den() != 1 || n.get_den() != 1) throw std::invalid_argument("--m and --n must be integers");
            const ko::KOClassRP a(ko_k, m.get_num(), n.get_num());
            Output o;
            o.result = {{"k", ko_k},
                        {"class", a.to_string()},
                        {"index", ko::q_index(a).to_string()}};
            return o;
        };
    });
    auto* ko_order = koc->add_subcommand("order", "Order of the reduced group 2^{4k+2}");
    ko_order->add_option("--k", ko_k, "Level k")->required()->check(CLI::Range(0U, ko::max_level));
    ko_order->callback([&] {
        command = "ko order";
        action = [&] {
            Output o;
            o.result = {{"k", ko_k}, {"order", to_string(ko::ko_order(ko_k))}};
            return o;
        };
    });

    // series
    auto* se = app.add_subcommand("series", "Exact power series and the A-hat genus");
    se->require_subcommand(1);
    std::string se_which;
    unsigned se_order = 24, se_max_i = 2;
    auto* se_id = se->add_subcommand("identity", "Check a series identity exactly");
    se_id->add_option("--which", se_which, "a45 or a8")->required()->check(CLI::IsMember({"a45", "a8"}));
    se_id->add_option("--order", se_order, "Truncation order D")->check(CLI::Range(4U, 200U));
    se_id->callback([&] {
        command = "series identity";
        action = [&] {
            const bool a45 = se_which == "a45";
            const auto lhs = a45 ? series::a45_lhs(se_order) : series::a8_lhs(se_order);
            const auto rhs = a45 ? series::a45_rhs(se_order) : series::a8_rhs(se_order);
            Output o;
            o.result = {{"which", se_which},
                        {"order", se_order},
                        {"lhs", lhs.to_string()},
                        {"rhs", rhs.to_string()}};
            o.passed = a45 ? series::identity_a45(se_order) : series::identity_a8(se_order);
            return o;
        };
    });
    auto* se_ahat = se->add_subcommand("ahat", "A-hat polynomials in Pontryagin classes");
    se_ahat->add_option("--max-i", se_max_i, "Largest index i")->required()->check(CLI::Range(0U, 4U));
    se_ahat->callback([&] {
        command = "series ahat";
        action = [&] {
            json polys = json::array();
            const auto a = series::a_hat_polys(se_max_i);
            for (std::size_t i = 0; i < a.size(); ++i) polys.push_back({{"i", i}, {"poly", a[i].to_string()}});
            Output o;
            o.result = {{"max_i", se_max_i}, {"a_hat", polys}};
            return o;
        };
    });

    // congruence
    auto* co = app.add_subcommand("congruence", "Assemble the codimension-two congruences from data");
    co->require_subcommand(1);
    std::string co_which, co_data;
    auto* co_check = co->add_subcommand("check", "Check one congruence");
    co_check->add_option("--which", co_which, "a1|a6|a7|a8|a9")
        ->required()
        ->check(CLI::IsMember({"a1", "a6", "a7", "a8", "a9"}));
    co_check->add_option("--data", co_data, "Data file")->required();
    co_check->callback([&] {
        command = "congruence check";
        action = [&] {
            const auto data = congruence::Data::parse(read_file(co_data));
            const auto r = congruence::check(congruence::parse_which(co_which), data);
            Output o;
            o.result = report_json(r);
            o.passed = r.passed;
            return o;
        };
    });

    // verify-all
    std::uint64_t seed = verify::default_seed;
    auto* va = app.add_subcommand("verify-all", "Run every acceptance check and property suite");
    va->add_option("--seed", seed, "Random seed");
    va->callback([&] {
        command = "verify-all";
        action = [&] {
            json checks = json::array();
            bool ok = true;
            for (const auto& c : verify::all(seed)) {
                std::ostringstream secs;
                secs << std::fixed << std::setprecision(3) << c.seconds;
                checks.push_back({{"name", c.name},
                                  {"criterion", c.criterion},
                                  {"passed", c.passed},
                                  {"seconds", secs.str()},
                                  {"detail", c.detail}});
                ok = ok && c.passed;
            }
            Output o;
            o.result = {{"seed", seed}, {"checks", checks}};
            o.passed = ok;
            return o;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    Output out;
    try {
        out = action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (as_json) {
        json doc = {{"command", command}, {"result", out.result}};
        if (out.passed) doc["passed"] = *out.passed;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << command << "\n";
        print_human(out.result, 2);
        if (out.passed) std::cout << (*out.passed ? "PASS" : "FAIL") << "\n";
    }
    return out.passed.value_or(true) ? exit_ok : exit_fail;
}
