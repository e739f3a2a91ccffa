// padicfam: families of p-adic fields from the command line.
//
// Every subcommand is a thin veneer over one library call; exit code 0 on
// success, 1 on usage errors, 2 on domain errors.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "padicfam/catalog.hpp"
#include "padicfam/compose.hpp"
#include "padicfam/diagram.hpp"
#include "padicfam/enumeration.hpp"
#include "padicfam/generic_poly.hpp"
#include "padicfam/jumpsets.hpp"
#include "padicfam/labels.hpp"
#include "padicfam/unislope.hpp"

using namespace padicfam;

namespace {

nlohmann::json invariant_json(const HerbrandInvariant& inv) {
    auto strs = [](const std::vector<Rational>& v) {
        std::vector<std::string> out;
        for (const auto& r : v) out.push_back(rational_to_string(r));
        return out;
    };
    nlohmann::json j;
    j["p"] = inv.p();
    j["f"] = inv.f();
    j["eps"] = inv.eps();
    j["w"] = inv.w();
    j["e"] = inv.e();
    j["n"] = inv.n();
    j["rams"] = strs(inv.rams());
    j["slopes"] = strs(inv.slopes());
    j["means"] = strs(inv.means());
    j["c"] = disc_exponent(inv).get_si();
    return j;
}

std::map<long, long> parse_assignment(const std::string& text) {
    // "a3=1,a10=2" -- the letters are cosmetic, sigma identifies the slot
    std::map<long, long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad assignment entry \"" + item + "\"");
        std::string lhs = item.substr(0, eq);
        size_t digits = 0;
        while (digits < lhs.size() && !std::isdigit(static_cast<unsigned char>(lhs[digits])))
            ++digits;
        out[std::stol(lhs.substr(digits))] = std::stol(item.substr(eq + 1));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"families of p-adic field extensions"};
    app.require_subcommand(1);

    // ---- convert ----
    long p = 2, f = 1, eps = 1;
    std::string rams_csv, slopes_csv, means_csv;
    bool as_json = false;
    auto* convert = app.add_subcommand("convert", "convert between invariant representations");
    convert->add_option("--p", p, "prime")->required();
    convert->add_option("--eps", eps, "tame degree");
    convert->add_option("--f", f, "residue degree");
    auto* opt_rams = convert->add_option("--rams", rams_csv, "ram vector, comma separated");
    auto* opt_slopes = convert->add_option("--slopes", slopes_csv, "slope vector");
    auto* opt_means = convert->add_option("--means", means_csv, "mean vector");
    opt_rams->excludes(opt_slopes)->excludes(opt_means);
    opt_slopes->excludes(opt_means);
    convert->add_flag("--json", as_json, "emit JSON");

    // ---- families ----
    long degree = 1, base_e = 1, base_f = 1;
    bool count_only = false;
    auto* families = app.add_subcommand("families", "enumerate families of a given degree");
    families->add_option("--p", p)->required();
    families->add_option("--degree", degree)->required();
    families->add_option("--base-e", base_e);
    families->add_option("--base-f", base_f);
    families->add_flag("--count-only", count_only);
    families->add_flag("--json", as_json);

    // ---- diagram ----
    std::string q_str = "2", svg_path;
    bool ascii = false;
    auto* diagram = app.add_subcommand("diagram", "Eisenstein diagram of a family");
    diagram->add_option("--p", p)->required();
    diagram->add_option("--rams", rams_csv)->required();
    diagram->add_option("--eps", eps);
    diagram->add_option("--q", q_str, "residue cardinality")->required();
    auto* opt_svg = diagram->add_option("--svg", svg_path, "write SVG to this path");
    auto* opt_ascii = diagram->add_flag("--ascii", ascii, "print text art");
    opt_svg->excludes(opt_ascii);

    // ---- genpoly ----
    bool latex = false;
    auto* genpoly = app.add_subcommand("genpoly", "generic polynomial of a family");
    genpoly->add_option("--p", p)->required();
    genpoly->add_option("--rams", rams_csv)->required();
    genpoly->add_option("--eps", eps);
    genpoly->add_option("--q", q_str)->required();
    genpoly->add_flag("--latex", latex);

    // ---- specialize ----
    bool enumerate_all = false;
    std::string assign_str;
    auto* specialize_cmd = app.add_subcommand("specialize", "integral polynomials of a family over Q_p");
    specialize_cmd->add_option("--p", p)->required();
    specialize_cmd->add_option("--rams", rams_csv)->required();
    specialize_cmd->add_option("--eps", eps);
    auto* opt_enum = specialize_cmd->add_flag("--enumerate", enumerate_all);
    auto* opt_assign = specialize_cmd->add_option("--assign", assign_str, "a3=1,a10=2,...");
    opt_enum->excludes(opt_assign);

    // ---- compose ----
    std::string base_rams_csv, top_rams_csv;
    long base_eps = 1, top_eps = 1, top_f = 1;
    auto* compose_cmd = app.add_subcommand("compose", "invariant of a tower");
    compose_cmd->add_option("--p", p)->required();
    compose_cmd->add_option("--base-rams", base_rams_csv)->required();
    compose_cmd->add_option("--base-eps", base_eps)->required();
    compose_cmd->add_option("--base-f", base_f)->required();
    compose_cmd->add_option("--top-rams", top_rams_csv)->required();
    compose_cmd->add_option("--top-eps", top_eps)->required();
    compose_cmd->add_option("--top-f", top_f)->required();

    // ---- jumpsets ----
    long e_arg = 1, w_arg = 1;
    bool extended = false;
    auto* jumpsets_cmd = app.add_subcommand("jumpsets", "admissible jump sets");
    jumpsets_cmd->add_option("--p", p)->required();
    jumpsets_cmd->add_option("--e", e_arg)->required();
    jumpsets_cmd->add_option("--w", w_arg)->required();
    jumpsets_cmd->add_flag("--extended", extended, "include the arithmetic endpoint");
    jumpsets_cmd->add_flag("--count-only", count_only);

    // ---- unislope ----
    std::string bits;
    bool want_jumpset = false;
    auto* unislope_cmd = app.add_subcommand("unislope", "the families [1,...,1] over Q_p");
    unislope_cmd->add_option("--p", p)->required();
    unislope_cmd->add_option("--w", w_arg)->required();
    unislope_cmd->add_option("--assignment", bits, "bits v_1..v_w then c");
    unislope_cmd->add_flag("--jumpset", want_jumpset, "conjectural jump set (p = 2 only)");

    // ---- label ----
    auto* label_cmd = app.add_subcommand("label", "family labels");
    std::string label_text;
    auto* label_make = label_cmd->add_subcommand("make", "label from an invariant");
    label_make->add_option("--p", p)->required();
    label_make->add_option("--rams", rams_csv)->required();
    label_make->add_option("--eps", eps);
    label_make->add_option("--f", f);
    auto* label_parse = label_cmd->add_subcommand("parse", "split a label into its parts");
    label_parse->add_option("label", label_text)->required();
    label_cmd->require_subcommand(1);

    // ---- catalog ----
    long p_max = 200, n_max = 47;
    int threads = 1;
    std::string out_dir;
    auto* catalog_cmd = app.add_subcommand("catalog", "export the family catalog as NDJSON");
    catalog_cmd->add_option("--p-max", p_max)->required();
    catalog_cmd->add_option("--degree-max", n_max)->required();
    catalog_cmd->add_option("--out", out_dir)->required();
    catalog_cmd->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*convert) {
            HerbrandInvariant inv = *opt_rams
                ? HerbrandInvariant(p, f, eps, parse_rational_csv(rams_csv))
                : parse_invariant(p, (*opt_slopes ? "[" + slopes_csv + "]" : "<" + means_csv + ">") +
                                         "_" + std::to_string(eps) + "^" + std::to_string(f));
            if (!*opt_rams && !*opt_slopes && !*opt_means)
                throw CLI::ValidationError("convert", "one of --rams/--slopes/--means is required");
            if (as_json) {
                std::cout << invariant_json(inv).dump() << "\n";
            } else {
                std::cout << print_invariant(inv, InvariantForm::Rams) << "\n"
                          << print_invariant(inv, InvariantForm::Slopes) << "\n"
                          << print_invariant(inv, InvariantForm::Means) << "\n";
            }
        } else if (*families) {
            auto fams = enumerate_families(p, degree, BaseProfile(p, base_e, base_f));
            if (count_only) {
                std::cout << fams.size() << "\n";
            } else {
                for (const auto& inv : fams)
                    if (as_json)
                        std::cout << invariant_json(inv).dump() << "\n";
                    else
                        std::cout << print_invariant(inv, InvariantForm::Rams) << "\n";
            }
        } else if (*diagram || *genpoly) {
            HerbrandInvariant inv(p, 1, eps, parse_rational_csv(rams_csv));
            EisensteinDiagram d = build_diagram(inv, Integer(q_str));
            if (*genpoly) {
                std::cout << to_string(generic_from_diagram(d),
                                       latex ? PolyStyle::Latex : PolyStyle::Ascii)
                          << "\n";
            } else if (*opt_svg) {
                render_svg_file(d, svg_path);
            } else if (ascii) {
                std::cout << render_ascii(d);
            } else {
                std::cout << "mass " << mass(d).get_str() << ", polynomials "
                          << eis_count(d).get_str() << ", amb " << amb_over(d).get_str()
                          << (rigid_over(d) ? ", rigid" : "") << "\n";
            }
        } else if (*specialize_cmd) {
            HerbrandInvariant inv(p, 1, eps, parse_rational_csv(rams_csv));
            EisensteinDiagram d = build_diagram(inv, Integer(p));
            GenericPolynomial gp = generic_from_diagram(d);
            if (*opt_assign) {
                std::cout << poly_to_string(specialize(gp, parse_assignment(assign_str))) << "\n";
            } else {
                for (const auto& sp : enumerate_specializations(gp))
                    std::cout << poly_to_string(sp.coeffs) << "\n";
            }
        } else if (*compose_cmd) {
            HerbrandInvariant base(p, base_f, base_eps, parse_rational_csv(base_rams_csv));
            HerbrandInvariant top(p, top_f, top_eps, parse_rational_csv(top_rams_csv));
            std::cout << print_invariant(compose(base, top), InvariantForm::Rams) << "\n";
        } else if (*jumpsets_cmd) {
            if (count_only) {
                std::cout << jump_set_count(p, e_arg, w_arg, extended).get_str() << "\n";
            } else {
                for (const auto& js : jump_sets(p, e_arg, w_arg, extended)) {
                    for (size_t i = 0; i < js.size(); ++i)
                        std::cout << (i ? "," : "") << js[i];
                    std::cout << "\n";
                }
            }
        } else if (*unislope_cmd) {
            HerbrandInvariant inv = unislope_invariant(p, w_arg);
            std::cout << print_invariant(inv, InvariantForm::Rams) << "\n";
            if (!bits.empty()) {
                if (static_cast<long>(bits.size()) != w_arg + 1)
                    throw std::invalid_argument("--assignment needs w+1 bits (v_1..v_w, c)");
                std::vector<int> v;
                for (long i = 0; i < w_arg; ++i) v.push_back(bits[static_cast<size_t>(i)] - '0');
                int c_bit = bits.back() - '0';
                EisensteinDiagram d = build_diagram(inv, Integer(p));
                GenericPolynomial gp = generic_from_diagram(d);
                std::map<long, long> assignment;
                {
                    size_t i = 0;
                    Integer pw = pow_int(p, static_cast<unsigned long>(w_arg));
                    for (const auto& [sigma, kind] : gp.terms) {
                        (void)kind;
                        assignment[sigma] = sigma == pw.get_si() ? c_bit
                                                                 : bits[i++] - '0';
                    }
                }
                ResidualCharPoly rcp = residual_from_assignment(p, w_arg, assignment);
                std::cout << "u " << galois_order_u(rcp) << ", aut "
                          << aut_and_poly_count(rcp).first << ", subfields "
                          << subfield_count(rcp) << "\n";
                if (want_jumpset) {
                    std::cout << "jump set (conjectural) ";
                    auto js = jump_set_unislope_Q2(v, c_bit);
                    for (size_t i = 0; i < js.size(); ++i)
                        std::cout << (i ? "," : "") << js[i].get_str();
                    std::cout << "\n";
                }
            }
        } else if (*label_cmd) {
            if (*label_make) {
                HerbrandInvariant inv(p, f, eps, parse_rational_csv(rams_csv));
                std::cout << to_string(make_family_label(inv)) << "\n";
            } else {
                FamilyLabel l = parse_family_label(label_text);
                std::cout << "p " << l.p << ", f " << l.f << ", e " << l.e << ", c " << l.c
                          << ", letter " << l.letter << "\n";
            }
        } else if (*catalog_cmd) {
            std::filesystem::create_directories(out_dir);
            auto records = build_catalog(p_max, n_max, threads);
            export_json(records, out_dir + "/families.ndjson");
            std::cout << records.size() << " records\n";
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
