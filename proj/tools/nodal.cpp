// Command-line front end: every computation of the library as a subcommand,
// with text or JSON output. Domain errors exit 1, usage errors exit 2.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nodal/bclasses.hpp"
#include "nodal/bell.hpp"
#include "nodal/enriques.hpp"
#include "nodal/families.hpp"
#include "nodal/kazarian.hpp"
#include "nodal/partitions.hpp"
#include "nodal/serialize.hpp"

using namespace nodal;
using nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void emit_polynomial(const Options& opt, const std::string& name, const SparsePolynomial& p,
                     bool human = false) {
    if (opt.json()) {
        ordered_json j;
        j[name] = p.str();
        j["terms"] = to_json_records(p);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (human ? human_str(p) : p.str()) << "\n";
    }
}

void emit_value(const Options& opt, const std::string& name, const Rational& v) {
    if (opt.json()) {
        ordered_json j;
        j[name] = v.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << v.str() << "\n";
    }
}

SurfaceInvariants parse_surface(const std::string& text) {
    if (text == "P2" || text == "p2")
        throw std::domain_error(
            "preset surfaces need a degree: use '{\"preset\":\"P2\",\"degree\":m}'");
    if (text.find('{') != std::string::npos) {
        nlohmann::json j = nlohmann::json::parse(text);
        if (j.contains("preset")) {
            std::string preset = j.at("preset").get<std::string>();
            if (preset != "P2") throw std::domain_error("unknown surface preset '" + preset + "'");
            return SurfaceInvariants::p2(j.at("degree").get<long>());
        }
        return {j.at("d").get<long>(), j.at("k").get<long>(), j.at("s").get<long>(),
                j.at("x").get<long>()};
    }
    throw std::domain_error("surface must be a JSON object or a preset name");
}

EnriquesDiagram load_diagram(const std::string& file, const std::string& name) {
    if (!name.empty()) return EnriquesDiagram::builtin(name);
    std::ifstream in(file);
    if (!in) throw std::domain_error("cannot open diagram file '" + file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return EnriquesDiagram::from_json_text(buf.str());
}

void print_validity(const families::ValidityReport& rep) {
    std::cerr << "validity advisory [" << rep.setting << "]: "
              << (rep.valid ? "condition holds" : "no printed condition holds") << "\n";
    for (const auto& n : rep.notes) std::cerr << "  " << n << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact node-polynomial calculator for nodal curves on surfaces"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // bell
    int bell_r = 0;
    int bell_k = -1;
    auto* cmd_bell = app.add_subcommand("bell", "Complete or partial Bell polynomial");
    cmd_bell->add_option("--r", bell_r, "Order r")->required();
    cmd_bell->add_option("--partial", bell_k, "Partial polynomial B_{r,k}");

    // bclass
    int bclass_delta = 0;
    auto* cmd_bclass = app.add_subcommand("bclass", "Universal classes b_1..b_delta in (v, w1, w2)");
    cmd_bclass->add_option("--delta", bclass_delta, "Number of nodes, 1..8")->required();

    // xclass
    int xclass_i = 0;
    bool xclass_oracle = false;
    auto* cmd_xclass = app.add_subcommand("xclass", "Class of the locus of i-fold points");
    cmd_xclass->add_option("--i", xclass_i, "Multiplicity index, 1..5")->required();
    cmd_xclass->add_flag("--oracle", xclass_oracle,
                         "Recompute from the principal-parts filtration instead of the cache");

    // nodepoly
    int np_delta = 0;
    std::string np_surface;
    bool np_check = false;
    auto* cmd_np = app.add_subcommand("nodepoly", "Node polynomial N_delta in (d, k, s, x)");
    cmd_np->add_option("--delta", np_delta, "Number of nodes, 0..8")->required();
    cmd_np->add_option("--surface", np_surface,
                       "Evaluate at a surface: '{\"d\":..,\"k\":..,\"s\":..,\"x\":..}' or "
                       "'{\"preset\":\"P2\",\"degree\":m}'");
    cmd_np->add_flag("--check-validity", np_check, "Print validity advisories to stderr");

    // p4
    long p4_m = 0;
    int p4_delta = 0;
    bool p4_symbolic = false;
    auto* cmd_p4 = app.add_subcommand("p4", "Delta-nodal plane curves on a degree-m threefold in P^4");
    auto* p4_m_opt = cmd_p4->add_option("--m", p4_m, "Degree of the threefold");
    cmd_p4->add_option("--delta", p4_delta, "Number of nodes, 1..6")->required();
    cmd_p4->add_flag("--symbolic", p4_symbolic, "Keep the degree m symbolic");
    p4_m_opt->excludes("--symbolic");

    // validity
    std::string val_setting;
    long val_m = 0, val_d = 0, val_l2 = 0, val_k = 0;
    int val_delta = 0;
    auto* cmd_val = app.add_subcommand("validity", "Advisory checks of printed validity conditions");
    cmd_val->add_option("--setting", val_setting, "generic | plane | k3-rho1 | abelian-rho1")
        ->required()
        ->check(CLI::IsMember({"generic", "plane", "k3-rho1", "abelian-rho1"}));
    cmd_val->add_option("--m", val_m, "Multiple m (generic, k3-rho1, abelian-rho1)");
    cmd_val->add_option("--d", val_d, "Plane-curve degree (plane)");
    cmd_val->add_option("--delta", val_delta, "Number of nodes (generic, plane)");
    cmd_val->add_option("--l2", val_l2, "Square of the generator L1 (rho-1 settings)");
    cmd_val->add_option("--k", val_k, "Very-ampleness order to check (rho-1 settings)");

    // quintic-irreducible
    auto* cmd_quintic = app.add_subcommand("quintic-irreducible",
                                           "Irreducible 6-nodal plane quintics on a general quintic threefold");

    // enriques
    auto* cmd_enr = app.add_subcommand("enriques", "Enriques diagram tools");
    cmd_enr->require_subcommand(1);
    std::string enr_file, enr_name;
    auto add_diagram_opts = [&](CLI::App* c) {
        c->add_option("--file", enr_file, "Diagram JSON file");
        c->add_option("--name", enr_name, "Built-in diagram name (A1, A2, A3, D4, D6, E7, X1,0)");
    };
    auto* cmd_enr_val = cmd_enr->add_subcommand("validate", "Check the proximity axioms");
    add_diagram_opts(cmd_enr_val);
    auto* cmd_enr_inv = cmd_enr->add_subcommand("invariants", "Equisingularity invariants");
    add_diagram_opts(cmd_enr_inv);
    int enr_maxexp = 0, enr_maxroots = 1;
    auto* cmd_enr_enum = cmd_enr->add_subcommand("enumerate", "All classes up to iso within a codimension bound");
    cmd_enr_enum->add_option("--max-expcod", enr_maxexp, "Bound on expected codimension")->required();
    cmd_enr_enum->add_option("--max-roots", enr_maxroots, "Bound on the number of proper points")
        ->capture_default_str();

    // seqcount
    std::string seq_types;
    auto* cmd_seq = app.add_subcommand("seqcount", "Singularity sequences of type (2^r)");
    cmd_seq->add_option("--types", seq_types, "Collection, e.g. 'D4+2A1'")->required();

    // partition
    int part_r = 0;
    bool part_moebius = false, part_profiles = false;
    auto* cmd_part = app.add_subcommand("partition", "Set-partition lattice of {1..r}");
    cmd_part->add_option("--r", part_r, "Ground-set size")->required();
    cmd_part->add_flag("--moebius", part_moebius, "Verify the Moebius recursion and print m coefficients");
    cmd_part->add_flag("--profiles", part_profiles, "Print profile counts against Bell coefficients");

    // kazarian
    auto* cmd_kaz = app.add_subcommand("kazarian", "Residual-class computations");
    cmd_kaz->require_subcommand(1);
    std::string kaz_sing, kaz_surface;
    auto* cmd_kaz_aform = cmd_kaz->add_subcommand("a-form", "Linear form a_S in (d, k, s, x)");
    cmd_kaz_aform->add_option("--sing", kaz_sing, "Multisingularity, e.g. 'A1^2' or 'A1*A2'")->required();
    auto* cmd_kaz_count = cmd_kaz->add_subcommand("count", "N_S on a surface (or symbolically)");
    cmd_kaz_count->add_option("--sing", kaz_sing, "Multisingularity")->required();
    cmd_kaz_count->add_option("--surface", kaz_surface, "Surface invariants JSON or preset");
    int kaz_n = 0;
    long kaz_d = 0;
    bool kaz_symbolic = false;
    auto* cmd_kaz_contact = cmd_kaz->add_subcommand("contact", "Tangent hyperplanes to a hypersurface");
    cmd_kaz_contact->add_option("--sing", kaz_sing, "Multisingularity")->required();
    cmd_kaz_contact->add_option("--n", kaz_n, "Ambient projective dimension, 2 or 3")->required();
    cmd_kaz_contact->add_option("--d", kaz_d, "Hypersurface degree");
    cmd_kaz_contact->add_flag("--symbolic", kaz_symbolic, "Print the polynomial in d");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_bell->parsed()) {
            if (bell_k >= 0)
                emit_polynomial(opt, "partial_bell", bell::partial_bell(bell_r, bell_k));
            else
                emit_polynomial(opt, "complete_bell", bell::complete_bell(bell_r));
        } else if (cmd_bclass->parsed()) {
            auto bs = bclasses::b_classes(bclass_delta);
            if (opt.json()) {
                ordered_json j = ordered_json::array();
                for (size_t i = 0; i < bs.size(); ++i) {
                    ordered_json e;
                    e["i"] = i + 1;
                    e["b"] = bs[i].str();
                    e["terms"] = to_json_records(bs[i]);
                    j.push_back(e);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (size_t i = 0; i < bs.size(); ++i)
                    std::cout << "b" << (i + 1) << " = " << bs[i].str() << "\n";
            }
        } else if (cmd_xclass->parsed()) {
            SparsePolynomial x = xclass_oracle ? bclasses::principal_parts_top_chern(xclass_i)
                                               : bclasses::x_class(xclass_i);
            emit_polynomial(opt, "xclass", x);
        } else if (cmd_np->parsed()) {
            if (np_check) {
                try {
                    nlohmann::json j = nlohmann::json::parse(np_surface);
                    if (j.contains("preset") && j.at("preset") == "P2")
                        print_validity(families::validity_plane(j.at("degree").get<long>(), np_delta));
                } catch (const nlohmann::json::exception&) {
                    // no structured surface: nothing to check against
                }
            }
            if (np_surface.empty()) {
                emit_polynomial(opt, "node_polynomial", families::node_polynomial(np_delta),
                                /*human=*/true);
            } else {
                emit_value(opt, "count",
                           families::count_on_surface(parse_surface(np_surface), np_delta));
            }
        } else if (cmd_p4->parsed()) {
            if (!p4_symbolic && p4_m_opt->count() == 0) {
                std::cerr << "error: p4 needs --m (or --symbolic)\n";
                return 2;
            }
            if (p4_delta == 6) {
                if (p4_symbolic)
                    emit_polynomial(opt, "count_polynomial", families::p4_sixnodal_polynomial(),
                                    /*human=*/true);
                else
                    emit_value(opt, "count", families::p4_sixnodal_count(p4_m));
            } else {
                SparsePolynomial cls = families::p4_node_class(p4_delta);
                if (!p4_symbolic)
                    cls = substitute(cls, {{"m", SparsePolynomial::constant(families::p4_base_ring(),
                                                                            Rational(p4_m))}});
                emit_polynomial(opt, "class", cls);
            }
        } else if (cmd_val->parsed()) {
            families::ValidityReport rep;
            if (val_setting == "generic") rep = families::validity_generic(val_m, val_delta);
            else if (val_setting == "plane") rep = families::validity_plane(val_d, val_delta);
            else if (val_setting == "k3-rho1") rep = families::validity_k3_rho1(val_l2, val_m, val_k);
            else rep = families::validity_abelian_rho1(val_l2, val_m, val_k);
            if (opt.json()) {
                ordered_json j;
                j["setting"] = rep.setting;
                j["valid"] = rep.valid;
                j["notes"] = rep.notes;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << rep.setting << ": " << (rep.valid ? "valid" : "not established") << "\n";
                for (const auto& n : rep.notes) std::cout << "  " << n << "\n";
            }
        } else if (cmd_quintic->parsed()) {
            emit_value(opt, "count", families::quintic_irreducible_count());
        } else if (cmd_enr_val->parsed()) {
            auto d = load_diagram(enr_file, enr_name);
            auto errors = enriques::validate(d);
            if (opt.json()) {
                ordered_json j;
                j["ok"] = errors.empty();
                j["violations"] = errors;
                std::cout << j.dump(2) << "\n";
            } else if (errors.empty()) {
                std::cout << "ok\n";
            } else {
                for (const auto& e : errors) std::cout << e << "\n";
            }
            if (!errors.empty()) return 1;
        } else if (cmd_enr_inv->parsed()) {
            auto d = load_diagram(enr_file, enr_name);
            auto inv = enriques::invariants(d);
            if (opt.json()) {
                ordered_json j;
                j["delta"] = inv.delta;
                j["mu"] = inv.mu;
                j["r"] = inv.r;
                j["roots"] = inv.roots;
                j["free"] = inv.free_pts;
                j["deg"] = inv.deg;
                j["dim"] = inv.dim;
                j["expcod"] = inv.expcod;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "delta=" << inv.delta << " mu=" << inv.mu << " r=" << inv.r
                          << " roots=" << inv.roots << " free=" << inv.free_pts
                          << " deg=" << inv.deg << " dim=" << inv.dim
                          << " expcod=" << inv.expcod << "\n";
            }
        } else if (cmd_enr_enum->parsed()) {
            auto classes = enriques::enumerate_classes(enr_maxexp, enr_maxroots);
            if (opt.json()) {
                ordered_json j = ordered_json::array();
                for (const auto& d : classes) {
                    ordered_json e;
                    e["expcod"] = enriques::invariants(d).expcod;
                    e["canonical"] = enriques::canonical_form(d);
                    e["diagram"] = nlohmann::json::parse(d.to_json_text());
                    j.push_back(e);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& d : classes)
                    std::cout << "expcod=" << enriques::invariants(d).expcod << "  "
                              << enriques::canonical_form(d) << "\n";
                std::cout << classes.size() << " classes\n";
            }
        } else if (cmd_seq->parsed()) {
            auto spec = MultisingularitySpec::parse(seq_types);
            std::map<std::string, int> types(spec.counts().begin(), spec.counts().end());
            long long count = enriques::sequence_count(types);
            emit_value(opt, "count", Rational(static_cast<long>(count)));
        } else if (cmd_part->parsed()) {
            auto parts = partitions::all_partitions(part_r);
            if (part_moebius) {
                bool ok = partitions::verify_moebius_recursion(part_r);
                if (opt.json()) {
                    ordered_json j;
                    j["moebius_recursion"] = ok;
                    ordered_json arr = ordered_json::array();
                    for (const auto& p : parts) {
                        ordered_json e;
                        e["partition"] = p.str();
                        e["m"] = partitions::m_coefficient(p).str();
                        arr.push_back(e);
                    }
                    j["coefficients"] = arr;
                    std::cout << j.dump(2) << "\n";
                } else {
                    for (const auto& p : parts)
                        std::cout << p.str() << "  m=" << partitions::m_coefficient(p).str() << "\n";
                    std::cout << "moebius recursion: " << (ok ? "verified" : "FAILED") << "\n";
                }
                if (!ok) return 1;
            } else if (part_profiles) {
                SparsePolynomial pr = bell::complete_bell(part_r);
                if (opt.json()) {
                    ordered_json arr = ordered_json::array();
                    for (const auto& [e, c] : pr.terms()) {
                        std::vector<int> profile(e.begin(), e.end());
                        profile.insert(profile.begin(), 0);
                        ordered_json rec;
                        rec["profile"] = profile;
                        rec["bell_coefficient"] = c.str();
                        rec["partition_count"] = partitions::profile_count(part_r, profile);
                        arr.push_back(rec);
                    }
                    std::cout << arr.dump(2) << "\n";
                } else {
                    for (const auto& [e, c] : pr.terms()) {
                        std::vector<int> profile(e.begin(), e.end());
                        profile.insert(profile.begin(), 0);
                        std::cout << "coefficient " << c.str() << " = "
                                  << partitions::profile_count(part_r, profile) << " partitions\n";
                    }
                }
            } else {
                for (const auto& p : parts) std::cout << p.str() << "\n";
            }
        } else if (cmd_kaz_aform->parsed()) {
            auto spec = MultisingularitySpec::parse(kaz_sing);
            emit_polynomial(opt, "a_form", kazarian::a_linear_form(spec).to_polynomial(),
                            /*human=*/true);
        } else if (cmd_kaz_count->parsed()) {
            auto spec = MultisingularitySpec::parse(kaz_sing);
            std::cerr << "note: counts assume the genericity condition of the residual-class "
                         "theory (semi-universal deformations induced in codimension "
                      << spec.codimension() << ")\n";
            if (kaz_surface.empty())
                emit_polynomial(opt, "count_polynomial", kazarian::multisingularity_polynomial(spec),
                                /*human=*/true);
            else
                emit_value(opt, "count",
                           kazarian::multisingularity_count(spec, parse_surface(kaz_surface)));
        } else if (cmd_kaz_contact->parsed()) {
            auto spec = MultisingularitySpec::parse(kaz_sing);
            if (kaz_symbolic || kaz_d == 0)
                emit_polynomial(opt, "contact_polynomial", kazarian::contact_polynomial(kaz_n, spec));
            else
                emit_value(opt, "count", kazarian::contact_count(kaz_n, kaz_d, spec));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
