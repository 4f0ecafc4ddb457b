#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "so3x8/charclass.hpp"
#include "so3x8/exforms.hpp"
#include "so3x8/liealg.hpp"
#include "so3x8/repring.hpp"
#include "so3x8/torsion.hpp"
#include "so3x8/verify.hpp"

namespace so3x8::cli {

namespace {

using linalg::RatMatrix;
using nlohmann::ordered_json;
using repring::VirtualRep;

ordered_json rep_terms(const VirtualRep& r) {
    ordered_json terms = ordered_json::object();
    for (const auto& [n, mult] : r.terms())
        terms["S" + std::to_string(n)] = mult;
    return terms;
}

ordered_json rep_json(const std::string& operation, const VirtualRep& r) {
    ordered_json j;
    j["operation"] = operation;
    j["decomposition"] = r.str();
    j["terms"] = rep_terms(r);
    j["complex_dimension"] = r.complex_dimension();
    j["real_dimension"] = r.real_form_dimension();
    return j;
}

void print_rep(std::ostream& out, bool json, const std::string& operation,
               const VirtualRep& r) {
    if (json) {
        out << rep_json(operation, r).dump(2) << "\n";
        return;
    }
    out << operation << "\n  = " << r.str() << "\n  complex dimension "
        << r.complex_dimension() << ", real dimension " << r.real_form_dimension()
        << "\n";
}

liealg::AlgebraKind algebra_kind(const std::string& name) {
    if (name == "psu3") return liealg::AlgebraKind::su3;
    return liealg::kind_from_name(name);
}

/// Signed sums of the named invariant forms, e.g. "gamma+star_gamma".
exforms::KForm parse_form_expr(const std::string& text) {
    std::vector<std::pair<int, std::string>> tokens;
    std::string current;
    int sign = 1;
    auto flush = [&](int next_sign) {
        if (!current.empty()) tokens.emplace_back(sign, current);
        else if (!tokens.empty() || next_sign == 0)
            throw std::invalid_argument("malformed form expression: " + text);
        current.clear();
        sign = next_sign;
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == '+') flush(1);
        else if (ch == '-') flush(-1);
        else current.push_back(ch);
    }
    flush(0);
    if (tokens.empty())
        throw std::invalid_argument("empty form expression");

    auto named = [](const std::string& token) {
        using exforms::NamedForm;
        if (token == "alpha") return NamedForm::alpha;
        if (token == "beta") return NamedForm::beta;
        if (token == "gamma") return NamedForm::gamma;
        if (token == "star_gamma" || token == "*gamma") return NamedForm::star_gamma;
        if (token == "star_alpha" || token == "*alpha") return NamedForm::star_alpha;
        if (token == "star_beta" || token == "*beta") return NamedForm::star_beta;
        throw std::invalid_argument(
            "unknown form name \"" + token +
            "\" (expected alpha, beta, gamma, star_alpha, star_beta, star_gamma)");
    };
    exforms::KForm sum = exforms::named_form(named(tokens[0].second))
                             .scaled(rat(tokens[0].first));
    for (size_t i = 1; i < tokens.size(); ++i)
        sum = sum + exforms::named_form(named(tokens[i].second))
                        .scaled(rat(tokens[i].first));
    return sum;
}

RatMatrix parse_mat2(const std::string& csv) {
    std::vector<Rat> entries;
    std::string piece;
    std::istringstream in(csv);
    while (std::getline(in, piece, ',')) entries.push_back(rat_parse(piece));
    if (entries.size() != 4)
        throw std::invalid_argument("expected four comma-separated rationals, got \"" +
                                    csv + "\"");
    RatMatrix m(2, 2);
    m.at(0, 0) = entries[0];
    m.at(0, 1) = entries[1];
    m.at(1, 0) = entries[2];
    m.at(1, 1) = entries[3];
    return m;
}

std::string matrix3_str(const RatMatrix& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (int j = 0; j < m.cols(); ++j) s += (j ? " " : "") + rat_str(m.at(i, j));
    }
    return s + "]";
}

int run_verify(std::ostream& out, bool json, const verify::CheckOptions& options) {
    const auto criteria = verify::run_criteria(options);
    bool all = true;
    for (const auto& c : criteria) all &= c.pass;
    if (json) {
        out << verify::criteria_json(criteria).dump(2) << "\n";
    } else {
        for (const auto& criterion : criteria) {
            out << (criterion.pass ? "[PASS] " : "[FAIL] ") << criterion.id << ". "
                << criterion.anchor << "\n";
            for (const auto& check : criterion.checks)
                out << "  " << (check.pass ? "  ok" : "FAIL") << "  " << check.claim
                    << " | expected " << check.expected << " | computed "
                    << check.computed << "\n";
            if (!criterion.note.empty()) out << "  note: " << criterion.note << "\n";
        }
        out << (all ? "RESULT: pass" : "RESULT: fail") << " (" << criteria.size()
            << " criteria)\n";
    }
    return all ? 0 : 1;
}

void print_conventions(std::ostream& out, bool json) {
    const liealg::ReferenceBasis& basis = liealg::reference_basis();
    ordered_json j;
    j["model"] =
        "R^8 is the set of pairs (A, S): A a 3x3 antisymmetric rational matrix "
        "(the V block, 3 dims), S a 3x3 symmetric traceless rational matrix "
        "(the W block, 5 dims)";
    j["bracket"] = "[(A,S),(A',S')] = ([A,A'] - 3[S,S'], [A,S'] - [A',S])";
    j["inner_product"] = "<(A,S),(A',S')> = -tr(AA')/2 + (3/2) tr(SS')";
    ordered_json vecs = ordered_json::array();
    for (const auto& v : basis.vectors) {
        ordered_json e;
        e["antisym"] = matrix3_str(v.antisym);
        e["sym"] = matrix3_str(v.sym);
        vecs.push_back(std::move(e));
    }
    j["frozen_basis"] = std::move(vecs);
    j["generators"] =
        "E_i = ad of the V-block rotations scaled so [E1,E2] = 2E3 cyclically; "
        "the Casimir sum rho_i^2 acts as -n(n+2) on S^n";
    j["orientation"] = "volume form e1^e2^...^e8; Hodge star of the orthonormal "
                       "coframe metric";
    j["form_normalization"] =
        "named invariant forms are scaled to primitive integer coefficient "
        "vectors with positive leading coefficient; starred forms inherit scale "
        "and sign through the star";
    j["named_forms"] = {
        {"alpha", exforms::form_pretty(exforms::named_form(exforms::NamedForm::alpha))},
        {"beta", exforms::form_pretty(exforms::named_form(exforms::NamedForm::beta))},
        {"gamma", exforms::form_pretty(exforms::named_form(exforms::NamedForm::gamma))},
    };
    if (json) {
        out << j.dump(2) << "\n";
        return;
    }
    out << "model:        " << j["model"].get<std::string>() << "\n"
        << "bracket:      " << j["bracket"].get<std::string>() << "\n"
        << "inner prod:   " << j["inner_product"].get<std::string>() << "\n"
        << "generators:   " << j["generators"].get<std::string>() << "\n"
        << "orientation:  " << j["orientation"].get<std::string>() << "\n"
        << "forms:        " << j["form_normalization"].get<std::string>() << "\n"
        << "frozen basis (antisym | sym):\n";
    for (size_t i = 0; i < basis.vectors.size(); ++i)
        out << "  e" << (i + 1) << ": " << matrix3_str(basis.vectors[i].antisym)
            << " | " << matrix3_str(basis.vectors[i].sym) << "\n";
    out << "alpha = " << j["named_forms"]["alpha"].get<std::string>() << "\n"
        << "beta  = " << j["named_forms"]["beta"].get<std::string>() << "\n"
        << "gamma = " << j["named_forms"]["gamma"].get<std::string>() << "\n";
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for the rank-3 geometry of R^8: representation "
                 "arithmetic, stabilizer algebras, invariant forms, "
                 "characteristic classes, and intrinsic torsion"};
    app.name("so3x8");

    bool json = false;
    std::uint64_t seed = verify::CheckOptions{}.seed;
    int resolution = 8;
    app.add_flag("--json", json, "emit machine-readable JSON");
    app.add_option("--seed", seed, "seed for the sampling checks");
    app.add_option("--resolution", resolution, "pencil-scan slope resolution")
        ->check(CLI::PositiveNumber);
    app.require_subcommand(1);

    std::function<int()> action;

    // ---- rep ---------------------------------------------------------
    auto* rep = app.add_subcommand("rep", "virtual-representation arithmetic");
    rep->fallthrough();
    rep->require_subcommand(1);
    {
        auto* decompose = rep->add_subcommand("decompose", "parse and normalize");
        decompose->fallthrough();
        auto expr = std::make_shared<std::string>();
        decompose->add_option("expr", *expr, "expression, e.g. \"S2+S4\"")->required();
        decompose->callback([&, expr] {
            action = [&, expr] {
                print_rep(out, json, "decompose " + *expr, repring::parse_rep(*expr));
                return 0;
            };
        });

        auto* tens = rep->add_subcommand("tensor", "tensor product");
        tens->fallthrough();
        auto lhs = std::make_shared<std::string>();
        auto rhs = std::make_shared<std::string>();
        tens->add_option("lhs", *lhs, "left factor")->required();
        tens->add_option("rhs", *rhs, "right factor")->required();
        tens->callback([&, lhs, rhs] {
            action = [&, lhs, rhs] {
                const VirtualRep r = repring::tensor(repring::parse_rep(*lhs),
                                                     repring::parse_rep(*rhs));
                print_rep(out, json, "tensor (" + *lhs + ") (x) (" + *rhs + ")", r);
                return 0;
            };
        });

        auto* power = rep->add_subcommand("power", "exterior or symmetric power");
        power->fallthrough();
        auto ext = std::make_shared<int>(-1);
        auto sym = std::make_shared<int>(-1);
        auto expr2 = std::make_shared<std::string>();
        auto* ext_opt = power->add_option("--ext", *ext, "exterior power degree");
        auto* sym_opt = power->add_option("--sym", *sym, "symmetric power degree");
        ext_opt->excludes(sym_opt);
        power->add_option("expr", *expr2, "base representation")->required();
        power->callback([&, ext, sym, expr2] {
            action = [&, ext, sym, expr2] {
                if (*ext < 0 && *sym < 0) {
                    err << "rep power: one of --ext or --sym is required\n";
                    return 2;
                }
                const VirtualRep base = repring::parse_rep(*expr2);
                if (*ext >= 0)
                    print_rep(out, json,
                              "Lambda^" + std::to_string(*ext) + "(" + *expr2 + ")",
                              repring::exterior_power(base, *ext));
                else
                    print_rep(out, json,
                              "Sym^" + std::to_string(*sym) + "(" + *expr2 + ")",
                              repring::symmetric_power(base, *sym));
                return 0;
            };
        });
    }

    // ---- alg ---------------------------------------------------------
    auto* alg = app.add_subcommand("alg", "distinguished subalgebras of so(8)");
    alg->fallthrough();
    alg->require_subcommand(1);
    {
        auto* build = alg->add_subcommand("build", "construct one algebra");
        build->fallthrough();
        auto name = std::make_shared<std::string>();
        build->add_option("name", *name, "g | so3so5 | psu3 | sp2sp1")->required();
        build->callback([&, name] {
            action = [&, name] {
                const auto& model = liealg::algebra(algebra_kind(*name));
                ordered_json j = liealg::algebra_report_json(model);
                j["isotypes"] = liealg::subspace_isotypes(model.space).str();
                j["trace_form_negative_definite"] =
                    liealg::trace_form_negative_definite(model.space);
                j["basis"] = liealg::subspace_to_json(model.space);
                if (json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << model.name << ": dim " << model.space.dim()
                        << ", bracket closed: " << (model.bracket_closed ? "yes" : "no")
                        << ", contains g: " << (model.contains_g ? "yes" : "no")
                        << "\n  isotypes: " << j["isotypes"].get<std::string>() << "\n";
                }
                return 0;
            };
        });

        auto* meet = alg->add_subcommand("intersect", "intersection of two algebras");
        meet->fallthrough();
        auto lhs = std::make_shared<std::string>();
        auto rhs = std::make_shared<std::string>();
        meet->add_option("lhs", *lhs, "first algebra")->required();
        meet->add_option("rhs", *rhs, "second algebra")->required();
        meet->callback([&, lhs, rhs] {
            action = [&, lhs, rhs] {
                const liealg::Subspace a = liealg::algebra(algebra_kind(*lhs)).space;
                const liealg::Subspace b = liealg::algebra(algebra_kind(*rhs)).space;
                const liealg::Subspace meet_space = liealg::intersect(a, b);
                const bool equals_g = meet_space == liealg::g_space();
                if (json) {
                    ordered_json j;
                    j["lhs"] = *lhs;
                    j["rhs"] = *rhs;
                    j["dim"] = meet_space.dim();
                    j["equals_g"] = equals_g;
                    out << j.dump(2) << "\n";
                } else {
                    out << *lhs << " ^ " << *rhs << ": dim " << meet_space.dim()
                        << ", equals g: " << (equals_g ? "yes" : "no") << "\n";
                }
                return 0;
            };
        });

        auto* comp = alg->add_subcommand("complement",
                                         "orthogonal complement inside so(8)");
        comp->fallthrough();
        auto name2 = std::make_shared<std::string>();
        comp->add_option("name", *name2, "g | so3so5 | psu3 | sp2sp1")->required();
        comp->callback([&, name2] {
            action = [&, name2] {
                const liealg::Subspace space =
                    liealg::algebra(algebra_kind(*name2)).space;
                const liealg::Subspace perp = liealg::orth_complement(space);
                const VirtualRep isotypes = liealg::subspace_isotypes(perp);
                if (json) {
                    ordered_json j;
                    j["algebra"] = *name2;
                    j["dim"] = perp.dim();
                    j["isotypes"] = isotypes.str();
                    out << j.dump(2) << "\n";
                } else {
                    out << *name2 << "-perp: dim " << perp.dim() << ", isotypes "
                        << isotypes.str() << "\n";
                }
                return 0;
            };
        });

        auto* iso = alg->add_subcommand("isotypes", "isotype decomposition");
        iso->fallthrough();
        auto name3 = std::make_shared<std::string>();
        iso->add_option("name", *name3, "g | so3so5 | psu3 | sp2sp1 | so8")->required();
        iso->callback([&, name3] {
            action = [&, name3] {
                const liealg::Subspace space =
                    (*name3 == "so8") ? liealg::so8_space()
                                      : liealg::algebra(algebra_kind(*name3)).space;
                print_rep(out, json, "isotypes of " + *name3,
                          liealg::subspace_isotypes(space));
                return 0;
            };
        });
    }

    // ---- forms -------------------------------------------------------
    auto* forms = app.add_subcommand("forms", "invariant exterior forms");
    forms->fallthrough();
    forms->require_subcommand(1);
    {
        auto* inv = forms->add_subcommand("invariants",
                                          "invariant dimensions and named forms");
        inv->fallthrough();
        inv->callback([&] {
            action = [&] {
                ordered_json dims = ordered_json::array();
                for (int k = 0; k <= 8; ++k)
                    dims.push_back(exforms::invariant_subspace(k).dim());
                ordered_json j;
                j["invariant_dims_by_degree"] = dims;
                j["alpha"] =
                    exforms::form_pretty(exforms::named_form(exforms::NamedForm::alpha));
                j["beta"] =
                    exforms::form_pretty(exforms::named_form(exforms::NamedForm::beta));
                j["gamma"] =
                    exforms::form_pretty(exforms::named_form(exforms::NamedForm::gamma));
                j["star_gamma"] = exforms::form_pretty(
                    exforms::named_form(exforms::NamedForm::star_gamma));
                if (json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << "invariant dimensions, degree 0..8:";
                    for (const auto& d : dims) out << " " << d;
                    out << "\nalpha = " << j["alpha"].get<std::string>()
                        << "\nbeta  = " << j["beta"].get<std::string>()
                        << "\ngamma = " << j["gamma"].get<std::string>() << "\n";
                }
                return 0;
            };
        });

        auto* star = forms->add_subcommand("star", "Hodge star of a named form");
        star->fallthrough();
        auto form_name = std::make_shared<std::string>();
        star->add_option("--form", *form_name,
                         "signed sum of named forms, e.g. gamma+star_gamma")
            ->required();
        star->callback([&, form_name] {
            action = [&, form_name] {
                const exforms::KForm f = parse_form_expr(*form_name);
                const exforms::KForm starred = exforms::hodge_star(f);
                if (json) {
                    ordered_json j;
                    j["form"] = *form_name;
                    j["degree"] = f.degree();
                    j["star_degree"] = starred.degree();
                    j["star_pretty"] = exforms::form_pretty(starred);
                    j["star"] = exforms::form_to_json(starred);
                    out << j.dump(2) << "\n";
                } else {
                    out << "*(" << *form_name << ") = " << exforms::form_pretty(starred)
                        << "\n";
                }
                return 0;
            };
        });

        auto* stab = forms->add_subcommand("stabilizer", "stabilizer subalgebra");
        stab->fallthrough();
        auto form_name2 = std::make_shared<std::string>();
        stab->add_option("--form", *form_name2,
                         "signed sum of named forms, e.g. gamma+star_gamma")
            ->required();
        stab->callback([&, form_name2] {
            action = [&, form_name2] {
                const exforms::KForm f = parse_form_expr(*form_name2);
                const liealg::Subspace stab_space = exforms::stabilizer(f);
                const bool closed = liealg::is_bracket_closed(stab_space);
                const bool has_g = stab_space.contains(liealg::g_space());
                ordered_json j;
                j["form"] = *form_name2;
                j["dim"] = stab_space.dim();
                j["bracket_closed"] = closed;
                j["contains_g"] = has_g;
                if (has_g)
                    j["isotypes"] = liealg::subspace_isotypes(stab_space).str();
                if (closed) {
                    liealg::AlgebraModel model;
                    model.name = "stabilizer(" + *form_name2 + ")";
                    model.space = stab_space;
                    model.bracket_closed = closed;
                    model.contains_g = has_g;
                    ordered_json ideals = ordered_json::array();
                    for (int d : liealg::ideal_dims(model)) ideals.push_back(d);
                    j["ideal_dims"] = std::move(ideals);
                }
                if (json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << "stab(" << *form_name2 << "): dim " << stab_space.dim()
                        << ", bracket closed: " << (closed ? "yes" : "no")
                        << ", contains g: " << (has_g ? "yes" : "no") << "\n";
                    if (j.contains("isotypes"))
                        out << "  isotypes: " << j["isotypes"].get<std::string>() << "\n";
                    if (j.contains("ideal_dims")) {
                        out << "  ideal dims:";
                        for (const auto& d : j["ideal_dims"]) out << " " << d;
                        out << "\n";
                    }
                }
                return 0;
            };
        });

        auto* pencil = forms->add_subcommand(
            "pencil", "stabilizer-dimension scan over gamma + s * (*gamma)");
        pencil->fallthrough();
        pencil->callback([&] {
            action = [&] {
                exforms::FormPencil p;
                p.first = exforms::named_form(exforms::NamedForm::gamma);
                p.second = exforms::named_form(exforms::NamedForm::star_gamma);
                p.resolution = resolution;
                const exforms::PencilScanResult scan = exforms::pencil_scan(p);
                ordered_json j;
                j["pencil"] = "gamma + s * star_gamma";
                j["resolution"] = resolution;
                j["rays_scanned"] = static_cast<int>(scan.rays.size());
                j["generic_dim"] = scan.generic_dim;
                ordered_json jumps = ordered_json::array();
                for (const auto& ray : scan.jumps) {
                    ordered_json one;
                    one["slope"] = ray.at_infinity ? "infinity" : rat_str(ray.slope);
                    one["stabilizer_dim"] = ray.stabilizer_dim;
                    jumps.push_back(std::move(one));
                }
                j["jumps"] = std::move(jumps);
                if (json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << "pencil gamma + s * star_gamma, resolution " << resolution
                        << ": scanned " << scan.rays.size() << " rays, generic dim "
                        << scan.generic_dim << "\n";
                    for (const auto& ray : scan.jumps)
                        out << "  jump at s = "
                            << (ray.at_infinity ? std::string("infinity")
                                                : rat_str(ray.slope))
                            << ": stabilizer dim " << ray.stabilizer_dim << "\n";
                }
                return 0;
            };
        });
    }

    // ---- charclass ---------------------------------------------------
    auto* cc = app.add_subcommand("charclass", "characteristic classes and genera");
    cc->fallthrough();
    cc->require_subcommand(1);
    {
        auto* report = cc->add_subcommand("report", "the full class report");
        report->fallthrough();
        report->callback([&] {
            action = [&] {
                const ordered_json j = charclass::charclass_report();
                if (json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << "ch(T_c) = " << j["ch"].get<std::string>() << "\n"
                        << "p1 = " << j["p1"].get<std::string>()
                        << ", p2 = " << j["p2"].get<std::string>() << "\n"
                        << "L = " << j["genera"]["L"].get<std::string>() << "\n"
                        << "Ahat = " << j["genera"]["Ahat"].get<std::string>() << "\n"
                        << "Todd = " << j["genera"]["Todd"].get<std::string>() << "\n"
                        << "divisibility bound "
                        << j["relations"]["divisibility"].get<long long>() << "\n"
                        << "note: " << j["ch_top_erratum"].get<std::string>() << "\n";
                }
                return 0;
            };
        });

        auto* acs = cc->add_subcommand("acs", "almost-complex structure classifier");
        acs->fallthrough();
        auto weights = std::make_shared<std::string>("2,-1,-1,0");
        acs->add_option("--weights", *weights,
                        "holomorphic weights as CSV (default 2,-1,-1,0)");
        acs->callback([&, weights] {
            action = [&, weights] {
                const ordered_json j =
                    charclass::acs_classify(charclass::WeightBundle::parse(*weights));
                if (json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << "weights (" << *weights << "): quaternionic "
                        << (j["quaternionic"].get<bool>() ? "yes" : "no");
                    if (!j["matches"].is_null())
                        out << ", matches " << j["matches"].get<std::string>();
                    out << "\n";
                }
                return 0;
            };
        });
    }

    // ---- torsion -----------------------------------------------------
    auto* tor = app.add_subcommand("torsion", "intrinsic-torsion module arithmetic");
    tor->fallthrough();
    tor->require_subcommand(1);
    {
        auto* table = tor->add_subcommand("table", "the relative-torsion table");
        table->fallthrough();
        table->callback([&] {
            action = [&] {
                const ordered_json j = torsion::torsion_table_json();
                if (json) {
                    out << j.dump(2) << "\n";
                } else {
                    for (const auto& [group, row] : j["rows"].items()) {
                        out << group << ": " << row["decomposition"].get<std::string>()
                            << "  (dim " << row["dim"].get<long long>() << ", "
                            << row["invariants"].get<long long>() << " invariants)\n";
                    }
                    out << "note: " << j["note"].get<std::string>() << "\n";
                }
                return 0;
            };
        });

        auto* cases = tor->add_subcommand("cases", "the four differential families");
        cases->fallthrough();
        cases->callback([&] {
            action = [&] {
                const ordered_json j = torsion::case_families_json();
                if (json) {
                    out << j.dump(2) << "\n";
                } else {
                    for (const auto& f : j["families"]) {
                        out << "family " << f["family"].get<std::string>() << ": ";
                        bool first = true;
                        for (const auto& [key, value] : f["differentials"].items()) {
                            out << (first ? "" : ", ") << key << " = "
                                << value.get<std::string>();
                            first = false;
                        }
                        out << "  [rank A = " << f["rank_A"].get<int>() << ", rank B in";
                        for (const auto& r : f["rank_B"]) out << " " << r;
                        out << "]\n";
                    }
                    out << j["always"].get<std::string>() << "; "
                        << j["constraint"].get<std::string>() << "\n";
                }
                return 0;
            };
        });

        auto* classify = tor->add_subcommand("classify",
                                             "classify a concrete pair (A, B)");
        classify->fallthrough();
        auto a_csv = std::make_shared<std::string>();
        auto b_csv = std::make_shared<std::string>();
        classify->add_option("--a", *a_csv, "entries a11,a12,a21,a22")->required();
        classify->add_option("--b", *b_csv, "entries b11,b12,b21,b22")->required();
        classify->callback([&, a_csv, b_csv] {
            action = [&, a_csv, b_csv] {
                const ordered_json j =
                    torsion::case_classify(parse_mat2(*a_csv), parse_mat2(*b_csv));
                if (json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << "family: " << j["family"].get<std::string>() << "\n";
                    if (j.contains("reason"))
                        out << "reason: " << j["reason"].get<std::string>() << "\n";
                }
                return 0;
            };
        });
    }

    // ---- verify-paper --------------------------------------------------
    auto* ver = app.add_subcommand(
        "verify-paper", "run every acceptance criterion and report pass/fail");
    ver->fallthrough();
    auto fixture = std::make_shared<std::string>();
    ver->add_option("--fixture", *fixture,
                    "JSON file replacing one algebra's basis (negative-path "
                    "testing): {\"algebra\": name, \"basis\": subspace}")
        ->check(CLI::ExistingFile);
    ver->callback([&, fixture] {
        action = [&, fixture] {
            verify::CheckOptions options;
            options.seed = seed;
            options.resolution = resolution;
            if (!fixture->empty()) {
                std::ifstream in(*fixture);
                nlohmann::json doc = nlohmann::json::parse(in);
                options.algebra_overrides[doc.at("algebra").get<std::string>()] =
                    liealg::subspace_from_json(doc.at("basis"));
            }
            return run_verify(out, json, options);
        };
    });

    // ---- conventions ---------------------------------------------------
    auto* conv = app.add_subcommand(
        "conventions", "print the frozen basis, orientation, and normalizations");
    conv->fallthrough();
    conv->callback([&] {
        action = [&] {
            print_conventions(out, json);
            return 0;
        };
    });

    // ---- parse and run ---------------------------------------------------
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    if (!action) {
        err << app.help();
        return 2;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace so3x8::cli
