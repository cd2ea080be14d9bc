// stab — exact Bridgeland-stability computations on ruled surfaces.
//
// Exit codes: 0 success, 1 input/precondition error, 2 refusal with
// certificate (inconsistent boundary system, or a deformation too far
// from the wall to lift windings safely).

#include "stab/catalog.hpp"
#include "stab/conditions.hpp"
#include "stab/serialize.hpp"
#include "stab/verify.hpp"
#include "stab/walls.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace stab;

// "a,b;c,d" or "a,b;c,d;shift=n" or "id". Entries are exact rationals
// "p/q". The matrix is the translate's M (not M^{-1}); shift=n pins the
// integer part of the lifted phase map at zero: floor(f(0)) = n.
LiftedGL parse_lifted_text(const std::string& text) {
    if (text == "id" || text == "identity") return LiftedGL::identity();
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(item);
    if (parts.size() != 2 && parts.size() != 3)
        throw DomainError("translate \"" + text + "\" must be \"a,b;c,d\", \"a,b;c,d;shift=n\", or \"id\"");
    auto row = [&](const std::string& r) {
        auto comma = r.find(',');
        if (comma == std::string::npos)
            throw DomainError("translate row \"" + r + "\" must be two rationals separated by ','");
        return std::pair{rat_parse(r.substr(0, comma)), rat_parse(r.substr(comma + 1))};
    };
    auto [a, b] = row(parts[0]);
    auto [c, d] = row(parts[1]);
    Mat2 M{a, b, c, d};
    long long cli_shift = 0;
    if (parts.size() == 3) {
        const std::string& s = parts[2];
        if (s.rfind("shift=", 0) != 0)
            throw DomainError("translate third field must be \"shift=n\", got \"" + s + "\"");
        try {
            cli_shift = std::stoll(s.substr(6));
        } catch (const std::exception&) {
            throw DomainError("translate shift must be an integer, got \"" + s.substr(6) + "\"");
        }
    }
    if (M.det() <= 0) throw DomainError("translate matrix must have positive determinant");
    return LiftedGL::make(M, cli_shift - canonical_at_zero(M).m);
}

// "re,im;re,im;re,im;re,im" for the components (r, c1.C0, c1.f, s).
ComplexClass parse_complex_text(const std::string& text) {
    std::vector<GaussQ> comps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto comma = item.find(',');
        if (comma == std::string::npos)
            throw DomainError("charge-vector component \"" + item + "\" must be \"re,im\"");
        comps.emplace_back(rat_parse(item.substr(0, comma)), rat_parse(item.substr(comma + 1)));
    }
    if (comps.size() != 4)
        throw DomainError("charge vector must have four \"re,im\" components (r; c1.C0; c1.f; s)");
    return {comps[0], comps[1], comps[2], comps[3]};
}

struct DescOpts {
    bool divisorial = false;
    bool glued = false;
    std::string B, omega, translate = "id";
    std::string A1, A2 = "id";
    std::string a, b;  // shorthand: normalized gluing with M1^{-1} = (a, b; 0, a), f1(0) = 1
};

void add_descriptor_flags(CLI::App* cmd, DescOpts& o, bool allow_divisorial) {
    if (allow_divisorial) {
        cmd->add_flag("--divisorial", o.divisorial, "divisorial descriptor (B, omega, optional translate)");
        cmd->add_option("--B", o.B, "B divisor, e.g. \"-1/2*C0+f\" or \"0\"");
        cmd->add_option("--omega", o.omega, "omega divisor, e.g. \"C0+f\"");
        cmd->add_option("--translate", o.translate, "optional group translate \"a,b;c,d;shift=n\"");
    }
    cmd->add_flag("--glued", o.glued, "glued descriptor (translates A1, A2 of the standard condition)");
    cmd->add_option("--A1", o.A1, "translate on p*D(C)(-C0): \"a,b;c,d;shift=n\" or \"id\"");
    cmd->add_option("--A2", o.A2, "translate on p*D(C): same format, default \"id\"");
    cmd->add_option("--a", o.a, "shorthand: M1^{-1} = (a, b; 0, a) with A2 = id and f1(0) = 1");
    cmd->add_option("--b", o.b, "shorthand: see --a");
}

GluedDescriptor build_glued(const DescOpts& o) {
    if (!o.a.empty() || !o.b.empty()) {
        if (o.a.empty() || o.b.empty()) throw DomainError("--a and --b must be given together");
        Mat2 Mi{rat_parse(o.a), rat_parse(o.b), Rat(0), rat_parse(o.a)};
        if (Mi.det() <= 0) throw DomainError("shorthand matrix (a, b; 0, a) must have positive determinant");
        Mat2 M1 = Mi.inverse();
        LiftedGL A1 = LiftedGL::make(M1, 1 - canonical_at_zero(M1).m);  // f1(0) = 1
        return {A1, LiftedGL::identity()};
    }
    if (o.A1.empty()) throw DomainError("glued descriptor needs --A1 (or the --a/--b shorthand)");
    return {parse_lifted_text(o.A1), parse_lifted_text(o.A2)};
}

StabilityDescriptor build_descriptor(const DescOpts& o) {
    if (o.divisorial == o.glued)
        throw DomainError("choose exactly one of --divisorial and --glued");
    if (o.divisorial) {
        if (o.B.empty() || o.omega.empty()) throw DomainError("divisorial descriptor needs --B and --omega");
        DivisorialDescriptor d;
        d.B = parse_divisor_text(o.B);
        d.omega = parse_divisor_text(o.omega);
        d.translate = parse_lifted_text(o.translate);
        return d;
    }
    return build_glued(o);
}

void attach_caveats(Json& j, const SurfaceData& S) {
    std::vector<std::string> notes = surface_caveats(S);
    if (!notes.empty() && j.is_object()) j["caveats"] = notes;
}

void emit(const Json& j, const std::string& output, const std::string& text) {
    if (output == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string phase_text(const PhasePoint& p) {
    return p.str() + " (~" + std::to_string(p.approx()) + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stab: exact stability-condition computations on ruled surfaces (central charges, "
                 "gluing perversity, skyscraper classification, destabilizing-wall boundary solver)"};
    app.require_subcommand(1);
    app.fallthrough();

    long long genus = 0, e = 0;
    std::string output = "json";
    app.add_option("--genus", genus, "genus of the base curve (>= 0)")->required();
    app.add_option("--e", e, "e = deg E = C0^2 (Hartshorne's invariant is -e)")->required();
    app.add_option("--output", output, "report format")->check(CLI::IsMember({"json", "text"}));

    DescOpts charge_d, phase_d, per_d, classify_d, wall_d, side_d;
    std::vector<std::string> charge_objects, phase_objects, nbhd_objects;
    std::string wall_w = "1", wall_y = "0";
    std::string side_W, side_WB, side_Womega, side_Wtranslate = "id", side_WgluedA1;
    std::string nbhd_Z, nbhd_W, nbhd_s;
    std::string scan_path, scan_csv;

    auto* cmd_charge = app.add_subcommand("charge", "central charge of objects under a descriptor");
    add_descriptor_flags(cmd_charge, charge_d, true);
    cmd_charge->add_option("--object", charge_objects, "object expression, e.g. \"O_f(-C0)[1]\"")->required();

    auto* cmd_phase = app.add_subcommand("phase", "glued-slicing phase of single-factor catalog objects");
    add_descriptor_flags(cmd_phase, phase_d, false);
    cmd_phase->add_option("--object", phase_objects, "object expression")->required();

    auto* cmd_per = app.add_subcommand("perversity", "exact gluing perversity comparison against 1");
    add_descriptor_flags(cmd_per, per_d, false);

    auto* cmd_classify = app.add_subcommand("classify", "skyscraper-sheaf stability classification");
    add_descriptor_flags(cmd_classify, classify_d, true);

    auto* cmd_wall = app.add_subcommand("wall-witness",
                                        "solve M^{-1} exp(B+i*omega) = pr1(Z_gl) for a perversity-1 gluing");
    add_descriptor_flags(cmd_wall, wall_d, false);
    cmd_wall->add_option("--w", wall_w, "free parameter w > 0 (omega = w*f), default 1");
    cmd_wall->add_option("--y", wall_y, "free parameter y (B = C0/(a-1) + y*f), default 0");

    auto* cmd_side = app.add_subcommand("deform-side", "which side of the wall a perturbed charge W points to");
    add_descriptor_flags(cmd_side, side_d, false);
    cmd_side->add_option("--W", side_W, "perturbed charge vector \"re,im;re,im;re,im;re,im\"");
    cmd_side->add_option("--W-B", side_WB, "build W from divisorial data: B divisor");
    cmd_side->add_option("--W-omega", side_Womega, "build W from divisorial data: omega divisor");
    cmd_side->add_option("--W-translate", side_Wtranslate, "build W from divisorial data: translate");
    cmd_side->add_option("--W-glued-A1", side_WgluedA1, "build W as pr1 of the glued descriptor with this A1");

    auto* cmd_nbhd = app.add_subcommand("neighborhood", "exact |W - Z| < s|Z| screen over a class list");
    cmd_nbhd->add_option("--Z", nbhd_Z, "base charge vector \"re,im;...\"")->required();
    cmd_nbhd->add_option("--W", nbhd_W, "perturbed charge vector")->required();
    cmd_nbhd->add_option("--s", nbhd_s, "bound s in (0,1), standing in for sin(pi*eps)")->required();
    cmd_nbhd->add_option("--object", nbhd_objects, "object expressions (default: the built-in catalog)");

    auto* cmd_catalog = app.add_subcommand("catalog", "dump the built-in object catalog");

    auto* cmd_scan = app.add_subcommand("scan", "walk a descriptor path; log skyscraper verdict changes");
    cmd_scan->add_option("--path", scan_path, "JSON file with an array of descriptors ('-' for stdin)")->required();
    cmd_scan->add_option("--csv", scan_csv, "also write an index,verdict CSV log");

    auto* cmd_verify = app.add_subcommand("verify",
                                          "run the exact invariant suite (duality grid, semiorthogonality, "
                                          "boundary round-trips); --e is ignored, the suite fixes its own grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? 0 : 1;
    }

    try {
        SurfaceData S(genus, e);

        if (cmd_charge->parsed()) {
            StabilityDescriptor d = build_descriptor(charge_d);
            Json arr = Json::array();
            std::string text;
            for (const std::string& expr : charge_objects) {
                NumClass c = chern_of(S, parse_object(expr));
                GaussQ z = std::holds_alternative<DivisorialDescriptor>(d)
                               ? charge_divisorial(S, std::get<DivisorialDescriptor>(d), c)
                               : charge_glued(S, std::get<GluedDescriptor>(d), c);
                arr.push_back(gauss_str(z));
                text += expr + ": " + gauss_str(z) + "\n";
            }
            emit(arr.size() == 1 ? arr[0] : arr, output, text);
            return 0;
        }

        if (cmd_phase->parsed()) {
            GluedDescriptor gd = build_glued(phase_d);
            Json arr = Json::array();
            std::string text;
            for (const std::string& expr : phase_objects) {
                CatalogEntry entry = make_entry(S, parse_object(expr));
                auto p = glued_phase(gd, entry);
                Json row{{"object", print_object(entry.spec)}, {"component", component_name(entry.component)}};
                if (p) {
                    row["phase"] = phasepoint_json(*p);
                    text += expr + ": " + phase_text(*p) + "\n";
                } else {
                    row["phase"] = "mixed";
                    text += expr + ": mixed (phase needs HN data; see classify)\n";
                }
                arr.push_back(row);
            }
            emit(arr, output, text);
            return 0;
        }

        if (cmd_per->parsed()) {
            GluedDescriptor gd = build_glued(per_d);
            PerversityComparison p = perversity(gd);
            Json pj = perversity_json(p);
            attach_caveats(pj, S);
            emit(pj, output,
                 per_tag_name(p.tag) + ": f1(0) = " + phase_text(p.f1_at_zero) + ", f2(0) = " +
                     phase_text(p.f2_at_zero) + ", stability: " + (p.at_least_one() ? "yes" : "no") + "\n");
            return 0;
        }

        if (cmd_classify->parsed()) {
            StabilityDescriptor d = build_descriptor(classify_d);
            SkyscraperVerdict v = classify_skyscraper(S, d);
            Json j = sky_verdict_json(v);
            if (const auto* div = std::get_if<DivisorialDescriptor>(&d)) {
                ValidationReport rep = validate_divisorial(S, *div);
                if (!rep.caveats.empty()) j["caveats"] = rep.caveats;
            } else {
                attach_caveats(j, S);
            }
            std::string text = sky_verdict_name(v.kind) + " moduli=" + v.moduli_label;
            if (v.destabilizer) text += " destabilizer=" + print_object(*v.destabilizer);
            emit(j, output, text + "\n");
            return 0;
        }

        if (cmd_wall->parsed()) {
            GluedDescriptor gd = build_glued(wall_d);
            BoundaryResult res = boundary_solve_params(S, gd, rat_parse(wall_w), rat_parse(wall_y));
            Json j = boundary_result_json(res);
            attach_caveats(j, S);
            if (const auto* w = std::get_if<BoundaryWitness>(&res)) {
                emit(j, output,
                     "witness: M_inv = [[" + rat_str(w->M_inv.a) + ", " + rat_str(w->M_inv.b) + "], [" +
                         rat_str(w->M_inv.c) + ", " + rat_str(w->M_inv.d) + "]], B = " + w->B.str() +
                         ", omega = " + w->omega.str() + " (boundary-degenerate: omega^2 = 0)\n");
                return 0;
            }
            const auto& ref = std::get<BoundaryRefusal>(res);
            emit(j, output,
                 "refusal: " + certificate_name(ref.certificate) + " (b = " + rat_str(ref.b) +
                     ", (1/2)*a*e = " + rat_str(ref.half_ae) + ")\n");
            return 2;
        }

        if (cmd_side->parsed()) {
            GluedDescriptor gd = build_glued(side_d);
            int sources = (!side_W.empty()) + (!side_WB.empty() || !side_Womega.empty()) + (!side_WgluedA1.empty());
            if (sources != 1)
                throw DomainError("deform-side needs exactly one W source: --W, --W-B/--W-omega, or --W-glued-A1");
            ComplexClass W;
            if (!side_W.empty()) {
                W = parse_complex_text(side_W);
            } else if (!side_WgluedA1.empty()) {
                W = pr1_glued(S, GluedDescriptor{parse_lifted_text(side_WgluedA1), LiftedGL::identity()});
            } else {
                if (side_WB.empty() || side_Womega.empty())
                    throw DomainError("divisorial W needs both --W-B and --W-omega");
                DivisorialDescriptor wd{parse_divisor_text(side_WB), parse_divisor_text(side_Womega),
                                        parse_lifted_text(side_Wtranslate)};
                W = pr1_divisorial(S, wd);
            }
            SideResult res = deform_side(S, gd, W);
            Json j = side_result_json(res);
            attach_caveats(j, S);
            if (const auto* v = std::get_if<SideVerdict>(&res)) {
                emit(j, output,
                     side_name(v->side) + ": psi(O_f) = " + phase_text(v->psi_Of) + ", psi(O_f(-C0)[1]) = " +
                         phase_text(v->psi_OfC0s1) + "\n");
                return 0;
            }
            const auto& ref = std::get<SideRefusal>(res);
            emit(j, output, "refusal: " + ref.certificate + " (object " + ref.object_expr + ")\n");
            return 2;
        }

        if (cmd_nbhd->parsed()) {
            std::vector<NumClass> classes;
            if (nbhd_objects.empty()) {
                for (const CatalogEntry& entry : build_catalog(S)) classes.push_back(entry.ch);
            } else {
                for (const std::string& expr : nbhd_objects) classes.push_back(chern_of(S, parse_object(expr)));
            }
            NeighborhoodReport rep = neighborhood_check(S, parse_complex_text(nbhd_Z), parse_complex_text(nbhd_W),
                                                        rat_parse(nbhd_s), classes);
            std::string text;
            for (const auto& row : rep.rows)
                text += row.cls.str() + ": " + (row.pass ? "pass" : "FAIL") + " ratio^2 = " + rat_str(row.ratio2) + "\n";
            text += std::string("max ratio^2 = ") + rat_str(rep.max_ratio2) +
                    (rep.all_pass ? " (all pass)\n" : " (violations present)\n");
            emit(neighborhood_json(rep), output, text);
            return 0;
        }

        if (cmd_catalog->parsed()) {
            Json arr = Json::array();
            std::string text;
            for (const CatalogEntry& entry : build_catalog(S)) {
                arr.push_back(catalog_entry_json(entry));
                text += print_object(entry.spec) + ": ch = " + entry.ch.str() +
                        ", component = " + component_name(entry.component) + "\n";
            }
            emit(arr, output, text);
            return 0;
        }

        if (cmd_scan->parsed()) {
            std::string raw;
            if (scan_path == "-") {
                std::ostringstream buf;
                buf << std::cin.rdbuf();
                raw = buf.str();
            } else {
                std::ifstream in(scan_path);
                if (!in) throw DomainError("cannot open path file \"" + scan_path + "\"");
                std::ostringstream buf;
                buf << in.rdbuf();
                raw = buf.str();
            }
            Json path;
            try {
                path = Json::parse(raw);
            } catch (const nlohmann::json::parse_error& perr) {
                throw DomainError(std::string("path file is not valid JSON: ") + perr.what());
            }
            if (!path.is_array()) throw DomainError("path file must hold a JSON array of descriptors");
            std::vector<std::string> verdicts;
            for (const Json& dj : path) {
                try {
                    verdicts.push_back(sky_verdict_name(classify_skyscraper(S, descriptor_from_json(dj)).kind));
                } catch (const DomainError&) {
                    verdicts.push_back("invalid");
                }
            }
            Json events = Json::array();
            std::string text;
            for (std::size_t i = 1; i < verdicts.size(); ++i) {
                if (verdicts[i] != verdicts[i - 1]) {
                    events.push_back(Json{{"index", i}, {"from", verdicts[i - 1]}, {"to", verdicts[i]}});
                    text += "index " + std::to_string(i) + ": " + verdicts[i - 1] + " -> " + verdicts[i] + "\n";
                }
            }
            if (!scan_csv.empty()) {
                std::ofstream csv(scan_csv);
                if (!csv) throw DomainError("cannot open CSV output \"" + scan_csv + "\"");
                csv << "index,verdict\n";
                for (std::size_t i = 0; i < verdicts.size(); ++i) csv << i << "," << verdicts[i] << "\n";
            }
            emit(Json{{"verdicts", verdicts}, {"events", events}}, output,
                 text.empty() ? "no verdict changes along the path\n" : text);
            return 0;
        }

        if (cmd_verify->parsed()) {
            std::vector<CheckResult> results = run_verify(genus);
            bool all = true;
            Json arr = Json::array();
            std::string text;
            for (const CheckResult& r : results) {
                all = all && r.pass;
                arr.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                text += std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.name + " — " + r.detail + "\n";
            }
            emit(arr, output, text);
            return all ? 0 : 1;
        }

        throw DomainError("no subcommand dispatched");
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const DomainError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
}
