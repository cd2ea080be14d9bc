#include "stab/serialize.hpp"

namespace stab {

namespace {

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw DomainError(std::string("descriptor JSON is missing field \"") + key + "\"");
    return *it;
}

}  // namespace

Json rat_json(const Rat& q) { return rat_str(q); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (!j.is_string()) throw DomainError("expected a rational as a \"p/q\" string");
    return rat_parse(j.get<std::string>());
}

Json gauss_json(const GaussQ& z) { return Json{{"re", rat_json(z.re)}, {"im", rat_json(z.im)}}; }

GaussQ gauss_from_json(const Json& j) {
    return {rat_from_json(field(j, "re")), rat_from_json(field(j, "im"))};
}

Json divisor_json(const DivisorClass& d) { return Json::array({rat_json(d.c0), rat_json(d.f)}); }

DivisorClass divisor_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw DomainError("divisor JSON must be a [c0, f] pair");
    return {rat_from_json(j[0]), rat_from_json(j[1])};
}

Json numclass_json(const NumClass& c) {
    return Json{{"r", rat_json(c.r)}, {"c1", divisor_json(c.c1)}, {"ch2", rat_json(c.ch2)}};
}

NumClass numclass_from_json(const Json& j) {
    return {rat_from_json(field(j, "r")), divisor_from_json(field(j, "c1")), rat_from_json(field(j, "ch2"))};
}

Json complexclass_json(const ComplexClass& c) {
    return Json{{"r", gauss_json(c.r)},
                {"c1_c0", gauss_json(c.c1_c0)},
                {"c1_f", gauss_json(c.c1_f)},
                {"s", gauss_json(c.s)}};
}

ComplexClass complexclass_from_json(const Json& j) {
    return {gauss_from_json(field(j, "r")), gauss_from_json(field(j, "c1_c0")),
            gauss_from_json(field(j, "c1_f")), gauss_from_json(field(j, "s"))};
}

Json curveclass_json(const CurveClass& c) {
    return Json{{"rank", rat_json(c.rank)}, {"deg", rat_json(c.deg)}};
}

Json mat2_json(const Mat2& m) {
    return Json::array({Json::array({rat_json(m.a), rat_json(m.b)}),
                        Json::array({rat_json(m.c), rat_json(m.d)})});
}

Mat2 mat2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
        j[1].size() != 2)
        throw DomainError("matrix JSON must be [[a, b], [c, d]]");
    return {rat_from_json(j[0][0]), rat_from_json(j[0][1]), rat_from_json(j[1][0]), rat_from_json(j[1][1])};
}

Json liftedgl_json(const LiftedGL& g) { return Json{{"M", mat2_json(g.M)}, {"n", g.n}}; }

LiftedGL liftedgl_from_json(const Json& j) {
    const Json& n = field(j, "n");
    if (!n.is_number_integer()) throw DomainError("lift shift \"n\" must be a JSON integer");
    return LiftedGL::make(mat2_from_json(field(j, "M")), n.get<long long>());
}

Json phasepoint_json(const PhasePoint& p) {
    return Json{{"direction", Json::array({p.vx.str(), p.vy.str()})},
                {"winding", p.m},
                {"approx", p.approx()}};
}

Json descriptor_json(const StabilityDescriptor& d) {
    if (const auto* div = std::get_if<DivisorialDescriptor>(&d)) {
        return Json{{"type", "divisorial"},
                    {"B", divisor_json(div->B)},
                    {"omega", divisor_json(div->omega)},
                    {"translate", liftedgl_json(div->translate)}};
    }
    const auto& gd = std::get<GluedDescriptor>(d);
    return Json{{"type", "glued"}, {"A1", liftedgl_json(gd.A1)}, {"A2", liftedgl_json(gd.A2)}};
}

StabilityDescriptor descriptor_from_json(const Json& j) {
    const Json& type = field(j, "type");
    if (type == "divisorial") {
        DivisorialDescriptor d;
        d.B = divisor_from_json(field(j, "B"));
        d.omega = divisor_from_json(field(j, "omega"));
        if (j.contains("translate")) d.translate = liftedgl_from_json(j["translate"]);
        return d;
    }
    if (type == "glued") {
        return GluedDescriptor{liftedgl_from_json(field(j, "A1")), liftedgl_from_json(field(j, "A2"))};
    }
    throw DomainError("descriptor \"type\" must be \"divisorial\" or \"glued\"");
}

Json perversity_json(const PerversityComparison& p) {
    return Json{{"verdict", per_tag_name(p.tag)},
                {"f1_at_0", phasepoint_json(p.f1_at_zero)},
                {"f2_at_0", phasepoint_json(p.f2_at_zero)},
                {"is_stability", p.at_least_one()}};
}

Json sky_verdict_json(const SkyscraperVerdict& v) {
    Json j{{"verdict", sky_verdict_name(v.kind)}, {"moduli", v.moduli_label}};
    if (v.destabilizer) j["destabilizer"] = print_object(*v.destabilizer);
    return j;
}

Json boundary_result_json(const BoundaryResult& r) {
    if (const auto* w = std::get_if<BoundaryWitness>(&r)) {
        return Json{{"witness",
                     Json{{"M_inv", mat2_json(w->M_inv)},
                          {"B", divisor_json(w->B)},
                          {"B_text", w->B.str()},
                          {"omega", divisor_json(w->omega)},
                          {"omega_text", w->omega.str()},
                          {"free_params", Json{{"w", rat_json(w->w)}, {"y", rat_json(w->y)}}},
                          {"note", "boundary-degenerate polarization: omega^2 = 0"},
                          {"verified", true}}}};
    }
    const auto& ref = std::get<BoundaryRefusal>(r);
    return Json{{"refusal",
                 Json{{"certificate", certificate_name(ref.certificate)},
                      {"b", rat_json(ref.b)},
                      {"half_ae", rat_json(ref.half_ae)}}}};
}

Json side_result_json(const SideResult& r) {
    if (const auto* v = std::get_if<SideVerdict>(&r)) {
        return Json{{"side", side_name(v->side)},
                    {"psi_O_f", phasepoint_json(v->psi_Of)},
                    {"psi_O_f(-C0)[1]", phasepoint_json(v->psi_OfC0s1)}};
    }
    const auto& ref = std::get<SideRefusal>(r);
    return Json{{"refusal", Json{{"certificate", ref.certificate}, {"object", ref.object_expr}}}};
}

Json neighborhood_json(const NeighborhoodReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"class", numclass_json(row.cls)}, {"pass", row.pass}, {"ratio2", rat_json(row.ratio2)}});
    }
    return Json{{"rows", rows}, {"max_ratio2", rat_json(r.max_ratio2)}, {"all_pass", r.all_pass}};
}

Json catalog_entry_json(const CatalogEntry& e) {
    Json j{{"object", print_object(e.spec)},
           {"ch", numclass_json(e.ch)},
           {"component", component_name(e.component)}};
    if (e.factor_class) j["factor_class"] = curveclass_json(*e.factor_class);
    if (e.factor_standard_phase) j["standard_phase"] = phasepoint_json(*e.factor_standard_phase);
    return j;
}

Json validation_json(const ValidationReport& r) {
    Json j{{"ok", r.ok}};
    if (!r.ok) j["error"] = r.error;
    j["caveats"] = r.caveats;
    return j;
}

}  // namespace stab
