#include "qht/json_io.hpp"

namespace qht {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const CycRat& x) {
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
    return {{"m", x.order()}, {"coeffs", coeffs}};
}

Json to_json(const Novikov& x) {
    Json terms = Json::array();
    auto emit = [&](const Rational& e, const CycRat& c) { terms.push_back(Json::array({to_string(e), to_json(c)})); };
    if (x.direction() == Direction::up) {
        for (const auto& [e, c] : x.terms()) emit(e, c);
    } else {
        for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) emit(it->first, it->second);
    }
    Json trunc = x.truncation() ? Json(to_string(*x.truncation())) : Json(nullptr);
    return {{"direction", std::string(to_string(x.direction()))}, {"terms", terms}, {"trunc", trunc}};
}

Json to_json(const QuantumAlgebra& a, const Element& x) {
    Json components = Json::array();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        components.push_back({{"basis", a.basis()[i].name}, {"scalar", to_json(x[i])}});
    }
    return {{"components", components}, {"text", to_string(a, x)}};
}

Json to_json(const Polynomial& p, std::string_view variable) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs) {
        if (c.is_finite_sum()) coeffs.push_back(to_json(c.numerator()));
        else coeffs.push_back({{"numerator", to_json(c.numerator())}, {"denominator", to_json(c.denominator())}});
    }
    return {{"coeffs", coeffs}, {"text", p.to_string(variable)}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail(ErrorCode::SchemaError, "expected a rational string \"p/q\", got " + j.dump());
}

CycRat cycrat_from_json(const Json& j, int m) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs")) {
        fail(ErrorCode::SchemaError, "cyclotomic coefficient must be {\"m\", \"coeffs\"}: " + j.dump());
    }
    const int own = j.at("m").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    const auto& field = CyclotomicField::get(own);
    if (static_cast<int>(coeffs.size()) != field.degree()) {
        fail(ErrorCode::SchemaError, "Q(zeta_" + std::to_string(own) + ") elements need " + std::to_string(field.degree()) + " coefficients");
    }
    CycRat x = CycRat::from_polynomial(own, std::move(coeffs));
    return own == m ? x : x.lift(m);
}

Novikov scalar_from_json(const Json& j, const CoefficientField& field) {
    if (j.is_string()) return parse_scalar(field, j.get<std::string>());
    if (j.is_number_integer()) return field.monomial(Rational(j.get<long>()), Rational(0));
    if (!j.is_object() || !j.contains("terms")) fail(ErrorCode::SchemaError, "malformed scalar: " + j.dump());
    Direction dir = field.direction();
    if (j.contains("direction")) {
        auto d = j.at("direction").get<std::string>();
        if (d != "up" && d != "down") fail(ErrorCode::SchemaError, "direction must be \"up\" or \"down\"");
        if ((d == "up") != (dir == Direction::up)) fail(ErrorCode::MixedDirections, "scalar direction does not match the field");
    }
    Novikov x(dir, field.m);
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) fail(ErrorCode::SchemaError, "scalar term must be [exp, coefficient]");
        x.add_term(rational_from_json(t[0]), cycrat_from_json(t[1], field.m));
    }
    if (j.contains("trunc") && !j.at("trunc").is_null()) x.set_truncation(rational_from_json(j.at("trunc")));
    return x;
}

Element element_from_json(const Json& j, const QuantumAlgebra& a) {
    if (j.is_string()) return parse_element(a, j.get<std::string>());
    const Json& list = j.is_object() && j.contains("components") ? j.at("components") : j;
    if (!list.is_array()) fail(ErrorCode::SchemaError, "element must be an expression or a component list");
    Element x = a.zero();
    for (const auto& c : list) {
        auto name = c.at("basis").get<std::string>();
        auto idx = a.index_of(name);
        if (!idx) fail(ErrorCode::SchemaError, "unknown basis class '" + name + "'");
        x[*idx] += scalar_from_json(c.at("scalar"), a.field());
    }
    return x;
}

Json to_json(const CoefficientField& field) {
    return {{"kind", std::string(to_string(field.kind))},
            {"side", std::string(to_string(field.side))},
            {"lambda0", to_json(field.lambda0)},
            {"chern", field.chern},
            {"m", field.m}};
}

CoefficientField field_from_json(const Json& j) {
    if (!j.is_object()) fail(ErrorCode::SchemaError, "field must be an object");
    CoefficientField f;
    const auto kind = j.value("kind", std::string("laurent"));
    if (kind == "laurent") f.kind = CoefficientKind::laurent;
    else if (kind == "novikov") f.kind = CoefficientKind::novikov;
    else fail(ErrorCode::SchemaError, "unknown coefficient kind '" + kind + "'");
    const auto side = j.value("side", std::string("homology"));
    if (side == "homology") f.side = Side::homology;
    else if (side == "cohomology") f.side = Side::cohomology;
    else fail(ErrorCode::SchemaError, "unknown side '" + side + "'");
    if (j.contains("lambda0")) f.lambda0 = rational_from_json(j.at("lambda0"));
    if (f.lambda0 <= 0) fail(ErrorCode::SchemaError, "lambda0 must be positive");
    f.chern = j.value("chern", j.value("N_M", 1));
    if (f.chern <= 0) fail(ErrorCode::SchemaError, "chern number must be positive");
    f.m = j.value("m", kDefaultCyclotomicOrder);
    return f;
}

Json to_json(const FilteredComplex& c) {
    Json gens = Json::array();
    for (const auto& g : c.generators()) {
        gens.push_back({{"orbit_id", g.orbit_id}, {"action", to_json(g.action)}, {"index", g.index},
                        {"cap_offset", g.cap_offset}});
    }
    Json diff = Json::array();
    for (const auto& e : c.entries()) {
        diff.push_back({{"from", c.generators()[e.from].orbit_id},
                        {"to", c.generators()[e.to].orbit_id},
                        {"scalar", to_json(e.value)},
                        {"text", e.value.to_string(c.field().variable())}});
    }
    return {{"field", to_json(c.field())}, {"generators", gens}, {"differential", diff}, {"nice", c.nice()}};
}

namespace {

std::size_t generator_ref(const Json& j, const std::vector<CappedGenerator>& gens) {
    if (j.is_number_unsigned()) {
        auto i = j.get<std::size_t>();
        if (i >= gens.size()) fail(ErrorCode::SchemaError, "generator index out of range");
        return i;
    }
    if (!j.is_string()) fail(ErrorCode::SchemaError, "generator reference must be an orbit id or an index");
    const auto id = j.get<std::string>();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].orbit_id == id) return i;
    }
    fail(ErrorCode::SchemaError, "unknown generator '" + id + "'");
}

}  // namespace

FilteredComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators")) fail(ErrorCode::SchemaError, "complex needs a generator list");
    const CoefficientField field = field_from_json(j.value("field", Json::object()));
    std::vector<CappedGenerator> gens;
    for (const auto& g : j.at("generators")) {
        CappedGenerator cg;
        cg.orbit_id = g.at("orbit_id").get<std::string>();
        cg.action = rational_from_json(g.at("action"));
        cg.index = g.at("index").get<int>();
        cg.cap_offset = g.value("cap_offset", 0L);
        gens.push_back(std::move(cg));
    }
    std::vector<DifferentialEntry> entries;
    for (const auto& e : j.value("differential", Json::array())) {
        entries.push_back({generator_ref(e.at("from"), gens), generator_ref(e.at("to"), gens),
                           scalar_from_json(e.at("scalar"), field)});
    }
    return build_complex(std::move(gens), entries, field);
}

Json chain_to_json(const FilteredComplex& c, const Chain& z) {
    Json comps = Json::array();
    std::string text;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i].is_zero()) continue;
        comps.push_back({{"generator", c.generators()[i].orbit_id}, {"scalar", to_json(z[i])}});
        if (!text.empty()) text += " + ";
        text += "(" + z[i].to_string(c.field().variable()) + ")*" + c.generators()[i].orbit_id;
    }
    return {{"components", comps}, {"text", text.empty() ? "0" : text}};
}

Chain chain_from_json(const Json& j, const FilteredComplex& c) {
    if (j.is_string()) {
        auto lookup = [&](std::string_view name) -> std::optional<std::size_t> {
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c.generators()[i].orbit_id == name) return i;
            }
            return std::nullopt;
        };
        return parse_combination(c.field(), lookup, c.size(), std::nullopt, j.get<std::string>());
    }
    const Json& list = j.is_object() && j.contains("components") ? j.at("components") : j;
    if (!list.is_array()) fail(ErrorCode::SchemaError, "chain must be an expression or a component list");
    Chain z = c.zero_chain();
    for (const auto& comp : list) {
        z[generator_ref(comp.at("generator"), c.generators())] += scalar_from_json(comp.at("scalar"), c.field());
    }
    return z;
}

}  // namespace qht
