#include "qht/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace qht {

namespace detail {
const std::map<std::string, std::string_view>& embedded_rings();
}

namespace {

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::SchemaError, "cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail(ErrorCode::SchemaError, "invalid JSON in '" + path.string() + "': " + e.what());
    }
}

std::size_t basis_index(const QuantumAlgebra& a, const Json& j) {
    if (j.is_number_integer()) {
        auto i = j.get<long>();
        if (i < 0 || static_cast<std::size_t>(i) >= a.dim()) fail(ErrorCode::SchemaError, "basis index out of range: " + j.dump());
        return static_cast<std::size_t>(i);
    }
    if (j.is_string()) {
        if (auto i = a.index_of(j.get<std::string>())) return *i;
    }
    fail(ErrorCode::SchemaError, "unknown basis reference " + j.dump());
}

std::vector<PinnedRelation> relations_from_json(const Json& doc, const char* key) {
    std::vector<PinnedRelation> out;
    if (!doc.contains(key)) return out;
    for (const auto& r : doc.at(key)) {
        out.push_back({r.at("factors").get<std::vector<std::string>>(), r.at("equals").get<std::string>()});
    }
    return out;
}

Side parse_side(const std::string& s) {
    if (s == "cohomology") return Side::cohomology;
    if (s == "homology") return Side::homology;
    fail(ErrorCode::SchemaError, "side must be \"cohomology\" or \"homology\"");
}

QuantumAlgebra base_algebra(const Json& doc, int m) {
    for (const char* key : {"name", "side", "dim_M", "lambda0", "N_M", "basis", "constants"}) {
        if (!doc.contains(key)) fail(ErrorCode::SchemaError, std::string("ring spec is missing \"") + key + "\"");
    }
    CoefficientField field;
    field.kind = doc.value("coefficients", std::string("laurent")) == "novikov" ? CoefficientKind::novikov : CoefficientKind::laurent;
    field.side = parse_side(doc.at("side").get<std::string>());
    field.lambda0 = rational_from_json(doc.at("lambda0"));
    field.chern = doc.at("N_M").get<int>();
    field.m = m;
    if (field.lambda0 <= 0 || field.chern <= 0) fail(ErrorCode::SchemaError, "lambda0 and N_M must be positive");

    std::vector<BasisVector> basis;
    for (const auto& b : doc.at("basis")) {
        basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>(), b.value("dual", std::string())});
    }
    QuantumAlgebra a(doc.at("name").get<std::string>(), doc.at("dim_M").get<int>(), field, std::move(basis));
    if (doc.contains("aliases")) {
        for (const auto& [alias, target] : doc.at("aliases").items()) a.add_alias(alias, basis_index(a, target));
    }

    const std::size_t n = a.dim();
    std::vector<bool> listed(n * n, false);
    std::vector<Element> cells(n * n, a.zero());
    for (const auto& c : doc.at("constants")) {
        std::size_t i = basis_index(a, c.at("i")), j = basis_index(a, c.at("j"));
        if (listed[i * n + j]) fail(ErrorCode::SchemaError, "product " + a.basis()[i].name + "*" + a.basis()[j].name + " listed twice");
        listed[i * n + j] = true;
        for (const auto& t : c.at("terms")) cells[i * n + j][basis_index(a, t.at("k"))] += scalar_from_json(t.at("scalar"), field);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // An unlisted product takes its transpose when that is listed.
            const Element& v = !listed[i * n + j] && listed[j * n + i] ? cells[j * n + i] : cells[i * n + j];
            a.set_product(i, j, v);
        }
    }
    if (doc.contains("generator")) a.default_generator = element_from_json(doc.at("generator"), a);
    if (doc.contains("kappa")) a.kappa = rational_from_json(doc.at("kappa"));
    return a;
}

}  // namespace

QuantumAlgebra algebra_from_json(const Json& doc, int m, RingVariant variant) {
    if (doc.contains("cyclotomic_order")) m = std::lcm(m, doc.at("cyclotomic_order").get<int>());
    QuantumAlgebra a = base_algebra(doc, m);
    a.relations = relations_from_json(doc, "checks");
    validate(a);
    if (variant == RingVariant::novikov) {
        a = extend_ring(a);
        a.relations = relations_from_json(doc, "novikov_checks");
        validate(a);
    } else if (variant == RingVariant::homology) {
        a = dual_algebra(a);
        a.relations = relations_from_json(doc, "homology_checks");
        validate(a);
    }
    return a;
}

Json algebra_to_json(const QuantumAlgebra& a) {
    Json basis = Json::array();
    for (const auto& b : a.basis()) basis.push_back({{"name", b.name}, {"degree", b.degree}, {"dual", b.dual}});
    Json constants = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Element& p = a.product(i, j);
            if (is_zero(p)) continue;
            Json terms = Json::array();
            for (std::size_t k = 0; k < a.dim(); ++k) {
                if (!p[k].is_zero()) terms.push_back({{"k", a.basis()[k].name}, {"scalar", to_json(p[k])}});
            }
            constants.push_back({{"i", a.basis()[i].name}, {"j", a.basis()[j].name}, {"terms", terms}});
        }
    }
    const auto& f = a.field();
    Json doc = {{"name", a.name()},
                {"side", std::string(to_string(f.side))},
                {"coefficients", std::string(to_string(f.kind))},
                {"dim_M", a.dim_manifold()},
                {"lambda0", to_string(f.lambda0)},
                {"N_M", f.chern},
                {"cyclotomic_order", f.m},
                {"basis", basis},
                {"constants", constants}};
    if (a.kappa) doc["kappa"] = to_string(*a.kappa);
    return doc;
}

std::vector<std::string> catalog_bases(const CatalogOptions& options) {
    std::vector<std::string> out;
    if (options.directory) {
        for (const auto& entry : std::filesystem::directory_iterator(*options.directory)) {
            if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
        }
    } else {
        for (const auto& [name, text] : detail::embedded_rings()) out.push_back(name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Json catalog_document(const std::string& base, const CatalogOptions& options) {
    if (options.directory) {
        auto path = *options.directory / (base + ".json");
        if (!std::filesystem::exists(path)) fail(ErrorCode::SchemaError, "no catalog entry '" + base + "' in " + options.directory->string());
        return read_json_file(path);
    }
    const auto& rings = detail::embedded_rings();
    auto it = rings.find(base);
    if (it == rings.end()) fail(ErrorCode::SchemaError, "no catalog entry '" + base + "'");
    return Json::parse(it->second);
}

namespace {

struct RingRef {
    std::vector<std::string> factors;
    RingVariant variant = RingVariant::laurent;
};

RingRef parse_ref(const std::string& ref) {
    RingRef out;
    std::string body = ref;
    auto us = body.rfind('_');
    if (us != std::string::npos) {
        std::string suffix = body.substr(us + 1);
        if (suffix == "laurent") out.variant = RingVariant::laurent;
        else if (suffix == "novikov") out.variant = RingVariant::novikov;
        else if (suffix == "homology") out.variant = RingVariant::homology;
        else fail(ErrorCode::SchemaError, "unknown ring variant '" + suffix + "'");
        body = body.substr(0, us);
    }
    std::size_t start = 0;
    while (true) {
        auto x = body.find('x', start);
        out.factors.push_back(body.substr(start, x == std::string::npos ? std::string::npos : x - start));
        if (x == std::string::npos) break;
        start = x + 1;
    }
    return out;
}

bool is_file_ref(const std::string& ref) {
    return ref.find('/') != std::string::npos || (ref.size() > 5 && ref.substr(ref.size() - 5) == ".json");
}

}  // namespace

int effective_order(const std::string& ref, const CatalogOptions& options) {
    int m = options.m;
    if (is_file_ref(ref)) {
        Json doc = read_json_file(ref);
        if (doc.contains("cyclotomic_order")) m = std::lcm(m, doc.at("cyclotomic_order").get<int>());
        return m;
    }
    for (const auto& f : parse_ref(ref).factors) {
        Json doc = catalog_document(f, options);
        if (doc.contains("cyclotomic_order")) m = std::lcm(m, doc.at("cyclotomic_order").get<int>());
    }
    return m;
}

QuantumAlgebra load_ring(const std::string& ref, const CatalogOptions& options) {
    if (is_file_ref(ref)) return algebra_from_json(read_json_file(ref), options.m);
    const RingRef parsed = parse_ref(ref);
    const int m = effective_order(ref, options);
    if (parsed.factors.size() == 1) return algebra_from_json(catalog_document(parsed.factors.front(), options), m, parsed.variant);

    QuantumAlgebra product = algebra_from_json(catalog_document(parsed.factors.front(), options), m);
    for (std::size_t i = 1; i < parsed.factors.size(); ++i) {
        product = product_ring(product, algebra_from_json(catalog_document(parsed.factors[i], options), m));
    }
    validate(product);
    if (parsed.variant == RingVariant::novikov) product = extend_ring(product);
    if (parsed.variant == RingVariant::homology) product = dual_algebra(product);
    validate(product);
    return product;
}

}  // namespace qht
