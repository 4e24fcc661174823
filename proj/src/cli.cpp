#include "qht/cli.hpp"

#include "qht/acceptance.hpp"
#include "qht/catalog.hpp"
#include "qht/decompose.hpp"
#include "qht/filtered.hpp"
#include "qht/gelfand_cetlin.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>

namespace qht {

Json to_json(const CommandResult& r) {
    return {{"status", r.ok ? "ok" : "error"},
            {"code", r.code},
            {"message", r.message},
            {"payload", r.payload},
            {"provenance", r.provenance}};
}

namespace {

constexpr const char* kVersion = "0.1.0";

struct Globals {
    int m = kDefaultCyclotomicOrder;
    std::string precision = "10";
    std::string catalog;

    CatalogOptions catalog_options() const {
        CatalogOptions o;
        o.m = m;
        if (!catalog.empty()) o.directory = std::filesystem::path(catalog);
        return o;
    }
};

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::SchemaError, "cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::SchemaError, "invalid JSON in '" + path.string() + "': " + e.what());
    }
}

bool is_file(const std::string& path) {
    std::error_code ec;
    return std::filesystem::is_regular_file(path, ec);
}

// A file path, or inline JSON text.
Json json_argument(const std::string& arg) {
    if (is_file(arg)) return read_json_file(arg);
    try {
        return Json::parse(arg);
    } catch (const Json::parse_error&) {
        fail(ErrorCode::SchemaError, "'" + arg + "' is neither a readable file nor JSON");
    }
}

std::vector<Rational> rational_list(const std::vector<std::string>& tokens) {
    std::vector<Rational> out;
    for (const auto& t : tokens) {
        std::size_t pos = 0;
        while (pos <= t.size()) {
            auto comma = t.find(',', pos);
            auto piece = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!piece.empty()) out.push_back(parse_rational(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return out;
}

Json rational_array(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

FlagSpec flag_argument(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') {
        Json j = json_argument(arg);
        FlagSpec f{j.at("n").get<int>(), j.at("steps").get<std::vector<int>>()};
        validate(f);
        return f;
    }
    return parse_flag(arg);
}

Json flag_json(const FlagSpec& f) { return {{"n", f.n}, {"steps", f.steps}, {"name", f.to_string()}}; }

Json polytope_json(const GCPolytope& d) {
    Json ineqs = Json::array();
    for (const auto& q : d.inequalities) ineqs.push_back({{"coeffs", rational_array(q.coeffs)}, {"rhs", to_json(q.rhs)}});
    return {{"coords", d.coords}, {"ineqs", ineqs}};
}

struct GcArgs {
    std::string flag;
    std::optional<std::string> monotone;
    std::vector<std::string> lambda;
};

std::vector<Rational> resolve_lambda(const GcArgs& a, const FlagSpec& f) {
    if (!a.lambda.empty()) {
        if (a.monotone) fail(ErrorCode::SchemaError, "--monotone and --lambda are exclusive");
        return rational_list(a.lambda);
    }
    if (a.monotone) return monotone_lambda(f, parse_rational(*a.monotone));
    return monotone_lambda(f);
}

Json decomposition_json(const QuantumAlgebra& a, const IdempotentDecomposition& d) {
    const std::string var = a.field().variable();
    Json idem = Json::array(), roots = Json::array();
    for (const auto& e : d.idempotents) idem.push_back(to_json(a, e));
    for (const auto& r : d.roots) roots.push_back({{"value", to_json(r)}, {"text", r.to_string(var)}});
    return {{"ring", a.name()},
            {"coefficients", to_json(a.field())},
            {"generator", to_json(a, d.generator)},
            {"minimal_polynomial", to_json(d.minimal_polynomial, var)},
            {"roots", roots},
            {"root_groups", d.root_groups},
            {"idempotents", idem},
            {"factor_dims", d.factor_dims},
            {"count", d.idempotents.size()},
            {"exact", d.exact},
            {"verified", d.exact && verify_decomposition(a, d)}};
}

// A file, inline JSON, or an expression over orbit ids.
Json class_argument(const std::string& arg) {
    if (is_file(arg)) return read_json_file(arg);
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json_argument(arg);
    return Json(arg);
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    Globals g;
    CLI::App app{"Exact quantum cohomology, Novikov arithmetic, filtered complexes and Gelfand-Cetlin polytopes", "qht"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--m", g.m, "cyclotomic order of the coefficient field");
    app.add_option("--precision", g.precision, "relative precision for truncated series (p/q)");
    app.add_option("--catalog", g.catalog, "directory of ring-spec JSON files");

    auto* ring = app.add_subcommand("ring", "quantum cohomology rings")->require_subcommand(1);
    std::string spec, spec_b;
    std::optional<std::string> generator;
    auto* r_decompose = ring->add_subcommand("decompose", "idempotent decomposition");
    r_decompose->add_option("spec", spec)->required();
    r_decompose->add_option("--generator", generator, "generating element");
    auto* r_verify = ring->add_subcommand("verify", "structural validation");
    r_verify->add_option("spec", spec)->required();
    auto* r_extend = ring->add_subcommand("extend", "coefficient extension to the Novikov field");
    r_extend->add_option("spec", spec)->required();
    auto* r_product = ring->add_subcommand("product", "Kunneth product");
    r_product->add_option("specA", spec)->required();
    r_product->add_option("specB", spec_b)->required();

    auto* spectral = app.add_subcommand("spectral", "filtered complexes")->require_subcommand(1);
    std::string complex_arg, class_arg;
    std::size_t seeds = 100, size_bound = kMaxRandomComplexSize;
    auto* s_rho = spectral->add_subcommand("rho", "spectral invariant of a class");
    s_rho->add_option("complex", complex_arg)->required();
    s_rho->add_option("class", class_arg)->required();
    auto* s_extend = spectral->add_subcommand("extend", "scalar extension to the downward Novikov field");
    s_extend->add_option("complex", complex_arg)->required();
    auto* s_suite = spectral->add_subcommand("suite", "extension invariance over random complexes");
    s_suite->add_option("--seeds", seeds);
    s_suite->add_option("--size", size_bound);

    auto* gc = app.add_subcommand("gc", "Gelfand-Cetlin polytopes")->require_subcommand(1);
    GcArgs gca;
    std::vector<std::string> point;
    auto add_lambda_options = [&](CLI::App* sub) {
        sub->add_option("flag", gca.flag)->required();
        sub->add_option("--monotone", gca.monotone, "monotone lambda with shift m");
        sub->add_option("--lambda", gca.lambda, "explicit lambda entries");
    };
    auto* g_polytope = gc->add_subcommand("polytope", "pattern and H-representation");
    add_lambda_options(g_polytope);
    auto* g_classify = gc->add_subcommand("classify", "interior / boundary / outside");
    add_lambda_options(g_classify);
    g_classify->add_option("u", point)->required();
    auto* g_vertices = gc->add_subcommand("vertices", "vertex enumeration");
    add_lambda_options(g_vertices);

    auto* suite = app.add_subcommand("suite", "acceptance suite")->require_subcommand(1);
    auto* suite_all = suite->add_subcommand("all", "run every acceptance criterion");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.payload = {{"help", app.help()}};
        return result;
    } catch (const CLI::ParseError& e) {
        result.ok = false;
        result.code = std::string(to_string(ErrorCode::UnknownCommand));
        result.message = e.what();
        return result;
    }

    std::string command;
    for (const auto* sub : app.get_subcommands()) {
        command = sub->get_name();
        for (const auto* leaf : sub->get_subcommands()) command += " " + leaf->get_name();
    }
    result.provenance = {{"command", command}, {"m", g.m}, {"precision", g.precision}, {"version", kVersion}};
    if (!g.catalog.empty()) result.provenance["catalog"] = g.catalog;

    try {
        const Rational precision = parse_rational(g.precision);
        if (precision <= 0) fail(ErrorCode::SchemaError, "--precision must be positive");
        const CatalogOptions options = g.catalog_options();

        if (*r_decompose) {
            auto a = load_ring(spec, options);
            Element x = generator ? parse_element(a, *generator) : default_generator(a);
            DecomposeOptions d_opts;
            d_opts.precision = precision;
            result.payload = decomposition_json(a, decompose(a, x, d_opts));
            result.provenance["m"] = a.field().m;
        } else if (*r_verify) {
            auto a = load_ring(spec, options);
            validate(a);
            result.payload = {{"ring", a.name()},
                              {"valid", true},
                              {"dim", a.dim()},
                              {"relations_checked", a.relations.size()},
                              {"coefficients", to_json(a.field())}};
            result.provenance["m"] = a.field().m;
        } else if (*r_extend) {
            auto a = load_ring(spec, options);
            result.payload = algebra_to_json(extend_ring(a));
            result.provenance["m"] = a.field().m;
        } else if (*r_product) {
            auto a = load_ring(spec, options);
            auto b = load_ring(spec_b, options);
            auto p = product_ring(a, b);
            validate(p);
            result.payload = algebra_to_json(p);
            result.provenance["m"] = p.field().m;
        } else if (*s_rho) {
            auto c = complex_from_json(json_argument(complex_arg));
            Chain z = chain_from_json(class_argument(class_arg), c);
            result.payload = {{"rho", to_json(rho(c, z))},
                              {"nice", c.nice()},
                              {"class", chain_to_json(c, z)},
                              {"coefficients", to_json(c.field())}};
        } else if (*s_extend) {
            auto c = complex_from_json(json_argument(complex_arg));
            result.payload = to_json(extend_scalars_complex(c));
        } else if (*s_suite) {
            auto report = run_extension_suite(seeds, size_bound);
            result.payload = {{"extension_invariance", std::to_string(report.exact_instances) + "/" +
                                                           std::to_string(report.seeds) + " exact"},
                              {"classes_checked", report.classes_checked},
                              {"failures", report.failures}};
            if (!report.failures.empty()) {
                result.ok = false;
                result.code = std::string(to_string(ErrorCode::InexactResult));
                result.message = report.failures.front();
            }
        } else if (*g_polytope || *g_classify || *g_vertices) {
            const FlagSpec f = flag_argument(gca.flag);
            const auto lambda = resolve_lambda(gca, f);
            const auto pattern = gc_pattern(f, lambda);
            const auto d = gc_polytope(pattern);
            if (*g_polytope) {
                Json entries = Json::array();
                for (const auto& e : pattern.entries) {
                    Json j = {{"name", e.name()}, {"row", e.row}, {"col", e.col}, {"constant", e.is_constant()}};
                    if (e.is_constant()) j["value"] = to_json(e.lower);
                    else j["interval"] = Json::array({to_json(e.lower), to_json(e.upper)});
                    entries.push_back(std::move(j));
                }
                result.payload = {{"flag", flag_json(f)},         {"flag_dim", flag_dim(f)},
                                  {"lambda", rational_array(lambda)}, {"pattern", entries},
                                  {"index_set_size", pattern.index_set.size()}, {"polytope", polytope_json(d)}};
            } else if (*g_classify) {
                auto c = classify_point(d, rational_list(point));
                result.payload = {{"class", std::string(to_string(c.kind))}, {"coords", d.coords}};
                if (c.kind == PointClass::Boundary) result.payload["tight"] = c.inequalities;
                if (c.kind == PointClass::Outside) result.payload["violated"] = c.inequalities;
            } else {
                Json verts = Json::array();
                for (const auto& v : vertices(d)) verts.push_back(rational_array(v));
                result.payload = {{"flag", flag_json(f)}, {"coords", d.coords}, {"vertices", verts}, {"count", verts.size()}};
            }
        } else if (*suite_all) {
            Json criteria = Json::array();
            std::size_t passed = 0;
            for (const auto& r : run_acceptance(options)) {
                Json j = {{"id", r.id},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"detail", r.detail},
                          {"milliseconds", static_cast<long>(r.seconds * 1000)}};
                if (r.budget_seconds) j["budget_milliseconds"] = static_cast<long>(*r.budget_seconds * 1000);
                criteria.push_back(std::move(j));
                if (r.passed) ++passed;
            }
            result.payload = {{"criteria", criteria}, {"passed", passed}, {"total", criteria.size()}};
            if (passed != criteria.size()) {
                result.ok = false;
                result.code = std::string(to_string(ErrorCode::InexactResult));
                result.message = "some acceptance criteria failed";
            }
        }
    } catch (const Error& e) {
        result.ok = false;
        result.code = std::string(to_string(e.code()));
        result.message = e.what();
        result.payload = Json::object();
    } catch (const Json::exception& e) {
        result.ok = false;
        result.code = std::string(to_string(ErrorCode::SchemaError));
        result.message = e.what();
        result.payload = Json::object();
    }
    return result;
}

}  // namespace qht
