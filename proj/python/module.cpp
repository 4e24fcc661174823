#include "qht/acceptance.hpp"
#include "qht/catalog.hpp"
#include "qht/cli.hpp"
#include "qht/decompose.hpp"
#include "qht/json_io.hpp"
#include "qht/filtered.hpp"
#include "qht/gelfand_cetlin.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;

namespace {

// Results cross the boundary as JSON text with exact "p/q" strings.

std::string run_json(const std::vector<std::string>& args) { return qht::to_json(qht::run(args)).dump(); }

std::string ring_json(const std::string& ref, int m) {
    qht::CatalogOptions o;
    o.m = m;
    return qht::algebra_to_json(qht::load_ring(ref, o)).dump();
}

std::string decompose_json(const std::string& ref, const std::optional<std::string>& generator, int m) {
    std::vector<std::string> args = {"--m", std::to_string(m), "ring", "decompose", ref};
    if (generator) {
        args.push_back("--generator");
        args.push_back(*generator);
    }
    auto r = qht::run(args);
    if (!r.ok) throw std::runtime_error(r.code + ": " + r.message);
    return r.payload.dump();
}

std::string qmul_text(const std::string& ref, const std::string& x, const std::string& y, int m) {
    qht::CatalogOptions o;
    o.m = m;
    auto a = qht::load_ring(ref, o);
    return qht::to_string(a, qht::qmul(a, qht::parse_element(a, x), qht::parse_element(a, y)));
}

std::string valuation_text(const std::string& ref, const std::string& x, int m) {
    qht::CatalogOptions o;
    o.m = m;
    auto a = qht::load_ring(ref, o);
    return qht::to_string(qht::valuation_qh(a, qht::parse_element(a, x)));
}

std::string rho_text(const std::string& complex_json, const std::string& cls) {
    auto c = qht::complex_from_json(qht::Json::parse(complex_json));
    qht::Json j = (!cls.empty() && (cls.front() == '[' || cls.front() == '{')) ? qht::Json::parse(cls) : qht::Json(cls);
    return qht::to_string(qht::rho(c, qht::chain_from_json(j, c)));
}

std::string random_complex_json(std::uint64_t seed, std::size_t bound) {
    auto rc = qht::random_complex(seed, bound);
    qht::Json classes = qht::Json::array();
    for (const auto& z : rc.classes) classes.push_back(qht::chain_to_json(rc.complex, z));
    return qht::Json{{"complex", qht::to_json(rc.complex)}, {"classes", classes}}.dump();
}

std::vector<std::string> strings(const std::vector<qht::Rational>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(qht::to_string(x));
    return out;
}

std::vector<qht::Rational> rationals(const std::vector<std::string>& v) {
    std::vector<qht::Rational> out;
    for (const auto& x : v) out.push_back(qht::parse_rational(x));
    return out;
}

qht::GCPolytope polytope_for(const std::string& flag, const std::optional<std::vector<std::string>>& lambda) {
    auto f = qht::parse_flag(flag);
    return qht::gc_polytope(qht::gc_pattern(f, lambda ? rationals(*lambda) : qht::monotone_lambda(f)));
}

}  // namespace

PYBIND11_MODULE(_qht, m) {
    m.doc() = "Exact quantum cohomology, Novikov arithmetic, filtered complexes and Gelfand-Cetlin polytopes";

    static py::exception<qht::Error> qht_error(m, "QhtError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const qht::Error& e) {
            py::set_error(qht_error, (std::string(qht::to_string(e.code())) + ": " + e.what()).c_str());
        }
    });

    m.def("run", &run_json, py::arg("args"));
    m.def("catalog", [] { return qht::catalog_bases(); });
    m.def("ring", &ring_json, py::arg("ref"), py::arg("m") = qht::kDefaultCyclotomicOrder);
    m.def("decompose", &decompose_json, py::arg("ref"), py::arg("generator") = std::nullopt,
          py::arg("m") = qht::kDefaultCyclotomicOrder);
    m.def("qmul", &qmul_text, py::arg("ref"), py::arg("x"), py::arg("y"), py::arg("m") = qht::kDefaultCyclotomicOrder);
    m.def("valuation", &valuation_text, py::arg("ref"), py::arg("x"), py::arg("m") = qht::kDefaultCyclotomicOrder);

    m.def("rho", &rho_text, py::arg("complex"), py::arg("cls"));
    m.def("random_complex", &random_complex_json, py::arg("seed"), py::arg("bound") = qht::kMaxRandomComplexSize);
    m.def("extension_suite", [](std::size_t seeds) {
        auto r = qht::run_extension_suite(seeds);
        return std::make_pair(r.exact_instances, r.seeds);
    });

    m.def("flag_dim", [](const std::string& flag) { return qht::flag_dim(qht::parse_flag(flag)); });
    m.def(
        "monotone_lambda",
        [](const std::string& flag, const std::optional<std::string>& shift) {
            auto f = qht::parse_flag(flag);
            return strings(qht::monotone_lambda(f, shift ? std::optional(qht::parse_rational(*shift)) : std::nullopt));
        },
        py::arg("flag"), py::arg("m") = std::nullopt);
    m.def(
        "classify",
        [](const std::string& flag, const std::vector<std::string>& u, const std::optional<std::vector<std::string>>& lambda) {
            auto c = qht::classify_point(polytope_for(flag, lambda), rationals(u));
            return std::make_pair(std::string(qht::to_string(c.kind)), c.inequalities);
        },
        py::arg("flag"), py::arg("u"), py::arg("lambda_") = std::nullopt);
    m.def(
        "vertices",
        [](const std::string& flag, const std::optional<std::vector<std::string>>& lambda) {
            std::vector<std::vector<std::string>> out;
            for (const auto& v : qht::vertices(polytope_for(flag, lambda))) out.push_back(strings(v));
            return out;
        },
        py::arg("flag"), py::arg("lambda_") = std::nullopt);

    m.def("acceptance", [] {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& r : qht::run_acceptance()) out.emplace_back(qht::format_result(r), r.passed);
        return out;
    });
}
