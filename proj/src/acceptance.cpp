#include "qht/acceptance.hpp"

#include "qht/decompose.hpp"
#include "qht/filtered.hpp"
#include "qht/gelfand_cetlin.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace qht {

std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << " (" << r.seconds << " s";
    if (r.budget_seconds) {
        out.precision(0);
        out << " / " << *r.budget_seconds << " s";
    }
    out << ")";
    return out.str();
}

namespace {

bool same_set(const std::vector<Element>& a, const std::vector<Element>& b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.begin(), a.end(), [&](const Element& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

// Collects failed checks; a criterion passes when none were recorded.
struct Checker {
    std::vector<std::string> failures;
    std::size_t count = 0;

    void operator()(bool ok, const std::string& what) {
        ++count;
        if (!ok) failures.push_back(what);
    }
    std::string summary(const std::string& ok_text) const {
        if (failures.empty()) return ok_text;
        std::string s = std::to_string(failures.size()) + " of " + std::to_string(count) + " checks failed: " + failures.front();
        for (std::size_t i = 1; i < std::min<std::size_t>(failures.size(), 3); ++i) s += "; " + failures[i];
        return s;
    }
};

CriterionResult timed(int id, std::string name, std::optional<double> budget,
                      const std::function<std::string(Checker&)>& body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.budget_seconds = budget;
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.detail = body(check);
        r.passed = check.failures.empty();
        if (!r.passed) r.detail = check.summary(r.detail);
    } catch (const Error& e) {
        r.detail = std::string("error ") + std::string(to_string(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget && r.seconds >= *budget) {
        r.passed = false;
        r.detail += " [over time budget]";
    }
    return r;
}

std::vector<Element> cp2_wu_idempotents(const QuantumAlgebra& cp2n) {
    std::vector<Element> out;
    for (int j = 1; j <= 3; ++j) {
        const std::string th = "z3^" + std::to_string(j), th2 = "z3^" + std::to_string(2 * j);
        out.push_back(parse_element(cp2n, "1/3 + 1/3*" + th + "*u*T^(-1/3) + 1/3*" + th2 + "*u2*T^(-2/3)"));
    }
    return out;
}

std::string criterion_cp2(Checker& check, const CatalogOptions& options) {
    auto cp2n = load_ring("cp2_novikov", options);
    check(cp2n.field().lambda0 == 1, "cp2 lambda0 is 1");
    auto d = decompose(cp2n, parse_element(cp2n, "u"));
    check(d.exact, "decomposition is exact");
    check(d.idempotents.size() == 3, "three idempotents");
    check(same_set(d.idempotents, cp2_wu_idempotents(cp2n)), "idempotents match (1/3)(1 + theta^j u T^-1/3 + theta^2j u^2 T^-2/3)");
    Element sum = cp2n.zero();
    for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
        sum = add(sum, d.idempotents[i]);
        for (std::size_t j = 0; j < d.idempotents.size(); ++j) {
            Element p = qmul(cp2n, d.idempotents[i], d.idempotents[j]);
            check(i == j ? p == d.idempotents[i] : is_zero(p), "e_i e_j = delta_ij e_i");
        }
    }
    check(sum == cp2n.identity(), "sum of idempotents is 1");
    return "3 idempotents equal to the closed forms; orthogonal, complete";
}

std::string criterion_quadrics(Checker& check, const CatalogOptions& options) {
    // Q^2 as S^2 x S^2, in the basis 1, a, b, p = a*b.
    auto s2 = load_ring("s2s2", options);
    auto ds = decompose(s2, default_generator(s2));
    check(ds.exact && ds.idempotents.size() == 2, "QH(Q2; C) has 2 field factors");
    check(verify_decomposition(s2, ds), "Q2 Laurent decomposition verifies");
    auto s2_dual = dual_algebra(s2);
    std::vector<Element> pd;
    for (const auto& e : ds.idempotents) pd.push_back(poincare_dual(s2, e));
    check(same_set(pd, {parse_element(s2_dual, "1/2*[M] + 1/2*[pt×pt]*s"), parse_element(s2_dual, "1/2*[M] - 1/2*[pt×pt]*s")}),
          "PD(e+-) = ([M] +- [pt x pt] s)/2");

    auto s2n = extend_ring(s2);
    auto dn = decompose(s2n, default_generator(s2n));
    check(dn.exact && dn.idempotents.size() == 4, "QH(Q2; Lambda) has 4 factors");
    check(verify_decomposition(s2n, dn), "Q2 Novikov decomposition verifies");
    auto s2n_dual = dual_algebra(s2n);
    auto from_dual = [&](const std::string& text) { return poincare_dual(s2n_dual, parse_element(s2n_dual, text)); };
    Element epp = from_dual("1/4*[M] + 1/4*[pt×pt]*T + 1/4*A*T^(1/2) + 1/4*B*T^(1/2)");
    Element epm = from_dual("1/4*[M] + 1/4*[pt×pt]*T - 1/4*A*T^(1/2) - 1/4*B*T^(1/2)");
    Element emp = from_dual("1/4*[M] - 1/4*[pt×pt]*T + 1/4*A*T^(1/2) - 1/4*B*T^(1/2)");
    Element emm = from_dual("1/4*[M] - 1/4*[pt×pt]*T - 1/4*A*T^(1/2) + 1/4*B*T^(1/2)");
    check(same_set(dn.idempotents, {epp, epm, emp, emm}), "the four idempotents match e_(+-,+-)");
    Element ep = parse_element(s2, "1/2 + 1/2*p*t^-1");
    Element em = parse_element(s2, "1/2 - 1/2*p*t^-1");
    check(iota(s2, ep) == add(epp, epm), "iota(e+) = e_(+,+) + e_(+,-)");
    check(iota(s2, em) == add(emp, emm), "iota(e-) = e_(-,+) + e_(-,-)");

    // Q^2 in the hyperplane-class basis: same splitting pattern.
    auto q2 = load_ring("quadric2", options);
    auto dq = decompose(q2, default_generator(q2));
    check(dq.idempotents.size() == 2 && verify_decomposition(q2, dq), "quadric2 splits into 2 over C");
    auto q2n = extend_ring(q2);
    auto dqn = decompose(q2n, default_generator(q2n));
    check(dqn.idempotents.size() == 4 && verify_decomposition(q2n, dqn), "quadric2 splits into 4 over Lambda");
    for (const auto& e : dq.idempotents) {
        bool found = false;
        for (std::size_t i = 0; i < dqn.idempotents.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < dqn.idempotents.size() && !found; ++j) {
                found = iota(q2, e) == add(dqn.idempotents[i], dqn.idempotents[j]);
            }
        }
        check(found, "iota of each quadric2 idempotent is a sum of two Novikov idempotents");
    }

    auto q4 = load_ring("quadric4", options);
    auto d4 = decompose(q4, default_generator(q4));
    check(d4.exact && d4.idempotents.size() == 2, "QH(Q4; C) has 2 field factors");
    check(verify_decomposition(q4, d4), "Q4 decomposition verifies");
    auto q4h = load_ring("quadric4_homology", options);
    Element pt = parse_element(q4h, "[pt]");
    check(qmul(q4h, pt, pt) == parse_element(q4h, "[M]*s^-2"), "[pt]*[pt] = [Q4] s^-2");
    return "Q2: 2 factors over C, 4 over Lambda, iota relation holds; Q4: 2 factors, [pt]^2 = [Q4]s^-2";
}

Element random_laurent(std::mt19937_64& rng, const QuantumAlgebra& a) {
    Element x = a.zero();
    while (is_zero(x)) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            for (int t = 0; t < 2; ++t) {
                long c = static_cast<long>(rng() % 9) - 4;
                long k = static_cast<long>(rng() % 7) - 3;
                if (c != 0) x[i] += a.field().monomial(Rational(c), Rational(k));
            }
        }
    }
    return x;
}

Novikov random_novikov(std::mt19937_64& rng) {
    Novikov x(Direction::up);
    while (x.is_zero()) {
        const int terms = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < terms; ++t) {
            long c = static_cast<long>(rng() % 11) - 5;
            Rational e = make_rational(static_cast<long>(rng() % 25) - 12, 1 + static_cast<long>(rng() % 6));
            if (c != 0) x.add_term(e, CycRat::zeta(kDefaultCyclotomicOrder, static_cast<long>(rng() % 12)) * Rational(c));
        }
    }
    return x;
}

std::string criterion_valuations(Checker& check, const CatalogOptions& options) {
    auto cp2n = load_ring("cp2_novikov", options);
    const Rational lambda0 = cp2n.field().lambda0;
    for (const auto& e : decompose(cp2n, parse_element(cp2n, "u")).idempotents) {
        check(valuation_qh(cp2n, e) == Rational(-2) * lambda0 / 3, "nu(e_j) = -2 lambda0 / 3");
    }
    std::mt19937_64 rng(20240601);
    std::vector<std::pair<QuantumAlgebra, QuantumAlgebra>> rings;
    for (const char* ref : {"cp2", "quadric2", "s2s2", "cp3"}) {
        auto a = load_ring(ref, options);
        rings.emplace_back(a, extend_ring(a));
    }
    for (int i = 0; i < 1000; ++i) {
        const auto& [a, an] = rings[i % rings.size()];
        Element x = random_laurent(rng, a);
        check(valuation_qh(an, iota(a, x)) == valuation_qh(a, x), "nu(iota(a)) = nu(a)");
    }
    for (int i = 0; i < 1000; ++i) {
        Novikov x = random_novikov(rng), y = random_novikov(rng);
        check(valuation(x * y) == valuation(x) + valuation(y), "nu(xy) = nu(x) + nu(y)");
    }
    return "nu(e_j) = -2/3 lambda0 for j = 1,2,3; 1000 iota and 1000 product valuation checks";
}

std::string criterion_morse(Checker& check, const CatalogOptions& options) {
    std::size_t n = 0;
    for (const char* ref : {"cp2", "quadric2"}) {
        auto a = load_ring(ref, options);
        auto dual = dual_algebra(a);
        for (bool pair : {false, true}) {
            auto model = morse_model(a, pair);
            for (std::size_t i = 0; i < a.dim(); ++i) {
                Element x = a.basis_element(i);
                check(rho(model, morse_class(a, model, x)) == valuation_qh(dual, poincare_dual(a, x)),
                      std::string(ref) + ": rho(" + a.basis()[i].name + ") = nu(PD)");
                ++n;
            }
        }
    }
    return std::to_string(n) + " basis classes on cp2 and quadric2 models (with and without a cancelling pair)";
}

std::string criterion_gelfand_cetlin(Checker& check) {
    const FlagSpec gr24{4, {2}}, cp3{4, {1}}, fl3{3, {1, 2}};
    check(flag_dim(gr24) == 4, "dim Gr(2,4) = 4");
    auto lambda = monotone_lambda(gr24, Rational(2));
    check(lambda == std::vector<Rational>{Rational(4), Rational(4), Rational(0), Rational(0)}, "monotone lambda = (4,4,0,0)");
    auto pattern = gc_pattern(gr24, lambda);
    check(pattern.index_set.size() == 4, "|I| = 4");
    auto gr = gc_polytope(pattern);
    auto u0 = std::vector<Rational>{Rational(2), Rational(3), Rational(1), Rational(2)};
    check(classify_point(gr, u0).kind == PointClass::Interior, "u0 = (2,3,1,2) is interior");
    std::size_t total = 0;
    for (const auto& f : {gr24, cp3, fl3}) {
        auto d = gc_polytope(gc_pattern(f, monotone_lambda(f)));
        auto v = vertices(d);
        total += v.size();
        check(!v.empty(), "vertices found for " + f.to_string());
    }
    return "dim 4, |I| = 4, lambda = (4,4,0,0), u0 interior; vertex methods agree (" + std::to_string(total) +
           " vertices over Gr(2,4), CP3, F(1,2,3))";
}

std::string criterion_catalog(Checker& check, const CatalogOptions& options) {
    std::size_t specs = 0;
    for (const auto& base : catalog_bases(options)) {
        for (const char* suffix : {"", "_novikov", "_homology"}) {
            auto a = load_ring(base + suffix, options);
            auto v = find_violation(a);
            check(!v, base + suffix + " validates" + (v ? std::string(": ") + v->what() : std::string()));
            ++specs;
        }
    }
    auto report = run_mutation_test(options);
    for (const auto& u : report.undetected) check(false, "undetected mutation " + u);
    return std::to_string(specs) + " ring variants valid; " + std::to_string(report.mutations) +
           " single-constant mutations all rejected";
}

}  // namespace

ExtensionSuiteReport run_extension_suite(std::size_t seeds, std::size_t size_bound) {
    ExtensionSuiteReport report;
    report.seeds = seeds;
    const std::vector<Rational> shifts = {make_rational(-1, 3), Rational(5)};
    for (std::size_t seed = 0; seed < seeds; ++seed) {
        std::vector<std::string> problems;
        try {
            auto rc = random_complex(seed, size_bound);
            const auto& c = rc.complex;
            auto ext = extend_scalars_complex(c);
            std::vector<FilteredComplex> moved;
            for (const auto& s : shifts) moved.push_back(shift(c, s));

            std::vector<std::pair<Chain, std::optional<Rational>>> classes;
            for (std::size_t i = 0; i < rc.classes.size(); ++i) classes.emplace_back(rc.classes[i], rc.expected_rho[i]);
            for (std::size_t i = 0; i < rc.classes.size(); ++i) {
                for (std::size_t j = i + 1; j < rc.classes.size(); ++j) {
                    Chain z = rc.classes[i];
                    for (std::size_t k = 0; k < z.size(); ++k) z[k] += rc.classes[j][k];
                    classes.emplace_back(std::move(z), std::nullopt);
                }
            }
            for (auto& z : homology_basis(c)) classes.emplace_back(std::move(z), std::nullopt);

            for (const auto& [z, expected] : classes) {
                ++report.classes_checked;
                const Rational r = rho(c, z);
                if (expected && r != *expected) problems.push_back("rho differs from the planted value");
                if (rho(ext, extend_chain(c, z)) != r) problems.push_back("rho changes under scalar extension");
                const Rational& period = c.field().lambda0;
                auto spec = spectrum(c, r - period, r + period);
                if (std::find(spec.begin(), spec.end(), r) == spec.end()) problems.push_back("rho outside the spectrum");
                for (std::size_t s = 0; s < shifts.size(); ++s) {
                    if (rho(moved[s], z) != r + shifts[s]) problems.push_back("rho not shift-equivariant");
                }
                if (r > c.max_action(z)) problems.push_back("rho exceeds the representative's action");
            }
        } catch (const Error& e) {
            problems.push_back(std::string(to_string(e.code())) + ": " + e.what());
        }
        if (problems.empty()) ++report.exact_instances;
        else report.failures.push_back("seed " + std::to_string(seed) + ": " + problems.front());
    }
    return report;
}

MutationReport run_mutation_test(const CatalogOptions& options) {
    MutationReport report;
    for (const auto& base : catalog_bases(options)) {
        const auto a = load_ring(base, options);
        const auto& basis = a.basis();
        const Rational unit = a.field().degree_unit();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            for (std::size_t j = i; j < a.dim(); ++j) {
                for (std::size_t k = 0; k < a.dim(); ++k) {
                    Rational e = Rational(basis[i].degree + basis[j].degree - basis[k].degree) / unit;
                    if (!is_integer(e)) e = 0;
                    QuantumAlgebra mutated = a;
                    Element cell = a.product(i, j);
                    cell[k] += a.field().monomial(Rational(1), e);
                    mutated.set_product(i, j, cell);
                    mutated.set_product(j, i, cell);
                    ++report.mutations;
                    if (!find_violation(mutated)) {
                        report.undetected.push_back(base + " " + basis[i].name + "*" + basis[j].name + " -> " + basis[k].name);
                    }
                }
            }
        }
    }
    return report;
}

std::vector<CriterionResult> run_acceptance(const CatalogOptions& options) {
    std::vector<CriterionResult> out;
    out.push_back(timed(1, "CP2 idempotents", 1.0, [&](Checker& c) { return criterion_cp2(c, options); }));
    out.push_back(timed(2, "quadric splittings", 2.0, [&](Checker& c) { return criterion_quadrics(c, options); }));
    out.push_back(timed(3, "valuations", 2.0, [&](Checker& c) { return criterion_valuations(c, options); }));
    out.push_back(timed(4, "rho extension suite", 5.0, [&](Checker& c) {
        auto r = run_extension_suite(100, kMaxRandomComplexSize);
        for (const auto& f : r.failures) c(false, f);
        return std::to_string(r.exact_instances) + "/" + std::to_string(r.seeds) + " exact over " +
               std::to_string(r.classes_checked) + " classes";
    }));
    out.push_back(timed(5, "zero-Hamiltonian model", std::nullopt, [&](Checker& c) { return criterion_morse(c, options); }));
    out.push_back(timed(6, "Gelfand-Cetlin", 3.0, [&](Checker& c) { return criterion_gelfand_cetlin(c); }));
    out.push_back(timed(7, "catalog integrity", 5.0, [&](Checker& c) { return criterion_catalog(c, options); }));
    return out;
}

}  // namespace qht
