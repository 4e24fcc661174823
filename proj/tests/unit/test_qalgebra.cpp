#include "doctest.h"

#include "qht/catalog.hpp"
#include "qht/decompose.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace qht;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

bool same_set(const std::vector<Element>& a, const std::vector<Element>& b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.begin(), a.end(), [&](const Element& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

Element random_element(std::mt19937_64& rng, const QuantumAlgebra& a) {
    Element x = a.zero();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (rng() % 3 == 0) continue;
        long k = static_cast<long>(rng() % 5) - 2;
        long c = static_cast<long>(rng() % 7) - 3;
        if (c != 0) x[i] = a.field().monomial(Rational(c), Rational(k));
    }
    if (is_zero(x)) x = a.identity();
    return x;
}

}  // namespace

TEST_CASE("catalog loads and validates") {
    auto cp2 = load_ring("cp2_laurent");
    CHECK(cp2.dim() == 3);
    Element h = parse_element(cp2, "h");
    CHECK(qmul(cp2, qmul(cp2, h, h), h) == parse_element(cp2, "t"));

    auto q2h = load_ring("quadric2_homology");
    CHECK(q2h.dim() == 4);
    Element pt = parse_element(q2h, "[pt]");
    CHECK(qmul(q2h, pt, pt) == parse_element(q2h, "[M]*s^-2"));

    auto q4h = load_ring("quadric4_homology");
    Element pt4 = parse_element(q4h, "[pt]");
    CHECK(qmul(q4h, pt4, pt4) == parse_element(q4h, "[M]*s^-2"));

    for (const auto& base : catalog_bases()) {
        for (const char* variant : {"", "_novikov", "_homology"}) {
            CHECK_NOTHROW(load_ring(base + variant));
        }
    }
}

TEST_CASE("validation rejects broken documents") {
    Json doc = catalog_document("cp2");
    for (auto& c : doc["constants"]) {
        if (c["i"] == "h" && c["j"] == "h2") c["terms"][0]["scalar"] = "2*t";
    }
    CHECK(code_of([&] { algebra_from_json(doc, 12); }) == ErrorCode::NonAssociative);

    Json graded = catalog_document("cp2");
    graded["constants"][4]["terms"][0]["scalar"] = "t^2";
    CHECK(code_of([&] { algebra_from_json(graded, 12); }) == ErrorCode::GradingViolation);

    Json missing = catalog_document("cp2");
    missing.erase("basis");
    CHECK(code_of([&] { algebra_from_json(missing, 12); }) == ErrorCode::SchemaError);

    Json no_identity = catalog_document("cp1");
    no_identity["constants"].erase(no_identity["constants"].begin());
    CHECK(code_of([&] { algebra_from_json(no_identity, 12); }) == ErrorCode::MissingIdentity);
}

TEST_CASE("quantum multiplication") {
    auto s2 = load_ring("s2s2");
    Element a = parse_element(s2, "a");
    CHECK(qmul(s2, s2.identity(), a) == a);
    auto q2 = load_ring("quadric2");
    Element ep = parse_element(q2, "1/2 + 1/2*p*t^-1");
    Element em = parse_element(q2, "1/2 - 1/2*p*t^-1");
    CHECK(is_zero(qmul(q2, ep, em)));
    CHECK(qmul(q2, ep, ep) == ep);
    CHECK(code_of([&] { qmul(q2, Element(3, q2.field().zero()), ep); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("poincare duality") {
    auto q2 = load_ring("quadric2");
    auto dual = dual_algebra(q2);
    CHECK(poincare_dual(q2, q2.identity()) == parse_element(dual, "[M]"));
    Element ep = parse_element(q2, "1/2 + 1/2*p*t^-1");
    CHECK(poincare_dual(q2, ep) == parse_element(dual, "1/2*[M] + 1/2*[pt]*s"));
    Element ht2 = parse_element(q2, "h*t^2");
    CHECK(poincare_dual(dual, poincare_dual(q2, ht2)) == ht2);
    for (std::size_t i = 0; i < q2.dim(); ++i) CHECK(dual.basis()[i].degree == q2.dim_manifold() - q2.basis()[i].degree);
    auto q2h = load_ring("quadric2_homology");
    CHECK(dual_algebra(q2h).basis()[1].name == "h");
}

TEST_CASE("valuations of algebra elements") {
    auto cp2n = load_ring("cp2_novikov");
    CHECK(valuation_qh(cp2n, cp2n.identity()) == 0);
    Element e = parse_element(cp2n, "1/3 + 1/3*z3*u*T^(-1/3) + 1/3*z3^2*u2*T^(-2/3)");
    CHECK(valuation_qh(cp2n, e) == q(-2, 3));
    auto q2 = load_ring("quadric2");
    Element ep = parse_element(q2, "1/2 + 1/2*p*t^-1");
    CHECK(valuation_qh(dual_algebra(q2), poincare_dual(q2, ep)) == 1);
    CHECK(valuation_qh(q2, ep) == -1);
    CHECK(code_of([&] { valuation_qh(q2, q2.zero()); }) == ErrorCode::ZeroElement);
}

TEST_CASE("minimal polynomials") {
    auto cp2n = load_ring("cp2_novikov");
    Polynomial one = min_poly(cp2n, cp2n.identity());
    REQUIRE(one.degree() == 1);
    CHECK(one.coeffs[0] == Fraction(-cp2n.field().one()));
    Polynomial pu = min_poly(cp2n, parse_element(cp2n, "u"));
    REQUIRE(pu.degree() == 3);
    CHECK(pu.coeffs[0] == Fraction(-Novikov::power_of_t(q(1))));
    CHECK(pu.coeffs[1].is_zero());
    CHECK(pu.coeffs[2].is_zero());
    auto q2 = load_ring("quadric2");
    Polynomial ph = min_poly(q2, parse_element(q2, "h"));
    CHECK(ph.degree() == 3);
    CHECK(ph.coeffs[1] == Fraction(q2.field().monomial(Rational(-4), Rational(1))));
}

TEST_CASE("factor split") {
    auto poly = [](int m, std::vector<Novikov> c) {
        Polynomial p;
        for (auto& x : c) p.coeffs.emplace_back(x.lifted(m));
        return p;
    };
    auto T = [](const Rational& e, long c = 1) { return Novikov::monomial(CycRat(12, c), e); };
    auto roots = factor_split(poly(12, {-T(q(1)), Novikov(), Novikov(), T(q(0))}));
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) {
        CHECK(r.valuation() == q(1, 3));
        CHECK(pow(r, 3) == T(q(1)));
    }
    CHECK(roots[0] != roots[1]);
    auto pm = factor_split(poly(12, {-T(q(0)), Novikov(), T(q(0))}));
    CHECK(pm.size() == 2);
    CHECK(code_of([&] { factor_split(poly(12, {-T(q(1), 2), Novikov(), T(q(0))})); }) == ErrorCode::RootNotInField);
    auto sq = factor_split(poly(24, {-T(q(1), 2), Novikov(), T(q(0))}));
    REQUIRE(sq.size() == 2);
    for (const auto& r : sq) CHECK(r * r == T(q(1), 2).lifted(24));
    CHECK(code_of([&] { factor_split(poly(12, {T(q(0)), -T(q(0), 2), T(q(0))})); }) == ErrorCode::RepeatedRoot);
    CHECK(code_of([&] { factor_split(poly(12, {Novikov(), Novikov(), T(q(0))})); }) == ErrorCode::RepeatedRoot);
    CHECK(code_of([&] { factor_split(poly(12, {T(q(0)) + T(q(1)), T(q(0)), T(q(0))})); }) == ErrorCode::UnfactorableShape);
    // (z^2 - 9t)(z^2 - t): rational residual.
    auto four = factor_split(poly(12, {T(q(2), 9), Novikov(), T(q(1), -10), Novikov(), T(q(0))}));
    CHECK(four.size() == 4);
}

TEST_CASE("CP2 idempotents over Lambda") {
    auto cp2n = load_ring("cp2_novikov");
    auto d = decompose(cp2n, parse_element(cp2n, "u"));
    REQUIRE(d.idempotents.size() == 3);
    CHECK(d.exact);
    std::vector<Element> expected;
    for (int j = 1; j <= 3; ++j) {
        std::string th = "z3^" + std::to_string(j), th2 = "z3^" + std::to_string(2 * j);
        expected.push_back(parse_element(cp2n, "1/3 + 1/3*" + th + "*u*T^(-1/3) + 1/3*" + th2 + "*u2*T^(-2/3)"));
    }
    CHECK(same_set(d.idempotents, expected));
    CHECK(verify_decomposition(cp2n, d));
    for (const auto& e : d.idempotents) CHECK(valuation_qh(cp2n, e) == q(-2, 3));
    // Lagrange round trip: sum r_i e_i = u.
    Element sum = cp2n.zero();
    for (std::size_t i = 0; i < d.roots.size(); ++i) sum = add(sum, scale(d.idempotents[i], d.roots[i]));
    CHECK(sum == parse_element(cp2n, "u"));
    // u -> theta*u relabels j -> j+1; complex conjugation of coefficients relabels j -> -j.
    std::vector<Element> shifted, conjugated;
    for (const auto& e : d.idempotents) {
        Element g = cp2n.zero(), c = cp2n.zero();
        for (std::size_t k = 0; k < e.size(); ++k) {
            for (const auto& [ex, co] : e[k].terms()) {
                g[k].add_term(ex, co * pow(CycRat::zeta(12, 4), static_cast<long>(k)));
                c[k].add_term(ex, co.galois(11));
            }
        }
        shifted.push_back(g);
        conjugated.push_back(c);
    }
    CHECK(same_set(shifted, d.idempotents));
    CHECK(same_set(conjugated, d.idempotents));
}

TEST_CASE("quadric splittings") {
    auto q2 = load_ring("quadric2");
    auto d = decompose(q2, default_generator(q2));
    REQUIRE(d.idempotents.size() == 2);
    CHECK(d.factor_dims == std::vector<int>{2, 2});
    auto dual = dual_algebra(q2);
    std::vector<Element> duals;
    for (const auto& e : d.idempotents) duals.push_back(poincare_dual(q2, e));
    CHECK(same_set(duals, {parse_element(dual, "1/2*[M] + 1/2*[pt]*s"), parse_element(dual, "1/2*[M] - 1/2*[pt]*s")}));

    auto s2 = load_ring("s2s2");
    auto ds = decompose(s2, default_generator(s2));
    REQUIRE(ds.idempotents.size() == 2);
    auto s2n = extend_ring(s2);
    auto dn = decompose(s2n, default_generator(s2n));
    REQUIRE(dn.idempotents.size() == 4);
    CHECK(dn.exact);
    auto s2n_dual = dual_algebra(s2n);
    auto pd = [&](const std::string& text) { return parse_element(s2n_dual, text); };
    Element epp = pd("1/4*[M] + 1/4*[pt×pt]*T + 1/4*A*T^(1/2) + 1/4*B*T^(1/2)");
    Element epm = pd("1/4*[M] + 1/4*[pt×pt]*T - 1/4*A*T^(1/2) - 1/4*B*T^(1/2)");
    Element emp = pd("1/4*[M] - 1/4*[pt×pt]*T + 1/4*A*T^(1/2) - 1/4*B*T^(1/2)");
    Element emm = pd("1/4*[M] - 1/4*[pt×pt]*T - 1/4*A*T^(1/2) + 1/4*B*T^(1/2)");
    std::vector<Element> four;
    for (const auto& e : dn.idempotents) four.push_back(poincare_dual(s2n, e));
    CHECK(same_set(four, {epp, epm, emp, emm}));

    Element ep = parse_element(s2, "1/2 + 1/2*p*t^-1");
    Element em = parse_element(s2, "1/2 - 1/2*p*t^-1");
    auto back = [&](const Element& x) { return poincare_dual(s2n_dual, x); };
    CHECK(iota(s2, ep) == add(back(epp), back(epm)));
    CHECK(iota(s2, em) == add(back(emp), back(emm)));

    auto q4 = load_ring("quadric4");
    CHECK(code_of([&] { decompose(q4, parse_element(q4, "s1")); }) == ErrorCode::NotCyclic);
    auto d4 = decompose(q4, default_generator(q4));
    CHECK(d4.idempotents.size() == 2);
    CHECK(verify_decomposition(q4, d4));
    CHECK(same_set(d4.idempotents, {parse_element(q4, "1/2 + 1/2*s22*t^-1"), parse_element(q4, "1/2 - 1/2*s22*t^-1")}));
}

TEST_CASE("coefficient extension") {
    auto q2 = load_ring("quadric2");
    auto q2n = extend_ring(q2);
    CHECK(iota(q2, q2.identity()) == q2n.identity());
    CHECK(iota(q2, parse_element(q2, "h*t^-1")) == parse_element(q2n, "h*T^-1"));
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        Element x = random_element(rng, q2), y = random_element(rng, q2);
        CHECK(qmul(q2n, iota(q2, x), iota(q2, y)) == iota(q2, qmul(q2, x, y)));
        CHECK(valuation_qh(q2n, iota(q2, x)) == valuation_qh(q2, x));
    }
}

TEST_CASE("product rings") {
    auto cp1 = load_ring("cp1");
    auto prod = load_ring("cp1xcp1");
    CHECK(prod.dim() == 4);
    CHECK(prod.field().chern == 2);
    CHECK(prod.field().lambda0 == 1);
    auto s2 = load_ring("s2s2");
    auto img = [&](const char* text) { return parse_element(s2, text); };
    CHECK(is_ring_isomorphism(prod, s2, {img("1"), img("b"), img("a"), img("p")}));
    CHECK(!is_ring_isomorphism(prod, s2, {img("1"), img("b"), img("a"), img("2*p")}));
    auto q2 = load_ring("quadric2");
    auto qimg = [&](const char* text) { return parse_element(q2, text); };
    CHECK(is_ring_isomorphism(prod, q2, {qimg("1"), qimg("1/2*h - 1/2*d"), qimg("1/2*h + 1/2*d"), qimg("p")}));

    CHECK(sigma_embed(cp1, cp1, cp1.identity()) == prod.identity());
    Json cp3doc = catalog_document("cp3");
    cp3doc["lambda0"] = "2";
    auto cp3 = algebra_from_json(cp3doc, 12);
    auto cp1h = dual_algebra(cp1);
    auto cp3h = dual_algebra(cp3);
    auto mixed = product_ring(cp1h, cp3h);
    CHECK(mixed.field().chern == 2);
    validate(mixed);
    Element x = parse_element(cp1h, "[pt]*s");
    Element sx = sigma_embed(cp1h, cp3h, x);
    CHECK(sx == parse_element(mixed, "[pt]⊗[M]*s"));
    auto cp3_unit = load_ring("cp3");
    CHECK(code_of([&] { product_ring(cp1, cp3_unit); }) == ErrorCode::MonotonicityMismatch);
    // sigma is multiplicative.
    Element h = parse_element(cp1, "h");
    CHECK(sigma_embed(cp1, cp1, qmul(cp1, h, h)) == qmul(prod, sigma_embed(cp1, cp1, h), sigma_embed(cp1, cp1, h)));
}

TEST_CASE("decomposition invariants across the catalog") {
    for (const std::string ref : {"cp1", "cp2", "cp3", "cp1_novikov", "cp2_novikov", "cp3_novikov", "s2s2", "quadric2",
                                  "s2s2_novikov", "quadric2_novikov", "quadric4", "cp2_homology", "quadric2_homology"}) {
        CAPTURE(ref);
        auto a = load_ring(ref);
        auto d = decompose(a, default_generator(a));
        CHECK(d.exact);
        CHECK(verify_decomposition(a, d));
        int total = 0;
        for (int k : d.factor_dims) total += k;
        CHECK(total == static_cast<int>(a.dim()));
    }
}
