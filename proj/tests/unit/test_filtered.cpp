#include "doctest.h"

#include "qht/catalog.hpp"
#include "qht/filtered.hpp"
#include "qht/json_io.hpp"

#include <algorithm>
#include <functional>

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

const CoefficientField kField = laurent_homology_field(Rational(1), 1);

CappedGenerator gen(std::string id, Rational action, int index) { return {std::move(id), std::move(action), index, 0}; }

Novikov s_pow(long k, long c = 1) { return kField.monomial(Rational(c), Rational(k)); }

bool contains(const std::vector<Rational>& v, const Rational& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_CASE("recapping shifts action and index additively") {
    CappedGenerator g = gen("x", q(1, 2), 3);
    auto r = recap(g, 2, q(3, 2), 2);
    CHECK(r.action == q(1, 2) - 3);
    CHECK(r.index == 3 - 8);
    CHECK(r.cap_offset == 2);
    for (long k = -3; k <= 3; ++k) {
        for (long l = -3; l <= 3; ++l) {
            CHECK(recap(recap(g, k, q(3, 2), 2), l, q(3, 2), 2) == recap(g, k + l, q(3, 2), 2));
        }
    }
    CHECK(recap(g, 0, Rational(1), 1) == g);
}

TEST_CASE("build_complex validation") {
    auto two = build_complex({gen("a", Rational(0), 0), gen("b", Rational(1), 2)}, {}, kField);
    CHECK(two.size() == 2);
    CHECK(homology_basis(two).size() == 2);

    auto pair = build_complex({gen("x", Rational(1), 1), gen("y", q(1, 3), 0)}, {{0, 1, s_pow(0)}}, kField);
    CHECK(homology_basis(pair).empty());
    CHECK(pair.nice());

    CHECK(code_of([] { build_complex({gen("x", Rational(0), 1), gen("y", Rational(1), 0)}, {{0, 1, s_pow(0)}}, kField); }) ==
          ErrorCode::ActionNonDecreasing);
    // s^1 lifts the target by lambda0 = 1.
    CHECK(code_of([] { build_complex({gen("x", q(3, 2), 3), gen("y", Rational(1), 0)}, {{0, 1, s_pow(1)}}, kField); }) ==
          ErrorCode::ActionNonDecreasing);
    CHECK(code_of([] { build_complex({gen("x", Rational(1), 2), gen("y", Rational(0), 0)}, {{0, 1, s_pow(0)}}, kField); }) ==
          ErrorCode::GradingViolation);
    CHECK(code_of([] {
              build_complex({gen("a", Rational(2), 2), gen("b", Rational(1), 1), gen("c", Rational(0), 0)},
                            {{0, 1, s_pow(0)}, {1, 2, s_pow(0)}}, kField);
          }) == ErrorCode::BoundarySquareNonzero);

    auto tied = build_complex({gen("a", Rational(0), 0), gen("b", Rational(2), 0)}, {}, kField);
    CHECK_FALSE(tied.nice());
}

TEST_CASE("rho on small complexes") {
    auto two = build_complex({gen("a", q(-1, 3), 0), gen("b", Rational(1), 2)}, {}, kField);
    CHECK(rho(two, two.generator_chain(0)) == q(-1, 3));
    CHECK(rho(two, two.generator_chain(1)) == 1);
    Chain mix = two.zero_chain();
    mix[0] = s_pow(2, 3);
    mix[1] = s_pow(-1);
    CHECK(rho(two, mix) == q(5, 3));

    auto pair = build_complex({gen("x", Rational(1), 1), gen("y", Rational(0), 0)}, {{0, 1, s_pow(0)}}, kField);
    CHECK(code_of([&] { rho(pair, pair.generator_chain(0)); }) == ErrorCode::NotACycle);
    CHECK(code_of([&] { rho(pair, pair.generator_chain(1)); }) == ErrorCode::NullHomologous);
    CHECK(code_of([&] { rho(pair, pair.zero_chain()); }) == ErrorCode::NullHomologous);
}

TEST_CASE("rho matches brute-force minimisation over representatives") {
    // d x = y + z: [z] = [-y] drops from action 1 to 1/2.
    auto c = build_complex({gen("x", Rational(2), 1), gen("y", q(1, 2), 0), gen("z", Rational(1), 0), gen("w", q(1, 4), 0)},
                           {{0, 1, s_pow(0)}, {0, 2, s_pow(0)}}, kField);
    const std::vector<Rational> coeffs = {q(1), q(-1), q(2), q(-2), q(1, 2), q(-1, 2)};
    auto brute = [&](const Chain& z) {
        Rational best = c.max_action(z);
        for (std::size_t g = 0; g < c.size(); ++g) {
            for (long k = -3; k <= 3; ++k) {
                for (const auto& a : coeffs) {
                    Chain b = c.zero_chain();
                    b[g] = kField.monomial(a, Rational(k));
                    Chain r = z;
                    Chain db = c.boundary(b);
                    bool zero = true;
                    for (std::size_t i = 0; i < r.size(); ++i) {
                        r[i] += db[i];
                        zero = zero && r[i].is_zero();
                    }
                    if (!zero) best = std::min(best, c.max_action(r));
                }
            }
        }
        return best;
    };
    Chain z = c.generator_chain(2);
    CHECK(rho(c, z) == q(1, 2));
    CHECK(rho(c, z) == brute(z));
    Chain zw = c.generator_chain(2);
    zw[3] = s_pow(1);
    CHECK(rho(c, zw) == brute(zw));
    CHECK(rho(c, zw) == q(5, 4));
    Chain y = c.generator_chain(1);
    CHECK(rho(c, y) == brute(y));
}

TEST_CASE("spectrum") {
    auto one = build_complex({gen("a", q(1, 2), 0)}, {}, kField);
    CHECK(spectrum(one, Rational(-2), Rational(2)) == std::vector<Rational>{q(-3, 2), q(-1, 2), q(1, 2), q(3, 2)});
    auto empty = build_complex({}, {}, kField);
    CHECK(spectrum(empty, Rational(-2), Rational(2)).empty());
}

TEST_CASE("scalar extension maps s to T^lambda0") {
    auto c = build_complex({gen("x", Rational(3), 3), gen("y", Rational(1), 0)}, {{0, 1, s_pow(1)}}, kField);
    auto e = extend_scalars_complex(c);
    CHECK(e.field().kind == CoefficientKind::novikov);
    REQUIRE(e.entries().size() == 1);
    CHECK(e.entries()[0].value == Novikov::monomial(CycRat(12, Rational(1)), Rational(1), Direction::down));

    auto c2 = build_complex({gen("x", Rational(3), 5), gen("y", Rational(-1), 0)}, {{0, 1, s_pow(1)}},
                            laurent_homology_field(Rational(2), 2));
    auto e2 = extend_scalars_complex(c2);
    CHECK(e2.entries()[0].value.valuation() == 2);

    auto zero = extend_scalars_complex(build_complex({gen("a", Rational(0), 0)}, {}, kField));
    CHECK(zero.entries().empty());
}

TEST_CASE("random complexes are reproducible and satisfy the invariants") {
    auto a = random_complex(0, 4);
    auto b = random_complex(0, 4);
    CHECK(to_json(a.complex).dump() == to_json(b.complex).dump());
    CHECK(a.complex.size() <= 4);
    CHECK(code_of([] { random_complex(1, kMaxRandomComplexSize + 1); }) == ErrorCode::SchemaError);

    std::size_t non_trivial = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto rc = random_complex(seed, kMaxRandomComplexSize);
        const auto& c = rc.complex;
        if (c.entries().size() > 1) ++non_trivial;
        CHECK(homology_basis(c).size() == rc.classes.size());
        auto ext = extend_scalars_complex(c);
        auto moved = shift(c, q(-1, 3));
        const Rational lo = -20, hi = 20;
        auto spec = spectrum(c, lo, hi);
        for (std::size_t k = 0; k < rc.classes.size(); ++k) {
            const Chain& z = rc.classes[k];
            Rational r = rho(c, z);
            CHECK(r == rc.expected_rho[k]);
            CHECK(rho(ext, extend_chain(c, z)) == r);
            CHECK(rho(moved, z) == r - q(1, 3));
            CHECK(contains(spec, r));
            CHECK(r <= c.max_action(z));
        }
        for (const auto& z : homology_basis(c)) {
            Rational r = rho(c, z);
            CHECK(rho(ext, extend_chain(c, z)) == r);
            CHECK(contains(spec, r));
            CHECK(r <= c.max_action(z));
        }
    }
    CHECK(non_trivial > 20);
}

TEST_CASE("zero-Hamiltonian model recovers valuations of Poincare duals") {
    for (const char* ref : {"cp2_laurent", "quadric2_laurent", "s2s2_laurent", "quadric4_laurent"}) {
        auto a = load_ring(ref);
        auto dual = dual_algebra(a);
        for (bool pair : {false, true}) {
            auto model = morse_model(a, pair);
            auto moved = shift(model, Rational(5));
            for (std::size_t i = 0; i < a.dim(); ++i) {
                for (long k = -2; k <= 2; ++k) {
                    Element x = scale(a.basis_element(i), a.field().monomial(Rational(1), Rational(k)));
                    Chain z = morse_class(a, model, x);
                    CHECK(rho(model, z) == valuation_qh(dual, poincare_dual(a, x)));
                    CHECK(rho(moved, z) == valuation_qh(dual, poincare_dual(a, x)) + 5);
                }
            }
        }
    }
    auto q2 = load_ring("quadric2_laurent");
    auto model = morse_model(q2);
    Element e_plus = parse_element(q2, "1/2 + 1/2*p*t^-1");
    CHECK(rho(model, morse_class(q2, model, e_plus)) == q2.field().lambda0);
}

TEST_CASE("complex JSON round trip") {
    auto rc = random_complex(7, 6);
    Json j = to_json(rc.complex);
    auto back = complex_from_json(j);
    CHECK(to_json(back).dump() == j.dump());
    for (const auto& z : rc.classes) {
        CHECK(chain_from_json(chain_to_json(back, z), back) == z);
    }

    Json text = Json::parse(R"({
        "field": {"kind": "laurent", "lambda0": "1", "N_M": 1},
        "generators": [{"orbit_id": "x", "action": "2", "index": 1},
                       {"orbit_id": "y", "action": "1/2", "index": 0},
                       {"orbit_id": "z", "action": "1", "index": 0}],
        "differential": [{"from": "x", "to": "y", "scalar": "1"}, {"from": "x", "to": "z", "scalar": "1"}]
    })");
    auto c = complex_from_json(text);
    CHECK(rho(c, chain_from_json(Json("z"), c)) == q(1, 2));
    CHECK(rho(c, chain_from_json(Json("2*s*z"), c)) == q(1, 2) + 1);
}
