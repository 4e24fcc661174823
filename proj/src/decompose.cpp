#include "qht/decompose.hpp"

#include "qht/linalg.hpp"

#include <algorithm>

namespace qht {

std::string Polynomial::to_string(std::string_view variable) const {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = coeffs[k].to_string(variable);
        std::string z = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        if (z.empty()) out += "(" + c + ")";
        else if (c == "1") out += z;
        else out += "(" + c + ")*" + z;
    }
    return out.empty() ? "0" : out;
}

Polynomial min_poly(const QuantumAlgebra& a, const Element& x) {
    const auto& field = a.field();
    IncrementalEchelon echelon(a.dim(), field.direction(), field.m);
    Element power = a.identity();
    for (std::size_t k = 0; k <= a.dim(); ++k) {
        FractionVector v(power.begin(), power.end());
        if (auto combo = echelon.insert(v)) {
            Polynomial p;
            for (const auto& c : *combo) p.coeffs.push_back(-c);
            p.coeffs.push_back(Fraction::one(field.direction(), field.m));
            return p;
        }
        power = qmul(a, power, x);
    }
    fail(ErrorCode::Internal, "Krylov sequence did not become dependent");
}

namespace {

using Coeffs = std::vector<Novikov>;

Novikov evaluate(const Coeffs& c, const Novikov& r) {
    Novikov acc(c.front().direction(), c.front().order());
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + c[k];
    return acc;
}

Coeffs derivative(const Coeffs& c) {
    Coeffs d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * CycRat(c[k].order(), Rational(static_cast<long>(k))));
    if (d.empty()) d.push_back(Novikov(c.front().direction(), c.front().order()));
    return d;
}

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    if (!n.fits_ulong_p() || n > mpz_class(1000000000000UL)) {
        fail(ErrorCode::UnfactorableShape, "residual constant too large for rational-root search");
    }
    std::vector<mpz_class> out;
    unsigned long v = n.get_ui();
    for (unsigned long d = 1; d * d <= v; ++d) {
        if (v % d) continue;
        out.emplace_back(d);
        if (d * d != v) out.emplace_back(v / d);
    }
    return out;
}

using CycPoly = std::vector<CycRat>;

CycRat horner(const CycPoly& p, const CycRat& y) {
    CycRat acc(y.order());
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * y + p[k];
    return acc;
}

// Divides p by (y - r), assuming r is a root.
CycPoly deflate(const CycPoly& p, const CycRat& r) {
    CycPoly q(p.size() - 1, CycRat(r.order()));
    CycRat carry(r.order());
    for (std::size_t k = p.size() - 1; k-- > 0;) {
        carry = p[k + 1] + carry * r;
        q[k] = carry;
    }
    return q;
}

bool is_binomial(const CycPoly& p) {
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
        if (!p[k].is_zero()) return false;
    }
    return true;
}

// Roots of a residual polynomial with nonzero constant term, with multiplicity.
std::vector<CycRat> residual_roots(CycPoly p) {
    const int m = p.front().order();
    std::vector<CycRat> roots;
    auto take_rational_roots = [&]() {
        if (!std::all_of(p.begin(), p.end(), [](const CycRat& c) { return c.is_rational(); })) return;
        mpz_class den = 1;
        for (const auto& c : p) den = lcm(den, c.rational_part().get_den());
        mpz_class a0 = Rational(p.front().rational_part() * den).get_num();
        mpz_class ad = Rational(p.back().rational_part() * den).get_num();
        for (const auto& num : divisors(a0)) {
            for (const auto& dd : divisors(ad)) {
                for (int sign : {1, -1}) {
                    Rational cand{mpz_class(num * sign), dd};
                    cand.canonicalize();
                    CycRat y(m, cand);
                    while (p.size() > 1 && horner(p, y).is_zero()) {
                        roots.push_back(y);
                        p = deflate(p, y);
                    }
                }
            }
        }
    };
    if (p.size() > 2 && !is_binomial(p)) take_rational_roots();
    const std::size_t d = p.size() - 1;
    if (d == 0) return roots;
    if (is_binomial(p)) {
        CycRat c = -p.front() / p.back();
        for (auto& r : nth_roots(c, static_cast<int>(d))) roots.push_back(std::move(r));
        return roots;
    }
    if (d == 2) {
        CycRat disc = p[1] * p[1] - CycRat(m, 4) * p[0] * p[2];
        CycRat two_a = CycRat(m, 2) * p[2];
        if (disc.is_zero()) {
            CycRat r = -p[1] / two_a;
            roots.push_back(r);
            roots.push_back(r);
            return roots;
        }
        for (const auto& s : nth_roots(disc, 2)) roots.push_back((s - p[1]) / two_a);
        return roots;
    }
    fail(ErrorCode::UnfactorableShape, "residual polynomial of degree " + std::to_string(d) +
                                           " is neither binomial, quadratic nor split over Q");
}

std::vector<Novikov> split_upward(const Coeffs& c, const FactorOptions& options) {
    const int m = c.front().order();
    const std::size_t n = c.size() - 1;
    std::vector<Novikov> roots;

    std::size_t low = 0;
    while (low <= n && c[low].is_zero()) ++low;
    if (low >= 2) fail(ErrorCode::RepeatedRoot, "zero is a repeated root of the minimal polynomial");
    if (low == 1) roots.emplace_back(Direction::up, m);

    // Lower convex hull of (i, valuation(c_i)).
    std::vector<std::size_t> hull;
    for (std::size_t i = low; i <= n; ++i) {
        if (c[i].is_zero()) continue;
        while (hull.size() >= 2) {
            std::size_t a = hull[hull.size() - 2], b = hull.back();
            Rational va = c[a].valuation(), vb = c[b].valuation(), vi = c[i].valuation();
            // Drop b if it lies on or above the segment a -> i.
            if ((vb - va) * Rational(static_cast<long>(i - a)) >= (vi - va) * Rational(static_cast<long>(b - a))) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }

    std::vector<Novikov> candidates;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const std::size_t i0 = hull[s], i1 = hull[s + 1];
        const Rational v0 = c[i0].valuation();
        Rational slope = (c[i1].valuation() - v0) / Rational(static_cast<long>(i1 - i0));
        const Rational e = -slope;
        if (e.get_den() > options.max_denominator) {
            fail(ErrorCode::RootNotInField, "root exponent " + to_string(e) + " exceeds the denominator bound " +
                                                std::to_string(options.max_denominator));
        }
        CycPoly residual(i1 - i0 + 1, CycRat(m));
        for (std::size_t i = i0; i <= i1; ++i) {
            if (c[i].is_zero()) continue;
            Rational on_line = v0 + slope * Rational(static_cast<long>(i - i0));
            if (c[i].valuation() == on_line) residual[i - i0] = c[i].coefficient(on_line);
        }
        for (const auto& y : residual_roots(residual)) {
            Novikov r = Novikov::monomial(y, e, Direction::up);
            if (std::find(candidates.begin(), candidates.end(), r) == candidates.end()) candidates.push_back(r);
        }
    }

    Coeffs trimmed(c.begin() + static_cast<long>(low), c.end());
    Coeffs dp = derivative(c);
    for (const auto& r : candidates) {
        if (!evaluate(trimmed, r).is_zero()) {
            fail(ErrorCode::UnfactorableShape, "root candidate " + r.to_string() + " is not exact; roots are not monomials");
        }
        if (evaluate(dp, r).is_zero()) fail(ErrorCode::RepeatedRoot, "repeated root " + r.to_string());
        roots.push_back(r);
    }
    if (roots.size() != n) fail(ErrorCode::UnfactorableShape, "found " + std::to_string(roots.size()) + " of " + std::to_string(n) + " roots");
    return roots;
}

}  // namespace

std::vector<Novikov> factor_split(const Polynomial& p, const FactorOptions& options) {
    if (p.coeffs.size() < 2) return {};
    const Direction dir = p.coeffs.back().direction();
    Coeffs c;
    for (const auto& f : p.coeffs) {
        if (!f.is_finite_sum()) fail(ErrorCode::UnfactorableShape, "coefficient " + f.to_string() + " is not a finite sum");
        c.push_back(f.numerator());
    }
    const Novikov lead = c.back();
    if (!lead.is_monomial()) fail(ErrorCode::UnfactorableShape, "leading coefficient is not a unit monomial");
    Novikov lead_inv = nov_invert(lead, Rational(1));
    for (auto& x : c) x *= lead_inv;
    if (dir == Direction::up) return split_upward(c, options);
    for (auto& x : c) x = x.rescaled(Rational(-1), Direction::up);
    auto roots = split_upward(c, options);
    for (auto& r : roots) r = r.rescaled(Rational(-1), Direction::down);
    return roots;
}

Element default_generator(const QuantumAlgebra& a) {
    if (a.default_generator) return *a.default_generator;
    const int target = a.side() == Side::cohomology ? 2 : a.dim_manifold() - 2;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.basis()[i].degree == target) return a.basis_element(i);
    }
    fail(ErrorCode::NotCyclic, "algebra '" + a.name() + "' has no degree-2 class to use as generator");
}

namespace {

// Orbits of roots under T^(1/D) -> zeta_D T^(1/D), i.e. c T^e -> c zeta_D^(eD) T^e.
std::vector<std::vector<std::size_t>> exponent_galois_orbits(const std::vector<Novikov>& roots, int m) {
    mpz_class D = 1;
    for (const auto& r : roots) {
        for (const auto& [e, c] : r.terms()) D = lcm(D, e.get_den());
    }
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<bool> seen(roots.size(), false);
    if (D == 1) {
        for (std::size_t i = 0; i < roots.size(); ++i) orbits.push_back({i});
        return orbits;
    }
    const long d = D.get_si();
    auto zeta = primitive_root_of_unity(m, static_cast<int>(d));
    if (!zeta) fail(ErrorCode::RootNotInField, "conjugating roots needs a primitive " + std::to_string(d) + "-th root of unity");
    auto conjugate = [&](const Novikov& r) {
        Novikov out(r.direction(), r.order());
        for (const auto& [e, c] : r.terms()) {
            Rational k = e * D;
            out.add_term(e, c * pow(*zeta, k.get_num().get_si()));
        }
        return out;
    };
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit;
        Novikov r = roots[i];
        for (long step = 0; step < d; ++step) {
            auto it = std::find(roots.begin(), roots.end(), r);
            if (it == roots.end()) fail(ErrorCode::RootNotInField, "root set is not closed under conjugation");
            std::size_t j = static_cast<std::size_t>(it - roots.begin());
            if (seen[j]) break;
            seen[j] = true;
            orbit.push_back(j);
            r = conjugate(r);
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace

IdempotentDecomposition decompose(const QuantumAlgebra& a, const Element& generator, const DecomposeOptions& options) {
    const auto& field = a.field();
    IdempotentDecomposition out;
    out.generator = generator;
    out.minimal_polynomial = min_poly(a, generator);
    if (out.minimal_polynomial.degree() < a.dim()) {
        fail(ErrorCode::NotCyclic, "powers of " + to_string(a, generator) + " span only " +
                                       std::to_string(out.minimal_polynomial.degree()) + " of " + std::to_string(a.dim()) +
                                       " dimensions");
    }
    out.roots = factor_split(out.minimal_polynomial, options.factor);

    const std::size_t n = out.roots.size();
    const Element one = a.identity();
    std::vector<FractionVector> lagrange;
    for (std::size_t i = 0; i < n; ++i) {
        Element numerator = one;
        Novikov denominator = field.one();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            numerator = qmul(a, numerator, subtract(generator, scale(one, out.roots[j])));
            denominator *= out.roots[i] - out.roots[j];
        }
        FractionVector e;
        for (const auto& c : numerator) e.push_back(Fraction(c) / Fraction(denominator));
        lagrange.push_back(std::move(e));
    }

    out.root_groups = field.kind == CoefficientKind::laurent ? exponent_galois_orbits(out.roots, field.m)
                                                             : std::vector<std::vector<std::size_t>>{};
    if (out.root_groups.empty()) {
        for (std::size_t i = 0; i < n; ++i) out.root_groups.push_back({i});
    }
    for (const auto& group : out.root_groups) {
        FractionVector sum(a.dim(), Fraction(field.direction(), field.m));
        for (std::size_t i : group) {
            for (std::size_t k = 0; k < a.dim(); ++k) sum[k] += lagrange[i][k];
        }
        Element e;
        for (const auto& f : sum) {
            if (!f.is_finite_sum()) out.exact = false;
            e.push_back(f.expand(options.precision));
        }
        out.idempotents.push_back(std::move(e));
        out.factor_dims.push_back(static_cast<int>(group.size()));
    }
    if (out.exact && !verify_decomposition(a, out)) {
        fail(ErrorCode::Internal, "idempotents failed the completeness or orthogonality check");
    }
    return out;
}

bool verify_decomposition(const QuantumAlgebra& a, const IdempotentDecomposition& d) {
    Element sum = a.zero();
    for (const auto& e : d.idempotents) sum = add(sum, e);
    if (sum != a.identity()) return false;
    for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
        for (std::size_t j = i; j < d.idempotents.size(); ++j) {
            Element p = qmul(a, d.idempotents[i], d.idempotents[j]);
            if (i == j ? p != d.idempotents[i] : !is_zero(p)) return false;
        }
    }
    return true;
}

}  // namespace qht
