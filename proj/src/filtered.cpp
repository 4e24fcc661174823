#include "qht/filtered.hpp"

#include "qht/linalg.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

namespace qht {

CappedGenerator recap(const CappedGenerator& g, long k, const Rational& lambda0, int chern) {
    CappedGenerator r = g;
    r.action -= Rational(k) * lambda0;
    r.index -= static_cast<int>(2 * k * chern);
    r.cap_offset += k;
    return r;
}

CoefficientField laurent_homology_field(const Rational& lambda0, int chern, int m) {
    CoefficientField f;
    f.kind = CoefficientKind::laurent;
    f.side = Side::homology;
    f.lambda0 = lambda0;
    f.chern = chern;
    f.m = m;
    return f;
}

std::vector<DifferentialEntry> FilteredComplex::entries() const {
    std::vector<DifferentialEntry> out;
    for (std::size_t j = 0; j < size(); ++j) {
        for (std::size_t i = 0; i < size(); ++i) {
            if (!columns_[j][i].is_zero()) out.push_back({j, i, columns_[j][i]});
        }
    }
    return out;
}

Rational FilteredComplex::level(std::size_t i, const Novikov& c) const {
    return generators_.at(i).action + field_.action_unit() * c.valuation();
}

Rational FilteredComplex::max_action(const Chain& z) const {
    std::optional<Rational> best;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i].is_zero()) continue;
        Rational l = level(i, z[i]);
        if (!best || l > *best) best = l;
    }
    if (!best) fail(ErrorCode::ZeroElement, "action of the zero chain is undefined");
    return *best;
}

Chain FilteredComplex::boundary(const Chain& z) const {
    if (z.size() != size()) fail(ErrorCode::DimensionMismatch, "chain length does not match the complex");
    Chain out = zero_chain();
    for (std::size_t j = 0; j < size(); ++j) {
        if (z[j].is_zero()) continue;
        for (std::size_t i = 0; i < size(); ++i) {
            if (!columns_[j][i].is_zero()) out[i] += z[j] * columns_[j][i];
        }
    }
    return out;
}

Chain FilteredComplex::generator_chain(std::size_t i) const {
    Chain z = zero_chain();
    z.at(i) = field_.one();
    return z;
}

FilteredComplex build_complex(std::vector<CappedGenerator> generators, const std::vector<DifferentialEntry>& entries,
                              const CoefficientField& field) {
    if (field.side != Side::homology) fail(ErrorCode::SchemaError, "filtered complexes use homology-oriented scalars");
    FilteredComplex c;
    c.field_ = field;
    c.generators_ = std::move(generators);
    const std::size_t n = c.generators_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (c.generators_[i].orbit_id == c.generators_[j].orbit_id) {
                fail(ErrorCode::SchemaError, "duplicate orbit id '" + c.generators_[i].orbit_id + "'");
            }
        }
    }
    c.columns_.assign(n, Chain(n, field.zero()));
    for (const auto& e : entries) {
        if (e.from >= n || e.to >= n) fail(ErrorCode::SchemaError, "differential entry refers to a missing generator");
        if (!e.value.is_exact()) fail(ErrorCode::SchemaError, "differential entries must be exact finite sums");
        if (e.value.direction() != field.direction()) {
            fail(ErrorCode::MixedDirections, "differential entry has the wrong orientation");
        }
        c.columns_[e.from][e.to] += e.value.lifted(field.m);
    }

    const Rational unit = field.action_unit();
    const Rational deg_unit = field.degree_unit();
    for (std::size_t j = 0; j < n; ++j) {
        const auto& src = c.generators_[j];
        for (std::size_t i = 0; i < n; ++i) {
            const auto& dst = c.generators_[i];
            for (const auto& [e, coeff] : c.columns_[j][i].terms()) {
                const std::string where = src.orbit_id + " -> " + dst.orbit_id;
                if (!(dst.action + unit * e < src.action)) {
                    fail(ErrorCode::ActionNonDecreasing, "differential does not lower action on " + where);
                }
                if (Rational(dst.index) + deg_unit * e != Rational(src.index - 1)) {
                    fail(ErrorCode::GradingViolation, "differential does not lower index by 1 on " + where);
                }
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        Chain dd = c.boundary(c.columns_[j]);
        for (const auto& x : dd) {
            if (!x.is_zero()) {
                fail(ErrorCode::BoundarySquareNonzero, "d^2 is nonzero on " + c.generators_[j].orbit_id);
            }
        }
    }
    for (std::size_t i = 0; i < n && c.nice_; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (is_integer((c.generators_[i].action - c.generators_[j].action) / field.lambda0)) {
                c.nice_ = false;
                break;
            }
        }
    }
    return c;
}

namespace {

FractionVector to_fractions(const Chain& z) { return FractionVector(z.begin(), z.end()); }

Rational fraction_level(const FilteredComplex& c, std::size_t i, const Fraction& x) {
    return c.generators()[i].action + c.field().action_unit() * x.valuation();
}

// Highest filtration level; ties go to the earliest generator.
std::optional<std::size_t> top_generator(const FilteredComplex& c, const FractionVector& v) {
    std::optional<std::size_t> best;
    Rational best_level;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Rational l = fraction_level(c, i, v[i]);
        if (!best || l > best_level) {
            best = i;
            best_level = l;
        }
    }
    return best;
}

void eliminate(FractionVector& v, const FractionVector& row, std::size_t pivot) {
    if (v[pivot].is_zero()) return;
    Fraction f = v[pivot] / row[pivot];
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!row[k].is_zero()) v[k] -= f * row[k];
    }
}

struct PivotRow {
    std::size_t pivot;
    FractionVector value;
};

// Gauss-Jordan basis of the boundaries in which each row's pivot is a top-level term and
// no other row touches it; reducing against it realises the minimum over representatives.
std::vector<PivotRow> reduced_boundaries(const FilteredComplex& c) {
    std::vector<PivotRow> rows;
    for (const auto& column : c.columns()) {
        FractionVector v = to_fractions(column);
        for (const auto& r : rows) eliminate(v, r.value, r.pivot);
        auto pivot = top_generator(c, v);
        if (!pivot) continue;
        for (auto& r : rows) eliminate(r.value, v, *pivot);
        rows.push_back({*pivot, std::move(v)});
    }
    return rows;
}

bool is_zero_chain(const Chain& z) {
    return std::all_of(z.begin(), z.end(), [](const Novikov& x) { return x.is_zero(); });
}

}  // namespace

Rational rho(const FilteredComplex& c, const Chain& z) {
    if (z.size() != c.size()) fail(ErrorCode::DimensionMismatch, "chain length does not match the complex");
    for (const auto& x : z) {
        if (!x.is_exact()) fail(ErrorCode::SchemaError, "cycle coefficients must be exact finite sums");
    }
    if (!is_zero_chain(c.boundary(z))) fail(ErrorCode::NotACycle, "chain is not a cycle");
    FractionVector v = to_fractions(z);
    for (const auto& r : reduced_boundaries(c)) eliminate(v, r.value, r.pivot);
    auto top = top_generator(c, v);
    if (!top) fail(ErrorCode::NullHomologous, "class is zero in homology");
    return fraction_level(c, *top, v[*top]);
}

std::vector<Rational> spectrum(const FilteredComplex& c, const Rational& lo, const Rational& hi) {
    std::set<Rational> values;
    const Rational& period = c.field().lambda0;
    for (const auto& g : c.generators()) {
        mpz_class k;
        Rational start = (lo - g.action) / period;
        mpz_cdiv_q(k.get_mpz_t(), start.get_num_mpz_t(), start.get_den_mpz_t());
        for (Rational a = g.action + Rational(k) * period; a <= hi; a += period) values.insert(a);
    }
    return {values.begin(), values.end()};
}

FilteredComplex shift(const FilteredComplex& c, const Rational& amount) {
    auto gens = c.generators();
    for (auto& g : gens) g.action += amount;
    return build_complex(std::move(gens), c.entries(), c.field());
}

Chain extend_chain(const FilteredComplex& c, const Chain& z) {
    Chain out;
    out.reserve(z.size());
    for (const auto& x : z) out.push_back(iota(c.field(), x));
    return out;
}

FilteredComplex extend_scalars_complex(const FilteredComplex& c) {
    if (c.field().kind != CoefficientKind::laurent) return c;
    CoefficientField field = c.field();
    field.kind = CoefficientKind::novikov;
    auto entries = c.entries();
    for (auto& e : entries) e.value = iota(c.field(), e.value);
    return build_complex(c.generators(), entries, field);
}

std::vector<Chain> homology_basis(const FilteredComplex& c) {
    const std::size_t n = c.size();
    const Direction dir = c.field().direction();
    const int m = c.field().m;
    IncrementalEchelon columns(n, dir, m);
    std::vector<std::size_t> stored;
    std::vector<FractionVector> cycles;
    for (std::size_t j = 0; j < n; ++j) {
        auto dependence = columns.insert(to_fractions(c.columns()[j]));
        if (!dependence) {
            stored.push_back(j);
            continue;
        }
        FractionVector k(n, Fraction(dir, m));
        k[j] = Fraction::one(dir, m);
        for (std::size_t s = 0; s < dependence->size(); ++s) k[stored[s]] -= (*dependence)[s];
        cycles.push_back(std::move(k));
    }

    IncrementalEchelon span(n, dir, m);
    for (const auto& col : c.columns()) span.insert(to_fractions(col));
    std::vector<Chain> basis;
    for (const auto& k : cycles) {
        if (span.insert(k)) continue;
        // Clear denominators so the representative is a finite sum.
        Novikov scale = c.field().one();
        for (const auto& x : k) {
            if (!x.is_zero()) scale *= x.denominator();
        }
        Chain z;
        for (const auto& x : k) {
            Fraction y = x * Fraction(scale);
            if (!y.is_finite_sum()) fail(ErrorCode::Internal, "failed to clear denominators");
            z.push_back(y.expand(Rational(0)));
        }
        basis.push_back(std::move(z));
    }
    return basis;
}

namespace {

using Matrix = std::vector<Chain>;  // column-major

Matrix multiply(const Matrix& a, const Matrix& b, const Novikov& zero) {
    const std::size_t n = a.size();
    Matrix out(n, Chain(n, zero));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (b[j][k].is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) {
                if (!a[k][i].is_zero()) out[j][i] += a[k][i] * b[j][k];
            }
        }
    }
    return out;
}

Rational pick_coefficient(std::mt19937_64& rng) {
    static const std::array<Rational, 8> choices = {Rational(1),        Rational(-1), Rational(2),
                                                    Rational(-2),       Rational(3),  make_rational(1, 2),
                                                    make_rational(-1, 2), make_rational(2, 3)};
    return choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
}

long pick(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

RandomComplex random_complex(std::uint64_t seed, std::size_t size_bound) {
    if (size_bound == 0 || size_bound > kMaxRandomComplexSize) {
        fail(ErrorCode::SchemaError, "random complex size bound must be in [1, " +
                                         std::to_string(kMaxRandomComplexSize) + "]");
    }
    std::mt19937_64 rng(seed);
    static const std::array<Rational, 4> lambdas = {Rational(1), Rational(2), make_rational(1, 2), make_rational(3, 2)};
    const Rational lambda0 = lambdas[pick(rng, 0, 3)];
    const int chern = static_cast<int>(pick(rng, 1, 3));
    const CoefficientField field = laurent_homology_field(lambda0, chern);

    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(size_bound)));
    const std::size_t pairs = static_cast<std::size_t>(pick(rng, 0, static_cast<long>((n - 1) / 2)));

    // Distinct offsets in [0, 1) keep actions apart modulo lambda0; occasionally reuse one.
    std::vector<long> slots(n);
    std::iota(slots.begin(), slots.end(), 0L);
    std::shuffle(slots.begin(), slots.end(), rng);
    if (n > 1 && pick(rng, 0, 7) == 0) slots[1] = slots[0];
    auto offset = [&](std::size_t i) { return make_rational(slots[i], static_cast<long>(n)); };

    std::vector<CappedGenerator> gens(n);
    for (std::size_t i = 0; i < n; ++i) gens[i].orbit_id = "z" + std::to_string(i);
    std::vector<DifferentialEntry> entries;
    std::vector<std::size_t> unpaired;
    for (std::size_t p = 0; p < pairs; ++p) {
        const std::size_t x = 2 * p, y = 2 * p + 1;
        const long e = pick(rng, -1, 1);
        const long kx = pick(rng, -2, 2);
        const long ky = kx - e - (offset(y) >= offset(x) ? 1 : 0) - pick(rng, 0, 1);
        gens[x].action = lambda0 * (Rational(kx) + offset(x));
        gens[y].action = lambda0 * (Rational(ky) + offset(y));
        gens[x].index = static_cast<int>(pick(rng, -2, 4));
        gens[y].index = gens[x].index - 1 - static_cast<int>(2 * chern * e);
        entries.push_back({x, y, field.monomial(pick_coefficient(rng), Rational(e))});
    }
    for (std::size_t z = 2 * pairs; z < n; ++z) {
        gens[z].action = lambda0 * (Rational(pick(rng, -2, 2)) + offset(z));
        gens[z].index = static_cast<int>(pick(rng, -2, 4));
        unpaired.push_back(z);
    }

    const Novikov zero = field.zero();
    Matrix d(n, Chain(n, zero));
    for (const auto& e : entries) d[e.from][e.to] = e.value;

    // Strictly upper triangular, level-lowering perturbation: g'_j = g_j + sum_{i>j} u_ij g_i.
    Matrix u(n, Chain(n, zero));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j + 1; i < n; ++i) {
            const int gap = gens[j].index - gens[i].index;
            if (gap % (2 * chern) != 0) continue;
            const long e = gap / (2 * chern);
            if (!(gens[i].action + lambda0 * Rational(e) < gens[j].action)) continue;
            if (pick(rng, 0, 1) == 0) continue;
            u[j][i] = field.monomial(pick_coefficient(rng), Rational(e));
        }
    }
    Matrix g = u, g_inv(n, Chain(n, zero)), power(n, Chain(n, zero));
    for (std::size_t i = 0; i < n; ++i) {
        g[i][i] += field.one();
        power[i][i] = field.one();
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) g_inv[j][i] += power[j][i];
        }
        power = multiply(power, u, zero);
        for (auto& col : power) {
            for (auto& x : col) x = -x;
        }
    }
    Matrix conjugated = multiply(g_inv, multiply(d, g, zero), zero);
    std::vector<DifferentialEntry> new_entries;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!conjugated[j][i].is_zero()) new_entries.push_back({j, i, conjugated[j][i]});
        }
    }

    RandomComplex out{build_complex(gens, new_entries, field), {}, {}};
    for (std::size_t z : unpaired) {
        out.classes.push_back(g_inv[z]);
        out.expected_rho.push_back(gens[z].action);
    }
    return out;
}

FilteredComplex morse_model(const QuantumAlgebra& a, bool with_cancelling_pair) {
    if (a.field().kind != CoefficientKind::laurent || a.side() != Side::cohomology) {
        fail(ErrorCode::SchemaError, "the model complex is built from a Laurent cohomology algebra");
    }
    const CoefficientField field = laurent_homology_field(a.field().lambda0, a.field().chern, a.field().m);
    std::vector<CappedGenerator> gens;
    for (const auto& b : a.basis()) {
        gens.push_back({b.dual.empty() ? "PD(" + b.name + ")" : b.dual, Rational(0), a.dim_manifold() - b.degree, 0});
    }
    std::vector<DifferentialEntry> entries;
    if (with_cancelling_pair) {
        gens.push_back({"x", make_rational(1, 2), 1, 0});
        gens.push_back({"y", make_rational(-1, 3), 0, 0});
        entries.push_back({gens.size() - 2, gens.size() - 1, field.one()});
    }
    return build_complex(std::move(gens), entries, field);
}

Chain morse_class(const QuantumAlgebra& a, const FilteredComplex& model, const Element& x) {
    Chain z = poincare_dual(a, x);
    z.resize(model.size(), model.field().zero());
    return z;
}

}  // namespace qht
