#include "qht/algebra.hpp"

#include "qht/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qht {

std::string_view to_string(CoefficientKind kind) noexcept {
    return kind == CoefficientKind::laurent ? "laurent" : "novikov";
}

Rational CoefficientField::degree_unit() const { return Rational(2 * chern) * action_unit() / lambda0; }

std::string CoefficientField::variable() const {
    if (kind == CoefficientKind::novikov) return "T";
    return side == Side::cohomology ? "t" : "s";
}

Novikov CoefficientField::monomial(const Rational& coeff, const Rational& exponent) const {
    if (coeff == 0) return zero();
    return Novikov::monomial(CycRat(m, coeff), exponent, direction());
}

QuantumAlgebra::QuantumAlgebra(std::string name, int dim_manifold, CoefficientField field, std::vector<BasisVector> basis)
    : name_(std::move(name)), dim_m_(dim_manifold), field_(std::move(field)), basis_(std::move(basis)) {
    if (basis_.empty()) fail(ErrorCode::SchemaError, "algebra '" + name_ + "' has an empty basis");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (basis_[i].name == basis_[j].name) fail(ErrorCode::SchemaError, "duplicate basis name '" + basis_[i].name + "'");
        }
    }
    table_.assign(basis_.size() * basis_.size(), zero());
}

std::optional<std::size_t> QuantumAlgebra::index_of(std::string_view basis_name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name == basis_name) return i;
    }
    for (const auto& [alias, i] : aliases_) {
        if (alias == basis_name) return i;
    }
    return std::nullopt;
}

void QuantumAlgebra::set_product(std::size_t i, std::size_t j, Element value) {
    if (i >= dim() || j >= dim() || value.size() != dim()) {
        fail(ErrorCode::DimensionMismatch, "structure constant out of range in '" + name_ + "'");
    }
    for (const auto& c : value) {
        if (c.direction() != field_.direction() || c.order() != field_.m) {
            fail(ErrorCode::SchemaError, "structure constant scalar does not match the coefficient field");
        }
        if (!c.is_exact()) fail(ErrorCode::SchemaError, "structure constants must be exact");
    }
    table_[i * dim() + j] = std::move(value);
}

std::optional<std::size_t> QuantumAlgebra::identity_index() const {
    const int target = field_.side == Side::cohomology ? 0 : dim_m_;
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].degree != target) continue;
        if (found) return std::nullopt;
        found = i;
    }
    return found;
}

Element QuantumAlgebra::identity() const {
    auto id = identity_index();
    if (!id) fail(ErrorCode::MissingIdentity, "algebra '" + name_ + "' has no distinguished identity class");
    return basis_element(*id);
}

Element QuantumAlgebra::zero() const { return Element(dim(), field_.zero()); }

Element QuantumAlgebra::basis_element(std::size_t i) const {
    Element e = zero();
    e.at(i) = field_.one();
    return e;
}

std::vector<std::string> QuantumAlgebra::aliases_for(std::size_t i) const {
    std::vector<std::string> out;
    for (const auto& [alias, j] : aliases_) {
        if (j == i) out.push_back(alias);
    }
    return out;
}

Element qmul(const QuantumAlgebra& a, const Element& x, const Element& y) {
    if (x.size() != a.dim() || y.size() != a.dim()) {
        fail(ErrorCode::DimensionMismatch, "element length does not match algebra '" + a.name() + "'");
    }
    return multiply(a, x, y);
}

Element add(const Element& x, const Element& y) {
    if (x.size() != y.size()) fail(ErrorCode::DimensionMismatch, "adding elements of different length");
    Element r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

Element subtract(const Element& x, const Element& y) {
    if (x.size() != y.size()) fail(ErrorCode::DimensionMismatch, "subtracting elements of different length");
    Element r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

Element scale(const Element& x, const Novikov& c) {
    Element r = x;
    for (auto& v : r) v *= c;
    return r;
}

bool is_zero(const Element& x) {
    return std::all_of(x.begin(), x.end(), [](const Novikov& c) { return c.is_zero(); });
}

namespace {

std::string cell(const QuantumAlgebra& a, std::size_t i, std::size_t j) {
    return a.basis()[i].name + "*" + a.basis()[j].name;
}

void check_grading(const QuantumAlgebra& a) {
    const auto& basis = a.basis();
    const int offset = a.side() == Side::cohomology ? 0 : a.dim_manifold();
    const Rational unit = a.field().degree_unit();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Element& p = a.product(i, j);
            for (std::size_t k = 0; k < a.dim(); ++k) {
                for (const auto& [e, c] : p[k].terms()) {
                    Rational lhs(basis[i].degree + basis[j].degree - offset);
                    Rational rhs = Rational(basis[k].degree) + unit * e;
                    if (lhs != rhs) {
                        fail(ErrorCode::GradingViolation, "term " + basis[k].name + "*" + a.field().variable() + "^(" +
                                                              to_string(e) + ") in " + cell(a, i, j) +
                                                              " has the wrong degree");
                    }
                }
            }
        }
    }
}

void check_commutative(const QuantumAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            if (a.product(i, j) != a.product(j, i)) {
                fail(ErrorCode::NonCommutative, cell(a, i, j) + " differs from " + cell(a, j, i));
            }
        }
    }
}

void check_identity(const QuantumAlgebra& a) {
    auto id = a.identity_index();
    if (!id) fail(ErrorCode::MissingIdentity, "no unique basis class of identity degree in '" + a.name() + "'");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.product(*id, i) != a.basis_element(i) || a.product(i, *id) != a.basis_element(i)) {
            fail(ErrorCode::MissingIdentity, a.basis()[*id].name + " does not act as identity on " + a.basis()[i].name);
        }
    }
}

void check_associative(const QuantumAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Element& ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Element left = qmul(a, ij, a.basis_element(k));
                Element right = qmul(a, a.basis_element(i), a.product(j, k));
                if (left != right) {
                    fail(ErrorCode::NonAssociative, "(" + cell(a, i, j) + ")*" + a.basis()[k].name + " != " +
                                                        a.basis()[i].name + "*(" + cell(a, j, k) + ")");
                }
            }
        }
    }
}

void check_relations(const QuantumAlgebra& a) {
    for (const auto& rel : a.relations) {
        if (rel.factors.empty()) fail(ErrorCode::SchemaError, "relation without factors");
        Element lhs = parse_element(a, rel.factors.front());
        for (std::size_t f = 1; f < rel.factors.size(); ++f) lhs = qmul(a, lhs, parse_element(a, rel.factors[f]));
        Element rhs = parse_element(a, rel.equals);
        if (lhs != rhs) {
            std::string product;
            for (const auto& f : rel.factors) product += (product.empty() ? "" : "*") + f;
            fail(ErrorCode::RelationViolated, product + " = " + to_string(a, lhs) + ", expected " + rel.equals);
        }
    }
}

}  // namespace

void validate(const QuantumAlgebra& a) {
    check_grading(a);
    check_commutative(a);
    check_identity(a);
    check_associative(a);
    check_relations(a);
}

std::optional<Error> find_violation(const QuantumAlgebra& a) {
    try {
        validate(a);
    } catch (const Error& e) {
        return e;
    }
    return std::nullopt;
}

Novikov dual_scalar(const CoefficientField& field, const Novikov& x) {
    return x.rescaled(Rational(-1), opposite(field.direction()));
}

QuantumAlgebra dual_algebra(const QuantumAlgebra& a) {
    CoefficientField field = a.field();
    field.side = a.side() == Side::cohomology ? Side::homology : Side::cohomology;
    std::vector<BasisVector> basis;
    for (const auto& b : a.basis()) {
        std::string name = b.dual.empty() ? "PD(" + b.name + ")" : b.dual;
        basis.push_back({name, a.dim_manifold() - b.degree, b.name});
    }
    std::string name = a.name();
    QuantumAlgebra d(name, a.dim_manifold(), field, std::move(basis));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) d.set_product(i, j, poincare_dual(a, a.product(i, j)));
    }
    d.kappa = a.kappa;
    if (a.default_generator) d.default_generator = poincare_dual(a, *a.default_generator);
    return d;
}

Element poincare_dual(const QuantumAlgebra& a, const Element& x) {
    Element r;
    r.reserve(x.size());
    for (const auto& c : x) r.push_back(dual_scalar(a.field(), c));
    return r;
}

Rational valuation_qh(const QuantumAlgebra& a, const Element& x) {
    std::optional<Rational> best;
    for (const auto& c : x) {
        if (c.is_zero()) continue;
        Rational v = c.valuation();
        if (!best) best = v;
        else if (a.field().direction() == Direction::up ? v < *best : v > *best) best = v;
    }
    if (!best) fail(ErrorCode::ZeroElement, "valuation of the zero element is undefined");
    return *best * a.field().action_unit();
}

Novikov iota(const CoefficientField& field, const Novikov& x) {
    if (field.kind == CoefficientKind::novikov) return x;
    return x.rescaled(field.lambda0, field.direction());
}

Element iota(const QuantumAlgebra& a, const Element& x) {
    Element r;
    r.reserve(x.size());
    for (const auto& c : x) r.push_back(iota(a.field(), c));
    return r;
}

QuantumAlgebra extend_ring(const QuantumAlgebra& a) {
    if (a.field().kind != CoefficientKind::laurent) return a;
    CoefficientField field = a.field();
    field.kind = CoefficientKind::novikov;
    QuantumAlgebra e(a.name(), a.dim_manifold(), field, a.basis());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) e.set_product(i, j, iota(a, a.product(i, j)));
    }
    for (const auto& [alias, i] : a.aliases()) e.add_alias(alias, i);
    e.kappa = a.kappa;
    if (a.default_generator) e.default_generator = iota(a, *a.default_generator);
    return e;
}

namespace {

struct ProductLayout {
    CoefficientField field;
    Rational scale_a;
    Rational scale_b;
};

ProductLayout product_layout(const QuantumAlgebra& a, const QuantumAlgebra& b) {
    const auto& fa = a.field();
    const auto& fb = b.field();
    if (fa.side != fb.side) fail(ErrorCode::MixedDirections, "product of cohomology and homology algebras");
    if (fa.kind != fb.kind) fail(ErrorCode::SchemaError, "product of algebras over different coefficient fields");
    if (fa.m != fb.m) fail(ErrorCode::MismatchedCyclotomicOrder, "product of algebras over different cyclotomic fields");
    Rational kappa_a = fa.lambda0 / fa.chern;
    Rational kappa_b = fb.lambda0 / fb.chern;
    if (kappa_a != kappa_b) {
        fail(ErrorCode::MonotonicityMismatch, "monotonicity constants " + to_string(kappa_a) + " and " +
                                                  to_string(kappa_b) + " differ");
    }
    ProductLayout layout;
    layout.field = fa;
    layout.field.chern = std::gcd(fa.chern, fb.chern);
    layout.field.lambda0 = kappa_a * layout.field.chern;
    const bool rescale = fa.kind == CoefficientKind::laurent;
    layout.scale_a = rescale ? make_rational(fa.chern, layout.field.chern) : Rational(1);
    layout.scale_b = rescale ? make_rational(fb.chern, layout.field.chern) : Rational(1);
    return layout;
}

}  // namespace

QuantumAlgebra product_ring(const QuantumAlgebra& a, const QuantumAlgebra& b) {
    ProductLayout layout = product_layout(a, b);
    const Direction dir = layout.field.direction();
    std::vector<BasisVector> basis;
    for (const auto& x : a.basis()) {
        for (const auto& y : b.basis()) {
            std::string dual = x.dual.empty() || y.dual.empty() ? std::string() : x.dual + "⊗" + y.dual;
            basis.push_back({x.name + "⊗" + y.name, x.degree + y.degree, dual});
        }
    }
    QuantumAlgebra p(a.name() + "x" + b.name(), a.dim_manifold() + b.dim_manifold(), layout.field, std::move(basis));
    const std::size_t nb = b.dim();
    for (std::size_t i1 = 0; i1 < a.dim(); ++i1) {
        for (std::size_t j1 = 0; j1 < nb; ++j1) {
            for (std::size_t i2 = 0; i2 < a.dim(); ++i2) {
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    const Element& pa = a.product(i1, i2);
                    const Element& pb = b.product(j1, j2);
                    Element out = p.zero();
                    for (std::size_t k = 0; k < a.dim(); ++k) {
                        if (pa[k].is_zero()) continue;
                        Novikov ca = pa[k].rescaled(layout.scale_a, dir);
                        for (std::size_t l = 0; l < nb; ++l) {
                            if (pb[l].is_zero()) continue;
                            out[k * nb + l] = ca * pb[l].rescaled(layout.scale_b, dir);
                        }
                    }
                    p.set_product(i1 * nb + j1, i2 * nb + j2, std::move(out));
                }
            }
        }
    }
    return p;
}

Element sigma_embed(const QuantumAlgebra& a, const QuantumAlgebra& b, const Element& x) {
    ProductLayout layout = product_layout(a, b);
    auto id = b.identity_index();
    if (!id) fail(ErrorCode::MissingIdentity, "second factor has no identity class");
    Element out(a.dim() * b.dim(), layout.field.zero());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i * b.dim() + *id] = x.at(i).rescaled(layout.scale_a, layout.field.direction());
    return out;
}

bool is_ring_isomorphism(const QuantumAlgebra& a, const QuantumAlgebra& b, const std::vector<Element>& images) {
    if (a.dim() != b.dim() || images.size() != a.dim()) return false;
    if (!(a.field() == b.field())) return false;
    auto image_of = [&](const Element& x) {
        Element r = b.zero();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (!x[i].is_zero()) r = add(r, scale(images[i], x[i]));
        }
        return r;
    };
    if (image_of(a.identity()) != b.identity()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (qmul(b, images[i], images[j]) != image_of(a.product(i, j))) return false;
        }
    }
    std::vector<FractionVector> rows;
    for (const auto& img : images) rows.emplace_back(img.begin(), img.end());
    return rank(rows, a.field().direction(), a.field().m) == a.dim();
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Splits at top-level '+'/'-' that are not part of an exponent; each piece keeps its sign.
std::vector<std::string> split_terms(std::string_view text) {
    std::vector<std::string> terms;
    std::string current;
    int depth = 0;
    char prev = 0;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            current += ch;
            continue;
        }
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        bool sign = (ch == '+' || ch == '-') && depth == 0 && prev != 0 && prev != '^' && prev != '*' && prev != '(';
        if (sign) {
            terms.push_back(trim(current));
            current.clear();
        }
        current += ch;
        prev = ch;
    }
    if (!trim(current).empty()) terms.push_back(trim(current));
    return terms;
}

std::vector<std::string> split_factors(std::string_view term) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char ch : term) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '*' && depth == 0) {
            out.push_back(trim(current));
            current.clear();
        } else {
            current += ch;
        }
    }
    out.push_back(trim(current));
    return out;
}

Rational parse_exponent(std::string_view text) {
    std::string t = trim(text);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = trim(std::string_view(t).substr(1, t.size() - 2));
    return parse_rational(t);
}

// Multiplies `acc` by one scalar factor: a rational, a cyclotomic unit z<m>^k, or a power of the variable.
bool apply_scalar_factor(const CoefficientField& field, const std::string& factor, Novikov& acc) {
    const std::string var = field.variable();
    if (factor.rfind(var, 0) == 0 && (factor.size() == var.size() || factor[var.size()] == '^')) {
        Rational e = factor.size() == var.size() ? Rational(1) : parse_exponent(std::string_view(factor).substr(var.size() + 1));
        acc = acc.shifted(e);
        return true;
    }
    if (factor.size() > 1 && factor[0] == 'z' && std::isdigit(static_cast<unsigned char>(factor[1]))) {
        std::size_t caret = factor.find('^');
        int order = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        long k = caret == std::string::npos ? 1 : std::stol(trim(std::string_view(factor).substr(caret + 1)));
        if (order <= 0 || field.m % order != 0) {
            fail(ErrorCode::MismatchedCyclotomicOrder, "root of unity " + factor + " is not in Q(zeta_" + std::to_string(field.m) + ")");
        }
        acc *= CycRat::zeta(field.m, k * (field.m / order));
        return true;
    }
    if (!factor.empty() && (std::isdigit(static_cast<unsigned char>(factor[0])) || factor[0] == '(')) {
        acc *= CycRat(field.m, parse_exponent(factor));
        return true;
    }
    return false;
}

std::pair<Novikov, std::string> leading_sign(const CoefficientField& field, std::string term) {
    Novikov acc = field.one();
    while (!term.empty() && (term.front() == '+' || term.front() == '-' || std::isspace(static_cast<unsigned char>(term.front())))) {
        if (term.front() == '-') acc = -acc;
        term.erase(0, 1);
    }
    return {acc, term};
}

}  // namespace

Novikov parse_scalar(const CoefficientField& field, std::string_view text) {
    Novikov total = field.zero();
    for (const auto& raw : split_terms(text)) {
        auto [acc, term] = leading_sign(field, raw);
        if (term.empty()) fail(ErrorCode::SchemaError, "empty term in scalar '" + std::string(text) + "'");
        for (const auto& f : split_factors(term)) {
            if (!apply_scalar_factor(field, f, acc)) {
                fail(ErrorCode::SchemaError, "cannot parse factor '" + f + "' in scalar '" + std::string(text) + "'");
            }
        }
        total += acc;
    }
    return total;
}

std::vector<Novikov> parse_combination(const CoefficientField& field,
                                       const std::function<std::optional<std::size_t>(std::string_view)>& lookup,
                                       std::size_t size, std::optional<std::size_t> unit, std::string_view text) {
    std::vector<Novikov> total(size, field.zero());
    const auto terms = split_terms(text);
    if (terms.empty()) fail(ErrorCode::SchemaError, "empty expression");
    for (const auto& raw : terms) {
        auto [acc, term] = leading_sign(field, raw);
        if (term.empty()) fail(ErrorCode::SchemaError, "empty term in '" + std::string(text) + "'");
        std::optional<std::size_t> index;
        for (const auto& f : split_factors(term)) {
            if (auto idx = lookup(f)) {
                if (index) fail(ErrorCode::SchemaError, "term '" + term + "' names more than one vector");
                index = idx;
            } else if (!apply_scalar_factor(field, f, acc)) {
                fail(ErrorCode::SchemaError, "unknown name or scalar '" + f + "' in '" + std::string(text) + "'");
            }
        }
        if (!index) index = unit;
        if (!index) fail(ErrorCode::SchemaError, "term '" + term + "' names no vector");
        total.at(*index) += acc;
    }
    return total;
}

Element parse_element(const QuantumAlgebra& a, std::string_view text) {
    return parse_combination(
        a.field(), [&](std::string_view name) { return a.index_of(name); }, a.dim(), a.identity_index(), text);
}

std::string to_string(const QuantumAlgebra& a, const Element& x) {
    std::string out;
    const std::string var = a.field().variable();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string s = x[i].to_string(var);
        if (s == "1") out += a.basis()[i].name;
        else out += "(" + s + ")*" + a.basis()[i].name;
    }
    return out.empty() ? "0" : out;
}

}  // namespace qht
