#pragma once

#include "qht/error.hpp"
#include "qht/fraction.hpp"
#include "qht/laurent.hpp"
#include "qht/novikov.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qht {

enum class CoefficientKind { laurent, novikov };

std::string_view to_string(CoefficientKind kind) noexcept;

/// Coefficient field of an algebra. Laurent scalars are stored as series in the
/// bare variable t or s with integer exponents; Novikov scalars are series in T.
struct CoefficientField {
    CoefficientKind kind = CoefficientKind::laurent;
    Side side = Side::cohomology;
    Rational lambda0 = 1;
    int chern = 1;
    int m = kDefaultCyclotomicOrder;

    Direction direction() const noexcept { return direction_of(side); }
    /// Action carried by one unit of exponent.
    Rational action_unit() const { return kind == CoefficientKind::laurent ? lambda0 : Rational(1); }
    /// Degree carried by one unit of exponent: 2N per copy of t or s.
    Rational degree_unit() const;
    std::string variable() const;

    Novikov zero() const { return Novikov(direction(), m); }
    Novikov one() const { return Novikov::one(direction(), m); }
    Novikov monomial(const Rational& coeff, const Rational& exponent) const;

    friend bool operator==(const CoefficientField&, const CoefficientField&) = default;
};

struct BasisVector {
    std::string name;
    int degree = 0;
    std::string dual;
};

/// Coefficient vector against the basis of an algebra.
using Element = std::vector<Novikov>;

/// A relation checked at load time: the product of `factors` equals `equals`.
struct PinnedRelation {
    std::vector<std::string> factors;
    std::string equals;
};

class QuantumAlgebra {
public:
    QuantumAlgebra() = default;
    QuantumAlgebra(std::string name, int dim_manifold, CoefficientField field, std::vector<BasisVector> basis);

    const std::string& name() const noexcept { return name_; }
    int dim_manifold() const noexcept { return dim_m_; }
    const CoefficientField& field() const noexcept { return field_; }
    Side side() const noexcept { return field_.side; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<BasisVector>& basis() const noexcept { return basis_; }
    std::optional<std::size_t> index_of(std::string_view basis_name) const;

    /// Structure constants b_i * b_j.
    const Element& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    void set_product(std::size_t i, std::size_t j, Element value);

    /// Basis index of 1 (cohomology) or [M] (homology): the unique basis vector of degree
    /// 0 or dim_M respectively.
    std::optional<std::size_t> identity_index() const;
    Element identity() const;
    Element zero() const;
    Element basis_element(std::size_t i) const;

    std::vector<std::string> aliases_for(std::size_t i) const;
    void add_alias(std::string alias, std::size_t i) { aliases_.emplace_back(std::move(alias), i); }
    const std::vector<std::pair<std::string, std::size_t>>& aliases() const noexcept { return aliases_; }

    std::vector<PinnedRelation> relations;
    std::optional<Element> default_generator;
    /// Monotonicity constant lambda0 / N if recorded separately from the normalised lambda0.
    std::optional<Rational> kappa;

private:
    std::string name_;
    int dim_m_ = 0;
    CoefficientField field_;
    std::vector<BasisVector> basis_;
    std::vector<Element> table_;
    std::vector<std::pair<std::string, std::size_t>> aliases_;
};

/// Bilinear product over any scalar type constructible from Novikov.
template <class Scalar>
std::vector<Scalar> multiply(const QuantumAlgebra& a, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    const std::size_t n = a.dim();
    std::vector<Scalar> out(n, Scalar(a.field().zero()));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            const Element& p = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (!p[k].is_zero()) out[k] += c * Scalar(p[k]);
            }
        }
    }
    return out;
}

Element qmul(const QuantumAlgebra& a, const Element& x, const Element& y);
Element add(const Element& x, const Element& y);
Element subtract(const Element& x, const Element& y);
Element scale(const Element& x, const Novikov& c);
bool is_zero(const Element& x);

/// Runs every structural check; throws the first violation found.
void validate(const QuantumAlgebra& a);

/// Like validate, but reports the violation instead of throwing.
std::optional<Error> find_violation(const QuantumAlgebra& a);

/// The dual-side algebra: basis renamed to duals, degrees dim_M - deg, t^k -> s^-k.
QuantumAlgebra dual_algebra(const QuantumAlgebra& a);
/// Coordinates of PD(x) in dual_algebra(a).
Element poincare_dual(const QuantumAlgebra& a, const Element& x);

Novikov dual_scalar(const CoefficientField& field, const Novikov& x);

/// min (cohomology) or max (homology) over components of scalar valuations, in action units.
Rational valuation_qh(const QuantumAlgebra& a, const Element& x);

/// Same basis over Lambda (or Lambda_down on the homology side), scalars mapped by iota.
QuantumAlgebra extend_ring(const QuantumAlgebra& a);
Novikov iota(const CoefficientField& field, const Novikov& x);
Element iota(const QuantumAlgebra& a, const Element& x);

/// Kunneth product. Requires equal monotonicity constants lambda0 / N.
QuantumAlgebra product_ring(const QuantumAlgebra& a, const QuantumAlgebra& b);
/// Image of x in product_ring(a, b) under x -> x (x) identity, with exponents rescaled.
Element sigma_embed(const QuantumAlgebra& a, const QuantumAlgebra& b, const Element& x);

/// Checks that the linear map sending basis i of `a` to images[i] in `b` preserves products
/// and the identity.
bool is_ring_isomorphism(const QuantumAlgebra& a, const QuantumAlgebra& b, const std::vector<Element>& images);

/// Parses a linear combination of named vectors; `lookup` maps a factor to a vector index and
/// `unit` receives bare scalar terms.
std::vector<Novikov> parse_combination(const CoefficientField& field,
                                       const std::function<std::optional<std::size_t>(std::string_view)>& lookup,
                                       std::size_t size, std::optional<std::size_t> unit, std::string_view text);

/// Parses expressions such as "a + 2*b", "h*t^-1" or "1/3*u2*T^(-2/3)".
Element parse_element(const QuantumAlgebra& a, std::string_view text);
Novikov parse_scalar(const CoefficientField& field, std::string_view text);

std::string to_string(const QuantumAlgebra& a, const Element& x);

}  // namespace qht
