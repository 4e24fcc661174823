#pragma once

#include "qht/algebra.hpp"

#include <vector>

namespace qht {

/// Polynomial in z over the fraction field, lowest degree first.
struct Polynomial {
    std::vector<Fraction> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    std::string to_string(std::string_view variable = "T") const;
};

Polynomial min_poly(const QuantumAlgebra& a, const Element& x);

struct FactorOptions {
    /// Largest denominator allowed in a root exponent.
    long max_denominator = 60;
};

/// Roots of a square-free polynomial whose Newton-polygon pieces have binomial, linear,
/// quadratic or rational-root residuals and whose roots are monomials c*T^e.
std::vector<Novikov> factor_split(const Polynomial& p, const FactorOptions& options = {});

struct IdempotentDecomposition {
    std::vector<Element> idempotents;
    std::vector<int> factor_dims;
    Element generator;
    std::vector<Novikov> roots;
    /// Indices into `roots` whose Lagrange idempotents were summed into each idempotent.
    std::vector<std::vector<std::size_t>> root_groups;
    Polynomial minimal_polynomial;
    /// False when some idempotent needed a truncated series expansion.
    bool exact = true;
};

struct DecomposeOptions {
    FactorOptions factor;
    Rational precision = 10;
};

/// Degree-2 class (degree dim_M - 2 on the homology side), unless the algebra names one.
Element default_generator(const QuantumAlgebra& a);

IdempotentDecomposition decompose(const QuantumAlgebra& a, const Element& generator, const DecomposeOptions& options = {});

/// Completeness and orthogonality of an exact decomposition.
bool verify_decomposition(const QuantumAlgebra& a, const IdempotentDecomposition& d);

}  // namespace qht
