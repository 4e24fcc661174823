#pragma once

#include "qht/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qht {

struct CappedGenerator {
    std::string orbit_id;
    Rational action;
    int index = 0;
    long cap_offset = 0;

    friend bool operator==(const CappedGenerator&, const CappedGenerator&) = default;
};

/// Glues k copies of the sphere class (omega = lambda0, c1 = chern) onto the capping.
CappedGenerator recap(const CappedGenerator& g, long k, const Rational& lambda0, int chern);

/// One sparse differential entry: d(generators[from]) contains value * generators[to].
struct DifferentialEntry {
    std::size_t from = 0;
    std::size_t to = 0;
    Novikov value;
};

/// Chain: coefficient of each generator, scalars in the complex's field.
using Chain = std::vector<Novikov>;

class FilteredComplex {
public:
    const CoefficientField& field() const noexcept { return field_; }
    const std::vector<CappedGenerator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    /// Column j holds the coordinates of d(generator j).
    const std::vector<Chain>& columns() const noexcept { return columns_; }
    std::vector<DifferentialEntry> entries() const;
    bool nice() const noexcept { return nice_; }

    /// Filtration level of c * generator i: action_i + action_unit * valuation(c).
    Rational level(std::size_t i, const Novikov& c) const;
    /// max over nonzero components of level; throws ZeroElement on the zero chain.
    Rational max_action(const Chain& z) const;
    Chain boundary(const Chain& z) const;
    Chain zero_chain() const { return Chain(size(), field_.zero()); }
    Chain generator_chain(std::size_t i) const;

    friend FilteredComplex build_complex(std::vector<CappedGenerator>, const std::vector<DifferentialEntry>&,
                                         const CoefficientField&);

private:
    CoefficientField field_;
    std::vector<CappedGenerator> generators_;
    std::vector<Chain> columns_;
    bool nice_ = true;
};

/// Validates d^2 = 0, strict action decrease and index drop 1, and computes `nice`.
FilteredComplex build_complex(std::vector<CappedGenerator> generators, const std::vector<DifferentialEntry>& entries,
                              const CoefficientField& field);

/// Coefficient field for complexes over C[[s^-1, s] with (omega, c1) = (lambda0, chern).
CoefficientField laurent_homology_field(const Rational& lambda0, int chern, int m = kDefaultCyclotomicOrder);

/// Minimal filtration level at which the class of the cycle z appears.
Rational rho(const FilteredComplex& c, const Chain& z);

/// Generator actions translated by the period lattice, restricted to [lo, hi].
std::vector<Rational> spectrum(const FilteredComplex& c, const Rational& lo, const Rational& hi);

FilteredComplex shift(const FilteredComplex& c, const Rational& amount);

/// s -> T^lambda0 on every entry; the result lives over Lambda_down.
FilteredComplex extend_scalars_complex(const FilteredComplex& c);
/// The chain-level map j.
Chain extend_chain(const FilteredComplex& c, const Chain& z);

/// Cycles whose classes form a basis of homology.
std::vector<Chain> homology_basis(const FilteredComplex& c);

inline constexpr std::size_t kMaxRandomComplexSize = 8;

/// Deterministic per seed. The complex is a direct sum of cancelling pairs and
/// unpaired cycles, conjugated by a filtration-preserving basis change.
struct RandomComplex {
    FilteredComplex complex;
    /// Unpaired generators: their classes form a basis of homology with rho equal to their actions.
    std::vector<Chain> classes;
    std::vector<Rational> expected_rho;
};

RandomComplex random_complex(std::uint64_t seed, std::size_t size_bound);

/// Zero-Hamiltonian model for a Laurent cohomology algebra: one generator per basis class
/// at action 0 with index dim_M - deg and zero differential, optionally plus a cancelling pair.
FilteredComplex morse_model(const QuantumAlgebra& a, bool with_cancelling_pair = false);
/// Cycle representing PD(x) in the model.
Chain morse_class(const QuantumAlgebra& a, const FilteredComplex& model, const Element& x);

}  // namespace qht
