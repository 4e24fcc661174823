#pragma once

#include "qht/novikov.hpp"

namespace qht {

/// Which formal variable a Laurent scalar is written in: t (cohomology, exponents
/// bounded below) or s (homology, exponents bounded above).
enum class Side { cohomology, homology };

std::string_view to_string(Side side) noexcept;
Direction direction_of(Side side) noexcept;

/// Element of C[t^-1, t]] or C[[s^-1, s] with integer exponents. The variable carries
/// action lambda0 and Chern number N as explicit metadata.
class LaurentScalar {
public:
    LaurentScalar(Side side, Rational lambda0, int chern, int m = kDefaultCyclotomicOrder);

    static LaurentScalar monomial(Side side, Rational lambda0, int chern, const CycRat& coeff, long k);

    Side side() const noexcept { return side_; }
    const Rational& lambda0() const noexcept { return lambda0_; }
    int chern() const noexcept { return chern_; }
    /// Underlying series in the bare variable (integer exponents).
    const Novikov& series() const noexcept { return series_; }

    bool is_zero() const noexcept { return series_.is_zero(); }
    void add_term(long k, const CycRat& coeff);

    /// k * lambda0 extremised over the support: min on cohomology, max on homology.
    Rational valuation() const;

    LaurentScalar& operator+=(const LaurentScalar& rhs);
    LaurentScalar& operator*=(const LaurentScalar& rhs);

    /// t^k -> s^-k and back.
    LaurentScalar poincare_dual() const;

    std::string to_string() const;

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);

private:
    void check_compatible(const LaurentScalar& rhs) const;

    Side side_;
    Rational lambda0_;
    int chern_;
    Novikov series_;
};

inline LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
inline LaurentScalar operator*(LaurentScalar a, const LaurentScalar& b) { return a *= b; }

Rational valuation(const LaurentScalar& x);

/// t -> T^lambda0 into Lambda (cohomology), or s -> T^lambda0 into Lambda_down (homology).
Novikov iota_scalar(const LaurentScalar& x);

}  // namespace qht
