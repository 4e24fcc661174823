#pragma once

#include "qht/cyclotomic.hpp"
#include "qht/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace qht {

/// Orientation of a Novikov-type field. `up` series have exponents tending to
/// +infinity (Lambda, Lambda_0, Lambda_+); `down` series tend to -infinity (Lambda_down).
enum class Direction { up, down };

std::string_view to_string(Direction d) noexcept;
Direction opposite(Direction d) noexcept;

/// Finite sum  sum_j a_j T^{e_j}  with a_j in Q(zeta_m) and rational e_j, optionally
/// carrying a truncation bound: every term at or beyond the bound (in the series
/// direction) is unknown. The empty sum is the canonical zero.
class Novikov {
public:
    using Terms = std::map<Rational, CycRat>;

    explicit Novikov(Direction dir = Direction::up, int m = kDefaultCyclotomicOrder) : dir_(dir), m_(m) {}

    static Novikov monomial(const CycRat& coeff, const Rational& exponent, Direction dir = Direction::up);
    static Novikov constant(const CycRat& coeff, Direction dir = Direction::up);
    static Novikov one(Direction dir = Direction::up, int m = kDefaultCyclotomicOrder);
    /// T^exponent with coefficient 1.
    static Novikov power_of_t(const Rational& exponent, Direction dir = Direction::up,
                              int m = kDefaultCyclotomicOrder);

    Direction direction() const noexcept { return dir_; }
    int order() const noexcept { return m_; }
    const Terms& terms() const noexcept { return terms_; }
    const std::optional<Rational>& truncation() const noexcept { return trunc_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_exact() const noexcept { return !trunc_.has_value(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// min exponent (up) or max exponent (down). Throws Error(ZeroElement) on zero.
    Rational valuation() const;
    /// The term attaining the valuation.
    std::pair<Rational, CycRat> leading_term() const;
    /// Exponent furthest from the valuation end (max for up, min for down).
    Rational trailing_exponent() const;

    CycRat coefficient(const Rational& exponent) const;

    void add_term(const Rational& exponent, const CycRat& coeff);
    void set_truncation(const Rational& bound);

    Novikov operator-() const;
    Novikov& operator+=(const Novikov& rhs);
    Novikov& operator-=(const Novikov& rhs);
    Novikov& operator*=(const Novikov& rhs);
    Novikov& operator*=(const CycRat& rhs);

    /// Multiply by T^shift.
    Novikov shifted(const Rational& shift) const;
    /// e -> factor * e on every exponent; the result has direction `dir`.
    Novikov rescaled(const Rational& factor, Direction dir) const;
    /// Coefficients re-expressed in Q(zeta_target).
    Novikov lifted(int target) const;
    Novikov with_direction(Direction dir) const;

    std::string to_string(std::string_view variable = "T") const;

    friend bool operator==(const Novikov& a, const Novikov& b);
    friend bool operator!=(const Novikov& a, const Novikov& b) { return !(a == b); }

private:
    void check_compatible(const Novikov& rhs) const;
    bool beyond(const Rational& exponent, const Rational& bound) const;
    const Rational& nearer(const Rational& a, const Rational& b) const;
    void drop_beyond_truncation();

    Direction dir_;
    int m_;
    Terms terms_;
    std::optional<Rational> trunc_;
};

inline Novikov operator+(Novikov a, const Novikov& b) { return a += b; }
inline Novikov operator-(Novikov a, const Novikov& b) { return a -= b; }
inline Novikov operator*(Novikov a, const Novikov& b) { return a *= b; }
inline Novikov operator*(Novikov a, const CycRat& b) { return a *= b; }

Novikov pow(const Novikov& base, unsigned exponent);

/// Valuation of a Novikov scalar: min (up) or max (down) exponent.
Rational valuation(const Novikov& x);

/// Multiplicative inverse. Monomials invert exactly; other elements expand as a
/// geometric series truncated at valuation(x^{-1}) + precision (up) or
/// valuation(x^{-1}) - precision (down), with the truncation recorded.
Novikov nov_invert(const Novikov& x, const Rational& precision);

/// Exact quotient of two exact finite sums, if one exists.
std::optional<Novikov> exact_divide(const Novikov& numerator, const Novikov& denominator);

/// Monic-normalised gcd of two exact finite sums (up to a monomial unit).
Novikov polynomial_gcd(const Novikov& a, const Novikov& b);

}  // namespace qht
