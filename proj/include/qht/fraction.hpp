#pragma once

#include "qht/novikov.hpp"

namespace qht {

/// Quotient of two exact finite Novikov sums, kept in lowest terms with the
/// denominator's leading term equal to 1. Serves as the field for exact linear algebra.
class Fraction {
public:
    explicit Fraction(Direction dir = Direction::up, int m = kDefaultCyclotomicOrder);
    Fraction(Novikov numerator);  // NOLINT(google-explicit-constructor)
    Fraction(Novikov numerator, Novikov denominator);

    static Fraction one(Direction dir, int m) { return Fraction(Novikov::one(dir, m)); }

    const Novikov& numerator() const noexcept { return num_; }
    const Novikov& denominator() const noexcept { return den_; }
    Direction direction() const noexcept { return num_.direction(); }
    int order() const noexcept { return num_.order(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    /// Denominator is 1, so the value is a finite sum.
    bool is_finite_sum() const;

    /// valuation(numerator) - valuation(denominator).
    Rational valuation() const;

    Fraction operator-() const;
    Fraction& operator+=(const Fraction& rhs);
    Fraction& operator-=(const Fraction& rhs);
    Fraction& operator*=(const Fraction& rhs);
    Fraction& operator/=(const Fraction& rhs);
    Fraction inverse() const;

    /// The finite sum, or its series expansion to relative precision when the
    /// denominator is not a monomial (the result then carries a truncation bound).
    Novikov expand(const Rational& precision) const;

    std::string to_string(std::string_view variable = "T") const;

    friend bool operator==(const Fraction& a, const Fraction& b);
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

private:
    void normalise();

    Novikov num_;
    Novikov den_;
};

inline Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
inline Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
inline Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
inline Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

}  // namespace qht
