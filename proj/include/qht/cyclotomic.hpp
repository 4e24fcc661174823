#pragma once

#include "qht/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace qht {

inline constexpr int kDefaultCyclotomicOrder = 12;

/// Immutable description of Q(zeta_m): the cyclotomic polynomial and its degree phi(m).
/// Instances are interned, so references stay valid for the program lifetime.
class CyclotomicField {
public:
    static const CyclotomicField& get(int m);

    int order() const noexcept { return m_; }
    int degree() const noexcept { return static_cast<int>(phi_.size()) - 1; }
    /// Coefficients of Phi_m, lowest degree first; monic.
    const std::vector<Rational>& polynomial() const noexcept { return phi_; }
    /// Units a mod m with gcd(a, m) = 1, ascending.
    const std::vector<int>& units() const noexcept { return units_; }

    /// Reduces an arbitrary polynomial in zeta_m to the power basis (length phi(m)).
    std::vector<Rational> reduce(std::vector<Rational> poly) const;

    explicit CyclotomicField(int m);

private:
    int m_;
    std::vector<Rational> phi_;
    std::vector<int> units_;
};

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
class CycRat {
public:
    CycRat() : CycRat(kDefaultCyclotomicOrder) {}
    explicit CycRat(int m);
    CycRat(int m, const Rational& value);
    CycRat(int m, long value) : CycRat(m, Rational(value)) {}

    /// zeta_m^k.
    static CycRat zeta(int m, long k);
    /// Arbitrary-length polynomial in zeta_m, reduced modulo Phi_m.
    static CycRat from_polynomial(int m, std::vector<Rational> poly);

    int order() const noexcept { return field_->order(); }
    const CyclotomicField& field() const noexcept { return *field_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coefficient; meaningful when is_rational().
    const Rational& rational_part() const { return c_.front(); }

    CycRat operator-() const;
    CycRat& operator+=(const CycRat& rhs);
    CycRat& operator-=(const CycRat& rhs);
    CycRat& operator*=(const CycRat& rhs);
    CycRat& operator*=(const Rational& rhs);
    CycRat inverse() const;

    /// Galois automorphism zeta -> zeta^a (gcd(a, m) = 1).
    CycRat galois(long a) const;
    /// Same element viewed in Q(zeta_target); target must be a multiple of m.
    CycRat lift(int target) const;
    /// Complex value under zeta -> exp(2 pi i a / m).
    std::complex<long double> embed(long a = 1) const;

    std::string to_string() const;

    friend bool operator==(const CycRat& a, const CycRat& b);
    friend bool operator!=(const CycRat& a, const CycRat& b) { return !(a == b); }

private:
    void check_same_field(const CycRat& rhs) const;

    const CyclotomicField* field_;
    std::vector<Rational> c_;
};

inline CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
inline CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
inline CycRat operator*(CycRat a, const CycRat& b) { return a *= b; }
inline CycRat operator*(CycRat a, const Rational& b) { return a *= b; }
inline CycRat operator/(const CycRat& a, const CycRat& b) { return a * b.inverse(); }

CycRat pow(const CycRat& base, long exponent);

/// Primitive d-th root of unity inside Q(zeta_m), if the field contains one.
std::optional<CycRat> primitive_root_of_unity(int m, int d);

/// All d distinct solutions of y^d = c in Q(zeta_m), c != 0.
/// Throws Error(RootNotInField) when they do not all lie in the field.
std::vector<CycRat> nth_roots(const CycRat& c, int d);

}  // namespace qht
