#include "qht/fraction.hpp"

#include "qht/error.hpp"

namespace qht {

Fraction::Fraction(Direction dir, int m) : num_(dir, m), den_(Novikov::one(dir, m)) {}

Fraction::Fraction(Novikov numerator) : num_(std::move(numerator)), den_(Novikov::one(num_.direction(), num_.order())) {
    if (!num_.is_exact()) fail(ErrorCode::InexactResult, "fractions require exact finite sums");
}

Fraction::Fraction(Novikov numerator, Novikov denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "fraction with zero denominator");
    if (!num_.is_exact() || !den_.is_exact()) fail(ErrorCode::InexactResult, "fractions require exact finite sums");
    if (num_.direction() != den_.direction()) fail(ErrorCode::MixedDirections, "fraction parts differ in direction");
    normalise();
}

void Fraction::normalise() {
    const Direction dir = num_.direction();
    if (num_.is_zero()) {
        den_ = Novikov::one(dir, num_.order());
        return;
    }
    if (!den_.is_monomial() && !num_.is_monomial()) {
        Novikov g = polynomial_gcd(num_, den_);
        if (!g.is_monomial()) {
            num_ = *exact_divide(num_, g);
            den_ = *exact_divide(den_, g);
        }
    }
    auto [v, c] = den_.leading_term();
    CycRat cinv = c.inverse();
    num_ = num_.shifted(-v) * cinv;
    den_ = den_.shifted(-v) * cinv;
}

bool Fraction::is_finite_sum() const { return den_.is_monomial(); }

Rational Fraction::valuation() const { return num_.valuation() - den_.valuation(); }

Fraction Fraction::operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
}

Fraction& Fraction::operator+=(const Fraction& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
        if (!den_.is_monomial()) normalise();
        else if (num_.is_zero()) normalise();
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalise();
    return *this;
}

Fraction& Fraction::operator-=(const Fraction& rhs) { return *this += -rhs; }

Fraction& Fraction::operator*=(const Fraction& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return *this = rhs;
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    if (!den_.is_monomial()) normalise();
    return *this;
}

Fraction& Fraction::operator/=(const Fraction& rhs) { return *this *= rhs.inverse(); }

Fraction Fraction::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return Fraction(den_, num_);
}

Novikov Fraction::expand(const Rational& precision) const {
    if (den_.is_monomial()) return num_;
    return num_ * nov_invert(den_, precision);
}

std::string Fraction::to_string(std::string_view variable) const {
    if (den_.is_monomial()) return num_.to_string(variable);
    return "(" + num_.to_string(variable) + ") / (" + den_.to_string(variable) + ")";
}

bool operator==(const Fraction& a, const Fraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

}  // namespace qht
