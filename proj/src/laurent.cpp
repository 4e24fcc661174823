#include "qht/laurent.hpp"

#include "qht/error.hpp"

namespace qht {

std::string_view to_string(Side side) noexcept { return side == Side::cohomology ? "cohomology" : "homology"; }

Direction direction_of(Side side) noexcept { return side == Side::cohomology ? Direction::up : Direction::down; }

LaurentScalar::LaurentScalar(Side side, Rational lambda0, int chern, int m)
    : side_(side), lambda0_(std::move(lambda0)), chern_(chern), series_(direction_of(side), m) {
    if (lambda0_ <= 0) fail(ErrorCode::SchemaError, "lambda0 must be positive");
    if (chern_ <= 0) fail(ErrorCode::SchemaError, "minimal Chern number must be positive");
}

LaurentScalar LaurentScalar::monomial(Side side, Rational lambda0, int chern, const CycRat& coeff, long k) {
    LaurentScalar r(side, std::move(lambda0), chern, coeff.order());
    r.add_term(k, coeff);
    return r;
}

void LaurentScalar::add_term(long k, const CycRat& coeff) { series_.add_term(Rational(k), coeff); }

Rational LaurentScalar::valuation() const { return series_.valuation() * lambda0_; }

void LaurentScalar::check_compatible(const LaurentScalar& rhs) const {
    if (side_ != rhs.side_) fail(ErrorCode::MixedDirections, "cannot combine cohomology and homology scalars");
    if (lambda0_ != rhs.lambda0_ || chern_ != rhs.chern_) {
        fail(ErrorCode::SchemaError, "Laurent scalars carry different variable metadata");
    }
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& rhs) {
    check_compatible(rhs);
    series_ += rhs.series_;
    return *this;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& rhs) {
    check_compatible(rhs);
    series_ *= rhs.series_;
    return *this;
}

LaurentScalar LaurentScalar::poincare_dual() const {
    Side other = side_ == Side::cohomology ? Side::homology : Side::cohomology;
    LaurentScalar r(other, lambda0_, chern_, series_.order());
    r.series_ = series_.rescaled(Rational(-1), direction_of(other));
    return r;
}

std::string LaurentScalar::to_string() const { return series_.to_string(side_ == Side::cohomology ? "t" : "s"); }

bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    return a.side_ == b.side_ && a.lambda0_ == b.lambda0_ && a.chern_ == b.chern_ && a.series_ == b.series_;
}

Rational valuation(const LaurentScalar& x) { return x.valuation(); }

Novikov iota_scalar(const LaurentScalar& x) {
    return x.series().rescaled(x.lambda0(), direction_of(x.side()));
}

}  // namespace qht
