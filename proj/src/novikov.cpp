#include "qht/novikov.hpp"

#include "qht/error.hpp"

#include <vector>

namespace qht {

std::string_view to_string(Direction d) noexcept { return d == Direction::up ? "up" : "down"; }

Direction opposite(Direction d) noexcept { return d == Direction::up ? Direction::down : Direction::up; }

Novikov Novikov::monomial(const CycRat& coeff, const Rational& exponent, Direction dir) {
    Novikov r(dir, coeff.order());
    r.add_term(exponent, coeff);
    return r;
}

Novikov Novikov::constant(const CycRat& coeff, Direction dir) { return monomial(coeff, Rational(0), dir); }

Novikov Novikov::one(Direction dir, int m) { return constant(CycRat(m, 1), dir); }

Novikov Novikov::power_of_t(const Rational& exponent, Direction dir, int m) {
    return monomial(CycRat(m, 1), exponent, dir);
}

Rational Novikov::valuation() const { return leading_term().first; }

std::pair<Rational, CycRat> Novikov::leading_term() const {
    if (terms_.empty()) fail(ErrorCode::ZeroElement, "valuation of zero is undefined");
    if (dir_ == Direction::up) return *terms_.begin();
    return *terms_.rbegin();
}

Rational Novikov::trailing_exponent() const {
    if (terms_.empty()) fail(ErrorCode::ZeroElement, "zero has no terms");
    return dir_ == Direction::up ? terms_.rbegin()->first : terms_.begin()->first;
}

CycRat Novikov::coefficient(const Rational& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? CycRat(m_) : it->second;
}

void Novikov::add_term(const Rational& exponent, const CycRat& coeff) {
    if (coeff.order() != m_) {
        fail(ErrorCode::MismatchedCyclotomicOrder, "coefficient order " + std::to_string(coeff.order()) +
                                                       " does not match series order " + std::to_string(m_));
    }
    if (trunc_ && beyond(exponent, *trunc_)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

void Novikov::set_truncation(const Rational& bound) {
    trunc_ = trunc_ ? nearer(*trunc_, bound) : bound;
    drop_beyond_truncation();
}

bool Novikov::beyond(const Rational& exponent, const Rational& bound) const {
    return dir_ == Direction::up ? exponent >= bound : exponent <= bound;
}

const Rational& Novikov::nearer(const Rational& a, const Rational& b) const {
    if (dir_ == Direction::up) return a < b ? a : b;
    return a > b ? a : b;
}

void Novikov::drop_beyond_truncation() {
    if (!trunc_) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = beyond(it->first, *trunc_) ? terms_.erase(it) : std::next(it);
    }
}

void Novikov::check_compatible(const Novikov& rhs) const {
    if (dir_ != rhs.dir_) fail(ErrorCode::MixedDirections, "cannot combine upward and downward Novikov series");
    if (m_ != rhs.m_) {
        fail(ErrorCode::MismatchedCyclotomicOrder,
             "cyclotomic orders " + std::to_string(m_) + " and " + std::to_string(rhs.m_) + " differ");
    }
}

Novikov Novikov::operator-() const {
    Novikov r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Novikov& Novikov::operator+=(const Novikov& rhs) {
    check_compatible(rhs);
    if (rhs.trunc_) set_truncation(*rhs.trunc_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Novikov& Novikov::operator-=(const Novikov& rhs) { return *this += -rhs; }

Novikov& Novikov::operator*=(const Novikov& rhs) {
    check_compatible(rhs);
    const bool lhs_exact_zero = terms_.empty() && !trunc_;
    const bool rhs_exact_zero = rhs.terms_.empty() && !rhs.trunc_;
    if (lhs_exact_zero || rhs_exact_zero) {
        terms_.clear();
        trunc_.reset();
        return *this;
    }
    std::optional<Rational> bound;
    auto lower = [](const Novikov& x) { return x.terms_.empty() ? *x.trunc_ : x.valuation(); };
    auto merge = [&](const Rational& b) { bound = bound ? nearer(*bound, b) : b; };
    if (trunc_) merge(*trunc_ + lower(rhs));
    if (rhs.trunc_) merge(*rhs.trunc_ + lower(*this));

    Novikov product(dir_, m_);
    if (bound) product.trunc_ = bound;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) product.add_term(e1 + e2, c1 * c2);
    }
    *this = std::move(product);
    return *this;
}

Novikov& Novikov::operator*=(const CycRat& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= rhs;
    return *this;
}

Novikov Novikov::shifted(const Rational& shift) const {
    Novikov r(dir_, m_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
    if (trunc_) r.trunc_ = *trunc_ + shift;
    return r;
}

Novikov Novikov::rescaled(const Rational& factor, Direction dir) const {
    if (factor == 0) fail(ErrorCode::DivisionByZero, "rescaling exponents by zero");
    Novikov r(dir, m_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * factor, c);
    if (trunc_) r.trunc_ = *trunc_ * factor;
    return r;
}

Novikov Novikov::lifted(int target) const {
    Novikov r(dir_, target);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.lift(target));
    r.trunc_ = trunc_;
    return r;
}

Novikov Novikov::with_direction(Direction dir) const {
    if (trunc_ && dir != dir_) fail(ErrorCode::MixedDirections, "cannot reorient a truncated series");
    Novikov r = *this;
    r.dir_ = dir;
    return r;
}

std::string Novikov::to_string(std::string_view variable) const {
    std::string out;
    auto emit = [&](const Rational& e, const CycRat& c) {
        std::string coef = c.to_string();
        bool compound = !c.is_rational();
        bool negative = !compound && c.rational_part() < 0;
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        if (negative) coef.erase(0, 1);
        bool unit = coef == "1";
        if (compound) coef = "(" + coef + ")";
        if (e == 0) {
            out += coef;
            return;
        }
        if (!unit) out += coef + "*";
        out += std::string(variable);
        if (e != 1) out += "^(" + qht::to_string(e) + ")";
    };
    if (dir_ == Direction::up) {
        for (const auto& [e, c] : terms_) emit(e, c);
    } else {
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) emit(it->first, it->second);
    }
    if (out.empty()) out = "0";
    if (trunc_) out += " + O(" + std::string(variable) + "^(" + qht::to_string(*trunc_) + "))";
    return out;
}

bool operator==(const Novikov& a, const Novikov& b) {
    return a.dir_ == b.dir_ && a.m_ == b.m_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

Novikov pow(const Novikov& base, unsigned exponent) {
    Novikov result = Novikov::one(base.direction(), base.order());
    Novikov b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent) b *= b;
    }
    return result;
}

Rational valuation(const Novikov& x) { return x.valuation(); }

Novikov nov_invert(const Novikov& x, const Rational& precision) {
    if (x.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero Novikov element");
    const Direction dir = x.direction();
    const int sign = dir == Direction::up ? 1 : -1;
    auto [v, c] = x.leading_term();
    const CycRat cinv = c.inverse();
    if (x.is_monomial() && x.is_exact()) return Novikov::monomial(cinv, -v, dir);
    if (precision <= 0) fail(ErrorCode::SchemaError, "inversion precision must be positive");

    // x = c T^v (1 + y); relative precision in units of distance from the valuation.
    Rational rel = precision;
    if (x.truncation()) {
        Rational known = sign * (*x.truncation() - v);
        if (known < rel) rel = known;
    }
    Novikov unit = x.shifted(-v) * cinv;
    Novikov y = unit - Novikov::one(dir, x.order());
    Novikov minus_y = -y;
    Novikov sum = Novikov::one(dir, x.order());
    sum.set_truncation(sign * rel);
    Novikov term = sum;
    while (true) {
        term *= minus_y;
        term.set_truncation(sign * rel);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum.shifted(-v) * cinv;
}

std::optional<Novikov> exact_divide(const Novikov& numerator, const Novikov& denominator) {
    if (denominator.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero Novikov element");
    if (!numerator.is_exact() || !denominator.is_exact()) return std::nullopt;
    const Direction dir = numerator.direction();
    Novikov quotient(dir, numerator.order());
    if (numerator.is_zero()) return quotient;
    const auto& dterms = denominator.terms();
    const Rational dlow = dterms.begin()->first;
    const CycRat dlead_inv = dterms.begin()->second.inverse();
    const Rational limit = numerator.terms().rbegin()->first - dterms.rbegin()->first;
    Novikov rem = numerator.with_direction(dir);
    Novikov den = denominator.with_direction(dir);
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().begin();
        Rational qe = re - dlow;
        if (qe > limit) return std::nullopt;
        Novikov q = Novikov::monomial(rc * dlead_inv, qe, dir);
        quotient += q;
        rem -= q * den;
    }
    return quotient;
}

namespace {

using Dense = std::vector<CycRat>;

void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense dense_remainder(Dense a, const Dense& b) {
    const CycRat lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        if (!a.back().is_zero()) {
            CycRat f = a.back() * lead_inv;
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

}  // namespace

Novikov polynomial_gcd(const Novikov& a, const Novikov& b) {
    if (a.is_zero() && b.is_zero()) fail(ErrorCode::ZeroElement, "gcd of two zeros");
    const Direction dir = a.direction();
    const int m = a.order();
    if (a.is_zero() || b.is_zero()) {
        const Novikov& x = a.is_zero() ? b : a;
        // Normalise to the same form as the general case below.
        return polynomial_gcd(x, x);
    }
    mpz_class denom = 1;
    for (const auto* x : {&a, &b}) {
        for (const auto& [e, c] : x->terms()) denom = lcm(denom, e.get_den());
    }
    auto to_dense = [&](const Novikov& x) {
        Rational low = x.terms().begin()->first;
        Rational high = x.terms().rbegin()->first;
        Rational span = (high - low) * denom;
        Dense d(static_cast<std::size_t>(span.get_num().get_ui()) + 1, CycRat(m));
        for (const auto& [e, c] : x.terms()) {
            Rational idx = (e - low) * denom;
            d[idx.get_num().get_ui()] = c;
        }
        return d;
    };
    Dense p = to_dense(a), q = to_dense(b);
    if (p.size() < q.size()) std::swap(p, q);
    while (!q.empty()) {
        Dense r = dense_remainder(p, q);
        if (!r.empty()) {
            CycRat inv = r.back().inverse();
            for (auto& c : r) c *= inv;
        }
        p = std::move(q);
        q = std::move(r);
    }
    CycRat lead_inv = p.back().inverse();
    Novikov g(dir, m);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        g.add_term(Rational(mpz_class(static_cast<unsigned long>(i)), denom), p[i] * lead_inv);
    }
    return g;
}

}  // namespace qht
