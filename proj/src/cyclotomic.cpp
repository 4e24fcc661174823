#include "qht/cyclotomic.hpp"

#include "qht/error.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace qht {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero, trimmed).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (a[k] == 0) continue;
        Rational f = a[k] / lead;
        std::size_t shift = k - (b.size() - 1);
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        if (k == 0) break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

Poly cyclotomic_polynomial(int m) {
    Poly p(static_cast<std::size_t>(m) + 1);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        p = divmod(p, CyclotomicField::get(d).polynomial()).first;
    }
    return p;
}

// Best rational approximation with bounded denominator (continued fractions).
std::optional<Rational> reconstruct(long double x, long max_den) {
    long double tolerance = 1e-9L * std::max<long double>(1.0L, std::fabs(x));
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    long double v = x;
    for (int iter = 0; iter < 40; ++iter) {
        long double fl = std::floor(v);
        if (std::fabs(fl) > 1e15L) return std::nullopt;
        long a = static_cast<long>(fl);
        long h2 = a * h1 + h0;
        long k2 = a * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        long double approx = static_cast<long double>(h1) / static_cast<long double>(k1);
        if (std::fabs(approx - x) <= tolerance) return Rational{mpz_class(h1), mpz_class(k1)};
        long double frac = v - fl;
        if (frac < 1e-18L) break;
        v = 1.0L / frac;
    }
    return std::nullopt;
}

std::optional<Rational> rational_root(const Rational& q, int d) {
    if (q == 0) return Rational(0);
    bool negative = q < 0;
    if (negative && d % 2 == 0) return std::nullopt;
    mpz_class num = abs(q.get_num());
    mpz_class den = q.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d))) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d))) return std::nullopt;
    Rational r{negative ? mpz_class(-rn) : rn, rd};
    r.canonicalize();
    return r;
}

// One root via c = q zeta^k with q rational.
std::optional<CycRat> root_from_rational_times_unit(const CycRat& c, int d) {
    int m = c.order();
    for (int k = 0; k < m; ++k) {
        CycRat w = c * CycRat::zeta(m, -k);
        if (!w.is_rational()) continue;
        auto r = rational_root(w.rational_part(), d);
        if (!r) continue;
        for (int j = 0; j < m; ++j) {
            if ((static_cast<long>(d) * j - k) % m == 0) return CycRat::zeta(m, j) * *r;
        }
    }
    return std::nullopt;
}

// Numerically guided search: picks a complex d-th root per conjugate pair of
// embeddings, solves for the power-basis coordinates, rounds them to small
// rationals and keeps the candidate only if it verifies exactly.
std::optional<CycRat> root_by_embedding_search(const CycRat& c, int d) {
    const int m = c.order();
    const int phi = c.field().degree();
    if (m <= 2) return std::nullopt;
    std::vector<int> reps;
    for (int a : c.field().units()) {
        if (a < m - a) reps.push_back(a);
    }
    const std::size_t half = reps.size();
    double combos = std::pow(static_cast<double>(d), static_cast<double>(half));
    if (combos > static_cast<double>(1 << 18)) return std::nullopt;

    const long double two_pi = 2.0L * std::acos(-1.0L);
    // Rows: Re and Im of sum_k Y_k zeta^{a k} for each representative a.
    std::vector<std::vector<long double>> base(phi, std::vector<long double>(phi));
    for (std::size_t r = 0; r < half; ++r) {
        for (int k = 0; k < phi; ++k) {
            long double ang = two_pi * static_cast<long double>((static_cast<long>(reps[r]) * k) % m) / m;
            base[2 * r][k] = std::cos(ang);
            base[2 * r + 1][k] = std::sin(ang);
        }
    }
    std::vector<std::vector<std::complex<long double>>> choices(half);
    for (std::size_t r = 0; r < half; ++r) {
        std::complex<long double> w = c.embed(reps[r]);
        long double mag = std::pow(std::abs(w), 1.0L / d);
        long double arg = std::arg(w);
        for (int j = 0; j < d; ++j) choices[r].push_back(std::polar(mag, (arg + two_pi * j) / d));
    }

    std::vector<int> pick(half, 0);
    while (true) {
        std::vector<std::vector<long double>> a = base;
        std::vector<long double> rhs(phi);
        for (std::size_t r = 0; r < half; ++r) {
            rhs[2 * r] = choices[r][pick[r]].real();
            rhs[2 * r + 1] = choices[r][pick[r]].imag();
        }
        bool singular = false;
        for (int col = 0; col < phi && !singular; ++col) {
            int best = col;
            for (int row = col + 1; row < phi; ++row)
                if (std::fabs(a[row][col]) > std::fabs(a[best][col])) best = row;
            if (std::fabs(a[best][col]) < 1e-12L) { singular = true; break; }
            std::swap(a[best], a[col]);
            std::swap(rhs[best], rhs[col]);
            for (int row = 0; row < phi; ++row) {
                if (row == col) continue;
                long double f = a[row][col] / a[col][col];
                if (f == 0) continue;
                for (int k = col; k < phi; ++k) a[row][k] -= f * a[col][k];
                rhs[row] -= f * rhs[col];
            }
        }
        if (!singular) {
            std::vector<Rational> coords;
            bool ok = true;
            for (int k = 0; k < phi && ok; ++k) {
                auto q = reconstruct(rhs[k] / a[k][k], 1000);
                if (!q) ok = false; else coords.push_back(*q);
            }
            if (ok) {
                CycRat y = CycRat::from_polynomial(m, coords);
                if (pow(y, d) == c) return y;
            }
        }
        std::size_t pos = 0;
        while (pos < half && ++pick[pos] == d) pick[pos++] = 0;
        if (pos == half) break;
    }
    return std::nullopt;
}

}  // namespace

CyclotomicField::CyclotomicField(int m) : m_(m) {
    if (m < 1) fail(ErrorCode::SchemaError, "cyclotomic order must be positive");
    for (int a = 0; a < m; ++a) {
        if (std::gcd(a, m) == 1) units_.push_back(a);
    }
    if (m == 1) units_ = {0};
}

const CyclotomicField& CyclotomicField::get(int m) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> interned;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = interned.find(m);
        if (it != interned.end() && !it->second->phi_.empty()) return *it->second;
    }
    // Built outside the lock: construction recurses into get() for divisors.
    auto field = std::make_unique<CyclotomicField>(m);
    field->phi_ = m == 1 ? Poly{Rational(-1), Rational(1)} : cyclotomic_polynomial(m);
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = interned.try_emplace(m, std::move(field));
    return *it->second;
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const {
    const int phi = degree();
    for (std::size_t k = poly.size(); k-- > static_cast<std::size_t>(phi);) {
        if (poly[k] == 0) continue;
        Rational f = poly[k];
        std::size_t shift = k - phi;
        for (int j = 0; j <= phi; ++j) poly[shift + j] -= f * phi_[j];
    }
    poly.resize(phi);
    return poly;
}

CycRat::CycRat(int m) : field_(&CyclotomicField::get(m)), c_(field_->degree()) {}

CycRat::CycRat(int m, const Rational& value) : CycRat(m) { c_[0] = value; }

CycRat CycRat::zeta(int m, long k) {
    long e = ((k % m) + m) % m;
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1);
    poly[e] = 1;
    return from_polynomial(m, std::move(poly));
}

CycRat CycRat::from_polynomial(int m, std::vector<Rational> poly) {
    CycRat r(m);
    r.c_ = r.field_->reduce(std::move(poly));
    return r;
}

bool CycRat::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycRat::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void CycRat::check_same_field(const CycRat& rhs) const {
    if (field_ != rhs.field_) {
        fail(ErrorCode::MismatchedCyclotomicOrder, "cyclotomic orders " + std::to_string(order()) + " and " +
                                                       std::to_string(rhs.order()) + " differ");
    }
}

CycRat CycRat::operator-() const {
    CycRat r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycRat& CycRat::operator+=(const CycRat& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

CycRat& CycRat::operator-=(const CycRat& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

CycRat& CycRat::operator*=(const CycRat& rhs) {
    check_same_field(rhs);
    if (rhs.is_rational()) return *this *= rhs.c_[0];
    if (is_rational()) {
        Rational s = c_[0];
        *this = rhs;
        return *this *= s;
    }
    c_ = field_->reduce(mul(c_, rhs.c_));
    return *this;
}

CycRat& CycRat::operator*=(const Rational& rhs) {
    for (auto& x : c_) x *= rhs;
    return *this;
}

CycRat CycRat::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
    if (is_rational()) return CycRat(order(), 1 / c_[0]);
    // Extended Euclid: find s with s * a = 1 mod Phi_m.
    Poly r0 = field_->polynomial(), r1 = c_;
    trim(r1);
    Poly s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational inv = 1 / r1[0];
    for (auto& x : s1) x *= inv;
    return from_polynomial(order(), std::move(s1));
}

CycRat CycRat::galois(long a) const {
    const long m = order();
    std::vector<Rational> poly(static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        long e = ((a % m + m) % m) * static_cast<long>(k) % m;
        poly[e] += c_[k];
    }
    return from_polynomial(order(), std::move(poly));
}

CycRat CycRat::lift(int target) const {
    if (target % order() != 0) {
        fail(ErrorCode::MismatchedCyclotomicOrder,
             "cannot embed Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" + std::to_string(target) + ")");
    }
    const int step = target / order();
    std::vector<Rational> poly(c_.size() * step + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) poly[k * step] = c_[k];
    return from_polynomial(target, std::move(poly));
}

std::complex<long double> CycRat::embed(long a) const {
    const long m = order();
    const long double two_pi = 2.0L * std::acos(-1.0L);
    std::complex<long double> z = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        long e = ((a % m + m) % m) * static_cast<long>(k) % m;
        z += std::polar(c_[k].get_d() * 1.0L, two_pi * e / m);
    }
    return z;
}

std::string CycRat::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        std::string coef = qht::to_string(c_[k]);
        if (!out.empty()) out += coef.front() == '-' ? " - " : " + ";
        else if (coef.front() == '-') out += "-";
        if (coef.front() == '-') coef.erase(0, 1);
        if (k == 0) out += coef;
        else {
            if (coef != "1") out += coef + "*";
            out += "z" + std::to_string(order());
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

bool operator==(const CycRat& a, const CycRat& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

CycRat pow(const CycRat& base, long exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    CycRat result(base.order(), 1);
    CycRat b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

std::optional<CycRat> primitive_root_of_unity(int m, int d) {
    if (d == 1) return CycRat(m, 1);
    if (d == 2) return CycRat(m, -1);
    if (m % d == 0) return CycRat::zeta(m, m / d);
    // Q(zeta_m) = Q(zeta_2m) for odd m, with zeta_2m = -zeta_m^{(m+1)/2}.
    if (m % 2 == 1 && (2 * m) % d == 0) {
        CycRat z2m = -CycRat::zeta(m, (m + 1) / 2);
        return pow(z2m, 2 * m / d);
    }
    return std::nullopt;
}

std::vector<CycRat> nth_roots(const CycRat& c, int d) {
    if (d < 1) fail(ErrorCode::SchemaError, "root degree must be positive");
    if (c.is_zero()) fail(ErrorCode::DivisionByZero, "nth_roots of zero");
    if (d == 1) return {c};
    auto omega = primitive_root_of_unity(c.order(), d);
    if (!omega) {
        fail(ErrorCode::RootNotInField, "Q(zeta_" + std::to_string(c.order()) + ") lacks primitive " +
                                            std::to_string(d) + "-th roots of unity");
    }
    auto y0 = root_from_rational_times_unit(c, d);
    if (!y0) y0 = root_by_embedding_search(c, d);
    if (!y0) {
        fail(ErrorCode::RootNotInField, "no " + std::to_string(d) + "-th root of " + c.to_string() + " in Q(zeta_" +
                                            std::to_string(c.order()) + ")");
    }
    std::vector<CycRat> roots;
    CycRat w(c.order(), 1);
    for (int j = 0; j < d; ++j) {
        roots.push_back(*y0 * w);
        w *= *omega;
    }
    return roots;
}

}  // namespace qht
