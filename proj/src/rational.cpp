#include "qht/rational.hpp"

#include "qht/error.hpp"

#include <cctype>

namespace qht {

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
        fail(ErrorCode::SchemaError, "malformed rational '" + std::string(text) + "'");
    }
    std::string n(num.front() == '+' ? num.substr(1) : num);
    mpz_class d{std::string(den)};
    if (d == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator '" + std::string(text) + "'");
    Rational r{mpz_class{n}, d};
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

long floor_to_long(const Rational& value) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q.get_si();
}

Rational make_rational(long num, long den) {
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace qht
