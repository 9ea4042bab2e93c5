#pragma once

// Exact rational scalars backed by GMP, plus the small integer-combinatorics
// helpers shared across the library.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hps {

// Violation of an internal invariant or API contract. Always indicates a bug
// in calling code rather than bad user data; the CLI maps it to exit code 3.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

using Int = mpz_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k); zero when k > n.
inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Arbitrary-precision rational, always canonical: gcd(num, den) == 1, den > 0,
// zero stored as 0/1. Canonical form is established on construction and
// preserved by every operation, so operator== is plain value comparison.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}        // NOLINT(google-explicit-constructor)
    Rational(int n) : q_(n) {}         // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : q_(n) {}  // NOLINT(google-explicit-constructor)

    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num);
        q_ /= mpq_class(den);  // mpq division canonicalizes
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Strict parser for the canonical text form: [-]digits[/digits].
    // Whitespace or any other decoration is a parse error.
    static Rational from_string(const std::string& s) {
        std::size_t slash = s.find('/');
        std::string num = s.substr(0, slash);
        if (!valid_integer_text(num, /*allow_sign=*/true))
            throw std::invalid_argument("Rational: malformed numerator in '" + s + "'");
        if (slash == std::string::npos) return Rational(Int(num));
        std::string den = s.substr(slash + 1);
        if (!valid_integer_text(den, /*allow_sign=*/false))
            throw std::invalid_argument("Rational: malformed denominator in '" + s + "'");
        return Rational(Int(num), Int(den));
    }

    Int numerator() const { return Int(q_.get_num()); }
    Int denominator() const { return Int(q_.get_den()); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string to_string() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_), raw_tag{}); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(denominator(), numerator());
    }

    Rational pow(unsigned long e) const {
        // Powers of a canonical fraction stay canonical.
        Rational r;
        r.q_ = mpq_class(int_pow(numerator(), e), int_pow(denominator(), e));
        return r;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

  private:
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}

    static bool valid_integer_text(const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    }

    mpq_class q_;
};

// n(n-1)...(n-k+1) for integer or rational n.
inline Rational falling_factorial(const Rational& n, unsigned long k) {
    Rational r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= n - Rational(static_cast<long>(i));
    return r;
}

}  // namespace hps
