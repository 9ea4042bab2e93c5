#pragma once

// Sparse multivariate polynomials over Rational in the fixed symbol universe
// {x, y, z, p}, with a canonical term order (pure lexicographic, x > y > z > p)
// and a canonical text form that round-trips through from_string. Also
// provides Poly1, a small dense univariate polynomial used for the special
// polynomial families.

#include "hps/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hps {

// The symbol universe is fixed for the whole library; there is deliberately
// no way to introduce further indeterminates mid-computation.
enum class Symbol : int { x = 0, y = 1, z = 2, p = 3 };

inline constexpr int kSymbolCount = 4;
inline constexpr std::array<char, kSymbolCount> kSymbolNames = {'x', 'y', 'z', 'p'};

inline Symbol symbol_from_char(char c) {
    for (int i = 0; i < kSymbolCount; ++i)
        if (kSymbolNames[static_cast<std::size_t>(i)] == c) return static_cast<Symbol>(i);
    throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
}

// Exponent vector. Comparison is pure lex with x most significant, so
// std::array's lexicographic operators give the term order directly.
struct Monomial {
    std::array<std::uint32_t, kSymbolCount> e{};

    static Monomial one() { return Monomial{}; }
    static Monomial var(Symbol s, std::uint32_t exp = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(s)] = exp;
        return m;
    }

    std::uint32_t operator[](Symbol s) const { return e[static_cast<std::size_t>(s)]; }
    bool is_one() const { return *this == Monomial{}; }
    unsigned degree() const {
        unsigned d = 0;
        for (auto v : e) d += v;
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kSymbolCount; ++i) m.e[i] = a.e[i] + b.e[i];
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
    friend bool operator>(const Monomial& a, const Monomial& b) { return a.e > b.e; }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < kSymbolCount; ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += kSymbolNames[static_cast<std::size_t>(i)];
            if (e[i] > 1) s += '^' + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

class MPoly {
  public:
    using Term = std::pair<Monomial, Rational>;

    MPoly() = default;
    MPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.emplace_back(Monomial::one(), c);
    }
    MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    MPoly(int c) : MPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    static MPoly variable(Symbol s, std::uint32_t exp = 1) {
        return MPoly::term(Rational(1), Monomial::var(s, exp));
    }
    static MPoly term(const Rational& c, const Monomial& m) {
        MPoly q;
        if (!c.is_zero()) q.terms_.emplace_back(m, c);
        return q;
    }

    // Terms in descending lex order, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

    // Coefficient of the empty monomial (always defined).
    Rational constant_term() const {
        if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
        return Rational(0);
    }

    // The value of a polynomial that must be constant.
    Rational as_constant() const {
        if (!is_constant()) throw contract_error("MPoly::as_constant on non-constant polynomial");
        return constant_term();
    }

    Rational coefficient(const Monomial& m) const {
        for (const auto& [mon, c] : terms_)
            if (mon == m) return c;
        return Rational(0);
    }

    unsigned degree() const {  // total degree; 0 for the zero polynomial
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    unsigned degree_in(Symbol s) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[s]);
        return d;
    }
    bool uses(Symbol s) const { return degree_in(s) > 0; }

    friend MPoly operator-(const MPoly& a) {
        MPoly r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& [m, c] : a.terms_) r.terms_.emplace_back(m, -c);
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merged(a, b, /*negate_b=*/false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merged(a, b, /*negate_b=*/true); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        // Accumulate pairwise products; the map keeps descending term order.
        std::map<Monomial, Rational, std::greater<Monomial>> acc;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
        MPoly r;
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.emplace_back(m, c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const Rational& s) {
        if (s.is_zero()) return MPoly();
        MPoly r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& [m, c] : a.terms_) r.terms_.emplace_back(m, c * s);
        return r;
    }
    friend MPoly operator*(const Rational& s, const MPoly& a) { return a * s; }
    friend MPoly operator/(const MPoly& a, const Rational& s) { return a * s.inverse(); }
    // Integer scalars would otherwise be ambiguous between the Rational and
    // MPoly conversions.
    friend MPoly operator*(const MPoly& a, long s) { return a * Rational(s); }
    friend MPoly operator*(long s, const MPoly& a) { return a * Rational(s); }
    friend MPoly operator/(const MPoly& a, long s) { return a / Rational(s); }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly pow(unsigned e) const {
        MPoly base = *this, r = MPoly(1);
        while (e > 0) {
            if (e & 1u) r *= base;
            e >>= 1u;
            if (e > 0) base *= base;
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Replace a symbol by a polynomial.
    MPoly substitute(Symbol s, const MPoly& value) const {
        std::vector<MPoly> powers = {MPoly(1)};  // value^0, value^1, ...
        MPoly r;
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m[s];
            while (powers.size() <= e) powers.push_back(powers.back() * value);
            Monomial rest = m;
            rest.e[static_cast<std::size_t>(s)] = 0;
            r += MPoly::term(c, rest) * powers[e];
        }
        return r;
    }

    double eval_double(const std::array<double, kSymbolCount>& v) const {
        double acc = 0;
        for (const auto& [m, c] : terms_) {
            double t = c.to_double();
            for (int i = 0; i < kSymbolCount; ++i)
                for (std::uint32_t k = 0; k < m.e[i]; ++k) t *= v[static_cast<std::size_t>(i)];
            acc += t;
        }
        return acc;
    }

    Rational eval_rational(const std::array<Rational, kSymbolCount>& v) const {
        Rational acc = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < kSymbolCount; ++i)
                for (std::uint32_t k = 0; k < m.e[i]; ++k) t *= v[static_cast<std::size_t>(i)];
            acc += t;
        }
        return acc;
    }

    // Canonical text: terms in descending lex order, "8*x^3 - 12*x" style.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = c.abs();
            if (first) {
                if (c.sign() < 0) s += '-';
                first = false;
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            if (m.is_one()) {
                s += mag.to_string();
            } else {
                if (mag != Rational(1)) s += mag.to_string() + "*";
                s += m.to_string();
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const MPoly& q) { return os << q.to_string(); }

    // Parse the canonical text form (and unnormalized variants of it:
    // repeated symbols multiply, terms in any order).
    static MPoly from_string(const std::string& s);

  private:
    // Merge two descending-sorted term lists.
    static MPoly merged(const MPoly& a, const MPoly& b, bool negate_b) {
        MPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            bool take_a;
            if (i == a.terms_.size()) take_a = false;
            else if (j == b.terms_.size()) take_a = true;
            else if (a.terms_[i].first == b.terms_[j].first) {
                Rational c = negate_b ? a.terms_[i].second - b.terms_[j].second
                                      : a.terms_[i].second + b.terms_[j].second;
                if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, c);
                ++i, ++j;
                continue;
            } else
                take_a = a.terms_[i].first > b.terms_[j].first;
            if (take_a) {
                r.terms_.push_back(a.terms_[i]);
                ++i;
            } else {
                const auto& [m, c] = b.terms_[j];
                r.terms_.emplace_back(m, negate_b ? -c : c);
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

namespace detail {

// Tokenizer/recursive-descent parser for the canonical polynomial text.
class PolyParser {
  public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    MPoly parse() {
        MPoly r;
        skip_ws();
        bool neg = consume_sign();
        r += parse_term(neg);
        skip_ws();
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c != '+' && c != '-') throw std::invalid_argument(err("expected '+' or '-'"));
            ++pos_;
            skip_ws();
            r += parse_term(c == '-');
            skip_ws();
        }
        return r;
    }

  private:
    std::string err(const std::string& what) const {
        return "polynomial parse error at position " + std::to_string(pos_) + ": " + what;
    }
    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    bool consume_sign() {
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            bool neg = s_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }
    bool at_digit() const { return pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9'; }

    std::string parse_nat() {
        if (!at_digit()) throw std::invalid_argument(err("expected a number"));
        std::string digits;
        while (at_digit()) digits += s_[pos_++];
        return digits;
    }

    Rational parse_coeff() {
        std::string num = parse_nat();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::string den = parse_nat();
            return Rational(Int(num), Int(den));
        }
        return Rational(Int(num));
    }

    // term := coeff ['*' factors] | factors
    MPoly parse_term(bool negate) {
        Rational coeff = 1;
        Monomial mono;
        if (at_digit()) {
            coeff = parse_coeff();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                parse_factors(mono);
            }
        } else {
            parse_factors(mono);
        }
        if (negate) coeff = -coeff;
        return MPoly::term(coeff, mono);
    }

    // factors := symbol ['^' nat] ('*' symbol ['^' nat])*
    void parse_factors(Monomial& mono) {
        while (true) {
            if (pos_ >= s_.size()) throw std::invalid_argument(err("expected a symbol"));
            Symbol s = symbol_from_char(s_[pos_]);  // throws on unknown letters
            ++pos_;
            std::uint32_t e = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                e = static_cast<std::uint32_t>(std::stoul(parse_nat()));
            }
            mono = mono * Monomial::var(s, e);
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline MPoly MPoly::from_string(const std::string& s) { return detail::PolyParser(s).parse(); }

// Dense univariate polynomial over Rational; the indeterminate is separate
// from the {x,y,z,p} universe and renders as "t" by default. Coefficient
// vector is canonical (no trailing zeros).
class Poly1 {
  public:
    Poly1() = default;
    explicit Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly1(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    friend Poly1 operator+(const Poly1& a, const Poly1& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Poly1(std::move(r));
    }
    friend Poly1 operator*(const Poly1& a, const Rational& s) {
        std::vector<Rational> r;
        r.reserve(a.c_.size());
        for (const auto& c : a.c_) r.push_back(c * s);
        return Poly1(std::move(r));
    }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        if (a.is_zero() || b.is_zero()) return Poly1();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly1(std::move(r));
    }
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    Rational eval(const Rational& v) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }
    double eval_double(double v) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + it->to_double();
        return acc;
    }

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {  // descending powers
            const Rational& c = c_[i];
            if (c.is_zero()) continue;
            Rational mag = c.abs();
            if (first) {
                if (c.sign() < 0) s += '-';
                first = false;
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            if (i == 0) {
                s += mag.to_string();
            } else {
                if (mag != Rational(1)) s += mag.to_string() + "*";
                s += var;
                if (i > 1) s += '^' + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace hps
