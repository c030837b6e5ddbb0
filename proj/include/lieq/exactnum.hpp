#pragma once

// Exact scalars: arbitrary-precision rationals, Gaussian rationals Q(i), and
// Laurent polynomials in one formal parameter over Q(i).

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "lieq/errors.hpp"

namespace lieq {

using Rational = mpq_class;

namespace detail {

inline bool is_rational_literal(std::string_view s) {
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return p > start;
  };
  if (!digits(pos)) return false;
  if (pos == s.size()) return true;
  if (s[pos] != '/') return false;
  ++pos;
  if (!digits(pos)) return false;
  return pos == s.size();
}

}  // namespace detail

/// Parses "a" or "a/b" (optional sign) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (!detail::is_rational_literal(s)) {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  if (r.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(10); }

/// Element of Q(i). Both components are kept canonical by GMP.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return {Rational(0), Rational(1)}; }
  static GaussRat fraction(long num, long den) {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return GaussRat(r);
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  GaussRat conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRat inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_real()) return GaussRat(Rational(1) / re_);
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussRat operator-() const { return {-re_, -im_}; }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order used only for deterministic containers (lexicographic on
  /// real then imaginary part); not a field order.
  friend bool lex_less(const GaussRat& a, const GaussRat& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Integer power; negative exponents invert.
  GaussRat pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussRat result(1);
    GaussRat base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Wire form "a/b+c/di"; "i" and "-i" for unit imaginary parts.
  std::string to_string() const {
    if (is_real()) return rational_to_string(re_);
    std::string imag;
    if (im_ == 1) {
      imag = "i";
    } else if (im_ == -1) {
      imag = "-i";
    } else {
      imag = rational_to_string(im_) + "i";
    }
    if (sgn(re_) == 0) return imag;
    std::string out = rational_to_string(re_);
    if (imag.front() != '-') out += '+';
    return out + imag;
  }

  static GaussRat parse(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw ParseError("empty scalar");
    if (s.back() != 'i') return GaussRat(parse_rational(s));
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t p = s.size(); p-- > 1;) {
      if (s[p] == '+' || s[p] == '-') {
        split = p;
        break;
      }
    }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    Rational im;
    if (im_part.empty() || im_part == "+") {
      im = 1;
    } else if (im_part == "-") {
      im = -1;
    } else {
      im = parse_rational(im_part);
    }
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return {re, im};
  }

 private:
  Rational re_;
  Rational im_;
};

inline std::ostream& operator<<(std::ostream& os, const GaussRat& x) {
  return os << x.to_string();
}

/// Laurent polynomial in a single formal parameter (conventionally 'q' or
/// 't'). Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, GaussRat>;

  LaurentPoly() = default;
  explicit LaurentPoly(char var) : var_(var) {}
  LaurentPoly(const GaussRat& c, char var = 'q') : var_(var) {  // NOLINT
    if (!c.is_zero()) terms_.emplace(0, c);
  }
  LaurentPoly(long c) : LaurentPoly(GaussRat(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(GaussRat(static_cast<long>(c))) {}  // NOLINT

  static LaurentPoly monomial(const GaussRat& coef, int exponent, char var = 'q') {
    LaurentPoly p(var);
    if (!coef.is_zero()) p.terms_.emplace(exponent, coef);
    return p;
  }
  /// The parameter itself, raised to `exponent`.
  static LaurentPoly param(char var = 'q', int exponent = 1) {
    return monomial(GaussRat(1), exponent, var);
  }

  char var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  GaussRat coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? GaussRat() : it->second;
  }
  GaussRat constant_term() const { return coeff(0); }
  std::optional<int> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<int> max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }
  bool has_negative_powers() const {
    return !terms_.empty() && terms_.begin()->first < 0;
  }

  LaurentPoly with_var(char var) const {
    LaurentPoly p = *this;
    p.var_ = var;
    return p;
  }

  void add_term(int exponent, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly p(var_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    adopt_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    adopt_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    adopt_var(o);
    LaurentPoly out(var_);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    }
    terms_ = std::move(out.terms_);
    return *this;
  }
  LaurentPoly& operator*=(const GaussRat& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const GaussRat& c) { return a *= c; }
  friend LaurentPoly operator*(const GaussRat& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiplies by param^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p(var_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
    return p;
  }

  /// p(param) -> p(1/param).
  LaurentPoly reciprocal_param() const {
    LaurentPoly p(var_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
  }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly result(GaussRat(1), var_);
    for (unsigned k = 0; k < n; ++k) result *= *this;
    return result;
  }

  GaussRat eval(const GaussRat& x) const {
    if (x.is_zero()) {
      if (has_negative_powers()) {
        throw EvalAtZeroWithNegativeDegree("negative exponent present");
      }
      return constant_term();
    }
    GaussRat sum;
    if (terms_.empty()) return sum;
    // Horner over the exponent window [lo, hi].
    int lo = terms_.begin()->first;
    int hi = terms_.rbegin()->first;
    GaussRat acc;
    for (int e = hi; e >= lo; --e) {
      acc *= x;
      auto it = terms_.find(e);
      if (it != terms_.end()) acc += it->second;
    }
    return acc * x.pow(lo);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = c.to_string();
      bool compound = !c.is_real() && sgn(c.re()) != 0;
      bool negative = !compound && !cs.empty() && cs.front() == '-';
      if (!first) os << (negative ? " - " : " + ");
      else if (negative) os << "-";
      if (negative) cs.erase(0, 1);
      if (compound) cs = "(" + cs + ")";
      if (e == 0) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << var_;
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void adopt_var(const LaurentPoly& o) {
    if (is_constant() && !o.is_constant()) var_ = o.var_;
  }

  char var_ = 'q';
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

/// Exact division of Laurent polynomials; throws NonDivisible on remainder.
inline LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly(num.var());
  const int den_lo = *den.min_exponent();
  const int den_hi = *den.max_exponent();
  const GaussRat lead_inv = den.coeff(den_hi).inverse();
  LaurentPoly rem = num;
  LaurentPoly quot(num.var());
  while (!rem.is_zero()) {
    int hi = *rem.max_exponent();
    int lo = *rem.min_exponent();
    if (hi - lo < den_hi - den_lo) {
      throw NonDivisible(num.to_string() + " / " + den.to_string());
    }
    GaussRat c = rem.coeff(hi) * lead_inv;
    int shift = hi - den_hi;
    quot.add_term(shift, c);
    rem -= den.shifted(shift) * c;
  }
  return quot;
}

}  // namespace lieq
