#pragma once

// The q-deformed Heisenberg algebra H(q) = <A, B | AB - qBA = I>:
// q-combinatorics, normal ordering to the basis B^m A^n and identity checks.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/exactnum.hpp"
#include "lieq/report.hpp"

namespace lieq {

// ---- q-combinatorics -------------------------------------------------------

/// {n}_q = 1 + q + ... + q^{n-1}; {0}_q = 0.
inline LaurentPoly q_integer(unsigned n, char var = 'q') {
  LaurentPoly p(var);
  for (unsigned l = 0; l < n; ++l) p.add_term(static_cast<int>(l), GaussRat(1));
  return p;
}

/// {n}_q! = {1}_q ... {n}_q; {0}_q! = 1.
inline LaurentPoly q_factorial(unsigned n, char var = 'q') {
  LaurentPoly p(GaussRat(1), var);
  for (unsigned l = 1; l <= n; ++l) p *= q_integer(l, var);
  return p;
}

/// Gaussian binomial by the recursion C(n,k) = C(n-1,k-1) + q^k C(n-1,k).
inline LaurentPoly q_binomial(unsigned n, unsigned k, char var = 'q') {
  if (k > n) return LaurentPoly(var);
  std::vector<std::vector<LaurentPoly>> t(n + 1);
  for (unsigned a = 0; a <= n; ++a) {
    t[a].assign(a + 1, LaurentPoly(var));
    t[a][0] = LaurentPoly(GaussRat(1), var);
    t[a][a] = LaurentPoly(GaussRat(1), var);
    for (unsigned b = 1; b < a; ++b) {
      t[a][b] = t[a - 1][b - 1] + t[a - 1][b].shifted(static_cast<int>(b));
    }
  }
  return t[n][k];
}

/// {n}_q! / ({k}_q! {n-k}_q!) by exact division.
inline LaurentPoly q_binomial_closed(unsigned n, unsigned k, char var = 'q') {
  if (k > n) return LaurentPoly(var);
  return divide_exact(q_factorial(n, var), q_factorial(k, var) * q_factorial(n - k, var));
}

inline long choose2(long n) { return n * (n - 1) / 2; }

struct ReciprocalChecks {
  bool integer = false;
  /// {n}_{1/q}! = q^{-C(n,2)} {n}_q!
  bool factorial = false;
  /// The same line with {n}_q in place of {n}_q! on the right; reported only.
  bool factorial_without_bang = false;
  bool binomial = false;
  bool ok() const { return integer && factorial && binomial; }
};

/// Evaluates the three reciprocal identities at q0 != 0.
inline ReciprocalChecks q_reciprocal_checks(unsigned n, unsigned k, const GaussRat& q0) {
  if (q0.is_zero()) throw QZero("reciprocal identities need q != 0");
  const GaussRat inv = q0.inverse();
  ReciprocalChecks r;
  r.integer = q_integer(n).eval(inv) == q0 * q0.pow(-static_cast<long>(n)) * q_integer(n).eval(q0);
  const GaussRat scale = q0.pow(-choose2(n));
  r.factorial = q_factorial(n).eval(inv) == scale * q_factorial(n).eval(q0);
  r.factorial_without_bang = q_factorial(n).eval(inv) == scale * q_integer(n).eval(q0);
  const long kk = static_cast<long>(k) * (static_cast<long>(n) - static_cast<long>(k));
  r.binomial = q_binomial(n, k).eval(inv) == q0.pow(-kk) * q_binomial(n, k).eval(q0);
  return r;
}

struct SubsetSumCheck {
  LaurentPoly binomial;
  /// sum over k-subsets S of {1..n} of q^{sum(S) - k(k+1)/2}
  LaurentPoly shifted;
  /// sum over k-subsets of 2 q^{sum(S)} / (k(k+1))
  LaurentPoly literal;
  bool shifted_matches = false;
  bool literal_matches = false;
};

inline SubsetSumCheck subset_sum_binomial_check(unsigned n, unsigned k) {
  SubsetSumCheck r{q_binomial(n, k), LaurentPoly('q'), LaurentPoly('q')};
  const int base = static_cast<int>(k * (k + 1) / 2);
  const GaussRat weight = k == 0 ? GaussRat(0) : GaussRat::fraction(2, static_cast<long>(k * (k + 1)));
  if (k <= n) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      int sum = 0;
      for (unsigned s = 0; s < n; ++s) {
        if (pick[s]) sum += static_cast<int>(s + 1);
      }
      r.shifted.add_term(sum - base, GaussRat(1));
      r.literal.add_term(sum, weight);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  r.shifted_matches = r.shifted == r.binomial;
  r.literal_matches = r.literal == r.binomial;
  return r;
}

// ---- words and normal forms ------------------------------------------------

/// Linear combination of words over a letter alphabet with coefficients in
/// Laurent polynomials; the empty word is the unit.
class WordPoly {
 public:
  using Terms = std::map<std::string, LaurentPoly>;

  WordPoly() = default;

  static WordPoly word(const std::string& w, const LaurentPoly& c = LaurentPoly(1)) {
    WordPoly p;
    p.add(w, c);
    return p;
  }
  static WordPoly scalar(const LaurentPoly& c) { return word("", c); }
  static WordPoly unit() { return scalar(LaurentPoly(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::string& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WordPoly& operator+=(const WordPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  WordPoly& operator-=(const WordPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  friend WordPoly operator*(const WordPoly& a, const WordPoly& b) {
    WordPoly out;
    for (const auto& [w1, c1] : a.terms_) {
      for (const auto& [w2, c2] : b.terms_) out.add(w1 + w2, c1 * c2);
    }
    return out;
  }
  friend WordPoly operator*(const LaurentPoly& c, const WordPoly& a) {
    WordPoly out;
    for (const auto& [w, v] : a.terms_) out.add(w, c * v);
    return out;
  }
  friend bool operator==(const WordPoly& a, const WordPoly& b) { return a.terms_ == b.terms_; }

  WordPoly pow(unsigned n) const {
    WordPoly r = unit();
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  /// Substitutes q = q0 in every coefficient.
  WordPoly eval(const GaussRat& q0) const {
    WordPoly out;
    for (const auto& [w, c] : terms_) out.add(w, LaurentPoly(c.eval(q0)));
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string word = w.empty() ? "I" : spaced(w);
      if (c == LaurentPoly(1)) {
        s += word;
      } else {
        s += "(" + c.to_string() + ")*" + word;
      }
    }
    return s;
  }

 private:
  static std::string spaced(const std::string& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) out += "*";
      out += w[k];
    }
    return out;
  }

  Terms terms_;
};

inline WordPoly letter(char c) { return WordPoly::word(std::string(1, c)); }

/// x y - c y x
inline WordPoly qmutator(const WordPoly& x, const WordPoly& y, const LaurentPoly& c) {
  return x * y - c * (y * x);
}
inline WordPoly commutator(const WordPoly& x, const WordPoly& y) {
  return qmutator(x, y, LaurentPoly(1));
}

/// sum c_{m,n} B^m A^n
class NormalForm {
 public:
  using Key = std::pair<unsigned, unsigned>;
  using Coeffs = std::map<Key, LaurentPoly>;

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(unsigned m, unsigned n, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.try_emplace(Key{m, n}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  LaurentPoly coeff(unsigned m, unsigned n) const {
    auto it = coeffs_.find({m, n});
    return it == coeffs_.end() ? LaurentPoly() : it->second;
  }

  WordPoly to_wordpoly() const {
    WordPoly w;
    for (const auto& [k, c] : coeffs_) w.add(std::string(k.first, 'B') + std::string(k.second, 'A'), c);
    return w;
  }

  NormalForm eval(const GaussRat& q0) const {
    NormalForm out;
    for (const auto& [k, c] : coeffs_) out.add(k.first, k.second, LaurentPoly(c.eval(q0)));
    return out;
  }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      const auto& [k, c] = *it;
      std::string mono;
      auto part = [&](char letter, unsigned e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += letter;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      part('B', k.first);
      part('A', k.second);
      std::string coef = c.to_string();
      if (!s.empty()) s += " + ";
      if (mono.empty()) {
        s += c.terms().size() > 1 ? "(" + coef + ")" : coef;
      } else if (coef == "1") {
        s += mono;
      } else {
        s += (c.terms().size() > 1 ? "(" + coef + ")" : coef) + "*" + mono;
      }
    }
    return s;
  }

 private:
  Coeffs coeffs_;
};

/// Normal form of a word over {A, B, I}; `q` is the rewrite coefficient, the
/// parameter itself by default or a constant for a specialized algebra.
/// Letters are appended one at a time and each new B is moved left past the
/// A's with AB -> qBA + I only.
inline NormalForm normal_order(const WordPoly& e, const LaurentPoly& q = LaurentPoly::param('q')) {
  NormalForm total;
  for (const auto& [word, coef] : e.terms()) {
    NormalForm cur;
    cur.add(0, 0, coef);
    for (char ch : word) {
      if (ch == 'I') continue;
      NormalForm next;
      if (ch == 'A') {
        for (const auto& [k, c] : cur.coeffs()) next.add(k.first, k.second + 1, c);
      } else if (ch == 'B') {
        for (const auto& [k, c] : cur.coeffs()) {
          // B^m A^j B A^t = q B^m A^{j-1} B A^{t+1} + B^m A^{j-1+t}
          const unsigned m = k.first;
          unsigned j = k.second;
          unsigned t = 0;
          LaurentPoly w = c;
          while (j > 0) {
            next.add(m, j - 1 + t, w);
            w *= q;
            --j;
            ++t;
          }
          next.add(m + 1, t, w);
        }
      } else {
        throw ParseError(std::string("letter '") + ch + "' is not a generator of H(q)");
      }
      cur = std::move(next);
    }
    for (const auto& [k, c] : cur.coeffs()) total.add(k.first, k.second, c);
  }
  return total;
}

/// Rewrites a uniformly chosen occurrence of AB anywhere in the expression
/// until none is left. Used to test independence of the rewrite order.
inline NormalForm normal_order_random(const WordPoly& e, std::mt19937_64& rng,
                                      const LaurentPoly& q = LaurentPoly::param('q')) {
  WordPoly cur;
  for (const auto& [w, c] : e.terms()) {
    std::string stripped;
    for (char ch : w) {
      if (ch == 'A' || ch == 'B') {
        stripped += ch;
      } else if (ch != 'I') {
        throw ParseError(std::string("letter '") + ch + "' is not a generator of H(q)");
      }
    }
    cur.add(stripped, c);
  }
  while (true) {
    std::vector<std::pair<std::string, std::size_t>> sites;
    for (const auto& [w, c] : cur.terms()) {
      for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (w[p] == 'A' && w[p + 1] == 'B') sites.emplace_back(w, p);
      }
    }
    if (sites.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
    auto [w, p] = sites[pick(rng)];
    LaurentPoly c = cur.terms().at(w);
    cur.add(w, -c);
    std::string swapped = w;
    swapped[p] = 'B';
    swapped[p + 1] = 'A';
    cur.add(swapped, q * c);
    cur.add(w.substr(0, p) + w.substr(p + 2), c);
  }
  NormalForm out;
  for (const auto& [w, c] : cur.terms()) {
    auto m = static_cast<unsigned>(w.find_first_not_of('B') == std::string::npos
                                       ? w.size()
                                       : w.find_first_not_of('B'));
    out.add(m, static_cast<unsigned>(w.size()) - m, c);
  }
  return out;
}

inline bool verify_identity(const WordPoly& lhs, const WordPoly& rhs) {
  return normal_order(lhs) == normal_order(rhs);
}

// ---- identity families -----------------------------------------------------

inline WordPoly A_pow(unsigned n) { return letter('A').pow(n); }
inline WordPoly B_pow(unsigned n) { return letter('B').pow(n); }
inline LaurentPoly qp(int e) { return LaurentPoly::param('q', e); }

/// AB^n = q^n B^n A + {n} B^{n-1} and A^n B = q^n B A^n + {n} A^{n-1}.
inline bool verify_powandprod(unsigned n) {
  const WordPoly A = letter('A');
  const WordPoly B = letter('B');
  const int e = static_cast<int>(n);
  bool one = verify_identity(A * B_pow(n), qp(e) * (B_pow(n) * A) + q_integer(n) * B_pow(n - 1));
  bool two = verify_identity(A_pow(n) * B, qp(e) * (B * A_pow(n)) + q_integer(n) * A_pow(n - 1));
  return one && two;
}

/// BA^n = q^{-n} A^n B - q^{-1} {n}_{1/q} A^{n-1} and
/// B^n A = q^{-n} A B^n - q^{-1} {n}_{1/q} B^{n-1}, ordered at q = q0.
inline bool verify_powandprod_reciprocal(unsigned n, const GaussRat& q0) {
  if (q0.is_zero()) throw QZero("reciprocal forms need q != 0");
  const WordPoly A = letter('A');
  const WordPoly B = letter('B');
  const int e = static_cast<int>(n);
  const LaurentPoly inv_int = q_integer(n).reciprocal_param().shifted(-1);
  const LaurentPoly q0c(q0);
  auto check = [&](const WordPoly& lhs, const WordPoly& rhs) {
    return normal_order(lhs.eval(q0), q0c) == normal_order(rhs.eval(q0), q0c);
  };
  bool one = check(B * A_pow(n), qp(-e) * (A_pow(n) * B) - inv_int * A_pow(n - 1));
  bool two = check(B_pow(n) * A, qp(-e) * (A * B_pow(n)) - inv_int * B_pow(n - 1));
  return one && two;
}

enum class JacobiFamily { bnan, anbn, bracketBmAn };

inline std::string to_string(JacobiFamily f) {
  switch (f) {
    case JacobiFamily::bnan: return "bnan";
    case JacobiFamily::anbn: return "anbn";
    case JacobiFamily::bracketBmAn: return "bracketBmAn";
  }
  return "?";
}

/// The two power identities are compared after clearing their denominators
/// q^{C(n,2)} (q-1)^n and (q-1)^n; [A,B] is the ordinary commutator.
/// `m` is used only by bracketBmAn.
inline bool verify_generalized_jacobi(unsigned n, JacobiFamily which, unsigned m = 1) {
  const WordPoly A = letter('A');
  const WordPoly B = letter('B');
  const LaurentPoly qm1 = qp(1) - LaurentPoly(1);
  const WordPoly comm = commutator(A, B);
  auto sign = [](unsigned e) { return LaurentPoly(e % 2 ? -1 : 1); };
  switch (which) {
    case JacobiFamily::bnan: {
      WordPoly rhs;
      for (unsigned k = 0; k <= n; ++k) {
        rhs += (sign(n - k) * qp(static_cast<int>(choose2(n - k))) * q_binomial(n, k)) * comm.pow(k);
      }
      WordPoly lhs = (qp(static_cast<int>(choose2(n))) * qm1.pow(n)) * (B_pow(n) * A_pow(n));
      return verify_identity(lhs, rhs);
    }
    case JacobiFamily::anbn: {
      WordPoly rhs;
      for (unsigned k = 0; k <= n; ++k) {
        rhs += (sign(n - k) * qp(static_cast<int>(choose2(k + 1))) * q_binomial(n, k)) *
               comm.pow(k);
      }
      WordPoly lhs = qm1.pow(n) * (A_pow(n) * B_pow(n));
      return verify_identity(lhs, rhs);
    }
    case JacobiFamily::bracketBmAn: {
      WordPoly lhs = commutator(B, B_pow(m) * A_pow(n));
      WordPoly rhs = (LaurentPoly(1) - qp(static_cast<int>(n))) * (B_pow(m + 1) * A_pow(n)) -
                     q_integer(n) * (B_pow(m) * A_pow(n - 1));
      return verify_identity(lhs, rhs);
    }
  }
  return false;
}

/// Normal form of A^n B^m in H(0).
inline NormalForm q_zero_products(unsigned n, unsigned m) {
  return normal_order(A_pow(n) * B_pow(m), LaurentPoly(0));
}

/// A^{n-m} when n >= m, else B^{m-n}.
inline NormalForm q_zero_expected(unsigned n, unsigned m) {
  NormalForm f;
  if (n >= m) {
    f.add(0, n - m, LaurentPoly(1));
  } else {
    f.add(m - n, 0, LaurentPoly(1));
  }
  return f;
}

enum class FreeIdentity { bilinear, antisym1, antisym2, jacobi1, jacobi2, jacobi3 };

inline std::vector<FreeIdentity> all_free_identities() {
  return {FreeIdentity::bilinear, FreeIdentity::antisym1, FreeIdentity::antisym2,
          FreeIdentity::jacobi1,  FreeIdentity::jacobi2,  FreeIdentity::jacobi3};
}

inline std::string to_string(FreeIdentity f) {
  switch (f) {
    case FreeIdentity::bilinear: return "bilinear";
    case FreeIdentity::antisym1: return "antisym1";
    case FreeIdentity::antisym2: return "antisym2";
    case FreeIdentity::jacobi1: return "jacobi1";
    case FreeIdentity::jacobi2: return "jacobi2";
    case FreeIdentity::jacobi3: return "jacobi3";
  }
  return "?";
}

/// Identities of the q-mutator [X,Y]_q = XY - qYX in the free associative
/// algebra on A, B, C. With q0 unset the parameter stays symbolic.
inline bool free_identity_check(FreeIdentity which, const std::optional<GaussRat>& q0 = {}) {
  const LaurentPoly q = q0 ? LaurentPoly(*q0) : qp(1);
  const WordPoly A = letter('A');
  const WordPoly B = letter('B');
  const WordPoly C = letter('C');
  auto qm = [&](const WordPoly& x, const WordPoly& y) { return qmutator(x, y, q); };
  switch (which) {
    case FreeIdentity::bilinear: {
      const LaurentPoly alpha(GaussRat(Rational(2), Rational(-1)));
      const LaurentPoly beta(GaussRat::fraction(-3, 7));
      return qm(A + C, B) == qm(A, B) + qm(C, B) && qm(A, B + C) == qm(A, B) + qm(A, C) &&
             qm(alpha * A, beta * B) == (alpha * beta) * qm(A, B);
    }
    case FreeIdentity::antisym1: {
      LaurentPoly qinv;
      if (q0) {
        if (q0->is_zero()) throw QZero("[A,B]_q = -q[B,A]_{1/q} needs q != 0");
        qinv = LaurentPoly(q0->inverse());
      } else {
        qinv = qp(-1);
      }
      return qm(A, B) == -q * qmutator(B, A, qinv);
    }
    case FreeIdentity::antisym2:
      return qm(B, A) == qm(A, B) - (LaurentPoly(1) + q) * commutator(A, B);
    case FreeIdentity::jacobi1:
      return qm(A * B, C) == commutator(A, B * C) + qm(B, C * A);
    case FreeIdentity::jacobi2:
      return qm(A, B * C) == qm(A * B, C) + q * commutator(C * A, B);
    case FreeIdentity::jacobi3: {
      WordPoly lhs = qm(A, qm(B, C)) + qm(B, qm(C, A)) + qm(C, qm(A, B));
      WordPoly cyc = A * B * C + B * C * A + C * A * B;
      WordPoly anti = A * C * B + B * A * C + C * B * A;
      return lhs == (LaurentPoly(1) - q) * (cyc - q * anti);
    }
  }
  return false;
}

// ---- expression parser -----------------------------------------------------

/// Grammar: sum of products of factors; factor = atom ['^' int]; atoms are
/// generator letters, I, q, i, integers and parenthesized sums. '/' divides
/// by a nonzero constant. A negative power is allowed on a scalar monomial.
class ExprParser {
 public:
  ExprParser(std::string_view text, std::string letters) : s_(text), letters_(std::move(letters)) {}

  WordPoly parse() {
    WordPoly e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WordPoly sum() {
    WordPoly acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    WordPoly t = product();
    acc = neg ? LaurentPoly(-1) * t : t;
    while (true) {
      if (eat('+')) {
        acc += product();
      } else if (eat('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  WordPoly product() {
    WordPoly acc = power();
    while (true) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        WordPoly d = power();
        if (d.terms().size() != 1 || !d.terms().begin()->first.empty() ||
            !d.terms().begin()->second.is_constant()) {
          fail("division only by nonzero constants");
        }
        acc = LaurentPoly(d.terms().begin()->second.constant_term().inverse()) * acc;
      } else {
        return acc;
      }
    }
  }

  WordPoly power() {
    WordPoly base = atom();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    const unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    if (!neg) return base.pow(e);
    if (base.terms().size() != 1 || !base.terms().begin()->first.empty() ||
        base.terms().begin()->second.terms().size() != 1) {
      fail("negative powers only of scalar monomials");
    }
    const auto& [ex, c] = *base.terms().begin()->second.terms().begin();
    LaurentPoly inv = LaurentPoly::monomial(c.inverse(), -ex);
    return WordPoly::scalar(inv.pow(e));
  }

  WordPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      WordPoly e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return WordPoly::scalar(
          LaurentPoly(GaussRat(Rational(std::string(s_.substr(start, pos_ - start))))));
    }
    ++pos_;
    if (c == 'q') return WordPoly::scalar(qp(1));
    if (c == 'i') return WordPoly::scalar(LaurentPoly(GaussRat::i()));
    if (c == 'I') return WordPoly::unit();
    if (letters_.find(c) != std::string::npos) return letter(c);
    --pos_;
    fail("unknown symbol '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::string letters_;
  std::size_t pos_ = 0;
};

inline WordPoly parse_expression(std::string_view text, const std::string& letters = "AB") {
  return ExprParser(text, letters).parse();
}

// ---- batch suite -----------------------------------------------------------

inline std::vector<GaussRat> reciprocal_sample_points() {
  return {GaussRat(-1), GaussRat::fraction(-1, 2), GaussRat::fraction(1, 3), GaussRat(2)};
}

/// Every q-identity family with sizes bounded by max_n (capped per family at
/// the ranges the acceptance suite uses).
inline Report qheis_identity_suite(unsigned max_n = 12) {
  Report r;
  r.command = "qheis verify";
  ScopedTimer timer(r);
  auto add = [&](const std::string& name, bool ok) { r.add(name, "holds", ok ? "holds" : "fails", ok); };
  const unsigned nb = std::max(max_n, 20u);
  for (unsigned n = 0; n <= nb; ++n) {
    bool ok = true;
    for (unsigned k = 0; k <= n; ++k) ok = ok && q_binomial(n, k) == q_binomial_closed(n, k);
    add("binomial recursion = closed form, n=" + std::to_string(n), ok);
  }
  for (unsigned n = 1; n <= max_n; ++n) add("powandprod n=" + std::to_string(n), verify_powandprod(n));
  for (const auto& q0 : reciprocal_sample_points()) {
    for (unsigned n = 1; n <= max_n; ++n) {
      add("powandprod reciprocal n=" + std::to_string(n) + " q=" + q0.to_string(),
          verify_powandprod_reciprocal(n, q0));
    }
  }
  for (unsigned n = 1; n <= std::min(max_n, 6u); ++n) {
    add("bnan n=" + std::to_string(n), verify_generalized_jacobi(n, JacobiFamily::bnan));
    add("anbn n=" + std::to_string(n), verify_generalized_jacobi(n, JacobiFamily::anbn));
    for (unsigned m = 1; m <= std::min(max_n, 6u); ++m) {
      add("[B,B^mA^n] m=" + std::to_string(m) + " n=" + std::to_string(n),
          verify_generalized_jacobi(n, JacobiFamily::bracketBmAn, m));
    }
  }
  for (auto f : all_free_identities()) add("free " + to_string(f), free_identity_check(f));
  for (unsigned n = 1; n <= std::min(max_n, 8u); ++n) {
    for (unsigned m = 1; m <= std::min(max_n, 8u); ++m) {
      add("q=0 A^" + std::to_string(n) + "B^" + std::to_string(m),
          q_zero_products(n, m) == q_zero_expected(n, m));
    }
  }
  for (unsigned n = 1; n <= std::min(max_n, 8u); ++n) {
    bool ok = true;
    for (unsigned k = 0; k <= n; ++k) ok = ok && subset_sum_binomial_check(n, k).shifted_matches;
    add("subset sum n=" + std::to_string(n), ok);
  }
  bool reciprocal = true;
  for (unsigned n = 1; n <= std::min(max_n, 8u); ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (const auto& q0 : reciprocal_sample_points()) {
        reciprocal = reciprocal && q_reciprocal_checks(n, k, q0).ok();
      }
    }
  }
  add("reciprocal q-combinatorics n<=8", reciprocal);
  return r;
}

}  // namespace lieq
