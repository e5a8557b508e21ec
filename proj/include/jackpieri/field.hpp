#pragma once

// Exact scalars: GMP-backed rationals, the rational-function field Q(d) in
// the Jack parameter d, and a runtime-tagged FieldElement for API
// boundaries. Engine code is templated on the field type, so the mode is
// fixed per instantiation.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <ostream>
#include <utility>
#include <variant>
#include <vector>

#include "jackpieri/error.hpp"

namespace jackpieri {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw ZeroDenominator(std::to_string(num) + "/0");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational from_integers(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroDenominator(num.get_str() + "/0");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }

  /// Accepts "p" or "p/q" with optional leading sign.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  int sign() const noexcept { return sgn(v_); }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of 0");
    return Rational(mpq_class(1) / v_);
  }

  std::string to_string() const { return v_.get_str(); }
  std::string to_latex() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    std::string s = sign() < 0 ? "-" : "";
    mpz_class n = abs(v_.get_num());
    return s + "\\frac{" + n.get_str() + "}{" + v_.get_den().get_str() + "}";
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero(to_string() + " / 0");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

/// Dense univariate polynomial in d over Q. No trailing zero coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }
  static QPoly one() { return constant(1); }
  static QPoly monomial(const mpq_class& c, int power) {
    std::vector<mpq_class> v(static_cast<std::size_t>(power) + 1, mpq_class(0));
    v.back() = c;
    return QPoly(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const mpq_class& lc() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  mpq_class coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : mpq_class(0);
  }
  int term_count() const {
    int n = 0;
    for (const auto& c : c_) n += sgn(c) != 0;
    return n;
  }

  mpq_class eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return QPoly(std::move(v));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(v));
  }
  QPoly scaled(const mpq_class& s) const {
    if (sgn(s) == 0) return {};
    QPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division over Q: a = q*b + r with deg r < deg b.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by 0");
    r = a;
    q = QPoly();
    if (a.degree() < b.degree()) return;
    std::vector<mpq_class> qc(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpq_class(0));
    const mpq_class inv = 1 / b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const int shift = r.degree() - b.degree();
      const mpq_class f = r.lc() * inv;
      qc[static_cast<std::size_t>(shift)] = f;
      for (int j = 0; j <= b.degree(); ++j)
        r.c_[static_cast<std::size_t>(j + shift)] -= f * b.c_[static_cast<std::size_t>(j)];
      r.c_.back() = 0;  // exact cancellation of the leading term
      r.trim();
    }
    q = QPoly(std::move(qc));
  }

  QPoly exact_div(const QPoly& b) const {
    QPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw InexactDivision("univariate remainder is nonzero");
    return q;
  }

  QPoly monic() const { return is_zero() ? *this : scaled(1 / lc()); }

  friend QPoly gcd(const QPoly& a, const QPoly& b);

  std::string to_string(char var = 'd') const;
  std::string to_latex(char var = 'd') const;

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<mpq_class> c_;
};

namespace detail {

using IntPoly = std::vector<mpz_class>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Scales a Q-polynomial to a primitive integer polynomial with positive
/// leading coefficient.
inline IntPoly primitive_integer(const QPoly& a) {
  mpz_class l = 1;
  for (const auto& c : a.coeffs()) l = lcm(l, c.get_den());
  IntPoly p;
  p.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) p.emplace_back(c.get_num() * (l / c.get_den()));
  make_primitive(p);
  return p;
}

/// Pseudo-remainder of a by b, returned as a primitive polynomial.
inline IntPoly primitive_prem(IntPoly a, const IntPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const mpz_class la = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j)
      a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
    a.back() = 0;
    make_primitive(a);
  }
  return a;
}

}  // namespace detail

/// Monic gcd over Q, computed by a primitive pseudo-remainder sequence on
/// integer-scaled coefficients.
inline QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return QPoly::one();
  detail::IntPoly x = detail::primitive_integer(a);
  detail::IntPoly y = detail::primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    detail::IntPoly r = detail::primitive_prem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
    if (x.size() == 1) return QPoly::one();
  }
  std::vector<mpq_class> c;
  c.reserve(x.size());
  for (const auto& v : x) c.emplace_back(v);
  return QPoly(std::move(c)).monic();
}

inline std::string QPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    const mpq_class mag = abs(c);
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::string QPoly::to_latex(char var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    first = false;
    const Rational mag{mpq_class(abs(c))};
    if (k == 0) {
      out += mag.to_latex();
      continue;
    }
    if (!mag.is_one()) out += mag.to_latex() + " ";
    out += var;
    if (k > 1) out += "^{" + std::to_string(k) + "}";
  }
  return out;
}

/// Element of Q(d) in canonical form: gcd(num, den) = 1 and den monic, so
/// equality is structural equality.
class RatFunc {
 public:
  RatFunc() : den_(QPoly::one()) {}
  RatFunc(long value) : num_(QPoly::constant(value)), den_(QPoly::one()) {}  // NOLINT
  RatFunc(const Rational& value)  // NOLINT(google-explicit-constructor)
      : num_(QPoly::constant(value.value())), den_(QPoly::one()) {}
  RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  /// The indeterminate d.
  static RatFunc variable() { return RatFunc(QPoly::monomial(1, 1), QPoly::one(), Canonical{}); }

  static RatFunc parse(std::string_view text);

  const QPoly& num() const noexcept { return num_; }
  const QPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// The rational value of a constant element.
  Rational constant_value() const {
    if (!is_constant()) throw ModeMismatch("non-constant element of Q(d): " + to_string());
    return Rational(num_.coeff(0));
  }

  /// Specialization d -> d0.
  Rational eval_at(const Rational& d0) const {
    const mpq_class den = den_.eval(d0.value());
    if (sgn(den) == 0) throw PoleAtD(to_string() + " at d=" + d0.to_string());
    return Rational(mpq_class(num_.eval(d0.value()) / den));
  }

  int sign() const { return is_zero() ? 0 : sgn(num_.lc()); }

  std::string to_string() const;
  std::string to_latex() const {
    if (den_.is_one()) return num_.to_latex();
    return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
  }

  RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_, QPoly::one(), Canonical{});
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    const QPoly g = gcd(a.den_, b.den_);
    const QPoly ad = a.den_.exact_div(g);
    const QPoly bd = b.den_.exact_div(g);
    return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, QPoly::one(), Canonical{});
    // Cross-cancel; the product of monic coprime pieces stays canonical.
    const QPoly g1 = gcd(a.num_, b.den_);
    const QPoly g2 = gcd(b.num_, a.den_);
    QPoly n = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    QPoly d = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    return RatFunc(std::move(n), std::move(d), Canonical{});
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero(a.to_string() + " / 0");
    return a * b.inverse();
  }
  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of 0");
    const mpq_class l = num_.lc();
    return RatFunc(den_.scaled(1 / l), num_.scaled(1 / l), Canonical{});
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RatFunc(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = QPoly::one();
  }

  void normalize() {
    if (den_.is_zero()) throw ZeroDenominator(num_.to_string() + "/0");
    if (num_.is_zero()) {
      den_ = QPoly::one();
      return;
    }
    if (!den_.is_constant()) {
      const QPoly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
    const mpq_class l = den_.lc();
    if (l != 1) {
      num_ = num_.scaled(1 / l);
      den_ = den_.scaled(1 / l);
    }
  }

  QPoly num_;
  QPoly den_;
};

inline std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (num_.term_count() > 1 || n.find('/') != std::string::npos) n = "(" + n + ")";
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

/// Scalar field interface shared by Rational and RatFunc.
template <class F>
concept ExactField = std::regular<F> && requires(const F& a, const F& b, long n, const Rational& q) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.sign() } -> std::convertible_to<int>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { a.to_latex() } -> std::convertible_to<std::string>;
  F(n);
  F(q);
};

template <ExactField F>
F power(F base, int exponent) {
  F acc(1);
  while (exponent > 0) {
    if (exponent & 1) acc = acc * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return acc;
}

/// Specializes a symbolic scalar at a rational d; identity on rationals.
inline Rational eval_at_d(const RatFunc& e, const Rational& d0) { return e.eval_at(d0); }
inline Rational eval_at_d(const Rational& e, const Rational&) { return e; }

namespace detail {

/// Recursive-descent parser for rational expressions in the variable d:
/// integers, d, + - * / ^ and parentheses.
template <ExactField F, bool AllowVariable>
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  F parse() {
    F v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("'" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  F expr() {
    F v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  F term() {
    F v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        F den = unary();
        if (den.is_zero()) throw ZeroDenominator("'" + std::string(s_) + "'");
        v = v / den;
      } else {
        return v;
      }
    }
  }
  F unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return pow_expr();
  }
  F pow_expr() {
    F base = primary();
    if (eat('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = power(base, std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }
  F primary() {
    skip_ws();
    if (eat('(')) {
      F v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && s_[pos_] == 'd') {
      ++pos_;
      if constexpr (AllowVariable) return F::variable();
      else fail("variable d not allowed in a rational literal");
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return F(Rational(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start))))));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  return detail::ExprParser<Rational, false>(text).parse();
}

inline RatFunc RatFunc::parse(std::string_view text) {
  return detail::ExprParser<RatFunc, true>(text).parse();
}

enum class ScalarMode { rational, symbolic };

inline const char* to_string(ScalarMode m) { return m == ScalarMode::rational ? "rational" : "symbolic"; }

/// Runtime-tagged scalar for API boundaries (CLI parsing, reports). Arithmetic
/// between elements of different modes raises ModeMismatch.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Rational v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  FieldElement(RatFunc v) : v_(std::move(v)) {}   // NOLINT(google-explicit-constructor)

  ScalarMode mode() const noexcept {
    return std::holds_alternative<Rational>(v_) ? ScalarMode::rational : ScalarMode::symbolic;
  }
  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const RatFunc& as_ratfunc() const { return std::get<RatFunc>(v_); }

  bool is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
  }
  std::string to_string() const {
    return std::visit([](const auto& x) { return x.to_string(); }, v_);
  }

  enum class Op { add, sub, mul, div };

  friend FieldElement arith(const FieldElement& a, const FieldElement& b, Op op) {
    if (a.mode() != b.mode())
      throw ModeMismatch(std::string(jackpieri::to_string(a.mode())) + " vs " +
                         jackpieri::to_string(b.mode()));
    return std::visit(
        [&](const auto& x) -> FieldElement {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(b.v_);
          switch (op) {
            case Op::add: return x + y;
            case Op::sub: return x - y;
            case Op::mul: return x * y;
            case Op::div:
              if (y.is_zero()) throw DivisionByZero(x.to_string() + " / 0");
              return x / y;
          }
          return x;
        },
        a.v_);
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return arith(a, b, Op::add); }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return arith(a, b, Op::sub); }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return arith(a, b, Op::mul); }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return arith(a, b, Op::div); }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.v_ == b.v_; }

 private:
  std::variant<Rational, RatFunc> v_;
};

/// Canonical form. Constructors already normalize, so this is the identity on
/// any value that exists; it is kept as an explicit, idempotent operation.
inline FieldElement normalize(const FieldElement& e) {
  if (e.mode() == ScalarMode::rational) return e;
  const RatFunc& f = e.as_ratfunc();
  return RatFunc(f.num(), f.den());
}

inline Rational eval_at_d(const FieldElement& e, const Rational& d0) {
  if (e.mode() == ScalarMode::rational) return e.as_rational();
  return e.as_ratfunc().eval_at(d0);
}

}  // namespace jackpieri
