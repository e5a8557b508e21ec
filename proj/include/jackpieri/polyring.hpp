#pragma once

// Sparse exact multivariate polynomials over an ExactField, with the
// monomial-symmetric basis bridge.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "jackpieri/combinatorics.hpp"
#include "jackpieri/error.hpp"
#include "jackpieri/field.hpp"

namespace jackpieri {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded-lex, largest first: total degree, then lexicographic with z1 most
/// significant.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

template <ExactField F>
class MultiPoly {
 public:
  using Terms = std::map<Exponent, F, GradedLexGreater>;

  explicit MultiPoly(int rank = 0) : rank_(rank) {}

  static MultiPoly constant(int rank, const F& c) {
    MultiPoly p(rank);
    p.add_term(Exponent(static_cast<std::size_t>(rank), 0), c);
    return p;
  }
  static MultiPoly variable(int rank, int i) {
    Exponent e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(rank, std::move(e), F(1));
  }
  static MultiPoly monomial(int rank, Exponent e, const F& c) {
    MultiPoly p(rank);
    p.add_term(e, c);
    return p;
  }

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  int degree() const { return is_zero() ? -1 : total_degree(terms_.begin()->first); }

  F coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(const Exponent& e, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly homogeneous_part(int deg) const {
    MultiPoly out(rank_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == deg) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
  }

  template <class Fn>
  MultiPoly map_coefficients(Fn&& fn) const {
    MultiPoly out(rank_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check_rank(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_rank(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_rank(b);
    MultiPoly out(a.rank_);
    Exponent e(static_cast<std::size_t>(a.rank_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const F& s) {
    if (s.is_zero()) return MultiPoly(a.rank_);
    MultiPoly out = a;
    for (auto& [e, c] : out.terms_) c = c * s;
    return out;
  }
  friend MultiPoly operator*(const F& s, const MultiPoly& a) { return a * s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  void check_rank(const MultiPoly& o) const {
    if (rank_ != o.rank_)
      throw RankMismatch(std::to_string(rank_) + " vs " + std::to_string(o.rank_));
  }

  int rank_;
  Terms terms_;
};

template <ExactField F>
MultiPoly<F> partial_derivative(const MultiPoly<F>& p, int i) {
  MultiPoly<F> out(p.rank());
  for (const auto& [e, c] : p.terms()) {
    const int k = e[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    Exponent f = e;
    --f[static_cast<std::size_t>(i)];
    out.add_term(f, c * F(k));
  }
  return out;
}

/// z_i * d/dz_i.
template <ExactField F>
MultiPoly<F> euler(const MultiPoly<F>& p, int i) {
  MultiPoly<F> out(p.rank());
  for (const auto& [e, c] : p.terms()) {
    const int k = e[static_cast<std::size_t>(i)];
    if (k != 0) out.add_term(e, c * F(k));
  }
  return out;
}

/// prod_{i in s} z_i d/dz_i.
template <ExactField F>
MultiPoly<F> euler_subset(const MultiPoly<F>& p, Subset s) {
  MultiPoly<F> out(p.rank());
  const auto idx = s.indices();
  for (const auto& [e, c] : p.terms()) {
    long k = 1;
    for (int i : idx) k *= e[static_cast<std::size_t>(i)];
    if (k != 0) out.add_term(e, c * F(k));
  }
  return out;
}

template <ExactField F>
MultiPoly<F> times_variable(const MultiPoly<F>& p, int i) {
  MultiPoly<F> out(p.rank());
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    ++f[static_cast<std::size_t>(i)];
    out.add_term(f, c);
  }
  return out;
}

template <ExactField F>
MultiPoly<F> swap_variables(const MultiPoly<F>& p, int i, int j) {
  MultiPoly<F> out(p.rank());
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
    out.add_term(f, c);
  }
  return out;
}

/// Invariance under all adjacent transpositions (which generate S_r).
template <ExactField F>
bool is_symmetric(const MultiPoly<F>& p) {
  for (int i = 0; i + 1 < p.rank(); ++i)
    for (const auto& [e, c] : p.terms()) {
      Exponent f = e;
      std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i) + 1]);
      if (!(p.coefficient(f) == c)) return false;
    }
  return true;
}

/// p(z_1 + c_1, ..., z_r + c_r).
template <ExactField F>
MultiPoly<F> substitute_shift(const MultiPoly<F>& p, const std::vector<F>& offsets) {
  if (static_cast<int>(offsets.size()) != p.rank())
    throw RankMismatch("shift vector length " + std::to_string(offsets.size()));
  MultiPoly<F> cur = p;
  for (int i = 0; i < p.rank(); ++i) {
    const F& c = offsets[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    MultiPoly<F> next(p.rank());
    for (const auto& [e, coef] : cur.terms()) {
      const int n = e[static_cast<std::size_t>(i)];
      // z^n -> sum_k C(n,k) c^(n-k) z^k
      mpz_class binom = 1;
      Exponent f = e;
      for (int k = n; k >= 0; --k) {
        // binom tracks C(n, n-k) = C(n, k) for the power c^(n-k)
        f[static_cast<std::size_t>(i)] = k;
        next.add_term(f, coef * F(Rational(mpq_class(binom))) * power(c, n - k));
        binom = binom * k / (n - k + 1);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

/// Exact quotient p / q by leading-term long division under graded-lex.
template <ExactField F>
MultiPoly<F> divide_exact(const MultiPoly<F>& p, const MultiPoly<F>& q) {
  if (q.is_zero()) throw DivisionByZero("polynomial division by 0");
  if (p.rank() != q.rank()) throw RankMismatch("divide_exact");
  const auto& [lead_e, lead_c] = *q.terms().begin();
  const F lead_inv = F(1) / lead_c;
  MultiPoly<F> rem = p;
  MultiPoly<F> quo(p.rank());
  Exponent t(static_cast<std::size_t>(p.rank()));
  Exponent s(static_cast<std::size_t>(p.rank()));
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().begin();
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = e[i] - lead_e[i];
      if (t[i] < 0) throw InexactDivision("leading monomial not divisible");
    }
    const F coef = c * lead_inv;
    quo.add_term(t, coef);
    for (const auto& [qe, qc] : q.terms()) {
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = t[i] + qe[i];
      rem.add_term(s, -(coef * qc));
    }
  }
  return quo;
}

template <ExactField F>
F evaluate(const MultiPoly<F>& p, const std::vector<F>& point) {
  if (static_cast<int>(point.size()) != p.rank())
    throw RankMismatch("evaluation point of length " + std::to_string(point.size()));
  std::vector<std::vector<F>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(F(1));
  F acc(0);
  for (const auto& [e, c] : p.terms()) {
    F term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto k = static_cast<std::size_t>(e[i]);
      if (k == 0) continue;
      while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * point[i]);
      term = term * powers[i][k];
    }
    acc = acc + term;
  }
  return acc;
}

/// m_lambda(z): sum over distinct permutations of lambda.
template <ExactField F>
MultiPoly<F> monomial_symmetric(const Partition& lambda, const F& coefficient = F(1)) {
  MultiPoly<F> out(lambda.rank());
  Exponent e = lambda.parts();
  std::sort(e.begin(), e.end());
  do {
    out.add_term(e, coefficient);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

/// e_{r,l}(z).
template <ExactField F>
MultiPoly<F> elementary_symmetric(int rank, int l) {
  std::vector<int> parts(static_cast<std::size_t>(rank), 0);
  for (int i = 0; i < l; ++i) parts[static_cast<std::size_t>(i)] = 1;
  return monomial_symmetric<F>(Partition(parts));
}

/// Delta(z) = prod_{i<j} (z_i - z_j).
template <ExactField F>
MultiPoly<F> vandermonde(int rank) {
  MultiPoly<F> out = MultiPoly<F>::constant(rank, F(1));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      out = out * (MultiPoly<F>::variable(rank, i) - MultiPoly<F>::variable(rank, j));
  return out;
}

/// det(z_i^{a_j}) by Leibniz expansion.
template <ExactField F>
MultiPoly<F> alternant(const std::vector<int>& powers) {
  const int r = static_cast<int>(powers.size());
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly<F> out(r);
  Exponent e(static_cast<std::size_t>(r));
  do {
    int inversions = 0;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b) inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    out.add_term(e, F(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Schur polynomial as the bialternant det(z_i^{m_j+r-j}) / det(z_i^{r-j}).
template <ExactField F>
MultiPoly<F> schur_bialternant(const Partition& m) {
  const int r = m.rank();
  std::vector<int> top(static_cast<std::size_t>(r)), base(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    base[static_cast<std::size_t>(j)] = r - 1 - j;
    top[static_cast<std::size_t>(j)] = m[j] + r - 1 - j;
  }
  return divide_exact(alternant<F>(top), alternant<F>(base));
}

/// Symmetric polynomial stored on the monomial symmetric basis.
template <ExactField F>
class SymPoly {
 public:
  using Coeffs = std::map<Partition, F, DescendingWeightLex>;

  explicit SymPoly(int rank = 0) : rank_(rank) {}

  int rank() const noexcept { return rank_; }
  const Coeffs& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }

  F coefficient(const Partition& lambda) const {
    auto it = c_.find(lambda);
    return it == c_.end() ? F(0) : it->second;
  }

  void add_term(const Partition& lambda, const F& c) {
    if (lambda.rank() != rank_) throw RankMismatch("SymPoly term (" + lambda.to_string() + ")");
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(lambda, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  MultiPoly<F> expand() const {
    MultiPoly<F> out(rank_);
    for (const auto& [lambda, c] : c_) out += monomial_symmetric(lambda, c);
    return out;
  }

  friend SymPoly operator*(const SymPoly& a, const F& s) {
    SymPoly out(a.rank_);
    for (const auto& [lambda, c] : a.c_) out.add_term(lambda, c * s);
    return out;
  }
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.rank_ == b.rank_ && a.c_ == b.c_; }

 private:
  int rank_;
  Coeffs c_;
};

/// Coefficients on {m_lambda} by iterated stripping of the graded-lex
/// leading term. Raises NotSymmetric if p is not symmetric.
template <ExactField F>
SymPoly<F> to_monomial_basis(const MultiPoly<F>& p) {
  SymPoly<F> out(p.rank());
  MultiPoly<F> rem = p;
  while (!rem.is_zero()) {
    const auto [e, c] = *rem.terms().begin();
    if (!IntVector(e).is_partition())
      throw NotSymmetric("leading exponent (" + join_ints(e) + ") is not decreasing");
    const Partition lambda(e);
    out.add_term(lambda, c);
    rem -= monomial_symmetric(lambda, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering

inline bool is_rational_constant(const Rational&) { return true; }
inline bool is_rational_constant(const RatFunc& f) { return f.is_constant(); }

/// Coefficient in canonical rendering: plain for rationals, parenthesized
/// for non-constant rational functions.
template <ExactField F>
std::string coefficient_text(const F& c) {
  if (is_rational_constant(c)) return c.to_string();
  return "(" + c.to_string() + ")";
}

inline std::string monomial_text(const Exponent& e, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

inline std::string monomial_latex(const Exponent& e, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out += var + "_{" + std::to_string(i + 1) + "}";
    if (e[i] > 1) out += "^{" + std::to_string(e[i]) + "}";
  }
  return out;
}

/// Canonical rendering: graded-lex order, explicit coefficients,
/// e.g. "1*z1^2*z2 + (2*d/(d+2))*z1*z2".
template <ExactField F>
std::string to_string(const MultiPoly<F>& p, const std::string& var = "z") {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += coefficient_text(c);
    const std::string mono = monomial_text(e, var);
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

namespace detail {

/// Appends one signed term in conventional notation.
template <ExactField F>
void append_signed(std::string& out, const F& c, const std::string& basis, bool omit_unit, bool first) {
  const bool neg = c.sign() < 0 && is_rational_constant(c);
  const F mag = neg ? -c : c;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  const bool unit = mag == F(1);
  if (basis.empty()) {
    out += coefficient_text(mag);
  } else if (unit && omit_unit) {
    out += basis;
  } else {
    out += coefficient_text(mag) + "*" + basis;
  }
}

}  // namespace detail

/// Conventional rendering with unit coefficients omitted, e.g. "z1^2 - z1".
template <ExactField F>
std::string to_pretty_string(const MultiPoly<F>& p, const std::string& var = "z") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    detail::append_signed(out, c, monomial_text(e, var), true, first);
    first = false;
  }
  return out;
}

inline std::string basis_text(const char* name, const Partition& lambda) {
  return std::string(name) + "[" + lambda.to_string() + "]";
}

/// Rendering on a named basis, e.g. "m[2,0] + 1*m[1,1]": the leading term
/// drops a unit coefficient, later terms always show it.
template <ExactField F>
std::string to_string(const SymPoly<F>& p, const char* basis = "m") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : p.coeffs()) {
    detail::append_signed(out, c, basis_text(basis, lambda), first, first);
    first = false;
  }
  return out;
}

template <ExactField F>
std::string to_latex(const MultiPoly<F>& p, const std::string& var = "z") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c.sign() < 0 && is_rational_constant(c);
    const F mag = neg ? -c : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    const std::string mono = monomial_latex(e, var);
    const bool paren = !is_rational_constant(mag) && !mono.empty();
    std::string coef = mag == F(1) && !mono.empty() ? "" : mag.to_latex();
    if (paren) coef = "\\left(" + coef + "\\right)";
    out += coef + (coef.empty() || mono.empty() ? "" : " ") + mono;
  }
  return out;
}

template <ExactField F>
std::string to_latex(const SymPoly<F>& p, const char* basis = "m") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : p.coeffs()) {
    const bool neg = c.sign() < 0 && is_rational_constant(c);
    const F mag = neg ? -c : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (!(mag == F(1))) out += (is_rational_constant(mag) ? mag.to_latex() : "\\left(" + mag.to_latex() + "\\right)") + " ";
    out += std::string(basis) + "_{(" + lambda.to_string() + ")}";
  }
  return out;
}

template <ExactField F>
std::ostream& operator<<(std::ostream& os, const MultiPoly<F>& p) {
  return os << to_string(p);
}

template <ExactField F>
std::ostream& operator<<(std::ostream& os, const SymPoly<F>& p) {
  return os << to_string(p);
}

}  // namespace jackpieri
