#pragma once

// Differential operators acting on concrete polynomials: |d_z|, |z|, the
// Laplace-Beltrami-type operator D(z), Sekiguchi operators H_{r,p} and their
// generating function S_r(u; z), and the ad(|d_z|)-twisted versions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jackpieri/combinatorics.hpp"
#include "jackpieri/field.hpp"
#include "jackpieri/polyring.hpp"

namespace jackpieri {

/// Polynomial in the formal variable u; coeffs()[k] multiplies u^k. Trailing
/// zero coefficients are trimmed, so equality is structural.
template <class T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  const std::vector<T>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }

  /// Coefficient of u^k, or `zero` past the degree.
  T coeff(int k, const T& zero) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : zero;
  }

  UPoly operator-() const {
    UPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    const UPoly& lng = a.c_.size() >= b.c_.size() ? a : b;
    const UPoly& sht = a.c_.size() >= b.c_.size() ? b : a;
    std::vector<T> out = lng.c_;
    for (std::size_t i = 0; i < sht.c_.size(); ++i) out[i] = out[i] + sht.c_[i];
    return UPoly(std::move(out));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

  template <class S>
  UPoly scaled(const S& s) const {
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c * s);
    return UPoly(std::move(out));
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using R = std::decay_t<decltype(fn(std::declval<const T&>()))>;
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(fn(c));
    return UPoly<R>(std::move(out));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class A, class B>
auto operator*(const UPoly<A>& a, const UPoly<B>& b) {
  using R = std::decay_t<decltype(std::declval<const A&>() * std::declval<const B&>())>;
  if (a.is_zero() || b.is_zero()) return UPoly<R>();
  std::vector<std::optional<R>> acc(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      R t = a.coeffs()[i] * b.coeffs()[j];
      if (acc[i + j]) *acc[i + j] = *acc[i + j] + t;
      else acc[i + j] = std::move(t);
    }
  std::vector<R> out;
  out.reserve(acc.size());
  for (auto& c : acc) out.push_back(std::move(*c));
  return UPoly<R>(std::move(out));
}

/// f(z) times a scalar u-polynomial.
template <ExactField F>
UPoly<MultiPoly<F>> operator*(const MultiPoly<F>& f, const UPoly<F>& s) {
  return s.map([&](const F& c) { return f * c; });
}

/// Horner evaluation at u = u0.
template <ExactField F>
F eval_u(const UPoly<F>& p, const F& u0) {
  F acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * u0 + *it;
  return acc;
}

template <ExactField F>
MultiPoly<F> eval_u(const UPoly<MultiPoly<F>>& p, const F& u0, int rank) {
  MultiPoly<F> acc(rank);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * u0 + *it;
  return acc;
}

template <ExactField F>
std::string to_string(const UPoly<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const F& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coefficient_text(c);
    if (k > 0) out += k == 1 ? "*u" : "*u^" + std::to_string(k);
  }
  return out;
}

template <ExactField F>
std::string to_string(const UPoly<MultiPoly<F>>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const auto& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += "; ";
    out += "[u^" + std::to_string(k) + "] " + to_string(c);
  }
  return out;
}

/// e_l(v_1, ..., v_n).
template <ExactField F>
F elementary_value(const std::vector<F>& v, int l) {
  if (l < 0 || l > static_cast<int>(v.size())) return F(0);
  std::vector<F> e(static_cast<std::size_t>(l) + 1, F(0));
  e[0] = F(1);
  for (const auto& x : v)
    for (int k = l; k >= 1; --k) e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)] + e[static_cast<std::size_t>(k) - 1] * x;
  return e[static_cast<std::size_t>(l)];
}

template <ExactField F>
std::vector<F> to_point(const IntVector& x) {
  std::vector<F> out;
  out.reserve(x.entries.size());
  for (int v : x.entries) out.emplace_back(static_cast<long>(v));
  return out;
}

/// |d_z| f = sum_j d f / d z_j.
template <ExactField F>
MultiPoly<F> apply_total_derivative(const MultiPoly<F>& f) {
  MultiPoly<F> out(f.rank());
  for (int j = 0; j < f.rank(); ++j) out += partial_derivative(f, j);
  return out;
}

/// |z| f.
template <ExactField F>
MultiPoly<F> apply_total_multiplication(const MultiPoly<F>& f) {
  MultiPoly<F> out(f.rank());
  for (int j = 0; j < f.rank(); ++j) out += times_variable(f, j);
  return out;
}

/// Symbolic descriptor of an operator, used to label and dispatch
/// applications in reports.
struct OperatorTag {
  enum class Kind { total_derivative, euler_subset, sekiguchi, sekiguchi_gen, laplace, ad_twist };
  Kind kind = Kind::sekiguchi_gen;
  Subset subset{};        // euler_subset
  int order = 0;          // sekiguchi: p; ad_twist: inner p when !inner_gen
  int level = 0;          // ad_twist: l
  bool inner_gen = true;  // ad_twist: inner operator is S_r(u;z)

  std::string describe() const {
    switch (kind) {
      case Kind::total_derivative: return "|d_z|";
      case Kind::euler_subset: return "E" + subset.to_string();
      case Kind::sekiguchi: return "H_" + std::to_string(order);
      case Kind::sekiguchi_gen: return "S(u)";
      case Kind::laplace: return "D";
      case Kind::ad_twist:
        return "ad^" + std::to_string(level) + "/" + std::to_string(level) + "! " +
               (inner_gen ? std::string("S(u)") : "H_" + std::to_string(order));
    }
    return "?";
  }
};

/// Operator calculus in rank r at a fixed parameter d. Immutable after
/// construction; caches Delta(z) and prod_{i in I} z_i d_i Delta(z) for every I.
template <ExactField F>
class Operators {
 public:
  Operators(int rank, F d)
      : rank_(rank), d_(std::move(d)), two_over_d_(F(2) / d_), half_d_(d_ / F(2)),
        delta_(vandermonde<F>(rank)) {
    for (const Subset& s : all_subsets(rank)) euler_delta_.push_back(euler_subset(delta_, s));
  }

  int rank() const noexcept { return rank_; }
  const F& d() const noexcept { return d_; }
  const MultiPoly<F>& delta() const noexcept { return delta_; }

  /// D(z) f for symmetric f. The pair sum over j != l of z_j^2/(z_j - z_l) d_j
  /// is formed as (z_j^2 d_j f - z_l^2 d_l f) / (z_j - z_l) for j < l, an
  /// exact division because the numerator is antisymmetric in (j, l).
  MultiPoly<F> apply_D(const MultiPoly<F>& f) const {
    check_rank(f);
    if (!is_symmetric(f)) throw NotSymmetric("D(z) applied to a non-symmetric polynomial");
    std::vector<MultiPoly<F>> first;  // z_j^2 d_j f
    MultiPoly<F> out(rank_);
    for (int j = 0; j < rank_; ++j) {
      const MultiPoly<F> dj = partial_derivative(f, j);
      out += times_variable(times_variable(partial_derivative(dj, j), j), j);
      first.push_back(times_variable(times_variable(dj, j), j));
    }
    MultiPoly<F> pair(rank_);
    for (int j = 0; j < rank_; ++j)
      for (int l = j + 1; l < rank_; ++l) {
        const MultiPoly<F> num = first[static_cast<std::size_t>(j)] - first[static_cast<std::size_t>(l)];
        if (num.is_zero()) continue;
        pair += divide_exact(num, MultiPoly<F>::variable(rank_, j) - MultiPoly<F>::variable(rank_, l));
      }
    return out + pair * d_;
  }

  /// sum_j m_j (m_j - 1 + d (r - j)).
  F d_eigenvalue(const Partition& m) const {
    F acc(0);
    for (int j = 0; j < rank_; ++j)
      acc = acc + F(m[j]) * (F(m[j] - 1) + d_ * F(rank_ - 1 - j));
    return acc;
  }

  /// H_{r,p} f.
  MultiPoly<F> apply_sekiguchi(int p, const MultiPoly<F>& f) const {
    check_rank(f);
    if (p < 0 || p > rank_) throw InvalidArgument("Sekiguchi order " + std::to_string(p));
    return sekiguchi_all(f, p, p)[0];
  }

  /// S_r(u; z) f; the u^{r-p} coefficient is H_{r,p} f.
  UPoly<MultiPoly<F>> apply_sekiguchi_gen(const MultiPoly<F>& f) const {
    check_rank(f);
    std::vector<MultiPoly<F>> h = sekiguchi_all(f, 0, rank_);
    std::vector<MultiPoly<F>> coeffs(static_cast<std::size_t>(rank_) + 1, MultiPoly<F>(rank_));
    for (int p = 0; p <= rank_; ++p)
      coeffs[static_cast<std::size_t>(rank_ - p)] = std::move(h[static_cast<std::size_t>(p)]);
    return UPoly<MultiPoly<F>>(std::move(coeffs));
  }

  /// [(ad |d_z|)^l / l! S_r(u; z)] f, expanded as
  /// sum_j (-1)^{l-j} / (j! (l-j)!) |d_z|^j S |d_z|^{l-j} f.
  UPoly<MultiPoly<F>> apply_ad_twist(int l, const MultiPoly<F>& f) const {
    return ad_twists(f, l).back();
  }

  /// The twisted generating functions for every level 0..max_level at once,
  /// sharing the S applications between levels.
  std::vector<UPoly<MultiPoly<F>>> ad_twists(const MultiPoly<F>& f, int max_level) const {
    check_rank(f);
    if (max_level < 0) throw InvalidArgument("negative ad level");
    std::vector<MultiPoly<F>> lowered{f};
    for (int i = 1; i <= max_level; ++i) lowered.push_back(apply_total_derivative(lowered.back()));
    std::vector<UPoly<MultiPoly<F>>> s_of;
    for (const auto& g : lowered) s_of.push_back(apply_sekiguchi_gen(g));
    return twist_combine<UPoly<MultiPoly<F>>>(
        s_of, max_level, [](const UPoly<MultiPoly<F>>& p) {
          return p.map([](const MultiPoly<F>& c) { return apply_total_derivative(c); });
        });
  }

  /// [(ad |d_z|)^l / l! H_{r,p}] f.
  MultiPoly<F> apply_ad_twist_single(int l, int p, const MultiPoly<F>& f) const {
    check_rank(f);
    if (l < 0) throw InvalidArgument("negative ad level");
    std::vector<MultiPoly<F>> lowered{f};
    for (int i = 1; i <= l; ++i) lowered.push_back(apply_total_derivative(lowered.back()));
    std::vector<MultiPoly<F>> h_of;
    for (const auto& g : lowered) h_of.push_back(apply_sekiguchi(p, g));
    return twist_combine<MultiPoly<F>>(h_of, l, [](const MultiPoly<F>& c) { return apply_total_derivative(c); })
        .back();
  }

  /// I_{J^c}(u; x) = (2/d)^r prod_{l in J^c} (x_l + (d/2)(u + r - l)).
  UPoly<F> eigen_poly_I(const std::vector<F>& x, Subset complement) const {
    if (static_cast<int>(x.size()) != rank_) throw RankMismatch("eigen_poly_I point");
    UPoly<F> acc(std::vector<F>{power(two_over_d_, rank_)});
    for (int i : complement.indices()) {
      const F constant = x[static_cast<std::size_t>(i)] + half_d_ * F(rank_ - 1 - i);
      acc = acc * UPoly<F>(std::vector<F>{constant, half_d_});
    }
    return acc;
  }

  /// I_r(u; x) = prod_k (u + r - k + (2/d) x_k).
  UPoly<F> eigen_poly_I(const std::vector<F>& x) const { return eigen_poly_I(x, Subset::full(rank_)); }

  /// x + (d/2) delta.
  std::vector<F> shifted_point(const std::vector<F>& x) const {
    std::vector<F> out = x;
    for (int i = 0; i < rank_; ++i) out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)] + half_d_ * F(rank_ - 1 - i);
    return out;
  }

  UPoly<MultiPoly<F>> apply(const OperatorTag& tag, const MultiPoly<F>& f) const {
    using K = OperatorTag::Kind;
    auto lift = [](MultiPoly<F> g) { return UPoly<MultiPoly<F>>(std::vector<MultiPoly<F>>{std::move(g)}); };
    switch (tag.kind) {
      case K::total_derivative: return lift(apply_total_derivative(f));
      case K::euler_subset: return lift(euler_subset(f, tag.subset));
      case K::sekiguchi: return lift(apply_sekiguchi(tag.order, f));
      case K::sekiguchi_gen: return apply_sekiguchi_gen(f);
      case K::laplace: return lift(apply_D(f));
      case K::ad_twist:
        if (tag.level < 0 || tag.level > rank_)
          throw InvalidArgument("ad level " + std::to_string(tag.level) + " outside 0..r");
        return tag.inner_gen ? apply_ad_twist(tag.level, f)
                             : lift(apply_ad_twist_single(tag.level, tag.order, f));
    }
    throw InvalidArgument("unknown operator tag");
  }

 private:
  void check_rank(const MultiPoly<F>& f) const {
    if (f.rank() != rank_) throw RankMismatch("operator rank " + std::to_string(rank_) + ", input rank " + std::to_string(f.rank()));
  }

  /// H_{r,p} f for p in [p_lo, p_hi], indexed from p_lo. Per definition,
  /// H_{r,p} = sum_l (2/d)^{p-l} sum_{|I|=l} [(E_I Delta)/Delta] sum_{J in I^c,
  /// |J|=p-l} E_J with E_S = prod_{s in S} z_s d_s. The (E_I Delta)/Delta
  /// factors are functions; the combined numerator is antisymmetric for
  /// symmetric f and is divided by Delta once.
  std::vector<MultiPoly<F>> sekiguchi_all(const MultiPoly<F>& f, int p_lo, int p_hi) const {
    const auto subsets = all_subsets(rank_);
    std::vector<MultiPoly<F>> ef;
    ef.reserve(subsets.size());
    for (const Subset& s : subsets) ef.push_back(euler_subset(f, s));
    std::vector<F> two_over_d_pow{F(1)};
    for (int k = 1; k <= rank_; ++k) two_over_d_pow.push_back(two_over_d_pow.back() * two_over_d_);

    std::vector<MultiPoly<F>> out;
    for (int p = p_lo; p <= p_hi; ++p) {
      MultiPoly<F> numerator(rank_);
      for (const Subset& i_set : subsets) {
        const int l = i_set.size();
        if (l > p) continue;
        const MultiPoly<F>& edelta = euler_delta_[i_set.bits()];
        if (edelta.is_zero()) continue;
        MultiPoly<F> inner(rank_);
        for (const Subset& j_set : subsets)
          if (j_set.size() == p - l && j_set.disjoint(i_set)) inner += ef[j_set.bits()];
        if (inner.is_zero()) continue;
        numerator += edelta * (inner * two_over_d_pow[static_cast<std::size_t>(p - l)]);
      }
      try {
        out.push_back(divide_exact(numerator, delta_));
      } catch (const InexactDivision&) {
        if (!is_symmetric(f)) throw NotSymmetric("H_{r," + std::to_string(p) + "} of a non-symmetric polynomial is not polynomial");
        throw;
      }
    }
    return out;
  }

  /// Binomial expansion of (ad A)^l B / l! for each l <= max_level, given
  /// b_of[i] = B A^i f and a lowering map A applied on the left.
  template <class T, class Lower>
  static std::vector<T> twist_combine(const std::vector<T>& b_of, int max_level, Lower lower) {
    std::vector<Rational> inv_fact{Rational(1)};
    for (int k = 1; k <= max_level; ++k) inv_fact.push_back(inv_fact.back() / Rational(k));
    std::vector<T> out;
    for (int l = 0; l <= max_level; ++l) {
      std::optional<T> acc;
      for (int j = 0; j <= l; ++j) {
        T term = b_of[static_cast<std::size_t>(l - j)];
        for (int k = 0; k < j; ++k) term = lower(term);
        Rational c = inv_fact[static_cast<std::size_t>(j)] * inv_fact[static_cast<std::size_t>(l - j)];
        if ((l - j) % 2) c = -c;
        term = scale(term, F(c));
        acc = acc ? *acc + term : term;
      }
      out.push_back(std::move(*acc));
    }
    return out;
  }

  static MultiPoly<F> scale(const MultiPoly<F>& p, const F& c) { return p * c; }
  static UPoly<MultiPoly<F>> scale(const UPoly<MultiPoly<F>>& p, const F& c) { return p.scaled(c); }

  int rank_;
  F d_;
  F two_over_d_;
  F half_d_;
  MultiPoly<F> delta_;
  std::vector<MultiPoly<F>> euler_delta_;
};

}  // namespace jackpieri
