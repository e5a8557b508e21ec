#pragma once

// Jack polynomials P_m(z; d/2) from the triangular eigen characterization of
// D(z), the Phi normalization, and the A-coefficient products.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jackpieri/cache.hpp"
#include "jackpieri/combinatorics.hpp"
#include "jackpieri/field.hpp"
#include "jackpieri/operators.hpp"
#include "jackpieri/polyring.hpp"

namespace jackpieri {

template <ExactField F>
struct JackPolynomial {
  Partition index;
  SymPoly<F> expansion;  // coefficients c_{mk} on m_k
  MultiPoly<F> poly;
};

enum class Normalization { phi, psi };

template <ExactField F>
struct NormalizedJack {
  Normalization kind;
  std::shared_ptr<const JackPolynomial<F>> underlying;
  F normalizer;
  MultiPoly<F> poly;  // underlying / normalizer
};

/// Which A-product to form.
///   single: A_{+-,i}, factors k in [r] \ {i}
///   subset: A_{+-,J}, factors (j, l) with j in J, l in J^c
///   pair:   A_{+-,i,I\i}, factors k in I \ {i}
struct ASpec {
  enum class Kind { single, subset, pair };
  Kind kind = Kind::single;
  int i = 0;
  Subset set{};

  static ASpec single_index(int i) { return {Kind::single, i, {}}; }
  static ASpec subset_of(Subset j) { return {Kind::subset, 0, j}; }
  static ASpec pair_in(int i, Subset set) { return {Kind::pair, i, set}; }
};

/// prod over (j, l) of (x_j - x_l - (d/2)(j - l) +- d/2) / (x_j - x_l - (d/2)(j - l)).
template <ExactField F>
F a_product(Sign sign, const std::vector<F>& x, const F& d, Subset left, Subset right) {
  const F half = d / F(2);
  F acc(1);
  for (int j : left.indices())
    for (int l : right.indices()) {
      if (j == l) continue;
      const F base = x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(l)] - half * F(j - l);
      if (base.is_zero())
        throw PoleInA("factor (" + std::to_string(j + 1) + "," + std::to_string(l + 1) + ") at d=" + d.to_string());
      acc = acc * (sign == Sign::plus ? base + half : base - half) / base;
    }
  return acc;
}

template <ExactField F>
F a_coefficient(Sign sign, const std::vector<F>& x, const ASpec& spec, const F& d) {
  const int r = static_cast<int>(x.size());
  switch (spec.kind) {
    case ASpec::Kind::single:
      return a_product(sign, x, d, Subset::single(spec.i), Subset::full(r).without(spec.i));
    case ASpec::Kind::subset:
      return a_product(sign, x, d, spec.set, spec.set.complement(r));
    case ASpec::Kind::pair:
      return a_product(sign, x, d, Subset::single(spec.i), spec.set.without(spec.i));
  }
  throw InvalidArgument("unknown A specification");
}

template <ExactField F>
F a_coefficient(Sign sign, const IntVector& x, const ASpec& spec, const F& d) {
  return a_coefficient(sign, to_point<F>(x), spec, d);
}

/// s_j = x_j + (d/2)(r - j), 0-based j.
template <ExactField F>
F shifted_entry(const std::vector<F>& x, int j, const F& d) {
  const int r = static_cast<int>(x.size());
  return x[static_cast<std::size_t>(j)] + d / F(2) * F(r - 1 - j);
}

/// Jack polynomials of one rank at one value of d, cached by index.
template <ExactField F>
class JackFamily {
 public:
  JackFamily(int rank, F d) : ops_(rank, std::move(d)) {}

  int rank() const noexcept { return ops_.rank(); }
  const F& d() const noexcept { return ops_.d(); }
  const Operators<F>& ops() const noexcept { return ops_; }

  /// P_m. Lower coefficients are fixed top-down in descending lex order by
  /// (E_m - E_mu) c_mu = sum_{k > mu} c_k [D m_k]_mu.
  std::shared_ptr<const JackPolynomial<F>> jack(const Partition& m) const {
    check_rank(m);
    return jacks_.get_or_compute(m, [&] { return construct(m); });
  }

  F eval_at_ones(const Partition& m) const {
    F value = evaluate(jack(m)->poly, std::vector<F>(static_cast<std::size_t>(rank()), F(1)));
    if (value.is_zero()) throw ZeroNormalizer("P_(" + m.to_string() + ")(1) = 0 at d=" + d().to_string());
    return value;
  }

  std::shared_ptr<const NormalizedJack<F>> phi(const Partition& m) const {
    check_rank(m);
    return phis_.get_or_compute(m, [&] {
      auto p = jack(m);
      F norm = eval_at_ones(m);
      MultiPoly<F> poly = p->poly * (F(1) / norm);
      return NormalizedJack<F>{Normalization::phi, std::move(p), std::move(norm), std::move(poly)};
    });
  }

  /// Coefficients of a symmetric polynomial on {P_lambda}.
  std::map<Partition, F, DescendingWeightLex> to_jack_basis(const MultiPoly<F>& p) const {
    std::map<Partition, F, DescendingWeightLex> out;
    SymPoly<F> rem = to_monomial_basis(p);
    while (!rem.is_zero()) {
      const auto [lambda, c] = *rem.coeffs().begin();
      out.emplace(lambda, c);
      for (const auto& [mu, cm] : jack(lambda)->expansion.coeffs()) rem.add_term(mu, -(c * cm));
    }
    return out;
  }

 private:
  void check_rank(const Partition& m) const {
    if (m.rank() != rank())
      throw RankMismatch("partition (" + m.to_string() + ") in rank " + std::to_string(rank()));
  }

  const SymPoly<F>& d_row(const Partition& k) const {
    return *d_rows_.get_or_compute(k, [&] { return to_monomial_basis(ops_.apply_D(monomial_symmetric<F>(k))); });
  }

  JackPolynomial<F> construct(const Partition& m) const {
    const auto ideal = dominance_ideal(m);
    const F e_m = ops_.d_eigenvalue(m);
    std::vector<F> c;
    c.reserve(ideal.size());
    c.push_back(F(1));
    std::vector<const SymPoly<F>*> rows;
    rows.push_back(&d_row(ideal[0]));
    for (std::size_t idx = 1; idx < ideal.size(); ++idx) {
      const Partition& mu = ideal[idx];
      F rhs(0);
      for (std::size_t k = 0; k < idx; ++k)
        if (!c[k].is_zero()) rhs = rhs + c[k] * rows[k]->coefficient(mu);
      const F gap = e_m - ops_.d_eigenvalue(mu);
      if (gap.is_zero())
        throw EigenvalueCollision("d=" + d().to_string() + ", m=(" + m.to_string() + "), k=(" + mu.to_string() + ")");
      c.push_back(rhs / gap);
      rows.push_back(&d_row(mu));
    }
    SymPoly<F> expansion(rank());
    for (std::size_t idx = 0; idx < ideal.size(); ++idx) expansion.add_term(ideal[idx], c[idx]);
    MultiPoly<F> poly = expansion.expand();
    return JackPolynomial<F>{m, std::move(expansion), std::move(poly)};
  }

  Operators<F> ops_;
  ConcurrentCache<Partition, JackPolynomial<F>> jacks_;
  ConcurrentCache<Partition, NormalizedJack<F>> phis_;
  ConcurrentCache<Partition, SymPoly<F>> d_rows_;
};

}  // namespace jackpieri
