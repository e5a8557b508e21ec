#pragma once

// Interpolation Jack polynomials P^ip_m from their vanishing characterization,
// the Psi normalization, binomial coefficients and the difference operator
// D_r^ip(u; x).

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jackpieri/cache.hpp"
#include "jackpieri/combinatorics.hpp"
#include "jackpieri/field.hpp"
#include "jackpieri/jack.hpp"
#include "jackpieri/linsolve.hpp"
#include "jackpieri/operators.hpp"
#include "jackpieri/polyring.hpp"

namespace jackpieri {

template <ExactField F>
struct InterpJackPolynomial {
  Partition index;
  std::map<Partition, F, DescendingWeightLex> jack_coeffs;  // a_mu, with a_m = 1
  MultiPoly<F> poly;
};

/// One J-term of D_r^ip(u; x):
/// (-1)^|J| I_{J^c}(u; x) A_{-,J}(x) prod_{j in J} s_j, acting by x -> x - eps_J.
template <ExactField F>
struct DifferenceTerm {
  Subset shift;
  UPoly<F> coefficient;
};

template <ExactField F>
class DifferenceOperator {
 public:
  explicit DifferenceOperator(const Operators<F>& ops) : ops_(&ops) {}

  std::vector<DifferenceTerm<F>> terms(const std::vector<F>& x) const {
    std::vector<DifferenceTerm<F>> out;
    const int r = ops_->rank();
    for (const Subset& j_set : all_subsets(r)) {
      F scalar = a_coefficient(Sign::minus, x, ASpec::subset_of(j_set), ops_->d());
      for (int j : j_set.indices()) scalar = scalar * shifted_entry(x, j, ops_->d());
      if (j_set.size() % 2) scalar = -scalar;
      out.push_back({j_set, ops_->eigen_poly_I(x, j_set.complement(r)).scaled(scalar)});
    }
    return out;
  }

  /// sum_J coefficient_J(x) f(x - eps_J).
  template <class Fn>
  UPoly<F> apply(Fn&& f, const std::vector<F>& x) const {
    UPoly<F> acc;
    for (const auto& term : terms(x)) {
      if (term.coefficient.is_zero()) continue;
      std::vector<F> y = x;
      for (int j : term.shift.indices()) y[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j)] - F(1);
      acc = acc + term.coefficient.scaled(f(y));
    }
    return acc;
  }

 private:
  const Operators<F>* ops_;
};

/// Interpolation Jack polynomials of one rank at one value of d, together
/// with the ordinary family they are expanded in.
template <ExactField F>
class InterpFamily {
 public:
  InterpFamily(int rank, F d) : jacks_(rank, std::move(d)) {}

  int rank() const noexcept { return jacks_.rank(); }
  const F& d() const noexcept { return jacks_.d(); }
  const Operators<F>& ops() const noexcept { return jacks_.ops(); }
  const JackFamily<F>& jacks() const noexcept { return jacks_; }

  /// P^ip_m = P_m + sum_{|mu| < |m|} a_mu P_mu, with the a_mu fixed by
  /// vanishing at nu + (d/2) delta for every partition |nu| < |m|.
  std::shared_ptr<const InterpJackPolynomial<F>> interp_jack(const Partition& m) const {
    if (m.rank() != rank())
      throw RankMismatch("partition (" + m.to_string() + ") in rank " + std::to_string(rank()));
    return interps_.get_or_compute(m, [&] { return construct(m); });
  }

  /// P^ip_m at an arbitrary point.
  F eval_interp(const Partition& m, const std::vector<F>& point) const {
    return evaluate(interp_jack(m)->poly, point);
  }

  /// P^ip_m(x + (d/2) delta).
  F eval_interp_shifted(const Partition& m, const std::vector<F>& x) const {
    return eval_interp(m, ops().shifted_point(x));
  }

  F psi_normalizer(const Partition& m) const {
    F value = eval_interp_shifted(m, to_point<F>(m.as_vector()));
    if (value.is_zero())
      throw ZeroNormalizer("P^ip_(" + m.to_string() + ") vanishes at its own point, d=" + d().to_string());
    return value;
  }

  std::shared_ptr<const NormalizedJack<F>> phi(const Partition& m) const { return jacks_.phi(m); }

  std::shared_ptr<const NormalizedJack<F>> psi(const Partition& m) const {
    return psis_.get_or_compute(m, [&] {
      auto p = jacks_.jack(m);
      F norm = psi_normalizer(m);
      MultiPoly<F> poly = p->poly * (F(1) / norm);
      return NormalizedJack<F>{Normalization::psi, std::move(p), std::move(norm), std::move(poly)};
    });
  }

  /// P^ip_k(x + (d/2) delta) / P_k(1).
  F binomial_coefficient(const Partition& k, const std::vector<F>& x) const {
    return eval_interp_shifted(k, x) / jacks_.eval_at_ones(k);
  }

  /// P^ip_k(x + (d/2) delta) / P^ip_k(k + (d/2) delta); the ordinary binomial
  /// coefficient C(x, k) at r = 1.
  F normalized_binomial(const Partition& k, const std::vector<F>& x) const {
    return eval_interp_shifted(k, x) / psi_normalizer(k);
  }

  /// D_r^ip(u; x) applied to x -> P^ip_k(x + (d/2) delta).
  UPoly<F> apply_difference_operator(const Partition& k, const std::vector<F>& x) const {
    return DifferenceOperator<F>(ops()).apply([&](const std::vector<F>& y) { return eval_interp_shifted(k, y); }, x);
  }

 private:
  /// Matrix of P_mu(nu + (d/2) delta) over all partitions of weight < n.
  struct VanishingSystem {
    std::vector<Partition> basis;
    Matrix<F> matrix;
  };

  const VanishingSystem& system(int n) const {
    return *systems_.get_or_compute(n, [&] {
      VanishingSystem sys;
      sys.basis = n == 0 ? std::vector<Partition>{} : partitions_up_to(n - 1, rank());
      for (const auto& nu : sys.basis) {
        const auto point = ops().shifted_point(to_point<F>(nu.as_vector()));
        std::vector<F> row;
        row.reserve(sys.basis.size());
        for (const auto& mu : sys.basis) row.push_back(evaluate(jacks_.jack(mu)->poly, point));
        sys.matrix.push_back(std::move(row));
      }
      return sys;
    });
  }

  InterpJackPolynomial<F> construct(const Partition& m) const {
    const auto top = jacks_.jack(m);
    InterpJackPolynomial<F> out{m, {}, top->poly};
    out.jack_coeffs.emplace(m, F(1));
    const VanishingSystem& sys = system(m.weight());
    if (sys.basis.empty()) return out;
    std::vector<F> rhs;
    rhs.reserve(sys.basis.size());
    for (const auto& nu : sys.basis)
      rhs.push_back(-evaluate(top->poly, ops().shifted_point(to_point<F>(nu.as_vector()))));
    auto sol = solve_fraction_free(sys.matrix, std::move(rhs));
    if (!sol) throw SingularSystem("d=" + d().to_string() + ", m=(" + m.to_string() + ")");
    for (std::size_t i = 0; i < sys.basis.size(); ++i) {
      const F& a = (*sol)[i];
      if (a.is_zero()) continue;
      out.jack_coeffs.emplace(sys.basis[i], a);
      out.poly += jacks_.jack(sys.basis[i])->poly * a;
    }
    return out;
  }

  JackFamily<F> jacks_;
  ConcurrentCache<Partition, InterpJackPolynomial<F>> interps_;
  ConcurrentCache<Partition, NormalizedJack<F>> psis_;
  ConcurrentCache<int, VanishingSystem> systems_;
};

}  // namespace jackpieri
