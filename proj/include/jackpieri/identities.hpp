#pragma once

// Verification suites. Each suite expands into independent exact checks over
// the configured grid of partitions, d values and sample points.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "jackpieri/combinatorics.hpp"
#include "jackpieri/field.hpp"
#include "jackpieri/interpjack.hpp"
#include "jackpieri/jack.hpp"
#include "jackpieri/kernel.hpp"
#include "jackpieri/operators.hpp"
#include "jackpieri/polyring.hpp"
#include "jackpieri/report.hpp"

namespace jackpieri {

/// How u-polynomial identities are compared: coefficientwise, or after
/// substituting u = value.
struct UMode {
  bool formal = true;
  Rational value{};

  static UMode parse(std::string_view text) {
    if (text == "formal") return {};
    if (text.substr(0, 6) == "value:") return {false, Rational::parse(text.substr(6))};
    throw ParseError("u mode must be 'formal' or 'value:p/q', got '" + std::string(text) + "'");
  }
  std::string to_string() const { return formal ? "formal" : "value:" + value.to_string(); }
};

struct SuiteConfig {
  int rank = 2;
  int max_weight = 3;
  std::vector<Rational> d_values{Rational(1), Rational(2), Rational(3), Rational(1, 2)};
  bool symbolic = false;
  UMode u{};
  std::uint64_t seed = 0;
  int random_points = 20;

  void validate() const {
    if (rank < 1) throw InvalidArgument("r must be at least 1");
    if (rank > 8) throw InvalidArgument("r above 8 is not supported");
    if (max_weight < 0) throw InvalidArgument("max weight must be nonnegative");
    if (random_points < 0) throw InvalidArgument("random point count must be nonnegative");
    if (!symbolic && d_values.empty()) throw InvalidArgument("no d values");
    for (const auto& d : d_values)
      if (d.is_zero()) throw InvalidArgument("d must be nonzero");
  }
};

struct SuiteInfo {
  std::string name;
  std::vector<std::string> covers;
  std::string summary;
};

inline const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog{
      {"sekiguchi-eigen", {"sekiguchi-generating-eigen", "sekiguchi-single-eigen"},
       "S(u) P_m = I(u; m) P_m, and each H_p separately"},
      {"d-eigen", {"laplace-eigen"}, "D P_m = E_m P_m"},
      {"sekiguchi-commute", {"sekiguchi-commuting"}, "H_p H_q = H_q H_p on random symmetric input, p, q <= 2"},
      {"classical-pieri",
       {"phi-pieri-derivative", "psi-pieri-derivative", "phi-pieri-multiplication", "psi-pieri-multiplication",
        "elementary-pieri"},
       "|d| and |z| Pieri rules for Phi and Psi, and e_l Phi_k"},
      {"commutator", {"derivative-multiplication-commutator"}, "[|d|, |z|] f = r f"},
      {"twisted-pieri",
       {"twisted-pieri-phi", "twisted-pieri-psi", "twisted-pieri-phi-coefficient", "twisted-pieri-psi-coefficient"},
       "ad-twisted S(u) on Phi_x and Psi_x, and the H_l coefficient forms"},
      {"mysterious-sum", {"mysterious-summation"}, "two A-product sums over i in I differ by |I|"},
      {"difference-equation", {"interpolation-difference-equation", "interpolation-difference-coefficients"},
       "D^ip(u; x) P^ip_k = I(u; k) P^ip_k, and per u-coefficient"},
      {"interp-pieri", {"interpolation-pieri", "interpolation-pieri-coefficients"},
       "I(u; x) times a binomial coefficient, expanded over k + eps_J, and per u-coefficient"},
      {"binomial", {"binomial-expansion"}, "Phi_x(1 + z) on the Psi_k basis"},
      {"interp-vanishing", {"interpolation-vanishing"},
       "vanishing of P^ip_k at points not imposed by the construction"},
      {"schur-oracle", {"schur-specialization"}, "P_m at d = 2 equals the bialternant"},
      {"kernel-symmetry", {"kernel-symmetry"}, "truncated kernel is symmetric in z and w"},
      {"kernel-intertwining", {"kernel-intertwining"},
       "(d/2)^l ad-twisted H_l on the z side equals e_l(w) on the w side"},
  };
  return catalog;
}

inline const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& s : suite_catalog())
    if (s.name == name) return &s;
  return nullptr;
}

/// Computed once on first use, from any thread.
template <class T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> compute) : compute_(std::move(compute)) {}
  const T& get() const {
    std::call_once(once_, [this] { value_.emplace(compute_()); });
    return *value_;
  }

 private:
  std::function<T()> compute_;
  mutable std::once_flag once_;
  mutable std::optional<T> value_;
};

template <ExactField F>
struct SuiteContext {
  std::shared_ptr<const InterpFamily<F>> family;
  const SuiteConfig* config;

  int rank() const { return family->rank(); }
  const F& d() const { return family->d(); }
  const Operators<F>& ops() const { return family->ops(); }
  std::vector<Partition> grid() const { return partitions_up_to(config->max_weight, rank()); }
  std::string label() const { return detail::d_label(d()) + " r=" + std::to_string(rank()); }
};

/// Families for every configured d, shared across suites.
class Session {
 public:
  explicit Session(SuiteConfig config) : config_(std::move(config)) {
    config_.validate();
    if (config_.symbolic) {
      symbolic_ = std::make_shared<InterpFamily<RatFunc>>(config_.rank, RatFunc::variable());
    } else {
      for (const auto& d : config_.d_values) rational_.push_back(std::make_shared<InterpFamily<Rational>>(config_.rank, d));
    }
  }

  const SuiteConfig& config() const noexcept { return config_; }

  std::vector<SuiteContext<Rational>> rational_contexts() const {
    std::vector<SuiteContext<Rational>> out;
    for (const auto& f : rational_) out.push_back({f, &config_});
    return out;
  }
  std::vector<SuiteContext<RatFunc>> symbolic_contexts() const {
    if (!symbolic_) return {};
    return {{symbolic_, &config_}};
  }

  /// The family at d, reusing a configured one when present.
  std::shared_ptr<const InterpFamily<Rational>> rational_family(const Rational& d) {
    for (const auto& f : rational_)
      if (f->d() == d) return f;
    for (const auto& f : extra_)
      if (f->d() == d) return f;
    extra_.push_back(std::make_shared<InterpFamily<Rational>>(config_.rank, d));
    return extra_.back();
  }

 private:
  SuiteConfig config_;
  std::vector<std::shared_ptr<const InterpFamily<Rational>>> rational_;
  std::vector<std::shared_ptr<const InterpFamily<Rational>>> extra_;
  std::shared_ptr<const InterpFamily<RatFunc>> symbolic_;
};

namespace detail {

inline std::string point_text(const IntVector& x) { return "(" + join_ints(x.entries) + ")"; }

template <class T>
std::string render(const T& v) {
  if constexpr (requires { v.to_string(); }) {
    return v.to_string();
  } else {
    return jackpieri::to_string(v);
  }
}

template <class T>
CaseOutcome equal(const T& lhs, const T& rhs, const std::string& where = {}) {
  if (lhs == rhs) return CaseOutcome::pass();
  return CaseOutcome::fail(render(lhs - rhs) + where);
}

template <ExactField F>
CaseOutcome equal_u(const SuiteConfig& cfg, const UPoly<F>& lhs, const UPoly<F>& rhs, const std::string& where = {}) {
  if (cfg.u.formal) return equal(lhs, rhs, where);
  const F u0(cfg.u.value);
  return equal(eval_u(lhs, u0), eval_u(rhs, u0), where);
}

template <ExactField F>
CaseOutcome equal_u(const SuiteConfig& cfg, const UPoly<MultiPoly<F>>& lhs, const UPoly<MultiPoly<F>>& rhs, int rank) {
  if (cfg.u.formal) return equal(lhs, rhs);
  const F u0(cfg.u.value);
  return equal(eval_u(lhs, u0, rank), eval_u(rhs, u0, rank));
}

template <ExactField F>
std::vector<F> restrict_to(const std::vector<F>& v, Subset s) {
  std::vector<F> out;
  for (int i : s.indices()) out.push_back(v[static_cast<std::size_t>(i)]);
  return out;
}

template <ExactField F>
std::vector<F> shifted_by(const std::vector<F>& x, Subset s, int delta) {
  std::vector<F> out = x;
  for (int i : s.indices()) out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)] + F(delta);
  return out;
}

/// Runs check(x) on random integer vectors until one avoids every A-pole.
template <class Check>
CaseOutcome with_random_point(std::mt19937_64& rng, int rank, Check&& check) {
  constexpr int kMaxDraws = 64;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const IntVector x = random_int_vector(rng, rank);
    try {
      return check(x);
    } catch (const PoleInA&) {
    }
  }
  return CaseOutcome::fail("no pole-free point in " + std::to_string(kMaxDraws) + " draws");
}

// ---------------------------------------------------------------- eigen

}  // namespace detail

/// sum_{i in I} (s_i + 1) A_{-,i,I\i}(x + eps_i) A_{+,i,I\i}(x)
///   - sum_{i in I} s_i A_{+,i,I\i}(x - eps_i) A_{-,i,I\i}(x).
template <ExactField F>
F mysterious_sum(const std::vector<F>& x, Subset set, const F& d) {
  F acc(0);
  for (int i : set.indices()) {
    const ASpec spec = ASpec::pair_in(i, set);
    const F s = shifted_entry(x, i, d);
    acc = acc + (s + F(1)) * a_coefficient(Sign::minus, detail::shifted_by(x, Subset::single(i), 1), spec, d) *
                    a_coefficient(Sign::plus, x, spec, d);
    acc = acc - s * a_coefficient(Sign::plus, detail::shifted_by(x, Subset::single(i), -1), spec, d) *
                    a_coefficient(Sign::minus, x, spec, d);
  }
  return acc;
}

namespace detail {

template <ExactField F>
void sekiguchi_eigen(const SuiteContext<F>& ctx, CaseList& cases) {
  for (const auto& m : ctx.grid()) {
    const std::string where = ctx.label() + " m=(" + m.to_string() + ")";
    cases.add(where + " generating", [ctx, m] {
      const auto& p = ctx.family->jacks().jack(m)->poly;
      const auto lhs = ctx.ops().apply_sekiguchi_gen(p);
      const auto rhs = p * ctx.ops().eigen_poly_I(to_point<F>(m.as_vector()));
      return equal_u(*ctx.config, lhs, rhs, ctx.rank());
    });
    for (int order = 1; order <= ctx.rank(); ++order)
      cases.add(where + " p=" + std::to_string(order), [ctx, m, order] {
        const auto& p = ctx.family->jacks().jack(m)->poly;
        const F eigen = power(F(2) / ctx.d(), order) *
                        elementary_value(ctx.ops().shifted_point(to_point<F>(m.as_vector())), order);
        return equal(ctx.ops().apply_sekiguchi(order, p), p * eigen);
      });
  }
}

template <ExactField F>
void d_eigen(const SuiteContext<F>& ctx, CaseList& cases) {
  for (const auto& m : ctx.grid())
    cases.add(ctx.label() + " m=(" + m.to_string() + ")", [ctx, m] {
      const auto& p = ctx.family->jacks().jack(m)->poly;
      return equal(ctx.ops().apply_D(p), p * ctx.ops().d_eigenvalue(m));
    });
}

template <ExactField F>
void sekiguchi_commute(const SuiteContext<F>& ctx, CaseList& cases) {
  constexpr int kTrials = 3;
  const int top = std::min(2, ctx.rank());
  for (int trial = 0; trial < kTrials; ++trial)
    for (int p = 0; p <= top; ++p)
      for (int q = p + 1; q <= top; ++q) {
        const std::string where = ctx.label() + " trial=" + std::to_string(trial) + " p=" + std::to_string(p) +
                                  " q=" + std::to_string(q);
        cases.add(where, [ctx, where, p, q] {
          auto rng = case_rng(ctx.config->seed, "sekiguchi-commute", where);
          std::uniform_int_distribution<int> coeff(-3, 3);
          MultiPoly<F> f(ctx.rank());
          for (const auto& lambda : ctx.grid()) f += monomial_symmetric<F>(lambda, F(static_cast<long>(coeff(rng))));
          const auto& ops = ctx.ops();
          return equal(ops.apply_sekiguchi(p, ops.apply_sekiguchi(q, f)), ops.apply_sekiguchi(q, ops.apply_sekiguchi(p, f)));
        });
      }
}

// ---------------------------------------------------------------- Pieri

template <ExactField F>
void classical_pieri(const SuiteContext<F>& ctx, CaseList& cases) {
  const int r = ctx.rank();
  for (const auto& x : ctx.grid()) {
    const std::string where = ctx.label() + " x=(" + x.to_string() + ")";
    const IntVector xv = x.as_vector();

    cases.add(where + " |d| Phi", [ctx, x, xv, r] {
      const auto& fam = *ctx.family;
      const auto pt = to_point<F>(xv);
      MultiPoly<F> rhs(r);
      for (int i = 0; i < r; ++i) {
        const F c = shifted_entry(pt, i, ctx.d()) * a_coefficient(Sign::minus, pt, ASpec::single_index(i), ctx.d());
        const auto down = shift_by_subset(xv, Subset::single(i), Sign::minus);
        if (!down.is_partition) {
          if (!c.is_zero()) return CaseOutcome::fail("nonzero coefficient " + c.to_string() + " at i=" + std::to_string(i + 1));
          continue;
        }
        rhs += fam.phi(Partition(down.vector))->poly * c;
      }
      return equal(apply_total_derivative(fam.phi(x)->poly), rhs);
    });

    cases.add(where + " |d| Psi", [ctx, x, xv, r] {
      const auto& fam = *ctx.family;
      MultiPoly<F> rhs(r);
      for (int i = 0; i < r; ++i) {
        const auto down = shift_by_subset(xv, Subset::single(i), Sign::minus);
        if (!down.is_partition) continue;
        rhs += fam.psi(Partition(down.vector))->poly * a_coefficient(Sign::plus, down.vector, ASpec::single_index(i), ctx.d());
      }
      return equal(apply_total_derivative(fam.psi(x)->poly), rhs);
    });

    cases.add(where + " |z| Phi", [ctx, x, xv, r] {
      const auto& fam = *ctx.family;
      MultiPoly<F> rhs(r);
      for (int i = 0; i < r; ++i) {
        const F c = a_coefficient(Sign::plus, xv, ASpec::single_index(i), ctx.d());
        const auto up = shift_by_subset(xv, Subset::single(i), Sign::plus);
        if (!up.is_partition) {
          if (!c.is_zero()) return CaseOutcome::fail("nonzero coefficient " + c.to_string() + " at i=" + std::to_string(i + 1));
          continue;
        }
        rhs += fam.phi(Partition(up.vector))->poly * c;
      }
      return equal(apply_total_multiplication(fam.phi(x)->poly), rhs);
    });

    cases.add(where + " |z| Psi", [ctx, x, xv, r] {
      const auto& fam = *ctx.family;
      MultiPoly<F> rhs(r);
      for (int i = 0; i < r; ++i) {
        const auto up = shift_by_subset(xv, Subset::single(i), Sign::plus);
        if (!up.is_partition) continue;
        const auto pt = to_point<F>(up.vector);
        rhs += fam.psi(Partition(up.vector))->poly *
               (shifted_entry(pt, i, ctx.d()) * a_coefficient(Sign::minus, pt, ASpec::single_index(i), ctx.d()));
      }
      return equal(apply_total_multiplication(fam.psi(x)->poly), rhs);
    });

    for (int l = 0; l <= r; ++l)
      cases.add(where + " e_" + std::to_string(l) + " Phi", [ctx, x, xv, r, l] {
        const auto& fam = *ctx.family;
        MultiPoly<F> rhs(r);
        for (const Subset& j_set : subsets_of_size(r, l)) {
          const auto up = shift_by_subset(xv, j_set, Sign::plus);
          if (!up.is_partition) continue;
          rhs += fam.phi(Partition(up.vector))->poly * a_coefficient(Sign::plus, xv, ASpec::subset_of(j_set), ctx.d());
        }
        return equal(elementary_symmetric<F>(r, l) * fam.phi(x)->poly, rhs);
      });

    cases.add(where + " |z| Phi vs e_1 Phi", [ctx, x, xv, r] {
      const auto& fam = *ctx.family;
      MultiPoly<F> single(r), subset(r);
      for (int i = 0; i < r; ++i) {
        const auto up = shift_by_subset(xv, Subset::single(i), Sign::plus);
        if (!up.is_partition) continue;
        const auto& phi = fam.phi(Partition(up.vector))->poly;
        single += phi * a_coefficient(Sign::plus, xv, ASpec::single_index(i), ctx.d());
        subset += phi * a_coefficient(Sign::plus, xv, ASpec::subset_of(Subset::single(i)), ctx.d());
      }
      return equal(single, subset);
    });
  }
}

template <ExactField F>
void commutator(const SuiteContext<F>& ctx, CaseList& cases) {
  const int r = ctx.rank();
  auto check = [r](const MultiPoly<F>& f) {
    const auto lhs = apply_total_derivative(apply_total_multiplication(f)) -
                     apply_total_multiplication(apply_total_derivative(f));
    return equal(lhs, f * F(static_cast<long>(r)));
  };
  for (const auto& x : ctx.grid())
    cases.add(ctx.label() + " Phi_(" + x.to_string() + ")", [ctx, x, check] { return check(ctx.family->phi(x)->poly); });
  constexpr int kTrials = 3;
  for (int trial = 0; trial < kTrials; ++trial) {
    const std::string where = ctx.label() + " random trial=" + std::to_string(trial);
    cases.add(where, [ctx, where, check, r] {
      auto rng = case_rng(ctx.config->seed, "commutator", where);
      std::uniform_int_distribution<int> expo(0, std::max(1, ctx.config->max_weight));
      std::uniform_int_distribution<int> coeff(-3, 3);
      MultiPoly<F> f(r);
      for (int t = 0; t < 5; ++t) {
        Exponent e(static_cast<std::size_t>(r));
        for (auto& v : e) v = expo(rng);
        f.add_term(e, F(static_cast<long>(coeff(rng))));
      }
      return check(f);
    });
  }
}

// ---------------------------------------------------------------- twisted Pieri

template <ExactField F>
void twisted_pieri(const SuiteContext<F>& ctx, CaseList& cases) {
  const int r = ctx.rank();
  for (const auto& x : ctx.grid()) {
    const IntVector xv = x.as_vector();
    auto twists = std::make_shared<Lazy<std::vector<UPoly<MultiPoly<F>>>>>(
        [ctx, x, r] { return ctx.ops().ad_twists(ctx.family->jacks().jack(x)->poly, r); });
    cases.retain(twists);
    for (int l = 0; l <= r; ++l) {
      const std::string where = ctx.label() + " x=(" + x.to_string() + ") l=" + std::to_string(l);
      auto single = std::make_shared<Lazy<MultiPoly<F>>>(
          [ctx, x, l] { return ctx.ops().apply_ad_twist_single(l, l, ctx.family->jacks().jack(x)->poly); });
      cases.retain(single);

      cases.add(where + " Phi", [ctx, x, xv, l, r, twists] {
        const auto& fam = *ctx.family;
        const auto pt = to_point<F>(xv);
        const auto lhs = twists->get()[static_cast<std::size_t>(l)].scaled(F(1) / fam.phi(x)->normalizer);
        UPoly<MultiPoly<F>> rhs;
        for (const Subset& j_set : subsets_of_size(r, l)) {
          F c = a_coefficient(Sign::minus, pt, ASpec::subset_of(j_set), ctx.d());
          for (int j : j_set.indices()) c = c * shifted_entry(pt, j, ctx.d());
          const auto down = shift_by_subset(xv, j_set, Sign::minus);
          if (!down.is_partition) {
            if (!c.is_zero()) return CaseOutcome::fail("nonzero coefficient " + c.to_string() + " at J=" + j_set.to_string());
            continue;
          }
          rhs = rhs + fam.phi(Partition(down.vector))->poly * ctx.ops().eigen_poly_I(pt, j_set.complement(r)).scaled(c);
        }
        return equal_u(*ctx.config, lhs, rhs, r);
      });

      cases.add(where + " Psi", [ctx, x, xv, l, r, twists] {
        const auto& fam = *ctx.family;
        const auto pt = to_point<F>(xv);
        const auto lhs = twists->get()[static_cast<std::size_t>(l)].scaled(F(1) / fam.psi(x)->normalizer);
        UPoly<MultiPoly<F>> rhs;
        for (const Subset& j_set : subsets_of_size(r, l)) {
          const auto down = shift_by_subset(xv, j_set, Sign::minus);
          if (!down.is_partition) continue;
          const F c = a_coefficient(Sign::plus, down.vector, ASpec::subset_of(j_set), ctx.d());
          rhs = rhs + fam.psi(Partition(down.vector))->poly * ctx.ops().eigen_poly_I(pt, j_set.complement(r)).scaled(c);
        }
        return equal_u(*ctx.config, lhs, rhs, r);
      });

      cases.add(where + " Phi coefficient", [ctx, x, xv, l, r, single] {
        const auto& fam = *ctx.family;
        const auto pt = to_point<F>(xv);
        const auto lhs = single->get() * (power(ctx.d() / F(2), l) / fam.phi(x)->normalizer);
        MultiPoly<F> rhs(r);
        for (const Subset& j_set : subsets_of_size(r, l)) {
          const auto down = shift_by_subset(xv, j_set, Sign::minus);
          if (!down.is_partition) continue;
          F c = a_coefficient(Sign::minus, pt, ASpec::subset_of(j_set), ctx.d());
          for (int j : j_set.indices()) c = c * shifted_entry(pt, j, ctx.d());
          rhs += fam.phi(Partition(down.vector))->poly * c;
        }
        return equal(lhs, rhs);
      });

      cases.add(where + " Psi coefficient", [ctx, x, xv, l, r, single] {
        const auto& fam = *ctx.family;
        const auto lhs = single->get() * (power(ctx.d() / F(2), l) / fam.psi(x)->normalizer);
        MultiPoly<F> rhs(r);
        for (const Subset& j_set : subsets_of_size(r, l)) {
          const auto down = shift_by_subset(xv, j_set, Sign::minus);
          if (!down.is_partition) continue;
          rhs += fam.psi(Partition(down.vector))->poly *
                 a_coefficient(Sign::plus, down.vector, ASpec::subset_of(j_set), ctx.d());
        }
        return equal(lhs, rhs);
      });
    }
  }
}

// ---------------------------------------------------------------- mysterious sum

template <ExactField F>
void mysterious_sum_cases(const SuiteContext<F>& ctx, CaseList& cases) {
  const int r = ctx.rank();
  for (const Subset& set : all_subsets(r)) {
    const F expected(static_cast<long>(set.size()));
    for (const auto& x : ctx.grid()) {
      cases.add(ctx.label() + " I=" + set.to_string() + " x=(" + x.to_string() + ")", [ctx, set, x, expected] {
        const IntVector xv = x.as_vector();
        try {
          return equal(mysterious_sum(to_point<F>(xv), set, ctx.d()), expected);
        } catch (const PoleInA&) {
          // An individual product has a pole at this d although the sum does
          // not; check the sum along the whole d-line through x instead.
          const RatFunc value = mysterious_sum(to_point<RatFunc>(xv), set, RatFunc::variable());
          return equal(value, RatFunc(Rational(static_cast<long>(set.size()))), " (in Q(d))");
        }
      });
    }
    for (int k = 0; k < ctx.config->random_points; ++k) {
      const std::string where = ctx.label() + " I=" + set.to_string() + " random #" + std::to_string(k);
      cases.add(where, [ctx, set, where, expected] {
        auto rng = case_rng(ctx.config->seed, "mysterious-sum", where);
        return with_random_point(rng, ctx.rank(), [&](const IntVector& xv) {
          return equal(mysterious_sum(to_point<F>(xv), set, ctx.d()), expected, " at x=" + point_text(xv));
        });
      });
    }
  }
}

// ---------------------------------------------------------------- interpolation

/// Evaluation points for the rational identities in x: grid partitions,
/// then seeded random integer vectors.
struct PointSpec {
  std::optional<IntVector> fixed;
  int random_index = 0;
  std::string describe() const {
    return fixed ? "x=" + point_text(*fixed) : "random #" + std::to_string(random_index);
  }
};

template <ExactField F>
std::vector<PointSpec> sample_points(const SuiteContext<F>& ctx) {
  std::vector<PointSpec> out;
  for (const auto& x : ctx.grid()) out.push_back({x.as_vector(), 0});
  for (int k = 0; k < ctx.config->random_points; ++k) out.push_back({std::nullopt, k});
  return out;
}

template <class Check>
CaseOutcome at_point(const PointSpec& spec, std::uint64_t seed, std::string_view suite, const std::string& key,
                     int rank, Check&& check) {
  if (spec.fixed) return check(*spec.fixed);
  auto rng = case_rng(seed, suite, key);
  return with_random_point(rng, rank, check);
}

template <ExactField F>
CaseOutcome check_difference_equation(const InterpFamily<F>& fam, const SuiteConfig& cfg, const Partition& k,
                                      const IntVector& xv) {
  const auto x = to_point<F>(xv);
  const UPoly<F> lhs = fam.apply_difference_operator(k, x);
  const UPoly<F> rhs = fam.ops().eigen_poly_I(to_point<F>(k.as_vector())).scaled(fam.eval_interp_shifted(k, x));
  return equal_u(cfg, lhs, rhs, " at x=" + point_text(xv));
}

/// For each l: e_l(k + (d/2) delta) P^ip_k(x + (d/2) delta) =
///   sum_{|J| <= l} (-1)^|J| P^ip_k(x - eps_J + (d/2) delta)
///     e_{l-|J|}((x + (d/2) delta)_{J^c}) A_{-,J}(x) prod_{j in J} s_j.
template <ExactField F>
CaseOutcome check_difference_coefficients(const InterpFamily<F>& fam, const Partition& k, const IntVector& xv) {
  const int r = fam.rank();
  const F& d = fam.d();
  const auto x = to_point<F>(xv);
  const auto y = fam.ops().shifted_point(x);
  const auto ks = fam.ops().shifted_point(to_point<F>(k.as_vector()));
  const auto subsets = all_subsets(r);
  std::vector<F> weight(subsets.size(), F(0));
  for (const Subset& j_set : subsets) {
    F c = a_coefficient(Sign::minus, x, ASpec::subset_of(j_set), d);
    for (int j : j_set.indices()) c = c * shifted_entry(x, j, d);
    if (c.is_zero()) continue;
    if (j_set.size() % 2) c = -c;
    weight[j_set.bits()] = c * fam.eval_interp_shifted(k, shifted_by(x, j_set, -1));
  }
  for (int l = 0; l <= r; ++l) {
    const F lhs = elementary_value(ks, l) * weight[0];
    F rhs(0);
    for (const Subset& j_set : subsets) {
      if (j_set.size() > l || weight[j_set.bits()].is_zero()) continue;
      rhs = rhs + weight[j_set.bits()] * elementary_value(restrict_to(y, j_set.complement(r)), l - j_set.size());
    }
    if (!(lhs == rhs))
      return CaseOutcome::fail("u^" + std::to_string(r - l) + ": " + (lhs - rhs).to_string() + " at x=" + point_text(xv));
  }
  return CaseOutcome::pass();
}

template <ExactField F>
void difference_equation(const SuiteContext<F>& ctx, CaseList& cases) {
  for (const auto& k : ctx.grid())
    for (const auto& spec : sample_points(ctx)) {
      const std::string where = ctx.label() + " k=(" + k.to_string() + ") " + spec.describe();
      cases.add(where, [ctx, k, spec, where] {
        return at_point(spec, ctx.config->seed, "difference-equation", where, ctx.rank(), [&](const IntVector& xv) {
          return check_difference_equation(*ctx.family, *ctx.config, k, xv);
        });
      });
      cases.add(where + " coefficients", [ctx, k, spec, where] {
        return at_point(spec, ctx.config->seed, "difference-equation", where, ctx.rank(),
                        [&](const IntVector& xv) { return check_difference_coefficients(*ctx.family, k, xv); });
      });
    }
}

template <ExactField F>
CaseOutcome check_interp_pieri(const InterpFamily<F>& fam, const SuiteConfig& cfg, const Partition& k,
                               const IntVector& xv) {
  const int r = fam.rank();
  const auto x = to_point<F>(xv);
  const auto kp = to_point<F>(k.as_vector());
  const UPoly<F> lhs = fam.ops().eigen_poly_I(x).scaled(fam.binomial_coefficient(k, x));
  UPoly<F> rhs;
  for (const Subset& j_set : all_subsets(r)) {
    const auto up = shift_by_subset(k.as_vector(), j_set, Sign::plus);
    if (!up.is_partition) continue;
    const F c = fam.binomial_coefficient(Partition(up.vector), x) *
                a_coefficient(Sign::plus, kp, ASpec::subset_of(j_set), fam.d());
    rhs = rhs + fam.ops().eigen_poly_I(kp, j_set.complement(r)).scaled(c);
  }
  return equal_u(cfg, lhs, rhs, " at x=" + point_text(xv));
}

/// For each l: e_l(x + (d/2) delta) B_k(x) =
///   sum_{|J| <= l, k + eps_J in P} B_{k+eps_J}(x) e_{l-|J|}((k + (d/2) delta)_{J^c}) A_{+,J}(k),
/// with B_k(x) = P^ip_k(x + (d/2) delta) / P_k(1).
template <ExactField F>
CaseOutcome check_interp_pieri_coefficients(const InterpFamily<F>& fam, const Partition& k, const IntVector& xv) {
  const int r = fam.rank();
  const auto x = to_point<F>(xv);
  const auto kp = to_point<F>(k.as_vector());
  const auto y = fam.ops().shifted_point(x);
  const auto ks = fam.ops().shifted_point(kp);
  const auto subsets = all_subsets(r);
  std::vector<std::optional<F>> weight(subsets.size());
  for (const Subset& j_set : subsets) {
    const auto up = shift_by_subset(k.as_vector(), j_set, Sign::plus);
    if (!up.is_partition) continue;
    weight[j_set.bits()] = fam.binomial_coefficient(Partition(up.vector), x) *
                           a_coefficient(Sign::plus, kp, ASpec::subset_of(j_set), fam.d());
  }
  const F base = fam.binomial_coefficient(k, x);
  for (int l = 0; l <= r; ++l) {
    const F lhs = elementary_value(y, l) * base;
    F rhs(0);
    for (const Subset& j_set : subsets) {
      if (j_set.size() > l || !weight[j_set.bits()]) continue;
      rhs = rhs + *weight[j_set.bits()] * elementary_value(restrict_to(ks, j_set.complement(r)), l - j_set.size());
    }
    if (!(lhs == rhs))
      return CaseOutcome::fail("u^" + std::to_string(r - l) + ": " + (lhs - rhs).to_string() + " at x=" + point_text(xv));
  }
  return CaseOutcome::pass();
}

template <ExactField F>
void interp_pieri(const SuiteContext<F>& ctx, CaseList& cases) {
  for (const auto& k : ctx.grid())
    for (const auto& spec : sample_points(ctx)) {
      const std::string where = ctx.label() + " k=(" + k.to_string() + ") " + spec.describe();
      cases.add(where, [ctx, k, spec, where] {
        return at_point(spec, ctx.config->seed, "interp-pieri", where, ctx.rank(),
                        [&](const IntVector& xv) { return check_interp_pieri(*ctx.family, *ctx.config, k, xv); });
      });
      cases.add(where + " coefficients", [ctx, k, spec, where] {
        return at_point(spec, ctx.config->seed, "interp-pieri", where, ctx.rank(),
                        [&](const IntVector& xv) { return check_interp_pieri_coefficients(*ctx.family, k, xv); });
      });
    }
}

template <ExactField F>
void binomial(const SuiteContext<F>& ctx, CaseList& cases) {
  const int r = ctx.rank();
  for (const auto& x : ctx.grid()) {
    const std::string where = ctx.label() + " x=(" + x.to_string() + ")";
    cases.add(where, [ctx, x, r] {
      const auto& fam = *ctx.family;
      const auto shifted = substitute_shift(fam.phi(x)->poly, std::vector<F>(static_cast<std::size_t>(r), F(1)));
      const auto on_jacks = fam.jacks().to_jack_basis(shifted);
      const auto xp = to_point<F>(x.as_vector());
      for (const auto& k : partitions_up_to(x.weight(), r)) {
        const auto it = on_jacks.find(k);
        const F on_psi = it == on_jacks.end() ? F(0) : it->second * fam.psi_normalizer(k);
        const F expected = fam.binomial_coefficient(k, xp);
        if (!(on_psi == expected))
          return CaseOutcome::fail("k=(" + k.to_string() + "): " + (on_psi - expected).to_string());
      }
      for (const auto& [k, c] : on_jacks)
        if (k.weight() > x.weight()) return CaseOutcome::fail("unexpected component k=(" + k.to_string() + ")");
      return CaseOutcome::pass();
    });
    if (r == 1)
      cases.add(where + " integer binomial theorem", [ctx, x] {
        // (1+z)^n = sum_k C(n, k) z^k, with C(n, k) from Pascal's rule.
        const int n = x[0];
        std::vector<long> row{1};
        for (int i = 0; i < n; ++i) {
          std::vector<long> next(row.size() + 1, 0);
          for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
          }
          row = std::move(next);
        }
        MultiPoly<F> expected(1);
        for (int k = 0; k <= n; ++k) expected.add_term(Exponent{k}, F(row[static_cast<std::size_t>(k)]));
        return equal(substitute_shift(ctx.family->phi(x)->poly, std::vector<F>{F(1)}), expected);
      });
  }
}

template <ExactField F>
void interp_vanishing(const SuiteContext<F>& ctx, CaseList& cases) {
  const int r = ctx.rank();
  for (const auto& k : ctx.grid()) {
    const std::string where = ctx.label() + " k=(" + k.to_string() + ")";
    cases.add(where + " vanishing", [ctx, k, r] {
      const auto& fam = *ctx.family;
      for (int n = k.weight(); n <= k.weight() + 1; ++n)
        for (const auto& m : partitions_of(n, r)) {
          if (contains(k, m)) continue;
          const F v = fam.eval_interp_shifted(k, to_point<F>(m.as_vector()));
          if (!v.is_zero()) return CaseOutcome::fail("at m=(" + m.to_string() + "): " + v.to_string());
        }
      if (fam.eval_interp_shifted(k, to_point<F>(k.as_vector())).is_zero())
        return CaseOutcome::fail("vanishes at its own point");
      return CaseOutcome::pass();
    });
    cases.add(where + " top degree", [ctx, k] {
      const auto& fam = *ctx.family;
      return equal(fam.interp_jack(k)->poly.homogeneous_part(k.weight()), fam.jacks().jack(k)->poly);
    });
    if (r == 1)
      cases.add(where + " falling factorial", [ctx, k] {
        MultiPoly<F> expected = MultiPoly<F>::constant(1, F(1));
        for (int i = 0; i < k[0]; ++i)
          expected = expected * (MultiPoly<F>::variable(1, 0) - MultiPoly<F>::constant(1, F(static_cast<long>(i))));
        return equal(ctx.family->interp_jack(k)->poly, expected);
      });
  }
}

inline MultiPoly<Rational> specialize_at(const MultiPoly<Rational>& p, const Rational&) { return p; }
inline MultiPoly<Rational> specialize_at(const MultiPoly<RatFunc>& p, const Rational& d0) {
  MultiPoly<Rational> out(p.rank());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c.eval_at(d0));
  return out;
}

template <ExactField F>
void schur_oracle(const SuiteContext<F>& ctx, CaseList& cases) {
  for (const auto& m : ctx.grid())
    cases.add(ctx.label() + " at d=2 m=(" + m.to_string() + ")", [ctx, m] {
      return equal(specialize_at(ctx.family->jacks().jack(m)->poly, Rational(2)), schur_bialternant<Rational>(m));
    });
}

template <ExactField F>
void kernel_cases(const SuiteContext<F>& ctx, CaseList& cases, bool intertwining, bool check_truncation) {
  auto kern = std::make_shared<const TruncatedKernel<F>>(build_kernel(ctx.family, ctx.config->max_weight));
  cases.retain(kern);
  if (!intertwining) {
    kernel_symmetry_cases(*kern, cases);
    return;
  }
  for (int l = 0; l <= ctx.rank(); ++l)
    kernel_intertwining_cases(*kern, l, cases, check_truncation && l == std::min(1, ctx.rank()));
}

template <ExactField F>
void add_suite_cases(std::string_view name, const std::vector<SuiteContext<F>>& contexts, CaseList& cases) {
  bool first = true;
  for (const auto& ctx : contexts) {
    if (name == "sekiguchi-eigen") sekiguchi_eigen(ctx, cases);
    else if (name == "d-eigen") d_eigen(ctx, cases);
    else if (name == "sekiguchi-commute") sekiguchi_commute(ctx, cases);
    else if (name == "classical-pieri") classical_pieri(ctx, cases);
    else if (name == "commutator") commutator(ctx, cases);
    else if (name == "twisted-pieri") twisted_pieri(ctx, cases);
    else if (name == "mysterious-sum") mysterious_sum_cases(ctx, cases);
    else if (name == "difference-equation") difference_equation(ctx, cases);
    else if (name == "interp-pieri") interp_pieri(ctx, cases);
    else if (name == "binomial") binomial(ctx, cases);
    else if (name == "interp-vanishing") interp_vanishing(ctx, cases);
    else if (name == "kernel-symmetry") kernel_cases(ctx, cases, false, false);
    else if (name == "kernel-intertwining") kernel_cases(ctx, cases, true, first);
    else throw InvalidArgument("unknown suite '" + std::string(name) + "'");
    first = false;
  }
}

}  // namespace detail

/// Runs one named suite over every configured d.
inline VerificationReport run_suite(std::string_view name, Session& session) {
  const SuiteInfo* info = find_suite(name);
  if (!info) throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  const auto start = std::chrono::steady_clock::now();
  CaseList cases;
  if (name == "schur-oracle") {
    // Always at d = 2; in symbolic mode the Q(d) family is specialized.
    if (session.config().symbolic) {
      for (const auto& ctx : session.symbolic_contexts()) detail::schur_oracle(ctx, cases);
    } else {
      detail::schur_oracle(SuiteContext<Rational>{session.rational_family(Rational(2)), &session.config()}, cases);
    }
  } else if (session.config().symbolic) {
    detail::add_suite_cases(name, session.symbolic_contexts(), cases);
  } else {
    detail::add_suite_cases(name, session.rational_contexts(), cases);
  }
  VerificationReport report = run_cases(info->name, info->covers, cases);
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline std::vector<VerificationReport> run_all(Session& session) {
  std::vector<VerificationReport> out;
  for (const auto& info : suite_catalog()) out.push_back(run_suite(info.name, session));
  return out;
}

/// Coverage anchors of the reports, in catalog order.
inline std::vector<std::string> coverage(const std::vector<VerificationReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports)
    for (const auto& c : r.covers)
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

}  // namespace jackpieri
