#pragma once

// Degree-truncated kernel sum_m Psi_m(z) Phi_m(w) and its intertwining checks.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jackpieri/combinatorics.hpp"
#include "jackpieri/field.hpp"
#include "jackpieri/interpjack.hpp"
#include "jackpieri/jack.hpp"
#include "jackpieri/polyring.hpp"
#include "jackpieri/report.hpp"

namespace jackpieri {

/// Polynomial in (z, w), stored as z-exponent -> polynomial in w.
template <ExactField F>
class BiPoly {
 public:
  using Terms = std::map<Exponent, MultiPoly<F>, GradedLexGreater>;

  explicit BiPoly(int rank = 0) : rank_(rank) {}

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds z_part(z) * w_part(w).
  void add_product(const MultiPoly<F>& z_part, const MultiPoly<F>& w_part) {
    if (w_part.is_zero()) return;
    for (const auto& [e, c] : z_part.terms()) {
      auto [it, inserted] = terms_.try_emplace(e, rank_);
      it->second += w_part * c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Drops every term whose w-degree exceeds max_degree.
  BiPoly restrict_w_degree(int max_degree) const {
    BiPoly out(rank_);
    for (const auto& [e, w] : terms_) {
      MultiPoly<F> kept(rank_);
      for (const auto& [we, c] : w.terms())
        if (total_degree(we) <= max_degree) kept.add_term(we, c);
      if (!kept.is_zero()) out.terms_.emplace(e, std::move(kept));
    }
    return out;
  }

  BiPoly operator-(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [e, w] : o.terms_) out.add_product(MultiPoly<F>::monomial(rank_, e, F(1)), -w);
    return out;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rank_ == b.rank_ && a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, w] : terms_) {
      if (!out.empty()) out += " + ";
      const std::string mono = monomial_text(e, "z");
      out += (mono.empty() ? "1" : mono) + "*(" + jackpieri::to_string(w, "w") + ")";
    }
    return out;
  }

 private:
  int rank_;
  Terms terms_;
};

template <ExactField F>
struct KernelTerm {
  Partition index;
  MultiPoly<F> psi;  // Psi_m
  MultiPoly<F> phi;  // Phi_m
};

template <ExactField F>
struct TruncatedKernel {
  int max_weight = 0;
  std::shared_ptr<const InterpFamily<F>> family;
  std::vector<KernelTerm<F>> terms;  // |m| <= max_weight, ascending weight

  int rank() const { return family->rank(); }

  /// sum_m Psi_m(z) Phi_m(w).
  BiPoly<F> series() const {
    BiPoly<F> out(rank());
    for (const auto& t : terms) out.add_product(t.psi, t.phi);
    return out;
  }
};

template <ExactField F>
TruncatedKernel<F> build_kernel(std::shared_ptr<const InterpFamily<F>> family, int max_weight) {
  if (max_weight < 0) throw InvalidArgument("negative kernel truncation");
  TruncatedKernel<F> kern{max_weight, family, {}};
  for (const auto& m : partitions_up_to(max_weight, family->rank()))
    kern.terms.push_back({m, family->psi(m)->poly, family->phi(m)->poly});
  return kern;
}

/// (d/2)^l [(ad |d_z|)^l / l! H_{r,l}] f.
template <ExactField F>
MultiPoly<F> kernel_twist(const Operators<F>& ops, int l, const MultiPoly<F>& f) {
  return ops.apply_ad_twist_single(l, l, f) * power(ops.d() / F(2), l);
}

/// Both sides of the intertwining relation for one l, and the reindexed
/// form sum_m Psi_m(z) sum_J Phi_{m+eps_J}(w) A_{+,J}(m), all restricted to
/// w-degree <= N - l.
template <ExactField F>
struct IntertwiningSides {
  int region = 0;
  BiPoly<F> lhs, rhs, reindexed;
};

template <ExactField F>
IntertwiningSides<F> intertwining_sides(const TruncatedKernel<F>& kern, int l) {
  const InterpFamily<F>& fam = *kern.family;
  const int r = fam.rank();
  if (l < 0 || l > r) throw InvalidArgument("intertwining level " + std::to_string(l) + " outside 0..r");
  IntertwiningSides<F> out{kern.max_weight - l, BiPoly<F>(r), BiPoly<F>(r), BiPoly<F>(r)};
  const MultiPoly<F> e_l = elementary_symmetric<F>(r, l);
  for (const auto& t : kern.terms) {
    const int n = t.index.weight();
    if (n <= out.region) out.lhs.add_product(kernel_twist(fam.ops(), l, t.psi), t.phi);
    if (n + l > out.region) continue;
    out.rhs.add_product(t.psi, t.phi * e_l);
    MultiPoly<F> shifted(r);
    for (const Subset& j_set : subsets_of_size(r, l)) {
      const auto up = shift_by_subset(t.index.as_vector(), j_set, Sign::plus);
      if (!up.is_partition) continue;
      shifted += fam.phi(Partition(up.vector))->poly *
                 a_coefficient(Sign::plus, t.index.as_vector(), ASpec::subset_of(j_set), fam.d());
    }
    out.reindexed.add_product(t.psi, shifted);
  }
  if (out.region < 0) return out;
  out.lhs = out.lhs.restrict_w_degree(out.region);
  out.rhs = out.rhs.restrict_w_degree(out.region);
  out.reindexed = out.reindexed.restrict_w_degree(out.region);
  return out;
}

namespace detail {
template <ExactField F>
CaseOutcome compare_bipoly(const BiPoly<F>& lhs, const BiPoly<F>& rhs) {
  if (lhs == rhs) return CaseOutcome::pass();
  return CaseOutcome::fail((lhs - rhs).to_string());
}

inline std::string d_label(const Rational& d) { return "d=" + d.to_string(); }
inline std::string d_label(const RatFunc&) { return "d symbolic"; }
}  // namespace detail

/// Adds one case per weight layer: sum_{|m|=n} Psi_m(z) Phi_m(w) is
/// symmetric under z <-> w.
template <ExactField F>
void kernel_symmetry_cases(const TruncatedKernel<F>& kern, CaseList& cases) {
  const std::string label = detail::d_label(kern.family->d());
  for (int n = 0; n <= kern.max_weight; ++n)
    cases.add(label + " r=" + std::to_string(kern.rank()) + " weight=" + std::to_string(n), [&kern, n] {
      BiPoly<F> forward(kern.rank()), swapped(kern.rank());
      for (const auto& t : kern.terms) {
        if (t.index.weight() != n) continue;
        forward.add_product(t.psi, t.phi);
        swapped.add_product(t.phi, t.psi);
      }
      return detail::compare_bipoly(forward, swapped);
    });
}

/// Adds the intertwining cases for one l: the relation, checked through the
/// reindexed intermediate of the proof chain, and stability of the verdict
/// when the truncation is raised to N + 1.
template <ExactField F>
void kernel_intertwining_cases(const TruncatedKernel<F>& kern, int l, CaseList& cases, bool check_truncation) {
  const std::string label = detail::d_label(kern.family->d()) + " r=" + std::to_string(kern.rank()) +
                            " N=" + std::to_string(kern.max_weight) + " l=" + std::to_string(l);
  cases.add(label + " relation", [&kern, l] {
    const auto s = intertwining_sides(kern, l);
    if (!(s.lhs == s.reindexed)) return CaseOutcome::fail("lhs - reindexed: " + (s.lhs - s.reindexed).to_string());
    if (!(s.reindexed == s.rhs)) return CaseOutcome::fail("reindexed - rhs: " + (s.reindexed - s.rhs).to_string());
    return detail::compare_bipoly(s.lhs, s.rhs);
  });
  if (!check_truncation) return;
  cases.add(label + " truncation N+1", [&kern, l] {
    const auto base = intertwining_sides(kern, l);
    const auto wider = intertwining_sides(build_kernel(kern.family, kern.max_weight + 1), l);
    const BiPoly<F> lhs = wider.lhs.restrict_w_degree(base.region);
    const BiPoly<F> rhs = wider.rhs.restrict_w_degree(base.region);
    if (!(lhs == base.lhs)) return CaseOutcome::fail("lhs changed: " + (lhs - base.lhs).to_string());
    if (!(rhs == base.rhs)) return CaseOutcome::fail("rhs changed: " + (rhs - base.rhs).to_string());
    if ((lhs == rhs) != (base.lhs == base.rhs)) return CaseOutcome::fail("verdict changed");
    return CaseOutcome::pass();
  });
}

template <ExactField F>
VerificationReport verify_symmetry(const TruncatedKernel<F>& kern) {
  CaseList cases;
  kernel_symmetry_cases(kern, cases);
  return run_cases("kernel-symmetry", {"kernel-symmetry"}, cases);
}

template <ExactField F>
VerificationReport verify_intertwining(const TruncatedKernel<F>& kern, int l) {
  CaseList cases;
  kernel_intertwining_cases(kern, l, cases, true);
  return run_cases("kernel-intertwining", {"kernel-intertwining"}, cases);
}

}  // namespace jackpieri
