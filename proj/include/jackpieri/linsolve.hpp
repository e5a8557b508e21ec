#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jackpieri/field.hpp"

namespace jackpieri {

template <ExactField F>
using Matrix = std::vector<std::vector<F>>;

/// Solves a x = b by fraction-free (Bareiss) elimination with row pivoting.
/// Returns nullopt when a is singular.
///
/// Each step replaces a_ij by (a_kk a_ij - a_ik a_kj) / a_prev, where the
/// division is exact; over Q(d) this keeps intermediate entries from
/// accumulating spurious denominators.
template <ExactField F>
std::optional<std::vector<F>> solve_fraction_free(Matrix<F> a, std::vector<F> b) {
  const std::size_t n = a.size();
  for (auto& row : a) row.push_back(F(0));
  for (std::size_t i = 0; i < n; ++i) a[i][n] = b[i];
  F prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != k) std::swap(a[piv], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = F(0);
    }
    prev = a[k][k];
  }
  std::vector<F> x(n, F(0));
  for (std::size_t ii = n; ii-- > 0;) {
    F acc = a[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc = acc - a[ii][j] * x[j];
    x[ii] = acc / a[ii][ii];
  }
  return x;
}

}  // namespace jackpieri
