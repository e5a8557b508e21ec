#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "jackpieri/error.hpp"

namespace jackpieri {

/// Integer vector of fixed length r; not necessarily decreasing.
struct IntVector {
  std::vector<int> entries;

  IntVector() = default;
  explicit IntVector(std::vector<int> e) : entries(std::move(e)) {}
  IntVector(std::initializer_list<int> e) : entries(e) {}

  int rank() const noexcept { return static_cast<int>(entries.size()); }
  int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return entries[static_cast<std::size_t>(i)]; }
  int weight() const { return std::accumulate(entries.begin(), entries.end(), 0); }

  bool is_partition() const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] < 0) return false;
      if (i + 1 < entries.size() && entries[i] < entries[i + 1]) return false;
    }
    return true;
  }

  friend auto operator<=>(const IntVector&, const IntVector&) = default;
};

inline std::string join_ints(const std::vector<int>& v, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

/// Weakly decreasing nonnegative vector of length exactly r (trailing zeros kept).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!IntVector(parts_).is_partition()) throw NotAPartition("(" + join_ints(parts_) + ")");
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(const IntVector& v) : Partition(v.entries) {}

  static Partition zero(int rank) { return Partition(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

  /// Parses "2,1,0". A rank larger than the number of parts pads with zeros.
  static Partition parse(std::string_view text, int rank = 0) {
    std::vector<int> parts;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos)
          throw ParseError("bad part '" + item + "'");
        parts.push_back(v);
      } catch (const std::logic_error&) {
        throw ParseError("bad partition '" + std::string(text) + "'");
      }
    }
    if (parts.empty()) throw ParseError("empty partition");
    if (rank > 0) {
      if (static_cast<int>(parts.size()) > rank)
        throw RankMismatch("partition '" + std::string(text) + "' longer than r=" + std::to_string(rank));
      parts.resize(static_cast<std::size_t>(rank), 0);
    }
    return Partition(std::move(parts));
  }

  int rank() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  IntVector as_vector() const { return IntVector(parts_); }
  std::string to_string() const { return join_ints(parts_); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Orders partitions by descending weight, then descending lexicographic order.
/// Lexicographic order refines dominance, so this is a linear extension of it.
struct DescendingWeightLex {
  bool operator()(const Partition& a, const Partition& b) const {
    const int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa > wb;
    return a.parts() > b.parts();
  }
};

/// Subset of [r] = {0, ..., r-1} stored as a bitmask (0-based indices).
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::uint32_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> indices) {
    for (int i : indices) bits_ |= 1u << i;
  }
  static Subset full(int rank) { return Subset(rank >= 32 ? ~0u : ((1u << rank) - 1u)); }
  static Subset single(int i) { return Subset(1u << i); }

  std::uint32_t bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(int i) const noexcept { return (bits_ >> i) & 1u; }
  Subset complement(int rank) const { return Subset(Subset::full(rank).bits_ & ~bits_); }
  Subset without(int i) const { return Subset(bits_ & ~(1u << i)); }
  bool disjoint(Subset o) const { return (bits_ & o.bits_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
  /// 1-based rendering, e.g. "{1,3}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
    return out + "}";
  }

  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::uint32_t bits_ = 0;
};

inline std::vector<Subset> all_subsets(int rank) {
  std::vector<Subset> out;
  for (std::uint32_t b = 0; b < (1u << rank); ++b) out.emplace_back(b);
  return out;
}

inline std::vector<Subset> subsets_of_size(int rank, int size) {
  std::vector<Subset> out;
  for (std::uint32_t b = 0; b < (1u << rank); ++b)
    if (std::popcount(b) == size) out.emplace_back(b);
  return out;
}

/// (r-1, r-2, ..., 1, 0).
inline IntVector staircase(int rank) {
  if (rank < 1) throw RankMismatch("staircase needs r >= 1");
  IntVector v;
  for (int j = 0; j < rank; ++j) v.entries.push_back(rank - 1 - j);
  return v;
}

/// Dominance order on partitions of equal weight (prefix sums).
inline bool dominance_leq(const Partition& k, const Partition& m) {
  if (k.rank() != m.rank()) throw RankMismatch("dominance between ranks " + std::to_string(k.rank()) +
                                               " and " + std::to_string(m.rank()));
  if (k.weight() != m.weight())
    throw WeightMismatch("(" + k.to_string() + ") vs (" + m.to_string() + ")");
  int sk = 0, sm = 0;
  for (int i = 0; i < k.rank(); ++i) {
    sk += k[i];
    sm += m[i];
    if (sk > sm) return false;
  }
  return true;
}

/// Inclusion order: k_i <= m_i for every i.
inline bool contains(const Partition& k, const Partition& m) {
  if (k.rank() != m.rank()) throw RankMismatch("inclusion between different ranks");
  for (int i = 0; i < k.rank(); ++i)
    if (k[i] > m[i]) return false;
  return true;
}

enum class Sign { plus, minus };

struct ShiftResult {
  IntVector vector;
  bool is_partition;
};

/// x +/- epsilon_J, together with membership in the partition cone.
inline ShiftResult shift_by_subset(const IntVector& x, Subset j, Sign sign) {
  IntVector out = x;
  const int delta = sign == Sign::plus ? 1 : -1;
  for (int i : j.indices()) out[i] += delta;
  const bool part = out.is_partition();
  return {std::move(out), part};
}

/// Partitions of exactly n with at most `rank` parts, in descending lex order.
inline std::vector<Partition> partitions_of(int n, int rank) {
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(rank), 0);
  // Depth-first fill with parts bounded by the previous part; emits in
  // descending lex order because larger first parts are tried first.
  auto rec = [&](auto&& self, int pos, int remaining, int bound) -> void {
    if (pos == rank) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    const int slots = rank - pos;
    for (int v = std::min(bound, remaining); v >= 0; --v) {
      if (v * slots < remaining) break;
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v, v);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, n, n);
  return out;
}

/// All partitions of length <= rank and weight <= max_weight, ordered by
/// ascending weight then descending lex order.
inline std::vector<Partition> partitions_up_to(int max_weight, int rank) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n) {
    auto layer = partitions_of(n, rank);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// {k : |k| = |m|, k <= m in dominance}, descending lex order (m first).
inline std::vector<Partition> dominance_ideal(const Partition& m) {
  std::vector<Partition> out;
  for (auto& k : partitions_of(m.weight(), m.rank()))
    if (dominance_leq(k, m)) out.push_back(std::move(k));
  return out;
}

}  // namespace jackpieri
