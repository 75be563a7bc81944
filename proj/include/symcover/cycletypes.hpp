#pragma once

// v-feasible cycle types are the partitions of v with every part >= 2.

#include "symcover/numtheory.hpp"
#include "symcover/params.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace symcover {

/// Counts N(n, m) of partitions of n into parts in [2, m], for n <= v_max,
/// with N(n, m) = N(n, m-1) + N(n-m, min(m, n-m)) and N(0, .) = 1.
class PartitionTable {
 public:
  explicit PartitionTable(long v_max);

  long v_max() const { return v_max_; }
  /// N(n, m); m is clamped to [0, n].
  const BigInt& count(long n, long m) const;
  /// Number of v-feasible cycle types.
  const BigInt& total(long v) const { return count(v, v); }

  /// Bijection between [0, total(v)) and v-feasible cycle types. Rank order
  /// groups by largest part, ascending.
  CycleType unrank(long v, const BigInt& rank) const;
  BigInt rank(const CycleType& ct) const;

 private:
  long v_max_;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt count_feasible(long v);

/// Visits every v-feasible cycle type once, ordered by number of parts and
/// then lexicographically: v = 11 starts [11], [2,9], [3,8], ...
void for_each_feasible(long v, const std::function<void(const CycleType&)>& visit);
std::vector<CycleType> enumerate_feasible(long v);

/// count distinct cycle types drawn uniformly without replacement by rank.
/// count == total returns every type in enumeration order; count > total
/// throws InvalidParameters.
std::vector<CycleType> sample_feasible(long v, std::size_t count, std::uint64_t seed);

/// count independent uniform draws (with replacement).
std::vector<CycleType> draw_feasible(long v, std::size_t count, std::uint64_t seed);

/// Parses "2^4,3", "[2,2,2,2,3]", "9^5", ... into a canonical cycle type.
/// Throws InvalidParameters on malformed text or parts < 2.
CycleType parse_cycle_type(std::string_view text);

}  // namespace symcover
