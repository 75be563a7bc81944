#pragma once

// The sequence g_1 = 1, g_2 = a, g_n = a g_{n-1} - g_{n-2}, which governs the
// determinants and Hasse-Minkowski invariants of the B_n(a) family.

#include "symcover/numtheory.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace symcover {

/// Exact values g_1(a), ..., g_N(a). Immutable once built.
class GSequence {
 public:
  /// Throws InvalidParameters if a <= 2 or n_max < 1.
  GSequence(long a, std::size_t n_max);

  long a() const { return a_; }
  std::size_t size() const { return values_.size() - 1; }

  /// g_n for 0 <= n <= size(); g_0 = 0 extends the recurrence downwards.
  const BigInt& operator[](std::size_t n) const { return values_.at(n); }

  /// A copy extended to n_max terms (or *this if already long enough).
  GSequence extended(std::size_t n_max) const;

 private:
  long a_;
  std::vector<BigInt> values_;
};

GSequence g_values(long a, std::size_t n_max);

/// Shares exact sequences across queries; grows each a's sequence
/// monotonically. Safe for concurrent use.
class GSequenceCache {
 public:
  std::shared_ptr<const GSequence> get(long a, std::size_t n_max);

 private:
  std::mutex mutex_;
  std::map<long, std::shared_ptr<const GSequence>> sequences_;
};

GSequenceCache& default_g_cache();

PFactorization g_pfact(long a, std::size_t n, std::uint64_t p);

/// Local data (valuation, unit residue) of g_0..g_{n_max} at p, index n holds
/// g_n; entry 0 is meaningless. Computed from g_n mod p^e in machine words
/// (e maximal with p^e < 2^63, or 2^64 for p = 2); a term whose valuation
/// reaches that cap is recomputed from the exact value.
std::vector<LocalUnit> g_local_units(long a, std::size_t n_max, std::uint64_t p,
                                     GSequenceCache& cache = default_g_cache());

/// Number of terms among g_1..g_{n_max} that had to fall back to exact
/// arithmetic in g_local_units (for diagnostics and tests).
std::size_t g_local_fallbacks(long a, std::size_t n_max, std::uint64_t p);

/// |B_n(a)| by fraction-free elimination on the constructed matrix.
BigInt det_B(long a, std::size_t n);
/// |B_n(a)| = g_{n+1} - g_{n-1} - 2(-1)^n, the circulant closed form.
BigInt det_B_from_g(const GSequence& g, std::size_t n);
/// |B*_n(a)| = (a-2) g_n(a).
BigInt det_Bstar(long a, std::size_t n);

}  // namespace symcover
