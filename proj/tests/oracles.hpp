#pragma once

// Slow reference implementations shared by the unit and acceptance tests.
// None of them call into the code paths they check.

#include "symcover/numtheory.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// +1 if a is a nonzero square mod p, by listing squares.
inline int legendre_table(long a, long p) {
  const long r = ((a % p) + p) % p;
  for (long x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

/// (a, b)_p by searching primitive solutions of a x^2 + b y^2 = z^2 modulo
/// p^2 (odd p) or 64 (p = 2) after removing square factors of p; Hensel's
/// lemma makes that modulus decisive. Practical for p <= 7.
inline int hilbert_brute(long a, long b, long p) {
  auto reduce = [p](long x) {
    while (x % (p * p) == 0) x /= p * p;
    return x;
  };
  a = reduce(a);
  b = reduce(b);
  const long m = p == 2 ? 64 : p * p;
  const long am = ((a % m) + m) % m;
  const long bm = ((b % m) + m) % m;
  static std::map<std::tuple<long, long, long>, int> memo;
  const auto key = std::make_tuple(am, bm, p);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int result = -1;
  for (long x = 0; x < m && result < 0; ++x)
    for (long y = 0; y < m && result < 0; ++y)
      for (long z = 0; z < m; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        if ((am * x % m * x + bm * y % m * y - z * z % m) % m == 0) {
          result = 1;
          break;
        }
      }
  memo[key] = result;
  return result;
}

}  // namespace oracle
