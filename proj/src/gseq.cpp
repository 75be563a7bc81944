#include "symcover/gseq.hpp"

#include "symcover/errors.hpp"
#include "symcover/invariant.hpp"
#include "symcover/matrix.hpp"

#include <string>

namespace symcover {

GSequence::GSequence(long a, std::size_t n_max) : a_(a) {
  if (a <= 2) throw InvalidParameters("g sequence requires a > 2, got a = " + std::to_string(a));
  if (n_max < 1) throw InvalidParameters("g sequence requires n_max >= 1");
  values_.reserve(n_max + 1);
  values_.emplace_back(0);
  values_.emplace_back(1);
  const BigInt a_big(a);
  while (values_.size() <= n_max) {
    const std::size_t n = values_.size();
    values_.push_back(a_big * values_[n - 1] - values_[n - 2]);
  }
}

GSequence GSequence::extended(std::size_t n_max) const {
  GSequence out = *this;
  const BigInt a_big(a_);
  out.values_.reserve(n_max + 1);
  while (out.values_.size() <= n_max) {
    const std::size_t n = out.values_.size();
    out.values_.push_back(a_big * out.values_[n - 1] - out.values_[n - 2]);
  }
  return out;
}

GSequence g_values(long a, std::size_t n_max) { return GSequence(a, n_max); }

std::shared_ptr<const GSequence> GSequenceCache::get(long a, std::size_t n_max) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = sequences_[a];
  if (!slot) {
    slot = std::make_shared<const GSequence>(a, n_max);
  } else if (slot->size() < n_max) {
    slot = std::make_shared<const GSequence>(slot->extended(n_max));
  }
  return slot;
}

GSequenceCache& default_g_cache() {
  static GSequenceCache cache;
  return cache;
}

PFactorization g_pfact(long a, std::size_t n, std::uint64_t p) {
  if (n < 1) throw InvalidParameters("g_pfact requires n >= 1");
  return p_factorize((*default_g_cache().get(a, n))[n], p);
}

namespace {

struct LocalScan {
  std::vector<LocalUnit> units;
  std::size_t fallbacks = 0;
};

LocalScan scan_local(long a, std::size_t n_max, std::uint64_t p, GSequenceCache& cache) {
  if (a <= 2) throw InvalidParameters("g sequence requires a > 2");
  LocalScan out;
  out.units.assign(n_max + 1, LocalUnit{});
  std::shared_ptr<const GSequence> exact;
  auto exact_unit = [&](std::size_t n) {
    if (!exact) exact = cache.get(a, n_max);
    ++out.fallbacks;
    return local_unit((*exact)[n], p);
  };

  if (p == 2) {
    // Wrapping uint64 arithmetic is arithmetic mod 2^64.
    const std::uint64_t a_mod = static_cast<std::uint64_t>(a);
    std::uint64_t prev = 0;
    std::uint64_t cur = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (n >= 2) {
        const std::uint64_t next = a_mod * cur - prev;
        prev = cur;
        cur = next;
      }
      const unsigned tz = cur == 0 ? 64U : static_cast<unsigned>(__builtin_ctzll(cur));
      if (tz > 61) {
        out.units[n] = exact_unit(n);
      } else {
        out.units[n] = {tz, (cur >> tz) & 7U};
      }
    }
    return out;
  }

  std::uint64_t modulus = p;
  while (modulus <= (std::uint64_t{1} << 62) / p) modulus *= p;
  const std::uint64_t a_mod = static_cast<std::uint64_t>(a) % modulus;
  std::uint64_t prev = 0;
  std::uint64_t cur = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n >= 2) {
      const std::uint64_t scaled = mul_mod(a_mod, cur, modulus);
      const std::uint64_t next = scaled >= prev ? scaled - prev : scaled + (modulus - prev);
      prev = cur;
      cur = next;
    }
    if (cur == 0) {
      out.units[n] = exact_unit(n);
      continue;
    }
    std::uint64_t r = cur;
    unsigned valuation = 0;
    while (r % p == 0) {
      r /= p;
      ++valuation;
    }
    out.units[n] = {valuation, r % p};
  }
  return out;
}

}  // namespace

std::vector<LocalUnit> g_local_units(long a, std::size_t n_max, std::uint64_t p, GSequenceCache& cache) {
  return scan_local(a, n_max, p, cache).units;
}

std::size_t g_local_fallbacks(long a, std::size_t n_max, std::uint64_t p) {
  return scan_local(a, n_max, p, default_g_cache()).fallbacks;
}

BigInt det_B(long a, std::size_t n) { return det_exact(build_B(a, n)); }

BigInt det_B_from_g(const GSequence& g, std::size_t n) {
  if (n < 2) throw InvalidParameters("B_n requires n >= 2");
  if (g.size() < n + 1) throw InvalidParameters("det_B_from_g: sequence too short");
  BigInt det = g[n + 1] - g[n - 1];
  if (n % 2 == 0) {
    det -= 2;
  } else {
    det += 2;
  }
  return det;
}

BigInt det_Bstar(long a, std::size_t n) {
  if (n < 2) throw InvalidParameters("B*_n requires n >= 2");
  return BigInt(a - 2) * (*default_g_cache().get(a, n))[n];
}

}  // namespace symcover
