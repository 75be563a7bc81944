#include "symcover/errors.hpp"
#include "symcover/gseq.hpp"
#include "symcover/invariant.hpp"
#include "symcover/matrix.hpp"

#include <doctest.h>

using namespace symcover;

namespace {

BigInt power(long base, unsigned exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return out;
}

BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

TEST_CASE("g values") {
  const GSequence g = g_values(3, 11);
  const long expected[] = {1, 3, 8, 21, 55, 144, 377, 987, 2584, 6765, 17711};
  for (std::size_t n = 1; n <= 11; ++n) CHECK(g[n] == expected[n - 1]);
  CHECK(g[0] == 0);
  for (long a = 3; a <= 30; ++a) CHECK(g_values(a, 3)[3] == a * a - 1);
  const BigInt g29 = g_values(5, 29)[29];
  CHECK(g29 > BigInt("11750000000000000000"));
  CHECK(g29 < BigInt("11850000000000000000"));
  CHECK_THROWS_AS(g_values(2, 5), InvalidParameters);
  CHECK_THROWS_AS(g_values(5, 0), InvalidParameters);
}

TEST_CASE("g values are positive and the cache extends") {
  for (long a = 3; a <= 12; ++a) {
    const GSequence g = g_values(a, 60);
    for (std::size_t n = 1; n <= 60; ++n) CHECK(g[n] > 0);
    GSequenceCache cache;
    const auto short_seq = cache.get(a, 5);
    const auto long_seq = cache.get(a, 60);
    CHECK(long_seq->size() >= 60);
    CHECK((*long_seq)[5] == (*short_seq)[5]);
    CHECK((*long_seq)[60] == g[60]);
  }
}

TEST_CASE("g_pfact") {
  auto f = g_pfact(3, 10, 5);
  CHECK(f.valuation == 1);
  CHECK(mod(f.unit, 5) == 3);
  CHECK(g_pfact(3, 7, 5).valuation == 0);
  for (std::uint64_t p : {2, 3, 7}) {
    f = g_pfact(9, 1, p);
    CHECK(f.valuation == 0);
    CHECK(f.unit == 1);
  }
}

TEST_CASE("g_local_units matches exact factorization") {
  for (long a = 3; a <= 40; ++a) {
    const GSequence g = g_values(a, 120);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 43, 307, 997}) {
      const auto units = g_local_units(a, 120, p);
      for (std::size_t n = 1; n <= 120; ++n) {
        const LocalUnit exact = local_unit(g[n], p);
        INFO("a=" << a << " p=" << p << " n=" << n);
        CHECK(units[n].valuation == exact.valuation);
        CHECK(units[n].residue == exact.residue);
      }
    }
  }
}

TEST_CASE("g_local_units falls back past the word cap") {
  // a = 2^32 - 2: a + 2 = 2^32, so g_n picks up large 2-adic valuations.
  const long a = (1L << 32) - 2;
  const GSequence g = g_values(a, 64);
  const auto units = g_local_units(a, 64, 2);
  for (std::size_t n = 1; n <= 64; ++n) {
    const LocalUnit exact = local_unit(g[n], 2);
    CHECK(units[n].valuation == exact.valuation);
    CHECK(units[n].residue == exact.residue);
  }
}

TEST_CASE("det_B") {
  CHECK(det_B(3, 2) == 5);
  for (long a = 3; a <= 15; ++a) CHECK(det_B(a, 3) == BigInt(a + 2) * (a - 1) * (a - 1));
  const BigInt d4 = det_B(3, 4);
  CHECK(d4 % 5 == 0);
  CHECK(is_perfect_square(d4 / 5));
}

TEST_CASE("det_B_from_g matches elimination") {
  for (long a = 3; a <= 12; ++a) {
    const GSequence g = g_values(a, 42);
    for (std::size_t n = 2; n <= 40; ++n) CHECK(det_B_from_g(g, n) == det_B(a, n));
  }
}

TEST_CASE("det_Bstar") {
  CHECK(det_Bstar(3, 2) == 3);
  CHECK(det_Bstar(3, 3) == 8);
  CHECK(det_Bstar(4, 2) == 8);
  for (long a = 3; a <= 12; ++a)
    for (std::size_t n = 2; n <= 40; ++n) CHECK(det_Bstar(a, n) == det_exact(build_Bstar(a, n)));
}

TEST_CASE("determinant shapes of B_n") {
  for (long a = 3; a <= 12; ++a)
    for (std::size_t n = 2; n <= 40; ++n) {
      const BigInt d = det_B(a, n);
      const BigInt q = n % 2 == 1 ? BigInt(a + 2) : BigInt((a + 2) * (a - 2));
      INFO("a=" << a << " n=" << n);
      REQUIRE(d % q == 0);
      CHECK(is_perfect_square(d / q));
    }
}

TEST_CASE("g_n = (-1)^(n+1) n mod p^alpha when p^alpha exactly divides a + 2") {
  for (long a = 3; a <= 200; ++a)
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      const PFactorization f = p_factorize(BigInt(a + 2), p);
      if (f.valuation == 0) continue;
      const BigInt m = power(static_cast<long>(p), f.valuation);
      const GSequence g = g_values(a, 60);
      for (std::size_t n = 1; n <= 60; ++n) {
        const BigInt expected = (n % 2 == 1 ? BigInt(static_cast<unsigned long>(n)) : -BigInt(static_cast<unsigned long>(n)));
        CHECK(mod(g[n] - expected, m) == 0);
      }
    }
}

TEST_CASE("congruences of g when p divides a") {
  for (long a = 3; a <= 200; ++a)
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
      const PFactorization f = p_factorize(BigInt(a), p);
      if (f.valuation == 0) continue;
      const BigInt pa = power(static_cast<long>(p), f.valuation);
      const BigInt m = pa * pa;
      const GSequence g = g_values(a, 61);
      for (long i = 1; 2 * i + 1 <= 61; ++i) {
        const BigInt even = BigInt(i % 2 == 1 ? i : -i) * f.unit * pa;
        CHECK(mod(g[static_cast<std::size_t>(2 * i)] - even, m) == 0);
        CHECK(mod(g[static_cast<std::size_t>(2 * i + 1)] - (i % 2 == 0 ? 1 : -1), m) == 0);
      }
    }
}

TEST_CASE("valuation of g_n at p | a + 2, p | n") {
  for (long a = 3; a <= 300; ++a)
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
      const PFactorization f = p_factorize(BigInt(a + 2), p);
      if (f.valuation == 0 || (p == 3 && f.valuation == 1)) continue;
      const GSequence g = g_values(a, 3 * p * p);
      for (std::size_t n = p; n <= 3 * p * p; n += p) {
        const PFactorization gf = p_factorize(g[n], p);
        const PFactorization nf = p_factorize(BigInt(static_cast<unsigned long>(n)), p);
        INFO("a=" << a << " p=" << p << " n=" << n);
        CHECK(gf.valuation == nf.valuation);
        const BigInt expected = n % 2 == 1 ? nf.unit : -nf.unit;
        CHECK(mod(gf.unit - expected, BigInt(static_cast<unsigned long>(p))) == 0);
      }
    }
}
