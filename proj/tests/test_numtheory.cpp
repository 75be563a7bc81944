#include "oracles.hpp"
#include "symcover/numtheory.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace symcover;

namespace {

Sign H(long a, long b, Place place) { return hilbert(BigInt(a), BigInt(b), place); }

std::vector<Place> test_places() {
  std::vector<Place> places{Place::infinity()};
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) places.push_back(Place::finite(p));
  return places;
}

long nonzero(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  long x = 0;
  while (x == 0) x = dist(rng);
  return x;
}

}  // namespace

TEST_CASE("is_prime") {
  CHECK(is_prime(std::uint64_t{2}));
  CHECK_FALSE(is_prime(std::uint64_t{1}));
  CHECK(is_prime(std::uint64_t{6709}));
  CHECK_FALSE(is_prime(std::uint64_t{0}));
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == oracle::is_prime_trial(n));
  CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
  CHECK_FALSE(is_prime(std::uint64_t{3215031751ULL}));  // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(BigInt("18446744073709551617")));  // 2^64 + 1 = 274177 * 67280421310721
  CHECK(is_prime(BigInt(1000003)));
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  const auto thirty = primes_up_to(30);
  CHECK(thirty.size() == 10);
  CHECK(thirty.back() == 29);
  CHECK(primes_up_to(1000).size() == 168);
  CHECK(primes_up_to(2).empty());
  CHECK(primes_up_to(3) == std::vector<std::uint64_t>{2});
}

TEST_CASE("legendre") {
  CHECK(legendre(BigInt(1), 7).is_plus());
  CHECK(legendre(BigInt(2), 7).is_plus());
  CHECK(legendre(BigInt(3), 7).is_minus());
  CHECK_THROWS_AS(legendre(BigInt(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(legendre(BigInt(14), 7), std::invalid_argument);
  for (long p : {3, 5, 7, 11, 13, 97, 101})
    for (long a = -200; a <= 200; ++a)
      if (a % p != 0) CHECK(legendre(std::int64_t{a}, static_cast<std::uint64_t>(p)).value() == oracle::legendre_table(a, p));
}

TEST_CASE("p_factorize") {
  auto f = p_factorize(BigInt(12), 2);
  CHECK(f.valuation == 2);
  CHECK(f.unit == 3);
  f = p_factorize(BigInt(6765), 5);
  CHECK(f.valuation == 1);
  CHECK(f.unit == 1353);
  f = p_factorize(BigInt(-50), 5);
  CHECK(f.valuation == 2);
  CHECK(f.unit == -2);
  CHECK(f.value() == -50);
  CHECK_THROWS(p_factorize(BigInt(0), 3));
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(BigInt(0)));
  CHECK(is_perfect_square(BigInt(102400)));
  CHECK_FALSE(is_perfect_square(BigInt(-4)));
  CHECK_FALSE(is_perfect_square(BigInt(102401)));
}

TEST_CASE("Place validates primality") {
  CHECK_THROWS_AS(Place::finite(9), std::invalid_argument);
  CHECK(Place::finite(7).prime() == 7);
  CHECK(Place::infinity().is_infinite());
}

TEST_CASE("hilbert examples") {
  for (const Place& place : test_places())
    for (long a : {-7L, -1L, 2L, 12L, 75L}) CHECK(H(a, 1, place).is_plus());
  CHECK(H(-1, -1, Place::finite(2)).is_minus());
  CHECK(H(3, -5, Place::finite(5)).is_minus());
  CHECK(H(-1, -1, Place::infinity()).is_minus());
  CHECK(H(-1, 1, Place::infinity()).is_plus());
}

TEST_CASE("hilbert against brute-force solubility") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    const long a = nonzero(rng, 500);
    const long b = nonzero(rng, 500);
    for (long p : {2, 3, 5, 7}) {
      INFO("a=" << a << " b=" << b << " p=" << p);
      CHECK(H(a, b, Place::finite(static_cast<std::uint64_t>(p))).value() == oracle::hilbert_brute(a, b, p));
    }
  }
}

TEST_CASE("hilbert identities and reciprocity") {
  std::mt19937_64 rng(11);
  const auto places = test_places();
  for (int i = 0; i < 10000; ++i) {
    const long a = nonzero(rng, 10000);
    const long b = nonzero(rng, 10000);
    const long a2 = nonzero(rng, 1000);
    const long s = nonzero(rng, 100);
    const long t = nonzero(rng, 100);
    for (const Place& P : places) {
      CHECK(H(a, b, P) == H(b, a, P));
      CHECK(hilbert(BigInt(a) * s * s, BigInt(b) * t * t, P) == H(a, b, P));
      CHECK(hilbert(BigInt(a) * a2, BigInt(b), P) == H(a, b, P) * H(a2, b, P));
      CHECK(H(a, -a, P).is_plus());
      CHECK(H(a, a, P) == H(a, -1, P));
      if (a + b != 0) CHECK(hilbert(-BigInt(a) * b, BigInt(a + b), P) == H(a, b, P));
    }
    // Product over infinity and the primes dividing 2ab.
    Sign product = H(a, b, Place::infinity());
    const BigInt ab2 = BigInt(2) * a * b;
    BigInt rest = abs(ab2);
    for (std::uint64_t p = 2; rest > 1; ++p) {
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
      product *= H(a, b, Place::finite(p));
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= static_cast<unsigned long>(p);
    }
    CHECK(product.is_plus());
  }
}

TEST_CASE("hilbert is trivial at odd p coprime to both arguments") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const long a = nonzero(rng, 100000);
    const long b = nonzero(rng, 100000);
    for (std::uint64_t p : {3, 5, 7, 11, 13, 101})
      if (a % static_cast<long>(p) != 0 && b % static_cast<long>(p) != 0) CHECK(H(a, b, Place::finite(p)).is_plus());
  }
}

TEST_CASE("hilbert_local matches hilbert on big integers") {
  const BigInt a("-123456789012345678901234567890");
  const BigInt b("98765432109876543210987654321000");
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17}) {
    CHECK(hilbert_local(local_unit(a, p), local_unit(b, p), p) == hilbert(a, b, Place::finite(p)));
    CHECK(hilbert(a * a * 9, b, Place::finite(p)) == hilbert(BigInt(1), b, Place::finite(p)));
  }
}
