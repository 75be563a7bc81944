#include "symcover/numtheory.hpp"

#include <array>
#include <stdexcept>

namespace symcover {

BigInt PFactorization::value() const {
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), prime, valuation);
  return unit * power;
}

Place Place::finite(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("Place::finite: " + std::to_string(p) + " is not prime");
  }
  Place place;
  place.prime_ = p;
  return place;
}

std::string Place::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(prime_);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned r) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Euler's criterion on a residue already reduced into [1, p).
Sign legendre_residue(std::uint64_t r, std::uint64_t p) {
  return pow_mod(r, (p - 1) / 2, p) == 1 ? Sign::plus() : Sign::minus();
}

// (x-1)/2 mod 2 and (x^2-1)/8 mod 2 for odd x given mod 8.
unsigned epsilon2(std::uint64_t x) { return static_cast<unsigned>(((x - 1) / 2) & 1U); }
unsigned omega2(std::uint64_t x) { return static_cast<unsigned>(((x * x - 1) / 8) & 1U); }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // Exact for every n < 2^64.
  constexpr std::array<std::uint64_t, 7> bases = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  for (std::uint64_t a : bases) {
    if (!miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    return is_prime(static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t())));
  }
  if (mpz_even_p(n.get_mpz_t())) return false;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  for (BigInt d = 3; d <= root; d += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound <= 2) return primes;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
  }
  return primes;
}

Sign legendre(const BigInt& a, std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("legendre: p must be an odd prime");
  const std::uint64_t r = mpz_fdiv_ui(a.get_mpz_t(), p);
  if (r == 0) throw std::invalid_argument("legendre: p divides a");
  return legendre_residue(r, p);
}

Sign legendre(std::int64_t a, std::uint64_t p) { return legendre(BigInt(static_cast<long>(a)), p); }

PFactorization p_factorize(const BigInt& n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("p_factorize: n must be nonzero");
  PFactorization f;
  f.prime = p;
  const BigInt prime(static_cast<unsigned long>(p));
  f.valuation = static_cast<unsigned>(mpz_remove(f.unit.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
  return f;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

LocalUnit local_unit(const BigInt& n, std::uint64_t p) {
  const PFactorization f = p_factorize(n, p);
  return {f.valuation, mpz_fdiv_ui(f.unit.get_mpz_t(), unit_modulus(p))};
}

LocalUnit local_negate(LocalUnit x, std::uint64_t p) {
  const std::uint64_t m = unit_modulus(p);
  return {x.valuation, (m - x.residue) % m};
}

LocalUnit local_multiply(LocalUnit x, LocalUnit y, std::uint64_t p) {
  return {x.valuation + y.valuation, mul_mod(x.residue, y.residue, unit_modulus(p))};
}

Sign hilbert_local(LocalUnit a, LocalUnit b, std::uint64_t p) {
  if (p == 2) {
    const unsigned exponent = epsilon2(a.residue) * epsilon2(b.residue) + a.valuation * omega2(b.residue) +
                              b.valuation * omega2(a.residue);
    return Sign::from_parity(exponent);
  }
  Sign s;
  if ((a.valuation & 1U) && (b.valuation & 1U)) s *= legendre_residue(p - 1, p);
  if (b.valuation & 1U) s *= legendre_residue(a.residue, p);
  if (a.valuation & 1U) s *= legendre_residue(b.residue, p);
  return s;
}

Sign hilbert(const BigInt& a, const BigInt& b, Place place) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert: arguments must be nonzero");
  if (place.is_infinite()) return (a < 0 && b < 0) ? Sign::minus() : Sign::plus();
  const std::uint64_t p = place.prime();
  return hilbert_local(local_unit(a, p), local_unit(b, p), p);
}

}  // namespace symcover
