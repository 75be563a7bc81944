#pragma once

// Exact number theory kernel: primality, Legendre symbols, p-factorizations
// and Hilbert symbols at every place of Q.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace symcover {

using BigInt = mpz_class;

/// A value in {+1, -1}.
class Sign {
 public:
  constexpr Sign() = default;

  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  static constexpr Sign from_parity(std::uint64_t exponent) {
    return (exponent & 1U) ? minus() : plus();
  }

  constexpr int value() const { return value_; }
  constexpr bool is_plus() const { return value_ > 0; }
  constexpr bool is_minus() const { return value_ < 0; }

  /// this^exponent; only the parity of the exponent matters.
  constexpr Sign pow(std::uint64_t exponent) const {
    return (exponent & 1U) ? *this : plus();
  }

  constexpr Sign operator*(Sign other) const { return Sign(value_ * other.value_); }
  constexpr Sign& operator*=(Sign other) {
    value_ = static_cast<std::int8_t>(value_ * other.value_);
    return *this;
  }
  constexpr bool operator==(const Sign&) const = default;

 private:
  constexpr explicit Sign(int v) : value_(static_cast<std::int8_t>(v)) {}
  std::int8_t value_ = 1;
};

/// n = unit * prime^valuation with prime not dividing unit. The sign of n is
/// carried by unit.
struct PFactorization {
  std::uint64_t prime = 2;
  unsigned valuation = 0;
  BigInt unit = 1;

  BigInt value() const;
};

/// A place of Q: a finite prime or the infinite place.
class Place {
 public:
  /// Throws std::invalid_argument if p is not prime.
  static Place finite(std::uint64_t p);
  static Place infinity() { return Place(); }

  bool is_infinite() const { return prime_ == 0; }
  /// Precondition: !is_infinite().
  std::uint64_t prime() const { return prime_; }

  std::string to_string() const;

  bool operator==(const Place&) const = default;

 private:
  Place() = default;
  std::uint64_t prime_ = 0;
};

// Primality is deterministic: Miller-Rabin with a base set that is exact
// below 2^64, trial division above.
bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

/// All primes strictly below bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Legendre symbol (a/p) by Euler's criterion. Rejects p = 2 and p | a.
Sign legendre(const BigInt& a, std::uint64_t p);
Sign legendre(std::int64_t a, std::uint64_t p);

/// p-adic valuation and unit part of n != 0.
PFactorization p_factorize(const BigInt& n, std::uint64_t p);

bool is_perfect_square(const BigInt& n);

/// Hilbert symbol (a,b)_place for nonzero integers a, b.
Sign hilbert(const BigInt& a, const BigInt& b, Place place);

/// The part of a nonzero integer that a Hilbert symbol at p actually sees:
/// its valuation and its unit part reduced mod p (odd p) or mod 8 (p = 2).
/// The sign lives in the residue.
struct LocalUnit {
  unsigned valuation = 0;
  std::uint64_t residue = 1;
};

/// Reduction modulus for unit residues at p: p for odd p, 8 for p = 2.
constexpr std::uint64_t unit_modulus(std::uint64_t p) { return p == 2 ? 8 : p; }

LocalUnit local_unit(const BigInt& n, std::uint64_t p);
LocalUnit local_negate(LocalUnit x, std::uint64_t p);
LocalUnit local_multiply(LocalUnit x, LocalUnit y, std::uint64_t p);

/// Hilbert symbol at a finite prime p from local data of both arguments.
Sign hilbert_local(LocalUnit a, LocalUnit b, std::uint64_t p);

}  // namespace symcover
