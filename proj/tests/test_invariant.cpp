#include "symcover/analysis.hpp"
#include "symcover/cycletypes.hpp"
#include "symcover/errors.hpp"
#include "symcover/invariant.hpp"

#include <doctest.h>

#include <random>

using namespace symcover;

namespace {

Place at(std::uint64_t p) { return Place::finite(p); }

}  // namespace

TEST_CASE("build_B") {
  IntMatrix b2 = build_B(3, 2);
  CHECK(b2(0, 0) == 3);
  CHECK(b2(0, 1) == 2);
  CHECK(b2(1, 0) == 2);
  const IntMatrix b3 = build_B(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(b3(i, j) == (i == j ? 3 : 1));
  const IntMatrix b5 = build_B(4, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < 5; ++j) sum += b5(i, j);
    CHECK(sum == 6);
  }
  CHECK_THROWS_AS(build_B(3, 1), InvalidParameters);
}

TEST_CASE("build_Bstar") {
  const IntMatrix b2 = build_Bstar(3, 2);
  CHECK(b2(0, 0) == 2);
  CHECK(b2(0, 1) == 1);
  CHECK(b2(1, 1) == 2);
  const IntMatrix b3 = build_Bstar(3, 3);
  const long expected[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 2}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(b3(i, j) == expected[i][j]);
  for (std::size_t n = 2; n < 10; ++n) CHECK(build_Bstar(5, n).is_symmetric());
  CHECK_THROWS_AS(build_Bstar(3, 1), InvalidParameters);
}

TEST_CASE("build_X") {
  const ParameterSet params(11, 4, 1);
  const IntMatrix x = build_X(params, CycleType({11}));
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 11; ++j) {
      const std::size_t d = (j + 11 - i) % 11;
      CHECK(x(i, j) == (i == j ? 4 : (d == 1 || d == 10) ? 2 : 1));
    }
  const IntMatrix y = build_X(params, CycleType({2, 9}));
  CHECK(y(0, 1) == 3);
  CHECK(y.is_symmetric());
  CHECK_THROWS_AS(build_X(params, CycleType({2, 8})), InvalidParameters);
  for (const BigInt& m : leading_principal_minors(build_X(ParameterSet(19, 5, 1), CycleType({2, 3, 3, 5, 6}))))
    CHECK(m > 0);
}

TEST_CASE("det_exact and cp_definition examples") {
  CHECK(det_exact(IntMatrix::identity(6)) == 1);
  CHECK(det_exact(build_B(3, 2)) == 5);
  CHECK(is_perfect_square(det_exact(build_X(ParameterSet(11, 4, 1), CycleType({2, 3, 6})))));
  for (std::size_t n : {1, 4, 7}) {
    CHECK(cp_definition(IntMatrix::identity(n), at(2)).is_minus());
    CHECK(cp_definition(IntMatrix::identity(n), Place::infinity()).is_minus());
    for (std::uint64_t p : {3, 5, 7}) CHECK(cp_definition(IntMatrix::identity(n), at(p)).is_plus());
  }
  CHECK(cp_definition(build_B(3, 2), at(5)).is_minus());
  IntMatrix singular(2);
  singular(0, 0) = 0;
  singular(1, 1) = 1;
  CHECK_THROWS_AS(cp_definition(singular, at(3)), DegenerateMatrix);
}

TEST_CASE("det_X structural formula matches elimination") {
  for (const auto& params : params_below(31))
    for (const auto& ct : enumerate_feasible(params.v())) {
      if (ct.t() > 6) continue;
      const BigInt d = det_exact(build_X(params, ct));
      CHECK(det_X(params, ct) == d);
      CHECK(det_X_is_square(params, ct) == is_perfect_square(d));
    }
  for (const auto& params : params_below(60))
    for (const auto& ct : sample_feasible(params.v(), std::min<std::size_t>(200, count_feasible(params.v()).get_ui()), 1))
      CHECK(det_X_is_square(params, ct) == is_perfect_square(det_X(params, ct)));
}

TEST_CASE("cp_B against the definition") {
  CHECK(cp_B(3, 2, at(5)).is_minus());
  for (long a = 3; a <= 10; ++a)
    for (std::size_t n = 2; n <= 20; ++n) {
      const IntMatrix b = build_B(a, n);
      CHECK(cp_B(a, n, Place::infinity()).is_minus());
      for (std::uint64_t p : primes_up_to(51)) {
        INFO("a=" << a << " n=" << n << " p=" << p);
        CHECK(cp_B_exact(a, n, at(p)) == cp_definition(b, at(p)));
        CHECK(cp_B(a, n, at(p)) == cp_B_exact(a, n, at(p)));
      }
    }
}

TEST_CASE("CpBTable matches cp_B and flags inert primes") {
  for (long a = 3; a <= 25; ++a)
    for (std::uint64_t p : primes_up_to(120)) {
      const CpBTable table(a, 40, p);
      const GSequence g = g_values(a, 40);
      bool touches = p == 2 || (a * a - 4) % static_cast<long>(p) == 0;
      for (std::size_t n = 1; n <= 40; ++n) touches = touches || mpz_divisible_ui_p(g[n].get_mpz_t(), p);
      CHECK(table.inert() == !touches);
      for (std::size_t n = 2; n <= 40; ++n) {
        CHECK(table[n] == cp_B_exact(a, n, at(p)));
        if (!touches) CHECK(table[n].is_plus());
      }
    }
}

TEST_CASE("cp_B3_closed") {
  for (long a = 3; a <= 20; ++a)
    for (std::uint64_t p : primes_up_to(100)) CHECK(cp_B3_closed(a, at(p)) == cp_B(a, 3, at(p)));
  CHECK(cp_B3_closed(2, at(2)) == cp_definition(build_B(2, 3), at(2)));
  for (long a = 3; a <= 40; ++a)
    for (std::uint64_t p : primes_up_to(100)) {
      const long q = static_cast<long>(p);
      if (p != 2 && (a + 2) % q != 0 && (a - 1) % q != 0) CHECK(cp_B3_closed(a, at(p)).is_plus());
    }
}

TEST_CASE("f_p") {
  for (long a = 3; a <= 20; ++a)
    for (long lambda = 1; lambda <= 6; ++lambda)
      for (std::size_t t = 1; t <= 6; ++t)
        for (std::size_t e = 0; e <= t; ++e) {
          CHECK(f_p(a, lambda, t, e, Place::infinity()) == Sign::minus().pow(t - 1));
          for (std::uint64_t p : primes_up_to(40)) {
            const FpFactors factors(a, lambda, at(p));
            CHECK(factors.evaluate(t, e) == f_p(a, lambda, t, e, at(p)));
            if (p != 2 && (lambda * (a * a - 4)) % static_cast<long>(p) != 0) CHECK(f_p(a, lambda, t, e, at(p)).is_plus());
          }
        }
  for (std::uint64_t p : primes_up_to(40))
    CHECK(f_p(7, 3, 1, 0, at(p)) == hilbert(BigInt(-3), BigInt(9), at(p)));
}

TEST_CASE("cp_X examples") {
  const ParameterSet params(11, 4, 1);
  CHECK(cp_X(params, CycleType({2, 2, 7}), at(5)).is_minus());
  CHECK(cp_X(params, CycleType({3, 4, 4}), at(2)).is_plus());
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 29, 41, 47, 89, 199}) CHECK(cp_X(params, CycleType({11}), at(p)).is_plus());
  CHECK_THROWS_AS(cp_X(params, CycleType({2, 9}), at(3), true), NonSquareDeterminant);
}

TEST_CASE("cp_X against the definition on every small instance with square det") {
  std::size_t checked = 0;
  for (const auto& params : params_below(23))
    for (const auto& ct : enumerate_feasible(params.v())) {
      if (!is_perfect_square(det_X(params, ct))) continue;
      ++checked;
      const IntMatrix x = build_X(params, ct);
      for (std::uint64_t p : primes_up_to(51)) {
        INFO(params.to_string() << " " << ct.to_list_string() << " p=" << p);
        CHECK(cp_X(params, ct, at(p)) == cp_definition(x, at(p)));
      }
    }
  CHECK(checked > 100);
}

TEST_CASE("C_p(B_n) at p | a with p = 3 mod 4 and odd valuation") {
  for (long a = 3; a <= 200; ++a)
    for (std::uint64_t p : {3, 7, 11, 19, 23}) {
      const PFactorization f = p_factorize(BigInt(a), p);
      if (f.valuation % 2 == 0) continue;
      for (std::size_t n = 2; n <= 60; ++n) {
        if (n % (2 * p) == 0) continue;
        CHECK(cp_B(a, n, at(p)).is_minus() == (n % 4 == 0));
      }
    }
}

TEST_CASE("C_p(B_n) at odd p | a + 2 with n coprime to p") {
  for (long a = 3; a <= 300; ++a)
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
      const PFactorization f = p_factorize(BigInt(a + 2), p);
      if (f.valuation == 0 || (p == 3 && f.valuation == 1)) continue;
      for (long n = 2; n <= 60; ++n) {
        if (n % static_cast<long>(p) == 0) continue;
        const Sign expected = legendre(std::int64_t{n % 2 == 0 ? n : -n}, p).pow(f.valuation);
        CHECK(cp_B(a, static_cast<std::size_t>(n), at(p)) == expected);
      }
    }
}

TEST_CASE("appending a pair of equal cycles leaves cp_X unchanged at inert odd primes") {
  std::mt19937_64 rng(5);
  for (const auto& params : params_in_range(4, 14)) {
    const long a = params.a();
    const auto types = sample_feasible(params.v(), std::min<std::size_t>(20, count_feasible(params.v()).get_ui()), 9);
    for (const auto& ct : types) {
      const int c = 2 + static_cast<int>(rng() % 9);
      std::vector<int> parts = ct.parts();
      parts.push_back(c);
      parts.push_back(c);
      const CycleType bigger(parts);
      for (std::uint64_t p : primes_up_to(60)) {
        if (p == 2 || (params.lambda() * (a * a - 4)) % static_cast<long>(p) == 0) continue;
        Sign base = Sign::plus();
        Sign with_pair = Sign::plus();
        for (int part : ct.parts()) base *= cp_B(a, static_cast<std::size_t>(part), at(p));
        for (int part : bigger.parts()) with_pair *= cp_B(a, static_cast<std::size_t>(part), at(p));
        CHECK(base * f_p(a, params.lambda(), ct.t(), ct.e(), at(p)) ==
              with_pair * f_p(a, params.lambda(), bigger.t(), bigger.e(), at(p)));
      }
    }
  }
}
