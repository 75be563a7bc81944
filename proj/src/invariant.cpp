#include "symcover/invariant.hpp"

#include "symcover/errors.hpp"

#include <map>
#include <string>

namespace symcover {

namespace {

void require_block_shape(long a, std::size_t n) {
  if (n < 2) throw InvalidParameters("B_n requires n >= 2, got n = " + std::to_string(n));
  if (a < 1) throw InvalidParameters("B_n requires a positive diagonal");
}

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

IntMatrix build_B(long a, std::size_t n) {
  require_block_shape(a, n);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = a;
  if (n == 2) {
    m(0, 1) = 2;
    m(1, 0) = 2;
    return m;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    m(i, next) = 1;
    m(next, i) = 1;
  }
  return m;
}

IntMatrix build_Bstar(long a, std::size_t n) {
  require_block_shape(a, n);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = a;
  m(0, 0) = a - 1;
  m(n - 1, n - 1) = a - 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = 1;
    m(i + 1, i) = 1;
  }
  return m;
}

IntMatrix build_X(const ParameterSet& params, const CycleType& ct) {
  ct.check_feasible(params);
  const std::size_t v = static_cast<std::size_t>(params.v());
  IntMatrix x(v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) x(i, j) = params.lambda();
  std::size_t offset = 0;
  for (int c : ct.parts()) {
    const IntMatrix block = build_B(params.a(), static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block.size(); ++j) x(offset + i, offset + j) += block(i, j);
    offset += block.size();
  }
  return x;
}

Sign cp_definition(const IntMatrix& m, Place place) {
  const std::vector<BigInt> minors = leading_principal_minors(m);
  const std::size_t n = minors.size();
  Sign c = hilbert(BigInt(-1), -minors[n - 1], place);
  for (std::size_t i = 0; i + 1 < n; ++i) c *= hilbert(minors[i], -minors[i + 1], place);
  return c;
}

Sign cp_B(long a, std::size_t n, Place place) {
  if (a <= 2) throw InvalidParameters("cp_B requires a > 2");
  require_block_shape(a, n);
  if (place.is_infinite()) return Sign::minus();
  GSequenceCache local;
  return CpBTable(a, n, place.prime(), local)[n];
}

Sign cp_B_exact(long a, std::size_t n, Place place) {
  if (a <= 2) throw InvalidParameters("cp_B requires a > 2");
  require_block_shape(a, n);
  const auto g = default_g_cache().get(a, n);
  BigInt delta;
  mpz_pow_ui(delta.get_mpz_t(), BigInt(a - 2).get_mpz_t(), n + 1);
  delta *= a + 2;
  Sign c = hilbert(-delta, -(*g)[n], place);
  for (std::size_t i = 2; i <= n; ++i) c *= hilbert(-(*g)[i], (*g)[i - 1], place);
  return c;
}

Sign cp_B3_closed(long a, Place place) {
  if (a < 2) throw InvalidParameters("cp_B3_closed requires a >= 2");
  return hilbert(BigInt(-1), BigInt(-1), place) * hilbert(BigInt(-a - 2), BigInt(a - 1), place);
}

FpFactors::FpFactors(long a, long lambda, Place place) {
  if (a <= 2 || lambda < 1) throw InvalidParameters("f_p requires a > 2 and lambda >= 1");
  const BigInt a_plus_two(a + 2);
  const BigInt a_minus_two(a - 2);
  const BigInt a2_minus_four = a_plus_two * a_minus_two;
  const BigInt minus_one(-1);
  const BigInt minus_lambda(-lambda);
  minus_one_minus_one_ = hilbert(minus_one, minus_one, place);
  a_plus_two_minus_one_ = hilbert(a_plus_two, minus_one, place);
  a2_minus_four_minus_one_ = hilbert(a2_minus_four, minus_one, place);
  a_plus_two_a2_minus_four_ = hilbert(a_plus_two, a2_minus_four, place);
  lambda_a_plus_two_ = hilbert(minus_lambda, a_plus_two, place);
  lambda_a_minus_two_ = hilbert(minus_lambda, a_minus_two, place);
}

Sign FpFactors::evaluate(std::size_t t, std::size_t e) const {
  if (t < 1 || e > t) throw InvalidParameters("f_p requires t >= 1 and e <= t");
  return minus_one_minus_one_.pow(t - 1) * a_plus_two_minus_one_.pow(choose2(t - e)) *
         a2_minus_four_minus_one_.pow(choose2(e)) * a_plus_two_a2_minus_four_.pow(e * (t - e)) *
         lambda_a_plus_two_.pow(t) * lambda_a_minus_two_.pow(e);
}

Sign f_p(long a, long lambda, std::size_t t, std::size_t e, Place place) {
  return FpFactors(a, lambda, place).evaluate(t, e);
}

BigInt det_X(const ParameterSet& params, const CycleType& ct) {
  ct.check_feasible(params);
  const long a = params.a();
  const auto g = default_g_cache().get(a, static_cast<std::size_t>(ct.largest()) + 1);
  BigInt det = BigInt(params.k()) * params.k();
  for (int c : ct.parts()) det *= det_B_from_g(*g, static_cast<std::size_t>(c));
  mpz_divexact_ui(det.get_mpz_t(), det.get_mpz_t(), static_cast<unsigned long>(a + 2));
  return det;
}

bool det_X_is_square(const ParameterSet& params, const CycleType& ct) {
  ct.check_feasible(params);
  const long a = params.a();
  BigInt core = 1;
  if ((ct.t() - 1) % 2 == 1) core *= a + 2;
  if (ct.e() % 2 == 1) core *= a - 2;
  return is_perfect_square(core);
}

Sign cp_X(const ParameterSet& params, const CycleType& ct, Place place, bool check_square) {
  ct.check_feasible(params);
  if (check_square && !det_X_is_square(params, ct)) {
    throw NonSquareDeterminant("|X| is not a perfect square for " + params.to_string() + " " +
                               ct.to_list_string());
  }
  Sign c = f_p(params.a(), params.lambda(), ct.t(), ct.e(), place);
  // Equal blocks contribute C_p(B_c)^multiplicity; only odd multiplicities survive.
  std::map<int, std::size_t> multiplicity;
  for (int part : ct.parts()) ++multiplicity[part];
  for (const auto& [part, count] : multiplicity) {
    if (count % 2 == 1) c *= cp_B(params.a(), static_cast<std::size_t>(part), place);
  }
  return c;
}

CpBTable::CpBTable(long a, std::size_t n_max, std::uint64_t p, GSequenceCache& cache) : p_(p) {
  if (a <= 2) throw InvalidParameters("CpBTable requires a > 2");
  if (n_max < 2) throw InvalidParameters("CpBTable requires n_max >= 2");
  const std::vector<LocalUnit> g = g_local_units(a, n_max, p, cache);
  const std::uint64_t m = unit_modulus(p);
  const LocalUnit a_plus_two = local_unit(BigInt(a + 2), p);
  const LocalUnit a_minus_two = local_unit(BigInt(a - 2), p);

  signs_.assign(n_max + 1, Sign::plus());
  Sign prefix = Sign::plus();
  bool any_nontrivial = p == 2 || a_plus_two.valuation > 0 || a_minus_two.valuation > 0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    if (g[n].valuation > 0) any_nontrivial = true;
    prefix *= hilbert_local(local_negate(g[n], p), g[n - 1], p);
    const LocalUnit power{static_cast<unsigned>(a_minus_two.valuation * (n + 1)),
                          pow_mod(a_minus_two.residue, n + 1, m)};
    const LocalUnit delta = local_negate(local_multiply(a_plus_two, power, p), p);
    signs_[n] = hilbert_local(delta, local_negate(g[n], p), p) * prefix;
  }
  inert_ = !any_nontrivial;
}

}  // namespace symcover
