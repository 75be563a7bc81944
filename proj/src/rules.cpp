#include "symcover/rules.hpp"

#include "symcover/errors.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <utility>

namespace symcover {

namespace {

constexpr std::array<std::pair<RuleId, std::string_view>, 9> kRuleNames = {{
    {RuleId::SquareTest, "SquareTest"},
    {RuleId::BRC, "BRC"},
    {RuleId::HM, "HM"},
    {RuleId::ThmPDividesA, "ThmPDividesA"},
    {RuleId::ThmHamilton, "ThmHamilton"},
    {RuleId::ThmUniformNonDiv, "ThmUniformNonDiv"},
    {RuleId::ThmUniformDiv, "ThmUniformDiv"},
    {RuleId::Thm23P5, "Thm23P5"},
    {RuleId::Lemma23P2, "Lemma23P2"},
}};

struct Factor {
  unsigned valuation;
  long unit;
};

// n = unit * p^valuation for n != 0.
Factor factor_at(long n, long p) {
  Factor f{0, n};
  while (f.unit % p == 0) {
    f.unit /= p;
    ++f.valuation;
  }
  return f;
}

bool is_square_long(long n) { return n >= 0 && is_perfect_square(BigInt(n)); }

Verdict ruled_out(const ParameterSet& params, const CycleType& ct, std::vector<Certificate> certs) {
  Verdict v{params, ct, Status::RuledOut, std::move(certs), 0.0};
  return v;
}

std::optional<Verdict> collect(const ParameterSet& params, const CycleType& ct, RuleId rule,
                               const std::vector<std::uint64_t>& primes,
                               const std::function<ClosedFormCheck(std::uint64_t)>& check) {
  std::vector<Certificate> certs;
  for (std::uint64_t p : primes) {
    const ClosedFormCheck c = check(p);
    if (c.guard && c.fires) certs.push_back({rule, p, c.predicted, true});
  }
  if (certs.empty()) return std::nullopt;
  return ruled_out(params, ct, std::move(certs));
}

CycleType uniform_type(long n, long t) { return CycleType(std::vector<int>(static_cast<std::size_t>(t), static_cast<int>(n))); }

CycleType two_three_type(long t2, long t3) {
  std::vector<int> parts(static_cast<std::size_t>(t2), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(t3), 3);
  return CycleType(std::move(parts));
}

void require_uniform_shape(const ParameterSet& params, long n, long t) {
  if (n < 2 || t < 1 || n * t != params.v()) {
    throw InvalidParameters("uniform cycle type needs n >= 2 and n * t = v");
  }
}

}  // namespace

std::string_view rule_name(RuleId id) {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == id) return name;
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& [rule, rule_name] : kRuleNames)
    if (rule_name == name) return rule;
  return std::nullopt;
}

bool is_closed_form(RuleId id) { return id != RuleId::SquareTest && id != RuleId::BRC && id != RuleId::HM; }

bool Verdict::ruled_by(RuleId id) const {
  return std::any_of(certificates.begin(), certificates.end(), [id](const Certificate& c) { return c.rule == id; });
}

std::vector<std::uint64_t> Verdict::witnesses(RuleId id) const {
  std::vector<std::uint64_t> out;
  for (const Certificate& c : certificates)
    if (c.rule == id && c.prime) out.push_back(*c.prime);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> prime_factors(long n) {
  std::vector<std::uint64_t> out;
  if (n < 0) n = -n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(static_cast<std::uint64_t>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<std::uint64_t>(n));
  return out;
}

bool brc_allows(long v, long k, long lambda, std::size_t t) {
  if (v == lambda + 4 && k == lambda + 2) {
    if (v % 2 == 0 && lambda % 2 == 0) return true;
    if (v % 2 == 1 && lambda % 2 == 1) return true;
  }
  if (v % 2 == 1) return t % 2 == 1;
  return (is_square_long(k - lambda - 2) && t % 2 == 1) || (is_square_long(k - lambda + 2) && t % 2 == 0);
}

std::optional<Verdict> square_test(const ParameterSet& params, const CycleType& ct) {
  if (det_X_is_square(params, ct)) return std::nullopt;
  return ruled_out(params, ct, {{RuleId::SquareTest, std::nullopt, std::nullopt, true}});
}

std::optional<Verdict> brc_filter(const ParameterSet& params, const CycleType& ct) {
  ct.check_feasible(params);
  if (brc_allows(params.v(), params.k(), params.lambda(), ct.t())) return std::nullopt;
  return ruled_out(params, ct, {{RuleId::BRC, std::nullopt, std::nullopt, true}});
}

bool violates_identity_invariant(std::uint64_t p, Sign cp) { return p == 2 ? cp.is_plus() : cp.is_minus(); }

HasseScanner::HasseScanner(const ParameterSet& params, std::uint64_t prime_bound, std::size_t n_max)
    : params_(params), prime_bound_(prime_bound) {
  if (n_max == 0) n_max = static_cast<std::size_t>(params.v());
  n_max = std::max<std::size_t>(n_max, 2);
  const long a = params.a();
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    index_[p] = all_.size();
    all_.push_back({p, FpFactors(a, params.lambda(), Place::finite(p)), CpBTable(a, n_max, p)});
    const bool divides_lambda = params.lambda() % static_cast<long>(p) == 0;
    if (p == 2 || !all_.back().cpb.inert() || divides_lambda) active_.push_back(all_.size() - 1);
  }
}

std::vector<std::uint64_t> HasseScanner::active_primes() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i : active_) out.push_back(all_[i].prime);
  return out;
}

namespace {

// Parts with odd multiplicity; even multiplicities square away.
std::vector<std::pair<int, std::size_t>> odd_multiplicity_parts(const CycleType& ct) {
  std::vector<std::pair<int, std::size_t>> out;
  const auto& parts = ct.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if ((j - i) % 2 == 1) out.emplace_back(parts[i], j - i);
    i = j;
  }
  return out;
}

}  // namespace

Sign HasseScanner::cp_at(const PrimeData& data, const std::vector<std::pair<int, std::size_t>>& odd_parts,
                         std::size_t t, std::size_t e) const {
  Sign c = data.fp.evaluate(t, e);
  for (const auto& part : odd_parts) c *= data.cpb[static_cast<std::size_t>(part.first)];
  return c;
}

Sign HasseScanner::cp(const CycleType& ct, std::uint64_t p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) throw InvalidParameters("HasseScanner::cp: " + std::to_string(p) + " is not a scanned prime");
  const PrimeData& data = all_[it->second];
  if (static_cast<std::size_t>(ct.largest()) > data.cpb.n_max()) {
    throw InvalidParameters("HasseScanner::cp: cycle longer than the scanner's n_max");
  }
  return cp_at(data, odd_multiplicity_parts(ct), ct.t(), ct.e());
}

std::vector<Certificate> HasseScanner::witnesses(const CycleType& ct) const {
  if (!all_.empty() && static_cast<std::size_t>(ct.largest()) > all_.front().cpb.n_max()) {
    throw InvalidParameters("HasseScanner::witnesses: cycle longer than the scanner's n_max");
  }
  const auto odd_parts = odd_multiplicity_parts(ct);
  const std::size_t t = ct.t();
  const std::size_t e = ct.e();
  std::vector<Certificate> out;
  for (std::size_t i : active_) {
    const PrimeData& data = all_[i];
    const Sign c = cp_at(data, odd_parts, t, e);
    if (violates_identity_invariant(data.prime, c)) out.push_back({RuleId::HM, data.prime, c, true});
  }
  return out;
}

std::optional<Verdict> hm_rule(const ParameterSet& params, const CycleType& ct, std::uint64_t prime_bound) {
  ct.check_feasible(params);
  HasseScanner scanner(params, prime_bound, static_cast<std::size_t>(ct.largest()));
  std::vector<Certificate> certs = scanner.witnesses(ct);
  if (certs.empty()) return std::nullopt;
  return ruled_out(params, ct, std::move(certs));
}

ClosedFormCheck thm_p_divides_a_at(const ParameterSet& params, const CycleType& ct, std::uint64_t p) {
  ClosedFormCheck out;
  const long prime = static_cast<long>(p);
  if (p % 4 != 3 || !is_prime(p) || params.lambda() % prime == 0) return out;
  const Factor a = factor_at(params.a(), prime);
  if (a.valuation % 2 == 0) return out;
  std::size_t divisible_by_four = 0;
  for (int c : ct.parts()) {
    if (c % (2 * prime) == 0) return out;
    if (c % 4 == 0) ++divisible_by_four;
  }
  out.guard = true;
  out.fires = divisible_by_four % 2 == 1;
  out.predicted = Sign::from_parity(divisible_by_four);
  return out;
}

ClosedFormCheck thm_hamilton_at(const ParameterSet& params, std::uint64_t p) {
  ClosedFormCheck out;
  const long prime = static_cast<long>(p);
  const long lambda = params.lambda();
  const long shifted = params.a() + 2;
  if (p == 2 || !is_prime(p) || shifted % prime != 0) return out;
  out.guard = true;
  const Factor s = factor_at(shifted, prime);
  const unsigned alpha = s.valuation;
  const bool excluded = p == 3 && alpha == 1;
  bool fires = false;
  if (params.v() % 2 == 1 && p % 4 == 3 && params.v() % prime == 0) {
    const unsigned delta = factor_at(params.v(), prime).valuation;
    if (lambda == 2) {
      fires = alpha % 2 == 1 && !excluded;
    } else if (lambda > 2) {
      const unsigned gamma = factor_at(lambda - 2, prime).valuation;
      const bool first = alpha % 2 == 1 && !excluded && alpha < 2 * gamma;
      const bool second = alpha == 2 * gamma && delta % 2 == 1;
      fires = first || second;
    }
  }
  out.fires = fires;
  if (fires) {
    out.predicted = Sign::minus();
  } else if (!(excluded && ((s.unit % 3) + 3) % 3 == 1)) {
    // Holds when |X| is a square.
    out.predicted = Sign::plus();
  }
  return out;
}

ClosedFormCheck thm_uniform_nondiv_at(const ParameterSet& params, long n, long t, std::uint64_t p) {
  require_uniform_shape(params, n, t);
  ClosedFormCheck out;
  const long prime = static_cast<long>(p);
  const long shifted = params.a() + 2;
  if (params.v() % 2 == 0 || p == 2 || !is_prime(p)) return out;
  if (shifted % prime != 0 || n % prime == 0) return out;
  out.guard = true;
  const Factor s = factor_at(shifted, prime);
  const Factor lam = factor_at(params.lambda(), prime);
  const long sign_minus = ((t - 1) / 2) % 2 == 0 ? 1 : -1;  // (-1)^{(t-1)/2}
  const long sign_plus = -sign_minus;                        // (-1)^{(t+1)/2}
  const bool alpha_odd = s.valuation % 2 == 1;
  const bool gamma_odd = lam.valuation % 2 == 1;
  bool fires = false;
  if (!alpha_odd && gamma_odd) {
    fires = legendre(BigInt(s.unit), p).is_minus();
  } else if (alpha_odd && !gamma_odd) {
    fires = legendre(BigInt(sign_minus) * n * lam.unit, p).is_minus();
  } else if (alpha_odd && gamma_odd) {
    fires = legendre(BigInt(sign_plus) * n * s.unit * lam.unit, p).is_minus();
  }
  out.fires = fires;
  out.predicted = fires ? Sign::minus() : Sign::plus();
  return out;
}

ClosedFormCheck thm_uniform_div_at(const ParameterSet& params, long n, long t, std::uint64_t p) {
  require_uniform_shape(params, n, t);
  ClosedFormCheck out;
  const long prime = static_cast<long>(p);
  const long shifted = params.a() + 2;
  if (params.v() % 2 == 0 || p == 2 || !is_prime(p)) return out;
  if (shifted % prime != 0 || n % prime != 0) return out;
  if (p == 3 && shifted % 9 != 0) return out;
  out.guard = true;
  const Factor s = factor_at(shifted, prime);
  const Factor nf = factor_at(n, prime);
  const long sign_minus = ((t - 1) / 2) % 2 == 0 ? 1 : -1;
  const bool alpha_odd = s.valuation % 2 == 1;
  const bool delta_odd = nf.valuation % 2 == 1;
  bool fires = false;
  if (!alpha_odd && delta_odd) {
    fires = legendre(BigInt(-s.unit), p).is_minus();
  } else if (alpha_odd && !delta_odd) {
    fires = legendre(BigInt(sign_minus) * 2 * nf.unit, p).is_minus();
  } else if (alpha_odd && delta_odd) {
    fires = legendre(BigInt(sign_minus) * 2 * s.unit * nf.unit, p).is_minus();
  }
  out.fires = fires;
  out.predicted = fires ? Sign::minus() : Sign::plus();
  return out;
}

ClosedFormCheck thm_23_p5_at(const ParameterSet& params, long t2, long t3) {
  ClosedFormCheck out;
  if (t2 < 1 || t3 < 1 || 2 * t2 + 3 * t3 != params.v() || params.lambda() % 5 == 0) return out;
  out.guard = true;
  const long a = params.a();
  const long lambda_mod = params.lambda() % 5;
  const bool lambda_ok = lambda_mod == 1 || lambda_mod == 4;
  auto odd_power_of_five = [](long x) { return x != 0 && factor_at(x, 5).valuation % 2 == 1; };
  const bool first = odd_power_of_five(a - 1) && t3 % 2 == 1;
  const bool second = odd_power_of_five(a - 2) && t2 % 2 == 1 && lambda_ok;
  const bool third = odd_power_of_five(a + 2) && (t2 + t3) % 2 == 1 && lambda_ok;
  out.fires = first || second || third;
  out.predicted = out.fires ? Sign::minus() : Sign::plus();
  return out;
}

ClosedFormCheck lemma_23_p2_at(const ParameterSet& params, long t2, long t3) {
  ClosedFormCheck out;
  const long k = params.k();
  if (params.lambda() != 1 || k <= 3 || t2 < 1 || t3 < 1 || 2 * t2 + 3 * t3 != k * (k - 1) - 1) return out;
  out.guard = true;
  const bool first = k % 4 == 0 && t3 % 4 == 1;
  const bool second = k % 4 == 1 && t3 % 8 == 5;
  out.fires = first || second;
  if (out.fires) {
    out.predicted = Sign::plus();
  } else if (k % 4 == 1 && t3 % 8 == 1) {
    out.predicted = Sign::minus();
  }
  return out;
}

std::optional<Verdict> thm_p_divides_a(const ParameterSet& params, const CycleType& ct) {
  ct.check_feasible(params);
  return collect(params, ct, RuleId::ThmPDividesA, prime_factors(params.a()),
                 [&](std::uint64_t p) { return thm_p_divides_a_at(params, ct, p); });
}

std::optional<Verdict> thm_hamilton(const ParameterSet& params) {
  const CycleType ct({static_cast<int>(params.v())});
  return collect(params, ct, RuleId::ThmHamilton, prime_factors(params.a() + 2),
                 [&](std::uint64_t p) { return thm_hamilton_at(params, p); });
}

std::optional<Verdict> thm_uniform_nondiv(const ParameterSet& params, long n, long t) {
  require_uniform_shape(params, n, t);
  return collect(params, uniform_type(n, t), RuleId::ThmUniformNonDiv, prime_factors(params.a() + 2),
                 [&](std::uint64_t p) { return thm_uniform_nondiv_at(params, n, t, p); });
}

std::optional<Verdict> thm_uniform_div(const ParameterSet& params, long n, long t) {
  require_uniform_shape(params, n, t);
  return collect(params, uniform_type(n, t), RuleId::ThmUniformDiv, prime_factors(params.a() + 2),
                 [&](std::uint64_t p) { return thm_uniform_div_at(params, n, t, p); });
}

std::optional<Verdict> thm_23_p5(const ParameterSet& params, long t2, long t3) {
  if (t2 < 0 || t3 < 0 || 2 * t2 + 3 * t3 != params.v()) throw InvalidParameters("thm_23_p5 needs 2 t2 + 3 t3 = v");
  if (t2 < 1 || t3 < 1) return std::nullopt;
  return collect(params, two_three_type(t2, t3), RuleId::Thm23P5, {5},
                 [&](std::uint64_t) { return thm_23_p5_at(params, t2, t3); });
}

std::optional<Verdict> lemma_23_p2(const ParameterSet& params, long t2, long t3) {
  if (t2 < 0 || t3 < 0 || 2 * t2 + 3 * t3 != params.v()) throw InvalidParameters("lemma_23_p2 needs 2 t2 + 3 t3 = v");
  if (t2 < 1 || t3 < 1) return std::nullopt;
  return collect(params, two_three_type(t2, t3), RuleId::Lemma23P2, {2},
                 [&](std::uint64_t) { return lemma_23_p2_at(params, t2, t3); });
}

Verdict run_all(const ParameterSet& params, const CycleType& ct, std::uint64_t prime_bound,
                const HasseScanner* scanner) {
  const auto start = std::chrono::steady_clock::now();
  ct.check_feasible(params);
  Verdict verdict{params, ct, Status::ExistsUnknown, {}, 0.0};
  auto absorb = [&](const std::optional<Verdict>& v) {
    if (!v) return;
    verdict.certificates.insert(verdict.certificates.end(), v->certificates.begin(), v->certificates.end());
  };
  if (params.exceptional()) {
    absorb(brc_filter(params, ct));
    if (!verdict.certificates.empty()) verdict.status = Status::RuledOut;
    verdict.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return verdict;
  }

  const auto square = square_test(params, ct);
  absorb(square);
  absorb(brc_filter(params, ct));

  if (!square) {
    std::vector<Certificate> closed;
    auto take = [&](const std::optional<Verdict>& v) {
      if (v) closed.insert(closed.end(), v->certificates.begin(), v->certificates.end());
    };
    take(thm_p_divides_a(params, ct));
    const bool odd_v = params.v() % 2 == 1;
    if (ct.is_uniform() && odd_v) {
      const long n = ct.parts().front();
      const long t = static_cast<long>(ct.t());
      if (t == 1) take(thm_hamilton(params));
      take(thm_uniform_nondiv(params, n, t));
      take(thm_uniform_div(params, n, t));
    }
    if (ct.largest() <= 3) {
      const long t2 = std::count(ct.parts().begin(), ct.parts().end(), 2);
      const long t3 = static_cast<long>(ct.t()) - t2;
      take(thm_23_p5(params, t2, t3));
      take(lemma_23_p2(params, t2, t3));
    }

    std::optional<HasseScanner> local;
    if (scanner == nullptr || !(scanner->params() == params) || scanner->prime_bound() != prime_bound) {
      local.emplace(params, prime_bound, static_cast<std::size_t>(ct.largest()));
      scanner = &*local;
    }
    const std::vector<Certificate> hm = scanner->witnesses(ct);
    for (Certificate& c : closed) {
      if (c.prime && *c.prime < prime_bound) {
        c.corroborated = std::any_of(hm.begin(), hm.end(), [&](const Certificate& h) { return h.prime == c.prime; });
      }
    }
    verdict.certificates.insert(verdict.certificates.end(), closed.begin(), closed.end());
    verdict.certificates.insert(verdict.certificates.end(), hm.begin(), hm.end());
  }

  if (!verdict.certificates.empty()) verdict.status = Status::RuledOut;
  verdict.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

}  // namespace symcover
