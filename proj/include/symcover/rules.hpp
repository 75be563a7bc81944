#pragma once

// Nonexistence rules for symmetric coverings with a given excess cycle type.
// Each rule either stays silent or returns a RuledOut verdict carrying
// re-checkable certificates.

#include "symcover/invariant.hpp"
#include "symcover/numtheory.hpp"
#include "symcover/params.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace symcover {

enum class RuleId {
  SquareTest,        // |X| must be a perfect square
  BRC,               // determinant parity conditions on v, t, k-lambda+-2
  HM,                // C_p(X) differs from C_p(I) at a finite prime
  ThmPDividesA,      // p = 3 mod 4 with odd valuation in k-lambda
  ThmHamilton,       // Hamilton cycle excess, p = 3 mod 4 dividing v and k-lambda+2
  ThmUniformNonDiv,  // [n^t], p | k-lambda+2, p does not divide n
  ThmUniformDiv,     // [n^t], p | k-lambda+2, p | n
  Thm23P5,           // [2^t2, 3^t3] at p = 5
  Lemma23P2,         // [2^t2, 3^t3] at p = 2, lambda = 1
};

std::string_view rule_name(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);
bool is_closed_form(RuleId id);

struct Certificate {
  RuleId rule = RuleId::HM;
  std::optional<std::uint64_t> prime;
  /// C_p(X) at the witness prime (computed for HM, asserted for closed forms).
  std::optional<Sign> sign;
  /// Closed forms only: the HM scan found the same prime. Always true when
  /// the witness is at or beyond the scan bound.
  bool corroborated = true;

  bool operator==(const Certificate&) const = default;
};

enum class Status { ExistsUnknown, RuledOut };

struct Verdict {
  ParameterSet params;
  CycleType ct;
  Status status = Status::ExistsUnknown;
  std::vector<Certificate> certificates;
  double elapsed_seconds = 0.0;

  bool ruled_by(RuleId id) const;
  /// Sorted witness primes of one rule.
  std::vector<std::uint64_t> witnesses(RuleId id) const;
};

/// Whether the determinant parity conditions allow a 2-regular excess with t
/// cycles, including the (lambda+4, lambda+2, lambda) exception.
bool brc_allows(long v, long k, long lambda, std::size_t t);

std::optional<Verdict> square_test(const ParameterSet& params, const CycleType& ct);
std::optional<Verdict> brc_filter(const ParameterSet& params, const CycleType& ct);

/// Evaluates C_p(X) at every prime below a bound for one parameter set,
/// sharing the per-prime C_p(B_n) tables across cycle types. Primes at which
/// C_p(X) = C_p(I) for every cycle type (odd p dividing none of
/// lambda (a^2-4), g_1, ..., g_{n_max}) are dropped up front.
class HasseScanner {
 public:
  /// n_max bounds the cycle lengths that will be queried (default v).
  HasseScanner(const ParameterSet& params, std::uint64_t prime_bound, std::size_t n_max = 0);

  const ParameterSet& params() const { return params_; }
  std::uint64_t prime_bound() const { return prime_bound_; }
  /// Primes kept after the inertness filter, ascending.
  std::vector<std::uint64_t> active_primes() const;

  /// C_p(X) for any prime p < bound. Assumes |X| square.
  Sign cp(const CycleType& ct, std::uint64_t p) const;
  /// HM certificates at every witnessing prime, ascending.
  std::vector<Certificate> witnesses(const CycleType& ct) const;

 private:
  struct PrimeData {
    std::uint64_t prime;
    FpFactors fp;
    CpBTable cpb;
  };
  Sign cp_at(const PrimeData& data, const std::vector<std::pair<int, std::size_t>>& odd_parts, std::size_t t,
             std::size_t e) const;

  ParameterSet params_;
  std::uint64_t prime_bound_;
  std::vector<PrimeData> all_;
  std::vector<std::size_t> active_;             // positions in all_
  std::map<std::uint64_t, std::size_t> index_;  // prime -> position in all_
};

/// Lemma-style violation of C_p(X) = C_p(I): +1 at p = 2, -1 at odd p.
bool violates_identity_invariant(std::uint64_t p, Sign cp);

std::optional<Verdict> hm_rule(const ParameterSet& params, const CycleType& ct, std::uint64_t prime_bound);

/// What a closed-form theorem says at one prime: whether its standing
/// hypotheses (guard) hold there, whether its nonexistence branch fires, and
/// the value of C_p(X) it determines, when it determines one.
struct ClosedFormCheck {
  bool guard = false;
  bool fires = false;
  std::optional<Sign> predicted;
};

ClosedFormCheck thm_p_divides_a_at(const ParameterSet& params, const CycleType& ct, std::uint64_t p);
ClosedFormCheck thm_hamilton_at(const ParameterSet& params, std::uint64_t p);
ClosedFormCheck thm_uniform_nondiv_at(const ParameterSet& params, long n, long t, std::uint64_t p);
ClosedFormCheck thm_uniform_div_at(const ParameterSet& params, long n, long t, std::uint64_t p);
ClosedFormCheck thm_23_p5_at(const ParameterSet& params, long t2, long t3);
ClosedFormCheck lemma_23_p2_at(const ParameterSet& params, long t2, long t3);

/// Primes worth asking the per-prime checks about.
std::vector<std::uint64_t> prime_factors(long n);

std::optional<Verdict> thm_p_divides_a(const ParameterSet& params, const CycleType& ct);
std::optional<Verdict> thm_hamilton(const ParameterSet& params);
std::optional<Verdict> thm_uniform_nondiv(const ParameterSet& params, long n, long t);
std::optional<Verdict> thm_uniform_div(const ParameterSet& params, long n, long t);
std::optional<Verdict> thm_23_p5(const ParameterSet& params, long t2, long t3);
std::optional<Verdict> lemma_23_p2(const ParameterSet& params, long t2, long t3);

/// Square test, parity conditions, every applicable closed form, then the HM
/// scan, with all certificates collected. When |X| is not a square the
/// invariant-based rules are skipped. A scanner built for the same
/// parameters and bound may be passed in to reuse its tables.
Verdict run_all(const ParameterSet& params, const CycleType& ct, std::uint64_t prime_bound,
                const HasseScanner* scanner = nullptr);

}  // namespace symcover
