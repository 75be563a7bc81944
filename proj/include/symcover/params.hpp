#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace symcover {

/// (v, k, lambda) with lambda + 2 < k < v and lambda (v - 1) = k (k - 1) - 2,
/// the shape forced on a symmetric covering with 2-regular excess. The
/// family (lambda + 4, lambda + 2, lambda) is also accepted; there a = 2 and
/// X can be singular, so only the parity conditions apply to it.
class ParameterSet {
 public:
  /// Throws InvalidParameters unless the invariants hold.
  ParameterSet(long v, long k, long lambda);

  long v() const { return v_; }
  long k() const { return k_; }
  long lambda() const { return lambda_; }
  /// k - lambda, the diagonal of every B block.
  long a() const { return k_ - lambda_; }
  /// (lambda + 4, lambda + 2, lambda).
  bool exceptional() const { return k_ == lambda_ + 2; }

  std::string to_string() const;

  auto operator<=>(const ParameterSet&) const = default;

 private:
  long v_;
  long k_;
  long lambda_;
};

/// Multiset of cycle lengths [c_1 <= ... <= c_t], every c_i >= 2.
class CycleType {
 public:
  CycleType() = default;
  /// Sorts the parts; throws InvalidParameters if any part is < 2 or the
  /// list is empty.
  explicit CycleType(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t t() const { return parts_.size(); }
  /// Number of even parts.
  std::size_t e() const;
  long sum() const;
  int largest() const { return parts_.empty() ? 0 : parts_.back(); }

  bool is_uniform() const;
  /// Throws InvalidParameters unless sum() == params.v().
  void check_feasible(const ParameterSet& params) const;

  /// Canonical exponent form, e.g. "2^4,3".
  std::string to_string() const;
  /// Bracketed list, e.g. "[2,2,2,2,3]".
  std::string to_list_string() const;

  auto operator<=>(const CycleType&) const = default;

 private:
  std::vector<int> parts_;
};

}  // namespace symcover
