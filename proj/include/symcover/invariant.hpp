#pragma once

// The matrices X = diag(B_{c_1}(a), ..., B_{c_t}(a)) + lambda J and their
// Hasse-Minkowski invariants C_p, computed two ways: directly from leading
// principal minors, and by the product formula over the g sequence.

#include "symcover/gseq.hpp"
#include "symcover/matrix.hpp"
#include "symcover/numtheory.hpp"
#include "symcover/params.hpp"

#include <cstddef>
#include <vector>

namespace symcover {

IntMatrix build_B(long a, std::size_t n);
IntMatrix build_Bstar(long a, std::size_t n);
/// Rows of each cycle block are consecutive, blocks in part order.
IntMatrix build_X(const ParameterSet& params, const CycleType& ct);

/// C_p of a nondegenerate matrix straight from the definition:
/// (-1, -|M_n|) * prod_i (|M_i|, -|M_{i+1}|). Throws DegenerateMatrix.
Sign cp_definition(const IntMatrix& m, Place place);

/// C_p(B_n(a)) = (-(a+2)(a-2)^{n+1}, -g_n) * prod_{i=2..n} (-g_i, g_{i-1}).
/// Finite places go through CpBTable; infinity uses g_n > 0.
Sign cp_B(long a, std::size_t n, Place place);
/// The same product on exact g values. Reference path, O(n) big Hilbert
/// symbols.
Sign cp_B_exact(long a, std::size_t n, Place place);

/// C_p(B_3(a)) = (-1,-1)_p (-a-2, a-1)_p; valid for a >= 2.
Sign cp_B3_closed(long a, Place place);

/// The correction factor relating C_p(X) to the product of block invariants:
/// (-1,-1)^{t-1} (a+2,-1)^{C(t-e,2)} (a^2-4,-1)^{C(e,2)} (a+2,a^2-4)^{e(t-e)}
/// (-lambda, (a+2)^t (a-2)^e).
Sign f_p(long a, long lambda, std::size_t t, std::size_t e, Place place);

/// The Hilbert symbols f_p is assembled from, evaluated once per
/// (a, lambda, place) and combined for any (t, e).
class FpFactors {
 public:
  FpFactors(long a, long lambda, Place place);
  Sign evaluate(std::size_t t, std::size_t e) const;

 private:
  Sign minus_one_minus_one_;
  Sign a_plus_two_minus_one_;
  Sign a2_minus_four_minus_one_;
  Sign a_plus_two_a2_minus_four_;
  Sign lambda_a_plus_two_;
  Sign lambda_a_minus_two_;
};

/// C_p(X) for a covering-shaped X with square determinant, by the product
/// formula. With check_square the precondition is verified and
/// NonSquareDeterminant is thrown on failure; otherwise it is the caller's.
Sign cp_X(const ParameterSet& params, const CycleType& ct, Place place, bool check_square = false);

/// |X| = k^2 / (a+2) * prod_i |B_{c_i}(a)|. Every B block has row sums a+2,
/// so this is the matrix determinant lemma applied to diag(B) + lambda J.
BigInt det_X(const ParameterSet& params, const CycleType& ct);
/// Each |B_n(a)| is (a+2) or (a+2)(a-2) times a nonzero square, so |X| is a
/// square iff (a+2)^{t-1} (a-2)^e is. No g values are needed.
bool det_X_is_square(const ParameterSet& params, const CycleType& ct);

/// C_p(B_n(a)) for n = 2..n_max at one finite prime, in O(n_max) word
/// operations (index n holds C_p(B_n); entries 0 and 1 are unused).
class CpBTable {
 public:
  CpBTable(long a, std::size_t n_max, std::uint64_t p, GSequenceCache& cache = default_g_cache());

  std::uint64_t prime() const { return p_; }
  Sign operator[](std::size_t n) const { return signs_.at(n); }
  std::size_t n_max() const { return signs_.size() - 1; }
  /// True when p is odd and divides none of a^2-4, g_1, ..., g_{n_max}:
  /// then every entry is +1.
  bool inert() const { return inert_; }

 private:
  std::uint64_t p_;
  std::vector<Sign> signs_;
  bool inert_ = false;
};

}  // namespace symcover
