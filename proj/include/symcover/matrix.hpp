#pragma once

#include "symcover/numtheory.hpp"

#include <cstddef>
#include <vector>

namespace symcover {

/// Dense square matrix of exact integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  /// Top-left m x m block.
  IntMatrix leading(std::size_t m) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row swaps.
BigInt det_exact(const IntMatrix& m);

/// Determinants |M_1|, ..., |M_n| of the leading principal submatrices.
/// Without pivoting, the k-th Bareiss pivot is exactly |M_k|; a zero pivot
/// throws DegenerateMatrix.
std::vector<BigInt> leading_principal_minors(const IntMatrix& m);

}  // namespace symcover
