#include "symcover/matrix.hpp"

#include "symcover/errors.hpp"

#include <string>
#include <utility>

namespace symcover {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::leading(std::size_t m) const {
  IntMatrix out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = (*this)(i, j);
  return out;
}

namespace {

// One Bareiss step on rows/cols > k: w(i,j) = (w(k,k) w(i,j) - w(i,k) w(k,j)) / prev.
void bareiss_step(std::vector<BigInt>& w, std::size_t n, std::size_t k, const BigInt& prev, BigInt& tmp) {
  const BigInt& pivot = w[k * n + k];
  for (std::size_t i = k + 1; i < n; ++i) {
    const BigInt& lead = w[i * n + k];
    for (std::size_t j = k + 1; j < n; ++j) {
      BigInt& cell = w[i * n + j];
      cell *= pivot;
      tmp = lead * w[k * n + j];
      cell -= tmp;
      mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), prev.get_mpz_t());
    }
  }
}

std::vector<BigInt> copy_entries(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> w(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i * n + j] = m(i, j);
  return w;
}

}  // namespace

BigInt det_exact(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<BigInt> w = copy_entries(m);
  BigInt prev = 1;
  BigInt tmp;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && w[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w[k * n + j], w[r * n + j]);
      sign = -sign;
    }
    bareiss_step(w, n, k, prev, tmp);
    prev = w[k * n + k];
  }
  BigInt det = w[n * n - 1];
  if (sign < 0) det = -det;
  return det;
}

std::vector<BigInt> leading_principal_minors(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> minors;
  minors.reserve(n);
  std::vector<BigInt> w = copy_entries(m);
  BigInt prev = 1;
  BigInt tmp;
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k * n + k] == 0) {
      throw DegenerateMatrix("leading principal minor of order " + std::to_string(k + 1) + " vanishes");
    }
    minors.push_back(w[k * n + k]);
    if (k + 1 < n) bareiss_step(w, n, k, prev, tmp);
    prev = w[k * n + k];
  }
  return minors;
}

}  // namespace symcover
