#include "symcover/params.hpp"

#include "symcover/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symcover {

ParameterSet::ParameterSet(long v, long k, long lambda) : v_(v), k_(k), lambda_(lambda) {
  const bool family = lambda >= 1 && k == lambda + 2 && v == lambda + 4;
  if (!family && (lambda < 1 || !(lambda + 2 < k) || !(k < v))) {
    throw InvalidParameters("parameter set " + to_string() + " violates lambda + 2 < k < v");
  }
  if (lambda * (v - 1) != k * (k - 1) - 2) {
    throw InvalidParameters("parameter set " + to_string() + " violates lambda (v - 1) = k (k - 1) - 2");
  }
}

std::string ParameterSet::to_string() const {
  return "(" + std::to_string(v_) + "," + std::to_string(k_) + "," + std::to_string(lambda_) + ")";
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidParameters("cycle type must have at least one part");
  std::sort(parts_.begin(), parts_.end());
  if (parts_.front() < 2) throw InvalidParameters("cycle lengths must be at least 2");
}

std::size_t CycleType::e() const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](int c) { return c % 2 == 0; }));
}

long CycleType::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

bool CycleType::is_uniform() const { return !parts_.empty() && parts_.front() == parts_.back(); }

void CycleType::check_feasible(const ParameterSet& params) const {
  if (sum() != params.v()) {
    throw InvalidParameters("cycle type " + to_list_string() + " is not " + std::to_string(params.v()) +
                            "-feasible");
  }
}

std::string CycleType::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i > 0) out << ',';
    out << parts_[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

std::string CycleType::to_list_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ',';
    out << parts_[i];
  }
  out << ']';
  return out.str();
}

}  // namespace symcover
