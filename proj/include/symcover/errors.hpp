#pragma once

#include <stdexcept>
#include <string>

namespace symcover {

/// Parameter or cycle type outside the domain of an operation.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A leading principal minor vanished.
class DegenerateMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonSquareDeterminant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotACovering : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExcessNotTwoRegular : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symcover
