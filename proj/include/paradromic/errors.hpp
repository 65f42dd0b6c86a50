#pragma once

#include <stdexcept>
#include <string>

namespace paradromic {

/// Exact polynomial division left a nonzero remainder.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration would visit more assignments than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace paradromic
