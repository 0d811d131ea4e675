#pragma once

#include <stdexcept>
#include <string>

namespace clat {

/// An operation was called outside its documented domain (non-Horn input to
/// a Horn construction, function symbols where only constants are allowed,
/// a non-ground background literal, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller-supplied budget ran out before the answer was determined.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clat
