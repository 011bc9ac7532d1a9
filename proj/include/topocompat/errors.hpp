#pragma once

#include <stdexcept>
#include <string>

namespace topo {

// Base of every error raised by the library. The CLI maps BudgetExceeded
// (and its HostTooLarge refinement) to exit code 1 and everything else to 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class InvalidReachability : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidPotential : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list files or topology spec strings.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An exact search ran out of node or wall-time budget. The answer is
// unknown; this is never a negative result.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The host graph is above SearchBudget::max_host_order.
class HostTooLarge : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

}  // namespace topo
