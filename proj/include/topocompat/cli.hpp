#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "topocompat/compat.hpp"
#include "topocompat/errors.hpp"

namespace topo::cli {

class ArgumentError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitBudget = 1;  // search budget exhausted, unknown
inline constexpr int kExitUsage = 2;   // bad arguments or input

/// `a..b` or a single integer `a`, inclusive. Throws ArgumentError on
/// malformed text or a > b.
IntRange parse_range(std::string_view text);

/// Runs one invocation. args[0] is the program name, as in argv.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace topo::cli
