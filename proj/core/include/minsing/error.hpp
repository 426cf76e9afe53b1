#pragma once

#include <stdexcept>
#include <string>

namespace minsing {

// Domain errors (bad substitutions, division by zero, contract violations in
// blow-up traces, ...). Parse errors get their own type so the CLI can map
// them to a distinct exit code.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace minsing
