#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace dcp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown type string, invalid rank/family combination,
/// malformed symmetric-function text, bad CLI flags.
struct ParseError : Error {
  using Error::Error;
};

/// Mixed truncation degrees in a ring operation.
struct TruncationMismatch : Error {
  using Error::Error;
};

/// A configured resource cap was exceeded; carries the progress made so far.
struct ResourceLimitError : Error {
  // elements discovered per flat rank before the cap tripped
  std::map<int, std::size_t> level_counts;
  std::size_t cap;
  ResourceLimitError(std::string msg, std::map<int, std::size_t> counts, std::size_t cap_)
      : Error(std::move(msg)), level_counts(std::move(counts)), cap(cap_) {}
};

/// Two routes that must agree did not; `check` names the failed cross-check.
struct ConsistencyError : Error {
  std::string check;
  ConsistencyError(std::string check_, const std::string& msg)
      : Error("[" + check_ + "] " + msg), check(std::move(check_)) {}
};

}  // namespace dcp
