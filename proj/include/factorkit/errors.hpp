#pragma once

#include <stdexcept>
#include <string>

namespace factorkit {

// Invalid arguments, malformed input, or precondition violations.  CLI exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration cap was exceeded.  Surfaced instead of silently sampling.  CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A proven implication failed at runtime.  Always an implementation bug,
// never an input problem.  CLI exit code 4.
class SoundnessError : public std::logic_error {
 public:
  explicit SoundnessError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace factorkit
