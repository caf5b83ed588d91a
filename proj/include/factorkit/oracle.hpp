#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "factorkit/graph.hpp"

namespace factorkit {

inline constexpr std::uint64_t kDefaultRFunctionCap = std::uint64_t{1} << 16;

// Number of integer functions r with g <= r <= f pointwise, saturating at
// UINT64_MAX on overflow.
std::uint64_t r_function_count(const VertexFunc& g, const VertexFunc& f);

// Mixed-radix odometer over [g(x), f(x)] per vertex, vertex 0 least
// significant: starts at r = g, each advance increments vertex 0 and carries.
// Construction fails with ResourceError (reporting the count) when the number
// of functions exceeds cap.
class RFunctionCursor {
 public:
  RFunctionCursor(const VertexFunc& g, const VertexFunc& f, std::uint64_t cap);

  const std::vector<int>& current() const { return r_; }
  VertexFunc current_func() const { return VertexFunc(r_); }

  // Steps to the next function; false once every function has been visited.
  bool advance();

 private:
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<int> r_;
};

struct OracleVerdict {
  bool all_exist = false;
  // First r (in cursor order) for which no excluded fractional r-factor exists.
  std::optional<VertexFunc> first_failing_r;
};

// Definition-level oracle: attempts to construct a fractional r-factor
// excluding h for every enumerated r.  Independent of the deficiency checkers,
// which it exists to cross-validate.
OracleVerdict brute_force_all_excluding(const Graph& graph, const EdgeSubset& h,
                                        const VertexFunc& g, const VertexFunc& f,
                                        std::uint64_t r_cap = kDefaultRFunctionCap);

}  // namespace factorkit
