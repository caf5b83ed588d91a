#include "factorkit/oracle.hpp"

#include <limits>
#include <string>

#include "factorkit/errors.hpp"
#include "factorkit/factor.hpp"

namespace factorkit {

std::uint64_t r_function_count(const VertexFunc& g, const VertexFunc& f) {
  if (g.size() != f.size()) {
    throw UsageError("r_function_count: g and f are defined on different vertex counts");
  }
  if (!pointwise_le(g, f)) {
    throw UsageError("r_function_count: needs g <= f pointwise");
  }
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (int v = 0; v < g.size(); ++v) {
    std::uint64_t width = static_cast<std::uint64_t>(f[v] - g[v]) + 1;
    if (count > kMax / width) return kMax;
    count *= width;
  }
  return count;
}

RFunctionCursor::RFunctionCursor(const VertexFunc& g, const VertexFunc& f, std::uint64_t cap)
    : lo_(g.values()), hi_(f.values()), r_(g.values()) {
  std::uint64_t count = r_function_count(g, f);
  if (count > cap) {
    std::string shown = count == std::numeric_limits<std::uint64_t>::max()
                            ? "more than 2^64 - 1"
                            : std::to_string(count);
    throw ResourceError("r-function enumeration cap exceeded: " + shown +
                        " functions > cap " + std::to_string(cap));
  }
}

bool RFunctionCursor::advance() {
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (r_[i] < hi_[i]) {
      ++r_[i];
      for (std::size_t j = 0; j < i; ++j) r_[j] = lo_[j];
      return true;
    }
  }
  return false;
}

OracleVerdict brute_force_all_excluding(const Graph& graph, const EdgeSubset& h,
                                        const VertexFunc& g, const VertexFunc& f,
                                        std::uint64_t r_cap) {
  RFunctionCursor cursor(g, f, r_cap);
  do {
    VertexFunc r = cursor.current_func();
    if (!construct_excluding(graph, h, r)) {
      return OracleVerdict{false, std::move(r)};
    }
  } while (cursor.advance());
  return OracleVerdict{true, std::nullopt};
}

}  // namespace factorkit
