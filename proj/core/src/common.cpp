#include "weylgrid/common.hpp"

#include <algorithm>
#include <numeric>

namespace weylgrid {

std::string_view error_token(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidRank: return "E_INVALID_RANK";
    case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::MismatchedGrid: return "E_MISMATCHED_GRID";
    case ErrorCode::CapExceeded: return "E_CAP_EXCEEDED";
    case ErrorCode::MalformedInput: return "E_MALFORMED_INPUT";
    case ErrorCode::Unsupported: return "E_UNSUPPORTED";
    case ErrorCode::Internal: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

BigInt binomial(std::int64_t top, std::int64_t k) {
  if (k < 0 || top < k) return 0;
  k = std::min(k, top - k);
  BigInt result = 1;
  // Each prefix product is itself a binomial coefficient, so the division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= top - k + i;
    result /= i;
  }
  return result;
}

std::int64_t gcd_of(const std::vector<int>& values) {
  std::int64_t g = 0;
  for (int v : values) g = std::gcd(g, static_cast<std::int64_t>(v));
  return g;
}

}  // namespace weylgrid
