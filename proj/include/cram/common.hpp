#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cram {

// Argument and format errors raised across the library.  Callers that need to
// distinguish cases catch the concrete type; everything derives from
// std::runtime_error so the CLI can map any of them to a usage failure.
struct BadArgs : std::runtime_error {
  explicit BadArgs(const std::string& msg) : std::runtime_error(msg) {}
};
struct BadVertex : BadArgs {
  explicit BadVertex(const std::string& msg) : BadArgs(msg) {}
};
struct BadColor : BadArgs {
  explicit BadColor(const std::string& msg) : BadArgs(msg) {}
};
struct TooLarge : BadArgs {
  explicit TooLarge(const std::string& msg) : BadArgs(msg) {}
};
struct EdgeNotSubset : BadArgs {
  explicit EdgeNotSubset(const std::string& msg) : BadArgs(msg) {}
};
struct OddOrder : BadArgs {
  explicit OddOrder(const std::string& msg) : BadArgs(msg) {}
};
struct UnsupportedOrder : BadArgs {
  explicit UnsupportedOrder(const std::string& msg) : BadArgs(msg) {}
};
struct BadProfiles : BadArgs {
  explicit BadProfiles(const std::string& msg) : BadArgs(msg) {}
};
struct NotResolvable : BadArgs {
  explicit NotResolvable(const std::string& msg) : BadArgs(msg) {}
};
struct NotGrid : BadArgs {
  explicit NotGrid(const std::string& msg) : BadArgs(msg) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};
struct MissingPremise : std::runtime_error {
  explicit MissingPremise(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace cram
