#pragma once

#include <cstdint>
#include <string_view>

namespace strongcp {

// Work budget for the exhaustive oracles. Each oracle estimates its own cost
// in elementary steps and refuses to run when the estimate exceeds max_work.
struct SizeGuard {
  static constexpr std::uint64_t kDefaultMaxWork = 20'000'000;
  static constexpr std::string_view kEnvVar = "SC_SIZE_GUARD";

  std::uint64_t max_work = kDefaultMaxWork;

  // Reads SC_SIZE_GUARD when set to a positive integer, else the default.
  static SizeGuard from_env();

  // Throws SizeGuardExceeded naming `what` when work > max_work.
  void require(std::uint64_t work, std::string_view what) const;
};

// Saturating helpers so cost estimates never wrap.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

}  // namespace strongcp
