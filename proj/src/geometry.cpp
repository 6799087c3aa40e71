#include "strongcp/geometry.hpp"

#include <cstdlib>
#include <string>

#include "strongcp/size_guard.hpp"

namespace strongcp {

bool heavy_threshold_exceeded(std::uint64_t count, std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw InvalidArgument("heavy_threshold_exceeded: n and k must be positive");
  if (count > n) throw InvalidArgument("heavy_threshold_exceeded: count exceeds n");
  using u128 = unsigned __int128;
  return u128(k) * count > u128(k - 1) * n;
}

std::uint64_t max_light_count(std::uint64_t n, std::uint64_t k) {
  if (k == 0) throw InvalidArgument("max_light_count: k must be positive");
  using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(u128(k - 1) * n / k);
}

std::uint64_t order_statistic_rank(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw InvalidArgument("order_statistic_rank: n and k must be positive");
  return n - (n + k - 1) / k + 1;
}

SizeGuard SizeGuard::from_env() {
  SizeGuard guard;
  if (const char* raw = std::getenv(std::string(kEnvVar).c_str())) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) guard.max_work = value;
  }
  return guard;
}

void SizeGuard::require(std::uint64_t work, std::string_view what) const {
  if (work > max_work) {
    throw SizeGuardExceeded(std::string(what) + ": estimated work " + std::to_string(work) +
                            " exceeds size guard " + std::to_string(max_work) + " (set " +
                            std::string(kEnvVar) + " to override)");
  }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return UINT64_MAX;
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(out);
}

}  // namespace strongcp
