#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "strongcp/geometry.hpp"

namespace strongcp {

template <CoordinateScalar Scalar>
struct Instance {
  PointSet<Scalar> points;
  OrientationFamily<Scalar> family;
  std::uint64_t seed = 0;
  std::string label;
};

using Instanced = Instance<double>;
using Instancei = Instance<std::int64_t>;

enum class DegenerateKind { AllCoincident, AllCollinear, WithDuplicates };

DegenerateKind parse_degenerate_kind(std::string_view name);
std::string_view to_string(DegenerateKind kind);

/// Uniform integer in [lo, hi] from raw engine output, so instances are
/// identical across standard library implementations.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Lower-bound construction: n/k coincident points at each orientation
/// vector. Every point is then avoided by some family polytope holding
/// exactly (1 - 1/k) n points. `jitter` spreads each cluster within that
/// radius (float mode only).
template <CoordinateScalar Scalar>
Instance<Scalar> tightness_instance(const OrientationFamily<Scalar>& family, std::size_t n,
                                    double jitter = 0.0, std::uint64_t seed = 0) {
  const std::size_t k = family.k();
  if (n < k || n % k != 0) {
    throw InvalidArgument("tightness_instance: k=" + std::to_string(k) +
                          " must divide n=" + std::to_string(n));
  }
  if constexpr (is_exact_v<Scalar>) {
    // Clusters must be extreme along their own orientation, which for
    // unnormalized vectors needs equal lengths.
    const auto len = family[0].direction().squaredNorm();
    for (const auto& u : family) {
      if (u.direction().squaredNorm() != len) {
        throw InvalidArgument("tightness_instance: integer orientations must share one length");
      }
    }
    if (jitter != 0.0) throw InvalidArgument("tightness_instance: jitter needs float mode");
  }
  if (!(jitter >= 0.0)) throw InvalidArgument("tightness_instance: negative jitter");

  const auto d = family.dim();
  PointSet<Scalar> points(d, static_cast<Eigen::Index>(n));
  std::mt19937_64 rng(seed);
  const std::size_t cluster = n / k;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < cluster; ++c) {
      const auto col = static_cast<Eigen::Index>(i * cluster + c);
      points.col(col) = family[i].direction();
      if constexpr (std::floating_point<Scalar>) {
        if (jitter > 0.0) {
          Vector<Scalar> offset(d);
          for (Eigen::Index j = 0; j < d; ++j) {
            offset[j] = Scalar(uniform_int(rng, -1'000'000, 1'000'000)) / Scalar(1'000'000);
          }
          if (const Scalar len = offset.norm(); len > Scalar(1)) offset /= len;
          points.col(col) += offset * Scalar(jitter);
        }
      }
    }
  }
  return Instance<Scalar>{std::move(points), family, seed,
                          "tightness k=" + std::to_string(k) + " n=" + std::to_string(n)};
}

/// n points at equal angular steps on the unit circle.
PointSetd convex_position_instance(std::size_t n);

/// Integer points uniform in [-1000, 1000]^d and k distinct integer
/// directions with components in [-8, 8]. Deterministic in seed.
Instancei random_instance(std::uint64_t seed, std::size_t n, int d, std::size_t k);

/// Named degenerate configuration over the axis-box family in the plane.
Instancei degenerate_instance(DegenerateKind kind, std::size_t n = 8);

/// Float-mode copy: coordinates cast, orientations normalized.
Instanced to_floating(const Instancei& instance);

}  // namespace strongcp
