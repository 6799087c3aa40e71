#include "strongcp/generators.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "strongcp/families.hpp"

namespace strongcp {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("uniform_int: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

DegenerateKind parse_degenerate_kind(std::string_view name) {
  if (name == "all-coincident") return DegenerateKind::AllCoincident;
  if (name == "all-collinear") return DegenerateKind::AllCollinear;
  if (name == "with-duplicates") return DegenerateKind::WithDuplicates;
  throw InvalidArgument("unknown degenerate kind '" + std::string(name) + "'");
}

std::string_view to_string(DegenerateKind kind) {
  switch (kind) {
    case DegenerateKind::AllCoincident: return "all-coincident";
    case DegenerateKind::AllCollinear: return "all-collinear";
    case DegenerateKind::WithDuplicates: return "with-duplicates";
  }
  return "unknown";
}

PointSetd convex_position_instance(std::size_t n) {
  if (n < 3) throw InvalidArgument("convex_position_instance: n must be at least 3");
  PointSetd points(2, static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    points(0, static_cast<Eigen::Index>(i)) = std::cos(angle);
    points(1, static_cast<Eigen::Index>(i)) = std::sin(angle);
  }
  return points;
}

Instancei random_instance(std::uint64_t seed, std::size_t n, int d, std::size_t k) {
  if (n < 1) throw InvalidArgument("random_instance: n must be positive");
  if (d < 1 || d > 3) throw InvalidArgument("random_instance: d must be in [1, 3]");
  if (k < 1 || k > 8) throw InvalidArgument("random_instance: k must be in [1, 8]");
  // The line has only two orientations.
  if (d == 1 && k > 2) throw InvalidArgument("random_instance: d = 1 admits at most k = 2");

  std::mt19937_64 rng(seed);
  PointSeti points(d, static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    for (Eigen::Index j = 0; j < d; ++j) points(j, i) = uniform_int(rng, -1000, 1000);
  }

  std::vector<Orientationi> directions;
  while (directions.size() < k) {
    Vectori v(d);
    for (Eigen::Index j = 0; j < d; ++j) v[j] = uniform_int(rng, -8, 8);
    if ((v.array() == 0).all()) continue;
    Orientationi u(std::move(v));
    const bool repeat = std::any_of(directions.begin(), directions.end(),
                                    [&](const auto& w) { return same_orientation(u, w); });
    if (!repeat) directions.push_back(std::move(u));
  }
  return Instancei{std::move(points), OrientationFamilyi(std::move(directions)), seed,
                   "random n=" + std::to_string(n) + " d=" + std::to_string(d) +
                       " k=" + std::to_string(k)};
}

Instancei degenerate_instance(DegenerateKind kind, std::size_t n) {
  if (n < 1) throw InvalidArgument("degenerate_instance: n must be positive");
  PointSeti points(2, static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    switch (kind) {
      case DegenerateKind::AllCoincident:
        points.col(i) << 3, -2;
        break;
      case DegenerateKind::AllCollinear:
        points.col(i) << i, 0;
        break;
      case DegenerateKind::WithDuplicates: {
        const std::int64_t j = i / 2;
        points.col(i) << j, (j * j) % 5;
        break;
      }
    }
  }
  return Instancei{std::move(points), axis_box_family<std::int64_t>(2), 0,
                   std::string(to_string(kind)) + " n=" + std::to_string(n)};
}

Instanced to_floating(const Instancei& instance) {
  std::vector<Vectord> raw;
  for (const auto& u : instance.family) raw.push_back(u.direction().cast<double>());
  return Instanced{instance.points.cast<double>(), normalize_orientations(raw), instance.seed,
                   instance.label};
}

}  // namespace strongcp
