#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "strongcp/abstract_system.hpp"
#include "strongcp/geometry.hpp"
#include "strongcp/size_guard.hpp"

namespace strongcp {

namespace detail {

// Incidence predicates on point columns. Integer mode is exact (coordinates
// bounded by 2^30 so a 3x3 determinant of differences fits in 128 bits);
// float mode uses long double with a tolerance relative to the input scale.
template <CoordinateScalar Scalar>
class IncidencePredicates {
 public:
  using Wide = std::conditional_t<is_exact_v<Scalar>, __int128, long double>;
  using Vec3 = std::array<Wide, 3>;

  static constexpr std::int64_t kMaxExactCoordinate = std::int64_t{1} << 30;
  static constexpr long double kRelativeTolerance = 1e-9L;

  explicit IncidencePredicates(const PointSet<Scalar>& points) : points_(points) {
    if constexpr (is_exact_v<Scalar>) {
      if (points.size() > 0 && points.cwiseAbs().maxCoeff() > kMaxExactCoordinate) {
        throw InvalidArgument("hyperplane_system: integer coordinates must be within 2^30");
      }
    }
  }

  bool same_point(Eigen::Index a, Eigen::Index b) const {
    return (points_.col(a).array() == points_.col(b).array()).all();
  }

  bool collinear(Eigen::Index a, Eigen::Index b, Eigen::Index c) const {
    const auto u = diff(b, a);
    const auto v = diff(c, a);
    const auto w = cross(u, v);
    const long double scale = norm(u) * norm(v);
    return is_zero(w[0], scale) && is_zero(w[1], scale) && is_zero(w[2], scale);
  }

  bool coplanar(Eigen::Index a, Eigen::Index b, Eigen::Index c, Eigen::Index x) const {
    const auto u = diff(b, a);
    const auto v = diff(c, a);
    const auto w = diff(x, a);
    const auto n = cross(u, v);
    const Wide det = n[0] * w[0] + n[1] * w[1] + n[2] * w[2];
    return is_zero(det, norm(u) * norm(v) * norm(w));
  }

 private:
  Vec3 diff(Eigen::Index a, Eigen::Index b) const {
    Vec3 out{0, 0, 0};
    for (Eigen::Index j = 0; j < points_.rows(); ++j) {
      out[static_cast<std::size_t>(j)] = Wide(points_(j, a)) - Wide(points_(j, b));
    }
    return out;
  }

  static Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  }

  static long double norm(const Vec3& u) {
    long double s = 0;
    for (auto c : u) s += static_cast<long double>(c) * static_cast<long double>(c);
    return std::sqrt(s);
  }

  static bool is_zero(Wide value, long double scale) {
    if constexpr (is_exact_v<Scalar>) {
      return value == 0;
    } else {
      return std::abs(value) <= kRelativeTolerance * scale;
    }
  }

  const PointSet<Scalar>& points_;
};

}  // namespace detail

/// Incidence set system of hyperplanes (lines for d = 2, planes for d = 3)
/// through P, with order k = d.
///
/// Every hyperplane spanned by d affinely independent points contributes the
/// set of all points on it, once. A hyperplane through fewer than d
/// independent points meets P in a lower-dimensional flat; such flats are
/// emitted only when they are heavy, which needs tiny n, a long collinear run
/// in d = 3, or a heavily duplicated location. Coincident points break the
/// bounded-intersection property of the result.
template <CoordinateScalar Scalar>
SetSystem hyperplane_system(const PointSet<Scalar>& points, int d,
                            const SizeGuard& guard = SizeGuard::from_env()) {
  if (d < 2 || d > 3) {
    throw InvalidArgument("hyperplane_system: supported dimensions are 2 and 3, got " +
                          std::to_string(d));
  }
  if (points.rows() != d) {
    throw DimensionMismatch("hyperplane_system: points have dimension " +
                            std::to_string(points.rows()) + ", expected " + std::to_string(d));
  }
  if (points.cols() < 1) throw InvalidArgument("hyperplane_system: empty point set");
  validate_points(points);
  const auto n = points.cols();
  const auto un = static_cast<std::uint64_t>(n);
  guard.require(saturating_mul(binomial_saturating(un, static_cast<std::uint64_t>(d)), un + 1),
                "hyperplane_system");

  const detail::IncidencePredicates<Scalar> pred(points);
  std::vector<Subset> sets;
  std::set<Subset> seen;
  auto emit = [&](Subset s) {
    if (seen.insert(s).second) sets.push_back(std::move(s));
  };
  auto collect = [&](auto&& on_flat) {
    Subset s;
    for (Eigen::Index x = 0; x < n; ++x) {
      if (on_flat(x)) s.push_back(static_cast<ElementId>(x));
    }
    return s;
  };

  std::vector<Subset> lower;  // candidate lower-dimensional flats
  for (Eigen::Index a = 0; a < n; ++a) {
    lower.push_back(collect([&](Eigen::Index x) { return pred.same_point(a, x); }));
  }
  if (d == 2) {
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = a + 1; b < n; ++b) {
        if (pred.same_point(a, b)) continue;
        emit(collect([&](Eigen::Index x) { return pred.collinear(a, b, x); }));
      }
    }
  } else {
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = a + 1; b < n; ++b) {
        if (pred.same_point(a, b)) continue;
        lower.push_back(collect([&](Eigen::Index x) { return pred.collinear(a, b, x); }));
        for (Eigen::Index c = b + 1; c < n; ++c) {
          if (pred.collinear(a, b, c)) continue;
          emit(collect([&](Eigen::Index x) { return pred.coplanar(a, b, c, x); }));
        }
      }
    }
  }
  for (auto& flat : lower) {
    if (heavy_threshold_exceeded(flat.size(), un, static_cast<std::uint64_t>(d))) {
      emit(std::move(flat));
    }
  }
  return SetSystem(static_cast<std::size_t>(n), static_cast<std::size_t>(d), std::move(sets));
}

}  // namespace strongcp
