#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "strongcp/errors.hpp"

namespace strongcp {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// One column per point; rows are coordinates.
template <typename Scalar>
using PointSet = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vectord = Vector<double>;
using Vectori = Vector<std::int64_t>;
using PointSetd = PointSet<double>;
using PointSeti = PointSet<std::int64_t>;

// Floating coordinates, or exact integers narrow enough that a dot product
// fits in 128 bits.
template <typename T>
concept CoordinateScalar =
    std::floating_point<T> || (std::signed_integral<T> && sizeof(T) <= 8);

template <typename Scalar>
inline constexpr bool is_exact_v = std::signed_integral<Scalar>;

namespace detail {
template <typename Scalar>
struct ProjectionTraits {
  using type = Scalar;
};
template <std::signed_integral Scalar>
struct ProjectionTraits<Scalar> {
  using type = __int128;
};
}  // namespace detail

// Value type of a dot product: the scalar itself in float mode, a 128-bit
// integer in integer mode so comparisons stay exact.
template <typename Scalar>
using Projection = typename detail::ProjectionTraits<Scalar>::type;

inline constexpr double kUnitNormTolerance = 1e-12;
inline constexpr double kDefaultDedupTolerance = 1e-9;

template <typename Derived>
void validate_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::floating_point<Scalar>) {
    if (!m.allFinite()) throw InvalidArgument(std::string(what) + ": non-finite coordinate");
  }
}

template <CoordinateScalar Scalar>
void validate_points(const PointSet<Scalar>& points) {
  if (points.rows() < 1) throw InvalidArgument("points: dimension must be at least 1");
  validate_finite(points, "points");
}

/// Outward normal of a halfspace. Unit length in float mode; an arbitrary
/// nonzero integer vector in integer mode.
template <CoordinateScalar Scalar>
class Orientation {
 public:
  explicit Orientation(Vector<Scalar> direction) : direction_(std::move(direction)) {
    if (direction_.size() < 1) throw InvalidArgument("orientation: empty direction");
    validate_finite(direction_, "orientation");
    if ((direction_.array() == Scalar(0)).all()) {
      throw InvalidArgument("orientation: zero direction vector");
    }
    if constexpr (std::floating_point<Scalar>) {
      if (std::abs(static_cast<double>(direction_.norm()) - 1.0) > kUnitNormTolerance) {
        throw InvalidArgument("orientation: direction is not unit length");
      }
    }
  }

  // Scales to unit length in float mode, keeps the vector exact otherwise.
  static Orientation from_raw(Vector<Scalar> raw) {
    if constexpr (std::floating_point<Scalar>) {
      validate_finite(raw, "orientation");
      const Scalar norm = raw.norm();
      if (norm == Scalar(0)) throw InvalidArgument("orientation: zero direction vector");
      // Already-unit vectors are kept bit-for-bit so normalization is idempotent.
      if (std::abs(norm - Scalar(1)) > 4 * std::numeric_limits<Scalar>::epsilon()) raw /= norm;
    }
    return Orientation(std::move(raw));
  }

  const Vector<Scalar>& direction() const { return direction_; }
  Eigen::Index dim() const { return direction_.size(); }
  Scalar operator[](Eigen::Index i) const { return direction_[i]; }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.direction_.size() == b.direction_.size() && a.direction_ == b.direction_;
  }

 private:
  Vector<Scalar> direction_;
};

using Orientationd = Orientation<double>;
using Orientationi = Orientation<std::int64_t>;

/// Dot product of a point with an orientation, summed in coordinate order.
/// Every membership test in the library goes through this one routine.
template <typename Derived, CoordinateScalar Scalar = typename Derived::Scalar>
Projection<Scalar> project(const Eigen::MatrixBase<Derived>& p, const Orientation<Scalar>& u) {
  if (p.size() != u.dim()) {
    throw DimensionMismatch("project: point has dimension " + std::to_string(p.size()) +
                            ", orientation has " + std::to_string(u.dim()));
  }
  Projection<Scalar> sum = 0;
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    sum += static_cast<Projection<Scalar>>(p(j)) * static_cast<Projection<Scalar>>(u[j]);
  }
  return sum;
}

template <CoordinateScalar Scalar>
std::vector<Projection<Scalar>> project_all(const PointSet<Scalar>& points,
                                            const Orientation<Scalar>& u) {
  if (points.rows() != u.dim()) {
    throw DimensionMismatch("project: points have dimension " + std::to_string(points.rows()) +
                            ", orientation has " + std::to_string(u.dim()));
  }
  std::vector<Projection<Scalar>> out(static_cast<std::size_t>(points.cols()));
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    out[static_cast<std::size_t>(i)] = project(points.col(i), u);
  }
  return out;
}

/// True when u and v point the same way, i.e. one is a positive multiple of
/// the other. Float mode compares the angle against `tol`; integer mode is exact.
template <CoordinateScalar Scalar>
bool same_orientation(const Orientation<Scalar>& u, const Orientation<Scalar>& v,
                      double tol = kDefaultDedupTolerance) {
  if (u.dim() != v.dim()) return false;
  if constexpr (std::floating_point<Scalar>) {
    const double chord = static_cast<double>((u.direction() - v.direction()).norm());
    const double angle = 2.0 * std::asin(std::min(1.0, chord / 2.0));
    return angle <= tol;
  } else {
    using Wide = Projection<Scalar>;
    Wide dot = 0;
    for (Eigen::Index i = 0; i < u.dim(); ++i) {
      dot += Wide(u[i]) * Wide(v[i]);
      for (Eigen::Index j = i + 1; j < u.dim(); ++j) {
        if (Wide(u[i]) * Wide(v[j]) != Wide(u[j]) * Wide(v[i])) return false;
      }
    }
    return dot > 0;
  }
}

/// The fixed set O of k orientations that defines a polytope family.
template <CoordinateScalar Scalar>
class OrientationFamily {
 public:
  using value_type = Orientation<Scalar>;

  explicit OrientationFamily(std::vector<Orientation<Scalar>> orientations,
                             double tol = kDefaultDedupTolerance)
      : orientations_(std::move(orientations)) {
    if (orientations_.empty()) throw InvalidArgument("orientation family: empty");
    const auto d = orientations_.front().dim();
    for (std::size_t i = 0; i < orientations_.size(); ++i) {
      if (orientations_[i].dim() != d) {
        throw DimensionMismatch("orientation family: mixed dimensions");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (same_orientation(orientations_[i], orientations_[j], tol)) {
          throw InvalidArgument("orientation family: orientations " + std::to_string(j) +
                                " and " + std::to_string(i) + " coincide");
        }
      }
    }
  }

  std::size_t k() const { return orientations_.size(); }
  std::size_t size() const { return orientations_.size(); }
  Eigen::Index dim() const { return orientations_.front().dim(); }
  const Orientation<Scalar>& operator[](std::size_t i) const { return orientations_[i]; }
  auto begin() const { return orientations_.begin(); }
  auto end() const { return orientations_.end(); }
  const std::vector<Orientation<Scalar>>& orientations() const { return orientations_; }

  friend bool operator==(const OrientationFamily&, const OrientationFamily&) = default;

 private:
  std::vector<Orientation<Scalar>> orientations_;
};

using OrientationFamilyd = OrientationFamily<double>;
using OrientationFamilyi = OrientationFamily<std::int64_t>;

/// Closed halfspace {x : x·u <= offset}.
template <CoordinateScalar Scalar>
struct Halfspace {
  Orientation<Scalar> orientation;
  Projection<Scalar> offset;

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& p) const {
    return project(p, orientation) <= offset;
  }

  // Halfspaces of one orientation are nested; this one lies inside `other`.
  bool is_subset_of(const Halfspace& other) const {
    if (!(orientation == other.orientation)) {
      throw InvalidArgument("halfspace: nesting is only defined for equal orientations");
    }
    return offset <= other.offset;
  }
};

/// m-th smallest value (1-based, counting multiplicity). Expected linear time.
template <typename T>
T kth_smallest(std::vector<T> values, std::size_t m) {
  if (values.empty()) throw InvalidArgument("kth_smallest: empty list");
  if (m < 1 || m > values.size()) {
    throw InvalidArgument("kth_smallest: rank " + std::to_string(m) + " outside [1, " +
                          std::to_string(values.size()) + "]");
  }
  const auto nth = values.begin() + static_cast<std::ptrdiff_t>(m - 1);
  std::nth_element(values.begin(), nth, values.end());
  return *nth;
}

/// Builds a family from raw direction vectors: normalizes (float mode) and
/// drops any vector that repeats an earlier orientation within `tol` radians.
template <CoordinateScalar Scalar>
OrientationFamily<Scalar> normalize_orientations(const std::vector<Vector<Scalar>>& raw,
                                                 double tol = kDefaultDedupTolerance) {
  if (raw.empty()) throw InvalidArgument("normalize_orientations: empty input");
  std::vector<Orientation<Scalar>> kept;
  for (const auto& v : raw) {
    auto u = Orientation<Scalar>::from_raw(v);
    if (!kept.empty() && u.dim() != kept.front().dim()) {
      throw DimensionMismatch("normalize_orientations: mixed dimensions");
    }
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const auto& w) {
      return same_orientation(u, w, tol);
    });
    if (!duplicate) kept.push_back(std::move(u));
  }
  return OrientationFamily<Scalar>(std::move(kept), tol);
}

/// count > (1 - 1/k) n, decided exactly as k*count > (k-1)*n.
bool heavy_threshold_exceeded(std::uint64_t count, std::uint64_t n, std::uint64_t k);

/// Largest count that is not heavy: floor((1 - 1/k) n).
std::uint64_t max_light_count(std::uint64_t n, std::uint64_t k);

/// Rank of the offset order statistic: floor((1 - 1/k) n) + 1 = n - ceil(n/k) + 1.
std::uint64_t order_statistic_rank(std::uint64_t n, std::uint64_t k);

}  // namespace strongcp
