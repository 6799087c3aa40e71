#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "strongcp/geometry.hpp"
#include "strongcp/size_guard.hpp"

namespace strongcp {

/// Output of the construction: one minimal halfspace per orientation, the
/// points of P inside their intersection E, and the chosen member of E.
template <CoordinateScalar Scalar>
struct CenterpointCertificate {
  std::vector<Halfspace<Scalar>> halfspaces;
  // Points strictly below each halfspace's offset. Never heavy.
  std::vector<std::size_t> below_counts;
  std::vector<std::size_t> region_members;
  std::size_t chosen_index = 0;
  std::uint64_t m = 0;

  Vector<Scalar> chosen_point(const PointSet<Scalar>& points) const {
    return points.col(static_cast<Eigen::Index>(chosen_index));
  }
};

struct Verdict {
  bool ok = true;
  std::optional<std::size_t> witness_orientation;  // index into the family
  std::optional<std::size_t> witness_count;
};

struct AvoidingCount {
  std::size_t count = 0;
  std::size_t orientation = 0;  // index into the family
};

namespace detail {

template <CoordinateScalar Scalar>
void require_compatible(const PointSet<Scalar>& points, const OrientationFamily<Scalar>& family,
                        const char* what) {
  if (points.cols() < 1) throw InvalidArgument(std::string(what) + ": empty point set");
  validate_points(points);
  if (points.rows() != family.dim()) {
    throw DimensionMismatch(std::string(what) + ": points have dimension " +
                            std::to_string(points.rows()) + ", family has " +
                            std::to_string(family.dim()));
  }
}

template <typename Derived, CoordinateScalar Scalar>
void require_candidate(const Eigen::MatrixBase<Derived>& p,
                       const OrientationFamily<Scalar>& family, const char* what) {
  if (p.size() != family.dim()) {
    throw DimensionMismatch(std::string(what) + ": candidate has dimension " +
                            std::to_string(p.size()) + ", family has " +
                            std::to_string(family.dim()));
  }
  validate_finite(p, what);
}

template <typename T>
std::size_t count_below(const std::vector<T>& values, T bound) {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](T v) { return v < bound; }));
}

}  // namespace detail

/// Strong centerpoint for the polytope family defined by `family`.
///
/// Along each orientation the offset is the m-th smallest projection, with
/// m = n - ceil(n/k) + 1, so each closed halfspace misses at most
/// ceil(n/k) - 1 points. The k complements together miss at most n - 1
/// points, hence E meets P. Any family polytope holding more than (1-1/k)n
/// points has each defining halfspace containing the matching H_i, so it
/// contains E. The lowest-index point of E is returned. O(k n) expected.
template <CoordinateScalar Scalar>
CenterpointCertificate<Scalar> compute_strong_centerpoint(const PointSet<Scalar>& points,
                                                          const OrientationFamily<Scalar>& family) {
  detail::require_compatible(points, family, "compute_strong_centerpoint");
  const auto n = static_cast<std::size_t>(points.cols());
  CenterpointCertificate<Scalar> cert;
  cert.m = order_statistic_rank(n, family.k());
  std::vector<char> inside(n, 1);
  for (const auto& u : family) {
    const auto proj = project_all(points, u);
    const auto offset = kth_smallest(proj, static_cast<std::size_t>(cert.m));
    std::size_t below = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (proj[i] > offset) inside[i] = 0;
      if (proj[i] < offset) ++below;
    }
    cert.halfspaces.push_back(Halfspace<Scalar>{u, offset});
    cert.below_counts.push_back(below);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (inside[i]) cert.region_members.push_back(i);
  }
  if (cert.region_members.empty()) {
    // Unreachable by the counting argument; kept as a hard check.
    throw Error("compute_strong_centerpoint: region E is empty");
  }
  cert.chosen_index = cert.region_members.front();
  return cert;
}

/// Indices of P inside every constructed halfspace.
template <CoordinateScalar Scalar>
std::vector<std::size_t> region_E(const PointSet<Scalar>& points,
                                  const OrientationFamily<Scalar>& family) {
  return compute_strong_centerpoint(points, family).region_members;
}

/// Heaviest family polytope that avoids p. Such a polytope has a defining
/// halfspace excluding p, and that halfspace alone holds at least as many
/// points, so the answer is the largest strict-below count over orientations.
template <CoordinateScalar Scalar, typename Derived>
AvoidingCount max_avoiding_count(const PointSet<Scalar>& points,
                                 const OrientationFamily<Scalar>& family,
                                 const Eigen::MatrixBase<Derived>& p) {
  detail::require_compatible(points, family, "max_avoiding_count");
  detail::require_candidate(p, family, "max_avoiding_count");
  AvoidingCount best;
  for (std::size_t i = 0; i < family.k(); ++i) {
    const auto count = detail::count_below(project_all(points, family[i]), project(p, family[i]));
    if (i == 0 || count > best.count) best = AvoidingCount{count, i};
  }
  return best;
}

/// Exact strong-centerpoint test for an arbitrary candidate (not necessarily in P).
template <CoordinateScalar Scalar, typename Derived>
Verdict verify_strong_centerpoint(const PointSet<Scalar>& points,
                                  const OrientationFamily<Scalar>& family,
                                  const Eigen::MatrixBase<Derived>& p) {
  detail::require_compatible(points, family, "verify_strong_centerpoint");
  detail::require_candidate(p, family, "verify_strong_centerpoint");
  const auto n = static_cast<std::uint64_t>(points.cols());
  for (std::size_t i = 0; i < family.k(); ++i) {
    const auto count = detail::count_below(project_all(points, family[i]), project(p, family[i]));
    if (heavy_threshold_exceeded(count, n, family.k())) return Verdict{false, i, count};
  }
  return Verdict{};
}

/// Oracle for max_avoiding_count: tries every combination of candidate
/// offsets (distinct projections of P and p, plus one value beyond each end)
/// and keeps the fullest polytope that excludes p.
template <CoordinateScalar Scalar, typename Derived>
std::size_t brute_force_max_avoiding(const PointSet<Scalar>& points,
                                     const OrientationFamily<Scalar>& family,
                                     const Eigen::MatrixBase<Derived>& p,
                                     const SizeGuard& guard = SizeGuard::from_env()) {
  detail::require_compatible(points, family, "brute_force_max_avoiding");
  detail::require_candidate(p, family, "brute_force_max_avoiding");
  const auto n = static_cast<std::size_t>(points.cols());
  const std::size_t k = family.k();
  guard.require(saturating_mul(saturating_pow(n + 3, k), saturating_mul(n + 1, k)),
                "brute_force_max_avoiding");

  using P = Projection<Scalar>;
  std::vector<std::vector<P>> proj(k);
  std::vector<P> cand_proj(k);
  std::vector<std::vector<P>> offsets(k);
  for (std::size_t i = 0; i < k; ++i) {
    proj[i] = project_all(points, family[i]);
    cand_proj[i] = project(p, family[i]);
    auto values = proj[i];
    values.push_back(cand_proj[i]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    P below = values.front() - P(1);
    P above = values.back() + P(1);
    if constexpr (std::floating_point<P>) {
      below = values.front() - (P(1) + std::abs(values.front()));
      above = values.back() + (P(1) + std::abs(values.back()));
    }
    offsets[i].push_back(below);
    offsets[i].insert(offsets[i].end(), values.begin(), values.end());
    offsets[i].push_back(above);
  }

  std::size_t best = 0;
  std::vector<std::size_t> choice(k, 0);
  while (true) {
    bool contains_candidate = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (cand_proj[i] > offsets[i][choice[i]]) contains_candidate = false;
    }
    if (!contains_candidate) {
      std::size_t inside = 0;
      for (std::size_t q = 0; q < n; ++q) {
        bool in = true;
        for (std::size_t i = 0; i < k && in; ++i) in = proj[i][q] <= offsets[i][choice[i]];
        if (in) ++inside;
      }
      best = std::max(best, inside);
    }
    std::size_t digit = 0;
    while (digit < k && ++choice[digit] == offsets[digit].size()) choice[digit++] = 0;
    if (digit == k) break;
  }
  return best;
}

}  // namespace strongcp
