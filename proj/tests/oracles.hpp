#pragma once

// Independent reference computations used only by tests. None of these call
// into the library's selection, threshold or solver code.

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "strongcp/abstract_system.hpp"
#include "strongcp/geometry.hpp"

namespace strongcp::oracle {

template <typename T>
T sorted_kth(std::vector<T> values, std::size_t m) {
  std::sort(values.begin(), values.end());
  return values.at(m - 1);
}

// count / n > (k - 1) / k in exact rationals.
inline bool rational_heavy(std::int64_t count, std::int64_t n, std::int64_t k) {
  return boost::rational<std::int64_t>(count, n) > boost::rational<std::int64_t>(k - 1, k);
}

// Exact strict-below count for integer coordinates and directions.
inline std::size_t strict_below_exact(const PointSeti& points, const Vectori& dir,
                                      const Vectori& p) {
  auto dot = [&](const auto& x) {
    __int128 s = 0;
    for (Eigen::Index j = 0; j < dir.size(); ++j) s += __int128(x(j)) * dir(j);
    return s;
  };
  const auto bound = dot(p);
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    if (dot(points.col(i)) < bound) ++count;
  }
  return count;
}

// Elements contained in every set of size > (1 - 1/k) n, checked one element
// at a time against rational thresholds.
inline std::vector<ElementId> exhaustive_centerpoints(const SetSystem& sys) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < sys.n(); ++x) {
    bool in_all = true;
    for (const auto& s : sys.sets()) {
      const bool heavy = rational_heavy(static_cast<std::int64_t>(s.size()),
                                        static_cast<std::int64_t>(sys.n()),
                                        static_cast<std::int64_t>(sys.k()));
      if (heavy && !std::binary_search(s.begin(), s.end(), x)) {
        in_all = false;
        break;
      }
    }
    if (in_all) out.push_back(x);
  }
  return out;
}

}  // namespace strongcp::oracle
