#include "strongcp/abstract_system.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <set>
#include <string>

#include "strongcp/errors.hpp"
#include "strongcp/geometry.hpp"

namespace strongcp {

namespace {

Subset intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const Subset& a, const Subset& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::optional<ElementId> lowest_common_element(const SetSystem& sys,
                                               const std::vector<std::size_t>& indices) {
  if (indices.empty()) return ElementId{0};
  Subset common = sys[indices.front()];
  for (std::size_t i = 1; i < indices.size() && !common.empty(); ++i) {
    common = intersect(common, sys[indices[i]]);
  }
  if (common.empty()) return std::nullopt;
  return common.front();
}

AbstractResult solve_k2(const SetSystem& sys) {
  AbstractResult result{Element{0}, {{sys.n(), sys.k(), std::nullopt}}};
  const auto heavy = sys.heavy_sets();
  std::vector<std::size_t> constraining;
  for (auto i : heavy) {
    if (!sys.is_universe(i)) constraining.push_back(i);
  }
  // Two sets of size > n/2 meet in at least one element; the k = 2 property
  // caps it at one.
  for (std::size_t a = 0; a < constraining.size(); ++a) {
    for (std::size_t b = a + 1; b < constraining.size(); ++b) {
      if (intersection_size(sys[constraining[a]], sys[constraining[b]]) >= 2) {
        throw PropertyViolation("strong_centerpoint_k2: heavy sets " +
                                std::to_string(constraining[a]) + " and " +
                                std::to_string(constraining[b]) +
                                " share two or more elements");
      }
    }
  }
  if (!constraining.empty()) result.trace.back().chosen_set = constraining.front();
  if (auto x = lowest_common_element(sys, constraining)) {
    result.outcome = Element{*x};
  } else {
    result.outcome = NoCenterpoint{heavy};
  }
  return result;
}

AbstractResult solve(const SetSystem& sys) {
  if (sys.k() == 2) return solve_k2(sys);
  std::optional<std::size_t> sprime;
  for (auto i : sys.heavy_sets()) {
    if (sys.is_universe(i)) continue;
    if (!sprime || sys[i].size() > sys[*sprime].size()) sprime = i;
  }
  if (!sprime) return AbstractResult{Element{0}, {{sys.n(), sys.k(), std::nullopt}}};

  const auto restriction = restrict_to(sys, *sprime);
  auto inner = solve(restriction.system);
  AbstractResult result{inner.outcome, {{sys.n(), sys.k(), sprime}}};
  result.trace.insert(result.trace.end(), inner.trace.begin(), inner.trace.end());
  if (inner.has_element()) result.outcome = Element{restriction.to_parent[inner.element()]};
  return result;
}

void require_order(const SetSystem& sys, std::size_t low, const char* what) {
  if (sys.k() < low) {
    throw InvalidArgument(std::string(what) + ": order k=" + std::to_string(sys.k()) +
                          " below " + std::to_string(low));
  }
}

}  // namespace

SetSystem::SetSystem(std::size_t n, std::size_t k, std::vector<Subset> sets)
    : n_(n), k_(k), sets_(std::move(sets)) {
  if (n_ < 1) throw InvalidArgument("set system: ground set must be nonempty");
  if (k_ < 2) throw InvalidArgument("set system: order k must be at least 2");
  std::set<Subset> seen;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const auto& s = sets_[i];
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] >= n_) {
        throw InvalidArgument("set system: set " + std::to_string(i) + " holds id " +
                              std::to_string(s[j]) + " >= n");
      }
      if (j > 0 && s[j - 1] >= s[j]) {
        throw InvalidArgument("set system: set " + std::to_string(i) +
                              " is not strictly ascending");
      }
    }
    if (!seen.insert(s).second) {
      throw InvalidArgument("set system: set " + std::to_string(i) + " repeats an earlier set");
    }
  }
}

SetSystem SetSystem::canonical(std::size_t n, std::size_t k, std::vector<Subset> sets) {
  std::vector<Subset> out;
  std::set<Subset> seen;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return SetSystem(n, k, std::move(out));
}

std::vector<std::size_t> SetSystem::heavy_sets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (heavy_threshold_exceeded(sets_[i].size(), n_, k_)) out.push_back(i);
  }
  return out;
}

std::optional<std::vector<std::size_t>> check_bounded_intersection(const SetSystem& sys,
                                                                   const SizeGuard& guard) {
  const std::size_t m = sys.size();
  const std::size_t k = sys.k();
  guard.require(saturating_mul(binomial_saturating(m, k),
                               saturating_mul(sys.n() + 1, saturating_pow(2, k))),
                "check_bounded_intersection");
  if (m < k) return std::nullopt;

  std::vector<std::size_t> tuple(k);
  std::vector<Subset> prefix(k);  // prefix[d] = intersection of tuple[0..d]

  auto tuple_ok = [&]() {
    const Subset& all = prefix[k - 1];
    if (all.size() <= 1) return true;
    for (auto i : tuple) {
      if (sys.is_universe(i)) return true;
    }
    const std::size_t full = (std::size_t{1} << k) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
      if (std::popcount(mask) < 2) continue;
      Subset common;
      bool first = true;
      for (std::size_t b = 0; b < k; ++b) {
        if (!(mask >> b & 1)) continue;
        common = first ? sys[tuple[b]] : intersect(common, sys[tuple[b]]);
        first = false;
      }
      if (common.size() == all.size()) return true;
    }
    return false;
  };

  // Lexicographic enumeration of k-combinations with incremental intersections.
  std::size_t depth = 0;
  tuple[0] = 0;
  while (true) {
    prefix[depth] = depth == 0 ? sys[tuple[0]] : intersect(prefix[depth - 1], sys[tuple[depth]]);
    if (depth + 1 == k) {
      if (!tuple_ok()) return tuple;
    } else {
      ++depth;
      tuple[depth] = tuple[depth - 1] + 1;
      continue;
    }
    // Advance to the next combination.
    while (true) {
      ++tuple[depth];
      if (tuple[depth] <= m - (k - depth)) break;
      if (depth == 0) return std::nullopt;
      --depth;
    }
  }
}

AbstractResult strong_centerpoint_k2(const SetSystem& sys) {
  if (sys.k() != 2) throw InvalidArgument("strong_centerpoint_k2: order must be 2");
  return solve_k2(sys);
}

AbstractResult strong_centerpoint_k(const SetSystem& sys) {
  require_order(sys, 2, "strong_centerpoint_k");
  auto result = solve(sys);
  if (result.has_element()) return result;
  // A failure deep in the recursion is measured against a rescaled threshold;
  // confirm it against the input's own heavy sets before reporting it.
  const auto heavy = sys.heavy_sets();
  if (auto x = lowest_common_element(sys, heavy)) {
    result.outcome = Element{*x};
    result.resolved_directly = true;
  } else {
    result.outcome = NoCenterpoint{heavy};
  }
  return result;
}

Restriction restrict_to(const SetSystem& sys, std::size_t sprime_index) {
  if (sprime_index >= sys.size()) {
    throw InvalidArgument("restrict: set index " + std::to_string(sprime_index) +
                          " out of range");
  }
  require_order(sys, 3, "restrict");
  const Subset& sprime = sys[sprime_index];
  if (sprime.empty()) throw InvalidArgument("restrict: S' is empty");

  constexpr ElementId kAbsent = ~ElementId{0};
  std::vector<ElementId> to_child(sys.n(), kAbsent);
  for (std::size_t i = 0; i < sprime.size(); ++i) to_child[sprime[i]] = static_cast<ElementId>(i);

  std::vector<Subset> sets;
  std::set<Subset> seen;
  for (const auto& s : sys.sets()) {
    Subset restricted;
    for (auto x : s) {
      if (to_child[x] != kAbsent) restricted.push_back(to_child[x]);
    }
    if (restricted.empty()) continue;
    if (seen.insert(restricted).second) sets.push_back(std::move(restricted));
  }
  return Restriction{SetSystem(sprime.size(), sys.k() - 1, std::move(sets)), sprime};
}

std::vector<ElementId> brute_force_strong_centerpoints(const SetSystem& sys,
                                                       const SizeGuard& guard) {
  guard.require(saturating_mul(sys.n(), sys.size()), "brute_force_strong_centerpoints");
  const auto heavy = sys.heavy_sets();
  std::vector<std::size_t> hits(sys.n(), 0);
  for (auto i : heavy) {
    for (auto x : sys[i]) ++hits[x];
  }
  std::vector<ElementId> out;
  for (std::size_t x = 0; x < sys.n(); ++x) {
    if (hits[x] == heavy.size()) out.push_back(static_cast<ElementId>(x));
  }
  return out;
}

}  // namespace strongcp
