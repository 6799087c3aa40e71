#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "strongcp/size_guard.hpp"

namespace strongcp {

using ElementId = std::uint32_t;
using Subset = std::vector<ElementId>;

/// Ground set {0, ..., n-1} with a list of distinct subsets and the
/// bounded-intersection order k asserted by the caller.
class SetSystem {
 public:
  // Throws InvalidArgument unless every set is strictly ascending, in range,
  // and no set repeats.
  SetSystem(std::size_t n, std::size_t k, std::vector<Subset> sets);

  // Sorts each set, removes repeated ids and drops repeated sets (first kept).
  static SetSystem canonical(std::size_t n, std::size_t k, std::vector<Subset> sets);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return sets_.size(); }
  const Subset& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<Subset>& sets() const { return sets_; }

  // A set holding the whole ground set constrains nothing.
  bool is_universe(std::size_t i) const { return sets_[i].size() == n_; }

  // Indices of sets with more than (1 - 1/k) n elements.
  std::vector<std::size_t> heavy_sets() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Subset> sets_;
};

struct Element {
  ElementId id;
  friend bool operator==(const Element&, const Element&) = default;
};

struct NoCenterpoint {
  // Heavy sets of the input whose common intersection is empty.
  std::vector<std::size_t> witness;
  friend bool operator==(const NoCenterpoint&, const NoCenterpoint&) = default;
};

struct TraceLevel {
  std::size_t ground_size;
  std::size_t order;
  std::optional<std::size_t> chosen_set;  // S' at this level, if one was picked
};

struct AbstractResult {
  std::variant<Element, NoCenterpoint> outcome;
  std::vector<TraceLevel> trace;
  // The recursion failed and the answer came from intersecting the input's
  // heavy sets directly.
  bool resolved_directly = false;

  bool has_element() const { return std::holds_alternative<Element>(outcome); }
  ElementId element() const { return std::get<Element>(outcome).id; }
  const NoCenterpoint& failure() const { return std::get<NoCenterpoint>(outcome); }
};

/// Checks that every k distinct sets meet in at most one element, or meet in
/// exactly what some 2..k-1 of them already meet in. Tuples containing a
/// universe set pass, since intersecting with it changes nothing.
/// Returns the first violating tuple in lexicographic order, or nullopt.
std::optional<std::vector<std::size_t>> check_bounded_intersection(
    const SetSystem& sys, const SizeGuard& guard = SizeGuard::from_env());

/// k = 2 solver. Returns the lowest element common to all heavy sets, or
/// NoCenterpoint when they share none (possible for odd n, e.g. three
/// 2-element sets on 3 elements). Throws PropertyViolation when two
/// non-universe heavy sets share two or more elements.
AbstractResult strong_centerpoint_k2(const SetSystem& sys);

/// General k: picks the largest heavy set S', restricts every set to S',
/// solves at order k-1 and maps the answer back.
AbstractResult strong_centerpoint_k(const SetSystem& sys);

struct Restriction {
  SetSystem system;
  std::vector<ElementId> to_parent;  // new id -> original id
};

/// {S ∩ S' : S in sys} over the elements of S' relabelled 0..|S'|-1. Empty
/// intersections are dropped, repeats merged, S' itself kept. Order k - 1.
Restriction restrict_to(const SetSystem& sys, std::size_t sprime_index);

/// Elements lying in every heavy set, by direct counting.
std::vector<ElementId> brute_force_strong_centerpoints(
    const SetSystem& sys, const SizeGuard& guard = SizeGuard::from_env());

}  // namespace strongcp
