#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Isomorphism-invariant key: the arc pattern of the tournament under its
/// canonical labeling, packed 64 pairs per word. Equal keys iff isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> words;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  Tournament representative() const;
};

/// Canonical labeling by individualization and refinement: vertices are
/// split by out-degree, then iteratively by out-neighbour counts into each
/// cell; remaining ties are broken by branching over every vertex of the
/// first non-singleton cell. The smallest arc pattern over all leaves wins.
///
/// Practical up to n = 14 for generic inputs; highly symmetric tournaments
/// cost roughly |Aut| leaves.
CanonicalForm canonical_form(const Tournament& t);

/// The permutation (old vertex -> new vertex) realising canonical_form.
std::vector<int> canonical_labeling(const Tournament& t);

/// One representative per isomorphism class, in ascending canonical order.
/// Each representative is the canonically labeled tournament. Supports
/// 1 <= n <= 7.
std::vector<Tournament> enumerate_tournaments(int n);

inline constexpr int kMaxEnumerationOrder = 7;

/// Isomorphism classes met by switching t at every vertex subset. Subsets
/// are taken to contain vertex 0, since X and its complement give the same
/// switch. Cost is 2^(n-1) canonical forms; n <= 12 is the intended range
/// and n > 24 is rejected.
std::set<CanonicalForm> switching_class(const Tournament& t);

}  // namespace tourney
