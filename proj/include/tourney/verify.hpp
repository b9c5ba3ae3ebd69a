#pragma once

#include <array>
#include <string>
#include <vector>

#include "tourney/tolerances.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// The four 4-vertex tournaments up to isomorphism, as adjacency matrices in
/// the classical listing order, with their minimum dimensions 3, 2, 3, 2.
struct OrderFourExample {
  char label;
  Tournament tournament;
  int rep_dim;
};
std::array<OrderFourExample, 4> order_four_examples();

/// Table of tight-code counts for d = 1..6.
inline constexpr std::array<long long, 6> kTightCodeCounts{1, 2, 1, 4, 1, 8};

/// Structural invariants every tournament must satisfy: main angles sum to
/// one, trace identity, +- symmetry of the spectrum with equal main angles,
/// a zero eigenvalue for odd n, absolute bound, rank-exact Gram matrix, a
/// passing embedding and, for n >= 3, a cross-validated tightness report.
/// Returns human-readable violations; empty means all hold.
std::vector<std::string> invariant_violations(const Tournament& t, const Tolerances& tol = {});

enum class VerifyLevel { Quick, Full };

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Reproduces the reference values and the structural checks. Quick covers
/// d <= 4 and exhaustion through n = 6; Full adds d = 5, 6 and n = 7.
/// Exceptions inside a check turn into failures of that check.
std::vector<CheckResult> verify_paper(VerifyLevel level, const Tolerances& tol = {});

}  // namespace tourney
