#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tourney/representation.hpp"
#include "tourney/spectral.hpp"
#include "tourney/tolerances.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Doubly regular tournament parameters: out-degree k = (n-1)/2 and
/// lambda = (n-3)/4 common out-neighbours for every pair.
struct DrtParams {
  int n = 0;
  int k = 0;
  int lambda = 0;
  friend bool operator==(const DrtParams&, const DrtParams&) = default;
};

/// Two equal halves under which S^2 = diag(kI + lJ, kI + lJ).
struct BlockFormCert {
  int k = 0;
  int l = 0;
  std::array<std::vector<int>, 2> partition;
};

/// Exact integer test on out-degrees and common out-neighbour counts.
/// Orders below 3 have no pairs to compare and return nullopt.
std::optional<DrtParams> is_doubly_regular(const Tournament& t);

/// H = I + A - A^T satisfies H H^T = nI (H + H^T = 2I holds by construction).
bool skew_hadamard_check(const Tournament& t);

/// Looks for the block form in the off-diagonal support of S^2. Throws
/// InputError for odd n. When no certificate exists and `diagnostic` is
/// given, it receives the reason; S^2 = kI (l = 0) gets its own message.
std::optional<BlockFormCert> block_form_check(const Tournament& t,
                                              std::string* diagnostic = nullptr);

struct DrtMinusVertexVerdict {
  /// Seidel spectrum is {(-theta)^(d-1), -phi, phi, theta^(d-1)} with
  /// theta^2 = n + 1, phi^2 = 1, and the tournament is Type1.
  bool spectral_match = false;
  /// Some one-vertex extension is doubly regular.
  bool extension_found = false;
  std::optional<Tournament> extension;
  bool pass() const { return extension_found; }
};

/// Spectral signature plus explicit reconstruction. Regularity of the
/// extension forces the new vertex's arcs from the out-degrees, so at most
/// one candidate of the 2^n survives pruning. Throws InputError for odd n.
DrtMinusVertexVerdict drt_minus_vertex_check(const Tournament& t, const Tolerances& tol = {});

enum class CertificateKind { None, DRT, SkewHadamard, DrtMinusVertex, BlockForm };

struct Certificate {
  CertificateKind kind = CertificateKind::None;
  std::optional<DrtParams> drt;
  std::optional<BlockFormCert> block;
};

struct TightnessReport {
  int n = 0;
  int rep_dim = 0;
  /// 2d + 1 for odd d, 2d for even d.
  int bound = 0;
  bool is_tight = false;
  Certificate certificate;
  /// For n = 2d, which of the four admissible spectrum shapes occurred (1-4).
  std::optional<int> n2d_case;
  RepReport rep;
};

/// For n = 2d: the admissible shape the spectrum takes given its type,
///   1: Type1 {(-t)^(d-1), 0^2, t^(d-1)}
///   2: Type1 {(-t)^(d-1), -p, p, t^(d-1)}
///   3: Type2 {(-t)^d, t^d}
///   4: Type3 {-t, (-p)^(d-1), p^(d-1), t}
/// or nullopt when none fits.
std::optional<int> match_n2d_case(const Spectrum& spectrum, RepType type, int d);

/// Dimension, bound, tightness and certificate, cross-validated against the
/// characterisations; any disagreement raises ConsistencyError. n >= 3.
TightnessReport classify_code(const Tournament& t, const Tolerances& tol = {});

struct Tou1Sweep {
  int n = 0;
  int classes_checked = 0;
  std::vector<Tournament> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};

/// Exhaustive check that no n-vertex tournament has Seidel spectrum
/// {(-t)^(d-1), 0^2, t^(d-1)}, d = n/2. n in {2, 4, 6}.
Tou1Sweep lemma_tou1_sweep(int n, const Tolerances& tol = {});

struct DrtCatalog {
  int order = 0;
  std::vector<Tournament> members;
  /// Completeness rests on a published classification, not on enumeration.
  bool catalog_trusted = false;
  std::string source;
};

/// Doubly regular tournaments of one order, up to isomorphism. Orders 3 and
/// 7 come from exhaustive enumeration, 11 is the Paley tournament (trusted
/// unique), orders not 3 mod 4 are empty. Other orders need `catalog`;
/// entries of other orders are ignored, entries that are not doubly regular
/// raise InputError. A supplied catalog overrides the built-in sources.
DrtCatalog drt_catalog(int order, const std::vector<Tournament>* catalog = nullptr);

struct TightCount {
  int d = 0;
  long long count = 0;
  bool catalog_trusted = false;
  /// Order of the doubly regular tournaments the count was built from.
  int drt_order = 0;
};

/// Number of tight 2-codes in complex dimension d up to isomorphism. Odd d
/// counts DRTs of order 2d+1. Even d counts isomorphism classes in the union
/// of switching classes of dominated extensions of all DRTs of order 2d-1.
TightCount count_tight_codes(int d, const std::vector<Tournament>* catalog = nullptr);

/// Order whose DRT catalog count_tight_codes(d) needs.
int required_drt_order(int d);

}  // namespace tourney
