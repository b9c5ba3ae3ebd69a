#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tourney/hermitian.hpp"
#include "tourney/tolerances.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// One distinct eigenvalue with its multiplicity and main angle.
struct SpectralValue {
  double tau = 0.0;
  int mult = 0;
  double beta = 0.0;
  /// beta != 0, decided by threshold or, for Seidel matrices, the exact test.
  bool main = false;
};

/// Distinct eigenvalues in ascending order.
struct Spectrum {
  int n = 0;
  std::vector<SpectralValue> values;
  /// Absolute clustering tolerance that produced the grouping.
  double cluster_tol = 0.0;
  /// Set when some gap lies within a factor 100 above cluster_tol, i.e. a
  /// slightly looser tolerance would have merged two clusters.
  bool ambiguous = false;

  std::size_t distinct() const { return values.size(); }
  std::vector<SpectralValue> main_values() const;
  /// Every eigenvalue repeated by multiplicity, ascending.
  std::vector<double> expanded() const;
};

/// S = i(A - A^T): S[u][v] = +i iff u -> v.
HermitianMatrix seidel_matrix(const Tournament& t);

/// Clusters the eigenvalues and computes main angles against the all-ones
/// vector. Mainness is decided by the beta_zero threshold alone.
Spectrum group_spectrum(const Eigensystem& es, const Tolerances& tol = {});

/// Spectrum of the Seidel matrix with main angles settled exactly whenever
/// the floating value falls in the ambiguous band.
Spectrum seidel_spectrum(const Tournament& t, const Tolerances& tol = {});

/// Exact test: is the projection of j onto the tau-eigenspace of S nonzero?
/// Uses the integer Krylov sequence j, S^2 j, S^4 j, ... to get the minimal
/// polynomial of S^2 relative to j, then counts its roots in an interval
/// around tau^2 that isolates it among the distinct values of `spectrum`.
bool exact_is_main(const Tournament& t, const Spectrum& spectrum, std::size_t index);

/// Integer coefficients (constant term first, monic) of the minimal
/// polynomial of S^2 relative to j. Exposed for tests; coefficients are
/// returned as decimal strings since they outgrow 64 bits.
std::vector<std::string> krylov_main_polynomial(const Tournament& t);

struct CharIdentityResult {
  double max_residual = 0.0;
  int evaluated = 0;
  int skipped = 0;
};

/// Evaluates P_M(x) against P_H(x) (1 + a sum n beta_i^2 / (tau_i - x)) for
/// M = H + aJ, with P(x) = det(X - xI) taken as a product over eigenvalues.
/// Residuals are |lhs - rhs| / (1 + |P_H(x)|). Samples closer than
/// `min_distance` to an eigenvalue of H are skipped.
CharIdentityResult char_identity_residual(const HermitianMatrix& h, double a,
                                          std::span<const double> x_samples,
                                          const Tolerances& tol = {},
                                          double min_distance = 1e-4);

struct InterlaceVerdict {
  std::vector<double> main_h;
  std::vector<double> main_m;
  bool counts_equal = false;
  bool interlaced = false;
  /// Smallest separation between consecutive terms of the interlacing chain.
  double min_separation = 0.0;
  bool ok() const { return counts_equal && interlaced; }
};

/// Main eigenvalues of M = H + aJ versus those of H. For a > 0 expects
/// tau_1 < mu_1 < tau_2 < ... < tau_r < mu_r; for a < 0 expects
/// mu_1 < tau_1 < ... < mu_r < tau_r, each step strict by more than
/// `strict_gap`. Throws InputError for a == 0.
InterlaceVerdict shifted_main_spectrum(const HermitianMatrix& h, double a,
                                       const Tolerances& tol = {}, double strict_gap = 1e-7);

}  // namespace tourney
