#pragma once

namespace tourney {

/// Numerical thresholds shared by the spectral, representation and codes
/// modules. The defaults are the library contract; the CLI echoes whatever
/// values were in effect.
struct Tolerances {
  /// Sorted eigenvalues join one cluster iff their gap is below
  /// eig_cluster * max(1, spectral radius).
  double eig_cluster = 1e-7;
  /// A main angle below this is zero.
  double beta_zero = 1e-6;
  /// Floating main angles inside [exact_band_low, exact_band_high] are
  /// settled by the exact integer Krylov test instead of beta_zero.
  double exact_band_low = 1e-9;
  double exact_band_high = 1e-3;
  /// Gram eigenvalues below rank_zero * (largest eigenvalue) count as zero.
  double rank_zero = 1e-7;
  /// Maximum inner-product deviation accepted by verify_embedding.
  double embedding = 1e-7;
};

}  // namespace tourney
