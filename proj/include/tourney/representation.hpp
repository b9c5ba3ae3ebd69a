#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tourney/hermitian.hpp"
#include "tourney/spectral.hpp"
#include "tourney/tolerances.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// The four mutually exclusive cases that decide the minimum dimension.
///   Type1: smallest eigenvalue is not main.
///   Type2: smallest eigenvalue is main and repeated.
///   Type3: smallest is simple, second is not main, and c2 < 0.
///   Type4: everything else.
enum class RepType { Type1 = 1, Type2 = 2, Type3 = 3, Type4 = 4 };

struct TypeClass {
  RepType type = RepType::Type4;
  /// sum_{i>=2} n beta_i^2 / (tau_i - tau_1); set for Type1.
  std::optional<double> c1;
  /// n beta_1^2 / (tau_1 - tau_2) + sum_{i>=3} n beta_i^2 / (tau_i - tau_2);
  /// set whenever m1 = 1 and tau_2 is not main (Type3 iff it is negative).
  std::optional<double> c2;
  double tau1 = 0.0;
  double tau2 = 0.0;
  int m1 = 0;
  int m2 = 0;
};

/// c2 must be below -kNegativeMargin to count as negative.
inline constexpr double kNegativeMargin = 1e-9;

TypeClass classify_type(const Spectrum& spectrum);

struct RepReport {
  int n = 0;
  TypeClass type;
  int rep_dim = 0;
  /// Angle of the minimal representation, Im(alpha) > 0.
  Complex alpha;
  Spectrum spectrum;
};

/// Full analysis: spectrum, type, dimension and angle. The Gram matrix at the
/// returned angle is checked for positive semidefiniteness and exact rank;
/// a mismatch raises ConsistencyError. n = 1 raises InputError.
RepReport analyze(const Tournament& t, const Tolerances& tol = {});

int rep_dimension(const Tournament& t, const Tolerances& tol = {});
Complex optimal_alpha(const Tournament& t, const Tolerances& tol = {});

/// Dimension formula for a classified spectrum.
int rep_dimension_for(const TypeClass& type, int n);
/// Angle formula for a classified spectrum, normalised to Im > 0. Type4 uses
/// the zero-shift witness -i / tau_1.
Complex alpha_for(const TypeClass& type);

/// G = I + alpha A + conj(alpha) A^T.
HermitianMatrix gram_matrix(const Tournament& t, Complex alpha);

struct GramCheck {
  std::vector<double> eigenvalues;
  int rank = 0;
  double min_eigenvalue = 0.0;
};

/// Eigenvalues of G, rank by the relative threshold, and the PSD test.
/// Throws ConsistencyError when rank != expected_rank or G is not PSD.
GramCheck check_gram(const HermitianMatrix& gram, int expected_rank, const Tolerances& tol = {});

/// n unit vectors in C^dim; vectors[u][k] is coordinate k of vertex u.
struct Embedding {
  int dim = 0;
  Complex alpha;
  std::vector<std::vector<Complex>> vectors;
};

/// Factorises the optimal Gram matrix as V^* V with dim = rep_dimension rows.
Embedding embed(const Tournament& t, const Tolerances& tol = {});

struct EmbeddingVerdict {
  bool pass = false;
  double max_deviation = 0.0;
};

/// Checks unit norms and x_u^* x_v = alpha for every arc u -> v.
EmbeddingVerdict verify_embedding(const Embedding& e, const Tournament& t,
                                  double tolerance = 1e-7);

/// Multiplicity of the smallest eigenvalue of a J + S for every a.
std::vector<std::pair<double, int>> multiplicity_profile(const Tournament& t,
                                                         std::span<const double> a_values,
                                                         const Tolerances& tol = {});

/// Shifts at which the dimension formula is attained: 0, -1/c1 when c1 is set,
/// -1/c2 when c2 is set and nonzero.
std::vector<double> candidate_shifts(const TypeClass& type);

}  // namespace tourney
