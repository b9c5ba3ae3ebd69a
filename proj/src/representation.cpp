#include "tourney/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tourney/errors.hpp"

namespace tourney {

namespace {

double weight(const SpectralValue& v) { return v.main ? v.beta * v.beta : 0.0; }

}  // namespace

TypeClass classify_type(const Spectrum& spectrum) {
  if (spectrum.n < 2) throw InputError("a single vertex has no angle set to classify");
  if (spectrum.values.size() < 2) {
    throw ConsistencyError("Seidel spectrum of a tournament with n >= 2 has one distinct value");
  }
  const int n = spectrum.n;
  const auto& vals = spectrum.values;
  TypeClass tc;
  tc.tau1 = vals[0].tau;
  tc.tau2 = vals[1].tau;
  tc.m1 = vals[0].mult;
  tc.m2 = vals[1].mult;

  if (!vals[0].main) {
    double c1 = 0.0;
    for (std::size_t i = 1; i < vals.size(); ++i) c1 += n * weight(vals[i]) / (vals[i].tau - tc.tau1);
    if (!(c1 > 0.0)) throw ConsistencyError("Type1 constant c1 is not positive");
    tc.type = RepType::Type1;
    tc.c1 = c1;
    return tc;
  }
  if (tc.m1 > 1) {
    tc.type = RepType::Type2;
    return tc;
  }
  if (!vals[1].main) {
    double c2 = n * weight(vals[0]) / (tc.tau1 - tc.tau2);
    for (std::size_t i = 2; i < vals.size(); ++i) c2 += n * weight(vals[i]) / (vals[i].tau - tc.tau2);
    tc.c2 = c2;
    tc.type = c2 < -kNegativeMargin ? RepType::Type3 : RepType::Type4;
    return tc;
  }
  tc.type = RepType::Type4;
  return tc;
}

int rep_dimension_for(const TypeClass& type, int n) {
  switch (type.type) {
    case RepType::Type1:
      return n - type.m1 - 1;
    case RepType::Type2:
      return n - type.m1;
    case RepType::Type3:
      return n - type.m2 - 1;
    case RepType::Type4:
      return n - 1;
  }
  return n - 1;
}

Complex alpha_for(const TypeClass& type) {
  const Complex i(0.0, 1.0);
  Complex alpha;
  switch (type.type) {
    case RepType::Type1:
      alpha = (1.0 - *type.c1 * i) / (1.0 + *type.c1 * type.tau1);
      break;
    case RepType::Type3:
      alpha = (1.0 - *type.c2 * i) / (1.0 + *type.c2 * type.tau2);
      break;
    case RepType::Type2:
    case RepType::Type4:
      alpha = -i / type.tau1;
      break;
  }
  return alpha.imag() < 0.0 ? std::conj(alpha) : alpha;
}

HermitianMatrix gram_matrix(const Tournament& t, Complex alpha) {
  HermitianMatrix g(t.order());
  for (int u = 0; u < t.order(); ++u) {
    g.set(u, u, 1.0);
    for (int v = u + 1; v < t.order(); ++v) g.set(u, v, t.arc(u, v) ? alpha : std::conj(alpha));
  }
  return g;
}

GramCheck check_gram(const HermitianMatrix& gram, int expected_rank, const Tolerances& tol) {
  const int n = gram.size();
  GramCheck check;
  check.eigenvalues = eigensystem(gram).values;
  const double largest = check.eigenvalues.back();
  check.min_eigenvalue = check.eigenvalues.front();
  check.rank = static_cast<int>(std::count_if(check.eigenvalues.begin(), check.eigenvalues.end(),
                                              [&](double x) { return x >= tol.rank_zero * largest; }));
  if (check.min_eigenvalue < -1e-8 * n) {
    throw ConsistencyError("Gram matrix is not positive semidefinite (smallest eigenvalue " +
                           std::to_string(check.min_eigenvalue) + ")");
  }
  if (check.rank != expected_rank) {
    throw ConsistencyError("Gram matrix rank " + std::to_string(check.rank) +
                           " differs from the predicted dimension " +
                           std::to_string(expected_rank));
  }
  return check;
}

RepReport analyze(const Tournament& t, const Tolerances& tol) {
  if (t.order() < 2) throw InputError("a single vertex has no angle set; n must be >= 2");
  RepReport report;
  report.n = t.order();
  report.spectrum = seidel_spectrum(t, tol);
  report.type = classify_type(report.spectrum);
  report.rep_dim = rep_dimension_for(report.type, report.n);
  report.alpha = alpha_for(report.type);
  check_gram(gram_matrix(t, report.alpha), report.rep_dim, tol);
  return report;
}

int rep_dimension(const Tournament& t, const Tolerances& tol) { return analyze(t, tol).rep_dim; }

Complex optimal_alpha(const Tournament& t, const Tolerances& tol) { return analyze(t, tol).alpha; }

Embedding embed(const Tournament& t, const Tolerances& tol) {
  const RepReport report = analyze(t, tol);
  const int n = t.order();
  const Eigensystem es = eigensystem(gram_matrix(t, report.alpha));
  const double largest = es.values.back();
  int rank = 0;
  for (double x : es.values) rank += x >= tol.rank_zero * largest ? 1 : 0;
  if (rank != report.rep_dim) {
    throw ConsistencyError("Gram factorisation rank " + std::to_string(rank) +
                           " differs from the dimension " + std::to_string(report.rep_dim));
  }

  Embedding e;
  e.dim = rank;
  e.alpha = report.alpha;
  e.vectors.assign(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(rank)));
  // G = sum_k lambda_k u_k u_k^*, so x_u[k] = sqrt(lambda_k) conj(u_k[u]).
  for (int k = 0; k < rank; ++k) {
    const int idx = n - 1 - k;
    const double scale = std::sqrt(es.values[idx]);
    const auto u = es.vector(idx);
    for (int v = 0; v < n; ++v) e.vectors[v][k] = scale * std::conj(u[v]);
  }
  return e;
}

EmbeddingVerdict verify_embedding(const Embedding& e, const Tournament& t, double tolerance) {
  const int n = t.order();
  if (static_cast<int>(e.vectors.size()) != n) {
    throw InputError("embedding has " + std::to_string(e.vectors.size()) + " vectors for " +
                     std::to_string(n) + " vertices");
  }
  const auto inner = [&](int u, int v) {
    Complex sum = 0.0;
    for (int k = 0; k < e.dim; ++k) sum += std::conj(e.vectors[u][k]) * e.vectors[v][k];
    return sum;
  };
  EmbeddingVerdict verdict;
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(e.vectors[u].size()) != e.dim) throw InputError("vector length mismatch");
    verdict.max_deviation = std::max(verdict.max_deviation, std::abs(inner(u, u) - 1.0));
    for (int v = 0; v < n; ++v) {
      if (u != v && t.arc(u, v)) {
        verdict.max_deviation = std::max(verdict.max_deviation, std::abs(inner(u, v) - e.alpha));
        verdict.max_deviation =
            std::max(verdict.max_deviation, std::abs(inner(v, u) - std::conj(e.alpha)));
      }
    }
  }
  verdict.pass = verdict.max_deviation <= tolerance;
  return verdict;
}

std::vector<std::pair<double, int>> multiplicity_profile(const Tournament& t,
                                                         std::span<const double> a_values,
                                                         const Tolerances& tol) {
  const HermitianMatrix s = seidel_matrix(t);
  std::vector<std::pair<double, int>> out;
  out.reserve(a_values.size());
  for (double a : a_values) {
    const Spectrum spec = group_spectrum(eigensystem(s.plus_all_ones(a)), tol);
    out.emplace_back(a, spec.values.front().mult);
  }
  return out;
}

std::vector<double> candidate_shifts(const TypeClass& type) {
  std::vector<double> shifts{0.0};
  if (type.c1) shifts.push_back(-1.0 / *type.c1);
  if (type.c2 && *type.c2 != 0.0) shifts.push_back(-1.0 / *type.c2);
  return shifts;
}

}  // namespace tourney
