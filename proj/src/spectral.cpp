#include "tourney/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "tourney/errors.hpp"

namespace tourney {

std::vector<SpectralValue> Spectrum::main_values() const {
  std::vector<SpectralValue> out;
  for (const auto& v : values) {
    if (v.main) out.push_back(v);
  }
  return out;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  for (const auto& v : values) out.insert(out.end(), static_cast<std::size_t>(v.mult), v.tau);
  return out;
}

HermitianMatrix seidel_matrix(const Tournament& t) {
  HermitianMatrix s(t.order());
  for (int u = 0; u < t.order(); ++u) {
    for (int v = u + 1; v < t.order(); ++v) {
      s.set(u, v, t.arc(u, v) ? Complex(0.0, 1.0) : Complex(0.0, -1.0));
    }
  }
  return s;
}

Spectrum group_spectrum(const Eigensystem& es, const Tolerances& tol) {
  const int n = es.n;
  double radius = 0.0;
  for (double x : es.values) radius = std::max(radius, std::abs(x));

  Spectrum spec;
  spec.n = n;
  spec.cluster_tol = tol.eig_cluster * std::max(1.0, radius);

  int start = 0;
  for (int k = 1; k <= n; ++k) {
    if (k < n) {
      const double gap = es.values[k] - es.values[k - 1];
      if (gap < spec.cluster_tol) continue;
      if (gap < 100.0 * spec.cluster_tol) spec.ambiguous = true;
    }
    SpectralValue sv;
    sv.mult = k - start;
    double tau_sum = 0.0;
    double weight = 0.0;
    for (int i = start; i < k; ++i) {
      tau_sum += es.values[i];
      Complex dot = 0.0;
      for (const Complex& z : es.vector(i)) dot += std::conj(z);
      weight += std::norm(dot);
    }
    sv.tau = tau_sum / sv.mult;
    sv.beta = std::sqrt(weight / n);
    sv.main = sv.beta >= tol.beta_zero;
    spec.values.push_back(sv);
    start = k;
  }
  return spec;
}

Spectrum seidel_spectrum(const Tournament& t, const Tolerances& tol) {
  Spectrum spec = group_spectrum(eigensystem(seidel_matrix(t)), tol);
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    const double beta = spec.values[i].beta;
    if (beta >= tol.exact_band_low && beta <= tol.exact_band_high) {
      spec.values[i].main = exact_is_main(t, spec, i);
    }
  }
  return spec;
}

CharIdentityResult char_identity_residual(const HermitianMatrix& h, double a,
                                          std::span<const double> x_samples,
                                          const Tolerances& tol, double min_distance) {
  const int n = h.size();
  const Eigensystem eh = eigensystem(h);
  const Eigensystem em = eigensystem(h.plus_all_ones(a));
  const Spectrum spec = group_spectrum(eh, tol);

  CharIdentityResult result;
  for (double x : x_samples) {
    double nearest = INFINITY;
    for (double lambda : eh.values) nearest = std::min(nearest, std::abs(lambda - x));
    if (nearest < min_distance) {
      ++result.skipped;
      continue;
    }
    double p_h = 1.0;
    double p_m = 1.0;
    for (int k = 0; k < n; ++k) {
      p_h *= eh.values[k] - x;
      p_m *= em.values[k] - x;
    }
    double sum = 0.0;
    for (const auto& v : spec.values) sum += n * v.beta * v.beta / (v.tau - x);
    const double rhs = p_h * (1.0 + a * sum);
    result.max_residual = std::max(result.max_residual, std::abs(p_m - rhs) / (1.0 + std::abs(p_h)));
    ++result.evaluated;
  }
  return result;
}

InterlaceVerdict shifted_main_spectrum(const HermitianMatrix& h, double a, const Tolerances& tol,
                                       double strict_gap) {
  if (a == 0.0) throw InputError("shifted_main_spectrum needs a nonzero shift");
  const Spectrum sh = group_spectrum(eigensystem(h), tol);
  const Spectrum sm = group_spectrum(eigensystem(h.plus_all_ones(a)), tol);

  InterlaceVerdict verdict;
  for (const auto& v : sh.main_values()) verdict.main_h.push_back(v.tau);
  for (const auto& v : sm.main_values()) verdict.main_m.push_back(v.tau);
  verdict.counts_equal = verdict.main_h.size() == verdict.main_m.size();
  if (!verdict.counts_equal) return verdict;

  std::vector<double> chain;
  for (std::size_t i = 0; i < verdict.main_h.size(); ++i) {
    if (a > 0.0) {
      chain.push_back(verdict.main_h[i]);
      chain.push_back(verdict.main_m[i]);
    } else {
      chain.push_back(verdict.main_m[i]);
      chain.push_back(verdict.main_h[i]);
    }
  }
  verdict.min_separation = INFINITY;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    verdict.min_separation = std::min(verdict.min_separation, chain[i] - chain[i - 1]);
  }
  verdict.interlaced = verdict.min_separation > strict_gap;
  return verdict;
}

}  // namespace tourney
