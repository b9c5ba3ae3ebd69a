#include "tourney/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "tourney/canonical.hpp"
#include "tourney/errors.hpp"

namespace tourney {

namespace {

constexpr double kShapeTol = 1e-7;

bool near(double a, double b) { return std::abs(a - b) <= kShapeTol * std::max(1.0, std::abs(b)); }

// Values symmetric about zero with matching multiplicities.
bool symmetric(const Spectrum& s) {
  const std::size_t m = s.values.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& lo = s.values[i];
    const auto& hi = s.values[m - 1 - i];
    if (lo.mult != hi.mult || !near(-lo.tau, hi.tau)) return false;
  }
  return true;
}

std::vector<int> mults(const Spectrum& s) {
  std::vector<int> out;
  for (const auto& v : s.values) out.push_back(v.mult);
  return out;
}

bool tournament_regular(const Tournament& t) {
  for (int v = 1; v < t.order(); ++v) {
    if (t.out_degree(v) != t.out_degree(0)) return false;
  }
  return true;
}

Tournament induced(const Tournament& t, const std::vector<int>& verts) {
  const int m = static_cast<int>(verts.size());
  Tournament sub(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (t.arc(verts[a], verts[b])) {
        sub.orient(a, b);
      } else {
        sub.orient(b, a);
      }
    }
  }
  return sub;
}

}  // namespace

std::optional<DrtParams> is_doubly_regular(const Tournament& t) {
  const int n = t.order();
  if (n < 3) return std::nullopt;
  const int k = t.out_degree(0);
  for (int v = 1; v < n; ++v) {
    if (t.out_degree(v) != k) return std::nullopt;
  }
  const int lambda = std::popcount(t.out_set(0) & t.out_set(1));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (std::popcount(t.out_set(u) & t.out_set(v)) != lambda) return std::nullopt;
    }
  }
  return DrtParams{n, k, lambda};
}

bool skew_hadamard_check(const Tournament& t) {
  const int n = t.order();
  const IntMatrix k = skew_part(t);
  // H = I + K; rows of H are +-1 vectors, so check H H^T = nI entrywise
  const auto h = [&](int r, int c) { return r == c ? 1LL : k(r, c); };
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      long long dot = 0;
      for (int x = 0; x < n; ++x) dot += h(r, x) * h(c, x);
      if (dot != (r == c ? n : 0)) return false;
    }
  }
  return true;
}

std::optional<BlockFormCert> block_form_check(const Tournament& t, std::string* diagnostic) {
  const int n = t.order();
  if (n % 2 != 0) throw InputError("block_form_check needs an even order, got " + std::to_string(n));
  const auto fail = [&](const std::string& why) -> std::optional<BlockFormCert> {
    if (diagnostic) *diagnostic = why;
    return std::nullopt;
  };
  const IntMatrix q = seidel_squared(t);

  bool any_off_diagonal = false;
  for (int u = 0; u < n && !any_off_diagonal; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && q(u, v) != 0) {
        any_off_diagonal = true;
        break;
      }
    }
  }
  if (!any_off_diagonal) return fail("S^2 = kI, i.e. l = 0; the block form needs l > 0");

  std::vector<int> component(static_cast<std::size_t>(n), -1);
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> stack{start};
    component[start] = components;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v != u && q(u, v) != 0 && component[v] < 0) {
          component[v] = components;
          stack.push_back(v);
        }
      }
    }
    ++components;
  }
  if (components != 2) {
    return fail("support of S^2 has " + std::to_string(components) + " components, not 2");
  }

  BlockFormCert cert;
  for (int v = 0; v < n; ++v) cert.partition[component[v]].push_back(v);
  if (cert.partition[0].size() != cert.partition[1].size()) return fail("components differ in size");

  std::optional<long long> l;
  for (const auto& part : cert.partition) {
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        const long long x = q(part[a], part[b]);
        if (!l) l = x;
        if (x != *l) return fail("off-diagonal entries inside a block are not constant");
      }
    }
  }
  if (!l || *l <= 0) return fail("block entries are not a positive constant l");
  cert.l = static_cast<int>(*l);
  cert.k = (n - 1) - cert.l;
  if (diagnostic) diagnostic->clear();
  return cert;
}

DrtMinusVertexVerdict drt_minus_vertex_check(const Tournament& t, const Tolerances& tol) {
  const int n = t.order();
  if (n % 2 != 0) {
    throw InputError("drt_minus_vertex_check needs an even order, got " + std::to_string(n));
  }
  DrtMinusVertexVerdict verdict;
  const int d = n / 2;

  if (n >= 4) {
    const Spectrum spec = seidel_spectrum(t, tol);
    const double theta = std::sqrt(static_cast<double>(n + 1));
    const auto& v = spec.values;
    verdict.spectral_match = v.size() == 4 && mults(spec) == std::vector<int>{d - 1, 1, 1, d - 1} &&
                             near(v[0].tau, -theta) && near(v[1].tau, -1.0) &&
                             near(v[2].tau, 1.0) && near(v[3].tau, theta) &&
                             classify_type(spec).type == RepType::Type1;
  }

  // Extension to a regular tournament of order n + 1: every vertex needs
  // out-degree n/2, which fixes each arc at the new vertex.
  const int target = n / 2;
  Tournament ext(n + 1);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (t.arc(u, v)) {
        ext.orient(u, v);
      } else {
        ext.orient(v, u);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    const int deg = t.out_degree(v);
    if (deg == target) {
      ext.orient(n, v);
    } else if (deg == target - 1) {
      ext.orient(v, n);
    } else {
      return verdict;
    }
  }
  if (ext.out_degree(n) != target) return verdict;
  if (is_doubly_regular(ext)) {
    verdict.extension_found = true;
    verdict.extension = ext;
  }
  return verdict;
}

std::optional<int> match_n2d_case(const Spectrum& spectrum, RepType type, int d) {
  if (spectrum.n != 2 * d || !symmetric(spectrum)) return std::nullopt;
  const auto m = mults(spectrum);
  const auto& v = spectrum.values;
  if (type == RepType::Type1 && d >= 2 && m == std::vector<int>{d - 1, 2, d - 1} &&
      std::abs(v[1].tau) <= kShapeTol) {
    return 1;
  }
  if (type == RepType::Type1 && d >= 2 && m == std::vector<int>{d - 1, 1, 1, d - 1}) return 2;
  if (type == RepType::Type2 && m == std::vector<int>{d, d}) return 3;
  if (type == RepType::Type3 && d >= 2 && m == std::vector<int>{1, d - 1, d - 1, 1}) return 4;
  return std::nullopt;
}

TightnessReport classify_code(const Tournament& t, const Tolerances& tol) {
  const int n = t.order();
  if (n < 3) throw InputError("classify_code needs n >= 3, got " + std::to_string(n));
  TightnessReport r;
  r.n = n;
  r.rep = analyze(t, tol);
  const int d = r.rep_dim = r.rep.rep_dim;
  const bool odd = d % 2 == 1;
  r.bound = odd ? 2 * d + 1 : 2 * d;
  r.is_tight = n == r.bound;
  if (n > r.bound) {
    throw ConsistencyError("absolute bound violated: n=" + std::to_string(n) +
                           " > bound " + std::to_string(r.bound));
  }

  const auto drt = is_doubly_regular(t);
  const bool skew = skew_hadamard_check(t);
  if (drt && !(r.is_tight && odd)) {
    throw ConsistencyError("doubly regular tournament that is not a tight odd-dimensional code");
  }
  if (skew && !(r.is_tight && !odd)) {
    throw ConsistencyError("skew Hadamard tournament that is not a tight even-dimensional code");
  }

  if (r.is_tight) {
    if (odd) {
      if (!drt) throw ConsistencyError("tight code in odd dimension without a DRT");
      r.certificate = {CertificateKind::DRT, drt, std::nullopt};
    } else {
      if (!skew) throw ConsistencyError("tight code in even dimension without skew Hadamard");
      r.certificate = {CertificateKind::SkewHadamard, std::nullopt, std::nullopt};
    }
  }

  if (n == 2 * d) {
    r.n2d_case = match_n2d_case(r.rep.spectrum, r.rep.type.type, d);
    if (!r.n2d_case) throw ConsistencyError("n = 2d spectrum fits none of the admissible shapes");
    if (*r.n2d_case == 1) throw ConsistencyError("n = 2d spectrum with a double zero eigenvalue");
    if (*r.n2d_case == 3 && odd) throw ConsistencyError("Type2 n = 2d code with odd d");
    if (!odd && *r.n2d_case != 3) {
      throw ConsistencyError("n = 2d code with even d is not of the Type2 shape");
    }
    if (odd) {
      const auto minus = drt_minus_vertex_check(t, tol);
      if (minus.spectral_match != minus.extension_found) {
        throw ConsistencyError("DRT-minus-vertex spectral signature and reconstruction disagree");
      }
      const auto block = block_form_check(t);
      if (minus.pass() == block.has_value()) {
        throw ConsistencyError("n = 2d, odd d: expected exactly one of DrtMinusVertex/BlockForm");
      }
      if (minus.pass()) {
        if (*r.n2d_case != 2) throw ConsistencyError("DrtMinusVertex without the Type1 shape");
        r.certificate = {CertificateKind::DrtMinusVertex, std::nullopt, std::nullopt};
      } else {
        if (*r.n2d_case != 4) throw ConsistencyError("BlockForm without the Type3 shape");
        const Tournament first = induced(t, block->partition[0]);
        if (!tournament_regular(first) || first.order() % 2 == 0) {
          throw ConsistencyError("block form whose first block is not regular of odd order");
        }
        r.certificate = {CertificateKind::BlockForm, std::nullopt, block};
      }
    }
  }
  return r;
}

Tou1Sweep lemma_tou1_sweep(int n, const Tolerances& tol) {
  if (n != 2 && n != 4 && n != 6) throw InputError("lemma_tou1_sweep supports n in {2, 4, 6}");
  const int d = n / 2;
  Tou1Sweep sweep;
  sweep.n = n;
  for (const Tournament& t : enumerate_tournaments(n)) {
    ++sweep.classes_checked;
    const Spectrum s = seidel_spectrum(t, tol);
    const auto m = mults(s);
    bool hit;
    if (d == 1) {
      hit = m == std::vector<int>{2} && std::abs(s.values[0].tau) <= kShapeTol;
    } else {
      hit = m == std::vector<int>{d - 1, 2, d - 1} && symmetric(s) &&
            std::abs(s.values[1].tau) <= kShapeTol;
    }
    if (hit) sweep.counterexamples.push_back(t);
  }
  return sweep;
}

DrtCatalog drt_catalog(int order, const std::vector<Tournament>* catalog) {
  DrtCatalog out;
  out.order = order;
  if (order < 1) throw InputError("catalog order must be positive");
  if (order % 4 != 3) {
    out.source = "empty: a doubly regular tournament needs order 3 mod 4";
    return out;
  }
  if (catalog) {
    std::set<CanonicalForm> seen;
    for (const Tournament& t : *catalog) {
      if (t.order() != order) continue;
      if (!is_doubly_regular(t)) {
        throw InputError("catalog entry " + t.to_line() + " is not doubly regular");
      }
      if (seen.insert(canonical_form(t)).second) out.members.push_back(t);
    }
    out.catalog_trusted = true;
    out.source = "external catalog";
    return out;
  }
  if (order <= kMaxEnumerationOrder) {
    for (const Tournament& t : enumerate_tournaments(order)) {
      if (is_doubly_regular(t)) out.members.push_back(t);
    }
    out.source = "exhaustive enumeration";
    return out;
  }
  if (order == 11) {
    out.members.push_back(paley_tournament(11));
    out.catalog_trusted = true;
    out.source = "Paley construction; uniqueness from the published classification";
    return out;
  }
  throw InputError("no built-in catalog of doubly regular tournaments of order " +
                   std::to_string(order) + "; supply a catalog file");
}

int required_drt_order(int d) { return d % 2 == 1 ? 2 * d + 1 : 2 * d - 1; }

TightCount count_tight_codes(int d, const std::vector<Tournament>* catalog) {
  if (d < 1) throw InputError("dimension must be positive, got " + std::to_string(d));
  TightCount out;
  out.d = d;
  out.drt_order = required_drt_order(d);
  const DrtCatalog drts = drt_catalog(out.drt_order, catalog);
  out.catalog_trusted = drts.catalog_trusted;
  if (d % 2 == 1) {
    out.count = static_cast<long long>(drts.members.size());
    return out;
  }
  // Distinct DRTs may share a switching class, so take the union first.
  std::set<CanonicalForm> classes;
  for (const Tournament& drt : drts.members) {
    auto members = switching_class(dominated_extension(drt));
    classes.merge(members);
  }
  out.count = static_cast<long long>(classes.size());
  return out;
}

}  // namespace tourney
