#include "tourney/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "tourney/canonical.hpp"
#include "tourney/codes.hpp"
#include "tourney/errors.hpp"
#include "tourney/representation.hpp"

namespace tourney {

std::array<OrderFourExample, 4> order_four_examples() {
  using M = std::vector<std::vector<int>>;
  return {{
      {'a', Tournament::from_adjacency(M{{0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}}), 3},
      {'b', Tournament::from_adjacency(M{{0, 1, 1, 1}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}), 2},
      {'c', Tournament::from_adjacency(M{{0, 0, 1, 1}, {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}), 3},
      {'d', Tournament::from_adjacency(M{{0, 0, 1, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 0, 0}}), 2},
  }};
}

std::vector<std::string> invariant_violations(const Tournament& t, const Tolerances& tol) {
  std::vector<std::string> out;
  const int n = t.order();
  const auto fail = [&](const std::string& what) { out.push_back(t.to_line() + ": " + what); };
  try {
    const RepReport r = analyze(t, tol);
    const auto& v = r.spectrum.values;
    double beta_sq = 0.0;
    double trace = 0.0;
    int mult = 0;
    for (const auto& x : v) {
      beta_sq += x.beta * x.beta;
      trace += x.mult * x.tau * x.tau;
      mult += x.mult;
    }
    if (mult != n) fail("multiplicities do not sum to n");
    if (std::abs(beta_sq - 1.0) > 1e-8) fail("main angles squared do not sum to 1");
    if (std::abs(trace - n * (n - 1.0)) > 1e-6 * n * n) fail("trace of S^2 is not n(n-1)");
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& lo = v[i];
      const auto& hi = v[v.size() - 1 - i];
      if (lo.mult != hi.mult || std::abs(lo.tau + hi.tau) > 1e-7 ||
          std::abs(lo.beta - hi.beta) > 1e-7 || lo.main != hi.main) {
        fail("spectrum is not symmetric under tau -> -tau");
        break;
      }
    }
    if (n % 2 == 1) {
      double smallest = INFINITY;
      for (const auto& x : v) smallest = std::min(smallest, std::abs(x.tau));
      if (smallest > 1e-7) fail("odd order without a zero eigenvalue");
    }
    const int d = r.rep_dim;
    if (d < 1 || d > n - 1) fail("dimension outside [1, n-1]");
    if (n > (d % 2 == 1 ? 2 * d + 1 : 2 * d)) fail("absolute bound violated");
    const auto ev = verify_embedding(embed(t, tol), t, tol.embedding);
    if (!ev.pass) fail("embedding deviation " + std::to_string(ev.max_deviation));
    if (n >= 3) classify_code(t, tol);
  } catch (const std::exception& e) {
    fail(e.what());
  }
  return out;
}

namespace {

using Check = std::function<std::string()>;  // empty string means pass

CheckResult run_check(const std::string& id, const Check& check) {
  CheckResult result;
  result.id = id;
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = check();
    result.pass = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

std::vector<CheckResult> verify_paper(VerifyLevel level, const Tolerances& tol) {
  const bool full = level == VerifyLevel::Full;
  std::vector<CheckResult> results;

  results.push_back(run_check("order4-rep", [&] {
    std::ostringstream bad;
    for (const auto& ex : order_four_examples()) {
      const int d = rep_dimension(ex.tournament, tol);
      if (d != ex.rep_dim) bad << "(" << ex.label << ") got " << d << " want " << ex.rep_dim << "; ";
    }
    return bad.str();
  }));

  const int max_d = full ? 6 : 4;
  for (int d = 1; d <= max_d; ++d) {
    results.push_back(run_check("table1-d" + std::to_string(d), [&, d] {
      const long long got = count_tight_codes(d).count;
      const long long want = kTightCodeCounts[static_cast<std::size_t>(d - 1)];
      return got == want ? std::string()
                         : "got " + std::to_string(got) + " want " + std::to_string(want);
    }));
  }

  for (int n : {4, 6}) {
    results.push_back(run_check("tou1-n" + std::to_string(n), [&, n] {
      const auto sweep = lemma_tou1_sweep(n, tol);
      return sweep.pass() ? std::string()
                          : std::to_string(sweep.counterexamples.size()) + " counterexamples";
    }));
  }

  results.push_back(run_check("n2d-odd-dichotomy", [&] {
    std::string bad;
    const Tournament p7 = paley_tournament(7);
    for (int v = 0; v < 7; ++v) {
      const auto r = classify_code(delete_vertex(p7, v), tol);
      if (r.certificate.kind != CertificateKind::DrtMinusVertex || r.rep_dim != 3) {
        bad += "Paley-7 minus " + std::to_string(v) + " not DrtMinusVertex; ";
      }
    }
    const Tournament p3 = paley_tournament(3);
    const auto r = classify_code(d_optimal_block(p3, p3), tol);
    if (r.certificate.kind != CertificateKind::BlockForm || r.certificate.block->k != 3 ||
        r.certificate.block->l != 2 || r.rep_dim != 3) {
      bad += "block(Paley-3, Paley-3) not BlockForm(3,2); ";
    }
    return bad;
  }));

  results.push_back(run_check("n8-skew-hadamard", [&] {
    std::string bad;
    for (const auto& key : switching_class(dominated_extension(paley_tournament(7)))) {
      const Tournament t = key.representative();
      if (rep_dimension(t, tol) != 4 || !skew_hadamard_check(t)) bad += t.to_line() + "; ";
    }
    return bad;
  }));

  const int max_n = full ? 7 : 6;
  for (int n = 2; n <= max_n; ++n) {
    results.push_back(run_check("invariants-n" + std::to_string(n), [&, n] {
      std::string bad;
      for (const Tournament& t : enumerate_tournaments(n)) {
        for (const auto& v : invariant_violations(t, tol)) bad += v + "; ";
      }
      return bad;
    }));
  }

  if (full) {
    results.push_back(run_check("n7-scan", [&] {
      int hits = 0;
      std::string bad;
      for (const Tournament& t : enumerate_tournaments(7)) {
        if (rep_dimension(t, tol) != 3) continue;
        ++hits;
        const auto p = is_doubly_regular(t);
        if (!p || !(*p == DrtParams{7, 3, 1})) bad += "rep 3 but not DRT(7,3,1); ";
      }
      if (hits != 1) bad += std::to_string(hits) + " classes with rep 3, want 1";
      return bad;
    }));
  }
  return results;
}

}  // namespace tourney
