// Exact main-angle test through the integer matrix S^2.
//
// For real symmetric Q = S^2 the projection of j onto the lambda-eigenspace
// of Q is nonzero iff lambda is a root of the minimal polynomial of Q
// relative to j. Since E_tau(S) + E_-tau(S) = E_{tau^2}(Q) and the two main
// angles of +-tau agree, beta(tau) = 0 iff tau^2 is not such a root.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>

#include "tourney/errors.hpp"
#include "tourney/spectral.hpp"

namespace tourney {

namespace {

using Poly = std::vector<mpq_class>;  // constant term first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Poly remainder(Poly num, const Poly& den) {
  trim(num);
  while (num.size() >= den.size() && !num.empty()) {
    const mpq_class f = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    trim(num);
  }
  return num;
}

int sign_at(const Poly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

int sign_changes(const std::vector<Poly>& chain, const mpq_class& x) {
  int changes = 0;
  int last = 0;
  for (const Poly& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Number of distinct roots of a square-free polynomial in (lo, hi].
int roots_in(const Poly& p, const mpq_class& lo, const mpq_class& hi) {
  std::vector<Poly> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

Poly main_polynomial(const Tournament& t) {
  const IntMatrix q = seidel_squared(t);
  const int n = t.order();

  struct Reduced {
    std::vector<mpq_class> vec;
    int pivot;
    std::vector<mpq_class> comb;
  };
  std::vector<Reduced> basis;
  std::vector<mpz_class> v(static_cast<std::size_t>(n), 1);

  for (int k = 0; k <= n; ++k) {
    std::vector<mpq_class> r(v.begin(), v.end());
    std::vector<mpq_class> comb(static_cast<std::size_t>(k) + 1, 0);
    comb[static_cast<std::size_t>(k)] = 1;
    for (const Reduced& b : basis) {
      if (r[b.pivot] == 0) continue;
      const mpq_class f = r[b.pivot] / b.vec[b.pivot];
      for (int i = 0; i < n; ++i) r[i] -= f * b.vec[i];
      for (std::size_t i = 0; i < b.comb.size(); ++i) comb[i] -= f * b.comb[i];
    }
    const auto nz = std::find_if(r.begin(), r.end(), [](const mpq_class& x) { return x != 0; });
    if (nz == r.end()) return comb;
    const int pivot = static_cast<int>(nz - r.begin());
    basis.push_back({std::move(r), pivot, std::move(comb)});

    std::vector<mpz_class> next(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) next[i] += static_cast<long>(q(i, j)) * v[j];
    }
    v = std::move(next);
  }
  throw ConsistencyError("Krylov sequence of S^2 did not terminate within n steps");
}

}  // namespace

std::vector<std::string> krylov_main_polynomial(const Tournament& t) {
  std::vector<std::string> out;
  for (const auto& c : main_polynomial(t)) out.push_back(c.get_str());
  return out;
}

bool exact_is_main(const Tournament& t, const Spectrum& spectrum, std::size_t index) {
  if (index >= spectrum.values.size()) throw InputError("spectrum index out of range");
  std::vector<double> squares;
  for (const auto& v : spectrum.values) squares.push_back(v.tau * v.tau);
  std::sort(squares.begin(), squares.end());
  const double merge = 1e-6 * std::max(1.0, squares.back());
  std::vector<double> distinct;
  for (double s : squares) {
    if (distinct.empty() || s - distinct.back() > merge) distinct.push_back(s);
  }

  const double lambda = spectrum.values[index].tau * spectrum.values[index].tau;
  double half_width = 0.5;
  for (double s : distinct) {
    const double gap = std::abs(s - lambda);
    if (gap > merge) half_width = std::min(half_width, gap / 2.0);
  }
  const Poly p = main_polynomial(t);
  return roots_in(p, mpq_class(lambda - half_width), mpq_class(lambda + half_width)) > 0;
}

}  // namespace tourney
