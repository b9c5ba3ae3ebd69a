#include "tourney/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tourney/errors.hpp"

namespace tourney {

HermitianMatrix::HermitianMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw InputError("matrix size must be positive");
}

HermitianMatrix HermitianMatrix::from_entries(int n, std::span<const Complex> entries,
                                              double tol) {
  if (static_cast<int>(entries.size()) != n * n) throw InputError("entry count is not n*n");
  HermitianMatrix h(n);
  double scale = 1.0;
  for (const Complex& z : entries) scale = std::max(scale, std::abs(z));
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      const Complex upper = entries[static_cast<std::size_t>(r) * n + c];
      const Complex lower = entries[static_cast<std::size_t>(c) * n + r];
      if (std::abs(upper - std::conj(lower)) > tol * scale) {
        throw InputError("matrix is not Hermitian at (" + std::to_string(r) + "," +
                         std::to_string(c) + ")");
      }
      h.set(r, c, upper);
    }
  }
  return h;
}

void HermitianMatrix::set(int r, int c, Complex value) {
  if (r == c) {
    a_[index(r, r)] = value.real();
    return;
  }
  a_[index(r, c)] = value;
  a_[index(c, r)] = std::conj(value);
}

double HermitianMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : a_) m = std::max(m, std::abs(z));
  return m;
}

HermitianMatrix HermitianMatrix::plus_all_ones(double a) const {
  HermitianMatrix m = *this;
  for (Complex& z : m.a_) z += a;
  return m;
}

std::vector<Complex> HermitianMatrix::apply(std::span<const Complex> v) const {
  std::vector<Complex> out(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) {
    Complex sum = 0.0;
    for (int c = 0; c < n_; ++c) sum += a_[index(r, c)] * v[c];
    out[r] = sum;
  }
  return out;
}

Eigensystem eigensystem(const HermitianMatrix& h) {
  const int n = h.size();
  const auto at = [n](int r, int c) { return static_cast<std::size_t>(r) * n + c; };
  std::vector<Complex> a(static_cast<std::size_t>(n) * n);
  std::vector<Complex> v(a.size(), 0.0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[at(r, c)] = h(r, c);
    v[at(r, r)] = 1.0;
  }

  double total = 0.0;
  for (const Complex& z : a) total += std::norm(z);
  const double stop = total * 1e-30;

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(a[at(p, q)]);
    }
    if (off <= stop) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a[at(p, q)];
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // phase that makes the pivot real: conj(g) * apq = |apq|
        const Complex g = apq / mag;
        const double app = a[at(p, p)].real();
        const double aqq = a[at(q, q)].real();
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // U on the (p,q) plane: [[c, s], [-s conj(g), c conj(g)]]
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(g);
        const Complex uqq = c * std::conj(g);

        for (int k = 0; k < n; ++k) {
          const Complex kp = a[at(k, p)];
          const Complex kq = a[at(k, q)];
          a[at(k, p)] = kp * upp + kq * uqp;
          a[at(k, q)] = kp * upq + kq * uqq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex pk = a[at(p, k)];
          const Complex qk = a[at(q, k)];
          a[at(p, k)] = std::conj(upp) * pk + std::conj(uqp) * qk;
          a[at(q, k)] = std::conj(upq) * pk + std::conj(uqq) * qk;
        }
        a[at(p, q)] = 0.0;
        a[at(q, p)] = 0.0;
        a[at(p, p)] = a[at(p, p)].real();
        a[at(q, q)] = a[at(q, q)].real();

        for (int k = 0; k < n; ++k) {
          const Complex kp = v[at(k, p)];
          const Complex kq = v[at(k, q)];
          v[at(k, p)] = kp * upp + kq * uqp;
          v[at(k, q)] = kp * upq + kq * uqq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a[at(x, x)].real() < a[at(y, y)].real();
  });

  Eigensystem es;
  es.n = n;
  es.values.reserve(static_cast<std::size_t>(n));
  es.vectors.reserve(static_cast<std::size_t>(n) * n);
  for (int k : order) {
    es.values.push_back(a[at(k, k)].real());
    for (int r = 0; r < n; ++r) es.vectors.push_back(v[at(r, k)]);
  }
  return es;
}

}  // namespace tourney
