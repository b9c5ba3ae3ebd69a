#pragma once

#include <complex>
#include <span>
#include <vector>

namespace tourney {

using Complex = std::complex<double>;

/// Dense Hermitian matrix. Writes go through set(), which fills the mirrored
/// entry with the conjugate, so the value stays Hermitian.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int n);

  /// Row-major entries; throws InputError if any |H[u][v] - conj(H[v][u])|
  /// exceeds `tol` (scaled by max(1, max|H|)).
  static HermitianMatrix from_entries(int n, std::span<const Complex> entries,
                                      double tol = 1e-12);

  int size() const { return n_; }
  Complex operator()(int r, int c) const { return a_[index(r, c)]; }
  /// Sets H[r][c] = value and H[c][r] = conj(value); diagonal keeps the real part.
  void set(int r, int c, Complex value);

  double max_abs() const;
  /// H + a J.
  HermitianMatrix plus_all_ones(double a) const;
  /// H v.
  std::vector<Complex> apply(std::span<const Complex> v) const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * n_ + c; }

  int n_;
  std::vector<Complex> a_;
};

/// Eigenpairs in ascending eigenvalue order. Eigenvector k occupies
/// vectors[k*n .. k*n + n).
struct Eigensystem {
  int n = 0;
  std::vector<double> values;
  std::vector<Complex> vectors;

  std::span<const Complex> vector(int k) const {
    return {vectors.data() + static_cast<std::size_t>(k) * n, static_cast<std::size_t>(n)};
  }
};

/// Cyclic complex Jacobi: each rotation first removes the phase of the pivot
/// H[p][q] with a diagonal unitary, then applies the real symmetric Jacobi
/// rotation that annihilates it. Sweeps stop once the off-diagonal Frobenius
/// norm falls below 1e-15 of the total.
Eigensystem eigensystem(const HermitianMatrix& h);

}  // namespace tourney
