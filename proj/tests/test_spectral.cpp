#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <random>

#include "tourney/canonical.hpp"
#include "tourney/errors.hpp"
#include "tourney/spectral.hpp"

using namespace tourney;

namespace {

using EigenMatrix = Eigen::MatrixXcd;

Tournament random_tournament(int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(pair_count(n)));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
  return build(n, bits);
}

HermitianMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  HermitianMatrix h(n);
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) h.set(r, c, {g(rng), r == c ? 0.0 : g(rng)});
  }
  return h;
}

EigenMatrix to_eigen(const HermitianMatrix& h) {
  EigenMatrix m(h.size(), h.size());
  for (int r = 0; r < h.size(); ++r) {
    for (int c = 0; c < h.size(); ++c) m(r, c) = h(r, c);
  }
  return m;
}

double beta_of(const Spectrum& s, double tau) {
  for (const auto& v : s.values) {
    if (std::abs(v.tau - tau) < 1e-6) return v.beta;
  }
  FAIL("eigenvalue not found");
  return -1.0;
}

}  // namespace

TEST_CASE("Seidel matrix entries") {
  const HermitianMatrix s = seidel_matrix(Tournament::parse("2:1"));
  CHECK(s(0, 0) == Complex{0, 0});
  CHECK(s(0, 1) == Complex{0, 1});
  CHECK(s(1, 0) == Complex{0, -1});

  // S*S is real and equals the integer seidel_squared
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Tournament t = random_tournament(2 + static_cast<int>(rng() % 10), rng);
    const EigenMatrix m = to_eigen(seidel_matrix(t));
    const EigenMatrix sq = m * m;
    const IntMatrix q = seidel_squared(t);
    for (int r = 0; r < t.order(); ++r) {
      for (int c = 0; c < t.order(); ++c) {
        CHECK(std::abs(sq(r, c) - Complex(static_cast<double>(q(r, c)), 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("from_entries rejects non-Hermitian input") {
  const std::vector<Complex> bad{{0, 0}, {1, 0}, {2, 0}, {0, 0}};
  CHECK_THROWS_AS(HermitianMatrix::from_entries(2, bad), InputError);
  const std::vector<Complex> diag{{1, 1}, {0, 0}, {0, 0}, {0, 0}};
  CHECK_THROWS_AS(HermitianMatrix::from_entries(2, diag), InputError);
  const std::vector<Complex> good{{1, 0}, {0, 2}, {0, -2}, {3, 0}};
  CHECK(HermitianMatrix::from_entries(2, good)(1, 0) == Complex{0, -2});
}

TEST_CASE("Jacobi eigensolver agrees with Eigen") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const HermitianMatrix h = random_hermitian(n, rng);
    const Eigensystem es = eigensystem(h);
    Eigen::SelfAdjointEigenSolver<EigenMatrix> oracle(to_eigen(h));
    const double scale = std::max(1.0, h.max_abs());
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(es.values[k] - oracle.eigenvalues()(k)) < 1e-10 * scale * n);
      const auto v = es.vector(k);
      const auto hv = h.apply(v);
      double residual = 0.0;
      for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(hv[i] - es.values[k] * v[i]));
      CHECK(residual < 1e-9 * n * scale);
      for (int l = 0; l < n; ++l) {
        Complex dot{};
        for (int i = 0; i < n; ++i) dot += std::conj(v[i]) * es.vector(l)[i];
        CHECK(std::abs(dot - Complex(k == l ? 1.0 : 0.0, 0.0)) < 1e-10 * n);
      }
    }
  }
}

TEST_CASE("Jacobi on tournaments with heavy degeneracy") {
  // Paley-7: S^2 = 7I - J, so S has +-sqrt7 three times each and 0 once
  const Eigensystem es = eigensystem(seidel_matrix(paley_tournament(7)));
  const double r7 = std::sqrt(7.0);
  const double expected[] = {-r7, -r7, -r7, 0.0, r7, r7, r7};
  for (int k = 0; k < 7; ++k) CHECK(std::abs(es.values[k] - expected[k]) < 1e-10);

  const Eigensystem zero = eigensystem(HermitianMatrix(5));
  for (double v : zero.values) CHECK(v == 0.0);
}

TEST_CASE("main angles of small tournaments") {
  const Spectrum two = seidel_spectrum(Tournament::parse("2:1"));
  REQUIRE(two.distinct() == 2);
  CHECK(two.values[0].tau == doctest::Approx(-1.0));
  CHECK(two.values[1].tau == doctest::Approx(1.0));
  CHECK(two.values[0].beta == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(two.values[1].beta == doctest::Approx(1.0 / std::sqrt(2.0)));

  // 3-cycle: j spans the kernel
  const Spectrum cyc = seidel_spectrum(Tournament::parse("3:101"));
  REQUIRE(cyc.distinct() == 3);
  CHECK(beta_of(cyc, 0.0) == doctest::Approx(1.0));
  CHECK_FALSE(cyc.values[0].main);
  CHECK_FALSE(cyc.values[2].main);
  CHECK(cyc.values[1].main);

  // transitive 3: kernel spanned by (1,-1,1), so beta_0^2 = 1/9
  const Spectrum trans = seidel_spectrum(Tournament::parse("3:111"));
  REQUIRE(trans.distinct() == 3);
  CHECK(beta_of(trans, 0.0) == doctest::Approx(1.0 / 3.0));
  CHECK(beta_of(trans, std::sqrt(3.0)) == doctest::Approx(2.0 / 3.0));
  CHECK(beta_of(trans, -std::sqrt(3.0)) == doctest::Approx(2.0 / 3.0));

  const Spectrum p7 = seidel_spectrum(paley_tournament(7));
  REQUIRE(p7.distinct() == 3);
  CHECK(p7.values[0].mult == 3);
  CHECK(p7.values[1].mult == 1);
  CHECK(p7.main_values().size() == 1);
}

TEST_CASE("spectrum invariants over random tournaments") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const Tournament t = random_tournament(n, rng);
    const Spectrum s = seidel_spectrum(t);
    double beta_sq = 0.0;
    double sq_sum = 0.0;
    int mult = 0;
    for (const auto& v : s.values) {
      beta_sq += v.beta * v.beta;
      sq_sum += v.mult * v.tau * v.tau;
      mult += v.mult;
    }
    CHECK(mult == n);
    CHECK(beta_sq == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sq_sum == doctest::Approx(static_cast<double>(n) * (n - 1)).epsilon(1e-10));
    // spectrum symmetric under negation with equal main angles
    const std::size_t k = s.distinct();
    for (std::size_t i = 0; i < k; ++i) {
      const auto& lo = s.values[i];
      const auto& hi = s.values[k - 1 - i];
      CHECK(lo.tau == doctest::Approx(-hi.tau).epsilon(1e-9));
      CHECK(lo.mult == hi.mult);
      CHECK(lo.beta == doctest::Approx(hi.beta).epsilon(1e-6));
    }
    if (n % 2 == 1) CHECK(beta_of(s, 0.0) >= 0.0);
  }
}

TEST_CASE("switching preserves the spectrum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Tournament t = random_tournament(n, rng);
    const auto a = seidel_spectrum(t).expanded();
    const auto b = seidel_spectrum(switched(t, rng() & t.all_vertices())).expanded();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
  }
}

TEST_CASE("exact main test agrees with floating point on every class up to n = 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Tournament& t : enumerate_tournaments(n)) {
      const Spectrum s = seidel_spectrum(t);
      for (std::size_t i = 0; i < s.distinct(); ++i) {
        CHECK(exact_is_main(t, s, i) == (s.values[i].beta > 1e-6));
      }
    }
  }
}

TEST_CASE("Krylov minimal polynomial") {
  // S^2 j = 0 for regular tournaments of this kind
  CHECK(krylov_main_polynomial(Tournament::parse("3:101")) == std::vector<std::string>{"0", "1"});
  CHECK(krylov_main_polynomial(paley_tournament(7)) == std::vector<std::string>{"0", "1"});
  // S^2 = I
  CHECK(krylov_main_polynomial(Tournament::parse("2:1")) == std::vector<std::string>{"-1", "1"});
  // degree equals the number of distinct main tau^2 values
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Tournament t = random_tournament(2 + static_cast<int>(rng() % 9), rng);
    const Spectrum s = seidel_spectrum(t);
    std::vector<double> squares;
    for (const auto& v : s.main_values()) {
      const double sq = v.tau * v.tau;
      if (std::none_of(squares.begin(), squares.end(),
                       [&](double x) { return std::abs(x - sq) < 1e-6; })) {
        squares.push_back(sq);
      }
    }
    CHECK(krylov_main_polynomial(t).size() == squares.size() + 1);
  }
}

TEST_CASE("tiny perturbation leaves multiplicities alone") {
  const Tournament p7 = paley_tournament(7);
  HermitianMatrix h = seidel_matrix(p7);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1e-12, 1e-12);
  for (int r = 0; r < 7; ++r) {
    for (int c = r + 1; c < 7; ++c) h.set(r, c, h(r, c) + Complex{u(rng), u(rng)});
  }
  const Spectrum a = seidel_spectrum(p7);
  const Spectrum b = group_spectrum(eigensystem(h));
  REQUIRE(a.distinct() == b.distinct());
  for (std::size_t i = 0; i < a.distinct(); ++i) CHECK(a.values[i].mult == b.values[i].mult);
}

TEST_CASE("characteristic polynomial identity") {
  const HermitianMatrix cyc = seidel_matrix(Tournament::parse("3:101"));
  const std::vector<double> xs{5.0};
  CHECK(char_identity_residual(cyc, 0.0, xs).max_residual == 0.0);
  CHECK(char_identity_residual(cyc, 1.0, xs).max_residual <= 1e-9);

  const std::vector<double> near{std::sqrt(3.0)};
  const auto skipped = char_identity_residual(cyc, 1.0, near);
  CHECK(skipped.skipped == 1);
  CHECK(skipped.evaluated == 0);

  // against determinants computed by Eigen
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> ua(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const HermitianMatrix h = seidel_matrix(random_tournament(n, rng));
    const double a = ua(rng);
    std::vector<double> samples;
    for (int k = 0; k < 20; ++k) samples.push_back(ua(rng) * 2.0);
    const auto res = char_identity_residual(h, a, samples);
    CHECK(res.max_residual <= 1e-8);
    CHECK(res.evaluated + res.skipped == 20);

    const EigenMatrix m = to_eigen(h.plus_all_ones(a));
    const EigenMatrix hh = to_eigen(h);
    const EigenMatrix id = EigenMatrix::Identity(n, n);
    const Spectrum s = group_spectrum(eigensystem(h));
    for (double x : samples) {
      bool close = false;
      for (const auto& v : s.values) close = close || std::abs(v.tau - x) < 1e-4;
      if (close) continue;
      const Complex pm = (m - x * id).determinant();
      const Complex ph = (hh - x * id).determinant();
      double sum = 0.0;
      for (const auto& v : s.values) sum += n * v.beta * v.beta / (v.tau - x);
      const Complex rhs = ph * (1.0 + a * sum);
      CHECK(std::abs(pm - rhs) / (1.0 + std::abs(ph)) <= 1e-8);
    }
  }
}

TEST_CASE("main eigenvalues interlace under a shift") {
  // 2-tournament, a = 1: S + J has eigenvalues 1 -+ sqrt2
  const HermitianMatrix two = seidel_matrix(Tournament::parse("2:1"));
  const auto v = shifted_main_spectrum(two, 1.0);
  REQUIRE(v.main_m.size() == 2);
  CHECK(v.main_m[0] == doctest::Approx(1.0 - std::sqrt(2.0)));
  CHECK(v.main_m[1] == doctest::Approx(1.0 + std::sqrt(2.0)));
  CHECK(v.ok());

  const auto neg = shifted_main_spectrum(two, -1.0);
  CHECK(neg.ok());
  CHECK(neg.main_m[0] < neg.main_h[0]);

  CHECK_THROWS_AS(shifted_main_spectrum(two, 0.0), InputError);

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ua(0.1, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const HermitianMatrix h = seidel_matrix(random_tournament(2 + static_cast<int>(rng() % 8), rng));
    const double a = (rng() & 1U) ? ua(rng) : -ua(rng);
    CHECK(shifted_main_spectrum(h, a).ok());
  }
}

TEST_CASE("non-main eigenvectors survive the shift") {
  const HermitianMatrix cyc = seidel_matrix(Tournament::parse("3:101"));
  const Eigensystem es = eigensystem(cyc);
  const HermitianMatrix m = cyc.plus_all_ones(2.5);
  for (int k : {0, 2}) {
    const auto v = es.vector(k);
    const auto mv = m.apply(v);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(mv[i] - es.values[k] * v[i]) < 1e-10);
  }
}
