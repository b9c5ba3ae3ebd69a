#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "tourney/canonical.hpp"
#include "tourney/errors.hpp"
#include "tourney/verify.hpp"

using namespace tourney;

namespace {

// Smallest arc string over all n! labelings; the reference for isomorphism.
std::string brute_key(const Tournament& t) {
  std::vector<int> perm(static_cast<std::size_t>(t.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    for (int i = 0; i < t.order(); ++i) {
      for (int j = i + 1; j < t.order(); ++j) key.push_back(t.arc(perm[i], perm[j]) ? '1' : '0');
    }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Tournament from_index(int n, unsigned long long pattern) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(pair_count(n)));
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = static_cast<std::uint8_t>((pattern >> k) & 1U);
  return build(n, bits);
}

Tournament random_tournament(int n, std::mt19937_64& rng) {
  return from_index(n, rng());
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("3-vertex keys") {
  const Tournament cyc = Tournament::parse("3:101");
  const Tournament trans = Tournament::parse("3:111");
  CHECK(canonical_form(cyc) != canonical_form(trans));
  std::vector<int> perm{0, 1, 2};
  do {
    CHECK(canonical_form(cyc.relabeled(perm)) == canonical_form(cyc));
    CHECK(canonical_form(trans.relabeled(perm)) == canonical_form(trans));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("all relabelings of matrix (c) share one key") {
  const Tournament c = order_four_examples()[2].tournament;
  const CanonicalForm key = canonical_form(c);
  std::vector<int> perm{0, 1, 2, 3};
  int count = 0;
  do {
    CHECK(canonical_form(c.relabeled(perm)) == key);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(count == 24);
}

TEST_CASE("canonical_form decides isomorphism like brute force") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Tournament a = random_tournament(n, rng);
    const Tournament b = random_tournament(n, rng);
    CHECK((canonical_form(a) == canonical_form(b)) == (brute_key(a) == brute_key(b)));
  }
}

TEST_CASE("canonical_form is invariant under relabeling") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Tournament t = random_tournament(n, rng);
    const Tournament r = t.relabeled(random_perm(n, rng));
    CHECK(canonical_form(t) == canonical_form(r));
  }
  for (int q : {7, 11, 19}) {
    const Tournament p = paley_tournament(q);
    CHECK(canonical_form(p) == canonical_form(p.relabeled(random_perm(q, rng))));
  }
}

TEST_CASE("representative and labeling agree with the key") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Tournament t = random_tournament(2 + static_cast<int>(rng() % 10), rng);
    const CanonicalForm key = canonical_form(t);
    CHECK(canonical_form(key.representative()) == key);
    CHECK(t.relabeled(canonical_labeling(t)) == key.representative());
  }
}

TEST_CASE("enumeration counts") {
  const int expected[] = {1, 1, 2, 4, 12, 56, 456};
  for (int n = 1; n <= 7; ++n) {
    const auto classes = enumerate_tournaments(n);
    CHECK(static_cast<int>(classes.size()) == expected[n - 1]);
    std::set<CanonicalForm> keys;
    for (const auto& t : classes) {
      CHECK(t.order() == n);
      keys.insert(canonical_form(t));
    }
    CHECK(keys.size() == classes.size());
  }
  CHECK_THROWS_AS(enumerate_tournaments(0), InputError);
  CHECK_THROWS_AS(enumerate_tournaments(8), InputError);
}

TEST_CASE("enumeration matches brute-force dedupe of every bit pattern for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> brute;
    for (unsigned long long p = 0; p < (1ULL << pair_count(n)); ++p) brute.insert(brute_key(from_index(n, p)));
    std::set<std::string> enumerated;
    for (const auto& t : enumerate_tournaments(n)) enumerated.insert(brute_key(t));
    CHECK(enumerated == brute);
  }
}

TEST_CASE("the four order-4 classes are (a)-(d)") {
  std::set<CanonicalForm> listed;
  for (const auto& ex : order_four_examples()) listed.insert(canonical_form(ex.tournament));
  std::set<CanonicalForm> enumerated;
  for (const auto& t : enumerate_tournaments(4)) enumerated.insert(canonical_form(t));
  CHECK(listed == enumerated);
}

TEST_CASE("switching classes") {
  CHECK(switching_class(Tournament(1)).size() == 1);
  CHECK(switching_class(dominated_extension(paley_tournament(3))).size() == 2);
  CHECK(switching_class(dominated_extension(paley_tournament(7))).size() == 4);

  // all 2^n subsets, not only those containing vertex 0
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Tournament t = random_tournament(n, rng);
    std::set<CanonicalForm> full;
    for (VertexSet x = 0; x < (VertexSet{1} << n); ++x) full.insert(canonical_form(switched(t, x)));
    CHECK(switching_class(t) == full);
  }
}
