#include <doctest.h>

#include <numeric>
#include <random>

#include "tourney/canonical.hpp"
#include "tourney/codes.hpp"
#include "tourney/errors.hpp"
#include "tourney/verify.hpp"

using namespace tourney;

namespace {

// (I + A - A^T)(I + A - A^T)^T computed entry by entry.
bool hadamard_oracle(const Tournament& t) {
  const int n = t.order();
  auto h = [&](int r, int c) { return r == c ? 1 : (t.arc(r, c) ? 1 : -1); };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int dot = 0;
      for (int k = 0; k < n; ++k) dot += h(r, k) * h(c, k);
      if (dot != (r == c ? n : 0)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("doubly regular parameters") {
  CHECK(is_doubly_regular(paley_tournament(3)) == DrtParams{3, 1, 0});
  CHECK(is_doubly_regular(paley_tournament(7)) == DrtParams{7, 3, 1});
  CHECK(is_doubly_regular(paley_tournament(11)) == DrtParams{11, 5, 2});
  CHECK_FALSE(is_doubly_regular(order_four_examples()[0].tournament).has_value());
  CHECK_FALSE(is_doubly_regular(Tournament::parse("2:1")).has_value());
  CHECK_FALSE(is_doubly_regular(Tournament(1)).has_value());
  // regular but not doubly regular: some 5-vertex regular class
  for (const Tournament& t : enumerate_tournaments(5)) CHECK_FALSE(is_doubly_regular(t).has_value());
}

TEST_CASE("skew Hadamard") {
  const auto ex = order_four_examples();
  CHECK_FALSE(skew_hadamard_check(ex[0].tournament));
  CHECK(skew_hadamard_check(ex[1].tournament));
  CHECK_FALSE(skew_hadamard_check(ex[2].tournament));
  CHECK(skew_hadamard_check(ex[3].tournament));
  CHECK(skew_hadamard_check(Tournament::parse("2:1")));
  for (int n = 3; n <= 7; ++n) {
    for (const Tournament& t : enumerate_tournaments(n)) CHECK(skew_hadamard_check(t) == hadamard_oracle(t));
  }
  CHECK(skew_hadamard_check(dominated_extension(paley_tournament(7))));
}

TEST_CASE("block form") {
  const Tournament p3 = paley_tournament(3);
  const auto cert = block_form_check(d_optimal_block(p3, p3));
  REQUIRE(cert.has_value());
  CHECK(cert->k == 3);
  CHECK(cert->l == 2);
  CHECK(cert->partition[0].size() == 3);
  CHECK(cert->partition[1].size() == 3);

  const Tournament p7 = paley_tournament(7);
  const auto big = block_form_check(d_optimal_block(p7, p7));
  REQUIRE(big.has_value());
  CHECK(big->k == 7);
  CHECK(big->l == 6);

  std::string why;
  CHECK_FALSE(block_form_check(delete_vertex(p7, 0), &why).has_value());
  CHECK_FALSE(why.empty());

  std::string zero;
  CHECK_FALSE(block_form_check(Tournament::parse("2:1"), &zero).has_value());
  CHECK(zero.find("l = 0") != std::string::npos);

  CHECK_THROWS_AS(block_form_check(p7), InputError);
}

TEST_CASE("DRT minus a vertex") {
  const Tournament p7 = paley_tournament(7);
  for (int v = 0; v < 7; ++v) {
    const auto verdict = drt_minus_vertex_check(delete_vertex(p7, v));
    CHECK(verdict.pass());
    CHECK(verdict.spectral_match);
    REQUIRE(verdict.extension.has_value());
    CHECK(canonical_form(*verdict.extension) == canonical_form(p7));
  }
  CHECK(drt_minus_vertex_check(delete_vertex(paley_tournament(11), 4)).pass());
  CHECK(drt_minus_vertex_check(delete_vertex(paley_tournament(3), 1)).pass());

  const Tournament p3 = paley_tournament(3);
  CHECK_FALSE(drt_minus_vertex_check(d_optimal_block(p3, p3)).pass());
  CHECK_FALSE(drt_minus_vertex_check(order_four_examples()[1].tournament).pass());
  CHECK_THROWS_AS(drt_minus_vertex_check(p7), InputError);

  for (int n : {4, 6}) {
    for (const Tournament& t : enumerate_tournaments(n)) {
      const auto verdict = drt_minus_vertex_check(t);
      CHECK(verdict.spectral_match == verdict.extension_found);
    }
  }
}

TEST_CASE("classify_code") {
  const TightnessReport p7 = classify_code(paley_tournament(7));
  CHECK(p7.rep_dim == 3);
  CHECK(p7.bound == 7);
  CHECK(p7.is_tight);
  CHECK(p7.certificate.kind == CertificateKind::DRT);
  CHECK(p7.certificate.drt == DrtParams{7, 3, 1});

  const TightnessReport d = classify_code(order_four_examples()[3].tournament);
  CHECK(d.is_tight);
  CHECK(d.certificate.kind == CertificateKind::SkewHadamard);

  const Tournament p3 = paley_tournament(3);
  const TightnessReport blk = classify_code(d_optimal_block(p3, p3));
  CHECK_FALSE(blk.is_tight);
  CHECK(blk.rep_dim == 3);
  CHECK(blk.n2d_case == 4);
  CHECK(blk.certificate.kind == CertificateKind::BlockForm);
  REQUIRE(blk.certificate.block.has_value());
  // (n - 3, 2) is the skew D-optimal pattern
  CHECK(blk.certificate.block->k == blk.n - 3);
  CHECK(blk.certificate.block->l == 2);

  const TightnessReport minus = classify_code(delete_vertex(paley_tournament(7), 0));
  CHECK(minus.n2d_case == 2);
  CHECK(minus.certificate.kind == CertificateKind::DrtMinusVertex);

  const TightnessReport a = classify_code(order_four_examples()[0].tournament);
  CHECK_FALSE(a.is_tight);
  CHECK(a.certificate.kind == CertificateKind::None);

  CHECK_THROWS_AS(classify_code(Tournament::parse("2:1")), InputError);
}

TEST_CASE("n = 2d with d odd: the first block is regular of odd order") {
  for (const Tournament& t : enumerate_tournaments(6)) {
    const TightnessReport r = classify_code(t);
    if (r.rep_dim != 3) continue;
    if (r.certificate.kind != CertificateKind::BlockForm) continue;
    const auto& part = r.certificate.block->partition[0];
    CHECK(part.size() % 2 == 1);
    int degree = -1;
    for (int u : part) {
      int out = 0;
      for (int v : part) out += (u != v && t.arc(u, v)) ? 1 : 0;
      if (degree < 0) degree = out;
      CHECK(out == degree);
    }
  }
}

TEST_CASE("no spectrum {(-t)^(d-1), 0^2, t^(d-1)} at n = 2, 4, 6") {
  for (int n : {2, 4, 6}) {
    const Tou1Sweep sweep = lemma_tou1_sweep(n);
    CHECK(sweep.pass());
    CHECK(sweep.classes_checked == static_cast<int>(enumerate_tournaments(n).size()));
  }
  CHECK_THROWS_AS(lemma_tou1_sweep(3), InputError);
  CHECK_THROWS_AS(lemma_tou1_sweep(8), InputError);
}

TEST_CASE("DRT catalogs") {
  const DrtCatalog c3 = drt_catalog(3);
  REQUIRE(c3.members.size() == 1);
  CHECK(canonical_form(c3.members[0]) == canonical_form(paley_tournament(3)));

  const DrtCatalog c7 = drt_catalog(7);
  REQUIRE(c7.members.size() == 1);
  CHECK(canonical_form(c7.members[0]) == canonical_form(paley_tournament(7)));
  CHECK_FALSE(c7.catalog_trusted);

  CHECK(drt_catalog(5).members.empty());
  CHECK(drt_catalog(9).members.empty());

  const DrtCatalog c11 = drt_catalog(11);
  CHECK(c11.members.size() == 1);
  CHECK(c11.catalog_trusted);

  CHECK_THROWS_AS(drt_catalog(15), InputError);

  // supplied catalog: relabeled duplicates collapse, other orders are ignored
  const Tournament p19 = paley_tournament(19);
  std::vector<int> perm(19);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(1);
  std::shuffle(perm.begin(), perm.end(), rng);
  const std::vector<Tournament> supplied{p19, p19.relabeled(perm), paley_tournament(7)};
  CHECK(drt_catalog(19, &supplied).members.size() == 1);

  const std::vector<Tournament> broken{switched(p19, 0b11)};
  CHECK_THROWS_AS(drt_catalog(19, &broken), InputError);
}

TEST_CASE("tight code counts") {
  for (int d = 1; d <= 6; ++d) {
    const TightCount c = count_tight_codes(d);
    CAPTURE(d);
    CHECK(c.count == kTightCodeCounts[d - 1]);
    CHECK(c.drt_order == required_drt_order(d));
  }
  CHECK(count_tight_codes(5).catalog_trusted);
  CHECK(required_drt_order(7) == 15);
  CHECK(required_drt_order(8) == 15);
  CHECK_THROWS_AS(count_tight_codes(0), InputError);

  try {
    count_tight_codes(7);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("15") != std::string::npos);
  }

  const std::vector<Tournament> catalog{paley_tournament(19)};
  CHECK(count_tight_codes(9, &catalog).count == 1);
}

TEST_CASE("tight codes at even d come from switching a dominated extension") {
  // every member of the switching class of the extended 3-cycle is tight
  for (const auto& key : switching_class(dominated_extension(paley_tournament(3)))) {
    const TightnessReport r = classify_code(key.representative());
    CHECK(r.is_tight);
    CHECK(r.certificate.kind == CertificateKind::SkewHadamard);
  }
}
