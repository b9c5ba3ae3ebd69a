#include "tourney/json.hpp"

namespace tourney {

namespace {

Json spectrum_entries(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& v : s.values) {
    arr.push_back({{"tau", v.tau}, {"mult", v.mult}, {"beta", v.beta}, {"main", v.main}});
  }
  return arr;
}

}  // namespace

Json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const Spectrum& s) { return {{"eigenvalues", spectrum_entries(s)}}; }

Json to_json(const RepReport& r) {
  Json j;
  j["n"] = r.n;
  j["type"] = static_cast<int>(r.type.type);
  j["rep_dim"] = r.rep_dim;
  j["alpha"] = to_json(r.alpha);
  if (r.type.c1) j["c1"] = *r.type.c1;
  if (r.type.c2) j["c2"] = *r.type.c2;
  j["spectrum"] = spectrum_entries(r.spectrum);
  return j;
}

Json to_json(const RepReport& r, const Embedding& e) {
  Json j = to_json(r);
  j["dim"] = e.dim;
  Json vectors = Json::array();
  for (const auto& v : e.vectors) {
    Json row = Json::array();
    for (const Complex& z : v) row.push_back(to_json(z));
    vectors.push_back(std::move(row));
  }
  j["vectors"] = std::move(vectors);
  return j;
}

Json to_json(const Certificate& c) {
  switch (c.kind) {
    case CertificateKind::DRT:
      return {{"kind", "DRT"}, {"params", {c.drt->n, c.drt->k, c.drt->lambda}}};
    case CertificateKind::SkewHadamard:
      return {{"kind", "SkewHadamard"}};
    case CertificateKind::DrtMinusVertex:
      return {{"kind", "DrtMinusVertex"}};
    case CertificateKind::BlockForm:
      return {{"kind", "BlockForm"},
              {"k", c.block->k},
              {"l", c.block->l},
              {"partition", {c.block->partition[0], c.block->partition[1]}}};
    case CertificateKind::None:
      break;
  }
  return {{"kind", "None"}};
}

Json to_json(const TightnessReport& r) {
  Json j;
  j["n"] = r.n;
  j["rep_dim"] = r.rep_dim;
  j["bound"] = r.bound;
  j["tight"] = r.is_tight;
  j["certificate"] = to_json(r.certificate);
  if (r.n2d_case) j["n2d_case"] = *r.n2d_case;
  return j;
}

Json to_json(const TightCount& c) {
  return {{"d", c.d},
          {"count", c.count},
          {"drt_order", c.drt_order},
          {"catalog_trusted", c.catalog_trusted}};
}

Json to_json(const Tolerances& t) {
  return {{"eig_tol", t.eig_cluster},
          {"beta_tol", t.beta_zero},
          {"exact_band", {t.exact_band_low, t.exact_band_high}},
          {"rank_tol", t.rank_zero},
          {"embedding_tol", t.embedding}};
}

}  // namespace tourney
