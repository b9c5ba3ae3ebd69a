#pragma once

#include <json.hpp>

#include "tourney/codes.hpp"
#include "tourney/representation.hpp"
#include "tourney/spectral.hpp"
#include "tourney/tolerances.hpp"

namespace tourney {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
/// {"eigenvalues": [{"tau", "mult", "beta", "main"}, ...]}
Json to_json(const Spectrum& s);
/// {"n", "type", "rep_dim", "alpha", "c1"?, "c2"?, "spectrum": [...]}
Json to_json(const RepReport& r);
/// RepReport fields plus "dim" and "vectors".
Json to_json(const RepReport& r, const Embedding& e);
Json to_json(const Certificate& c);
Json to_json(const TightnessReport& r);
Json to_json(const TightCount& c);
Json to_json(const Tolerances& t);

}  // namespace tourney
