#pragma once

#include <string>

#include <json.hpp>

#include "veech/modular.hpp"
#include "veech/origami.hpp"
#include "veech/quartic.hpp"
#include "veech/sl2.hpp"
#include "veech/torus_covers.hpp"

namespace veech {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

/// {"degree", "sigma_x", "sigma_y"}
Json to_json(const Origami& o);
/// Throws std::invalid_argument on shape errors, Error on invalid permutation data.
Origami origami_from_json(const Json& j);

Json to_json(const MatZ& A);  // [[a, b], [c, d]]
Json to_json(const CosetAction& a);  // {"nodes", "perm_S", "perm_T"}
Json to_json(const FiniteAction& a);
Json to_json(const OrbitGraph& g);
std::string to_dot(const OrbitGraph& g);

Json to_json(const Stratum& s);
Json to_json(const FlavorReport& r);
Json to_json(const TheoremReport& r);

Json to_json(const QuarticParams& p);

/// Coefficients keyed "i,j,k" by exponents of x, y, z, values as ring strings.
template <class R>
Json to_json(const Form<R>& f) {
  Json j = Json::object();
  for (const auto& [m, c] : f.terms())
    j[std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2])] = c.to_string();
  return j;
}

}  // namespace veech
