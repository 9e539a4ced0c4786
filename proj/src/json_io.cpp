#include "veech/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace veech {

namespace {

std::vector<std::uint32_t> u32_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw std::invalid_argument(std::string("missing array '") + key + "'");
  std::vector<std::uint32_t> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > UINT32_MAX)
      throw std::invalid_argument(std::string("'") + key + "' must hold non-negative integers");
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

}  // namespace

Json to_json(const Origami& o) {
  return {{"degree", o.degree()}, {"sigma_x", o.sigma_x().images()}, {"sigma_y", o.sigma_y().images()}};
}

Origami origami_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("origami must be a JSON object");
  auto sx = u32_array(j, "sigma_x");
  auto sy = u32_array(j, "sigma_y");
  if (j.contains("degree")) {
    if (!j["degree"].is_number_integer() || j["degree"].get<std::int64_t>() != static_cast<std::int64_t>(sx.size()))
      throw Error(ErrorCode::LengthMismatch, "'degree' does not match sigma_x");
  }
  return Origami(std::move(sx), std::move(sy));
}

Json to_json(const MatZ& A) { return Json::array({Json::array({A.a, A.b}), Json::array({A.c, A.d})}); }

Json to_json(const CosetAction& a) {
  return {{"nodes", a.size()}, {"perm_S", a.perm_S.images()}, {"perm_T", a.perm_T.images()}};
}

Json to_json(const FiniteAction& a) {
  auto j = to_json(a.action);
  j["modulus"] = a.modulus;
  return j;
}

Json to_json(const OrbitGraph& g) { return to_json(g.action()); }

std::string to_dot(const OrbitGraph& g) {
  std::ostringstream os;
  os << "digraph orbit {\n";
  for (std::size_t i = 0; i < g.size(); ++i) os << "  " << i << ";\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  " << i << " -> " << g.s_edge[i] << " [label=\"S\"];\n";
    os << "  " << i << " -> " << g.t_edge[i] << " [label=\"T\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json to_json(const Stratum& s) {
  return {{"genus", s.genus}, {"zero_orders", s.zero_orders}, {"regular_vertices", s.regular_vertices}};
}

Json to_json(const FlavorReport& r) {
  return {{"flavor", r.flavor.to_string()},
          {"lift_totals", r.lift_totals},
          {"hyperelliptic", r.hyperelliptic},
          {"fixes_o_and_m", r.fixes_o_and_m},
          {"veech_index", r.veech_index}};
}

Json to_json(const TheoremReport& r) {
  Json flavors = Json::array();
  for (const auto& f : r.flavors) flavors.push_back(to_json(f));
  return {{"config", {{"n", r.n}, {"p", r.p}, {"q", r.q}}},
          {"flavor", r.flavor.to_string()},
          {"flavor_reports", flavors},
          {"computed_index", r.computed_index},
          {"predicted_index", r.predicted_index},
          {"pointed_equivalent", r.pointed_equivalent},
          {"index3_check", {{"stab_order", r.stab_order}, {"value", r.index3_value}, {"holds", r.index3_check}}},
          {"membership", {{"minus_identity_in", r.minus_identity_in}, {"T_not_in", r.t_not_in}}},
          {"pass", r.pass}};
}

Json to_json(const QuarticParams& p) { return Json::array({p.a.str(), p.b.str(), p.c.str()}); }

}  // namespace veech
