#include "rkstab/serialize.hpp"

namespace rkstab {

using nlohmann::json;

json to_json(const Poly& p) { return json(std::vector<double>(p.coeffs().begin(), p.coeffs().end())); }

json to_json(const BoundReport& r) {
  json j;
  j["name"] = r.name;
  j["m"] = r.m;
  j["n"] = r.n;
  j["value"] = r.value;
  j["kind"] = to_string(r.kind);
  j["source"] = r.source;
  j["root_equation"] = r.root_equation;
  j["equation_coeffs"] = r.equation_coeffs;
  j["aux"] = json::object();
  for (const auto& [k, v] : r.aux) j["aux"][k] = v;
  return j;
}

json to_json(const ThresholdBracket& b) { return {{"lo", b.lo}, {"hi", b.hi}, {"rule", b.rule}}; }

json to_json(const QuadRule& q) {
  return {{"m", q.m}, {"p", q.p}, {"nodes", q.nodes}, {"weights", q.weights}};
}

json to_json(const OptimalResult& r) {
  json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["geometry"] = to_string(r.geometry);
  if (r.damping) j["damping"] = {{"eta", r.damping->eta}, {"delta", r.damping->delta}};
  j["radius"] = r.radius;
  j["poly"] = to_json(r.poly);
  j["basis"] = r.basis;
  j["basis_coeffs"] = r.basis_coeffs;
  j["bisection_width"] = r.bisection_width;
  j["bracket"] = {r.bracket_lo, r.bracket_hi};
  j["max_modulus"] = r.max_modulus;
  j["feasibility_checks"] = r.feasibility_checks;
  json cert = json::object();
  if (r.geometry == Geometry::Threshold) {
    cert["nonneg_basis_coeffs"] = r.nonneg_coeffs;
  } else if (r.geometry == Geometry::Disc) {
    json pts = json::array();
    for (const Complex& z : r.touch_points) pts.push_back({z.real(), z.imag()});
    cert["touch_points"] = pts;
  }
  j["certificate"] = cert;
  return j;
}

}  // namespace rkstab
