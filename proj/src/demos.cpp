#include <sstream>

#include "ftvs/scenario.hpp"

namespace ftvs {

using nlohmann::json;

namespace {

json delta(double s) { return json::array({1.0, s, s * s, s * s * s}); }

json euclidean_equivalence() {
  return json::parse(R"json({
    "name": "euclidean-equivalence",
    "domain": {"bounds": [[-3, 3], [-3, 3]], "resolution": 121},
    "norm": {"kind": "euclidean"},
    "checks": [
      {"kind": "base_equivalence", "alphas": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0], "radii": [0.5, 1, 2]},
      {"kind": "katsaras_axioms"},
      {"kind": "felbin_axioms"}
    ]
  })json");
}

json product_topology() {
  json points = json::array();
  for (double a : {-1.5, -0.75, 0.0, 0.5, 1.25}) {
    for (double b : {-1.0, -0.25, 0.5, 1.0}) points.push_back({a, b});
  }
  json doc = json::parse(R"json({
    "name": "product-topology",
    "domain": {"bounds": [[-2, 2], [-2, 2]], "resolution": 41},
    "scalar_domain": {"bounds": [-2, 2], "resolution": 81},
    "functionals": [[1, 0], [0, 1]],
    "sets": {
      "tri": {"op": "triangular", "a": -1, "b": 0, "c": 1, "domain": "scalar"},
      "band": {"op": "indicator", "shape": "box", "lo": [-0.5], "hi": [1], "domain": "scalar"}
    },
    "checks": [
      {"kind": "product_topology", "left": "tri", "right": "band"},
      {"kind": "weakly_lsc", "pairs": [{"functional": [1, 0], "set": "tri"}, {"functional": [0, 1], "set": "band"}]}
    ]
  })json");
  doc["checks"][0]["points"] = points;
  return doc;
}

json polynomial_deltas() {
  json functionals = json::array();
  for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) functionals.push_back(delta(s));
  json doc = json::parse(R"json({
    "name": "polynomial-deltas",
    "domain": {"bounds": [-1, 1], "dimension": 4, "resolution": 9},
    "sets": {
      "ball": {"op": "indicator", "shape": "ball", "radius": 1},
      "window": {"op": "indicator", "shape": "box", "lo": [-0.5], "hi": [0.5], "domain": "scalar"},
      "tent": {"op": "triangular", "a": -1, "b": 0, "c": 1, "domain": "scalar"}
    },
    "sequences": {
      "shrinking_square": {"kind": "reciprocal", "direction": [0, 0, 1, 0], "length": 1000}
    },
    "checks": [
      {"kind": "functional_values", "label": "delta_0.5(x^2)", "points": [[0, 0, 1, 0]], "expected": [0.25]},
      {"kind": "decompose", "label": "delta_0.25 in span", "expect": "span"},
      {"kind": "decompose", "label": "delta_0.5 outside three deltas", "expect": "witness"},
      {"kind": "weakly_lsc"},
      {"kind": "net_convergence", "sequence": "shrinking_square", "tail": 100},
      {"kind": "weakly_bounded", "set": "ball"}
    ]
  })json");
  doc["functionals"] = functionals;
  doc["checks"][0]["functionals"] = json::array({delta(0.5)});
  doc["checks"][1]["target"] = delta(0.25);
  doc["checks"][2]["target"] = delta(0.5);
  doc["checks"][2]["family"] = json::array({delta(-1.0), delta(0.0), delta(1.0)});
  doc["checks"][3]["pairs"] = json::array({{{"functional", delta(0.5)}, {"set", "window"}},
                                           {{"functional", delta(-0.5)}, {"set", "tent"}}});
  return doc;
}

json norm_comparison() {
  return json::parse(R"json({
    "name": "norm-comparison",
    "domain": {"bounds": [-2, 2], "resolution": 81},
    "scalar_domain": {"bounds": [-2, 2], "resolution": 81},
    "norm": {"kind": "star"},
    "sets": {
      "open_interval": {"op": "indicator", "shape": "box", "lo": [-1], "hi": [1]},
      "closed_interval": {"op": "indicator", "shape": "box", "lo": [-1], "hi": [1], "open": false},
      "tent": {"op": "triangular", "a": -1, "b": 0, "c": 1},
      "half_constant": {"op": "constant", "value": 0.5},
      "origin": {"op": "singleton"},
      "capped_interval": {"op": "meet", "args": ["open_interval", {"op": "constant", "value": 0.7}]}
    },
    "checks": [
      {"kind": "norm_comparison",
       "sets": ["open_interval", "closed_interval", "tent", "half_constant", "origin", "capped_interval"]}
    ]
  })json");
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"euclidean-equivalence", "product-topology", "polynomial-deltas",
                                                 "norm-comparison"};
  return names;
}

json demo_scenario(const std::string& name) {
  if (name == "euclidean-equivalence") return euclidean_equivalence();
  if (name == "product-topology") return product_topology();
  if (name == "polynomial-deltas") return polynomial_deltas();
  if (name == "norm-comparison") return norm_comparison();
  std::ostringstream msg;
  msg << "unknown demo '" << name << "' (";
  for (std::size_t i = 0; i < demo_names().size(); ++i) msg << (i ? ", " : "") << demo_names()[i];
  msg << ")";
  throw ConfigError(msg.str());
}

RunReport run_demo(const std::string& name) { return run_checks(parse_scenario(demo_scenario(name))); }

}  // namespace ftvs
