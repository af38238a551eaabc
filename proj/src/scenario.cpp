#include "ftvs/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ftvs/algebra.hpp"
#include "ftvs/katsaras.hpp"
#include "ftvs/properties.hpp"

namespace ftvs {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError((path.empty() ? std::string("<root>") : path) + ": " + what);
}

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

std::vector<double> as_numbers(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_number(j[i], index_path(path, i)));
  return out;
}

std::vector<std::vector<double>> as_rows(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of arrays");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_numbers(j[i], index_path(path, i)));
  return out;
}

/// Reads one JSON object, remembering which keys were consumed so that
/// leftovers can be rejected, and echoes every value (defaults included).
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) fail(path_, "expected an object");
  }

  const std::string& path() const { return path_; }
  std::string sub(const std::string& key) const { return join_path(path_, key); }
  bool has(const std::string& key) const { return j_.contains(key); }

  const json& at(const std::string& key) {
    seen_.insert(key);
    if (!j_.contains(key)) fail(sub(key), "missing required field");
    return j_.at(key);
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  double number(const std::string& key) {
    const double v = as_number(at(key), sub(key));
    out[key] = v;
    return v;
  }
  double number(const std::string& key, double fallback) {
    const json* j = find(key);
    const double v = j ? as_number(*j, sub(key)) : fallback;
    out[key] = v;
    return v;
  }

  std::vector<double> numbers(const std::string& key) {
    std::vector<double> v = as_numbers(at(key), sub(key));
    out[key] = v;
    return v;
  }
  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) {
    const json* j = find(key);
    std::vector<double> v = j ? as_numbers(*j, sub(key)) : std::move(fallback);
    out[key] = v;
    return v;
  }

  std::vector<std::vector<double>> rows(const std::string& key) {
    std::vector<std::vector<double>> v = as_rows(at(key), sub(key));
    out[key] = v;
    return v;
  }

  std::string text(const std::string& key) {
    const json& j = at(key);
    if (!j.is_string()) fail(sub(key), "expected a string");
    out[key] = j;
    return j.get<std::string>();
  }
  std::string text(const std::string& key, const std::string& fallback) {
    const json* j = find(key);
    if (j && !j->is_string()) fail(sub(key), "expected a string");
    std::string v = j ? j->get<std::string>() : fallback;
    out[key] = v;
    return v;
  }

  bool flag(const std::string& key, bool fallback) {
    const json* j = find(key);
    if (j && !j->is_boolean()) fail(sub(key), "expected true or false");
    const bool v = j ? j->get<bool>() : fallback;
    out[key] = v;
    return v;
  }

  std::size_t count(const std::string& key, std::size_t fallback) {
    const json* j = find(key);
    if (j && !(j->is_number_integer() || j->is_number_unsigned())) fail(sub(key), "expected a non-negative integer");
    if (j && j->get<long long>() < 0) fail(sub(key), "expected a non-negative integer");
    const std::size_t v = j ? j->get<std::size_t>() : fallback;
    out[key] = v;
    return v;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(sub(it.key()), "unknown field");
    }
  }

  json out = json::object();

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void require_levels(const std::vector<double>& v, const std::string& path, bool allow_zero = false) {
  for (double a : v) {
    if (!((allow_zero ? a >= 0.0 : a > 0.0) && a <= 1.0)) fail(path, allow_zero ? "values must lie in [0,1]" : "levels must lie in (0,1]");
  }
}

void require_positive(const std::vector<double>& v, const std::string& path) {
  for (double a : v) {
    if (!(a > 0.0)) fail(path, "values must be positive");
  }
}

void require_nonempty(const std::vector<double>& v, const std::string& path) {
  if (v.empty()) fail(path, "must not be empty");
}

void require_dimension(std::size_t got, std::size_t want, const std::string& path) {
  if (got != want) fail(path, "expected dimension " + std::to_string(want) + ", got " + std::to_string(got));
}

Domain parse_domain(const json& j, const std::string& path, json& echo) {
  ObjectReader r(j, path);
  std::vector<std::pair<double, double>> bounds;
  const json& b = r.at("bounds");
  if (b.is_array() && b.size() == 2 && b[0].is_number()) {
    const auto v = as_numbers(b, r.sub("bounds"));
    bounds.emplace_back(v[0], v[1]);
  } else {
    const auto rows = as_rows(b, r.sub("bounds"));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != 2) fail(index_path(r.sub("bounds"), i), "expected [lo, hi]");
      bounds.emplace_back(rows[i][0], rows[i][1]);
    }
  }
  std::size_t dim = bounds.size();
  if (r.has("dimension")) {
    dim = r.count("dimension", 0);
    if (bounds.size() == 1) {
      bounds.assign(dim, bounds.front());
    } else if (bounds.size() != dim) {
      fail(r.sub("bounds"), "expected one [lo, hi] pair or one per dimension");
    }
  }
  if (dim == 0) fail(r.sub("dimension"), "must be at least 1");
  std::vector<std::size_t> resolution;
  // Negative counts map to 0 so the minimum-size check below rejects them.
  auto points_of = [](const json& v) { return std::size_t(std::max<long long>(0, v.get<long long>())); };
  const json* res = r.find("resolution");
  if (!res) {
    resolution.assign(dim, 41);
  } else if (res->is_number_integer()) {
    resolution.assign(dim, points_of(*res));
  } else if (res->is_array()) {
    for (std::size_t i = 0; i < res->size(); ++i) {
      if (!(*res)[i].is_number_integer()) fail(index_path(r.sub("resolution"), i), "expected an integer");
      resolution.push_back(points_of((*res)[i]));
    }
    if (resolution.size() != dim) fail(r.sub("resolution"), "expected one entry per dimension");
  } else {
    fail(r.sub("resolution"), "expected an integer or an array of integers");
  }
  const bool bounded = r.flag("bounded", true);
  r.finish();
  std::vector<Axis> axes;
  json bounds_echo = json::array();
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(bounds[i].first < bounds[i].second)) fail(r.sub("bounds"), "each axis needs lo < hi");
    if (resolution[i] < 2) fail(r.sub("resolution"), "each axis needs at least 2 points");
    axes.push_back(Axis{bounds[i].first, bounds[i].second, resolution[i]});
    bounds_echo.push_back({bounds[i].first, bounds[i].second});
  }
  echo = {{"dimension", dim}, {"bounds", bounds_echo}, {"resolution", resolution}, {"bounded", bounded}};
  return Domain(std::move(axes), bounded);
}

FelbinNorm parse_norm(const json& j, const std::string& path, std::size_t dim, json& echo) {
  ObjectReader r(j, path);
  const std::string kind = r.text("kind", "euclidean");
  std::vector<double> levels = r.numbers("levels", default_alpha_levels());
  require_levels(levels, r.sub("levels"));
  if (!std::is_sorted(levels.begin(), levels.end()) || levels.empty() || levels.back() != 1.0) {
    fail(r.sub("levels"), "levels must be increasing and end at 1");
  }
  std::optional<FelbinNorm> norm;
  if (kind == "euclidean") {
    norm = euclidean_felbin_norm(dim, levels);
  } else if (kind == "star") {
    if (dim != 1) fail(r.sub("kind"), "the star norm lives on the scalar line (dimension 1)");
    norm = star_norm_on_K(levels);
  } else if (kind == "crisp") {
    double p = 2.0;
    if (const json* pj = r.find("p")) {
      if (pj->is_string() && pj->get<std::string>() == "inf") {
        p = std::numeric_limits<double>::infinity();
        r.out["p"] = "inf";
      } else {
        p = as_number(*pj, r.sub("p"));
        if (!(p >= 1.0)) fail(r.sub("p"), "expected p >= 1 or \"inf\"");
        r.out["p"] = p;
      }
    } else {
      r.out["p"] = p;
    }
    std::vector<double> weights = r.numbers("weights", std::vector<double>(dim, 1.0));
    require_dimension(weights.size(), dim, r.sub("weights"));
    require_positive(weights, r.sub("weights"));
    const double bias = r.number("bias", 0.0);
    if (bias < 0.0) fail(r.sub("bias"), "must be non-negative");
    auto gauge = [p, weights, bias](std::span<const double> x) {
      double acc = 0.0;
      if (std::isinf(p)) {
        for (std::size_t i = 0; i < x.size(); ++i) acc = std::max(acc, weights[i] * std::abs(x[i]));
        return acc + bias;
      }
      for (std::size_t i = 0; i < x.size(); ++i) acc += std::pow(weights[i] * std::abs(x[i]), p);
      return std::pow(acc, 1.0 / p) + bias;
    };
    norm = crisp_felbin_norm(bias > 0.0 ? "crisp (biased)" : "crisp", dim, gauge, levels);
  } else {
    fail(r.sub("kind"), "unknown norm kind '" + kind + "' (euclidean, star, crisp)");
  }
  r.finish();
  echo = r.out;
  return *norm;
}

AffineMap parse_map(const json& j, const std::string& path, json& echo) {
  ObjectReader r(j, path);
  AffineMap map;
  if (r.has("functional")) {
    const auto c = r.numbers("functional");
    if (c.empty()) fail(r.sub("functional"), "must not be empty");
    map = AffineMap::functional(c);
    if (r.has("offset")) {
      const auto off = r.numbers("offset");
      require_dimension(off.size(), 1, r.sub("offset"));
      map.offset = off;
    }
  } else {
    const auto rows = r.rows("matrix");
    if (rows.empty() || rows.front().empty()) fail(r.sub("matrix"), "must not be empty");
    std::vector<double> flat;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.front().size()) fail(index_path(r.sub("matrix"), i), "rows differ in length");
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    std::vector<double> off = r.numbers("offset", std::vector<double>(rows.size(), 0.0));
    require_dimension(off.size(), rows.size(), r.sub("offset"));
    map = AffineMap(rows.size(), rows.front().size(), std::move(flat), std::move(off));
  }
  r.finish();
  echo = r.out;
  return map;
}

std::vector<Point> parse_points(ObjectReader& r, const std::string& key, std::size_t dim) {
  const auto rows = r.rows(key);
  for (std::size_t i = 0; i < rows.size(); ++i) require_dimension(rows[i].size(), dim, index_path(r.sub(key), i));
  return rows;
}

// Everything expressions and checks need while the scenario is being built.
class Builder {
 public:
  explicit Builder(Scenario& sc, const json* set_defs) : sc_(sc), defs_(set_defs) {}

  const Domain& domain(const std::string& name, const std::string& path) const {
    if (name == "space") return sc_.space;
    if (name == "scalar") return sc_.scalar;
    auto it = sc_.domains.find(name);
    if (it == sc_.domains.end()) fail(path, "undefined domain '" + name + "'");
    return it->second;
  }

  const FelbinNorm& norm(std::size_t dim, const std::string& path) const {
    if (sc_.norm->dimension() != dim) {
      fail(path, "scenario norm has dimension " + std::to_string(sc_.norm->dimension()) + ", needed " +
                     std::to_string(dim));
    }
    return *sc_.norm;
  }

  FuzzySet named(const std::string& name, const std::string& path) {
    if (auto it = sc_.sets.find(name); it != sc_.sets.end()) return it->second;
    if (!defs_ || !defs_->contains(name)) fail(path, "undefined fuzzy set '" + name + "'");
    if (resolving_.count(name)) fail(path, "cyclic reference through '" + name + "'");
    resolving_.insert(name);
    json echo;
    FuzzySet mu = expression(defs_->at(name), join_path("sets", name), "space", echo);
    resolving_.erase(name);
    set_echo_[name] = echo;
    sc_.sets.emplace(name, mu);
    return mu;
  }

  json set_echo() const { return set_echo_; }

  FuzzySet expression(const json& j, const std::string& path, const std::string& default_domain, json& echo) {
    try {
      return expression_unchecked(j, path, default_domain, echo);
    } catch (const ArgumentError& e) {
      fail(path, e.what());
    }
  }

  Scenario& scenario() { return sc_; }

 private:
  FuzzySet expression_unchecked(const json& j, const std::string& path, const std::string& default_domain,
                                json& echo) {
    if (j.is_string()) {
      echo = j;
      return named(j.get<std::string>(), path);
    }
    ObjectReader r(j, path);
    const std::string op = r.text("op");
    auto own_domain = [&](const std::string& fallback) -> const Domain& {
      return domain(r.text("domain", fallback), r.sub("domain"));
    };
    auto child = [&](const std::string& key, const std::string& dflt) {
      json e;
      FuzzySet mu = expression(r.at(key), r.sub(key), dflt, e);
      r.out[key] = e;
      return mu;
    };
    std::optional<FuzzySet> result;
    if (op == "constant") {
      const Domain& d = own_domain(default_domain);
      const double v = r.number("value");
      if (v < 0.0 || v > 1.0) fail(r.sub("value"), "membership must lie in [0,1]");
      result = constant(d, v);
    } else if (op == "singleton") {
      const Domain& d = own_domain(default_domain);
      const double v = r.number("value", 1.0);
      if (v < 0.0 || v > 1.0) fail(r.sub("value"), "membership must lie in [0,1]");
      result = singleton(d, v);
    } else if (op == "indicator") {
      const Domain& d = own_domain(default_domain);
      const std::string shape = r.text("shape", "ball");
      const bool open = r.flag("open", true);
      Predicate p;
      if (shape == "ball") {
        const auto c = r.numbers("center", std::vector<double>(d.dimension(), 0.0));
        require_dimension(c.size(), d.dimension(), r.sub("center"));
        const double radius = r.number("radius", 1.0);
        if (radius < 0.0) fail(r.sub("radius"), "must be non-negative");
        p = Predicate::ball(c, radius, open);
      } else if (shape == "box") {
        const auto lo = r.numbers("lo");
        const auto hi = r.numbers("hi");
        require_dimension(lo.size(), d.dimension(), r.sub("lo"));
        require_dimension(hi.size(), d.dimension(), r.sub("hi"));
        p = Predicate::box(lo, hi, open);
      } else if (shape == "halfspace") {
        const auto n = r.numbers("normal");
        require_dimension(n.size(), d.dimension(), r.sub("normal"));
        p = Predicate::halfspace(n, r.number("offset", 0.0), open);
      } else {
        fail(r.sub("shape"), "unknown shape '" + shape + "' (ball, box, halfspace)");
      }
      result = indicator(d, std::move(p));
    } else if (op == "triangular") {
      const Domain& d = own_domain(default_domain == "space" && sc_.space.dimension() != 1 ? "scalar" : default_domain);
      const double a = r.number("a"), b = r.number("b"), c = r.number("c");
      if (!(a <= b && b <= c)) fail(path, "triangular needs a <= b <= c");
      result = triangular(d, a, b, c);
    } else if (op == "grid") {
      const Domain& d = own_domain(default_domain);
      auto v = r.numbers("values");
      require_dimension(v.size(), d.size(), r.sub("values"));
      require_levels(v, r.sub("values"), true);
      result = grid_sample(d, std::move(v));
    } else if (op == "meet" || op == "join") {
      const json& args = r.at("args");
      if (!args.is_array() || args.empty()) fail(r.sub("args"), "expected a non-empty array of expressions");
      std::vector<FuzzySet> parts;
      json echoes = json::array();
      for (std::size_t i = 0; i < args.size(); ++i) {
        json e;
        parts.push_back(expression(args[i], index_path(r.sub("args"), i), default_domain, e));
        echoes.push_back(e);
      }
      r.out["args"] = echoes;
      result = op == "meet" ? meet(parts) : join(parts);
    } else if (op == "scale") {
      const double t = r.number("t");
      result = scalar_mul(t, child("arg", default_domain));
    } else if (op == "translate") {
      const auto shift = r.numbers("shift");
      result = translate(shift, child("arg", default_domain));
    } else if (op == "pullback") {
      json me;
      const AffineMap map = parse_map(r.at("map"), r.sub("map"), me);
      r.out["map"] = me;
      const Domain& d = own_domain(default_domain);
      require_dimension(map.cols, d.dimension(), r.sub("map"));
      const FuzzySet target = child("arg", map.rows == 1 ? "scalar" : default_domain);
      require_dimension(target.domain().dimension(), map.rows, r.sub("arg"));
      result = preimage(map, target, d);
    } else if (op == "image") {
      json me;
      const AffineMap map = parse_map(r.at("map"), r.sub("map"), me);
      r.out["map"] = me;
      const FuzzySet source = child("arg", default_domain);
      require_dimension(source.domain().dimension(), map.cols, r.sub("arg"));
      const Domain& d = own_domain(map.rows == 1 ? "scalar" : default_domain);
      require_dimension(d.dimension(), map.rows, r.sub("domain"));
      result = image(map, source, d);
    } else if (op == "sum") {
      result = add(child("left", default_domain), child("right", default_domain));
    } else if (op == "interval_sum") {
      result = interval_sum(child("left", "scalar"), child("right", "scalar"));
    } else if (op == "product") {
      result = product(child("left", "scalar"), child("right", "scalar"));
    } else if (op == "rho") {
      const Domain& d = own_domain(default_domain);
      result = katsaras_from_felbin(norm(d.dimension(), path), d).rho;
    } else if (op == "sphere") {
      const Domain& d = own_domain(default_domain);
      const double alpha = r.number("alpha");
      const auto c = r.numbers("center", std::vector<double>(d.dimension(), 0.0));
      require_dimension(c.size(), d.dimension(), r.sub("center"));
      const double radius = r.number("radius");
      result = alpha_sphere(norm(d.dimension(), path), alpha, c, radius, d);
    } else {
      fail(r.sub("op"), "unknown expression op '" + op + "'");
    }
    r.finish();
    echo = r.out;
    return *result;
  }

  Scenario& sc_;
  const json* defs_;
  std::set<std::string> resolving_;
  json set_echo_ = json::object();
};

// ---------------------------------------------------------------------------
// Checks

using Reports = std::vector<CheckReport>;
using Runner = std::function<Reports()>;
using CheckParser = Runner (*)(ObjectReader&, Builder&);

FuzzySet set_param(ObjectReader& r, Builder& b, const std::string& key, const std::string& dflt = "space") {
  json e;
  FuzzySet mu = b.expression(r.at(key), r.sub(key), dflt, e);
  r.out[key] = e;
  return mu;
}

std::vector<FuzzySet> set_list(ObjectReader& r, Builder& b, const std::string& key, const std::string& dflt = "space") {
  const json& arr = r.at(key);
  if (!arr.is_array() || arr.empty()) fail(r.sub(key), "expected a non-empty array of set expressions");
  std::vector<FuzzySet> out;
  json echoes = json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    json e;
    out.push_back(b.expression(arr[i], index_path(r.sub(key), i), dflt, e));
    echoes.push_back(e);
  }
  r.out[key] = echoes;
  return out;
}

std::vector<std::string> set_names(ObjectReader& r, const std::string& key) {
  const json& arr = r.at(key);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arr.size(); ++i) names.push_back(arr[i].is_string() ? arr[i].get<std::string>() : "#" + std::to_string(i));
  return names;
}

std::optional<FelbinNorm> norm_override(ObjectReader& r, std::size_t dim) {
  if (!r.has("norm")) return std::nullopt;
  json e;
  FelbinNorm n = parse_norm(r.at("norm"), r.sub("norm"), dim, e);
  r.out["norm"] = e;
  return n;
}

FelbinNorm norm_for(ObjectReader& r, Builder& b, std::size_t dim) {
  if (auto n = norm_override(r, dim)) return *n;
  return b.norm(dim, r.path());
}

std::vector<Point> default_felbin_vectors(std::size_t n) {
  std::vector<Point> v;
  Point e1(n, 0.0), en(n, 0.0), half(n, 0.5), alt(n, 0.0);
  e1[0] = 1.0;
  en[n - 1] = -2.0;
  for (std::size_t i = 0; i < n; ++i) alt[i] = i % 2 == 0 ? 1.0 : -1.0;
  v.push_back(e1);
  v.push_back(en);
  v.push_back(half);
  v.push_back(alt);
  Point mixed(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) mixed[i] = 0.25 * double(i + 1);
  v.push_back(mixed);
  return v;
}

Runner parse_felbin_axioms(ObjectReader& r, Builder& b) {
  std::size_t n = b.scenario().space.dimension();
  if (r.has("vectors")) {
    const auto rows = as_rows(r.at("vectors"), r.sub("vectors"));
    if (rows.empty()) fail(r.sub("vectors"), "must not be empty");
    n = rows.front().size();
  }
  const FelbinNorm norm = norm_for(r, b, n);
  std::vector<Point> vectors = r.has("vectors") ? parse_points(r, "vectors", n) : default_felbin_vectors(n);
  if (!r.has("vectors")) r.out["vectors"] = vectors;
  const auto offsets = r.numbers("offsets", {0.0, 0.5, 1.0, 2.0});
  const auto scalars = r.numbers("scalars", default_homogeneity_scalars());
  return [=] { return Reports{felbin_axioms_check(norm, vectors, offsets, scalars)}; };
}

Runner parse_katsaras_axioms(ObjectReader& r, Builder& b) {
  const Domain& d = b.domain(r.text("domain", "space"), r.sub("domain"));
  const FelbinNorm norm = norm_for(r, b, d.dimension());
  const auto dilations = r.numbers("dilations", default_dilation_grid());
  require_positive(dilations, r.sub("dilations"));
  const KatsarasNorm rho = katsaras_from_felbin(norm, d);
  return [=] { return katsaras_axioms_check(rho, dilations); };
}

Runner parse_base_equivalence(ObjectReader& r, Builder& b) {
  const Domain& d = b.domain(r.text("domain", "space"), r.sub("domain"));
  const FelbinNorm norm = norm_for(r, b, d.dimension());
  const auto alphas = r.numbers("alphas", default_level_grid());
  require_levels(alphas, r.sub("alphas"));
  const auto radii = r.numbers("radii", {0.5, 1.0, 2.0});
  require_positive(radii, r.sub("radii"));
  const KatsarasNorm rho = katsaras_from_felbin(norm, d);
  return [=] { return Reports{base_equivalence_check(norm, rho, alphas, radii)}; };
}

Runner parse_convex(ObjectReader& r, Builder& b) {
  const FuzzySet mu = set_param(r, b, "set");
  const auto ts = r.numbers("ts", default_unit_grid());
  for (double t : ts) {
    if (t < 0.0 || t > 1.0) fail(r.sub("ts"), "values must lie in [0,1]");
  }
  return [=] { return Reports{is_convex(mu, ts)}; };
}

Runner parse_balanced(ObjectReader& r, Builder& b) {
  const FuzzySet mu = set_param(r, b, "set");
  const auto ts = r.numbers("ts", default_balance_grid());
  for (double t : ts) {
    if (std::abs(t) > 1.0) fail(r.sub("ts"), "values must satisfy |t| <= 1");
  }
  return [=] { return Reports{is_balanced(mu, ts)}; };
}

Runner parse_absorbing(ObjectReader& r, Builder& b) {
  const FuzzySet mu = set_param(r, b, "set");
  const auto ts = r.numbers("ts", default_dilation_grid());
  require_positive(ts, r.sub("ts"));
  return [=] { return Reports{is_absorbing(mu, ts)}; };
}

Runner parse_dilation_vanishing(ObjectReader& r, Builder& b) {
  const FuzzySet mu = set_param(r, b, "set");
  const auto ts = r.numbers("ts", default_dilation_grid());
  require_positive(ts, r.sub("ts"));
  return [=] { return Reports{is_dilation_vanishing(mu, ts)}; };
}

Runner parse_absorbs(ObjectReader& r, Builder& b) {
  const FuzzySet mu = set_param(r, b, "set");
  const FuzzySet eta = set_param(r, b, "absorbed");
  const auto thetas = r.numbers("thetas", default_level_grid());
  require_levels(thetas, r.sub("thetas"));
  const auto ts = r.numbers("ts", default_dilation_grid());
  require_positive(ts, r.sub("ts"));
  return [=] { return Reports{absorbs(mu, eta, thetas, ts)}; };
}

Runner parse_bounded(ObjectReader& r, Builder& b) {
  const FuzzySet mu = set_param(r, b, "set");
  std::vector<FuzzySet> catalog;
  if (r.has("neighborhoods")) {
    catalog = set_list(r, b, "neighborhoods");
  } else {
    const FelbinNorm norm = norm_for(r, b, mu.domain().dimension());
    const auto cat_thetas = r.numbers("catalog_thetas", {0.5, 1.0});
    require_levels(cat_thetas, r.sub("catalog_thetas"));
    const auto cat_ts = r.numbers("catalog_ts", {0.25, 1.0});
    require_positive(cat_ts, r.sub("catalog_ts"));
    const KatsarasNorm rho = katsaras_from_felbin(norm, mu.domain());
    for (double th : cat_thetas) {
      for (double t : cat_ts) catalog.push_back(base_neighborhood(th, t, rho));
    }
  }
  const auto thetas = r.numbers("thetas", default_level_grid());
  require_levels(thetas, r.sub("thetas"));
  const auto ts = r.numbers("ts", default_dilation_grid());
  require_positive(ts, r.sub("ts"));
  return [=] { return Reports{is_bounded(mu, catalog, thetas, ts)}; };
}

Runner parse_lsc(ObjectReader& r, Builder& b) {
  const FuzzySet mu = set_param(r, b, "set");
  return [=] { return Reports{is_lsc(mu)}; };
}

Runner parse_neighborhood(ObjectReader& r, Builder& b) {
  const FuzzySet mu = set_param(r, b, "set");
  const auto x = r.numbers("point");
  require_dimension(x.size(), mu.domain().dimension(), r.sub("point"));
  const FelbinNorm norm = norm_for(r, b, mu.domain().dimension());
  const auto thetas = r.numbers("thetas", default_level_grid());
  require_levels(thetas, r.sub("thetas"));
  const auto ts = r.numbers("ts", default_dilation_grid());
  require_positive(ts, r.sub("ts"));
  const KatsarasNorm rho = katsaras_from_felbin(norm, mu.domain());
  return [=] { return Reports{is_neighborhood_of(mu, x, rho, thetas, ts)}; };
}

Runner parse_linearly_open(ObjectReader& r, Builder& b) {
  const FuzzySet mu = set_param(r, b, "set");
  const FelbinNorm norm = norm_for(r, b, mu.domain().dimension());
  const auto alphas = r.numbers("alphas", default_level_grid());
  require_levels(alphas, r.sub("alphas"));
  const auto radii = r.numbers("radii", default_radius_grid());
  require_positive(radii, r.sub("radii"));
  return [=] { return Reports{is_linearly_open(mu, norm, alphas, radii)}; };
}

Runner parse_topology_axioms(ObjectReader& r, Builder& b) {
  const auto family = set_list(r, b, "sets");
  const auto constants = r.numbers("constants", {0.0, 1.0});
  require_levels(constants, r.sub("constants"), true);
  return [=] { return Reports{topology_axioms_check(family, constants)}; };
}

Runner parse_hausdorff(ObjectReader& r, Builder& b) {
  const auto family = set_list(r, b, "sets");
  const auto x = r.numbers("x");
  const auto y = r.numbers("y");
  require_dimension(x.size(), family.front().domain().dimension(), r.sub("x"));
  require_dimension(y.size(), family.front().domain().dimension(), r.sub("y"));
  if (x == y) fail(r.sub("y"), "x and y must differ");
  return [=] { return Reports{hausdorff_check(family, x, y)}; };
}

const std::vector<LinearFunctional>& catalog_functionals(Builder& b, const std::string& path) {
  const auto& fs = b.scenario().functionals;
  if (fs.empty()) fail(path, "this check needs a non-empty functional catalog");
  return fs;
}

Runner parse_net_convergence(ObjectReader& r, Builder& b) {
  const Scenario& sc = b.scenario();
  const std::string name = r.text("sequence");
  auto it = sc.sequences.find(name);
  if (it == sc.sequences.end()) fail(r.sub("sequence"), "undefined sequence '" + name + "'");
  const std::vector<Point> seq = it->second;
  const auto limit = r.numbers("limit", std::vector<double>(sc.space.dimension(), 0.0));
  require_dimension(limit.size(), sc.space.dimension(), r.sub("limit"));
  const std::size_t tail = r.count("tail", std::min<std::size_t>(100, seq.size() / 10));
  if (tail >= seq.size()) fail(r.sub("tail"), "tail index must be smaller than the sequence length");
  const auto thetas = r.numbers("thetas", {0.5, 1.0});
  require_levels(thetas, r.sub("thetas"));
  const auto ts = r.numbers("ts", {0.1, 0.5, 1.0});
  require_positive(ts, r.sub("ts"));
  require_nonempty(ts, r.sub("ts"));
  const double tol = r.number("scalar_tolerance", *std::min_element(ts.begin(), ts.end()));
  const auto functionals = catalog_functionals(b, r.path());
  const auto catalog = weak_base_catalog(functionals, thetas, ts, sc.scalar);
  return [=] { return Reports{net_converges_weakly(seq, limit, functionals, catalog, tail, tol)}; };
}

Runner parse_decompose(ObjectReader& r, Builder& b) {
  const LinearFunctional target(r.numbers("target"));
  std::vector<LinearFunctional> family;
  if (r.has("family")) {
    for (auto& row : r.rows("family")) family.emplace_back(row);
  } else {
    family = b.scenario().functionals;
    json rows = json::array();
    for (const auto& f : family) rows.push_back(f.coefficients);
    r.out["family"] = rows;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_dimension(family[i].dimension(), target.dimension(), index_path(r.sub("family"), i));
  }
  const std::string expect = r.text("expect", "any");
  if (expect != "any" && expect != "span" && expect != "witness") fail(r.sub("expect"), "expected any, span or witness");
  return [=] {
    CheckReport report("decompose_or_witness", kResidualTolerance);
    const DecomposeResult d = decompose_or_witness(target, family);
    report.max_violation = d.residual;
    report.metric("in_span", d.in_span() ? 1.0 : 0.0);
    if (d.in_span()) {
      for (std::size_t i = 0; i < d.coefficients->size(); ++i) report.metric("lambda_" + std::to_string(i), (*d.coefficients)[i]);
    } else {
      report.witness = *d.witness;
    }
    report.decide();
    if ((expect == "span" && !d.in_span()) || (expect == "witness" && d.in_span())) {
      report.verdict = Verdict::Fail;
      report.note = "expected the " + expect + " branch";
    }
    return Reports{report};
  };
}

Runner parse_hausdorff_witness(ObjectReader& r, Builder& b) {
  const Scenario& sc = b.scenario();
  const auto x = r.numbers("x");
  const auto y = r.numbers("y");
  require_dimension(x.size(), sc.space.dimension(), r.sub("x"));
  require_dimension(y.size(), sc.space.dimension(), r.sub("y"));
  DualPairScenario pair{sc.space, catalog_functionals(b, r.path()), sc.scalar};
  return [=] {
    const HausdorffWitness w = hausdorff_witness(x, y, pair);
    CheckReport direct = hausdorff_witness_check(w, x, y);
    const FuzzySet pulled[] = {preimage(w.functional.as_map(), w.beta, pair.space),
                               preimage(w.functional.as_map(), w.eta, pair.space)};
    CheckReport cross = hausdorff_check(pulled, x, y);
    cross.append_note("pullbacks of the witness intervals");
    return Reports{direct, cross};
  };
}

Runner parse_weakly_lsc(ObjectReader& r, Builder& b) {
  const json& arr = r.at("pairs");
  if (!arr.is_array() || arr.empty()) fail(r.sub("pairs"), "expected a non-empty array");
  std::vector<WeakNeighborhood::Pair> pairs;
  json echoes = json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    ObjectReader pr(arr[i], index_path(r.sub("pairs"), i));
    LinearFunctional f(pr.numbers("functional"));
    require_dimension(f.dimension(), b.scenario().space.dimension(), pr.sub("functional"));
    FuzzySet mu = set_param(pr, b, "set", "scalar");
    require_dimension(mu.domain().dimension(), 1, pr.sub("set"));
    pr.finish();
    echoes.push_back(pr.out);
    pairs.emplace_back(std::move(f), std::move(mu));
  }
  r.out["pairs"] = echoes;
  const WeakNeighborhood v(std::move(pairs));
  const Domain space = b.scenario().space;
  return [=] { return Reports{weakly_lsc_check(v, space)}; };
}

Runner parse_weakly_continuous(ObjectReader& r, Builder& b) {
  const Scenario& sc = b.scenario();
  const auto rows = r.rows("operator");
  if (rows.empty()) fail(r.sub("operator"), "must not be empty");
  for (std::size_t i = 0; i < rows.size(); ++i) require_dimension(rows[i].size(), sc.space.dimension(), index_path(r.sub("operator"), i));
  const linalg::Matrix t = linalg::Matrix::from_rows(rows, sc.space.dimension());
  std::vector<LinearFunctional> target;
  for (auto& row : r.rows("target_functionals")) {
    require_dimension(row.size(), rows.size(), r.sub("target_functionals"));
    target.emplace_back(row);
  }
  DualPairScenario e{sc.space, sc.functionals, sc.scalar};
  DualPairScenario f{Domain::cube(rows.size(), -1.0, 1.0, 3), target, sc.scalar};
  return [=] { return Reports{weakly_continuous_check(t, e, f)}; };
}

Runner parse_weak_seminorm(ObjectReader& r, Builder& b) {
  const FuzzySet mu = set_param(r, b, "set");
  const LinearFunctional f(r.numbers("functional"));
  require_dimension(f.dimension(), mu.domain().dimension(), r.sub("functional"));
  const auto scales = r.numbers("scales", {-1.0, -0.5, -0.1, 0.1, 0.5, 1.0});
  for (double s : scales) {
    if (!(s != 0.0 && std::abs(s) <= 1.0)) fail(r.sub("scales"), "values must satisfy 0 < |t| <= 1");
  }
  const Domain scalar = b.scenario().scalar;
  return [=] { return Reports{weak_seminorm_check(mu, f, scalar, scales)}; };
}

Runner parse_weakly_bounded(ObjectReader& r, Builder& b) {
  const Scenario& sc = b.scenario();
  const FuzzySet mu = set_param(r, b, "set");
  require_dimension(mu.domain().dimension(), sc.space.dimension(), r.sub("set"));
  const auto thetas = r.numbers("catalog_thetas", {0.5, 1.0});
  require_levels(thetas, r.sub("catalog_thetas"));
  const auto ts = r.numbers("catalog_ts", {0.1, 0.5, 1.0});
  require_positive(ts, r.sub("catalog_ts"));
  DualPairScenario pair{sc.space, catalog_functionals(b, r.path()), sc.scalar};
  std::vector<FuzzySet> catalog;
  const FuzzySet rho = scalar_unit_ball(sc.scalar);
  for (double th : thetas) {
    for (double t : ts) catalog.push_back(meet(constant(sc.scalar, th), scalar_mul(t, rho)));
  }
  return [=] { return Reports{weakly_bounded_check(mu, pair, catalog)}; };
}

Runner parse_product_topology(ObjectReader& r, Builder& b) {
  const FuzzySet left = set_param(r, b, "left", "scalar");
  const FuzzySet right = set_param(r, b, "right", "scalar");
  const auto points = parse_points(r, "points", 2);
  if (points.empty()) fail(r.sub("points"), "must not be empty");
  return [=] { return Reports{product_topology_check(left, right, points)}; };
}

Runner parse_functional_values(ObjectReader& r, Builder& b) {
  const std::size_t n = b.scenario().space.dimension();
  const auto fs = r.rows("functionals");
  for (std::size_t i = 0; i < fs.size(); ++i) require_dimension(fs[i].size(), n, index_path(r.sub("functionals"), i));
  const auto points = parse_points(r, "points", n);
  std::optional<std::vector<double>> expected;
  if (r.has("expected")) {
    expected = r.numbers("expected");
    require_dimension(expected->size(), fs.size() * points.size(), r.sub("expected"));
  }
  return [=] {
    CheckReport report("functional_values", 0.0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const LinearFunctional f(fs[i]);
      for (std::size_t j = 0; j < points.size(); ++j, ++k) {
        const double v = f(points[j]);
        report.metric("f" + std::to_string(i) + "_x" + std::to_string(j), v);
        if (expected) report.record(std::abs(v - (*expected)[k]), points[j], {{"functional", double(i)}});
      }
    }
    if (!expected) report.note = "values only; no expectations given";
    return Reports{report.decide()};
  };
}

Runner parse_norm_comparison(ObjectReader& r, Builder& b) {
  const auto sets = set_list(r, b, "sets", "scalar");
  const auto names = set_names(r, "sets");
  for (std::size_t i = 0; i < sets.size(); ++i) require_dimension(sets[i].domain().dimension(), 1, index_path(r.sub("sets"), i));
  const auto alphas = r.numbers("alphas", default_level_grid());
  require_levels(alphas, r.sub("alphas"));
  const auto radii = r.numbers("radii", default_radius_grid());
  require_positive(radii, r.sub("radii"));
  return [=] {
    CheckReport report("norm_comparison", 0.0);
    const FelbinNorm usual = euclidean_felbin_norm(1);
    const FelbinNorm star = star_norm_on_K();
    std::size_t agree = 0, disagree = 0;
    std::string separated;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const bool a = is_linearly_open(sets[i], usual, alphas, radii).passed();
      const bool s = is_linearly_open(sets[i], star, alphas, radii).passed();
      report.metric(names[i] + ".usual_open", a ? 1.0 : 0.0);
      report.metric(names[i] + ".star_open", s ? 1.0 : 0.0);
      if (a == s) {
        ++agree;
      } else {
        ++disagree;
        separated += (separated.empty() ? "" : ", ") + names[i];
      }
    }
    report.metric("agreements", double(agree));
    report.metric("disagreements", double(disagree));
    report.note = "sweep of linear openness under the usual and star norms on K; ";
    report.note += disagree ? "separating sets: " + separated : "no separating set in this catalog";
    return Reports{report};
  };
}

const std::vector<std::pair<std::string, CheckParser>>& registry() {
  static const std::vector<std::pair<std::string, CheckParser>> r = {
      {"felbin_axioms", parse_felbin_axioms},
      {"katsaras_axioms", parse_katsaras_axioms},
      {"base_equivalence", parse_base_equivalence},
      {"convex", parse_convex},
      {"balanced", parse_balanced},
      {"absorbing", parse_absorbing},
      {"dilation_vanishing", parse_dilation_vanishing},
      {"absorbs", parse_absorbs},
      {"bounded", parse_bounded},
      {"lsc", parse_lsc},
      {"neighborhood", parse_neighborhood},
      {"linearly_open", parse_linearly_open},
      {"topology_axioms", parse_topology_axioms},
      {"hausdorff", parse_hausdorff},
      {"net_convergence", parse_net_convergence},
      {"decompose", parse_decompose},
      {"hausdorff_witness", parse_hausdorff_witness},
      {"weakly_lsc", parse_weakly_lsc},
      {"weakly_continuous", parse_weakly_continuous},
      {"weak_seminorm", parse_weak_seminorm},
      {"weakly_bounded", parse_weakly_bounded},
      {"product_topology", parse_product_topology},
      {"functional_values", parse_functional_values},
      {"norm_comparison", parse_norm_comparison},
  };
  return r;
}

std::vector<Point> parse_sequence(const json& j, const std::string& path, std::size_t dim, json& echo) {
  ObjectReader r(j, path);
  const std::string kind = r.text("kind");
  std::vector<Point> seq;
  if (kind == "points") {
    seq = parse_points(r, "points", dim);
  } else {
    const std::size_t length = r.count("length", 1000);
    if (length == 0) fail(r.sub("length"), "must be positive");
    if (kind == "reciprocal" || kind == "alternating") {
      const auto dir = r.numbers("direction");
      require_dimension(dir.size(), dim, r.sub("direction"));
      const auto base = r.numbers("base", std::vector<double>(dim, 0.0));
      require_dimension(base.size(), dim, r.sub("base"));
      for (std::size_t j = 1; j <= length; ++j) {
        Point p(dim);
        const double c = kind == "reciprocal" ? 1.0 / double(j) : (j % 2 == 0 ? 1.0 : -1.0);
        for (std::size_t k = 0; k < dim; ++k) p[k] = base[k] + c * dir[k];
        seq.push_back(std::move(p));
      }
    } else if (kind == "constant") {
      const auto pt = r.numbers("point");
      require_dimension(pt.size(), dim, r.sub("point"));
      seq.assign(length, pt);
    } else {
      fail(r.sub("kind"), "unknown sequence kind '" + kind + "' (points, reciprocal, alternating, constant)");
    }
  }
  if (seq.empty()) fail(path, "sequence must not be empty");
  r.finish();
  echo = r.out;
  return seq;
}

}  // namespace

Scenario parse_scenario(const json& doc) {
  Scenario sc;
  ObjectReader root(doc, "");
  sc.name = root.text("name", "scenario");
  json e;
  sc.space = parse_domain(root.at("domain"), "domain", e);
  root.out["domain"] = e;
  if (root.has("scalar_domain")) {
    sc.scalar = parse_domain(root.at("scalar_domain"), "scalar_domain", e);
  } else {
    sc.scalar = parse_domain(json{{"bounds", {-5.0, 5.0}}, {"resolution", 201}}, "scalar_domain", e);
  }
  if (sc.scalar.dimension() != 1) fail("scalar_domain", "must be one-dimensional");
  root.out["scalar_domain"] = e;

  json domains_echo = json::object();
  if (const json* ds = root.find("domains")) {
    if (!ds->is_object()) fail("domains", "expected an object of named domains");
    for (auto it = ds->begin(); it != ds->end(); ++it) {
      if (it.key() == "space" || it.key() == "scalar") fail(join_path("domains", it.key()), "reserved domain name");
      sc.domains.emplace(it.key(), parse_domain(it.value(), join_path("domains", it.key()), e));
      domains_echo[it.key()] = e;
    }
  }
  root.out["domains"] = domains_echo;

  sc.norm = parse_norm(root.has("norm") ? root.at("norm") : json::object(), "norm", sc.space.dimension(), e);
  root.out["norm"] = e;

  json fechoes = json::array();
  if (const json* fs = root.find("functionals")) {
    const auto rows = as_rows(*fs, "functionals");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require_dimension(rows[i].size(), sc.space.dimension(), index_path("functionals", i));
      sc.functionals.emplace_back(rows[i]);
      fechoes.push_back(rows[i]);
    }
  }
  root.out["functionals"] = fechoes;
  try {
    DualPairScenario{sc.space, sc.functionals, sc.scalar}.validate();
  } catch (const ArgumentError& ex) {
    fail("functionals", ex.what());
  }

  json sechoes = json::object();
  if (const json* ss = root.find("sequences")) {
    if (!ss->is_object()) fail("sequences", "expected an object of named sequences");
    for (auto it = ss->begin(); it != ss->end(); ++it) {
      sc.sequences.emplace(it.key(), parse_sequence(it.value(), join_path("sequences", it.key()), sc.space.dimension(), e));
      sechoes[it.key()] = e;
    }
  }
  root.out["sequences"] = sechoes;

  const json* defs = root.find("sets");
  if (defs && !defs->is_object()) fail("sets", "expected an object of named set expressions");
  Builder builder(sc, defs);
  if (defs) {
    for (auto it = defs->begin(); it != defs->end(); ++it) builder.named(it.key(), join_path("sets", it.key()));
  }
  root.out["sets"] = builder.set_echo();

  const json& checks = root.at("checks");
  if (!checks.is_array() || checks.empty()) fail("checks", "expected a non-empty array of checks");
  json cechoes = json::array();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string path = index_path("checks", i);
    ObjectReader r(checks[i], path);
    const std::string kind = r.text("kind");
    const auto& reg = registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& p) { return p.first == kind; });
    if (it == reg.end()) fail(r.sub("kind"), "unknown check kind '" + kind + "'");
    const std::string label = r.text("label", kind);
    Runner run;
    try {
      run = it->second(r, builder);
    } catch (const ArgumentError& ex) {
      fail(path, ex.what());
    }
    r.finish();
    cechoes.push_back(r.out);
    sc.checks.push_back(CheckSpec{kind, label, std::move(run)});
  }
  root.out["checks"] = cechoes;
  root.finish();
  sc.resolved = root.out;
  return sc;
}

namespace {

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("parse error: ") + e.what());
  }
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) { return parse_scenario(parse_document(text)); }

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc = parse_document(buf.str());
  // An unnamed file takes its name from the file stem.
  if (doc.is_object() && !doc.contains("name")) doc["name"] = std::filesystem::path(path).stem().string();
  return parse_scenario(doc);
}

FuzzySet parse_set_expression(const json& domain_spec, const json& expression) {
  Scenario sc;
  json e;
  sc.space = parse_domain(domain_spec, "domain", e);
  sc.scalar = sc.space.dimension() == 1 ? sc.space : Domain::cube(1, -5.0, 5.0, 201);
  sc.norm = euclidean_felbin_norm(sc.space.dimension());
  Builder b(sc, nullptr);
  return b.expression(expression, "expression", "space", e);
}

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> kinds = [] {
    std::vector<std::string> k;
    for (const auto& [name, parser] : registry()) k.push_back(name);
    return k;
  }();
  return kinds;
}

}  // namespace ftvs
