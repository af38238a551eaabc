#include "ftvs/weak.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ftvs/algebra.hpp"
#include "ftvs/properties.hpp"

namespace ftvs {

double LinearFunctional::operator()(std::span<const double> x) const {
  if (x.size() != coefficients.size()) throw ArgumentError("functional applied to a point of wrong dimension");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += coefficients[i] * x[i];
  return acc;
}

bool LinearFunctional::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](double c) { return c == 0.0; });
}

LinearFunctional LinearFunctional::scaled(double t) const {
  LinearFunctional out = *this;
  for (double& c : out.coefficients) c *= t;
  return out;
}

void DualPairScenario::validate() const {
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    const LinearFunctional& f = functionals[i];
    if (f.dimension() != space.dimension()) {
      throw ArgumentError("functional " + std::to_string(i) + " has dimension " + std::to_string(f.dimension()) +
                          ", space has " + std::to_string(space.dimension()));
    }
    if (f.is_zero()) throw ArgumentError("functional " + std::to_string(i) + " is zero");
  }
  if (scalar.dimension() != 1) throw ArgumentError("scalar domain must be one-dimensional");
}

bool DualPairScenario::separates(std::span<const double> x, std::span<const double> y) const {
  return std::any_of(functionals.begin(), functionals.end(),
                     [&](const LinearFunctional& f) { return std::abs(f(x) - f(y)) > 1e-12; });
}

WeakNeighborhood::WeakNeighborhood(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw ArgumentError("weak neighborhood needs at least one pair");
  const std::size_t n = pairs_.front().first.dimension();
  for (const auto& [f, mu] : pairs_) {
    if (f.dimension() != n) throw ArgumentError("weak neighborhood functionals differ in dimension");
    if (mu.domain().dimension() != 1) throw ArgumentError("weak neighborhood scalar sets must live on K");
  }
}

FuzzySet WeakNeighborhood::as_fuzzy_set(const Domain& space) const {
  std::vector<FuzzySet> parts;
  parts.reserve(pairs_.size());
  for (const auto& [f, mu] : pairs_) parts.push_back(preimage(f.as_map(), mu, space));
  return meet(parts);
}

double weak_eval(const WeakNeighborhood& v, std::span<const double> x) {
  if (x.size() != v.dimension()) throw ArgumentError("weak_eval: dimension mismatch");
  double m = 1.0;
  for (const auto& [f, mu] : v.pairs()) {
    const double s = f(x);
    m = std::min(m, mu(std::span<const double>(&s, 1)));
  }
  return m;
}

FuzzySet scalar_unit_ball(const Domain& scalar) { return indicator(scalar, Predicate::box({-1.0}, {1.0}, true)); }

WeakNeighborhood weak_base_neighborhood(std::span<const LinearFunctional> functionals, std::span<const double> thetas,
                                        std::span<const double> ts, const Domain& scalar) {
  if (functionals.size() != thetas.size() || functionals.size() != ts.size()) {
    throw ArgumentError("weak_base_neighborhood: functionals, thetas and ts must have equal length");
  }
  const FuzzySet rho = scalar_unit_ball(scalar);
  std::vector<WeakNeighborhood::Pair> pairs;
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    if (!(thetas[i] > 0.0 && thetas[i] <= 1.0)) throw ArgumentError("weak_base_neighborhood: theta must lie in (0,1]");
    if (!(ts[i] > 0.0)) throw ArgumentError("weak_base_neighborhood: t must be positive");
    pairs.emplace_back(functionals[i], meet(constant(scalar, thetas[i]), scalar_mul(ts[i], rho)));
  }
  return WeakNeighborhood(std::move(pairs));
}

std::vector<WeakNeighborhood> weak_base_catalog(std::span<const LinearFunctional> functionals,
                                                std::span<const double> thetas, std::span<const double> ts,
                                                const Domain& scalar) {
  std::vector<WeakNeighborhood> out;
  for (const LinearFunctional& f : functionals) {
    for (double theta : thetas) {
      for (double t : ts) {
        const LinearFunctional fs[] = {f};
        const double th[] = {theta};
        const double tt[] = {t};
        out.push_back(weak_base_neighborhood(fs, th, tt, scalar));
      }
    }
  }
  return out;
}

CheckReport net_converges_weakly(std::span<const Point> sequence, std::span<const double> limit,
                                 std::span<const LinearFunctional> functionals,
                                 std::span<const WeakNeighborhood> catalog, std::size_t tail,
                                 double scalar_tolerance) {
  if (sequence.empty()) throw ArgumentError("net_converges_weakly: empty sequence");
  if (tail >= sequence.size()) throw ArgumentError("net_converges_weakly: tail index beyond the sequence");
  if (catalog.empty()) throw ArgumentError("net_converges_weakly: empty neighborhood catalog");
  const std::size_t n = limit.size();
  std::vector<Point> offsets;
  for (std::size_t j = tail; j < sequence.size(); ++j) {
    if (sequence[j].size() != n) throw ArgumentError("net_converges_weakly: sequence entry of wrong dimension");
    Point d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = sequence[j][k] - limit[k];
    offsets.push_back(std::move(d));
  }

  CheckReport report("net_converges_weakly", 0.0);
  const Point zero(n, 0.0);
  bool catalog_pass = true;
  double catalog_gap = 0.0;
  for (std::size_t c = 0; c < catalog.size(); ++c) {
    const double top = weak_eval(catalog[c], zero);
    double low = std::numeric_limits<double>::infinity();
    std::size_t low_at = 0;
    for (std::size_t j = 0; j < offsets.size(); ++j) {
      const double v = weak_eval(catalog[c], offsets[j]);
      if (v < low) {
        low = v;
        low_at = j;
      }
    }
    for (int k = 1; k <= 9; ++k) {
      const double r = top * k / 10.0;
      if (!(low > r)) {
        catalog_pass = false;
        if (r - low >= catalog_gap) {
          catalog_gap = r - low;
          report.witness = sequence[tail + low_at];
          report.parameters = {{"neighborhood", double(c)}, {"r", r}, {"index", double(tail + low_at)}};
        }
      }
    }
  }

  bool scalar_pass = true;
  double worst_scalar = 0.0;
  for (const LinearFunctional& f : functionals) {
    for (const Point& d : offsets) worst_scalar = std::max(worst_scalar, std::abs(f(d)));
  }
  if (!(worst_scalar < scalar_tolerance)) scalar_pass = false;

  report.metric("catalog_pass", catalog_pass ? 1.0 : 0.0);
  report.metric("scalar_pass", scalar_pass ? 1.0 : 0.0);
  report.metric("criteria_agree", catalog_pass == scalar_pass ? 1.0 : 0.0);
  report.metric("max_scalar_deviation", worst_scalar);
  report.metric("tail_length", double(offsets.size()));
  report.max_violation = std::max(catalog_gap, scalar_pass ? 0.0 : worst_scalar - scalar_tolerance);
  report.verdict = catalog_pass && scalar_pass ? Verdict::Pass : Verdict::Fail;
  if (catalog_pass != scalar_pass) report.note = "neighborhood and scalar criteria disagree";
  return report;
}

DecomposeResult decompose_or_witness(const LinearFunctional& target, std::span<const LinearFunctional> family) {
  const std::size_t n = target.dimension();
  std::vector<std::vector<double>> vectors;
  for (const LinearFunctional& f : family) {
    if (f.dimension() != n) throw ArgumentError("decompose_or_witness: functionals differ in dimension");
    vectors.push_back(f.coefficients);
  }
  DecomposeResult out;
  const linalg::Matrix cols = linalg::Matrix::from_columns(vectors, n);
  if (auto lambda = linalg::solve(cols, target.coefficients)) {
    const std::vector<double> combo = family.empty() ? std::vector<double>(n, 0.0) : cols.apply(*lambda);
    const double residual = linalg::max_abs_diff(combo, target.coefficients);
    if (residual <= kResidualTolerance) {
      out.coefficients = std::move(*lambda);
      out.residual = residual;
      return out;
    }
  }
  std::vector<std::vector<double>> rows = vectors;
  rows.push_back(target.coefficients);
  const linalg::Matrix system = linalg::Matrix::from_rows(rows, n);
  std::vector<double> rhs(rows.size(), 0.0);
  rhs.back() = 1.0;
  if (auto a = linalg::solve(system, rhs)) {
    const double residual = linalg::max_abs_diff(system.apply(*a), rhs);
    if (residual <= kResidualTolerance) {
      out.witness = std::move(*a);
      out.residual = residual;
      return out;
    }
  }
  throw std::runtime_error("decompose_or_witness: neither branch met the residual tolerance");
}

HausdorffWitness hausdorff_witness(std::span<const double> x, std::span<const double> y,
                                   const DualPairScenario& scenario) {
  if (x.size() != y.size() || x.size() != scenario.dimension()) throw ArgumentError("hausdorff_witness: dimension mismatch");
  if (std::equal(x.begin(), x.end(), y.begin())) throw ArgumentError("hausdorff_witness: points must be distinct");
  const LinearFunctional* chosen = nullptr;
  for (const LinearFunctional& f : scenario.functionals) {
    if (std::abs(f(x) - f(y)) > 1e-12) {
      chosen = &f;
      break;
    }
  }
  if (!chosen) throw ArgumentError("hausdorff_witness: no separating functional in the catalog");
  const double a = (*chosen)(x);
  const double b = (*chosen)(y);
  const double lo = std::min(a, b), hi = std::max(a, b);
  const double mid = lo + (hi - lo) / 2.0;
  const double gap = hi - lo;
  const Axis& s = scenario.scalar.axis(0);
  const Domain scalar({Axis{std::min(s.lo, lo - gap), std::max(s.hi, hi + gap), s.points}}, scenario.scalar.bounded());
  // Intervals share the endpoint `mid` so their open indicators are disjoint.
  const FuzzySet low_set = indicator(scalar, Predicate::box({lo - (mid - lo)}, {mid}, true));
  const FuzzySet high_set = indicator(scalar, Predicate::box({mid}, {hi + (hi - mid)}, true));
  if (a < b) return {*chosen, low_set, high_set};
  return {*chosen, high_set, low_set};
}

CheckReport hausdorff_witness_check(const HausdorffWitness& w, std::span<const double> x, std::span<const double> y) {
  CheckReport report("hausdorff_witness", 0.0);
  const double fx = w.functional(x);
  const double fy = w.functional(y);
  const double at_x = w.beta(std::span<const double>(&fx, 1));
  const double at_y = w.eta(std::span<const double>(&fy, 1));
  double overlap = 0.0;
  const std::vector<double> b = w.beta.sample();
  const std::vector<double> e = w.eta.sample();
  for (std::size_t i = 0; i < b.size(); ++i) overlap = std::max(overlap, std::min(b[i], e[i]));
  const bool beta_lsc = is_lsc(w.beta).passed();
  const bool eta_lsc = is_lsc(w.eta).passed();
  report.metric("beta_at_fx", at_x);
  report.metric("eta_at_fy", at_y);
  report.metric("overlap", overlap);
  report.metric("beta_lsc", beta_lsc ? 1.0 : 0.0);
  report.metric("eta_lsc", eta_lsc ? 1.0 : 0.0);
  report.max_violation = std::max({1.0 - at_x, 1.0 - at_y, overlap, beta_lsc ? 0.0 : 1.0, eta_lsc ? 0.0 : 1.0});
  report.witness.assign(x.begin(), x.end());
  report.witness.insert(report.witness.end(), y.begin(), y.end());
  return report.decide();
}

CheckReport weakly_lsc_check(const WeakNeighborhood& v, const Domain& space) {
  if (space.dimension() != v.dimension()) throw ArgumentError("weakly_lsc_check: dimension mismatch");
  bool premise = true;
  for (const auto& pair : v.pairs()) premise = premise && is_lsc(pair.second).passed();
  CheckReport report = is_lsc(v.as_fuzzy_set(space));
  report.name = "weakly_lsc";
  report.metric("premise_lsc", premise ? 1.0 : 0.0);
  if (!premise) report.append_note("a scalar set is not lsc, so the usual-topology premise fails");
  return report;
}

linalg::Matrix adjoint(const linalg::Matrix& t) { return t.transpose(); }

LinearFunctional apply_adjoint(const linalg::Matrix& t, const LinearFunctional& y) {
  return LinearFunctional(adjoint(t).apply(y.coefficients));
}

CheckReport weakly_continuous_check(const linalg::Matrix& t, const DualPairScenario& e, const DualPairScenario& f) {
  if (t.cols() != e.dimension() || t.rows() != f.dimension()) {
    throw ArgumentError("weakly_continuous_check: operator shape does not match the spaces");
  }
  CheckReport report("weakly_continuous", 0.0);
  std::size_t outside = 0;
  double identity_gap = 0.0;
  Point x(e.dimension());
  for (std::size_t i = 0; i < f.functionals.size(); ++i) {
    const LinearFunctional& y = f.functionals[i];
    const LinearFunctional pulled = apply_adjoint(t, y);
    for (std::size_t k = 0; k < e.space.size(); ++k) {
      e.space.point_into(k, x);
      identity_gap = std::max(identity_gap, std::abs(pulled(x) - y(t.apply(x))));
    }
    const DecomposeResult r = decompose_or_witness(pulled, e.functionals);
    if (!r.in_span()) {
      ++outside;
      report.record(1.0, *r.witness, {{"functional", double(i)}});
    }
  }
  report.metric("outside_span", double(outside));
  report.metric("adjoint_identity_gap", identity_gap);
  return report.decide();
}

double weak_seminorm(const FuzzySet& mu, const LinearFunctional& f, const Domain& scalar) {
  if (f.dimension() != mu.domain().dimension()) throw ArgumentError("weak_seminorm: dimension mismatch");
  return height(image(f.as_map(), mu, scalar));
}

CheckReport weak_seminorm_check(const FuzzySet& mu, const LinearFunctional& f, const Domain& scalar,
                                std::span<const double> scales) {
  CheckReport report("weak_seminorm", 0.0);
  const double base = weak_seminorm(mu, f, scalar);
  for (double t : scales) {
    if (!(t != 0.0 && std::abs(t) <= 1.0)) throw ArgumentError("weak_seminorm_check: scales must satisfy 0 < |t| <= 1");
    const double v = weak_seminorm(mu, f.scaled(t), scalar);
    if (std::abs(v - base) > report.max_violation) report.record(std::abs(v - base), {}, {{"t", t}});
  }
  const double h = height(mu);
  const double at_zero = weak_seminorm(mu, f.scaled(0.0), scalar);
  report.record(std::abs(at_zero - h), {}, {{"t", 0.0}});
  report.metric("phi", base);
  report.metric("phi_zero", at_zero);
  report.metric("height", h);
  report.note =
      "degenerate: sup over scalars of the image x'(mu) equals the height of mu whenever the image stays "
      "inside the scalar box, so phi is constant in x'";
  return report.decide();
}

CheckReport weakly_bounded_check(const FuzzySet& mu, const DualPairScenario& scenario,
                                 std::span<const FuzzySet> scalar_neighborhoods) {
  CheckReport report("weakly_bounded", kAbsorptionTolerance);
  std::size_t failed = 0;
  for (std::size_t i = 0; i < scenario.functionals.size(); ++i) {
    const FuzzySet img = image(scenario.functionals[i].as_map(), mu, scenario.scalar);
    const CheckReport r = is_bounded(img, scalar_neighborhoods);
    if (!r.passed()) {
      ++failed;
      report.record(std::max(r.max_violation, 1.0), {}, {{"functional", double(i)}});
    }
  }
  report.metric("functionals", double(scenario.functionals.size()));
  report.metric("unbounded_images", double(failed));
  return report.decide();
}

CheckReport product_topology_check(const FuzzySet& mu1, const FuzzySet& mu2, std::span<const Point> points) {
  if (mu1.domain().dimension() != 1 || mu2.domain().dimension() != 1) {
    throw ArgumentError("product_topology_check: factors must live on K");
  }
  CheckReport report("product_topology", 0.0);
  const WeakNeighborhood v({{LinearFunctional{1.0, 0.0}, mu1}, {LinearFunctional{0.0, 1.0}, mu2}});
  const FuzzySet prod = product(mu1, mu2);
  for (const Point& p : points) {
    if (p.size() != 2) throw ArgumentError("product_topology_check: points must be in R^2");
    const double expected = std::min(mu1(std::span<const double>(&p[0], 1)), mu2(std::span<const double>(&p[1], 1)));
    const double diff = std::max(std::abs(weak_eval(v, p) - expected), std::abs(prod(p) - expected));
    report.record(diff, p);
  }
  report.metric("points", double(points.size()));
  return report.decide();
}

}  // namespace ftvs
