#include "ftvs/katsaras.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ftvs/algebra.hpp"
#include "ftvs/properties.hpp"

namespace ftvs {

FuzzySet BaseNeighborhood::set() const { return base_neighborhood(theta, t, rho); }

KatsarasNorm katsaras_from_felbin(const FelbinNorm& norm, const Domain& domain) {
  if (norm.dimension() != domain.dimension()) throw ArgumentError("katsaras_from_felbin: dimension mismatch");
  node::Sublevel ball{[norm](std::span<const double> x) { return norm.sup_upper(x); },
                      1.0,
                      1.0,
                      true,
                      norm.continuous(),
                      "unit ball of " + norm.name()};
  return KatsarasNorm{FuzzySet(domain, std::move(ball))};
}

FuzzySet alpha_sphere(const FelbinNorm& norm, double alpha, std::span<const double> center, double eps,
                      const Domain& domain) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ArgumentError("alpha_sphere: alpha must lie in (0,1]");
  if (!(eps > 0.0)) throw ArgumentError("alpha_sphere: radius must be positive");
  if (center.size() != domain.dimension() || norm.dimension() != domain.dimension()) {
    throw ArgumentError("alpha_sphere: dimension mismatch");
  }
  Point c(center.begin(), center.end());
  auto gauge = [norm, alpha, c](std::span<const double> y) {
    Point diff(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - c[i];
    return norm.upper(diff, alpha);
  };
  return FuzzySet(domain, node::Sublevel{gauge, eps, alpha, true, norm.continuous(), "alpha-sphere of " + norm.name()});
}

FuzzySet base_neighborhood(double theta, double t, const KatsarasNorm& rho) {
  if (!(theta > 0.0 && theta <= 1.0)) throw ArgumentError("base_neighborhood: theta must lie in (0,1]");
  if (!(t > 0.0)) throw ArgumentError("base_neighborhood: t must be positive");
  return meet(constant(rho.rho.domain(), theta), scalar_mul(t, rho.rho));
}

std::vector<CheckReport> katsaras_axioms_check(const KatsarasNorm& rho, std::span<const double> dilations) {
  std::vector<CheckReport> out;
  out.push_back(is_convex(rho.rho));
  out.push_back(is_balanced(rho.rho));
  out.push_back(is_absorbing(rho.rho, dilations));
  out.push_back(is_dilation_vanishing(rho.rho, dilations));
  return out;
}

std::vector<double> default_radius_grid() {
  std::vector<double> r;
  for (int k = -1; k <= 23; ++k) r.push_back(std::ldexp(1.0, -k));
  return r;
}

namespace {

// Lattice values of mu plus the probe points around `center` at offsets
// radius/2^k along each axis.
struct TestPoints {
  std::vector<Point> probes;
  std::vector<double> probe_values;
};

TestPoints probes_around(const FuzzySet& mu, std::span<const double> center, double radius) {
  TestPoints tp;
  for (int k = 1; k <= 3; ++k) {
    const double r = std::ldexp(radius, -k);
    for (std::size_t axis = 0; axis < center.size(); ++axis) {
      for (double sign : {-1.0, 1.0}) {
        Point p(center.begin(), center.end());
        p[axis] += sign * r;
        tp.probe_values.push_back(mu(p));
        tp.probes.push_back(std::move(p));
      }
    }
  }
  return tp;
}

// Largest excess of candidate over mu, stopping once it exceeds `cap`.
double excess(const FuzzySet& candidate, const Domain& d, const std::vector<double>& mu_values,
              const TestPoints& tp, double cap) {
  double worst = 0.0;
  Point y(d.dimension());
  for (std::size_t i = 0; i < d.size() && worst <= cap; ++i) {
    d.point_into(i, y);
    worst = std::max(worst, candidate(y) - mu_values[i]);
  }
  for (std::size_t i = 0; i < tp.probes.size() && worst <= cap; ++i) {
    worst = std::max(worst, candidate(tp.probes[i]) - tp.probe_values[i]);
  }
  return worst;
}

std::vector<double> or_default(std::span<const double> given, std::vector<double> (*fallback)()) {
  if (!given.empty()) return {given.begin(), given.end()};
  return fallback();
}

}  // namespace

CheckReport is_neighborhood_of(const FuzzySet& mu, std::span<const double> x, const KatsarasNorm& rho,
                               std::span<const double> given_thetas, std::span<const double> given_ts) {
  if (x.size() != mu.domain().dimension() || rho.rho.domain().dimension() != x.size()) {
    throw ArgumentError("is_neighborhood_of: dimension mismatch");
  }
  const std::vector<double> thetas = or_default(given_thetas, default_level_grid);
  const std::vector<double> ts = or_default(given_ts, default_dilation_grid);
  CheckReport report("is_neighborhood_of", 0.0);
  report.witness.assign(x.begin(), x.end());
  const std::vector<double> mu_values = mu.sample();
  const Point zero(x.size(), 0.0);
  double best = std::numeric_limits<double>::infinity();
  for (double t : ts) {
    const TestPoints tp = probes_around(mu, x, t);
    for (double theta : thetas) {
      const FuzzySet base = base_neighborhood(theta, t, rho);
      if (!(base(zero) > 0.0)) continue;
      const FuzzySet shifted = translate(x, base);
      const double e = excess(shifted, mu.domain(), mu_values, tp, best);
      if (e < best) {
        best = e;
        report.parameters = {{"theta", theta}, {"t", t}};
      }
      if (best <= 0.0) break;
    }
    if (best <= 0.0) break;
  }
  report.max_violation = std::isfinite(best) ? std::max(best, 0.0) : 1.0;
  return report.decide();
}

CheckReport is_linearly_open(const FuzzySet& mu, const FelbinNorm& norm, std::span<const double> given_alphas,
                             std::span<const double> given_radii) {
  if (norm.dimension() != mu.domain().dimension()) throw ArgumentError("is_linearly_open: dimension mismatch");
  const std::vector<double> alphas = or_default(given_alphas, default_level_grid);
  std::vector<double> radii = or_default(given_radii, default_radius_grid);
  std::sort(radii.begin(), radii.end(), std::greater<>());
  CheckReport report("is_linearly_open", 0.0);
  const Domain& d = mu.domain();
  const std::vector<double> mu_values = mu.sample();
  Point x(d.dimension());
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(mu_values[i] > 0.0)) continue;
    d.point_into(i, x);
    for (double alpha : alphas) {
      if (!(alpha < mu_values[i])) continue;
      ++pairs;
      double best = std::numeric_limits<double>::infinity();
      for (double eps : radii) {
        const FuzzySet sphere = alpha_sphere(norm, alpha, x, eps, d);
        const double e = excess(sphere, d, mu_values, probes_around(mu, x, eps), best);
        best = std::min(best, e);
        if (best <= 0.0) break;
      }
      if (best > 0.0) report.record(best, x, {{"alpha", alpha}});
    }
  }
  report.metric("pairs_checked", double(pairs));
  report.note = "norm '" + norm.name() + "'";
  return report.decide();
}

CheckReport base_equivalence_check(const FelbinNorm& norm, const KatsarasNorm& rho, std::span<const double> alphas,
                                   std::span<const double> radii) {
  CheckReport report("base_equivalence", 0.0);
  const Domain& d = rho.rho.domain();
  const Point origin(d.dimension(), 0.0);
  Point y(d.dimension());
  std::size_t compared = 0;
  for (double alpha : alphas) {
    for (double eps : radii) {
      const FuzzySet sphere = alpha_sphere(norm, alpha, origin, eps, d);
      const FuzzySet base = base_neighborhood(alpha, eps, rho);
      for (std::size_t i = 0; i < d.size(); ++i) {
        d.point_into(i, y);
        const double diff = std::abs(sphere(y) - base(y));
        ++compared;
        if (diff > report.max_violation) report.record(diff, y, {{"alpha", alpha}, {"eps", eps}});
      }
    }
  }
  report.metric("comparisons", double(compared));
  report.note = "alpha-open spheres at 0 against alpha ^ (eps rho) for norm '" + norm.name() + "'";
  return report.decide();
}

}  // namespace ftvs
