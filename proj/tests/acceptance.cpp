// Acceptance run: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "ftvs/algebra.hpp"
#include "ftvs/katsaras.hpp"
#include "ftvs/properties.hpp"
#include "ftvs/weak.hpp"
#include "ftvs_c.h"
#include "oracles.hpp"
#include "rank_oracle.hpp"

using namespace ftvs;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

int failures = 0;

void criterion(int number, const std::string& title, double time_limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("raised: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string limit;
  if (time_limit > 0.0) {
    limit = ", limit " + fmt(time_limit) + "s";
    if (seconds >= time_limit) {
      o.pass = false;
      o.detail += "; too slow";
    }
  }
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%s; runtime %ss%s)\n", o.pass ? "PASS" : "FAIL", number, title.c_str(),
              o.detail.c_str(), fmt(seconds).c_str(), limit.c_str());
  std::fflush(stdout);
}

Domain plane121() { return Domain::cube(2, -3.0, 3.0, 121); }

std::vector<double> tenth_levels() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}; }

Outcome base_equivalence() {
  const Domain d = plane121();
  const FelbinNorm norm = euclidean_felbin_norm(2);
  const KatsarasNorm rho = katsaras_from_felbin(norm, d);
  const std::vector<double> alphas = tenth_levels(), radii{0.5, 1.0, 2.0};
  const CheckReport r = base_equivalence_check(norm, rho, alphas, radii);
  return {r.passed() && r.max_violation == 0.0, "max difference " + fmt(r.max_violation) + ", tol 0"};
}

Outcome katsaras_axioms() {
  const Domain d = plane121();
  const KatsarasNorm rho = katsaras_from_felbin(euclidean_felbin_norm(2), d);
  bool ok = true;
  std::string detail;
  for (const CheckReport& r : katsaras_axioms_check(rho)) {
    const bool exact = r.name == "is_convex" || r.name == "is_balanced";
    const double tol = exact ? 0.0 : kAbsorptionTolerance;
    ok = ok && r.passed() && r.max_violation <= tol;
    detail += (detail.empty() ? "" : ", ") + r.name + " " + fmt(r.max_violation) + " (tol " + fmt(tol) + ")";
  }
  return {ok, detail};
}

Outcome decompose_agreement() {
  std::mt19937 rng(20240501);
  int agree = 0;
  double worst = 0.0;
  const int n = 100;
  for (int draw = 0; draw < n; ++draw) {
    const auto inst = oracle::random_span_instance(rng, 5, draw);
    std::vector<LinearFunctional> family;
    for (const auto& row : inst.family) family.emplace_back(row);
    const LinearFunctional target(inst.target);
    const DecomposeResult r = decompose_or_witness(target, family);
    if (r.in_span() == oracle::in_span(inst.target, inst.family) && r.coefficients.has_value() != r.witness.has_value()) {
      ++agree;
    }
    double residual = 0.0;
    if (r.in_span()) {
      for (std::size_t j = 0; j < 5; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < family.size(); ++i) sum += (*r.coefficients)[i] * family[i].coefficients[j];
        residual = std::max(residual, std::abs(sum - target.coefficients[j]));
      }
    } else {
      residual = std::abs(target(*r.witness) - 1.0);
      for (const auto& f : family) residual = std::max(residual, std::abs(f(*r.witness)));
    }
    worst = std::max(worst, residual);
  }
  return {agree == n && worst <= kResidualTolerance,
          "agreement " + std::to_string(agree) + "/" + std::to_string(n) + ", max residual " + fmt(worst) + ", tol 1e-09"};
}

Outcome hausdorff_witnesses() {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> quarter(-8, 8);
  std::vector<LinearFunctional> basis{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  const DualPairScenario sc{Domain::cube(3, -2.0, 2.0, 5), basis, Domain::cube(1, -5.0, 5.0, 201)};
  int good = 0, pairs = 0;
  while (pairs < 50) {
    Point x(3), y(3);
    for (double& v : x) v = quarter(rng) / 4.0;
    for (double& v : y) v = quarter(rng) / 4.0;
    if (x == y) continue;
    ++pairs;
    const HausdorffWitness w = hausdorff_witness(x, y, sc);
    double overlap = 0.0;
    const Domain& line = w.beta.domain();
    for (std::size_t i = 0; i < line.size(); ++i) {
      const Point t = line.point(i);
      overlap = std::max(overlap, std::min(w.beta.eval(t), w.eta.eval(t)));
    }
    const bool ok = overlap == 0.0 && w.beta.eval({w.functional(x)}) == 1.0 && w.eta.eval({w.functional(y)}) == 1.0 &&
                    is_lsc(w.beta).passed() && is_lsc(w.eta).passed();
    if (ok) ++good;
  }
  return {good == pairs, std::to_string(good) + "/" + std::to_string(pairs) + " witnesses valid, lattice-exact"};
}

Outcome weak_lsc() {
  const Domain space = Domain::cube(2, -2.0, 2.0, 17);
  // The scalar field is all of R: a bounded box would read the constant as 0
  // past its edge and cut it off inside the space.
  const Domain s = Domain::cube(1, -4.0, 4.0, 33, false);
  const KatsarasNorm rho{scalar_unit_ball(s)};
  const std::vector<FuzzySet> lsc_catalog{indicator(s, Predicate::box({-1.0}, {1.0}, true)),
                                          indicator(s, Predicate::box({-0.5}, {2.0}, true)),
                                          triangular(s, -1.0, 0.0, 1.0),
                                          constant(s, 0.6),
                                          base_neighborhood(0.5, 2.0, rho),
                                          base_neighborhood(1.0, 0.5, rho)};
  const std::vector<LinearFunctional> fs{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, -2.0}};
  int passed = 0, total = 0;
  for (std::size_t i = 0; i < lsc_catalog.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      std::vector<WeakNeighborhood::Pair> pairs{{fs[j], lsc_catalog[i]}};
      pairs.emplace_back(fs[(j + 1) % fs.size()], lsc_catalog[(i + 1) % lsc_catalog.size()]);
      ++total;
      if (weakly_lsc_check(WeakNeighborhood(pairs), space).passed()) ++passed;
    }
  }
  const WeakNeighborhood closed({{LinearFunctional{1.0, 0.0}, indicator(s, Predicate::box({-1.0}, {1.0}, false))}});
  const bool falsified = weakly_lsc_check(closed, space).verdict == Verdict::Fail;
  return {passed == total && falsified, std::to_string(passed) + "/" + std::to_string(total) +
                                            " catalog neighborhoods pass, closed indicator " +
                                            (falsified ? "falsified" : "NOT falsified")};
}

// 41-point oracle catalog for add, image and scalar_mul.
Outcome algebra_oracle() {
  const Domain d = Domain::cube(1, -5.0, 5.0, oracle::kPoints);
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> q(0, 4);
  auto random_grid = [&] {
    std::vector<double> v(oracle::kPoints);
    for (double& x : v) x = q(rng) < 2 ? 0.0 : q(rng) / 4.0;
    return grid_sample(d, v);
  };
  auto scalar_mul_oracle = [](const oracle::Values& a, int inverse) {
    oracle::Values out(oracle::kPoints, 0.0);
    for (int i = 0; i < oracle::kPoints; ++i) {
      const int k = oracle::kCenter + inverse * (i - oracle::kCenter);
      if (k >= 0 && k < oracle::kPoints) out[i] = a[k];
    }
    return out;
  };
  auto diff = [](const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
  };

  double worst = 0.0;
  int cases = 0;
  const FuzzySet tri = grid_sample(d, triangular(d, -2.0, 0.0, 1.0).sample());
  const FuzzySet box = indicator(d, Predicate::box({-1.0}, {1.0}, false));
  const FuzzySet adds[][2] = {{random_grid(), random_grid()}, {tri, box}, {random_grid(), singleton(d)},
                              {box, box}};
  for (const auto& pair : adds) {
    worst = std::max(worst, diff(add(pair[0], pair[1]).sample(), oracle::sup_min_sum(pair[0].sample(), pair[1].sample())));
    ++cases;
  }
  const int images[][2] = {{1, 3}, {-2, 0}, {2, -4}};
  for (const auto& m : images) {
    const FuzzySet mu = random_grid();
    const AffineMap f(1, 1, {double(m[0])}, {m[1] * 0.25});
    worst = std::max(worst, diff(image(f, mu, d).sample(), oracle::image_integer_affine(mu.sample(), m[0], m[1])));
    ++cases;
  }
  for (int inverse : {-1, 2, 4}) {
    const FuzzySet mu = random_grid();
    worst = std::max(worst, diff(scalar_mul(1.0 / inverse, mu).sample(), scalar_mul_oracle(mu.sample(), inverse)));
    ++cases;
  }
  return {worst == 0.0, std::to_string(cases) + " cases, max pointwise difference " + fmt(worst) + ", tol 0"};
}

Outcome weak_seminorm_invariance() {
  const Domain e = Domain::cube(2, -2.0, 2.0, 41);
  const Domain s = Domain::cube(1, -4.0, 4.0, 81);
  const FuzzySet ball = indicator(e, Predicate::ball({0.0, 0.0}, 1.0, true));
  const std::vector<FuzzySet> sets{ball, meet(ball, constant(e, 0.7)), preimage(AffineMap::functional(std::vector<double>{1.0, 0.0}),
                                             triangular(Domain::cube(1, -2.0, 2.0, 41), -1.0, 0.0, 1.0), e)};
  const std::vector<LinearFunctional> fs{{1.0, 0.0}, {0.5, -1.0}};
  const std::vector<double> scales{-1.0, -0.5, -0.1, 0.1, 0.5, 1.0};
  double worst = 0.0;
  bool notes = true, zero_is_height = true;
  for (const FuzzySet& mu : sets) {
    for (const LinearFunctional& f : fs) {
      const CheckReport r = weak_seminorm_check(mu, f, s, scales);
      worst = std::max(worst, r.max_violation);
      notes = notes && r.note.find("degenerate") != std::string::npos;
      zero_is_height = zero_is_height && weak_seminorm(mu, f.scaled(0.0), s) == height(mu);
    }
  }
  return {worst == 0.0 && notes && zero_is_height,
          "max scaling difference " + fmt(worst) + ", phi(0) = height " + (zero_is_height ? "yes" : "no") +
              ", degeneracy note " + (notes ? "present" : "missing")};
}

Outcome net_convergence() {
  const Domain s = Domain::cube(1, -5.0, 5.0, 201);
  const std::vector<LinearFunctional> fs{{1.0, 0.0}, {0.0, 1.0}};
  const std::vector<double> thetas{0.5, 1.0}, ts{0.1, 0.5, 1.0};
  const auto catalog = weak_base_catalog(fs, thetas, ts, s);
  std::vector<Point> reciprocal, steady, alternating;
  for (int j = 1; j <= 1000; ++j) {
    reciprocal.push_back({1.0 / j, 0.0});
    steady.push_back({0.5, -0.25});
    alternating.push_back({j % 2 == 0 ? 1.0 : -1.0, 0.0});
  }
  const Point origin{0.0, 0.0}, fixed{0.5, -0.25};
  const CheckReport r[3] = {net_converges_weakly(reciprocal, origin, fs, catalog, 100, 0.1),
                            net_converges_weakly(steady, fixed, fs, catalog, 100, 0.1),
                            net_converges_weakly(alternating, origin, fs, catalog, 100, 0.1)};
  const bool expected[3] = {true, true, false};
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    const bool cat = r[i].metric_value("catalog_pass") == 1.0, sc = r[i].metric_value("scalar_pass") == 1.0;
    ok = ok && cat == expected[i] && sc == expected[i] && r[i].metric_value("criteria_agree") == 1.0;
    detail += std::string(i ? ", " : "") + (cat ? "pass" : "fail") + "/" + (sc ? "pass" : "fail");
  }
  return {ok, "catalog/scalar " + detail};
}

Outcome product_topology() {
  const Domain s = Domain::cube(1, -2.0, 2.0, 81);
  const FuzzySet tri = triangular(s, -1.0, 0.0, 1.0);
  const FuzzySet band = indicator(s, Predicate::box({-0.5}, {1.0}, true));
  std::vector<Point> points;
  for (double a : {-1.5, -0.75, 0.0, 0.5, 1.25}) {
    for (double b : {-1.0, -0.25, 0.5, 1.0}) points.push_back({a, b});
  }
  const CheckReport r = product_topology_check(tri, band, points);
  const WeakNeighborhood v({{LinearFunctional{1.0, 0.0}, tri}, {LinearFunctional{0.0, 1.0}, band}});
  double worst = r.max_violation;
  for (const Point& p : points) {
    const double expected = std::min(oracle::triangular(-1.0, 0.0, 1.0, p[0]), (p[1] > -0.5 && p[1] < 1.0) ? 1.0 : 0.0);
    worst = std::max(worst, std::abs(weak_eval(v, p) - expected));
  }
  return {r.passed() && worst == 0.0,
          std::to_string(points.size()) + " cases, max pointwise difference " + fmt(worst) + ", tol 0"};
}

Outcome determinism() {
  const std::string path = std::string(FTVS_SCENARIO_DIR) + "/full-suite.json";
  std::string renders[2];
  for (std::string& out : renders) {
    ftvs_scenario* sc = nullptr;
    ftvs_report* report = nullptr;
    char* text = nullptr;
    if (ftvs_scenario_load_file(path.c_str(), &sc) != FTVS_OK || ftvs_run(sc, &report) != FTVS_OK ||
        ftvs_report_render(report, FTVS_FORMAT_JSON, 0, &text) != FTVS_OK) {
      return {false, std::string("C API error: ") + ftvs_last_error()};
    }
    out = text;
    ftvs_string_free(text);
    ftvs_report_free(report);
    ftvs_scenario_free(sc);
  }
  return {renders[0] == renders[1] && !renders[0].empty(),
          "two full-suite runs, " + std::to_string(renders[0].size()) + " bytes, " +
              (renders[0] == renders[1] ? "identical" : "DIFFERENT") + " without timing"};
}

}  // namespace

int main() {
  criterion(1, "base equivalence on [-3,3]^2 at 121x121", 5.0, base_equivalence);
  criterion(2, "Katsaras axioms for the converted norm", 30.0, katsaras_axioms);
  criterion(3, "decompose-or-witness vs rank oracle, 100 seeded R^5 instances", 1.0, decompose_agreement);
  criterion(4, "Hausdorff witnesses, 50 seeded pairs in R^3", 5.0, hausdorff_witnesses);
  criterion(5, "weak-lsc equivalence and closed-indicator sensitivity", 10.0, weak_lsc);
  criterion(6, "sup-min algebra vs brute-force oracle on 41 points", 2.0, algebra_oracle);
  criterion(7, "weak seminorm scaling and zero functional", 0.0, weak_seminorm_invariance);
  criterion(8, "net convergence: reciprocal, constant, alternating", 1.0, net_convergence);
  criterion(9, "product-topology consistency, 20-case sweep", 0.0, product_topology);
  criterion(10, "determinism of JSON reports apart from timing", 0.0, determinism);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
