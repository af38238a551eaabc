#include "ftvs/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ftvs/linalg.hpp"

namespace ftvs {

std::vector<double> default_dilation_grid() {
  std::vector<double> ts;
  for (int k = 0; k <= 60; ++k) ts.push_back(std::pow(10.0, (k - 30) / 10.0));
  return ts;
}

std::vector<double> default_unit_grid() {
  std::vector<double> ts;
  for (int k = 0; k <= 10; ++k) ts.push_back(k / 10.0);
  return ts;
}

std::vector<double> default_balance_grid() {
  std::vector<double> ts;
  for (int k = -10; k <= 10; ++k) ts.push_back(k / 10.0);
  return ts;
}

std::vector<double> default_level_grid() {
  std::vector<double> ts;
  for (int k = 1; k <= 10; ++k) ts.push_back(k / 10.0);
  return ts;
}

namespace {

std::vector<double> or_default(std::span<const double> given, std::vector<double> (*fallback)()) {
  if (!given.empty()) return {given.begin(), given.end()};
  return fallback();
}

// Lattice points stored contiguously so pair sweeps avoid re-deriving them.
std::vector<double> lattice_points(const Domain& d) {
  const std::size_t n = d.dimension();
  std::vector<double> pts(d.size() * n);
  for (std::size_t i = 0; i < d.size(); ++i) d.point_into(i, std::span<double>(pts.data() + i * n, n));
  return pts;
}

double at_origin(const FuzzySet& mu) {
  const Point zero(mu.domain().dimension(), 0.0);
  return mu(zero);
}

}  // namespace

CheckReport is_convex(const FuzzySet& mu, std::span<const double> given_ts) {
  const std::vector<double> ts = or_default(given_ts, default_unit_grid);
  CheckReport report("is_convex", 0.0);
  const Domain& d = mu.domain();
  const std::size_t n = d.dimension();
  const std::vector<double> v = mu.sample();
  const std::vector<double> pts = lattice_points(d);
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0.0) support.push_back(i);
  }
  Point z(n);
  std::size_t evaluations = 0;
  for (std::size_t ii = 0; ii < support.size(); ++ii) {
    const std::size_t i = support[ii];
    const double* a = pts.data() + i * n;
    for (std::size_t jj = ii + 1; jj < support.size(); ++jj) {
      const std::size_t j = support[jj];
      const double* b = pts.data() + j * n;
      const double floor = std::min(v[i], v[j]);
      for (double t : ts) {
        for (int order = 0; order < 2; ++order) {
          const double* p = order == 0 ? a : b;
          const double* q = order == 0 ? b : a;
          for (std::size_t k = 0; k < n; ++k) z[k] = t * p[k] + (1.0 - t) * q[k];
          ++evaluations;
          const double viol = floor - mu(z);
          if (viol > report.max_violation) {
            report.record(viol, z, {{"t", t}, {"a_index", double(order == 0 ? i : j)}, {"b_index", double(order == 0 ? j : i)}});
          }
        }
      }
    }
  }
  report.metric("support_points", double(support.size()));
  report.metric("evaluations", double(evaluations));
  report.note = "pairwise form mu(ta+(1-t)b) >= min(mu(a),mu(b)) over lattice pairs";
  return report.decide();
}

CheckReport is_balanced(const FuzzySet& mu, std::span<const double> given_ts) {
  const std::vector<double> ts = or_default(given_ts, default_balance_grid);
  for (double t : ts) {
    if (std::abs(t) > 1.0) throw ArgumentError("is_balanced: sampled scalars must satisfy |t| <= 1");
  }
  CheckReport report("is_balanced", 0.0);
  const Domain& d = mu.domain();
  const std::vector<double> v = mu.sample();
  Point x(d.dimension()), tx(d.dimension());
  double origin_gap = 0.0;
  const double m0 = at_origin(mu);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (v[i] <= 0.0) continue;
    d.point_into(i, x);
    origin_gap = std::max(origin_gap, v[i] - m0);
    for (double t : ts) {
      for (std::size_t k = 0; k < x.size(); ++k) tx[k] = t * x[k];
      const double viol = v[i] - mu(tx);
      if (viol > report.max_violation) report.record(viol, x, {{"t", t}});
    }
  }
  report.metric("origin_dominance_violation", origin_gap);
  return report.decide();
}

CheckReport is_absorbing(const FuzzySet& mu, std::span<const double> given_ts, const Domain* absorption_box) {
  const std::vector<double> ts = or_default(given_ts, default_dilation_grid);
  for (double t : ts) {
    if (!(t > 0.0)) throw ArgumentError("is_absorbing: dilation factors must be positive");
  }
  CheckReport report("is_absorbing", kAbsorptionTolerance);
  const Domain& box = absorption_box ? *absorption_box : mu.domain();
  if (box.dimension() != mu.domain().dimension()) throw ArgumentError("is_absorbing: absorption box dimension mismatch");
  Point x(box.dimension()), y(box.dimension());
  for (std::size_t i = 0; i < box.size(); ++i) {
    box.point_into(i, x);
    double best = 0.0;
    for (double t : ts) {
      for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[k] / t;
      best = std::max(best, mu(y));
      if (best >= 1.0) break;
    }
    report.record(1.0 - best, x);
  }
  report.metric("points", double(box.size()));
  report.metric("dilations", double(ts.size()));
  return report.decide();
}

CheckReport is_dilation_vanishing(const FuzzySet& mu, std::span<const double> given_ts) {
  const std::vector<double> ts = or_default(given_ts, default_dilation_grid);
  CheckReport report("is_dilation_vanishing", kAbsorptionTolerance);
  const Domain& d = mu.domain();
  Point x(d.dimension()), y(d.dimension());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d.point_into(i, x);
    if (std::all_of(x.begin(), x.end(), [](double c) { return c == 0.0; })) continue;
    double low = 1.0;
    for (double t : ts) {
      for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[k] / t;
      low = std::min(low, mu(y));
      if (low <= 0.0) break;
    }
    report.record(low, x);
  }
  return report.decide();
}

CheckReport absorbs(const FuzzySet& mu, const FuzzySet& eta, std::span<const double> given_thetas,
                    std::span<const double> given_ts) {
  if (mu.domain().dimension() != eta.domain().dimension()) throw ArgumentError("absorbs: dimension mismatch");
  const std::vector<double> thetas = or_default(given_thetas, default_level_grid);
  const std::vector<double> ts = or_default(given_ts, default_dilation_grid);
  CheckReport report("absorbs", kAbsorptionTolerance);
  report.note = "strict '<' relaxed to '<=' on the lattice";
  const double m0 = at_origin(mu);
  if (!(m0 > 0.0)) {
    report.verdict = Verdict::NotApplicable;
    report.append_note("absorbing set vanishes at 0");
    return report;
  }
  const Domain& d = mu.domain();
  const std::vector<double> v = mu.sample();
  const std::vector<double> pts = lattice_points(d);
  const std::size_t n = d.dimension();
  Point y(n);
  std::size_t levels = 0;
  for (double theta : thetas) {
    if (!(theta < m0)) continue;
    ++levels;
    double best = std::numeric_limits<double>::infinity();
    double best_t = 0.0;
    for (double t : ts) {
      double worst = 0.0;
      for (std::size_t i = 0; i < d.size() && worst <= best; ++i) {
        if (v[i] >= theta) continue;
        for (std::size_t k = 0; k < n; ++k) y[k] = pts[i * n + k] / t;
        worst = std::max(worst, std::min(theta, eta(y)) - v[i]);
      }
      if (worst < best) {
        best = worst;
        best_t = t;
      }
      if (best <= 0.0) break;
    }
    report.record(best, {}, {{"theta", theta}, {"t", best_t}});
    if (best <= 0.0 && report.parameters.empty()) report.parameters = {{"theta", theta}, {"t", best_t}};
  }
  report.metric("levels_checked", double(levels));
  return report.decide();
}

CheckReport is_bounded(const FuzzySet& mu, std::span<const FuzzySet> neighborhoods, std::span<const double> thetas,
                       std::span<const double> ts) {
  if (neighborhoods.empty()) throw ArgumentError("is_bounded: empty neighborhood catalog");
  CheckReport report("is_bounded", kAbsorptionTolerance);
  std::size_t failed = 0;
  for (std::size_t i = 0; i < neighborhoods.size(); ++i) {
    const CheckReport r = absorbs(neighborhoods[i], mu, thetas, ts);
    if (!r.passed()) {
      ++failed;
      const double viol = r.verdict == Verdict::NotApplicable ? 1.0 : r.max_violation;
      auto params = r.parameters;
      params.emplace_back("neighborhood", double(i));
      report.record(std::max(viol, std::nextafter(report.tolerance, 1.0)), {}, std::move(params));
    }
  }
  report.metric("neighborhoods", double(neighborhoods.size()));
  report.metric("not_absorbed_by", double(failed));
  report.decide();
  if (failed) report.note = "not absorbed by " + std::to_string(failed) + " catalog neighborhood(s)";
  return report;
}

namespace {

using Interval = std::pair<double, double>;

std::vector<Interval> box_of(const Domain& d) {
  std::vector<Interval> out;
  for (const Axis& a : d.axes()) out.emplace_back(a.lo, a.hi);
  return out;
}

std::vector<Interval> affine_image(const AffineMap& m, const std::vector<Interval>& box) {
  std::vector<Interval> out(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    double lo = m.offset.empty() ? 0.0 : m.offset[r];
    double hi = lo;
    for (std::size_t c = 0; c < m.cols; ++c) {
      const double w = m.matrix[r * m.cols + c];
      lo += std::min(w * box[c].first, w * box[c].second);
      hi += std::max(w * box[c].first, w * box[c].second);
    }
    out[r] = {lo, hi};
  }
  return out;
}

bool inside(const std::vector<Interval>& region, const Domain& d) {
  if (!d.bounded()) return true;
  for (std::size_t k = 0; k < region.size(); ++k) {
    if (region[k].first < d.axis(k).lo || region[k].second > d.axis(k).hi) return false;
  }
  return true;
}

// Membership is 0 on the faces of the set's own box, so reading it as 0
// beyond the box keeps it lsc.
bool vanishes_on_boundary(const FuzzySet& mu) {
  const Domain& d = mu.domain();
  if (!d.bounded()) return true;
  return std::visit(
      [&](const auto& b) -> bool {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, node::Constant>) {
          return b.value == 0.0;
        } else if constexpr (std::is_same_v<T, node::CrispIndicator>) {
          const Predicate& p = b.predicate;
          if (!p.open) return false;
          for (std::size_t k = 0; k < d.dimension(); ++k) {
            const Axis& a = d.axis(k);
            if (p.shape == Shape::Ball && (p.center[k] - p.radius < a.lo || p.center[k] + p.radius > a.hi)) return false;
            if (p.shape == Shape::Box && (p.lo[k] < a.lo || p.hi[k] > a.hi)) return false;
            if (p.shape == Shape::HalfSpace) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, node::Triangular>) {
          return b.a >= d.axis(0).lo && b.c <= d.axis(0).hi;
        } else if constexpr (std::is_same_v<T, node::Meet>) {
          return std::any_of(b.children.begin(), b.children.end(), vanishes_on_boundary);
        } else if constexpr (std::is_same_v<T, node::Join>) {
          return std::all_of(b.children.begin(), b.children.end(), vanishes_on_boundary);
        } else {
          return false;
        }
      },
      mu.body());
}

// The child is read over `region`; past its box it reads as 0.
bool truncation_safe(const FuzzySet& child, const std::vector<Interval>& region) {
  return inside(region, child.domain()) || vanishes_on_boundary(child);
}

}  // namespace

StructuralLsc structural_lsc(const FuzzySet& mu) {
  return std::visit(
      [&](const auto& b) -> StructuralLsc {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, node::Constant>) {
          return {LscProof::Lsc, "constant"};
        } else if constexpr (std::is_same_v<T, node::CrispIndicator>) {
          if (b.predicate.open || b.predicate.degenerate()) return {LscProof::Lsc, "indicator of an open set"};
          return {LscProof::NotLsc, "indicator of a closed, non-open set"};
        } else if constexpr (std::is_same_v<T, node::Triangular>) {
          if (b.a < b.b && b.b < b.c) return {LscProof::Lsc, "continuous triangular"};
          return {LscProof::NotLsc, "triangular with a vertical edge at its peak"};
        } else if constexpr (std::is_same_v<T, node::GridSample> || std::is_same_v<T, node::SupMinSum> ||
                             std::is_same_v<T, node::Image>) {
          return {LscProof::Undetermined, "materialized grid"};
        } else if constexpr (std::is_same_v<T, node::Meet> || std::is_same_v<T, node::Join>) {
          if (b.children.size() == 1) return structural_lsc(b.children.front());
          for (const FuzzySet& c : b.children) {
            const StructuralLsc s = structural_lsc(c);
            if (s.proof != LscProof::Lsc) {
              return {LscProof::Undetermined, "operand not provably lsc (" + s.reason + ")"};
            }
          }
          return {LscProof::Lsc, std::is_same_v<T, node::Meet> ? "finite meet of lsc" : "join of lsc"};
        } else if constexpr (std::is_same_v<T, node::Scale>) {
          if (b.t != 0.0) {
            std::vector<Interval> region = box_of(mu.domain());
            for (Interval& r : region) r = {std::min(r.first / b.t, r.second / b.t), std::max(r.first / b.t, r.second / b.t)};
            if (!truncation_safe(*b.child, region)) return {LscProof::Undetermined, "dilation reads its argument past its box"};
            return structural_lsc(*b.child);
          }
          if (b.height_at_zero == 0.0) return {LscProof::Lsc, "zero set"};
          return {LscProof::NotLsc, "singleton at the origin"};
        } else if constexpr (std::is_same_v<T, node::Translate>) {
          std::vector<Interval> region = box_of(mu.domain());
          for (std::size_t k = 0; k < region.size(); ++k) {
            region[k] = {region[k].first - b.shift[k], region[k].second - b.shift[k]};
          }
          if (!truncation_safe(*b.child, region)) return {LscProof::Undetermined, "translate reads its argument past its box"};
          return structural_lsc(*b.child);
        } else if constexpr (std::is_same_v<T, node::Pullback>) {
          const StructuralLsc s = structural_lsc(*b.child);
          const bool safe = truncation_safe(*b.child, affine_image(b.map, box_of(mu.domain())));
          if (s.proof == LscProof::Lsc && !safe) return {LscProof::Undetermined, "affine image leaves the box of the argument"};
          if (s.proof == LscProof::Lsc) return {LscProof::Lsc, "pullback of lsc under an affine map"};
          const auto region = affine_image(b.map, box_of(mu.domain()));
          bool covers = !b.child->domain().bounded();
          if (!covers) {
            covers = true;
            for (std::size_t k = 0; k < region.size(); ++k) {
              const Axis& a = b.child->domain().axis(k);
              covers = covers && region[k].first < a.lo && region[k].second > a.hi;
            }
          }
          if (s.proof == LscProof::NotLsc && b.map.surjective() && covers) {
            return {LscProof::NotLsc, "pullback of non-lsc under an open affine surjection"};
          }
          return {LscProof::Undetermined, "pullback of " + s.reason};
        } else if constexpr (std::is_same_v<T, node::Sublevel>) {
          if (b.value == 0.0) return {LscProof::Lsc, "zero set"};
          if (b.strict && b.gauge_continuous) return {LscProof::Lsc, "strict sublevel set of a continuous gauge"};
          return {LscProof::Undetermined, "sublevel set " + b.label};
        }
      },
      mu.body());
}

LscFalsification falsify_lsc(const FuzzySet& mu, double tol, int refinements) {
  LscFalsification out;
  const Domain& d = mu.domain();
  const std::size_t n = d.dimension();
  double base = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) base = std::min(base, d.step(k));
  const bool corners = n <= 3;
  const std::vector<double> v = mu.sample();
  Point x(n), probe(n);

  for (std::size_t i = 0; i < d.size(); ++i) {
    if (v[i] <= tol) continue;
    ++out.points_examined;
    d.point_into(i, x);
    bool all_below = true;
    bool any_level = false;
    double finest = v[i];
    for (int level = 0; level <= refinements && all_below; ++level) {
      const double r = std::ldexp(base, -level);
      // Past the floating-point resolution at x the probes collapse onto one side.
      const bool resolved = std::all_of(x.begin(), x.end(), [r](double c) { return c + r != c && c - r != c; });
      if (!resolved) break;
      double low = std::numeric_limits<double>::infinity();
      bool counted = false;
      auto visit = [&]() {
        if (!d.contains(probe) || std::equal(probe.begin(), probe.end(), x.begin())) return;
        counted = true;
        low = std::min(low, mu(probe));
      };
      for (std::size_t axis = 0; axis < n; ++axis) {
        for (double sign : {-1.0, 1.0}) {
          probe = x;
          probe[axis] += sign * r;
          visit();
        }
      }
      if (corners) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          for (std::size_t axis = 0; axis < n; ++axis) probe[axis] = x[axis] + ((mask >> axis) & 1 ? r : -r);
          visit();
        }
      }
      if (!counted) continue;
      any_level = true;
      if (low < v[i] - tol) {
        finest = low;
      } else {
        all_below = false;
      }
    }
    if (all_below && any_level) {
      const double viol = v[i] - finest;
      if (!out.found || viol > out.violation) {
        out.found = true;
        out.violation = viol;
        out.witness = x;
      }
    }
  }
  return out;
}

CheckReport is_lsc(const FuzzySet& mu) {
  CheckReport report("is_lsc", kLscTolerance);
  const StructuralLsc s = structural_lsc(mu);
  const LscFalsification f = falsify_lsc(mu);
  report.metric("points_examined", double(f.points_examined));
  report.metric("structural", s.proof == LscProof::Lsc ? 1.0 : s.proof == LscProof::NotLsc ? -1.0 : 0.0);
  report.note = "structural: " + s.reason;
  if (f.found) {
    report.max_violation = f.violation;
    report.witness = f.witness;
    report.verdict = Verdict::Fail;
    report.append_note(s.proof == LscProof::Lsc ? "refinement falsifier contradicts the structural proof"
                                                : "refinement falsifier found a jump down");
  } else if (s.proof == LscProof::Lsc) {
    report.verdict = Verdict::Pass;
  } else if (s.proof == LscProof::NotLsc) {
    report.verdict = Verdict::Fail;
    report.max_violation = 1.0;
    report.append_note("no lattice witness; verdict from structure");
  } else {
    report.verdict = Verdict::Unknown;
    report.append_note("no falsification at the finest refinement level");
  }
  return report;
}

CheckReport topology_axioms_check(std::span<const FuzzySet> family, std::span<const double> constants) {
  CheckReport report("topology_axioms", 0.0);
  if (family.empty()) throw ArgumentError("topology_axioms_check: empty family");
  const Domain& d = family.front().domain();
  std::vector<std::vector<double>> samples;
  for (const FuzzySet& mu : family) {
    if (mu.domain().size() != d.size() || mu.domain().dimension() != d.dimension()) {
      throw ArgumentError("topology_axioms_check: members must share a lattice");
    }
    samples.push_back(mu.sample());
  }
  auto distance_to_family = [&](const std::vector<double>& target) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
      best = std::min(best, linalg::max_abs_diff(s, target));
      if (best == 0.0) break;
    }
    return best;
  };
  std::size_t missing = 0;
  for (double c : constants) {
    const double gap = distance_to_family(std::vector<double>(d.size(), c));
    if (gap > 0.0) {
      ++missing;
      report.record(gap, {}, {{"constant", c}});
    }
  }
  std::vector<double> lo(d.size()), hi(d.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      for (std::size_t k = 0; k < d.size(); ++k) {
        lo[k] = std::min(samples[i][k], samples[j][k]);
        hi[k] = std::max(samples[i][k], samples[j][k]);
      }
      const double gm = distance_to_family(lo);
      if (gm > 0.0) {
        ++missing;
        report.record(gm, {}, {{"meet_of", double(i)}, {"and", double(j)}});
      }
      const double gj = distance_to_family(hi);
      if (gj > 0.0) {
        ++missing;
        report.record(gj, {}, {{"join_of", double(i)}, {"and", double(j)}});
      }
    }
  }
  report.metric("members", double(family.size()));
  report.metric("missing", double(missing));
  report.note = "pairwise closure implies closure under all finite meets and joins";
  return report.decide();
}

CheckReport hausdorff_check(std::span<const FuzzySet> family, std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("hausdorff_check: points differ in dimension");
  if (std::equal(x.begin(), x.end(), y.begin())) throw ArgumentError("hausdorff_check: points must be distinct");
  CheckReport report("hausdorff", 0.0);
  std::vector<std::vector<double>> samples;
  for (const FuzzySet& mu : family) samples.push_back(mu.sample());
  double best = 1.0;
  std::pair<std::size_t, std::size_t> best_pair{0, 0};
  for (std::size_t i = 0; i < family.size(); ++i) {
    const double at_x = family[i](x);
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j || samples[i].size() != samples[j].size()) continue;
      double viol = std::max(1.0 - at_x, 1.0 - family[j](y));
      for (std::size_t k = 0; k < samples[i].size() && viol < best; ++k) {
        viol = std::max(viol, std::min(samples[i][k], samples[j][k]));
      }
      if (viol < best) {
        best = viol;
        best_pair = {i, j};
      }
    }
  }
  report.max_violation = best;
  report.parameters = {{"eta", double(best_pair.first)}, {"beta", double(best_pair.second)}};
  report.witness.assign(x.begin(), x.end());
  report.witness.insert(report.witness.end(), y.begin(), y.end());
  return report.decide();
}

}  // namespace ftvs
