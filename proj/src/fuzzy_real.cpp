#include "ftvs/fuzzy_real.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ftvs {

std::vector<double> default_alpha_levels() {
  std::vector<double> levels = {1 / 100.0, 5 / 100.0};
  for (int k = 1; k <= 10; ++k) levels.push_back(k / 10.0);
  return levels;
}

FuzzyReal::FuzzyReal(std::vector<double> levels, std::vector<Interval> cuts, double normal_point)
    : levels_(std::move(levels)), cuts_(std::move(cuts)), normal_point_(normal_point) {
  if (levels_.empty() || levels_.size() != cuts_.size()) {
    throw ArgumentError("fuzzy real needs one cut per sampled level");
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i] > 0.0 && levels_[i] <= 1.0)) throw ArgumentError("alpha levels must lie in (0,1]");
    if (i > 0 && !(levels_[i] > levels_[i - 1])) throw ArgumentError("alpha levels must be strictly ascending");
  }
}

FuzzyReal FuzzyReal::crisp(double value, std::vector<double> levels) {
  std::vector<Interval> cuts(levels.size(), Interval{value, value});
  return FuzzyReal(std::move(levels), std::move(cuts), value);
}

Interval FuzzyReal::cut(double alpha) const {
  auto it = std::upper_bound(levels_.begin(), levels_.end(), alpha);
  std::size_t idx = it == levels_.begin() ? 0 : static_cast<std::size_t>(it - levels_.begin()) - 1;
  return cuts_[idx];
}

double FuzzyReal::membership(double t) const {
  double m = 0.0;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (cuts_[i].contains(t)) m = std::max(m, levels_[i]);
  }
  return m;
}

bool FuzzyReal::is_crisp(double value) const {
  return std::all_of(cuts_.begin(), cuts_.end(), [&](const Interval& c) { return c.lo == value && c.hi == value; });
}

FuzzyRealValidation validate_fuzzy_real(const FuzzyReal& eta, bool non_negative) {
  FuzzyRealValidation out;
  const auto& levels = eta.levels();
  const auto& cuts = eta.cuts();
  auto fail = [&](FuzzyRealValidation::Violation v, double a1, double a2, std::string msg) {
    out.violation = v;
    out.alpha_first = a1;
    out.alpha_second = a2;
    out.message = std::move(msg);
    return out;
  };
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Interval& c = cuts[i];
    if (!std::isfinite(c.lo) || !std::isfinite(c.hi) || c.lo > c.hi) {
      std::ostringstream os;
      os << "N2: cut at alpha=" << levels[i] << " is not a bounded closed interval [" << c.lo << ", " << c.hi << "]";
      return fail(FuzzyRealValidation::Violation::N2, levels[i], levels[i], os.str());
    }
  }
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const Interval& lower = cuts[i - 1];
    const Interval& upper = cuts[i];
    if (upper.lo < lower.lo || upper.hi > lower.hi) {
      std::ostringstream os;
      os << "nesting: cut at alpha=" << levels[i] << " is not inside the cut at alpha=" << levels[i - 1];
      return fail(FuzzyRealValidation::Violation::Nesting, levels[i - 1], levels[i], os.str());
    }
  }
  if (levels.back() != 1.0 || !cuts.back().contains(eta.normal_point())) {
    std::ostringstream os;
    os << "N1: no level-1 cut contains the normal point " << eta.normal_point();
    return fail(FuzzyRealValidation::Violation::N1, 1.0, 1.0, os.str());
  }
  if (non_negative) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (cuts[i].lo < 0.0) {
        std::ostringstream os;
        os << "non-negative: cut at alpha=" << levels[i] << " starts below zero";
        return fail(FuzzyRealValidation::Violation::Negative, levels[i], levels[i], os.str());
      }
    }
  }
  return out;
}

FuzzyReal scalar_scale(double r, const FuzzyReal& eta) {
  const double s = std::abs(r);
  std::vector<Interval> cuts;
  cuts.reserve(eta.cuts().size());
  for (const Interval& c : eta.cuts()) cuts.push_back({s * c.lo, s * c.hi});
  return FuzzyReal(eta.levels(), std::move(cuts), s * eta.normal_point());
}

FelbinNorm::FelbinNorm(std::string name, std::size_t dimension, Evaluator evaluate, CombinationMap left,
                       CombinationMap right, Membership membership, Traits traits)
    : name_(std::move(name)),
      dimension_(dimension),
      evaluate_(std::move(evaluate)),
      left_(std::move(left)),
      right_(std::move(right)),
      membership_(std::move(membership)),
      traits_(std::move(traits)) {
  if (dimension_ == 0) throw ArgumentError("norm dimension must be positive");
  if (!evaluate_ || !left_ || !right_) throw ArgumentError("norm needs an evaluator and both combination maps");
}

FuzzyReal FelbinNorm::operator()(std::span<const double> x) const {
  if (x.size() != dimension_) throw ArgumentError("norm '" + name_ + "' applied to a vector of wrong dimension");
  return evaluate_(x);
}

double FelbinNorm::membership(std::span<const double> x, double t) const {
  if (membership_) return membership_(x, t);
  return (*this)(x).membership(t);
}

double FelbinNorm::upper(std::span<const double> x, double alpha) const {
  if (traits_.crisp_gauge) return traits_.crisp_gauge(x);
  return (*this)(x).upper(alpha);
}

double FelbinNorm::sup_upper(std::span<const double> x) const {
  if (traits_.crisp_gauge) return traits_.crisp_gauge(x);
  const FuzzyReal r = (*this)(x);
  double m = r.cuts().front().hi;
  for (const Interval& c : r.cuts()) m = std::max(m, c.hi);
  return m;
}

CombinationMap min_map() {
  return [](double a, double b) { return std::min(a, b); };
}

CombinationMap max_map() {
  return [](double a, double b) { return std::max(a, b); };
}

namespace {

double euclidean_length(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

FelbinNorm crisp_felbin_norm(std::string name, std::size_t n,
                             std::function<double(std::span<const double>)> gauge,
                             std::vector<double> levels) {
  auto eval = [gauge, levels](std::span<const double> x) { return FuzzyReal::crisp(gauge(x), levels); };
  auto member = [gauge](std::span<const double> x, double t) { return t == gauge(x) ? 1.0 : 0.0; };
  return FelbinNorm(std::move(name), n, eval, min_map(), max_map(), member, FelbinTraits{gauge, true});
}

FelbinNorm euclidean_felbin_norm(std::size_t n, std::vector<double> levels) {
  return crisp_felbin_norm("euclidean", n, euclidean_length, std::move(levels));
}

FelbinNorm star_norm_on_K(std::vector<double> levels) {
  auto eval = [levels](std::span<const double> x) {
    const double a = std::abs(x[0]);
    if (a == 0.0) return FuzzyReal::crisp(0.0, levels);
    std::vector<Interval> cuts;
    cuts.reserve(levels.size());
    for (double alpha : levels) cuts.push_back({0.0, a * (1.0 - alpha)});
    return FuzzyReal(levels, std::move(cuts), 0.0);
  };
  auto member = [](std::span<const double> x, double t) {
    const double a = std::abs(x[0]);
    if (a == 0.0) return t == 0.0 ? 1.0 : 0.0;
    if (t < 0.0 || t > a) return 0.0;
    return 1.0 - t / a;
  };
  return FelbinNorm("star", 1, eval, min_map(), max_map(), member, FelbinTraits{{}, true});
}

std::vector<double> default_homogeneity_scalars() { return {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}; }

CheckReport felbin_axioms_check(const FelbinNorm& norm, std::span<const Point> vectors,
                                std::span<const double> offsets, std::span<const double> scalars) {
  CheckReport report("felbin_axioms", kAxiomTolerance);
  const std::size_t n = norm.dimension();
  std::vector<Point> xs(vectors.begin(), vectors.end());
  xs.emplace_back(n, 0.0);
  for (const Point& x : xs) {
    if (x.size() != n) throw ArgumentError("felbin_axioms_check: sample vector of wrong dimension");
  }
  const std::vector<double> default_scalars = default_homogeneity_scalars();
  if (scalars.empty()) scalars = default_scalars;

  double v_valid = 0.0, v_f1 = 0.0, v_f2 = 0.0, v_f3r = 0.0, v_f3l = 0.0, v_lr = 0.0;
  std::string first_failure;
  auto note_failure = [&](const std::string& what) {
    if (first_failure.empty()) first_failure = what;
  };

  // L and R: symmetric, non-decreasing, L(0,0)=0, R(1,1)=1 on an 11-point grid.
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double a = i / 10.0, b = j / 10.0;
      double v = std::max(std::abs(norm.left(a, b) - norm.left(b, a)), std::abs(norm.right(a, b) - norm.right(b, a)));
      if (i < 10) {
        const double a2 = (i + 1) / 10.0;
        v = std::max(v, norm.left(a, b) - norm.left(a2, b));
        v = std::max(v, norm.right(a, b) - norm.right(a2, b));
      }
      v_lr = std::max(v_lr, v);
    }
  }
  v_lr = std::max({v_lr, std::abs(norm.left(0, 0)), std::abs(norm.right(1, 1) - 1.0)});
  if (v_lr > 0.0) note_failure("L/R maps");

  std::vector<FuzzyReal> norms;
  norms.reserve(xs.size());
  for (const Point& x : xs) {
    norms.push_back(norm(x));
    const FuzzyRealValidation val = validate_fuzzy_real(norms.back(), true);
    if (!val.ok()) {
      v_valid = std::max(v_valid, 1.0);
      note_failure("validity (" + val.message + ")");
      report.record(1.0, x, {{"axiom", 0.0}});
    }
  }

  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool is_zero = std::all_of(xs[i].begin(), xs[i].end(), [](double v) { return v == 0.0; });
    const bool crisp_zero = norms[i].is_crisp_zero();
    if (is_zero != crisp_zero) {
      double mag = 1.0;
      if (is_zero) {
        mag = 0.0;
        for (const Interval& c : norms[i].cuts()) mag = std::max({mag, std::abs(c.lo), std::abs(c.hi)});
      }
      v_f1 = std::max(v_f1, mag);
      note_failure("F1");
      report.record(mag, xs[i], {{"axiom", 1.0}});
    }
  }

  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (double r : scalars) {
      Point rx = xs[i];
      for (double& v : rx) v *= r;
      const FuzzyReal lhs = norm(rx);
      const FuzzyReal rhs = scalar_scale(r, norms[i]);
      double diff = 0.0;
      for (std::size_t k = 0; k < lhs.cuts().size(); ++k) {
        diff = std::max({diff, std::abs(lhs.cuts()[k].lo - rhs.cuts()[k].lo),
                         std::abs(lhs.cuts()[k].hi - rhs.cuts()[k].hi)});
      }
      if (diff > kAxiomTolerance) {
        v_f2 = std::max(v_f2, diff);
        note_failure("F2");
        report.record(diff, xs[i], {{"axiom", 2.0}, {"r", r}});
      }
    }
  }

  auto candidates = [&](const FuzzyReal& eta, bool above) {
    std::vector<double> c;
    const double base = eta.lower(1.0);
    c.push_back(base);
    for (double d : offsets) c.push_back(above ? base + std::abs(d) : base - std::abs(d));
    for (const Interval& cut : eta.cuts()) {
      c.push_back(cut.hi);
      c.push_back(cut.lo);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  };

  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      Point sum(n);
      for (std::size_t k = 0; k < n; ++k) sum[k] = xs[i][k] + xs[j][k];
      const FuzzyReal nsum = norm(sum);
      const double lx = norms[i].lower(1.0), ly = norms[j].lower(1.0), lxy = nsum.lower(1.0);
      for (int side = 0; side < 2; ++side) {
        const bool right_side = side == 0;
        std::vector<double> ss = candidates(norms[i], right_side);
        std::vector<double> ts = candidates(norms[j], right_side);
        // Values of s that put s + t exactly at ||x+y||^-_1 for each t.
        const std::size_t base_ts = ts.size();
        for (std::size_t k = 0; k < base_ts; ++k) ss.push_back(lxy - ts[k]);
        for (double s : ss) {
          for (double t : ts) {
            const double st = s + t;
            if (right_side) {
              if (!(s >= lx && t >= ly && st >= lxy)) continue;
              const double v = norm.membership(sum, st) -
                               norm.right(norm.membership(xs[i], s), norm.membership(xs[j], t));
              if (v > kAxiomTolerance) {
                v_f3r = std::max(v_f3r, v);
                note_failure("F3R");
                Point at = xs[i];
                at.insert(at.end(), xs[j].begin(), xs[j].end());
                report.record(v, at, {{"axiom", 3.0}, {"s", s}, {"t", t}});
              }
            } else {
              if (!(s <= lx && t <= ly && st <= lxy)) continue;
              const double v = norm.left(norm.membership(xs[i], s), norm.membership(xs[j], t)) -
                               norm.membership(sum, st);
              if (v > kAxiomTolerance) {
                v_f3l = std::max(v_f3l, v);
                note_failure("F3L");
                Point at = xs[i];
                at.insert(at.end(), xs[j].begin(), xs[j].end());
                report.record(v, at, {{"axiom", 4.0}, {"s", s}, {"t", t}});
              }
            }
          }
        }
      }
    }
  }

  report.metric("validity_violation", v_valid);
  report.metric("lr_violation", v_lr);
  report.metric("f1_violation", v_f1);
  report.metric("f2_violation", v_f2);
  report.metric("f3r_violation", v_f3r);
  report.metric("f3l_violation", v_f3l);
  report.metric("vectors", static_cast<double>(xs.size()));
  report.max_violation = std::max({v_valid, v_lr, v_f1, v_f2, v_f3r, v_f3l});
  report.decide();
  report.note = "norm '" + norm.name() + "'; F3 sampled, a pass is evidence not proof";
  if (!first_failure.empty()) report.append_note("first failing axiom: " + first_failure);
  return report;
}

}  // namespace ftvs
