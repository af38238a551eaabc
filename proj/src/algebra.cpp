#include "ftvs/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace ftvs {

namespace {

std::shared_ptr<const FuzzySet> share(const FuzzySet& mu) { return std::make_shared<const FuzzySet>(mu); }

}  // namespace

FuzzySet constant(const Domain& domain, double value) { return FuzzySet(domain, node::Constant{value}); }

FuzzySet zero_set(const Domain& domain) { return constant(domain, 0.0); }

FuzzySet indicator(const Domain& domain, Predicate predicate) {
  return FuzzySet(domain, node::CrispIndicator{std::move(predicate)});
}

FuzzySet triangular(const Domain& domain, double a, double b, double c) {
  return FuzzySet(domain, node::Triangular{a, b, c});
}

FuzzySet grid_sample(const Domain& domain, std::vector<double> values) {
  return FuzzySet(domain, node::GridSample{std::make_shared<const std::vector<double>>(std::move(values))});
}

FuzzySet singleton(const Domain& domain, double value) {
  return FuzzySet(domain, node::Scale{0.0, share(constant(domain, value)), value});
}

FuzzySet meet(std::span<const FuzzySet> operands) {
  if (operands.empty()) throw ArgumentError("meet of an empty family");
  return FuzzySet(operands.front().domain(), node::Meet{{operands.begin(), operands.end()}});
}

FuzzySet join(std::span<const FuzzySet> operands) {
  if (operands.empty()) throw ArgumentError("join of an empty family");
  return FuzzySet(operands.front().domain(), node::Join{{operands.begin(), operands.end()}});
}

FuzzySet meet(const FuzzySet& a, const FuzzySet& b) {
  const FuzzySet ops[] = {a, b};
  return meet(ops);
}

FuzzySet join(const FuzzySet& a, const FuzzySet& b) {
  const FuzzySet ops[] = {a, b};
  return join(ops);
}

FuzzySet scalar_mul(double t, const FuzzySet& mu) {
  if (!std::isfinite(t)) throw ArgumentError("scalar must be finite");
  const double h = t == 0.0 ? height(mu) : 0.0;
  return FuzzySet(mu.domain(), node::Scale{t, share(mu), h});
}

FuzzySet translate(std::span<const double> shift, const FuzzySet& mu) {
  if (shift.size() != mu.domain().dimension()) throw ArgumentError("translate: shift dimension mismatch");
  return FuzzySet(mu.domain(), node::Translate{Point(shift.begin(), shift.end()), share(mu)});
}

FuzzySet preimage(const AffineMap& f, const FuzzySet& eta, const Domain& source) {
  if (f.cols != source.dimension() || f.rows != eta.domain().dimension()) {
    throw ArgumentError("preimage: map is " + std::to_string(f.rows) + "x" + std::to_string(f.cols) +
                        ", domains are " + std::to_string(source.dimension()) + " -> " +
                        std::to_string(eta.domain().dimension()));
  }
  return FuzzySet(source, node::Pullback{f, share(eta)});
}

FuzzySet image(const AffineMap& f, const FuzzySet& mu, const Domain& target) {
  const Domain& src = mu.domain();
  if (f.cols != src.dimension() || f.rows != target.dimension()) {
    throw ArgumentError("image: map is " + std::to_string(f.rows) + "x" + std::to_string(f.cols) +
                        ", domains are " + std::to_string(src.dimension()) + " -> " +
                        std::to_string(target.dimension()));
  }
  auto values = std::make_shared<std::vector<double>>(target.size(), 0.0);
  Point x(src.dimension());
  Point y(target.dimension());
  for (std::size_t i = 0; i < src.size(); ++i) {
    src.point_into(i, x);
    f.apply(x, y);
    if (target.bounded() && !target.contains(y)) continue;
    double& cell = (*values)[target.nearest(y)];
    cell = std::max(cell, mu(x));
  }
  return FuzzySet(target, node::Image{f, share(mu), std::move(values)});
}

FuzzySet add(const FuzzySet& mu1, const FuzzySet& mu2) {
  if (!(mu1.domain() == mu2.domain())) throw ArgumentError("add: operands must share a domain");
  const Domain& d = mu1.domain();
  const std::vector<double> left = mu1.sample();
  auto values = std::make_shared<std::vector<double>>(d.size(), 0.0);
  Point x(d.dimension());
  Point x1(d.dimension());
  Point rest(d.dimension());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d.point_into(i, x);
    double best = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (left[j] <= best) continue;
      d.point_into(j, x1);
      for (std::size_t k = 0; k < x.size(); ++k) rest[k] = x[k] - x1[k];
      best = std::max(best, std::min(left[j], mu2(rest)));
    }
    (*values)[i] = best;
  }
  return FuzzySet(d, node::SupMinSum{share(mu1), share(mu2), std::move(values)});
}

FuzzySet interval_sum(const FuzzySet& a, const FuzzySet& b) {
  const auto* ia = std::get_if<node::CrispIndicator>(&a.body());
  const auto* ib = std::get_if<node::CrispIndicator>(&b.body());
  if (!ia || !ib || ia->predicate.shape != Shape::Box || ib->predicate.shape != Shape::Box ||
      a.domain().dimension() != 1 || b.domain().dimension() != 1) {
    throw ArgumentError("interval_sum: operands must be interval indicators on R");
  }
  if (ia->predicate.open != ib->predicate.open) {
    throw ArgumentError("interval_sum: mixed open/closed intervals are not supported");
  }
  const Predicate& p = ia->predicate;
  const Predicate& q = ib->predicate;
  return indicator(a.domain(), Predicate::box({p.lo[0] + q.lo[0]}, {p.hi[0] + q.hi[0]}, p.open));
}

FuzzySet product(const FuzzySet& mu1, const FuzzySet& mu2) {
  const Domain d = Domain::product(mu1.domain(), mu2.domain());
  const std::size_t n1 = mu1.domain().dimension();
  const std::size_t n2 = mu2.domain().dimension();
  const FuzzySet parts[] = {
      FuzzySet(d, node::Pullback{AffineMap::projection(n1 + n2, 0, n1), share(mu1)}),
      FuzzySet(d, node::Pullback{AffineMap::projection(n1 + n2, n1, n2), share(mu2)}),
  };
  return meet(parts);
}

double height(const FuzzySet& mu) {
  const Domain& d = mu.domain();
  Point p(d.dimension());
  double h = 0.0;
  for (std::size_t i = 0; i < d.size() && h < 1.0; ++i) {
    d.point_into(i, p);
    h = std::max(h, mu(p));
  }
  return h;
}

AlphaCut::AlphaCut(double level, Domain domain, std::vector<bool> members)
    : level_(level), domain_(std::move(domain)), members_(std::move(members)) {
  if (members_.size() != domain_.size()) throw ArgumentError("alpha cut size mismatch");
}

std::size_t AlphaCut::count() const { return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true)); }

bool AlphaCut::subset_of(const AlphaCut& other) const {
  if (!(domain_ == other.domain_)) return false;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] && !other.members_[i]) return false;
  }
  return true;
}

AlphaCut alpha_cut(const FuzzySet& mu, double level) {
  if (!(level > 0.0 && level <= 1.0)) throw ArgumentError("alpha level must lie in (0,1]");
  const std::vector<double> v = mu.sample();
  std::vector<bool> members(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) members[i] = v[i] >= level;
  return AlphaCut(level, mu.domain(), std::move(members));
}

}  // namespace ftvs
