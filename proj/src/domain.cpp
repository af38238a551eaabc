#include "ftvs/domain.hpp"

#include <cmath>
#include <sstream>

namespace ftvs {

Domain::Domain(std::vector<Axis> axes, bool bounded) : axes_(std::move(axes)), bounded_(bounded) {
  if (axes_.empty()) throw ArgumentError("domain must have at least one axis");
  size_ = 1;
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    const Axis& a = axes_[i];
    if (!(std::isfinite(a.lo) && std::isfinite(a.hi)) || !(a.lo < a.hi)) {
      throw ArgumentError("domain axis " + std::to_string(i) + ": lower bound must be below upper bound");
    }
    if (a.points < 2) {
      throw ArgumentError("domain axis " + std::to_string(i) + ": resolution must be at least 2");
    }
    size_ *= a.points;
  }
}

Domain Domain::cube(std::size_t dimension, double lo, double hi, std::size_t points, bool bounded) {
  return Domain(std::vector<Axis>(dimension, Axis{lo, hi, points}), bounded);
}

double Domain::coordinate(std::size_t axis, std::size_t index) const {
  const Axis& a = axes_[axis];
  const double n = static_cast<double>(a.points - 1);
  const double i = static_cast<double>(index);
  return (a.lo * (n - i) + a.hi * i) / n;
}

double Domain::step(std::size_t axis) const {
  const Axis& a = axes_[axis];
  return (a.hi - a.lo) / static_cast<double>(a.points - 1);
}

Point Domain::point(std::size_t flat) const {
  Point p(axes_.size());
  point_into(flat, p);
  return p;
}

void Domain::point_into(std::size_t flat, std::span<double> out) const {
  for (std::size_t k = axes_.size(); k-- > 0;) {
    const std::size_t n = axes_[k].points;
    out[k] = coordinate(k, flat % n);
    flat /= n;
  }
}

bool Domain::contains(std::span<const double> x) const {
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (!(x[k] >= axes_[k].lo && x[k] <= axes_[k].hi)) return false;
  }
  return true;
}

std::size_t Domain::nearest(std::span<const double> x) const {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    const Axis& a = axes_[k];
    const double pos = (x[k] - a.lo) / step(k);
    long idx = std::lround(pos);
    if (std::isnan(pos) || idx < 0) idx = 0;
    if (idx > static_cast<long>(a.points - 1)) idx = static_cast<long>(a.points - 1);
    flat = flat * a.points + static_cast<std::size_t>(idx);
  }
  return flat;
}

std::size_t Domain::find_exact(std::span<const double> x) const {
  if (!contains(x)) return size_;
  const std::size_t flat = nearest(x);
  std::size_t rest = flat;
  for (std::size_t k = axes_.size(); k-- > 0;) {
    const std::size_t n = axes_[k].points;
    if (coordinate(k, rest % n) != x[k]) return size_;
    rest /= n;
  }
  return flat;
}

Domain Domain::product(const Domain& first, const Domain& second) {
  std::vector<Axis> axes = first.axes_;
  axes.insert(axes.end(), second.axes_.begin(), second.axes_.end());
  return Domain(std::move(axes), first.bounded_ && second.bounded_);
}

bool Domain::operator==(const Domain& other) const {
  if (bounded_ != other.bounded_ || axes_.size() != other.axes_.size()) return false;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    const Axis& a = axes_[k];
    const Axis& b = other.axes_[k];
    if (a.lo != b.lo || a.hi != b.hi || a.points != b.points) return false;
  }
  return true;
}

std::string Domain::describe() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (k) os << " x ";
    os << '[' << axes_[k].lo << ',' << axes_[k].hi << "]/" << axes_[k].points;
  }
  if (!bounded_) os << " (unbounded)";
  return os.str();
}

}  // namespace ftvs
