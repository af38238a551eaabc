#include "ftvs/fuzzy_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ftvs/linalg.hpp"

namespace ftvs {

AffineMap::AffineMap(std::size_t rows, std::size_t cols, std::vector<double> matrix,
                     std::vector<double> offset)
    : rows(rows), cols(cols), matrix(std::move(matrix)), offset(std::move(offset)) {
  if (rows == 0 || cols == 0) throw ArgumentError("affine map needs positive dimensions");
  if (this->matrix.size() != rows * cols) {
    throw ArgumentError("affine map matrix has " + std::to_string(this->matrix.size()) +
                        " entries, expected " + std::to_string(rows * cols));
  }
  if (this->offset.empty()) this->offset.assign(rows, 0.0);
  if (this->offset.size() != rows) throw ArgumentError("affine map offset length mismatch");
}

AffineMap AffineMap::identity(std::size_t n) {
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
  return AffineMap(n, n, std::move(m));
}

AffineMap AffineMap::functional(std::span<const double> coefficients) {
  return AffineMap(1, coefficients.size(), std::vector<double>(coefficients.begin(), coefficients.end()));
}

AffineMap AffineMap::projection(std::size_t total, std::size_t first, std::size_t count) {
  if (first + count > total) throw ArgumentError("projection range exceeds dimension");
  std::vector<double> m(count * total, 0.0);
  for (std::size_t i = 0; i < count; ++i) m[i * total + first + i] = 1.0;
  return AffineMap(count, total, std::move(m));
}

void AffineMap::apply(std::span<const double> x, std::span<double> out) const {
  for (std::size_t r = 0; r < rows; ++r) {
    double acc = 0.0;
    const double* row = matrix.data() + r * cols;
    for (std::size_t c = 0; c < cols; ++c) acc += row[c] * x[c];
    out[r] = acc + offset[r];
  }
}

Point AffineMap::operator()(std::span<const double> x) const {
  if (x.size() != cols) throw ArgumentError("affine map applied to a point of wrong dimension");
  Point out(rows);
  apply(x, out);
  return out;
}

bool AffineMap::surjective() const {
  return linalg::rank(linalg::Matrix(rows, cols, matrix)) == rows;
}

Predicate Predicate::ball(Point center, double radius, bool open) {
  if (!(radius >= 0.0)) throw ArgumentError("ball radius must be non-negative");
  Predicate p;
  p.shape = Shape::Ball;
  p.open = open;
  p.center = std::move(center);
  p.radius = radius;
  return p;
}

Predicate Predicate::box(Point lo, Point hi, bool open) {
  if (lo.size() != hi.size() || lo.empty()) throw ArgumentError("box bounds must have equal nonzero length");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] <= hi[i])) throw ArgumentError("box lower corner exceeds upper corner");
  }
  Predicate p;
  p.shape = Shape::Box;
  p.open = open;
  p.lo = std::move(lo);
  p.hi = std::move(hi);
  return p;
}

Predicate Predicate::halfspace(Point normal, double offset, bool open) {
  if (normal.empty()) throw ArgumentError("halfspace normal must be nonempty");
  Predicate p;
  p.shape = Shape::HalfSpace;
  p.open = open;
  p.normal = std::move(normal);
  p.offset = offset;
  return p;
}

std::size_t Predicate::dimension() const {
  switch (shape) {
    case Shape::Ball: return center.size();
    case Shape::Box: return lo.size();
    case Shape::HalfSpace: return normal.size();
  }
  return 0;
}

bool Predicate::contains(std::span<const double> x) const {
  switch (shape) {
    case Shape::Ball: {
      double s = 0.0;
      for (std::size_t i = 0; i < center.size(); ++i) {
        const double d = x[i] - center[i];
        s += d * d;
      }
      const double r2 = radius * radius;
      return open ? s < r2 : s <= r2;
    }
    case Shape::Box:
      for (std::size_t i = 0; i < lo.size(); ++i) {
        if (open ? !(x[i] > lo[i] && x[i] < hi[i]) : !(x[i] >= lo[i] && x[i] <= hi[i])) return false;
      }
      return true;
    case Shape::HalfSpace: {
      double s = 0.0;
      for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
      return open ? s < offset : s <= offset;
    }
  }
  return false;
}

bool Predicate::degenerate() const {
  if (shape != Shape::HalfSpace) return false;
  return std::all_of(normal.begin(), normal.end(), [](double v) { return v == 0.0; });
}

namespace {

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw ArgumentError(std::string(what) + " must lie in [0,1]");
}

void validate(const Domain& d, const node::Body& body) {
  const std::size_t n = d.dimension();
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, node::Constant>) {
          check_unit(b.value, "constant");
        } else if constexpr (std::is_same_v<T, node::CrispIndicator>) {
          if (b.predicate.dimension() != n) throw ArgumentError("indicator dimension does not match domain");
        } else if constexpr (std::is_same_v<T, node::Triangular>) {
          if (n != 1) throw ArgumentError("triangular fuzzy sets live on R only");
          if (!(b.a <= b.b && b.b <= b.c)) throw ArgumentError("triangular requires a <= b <= c");
        } else if constexpr (std::is_same_v<T, node::GridSample>) {
          if (!b.values || b.values->size() != d.size()) {
            throw ArgumentError("grid sample length must equal the lattice size " + std::to_string(d.size()));
          }
          for (double v : *b.values) check_unit(v, "grid sample value");
        } else if constexpr (std::is_same_v<T, node::Meet> || std::is_same_v<T, node::Join>) {
          if (b.children.empty()) throw ArgumentError("meet/join needs at least one operand");
          for (const auto& c : b.children) {
            if (c.domain().dimension() != n) throw ArgumentError("meet/join operands differ in dimension");
          }
        } else if constexpr (std::is_same_v<T, node::Scale>) {
          if (!b.child || b.child->domain().dimension() != n) throw ArgumentError("scale child dimension mismatch");
          check_unit(b.height_at_zero, "scale height");
        } else if constexpr (std::is_same_v<T, node::Translate>) {
          if (!b.child || b.shift.size() != n || b.child->domain().dimension() != n) {
            throw ArgumentError("translate dimension mismatch");
          }
        } else if constexpr (std::is_same_v<T, node::Pullback>) {
          if (!b.child || b.map.cols != n || b.map.rows != b.child->domain().dimension()) {
            throw ArgumentError("pullback map dimensions do not match the domains");
          }
        } else if constexpr (std::is_same_v<T, node::SupMinSum> || std::is_same_v<T, node::Image>) {
          if (!b.values || b.values->size() != d.size()) throw ArgumentError("materialized grid size mismatch");
        } else if constexpr (std::is_same_v<T, node::Sublevel>) {
          if (!b.gauge) throw ArgumentError("sublevel set needs a gauge");
          check_unit(b.value, "sublevel value");
        }
      },
      body);
}

}  // namespace

FuzzySet::FuzzySet(Domain domain, node::Body body)
    : domain_(std::move(domain)), body_(std::make_shared<const node::Body>(std::move(body))) {
  validate(domain_, *body_);
}

double FuzzySet::operator()(std::span<const double> x) const {
  if (x.size() != domain_.dimension()) {
    throw ArgumentError("point of dimension " + std::to_string(x.size()) + " evaluated on a " +
                        std::to_string(domain_.dimension()) + "-dimensional fuzzy set");
  }
  if (domain_.bounded() && !domain_.contains(x)) return 0.0;
  return eval_body(x);
}

double FuzzySet::eval(std::initializer_list<double> x) const {
  return (*this)(std::span<const double>(x.begin(), x.size()));
}

double FuzzySet::eval_body(std::span<const double> x) const {
  return std::visit(
      [&](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, node::Constant>) {
          return b.value;
        } else if constexpr (std::is_same_v<T, node::CrispIndicator>) {
          return b.predicate.contains(x) ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, node::Triangular>) {
          const double t = x[0];
          if (t == b.b) return 1.0;
          if (t > b.a && t < b.b) return (t - b.a) / (b.b - b.a);
          if (t > b.b && t < b.c) return (b.c - t) / (b.c - b.b);
          return 0.0;
        } else if constexpr (std::is_same_v<T, node::GridSample>) {
          return (*b.values)[domain_.nearest(x)];
        } else if constexpr (std::is_same_v<T, node::Meet>) {
          double v = 1.0;
          for (const auto& c : b.children) v = std::min(v, c(x));
          return v;
        } else if constexpr (std::is_same_v<T, node::Join>) {
          double v = 0.0;
          for (const auto& c : b.children) v = std::max(v, c(x));
          return v;
        } else if constexpr (std::is_same_v<T, node::Scale>) {
          if (b.t == 0.0) {
            return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; }) ? b.height_at_zero : 0.0;
          }
          Point y(x.begin(), x.end());
          for (double& v : y) v /= b.t;
          return (*b.child)(y);
        } else if constexpr (std::is_same_v<T, node::Translate>) {
          Point y(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - b.shift[i];
          return (*b.child)(y);
        } else if constexpr (std::is_same_v<T, node::Pullback>) {
          Point y(b.map.rows);
          b.map.apply(x, y);
          return (*b.child)(y);
        } else if constexpr (std::is_same_v<T, node::SupMinSum> || std::is_same_v<T, node::Image>) {
          return (*b.values)[domain_.nearest(x)];
        } else if constexpr (std::is_same_v<T, node::Sublevel>) {
          const double g = b.gauge(x);
          return (b.strict ? g < b.threshold : g <= b.threshold) ? b.value : 0.0;
        }
      },
      *body_);
}

std::vector<double> FuzzySet::sample() const {
  std::vector<double> out(domain_.size());
  Point p(domain_.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) {
    domain_.point_into(i, p);
    out[i] = (*this)(p);
  }
  return out;
}

std::string FuzzySet::describe() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, node::Constant>) os << "constant(" << b.value << ')';
        else if constexpr (std::is_same_v<T, node::CrispIndicator>) {
          static const char* names[] = {"ball", "box", "halfspace"};
          os << (b.predicate.open ? "open-" : "closed-") << names[static_cast<int>(b.predicate.shape)];
        } else if constexpr (std::is_same_v<T, node::Triangular>)
          os << "triangular(" << b.a << ',' << b.b << ',' << b.c << ')';
        else if constexpr (std::is_same_v<T, node::GridSample>) os << "grid";
        else if constexpr (std::is_same_v<T, node::Meet>) os << "meet/" << b.children.size();
        else if constexpr (std::is_same_v<T, node::Join>) os << "join/" << b.children.size();
        else if constexpr (std::is_same_v<T, node::Scale>) os << "scale(" << b.t << ')';
        else if constexpr (std::is_same_v<T, node::Translate>) os << "translate";
        else if constexpr (std::is_same_v<T, node::Pullback>) os << "pullback";
        else if constexpr (std::is_same_v<T, node::SupMinSum>) os << "sup-min-sum";
        else if constexpr (std::is_same_v<T, node::Image>) os << "image";
        else if constexpr (std::is_same_v<T, node::Sublevel>) os << "sublevel(" << b.label << ')';
      },
      *body_);
  return os.str();
}

}  // namespace ftvs
