#ifndef FTVS_FUZZY_SET_HPP
#define FTVS_FUZZY_SET_HPP

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ftvs/domain.hpp"

namespace ftvs {

/// x -> A x + b, A stored row-major with `rows` outputs and `cols` inputs.
struct AffineMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> matrix;
  std::vector<double> offset;

  AffineMap() = default;
  AffineMap(std::size_t rows, std::size_t cols, std::vector<double> matrix,
            std::vector<double> offset = {});

  static AffineMap identity(std::size_t n);
  /// Single-row map x -> <c, x>.
  static AffineMap functional(std::span<const double> coefficients);
  /// Projection of R^(total) onto coordinates [first, first+count).
  static AffineMap projection(std::size_t total, std::size_t first, std::size_t count);

  void apply(std::span<const double> x, std::span<double> out) const;
  Point operator()(std::span<const double> x) const;

  /// True when the linear part has full row rank (the map is onto R^rows).
  bool surjective() const;
};

enum class Shape { Ball, Box, HalfSpace };

/// Crisp region used by indicator fuzzy sets. `open` selects strict
/// inequalities: |x-c|^2 < r^2, lo < x < hi, <n,x> < offset.
struct Predicate {
  Shape shape = Shape::Ball;
  bool open = true;
  Point center;
  double radius = 0.0;
  Point lo;
  Point hi;
  Point normal;
  double offset = 0.0;

  static Predicate ball(Point center, double radius, bool open);
  static Predicate box(Point lo, Point hi, bool open);
  static Predicate halfspace(Point normal, double offset, bool open);

  bool contains(std::span<const double> x) const;
  std::size_t dimension() const;
  /// An open predicate whose region is the whole space is trivially closed
  /// as well; everything else is classified by `open`.
  bool degenerate() const;
};

class FuzzySet;

namespace node {

struct Constant {
  double value;
};
struct CrispIndicator {
  Predicate predicate;
};
/// Triangular membership on R: rises on (a,b), peaks at b, falls on (b,c).
struct Triangular {
  double a, b, c;
};
/// Values on the owning domain's lattice, nearest-point lookup.
struct GridSample {
  std::shared_ptr<const std::vector<double>> values;
};
struct Meet {
  std::vector<FuzzySet> children;
};
struct Join {
  std::vector<FuzzySet> children;
};
/// (t mu)(x) = mu(x/t) for t != 0. For t == 0 the set is the singleton at
/// the origin carrying `height_at_zero`.
struct Scale {
  double t;
  std::shared_ptr<const FuzzySet> child;
  double height_at_zero;
};
struct Translate {
  Point shift;
  std::shared_ptr<const FuzzySet> child;
};
struct Pullback {
  AffineMap map;
  std::shared_ptr<const FuzzySet> child;
};
/// Materialized sup-min convolution of two operands.
struct SupMinSum {
  std::shared_ptr<const FuzzySet> left;
  std::shared_ptr<const FuzzySet> right;
  std::shared_ptr<const std::vector<double>> values;
};
/// Materialized image of `source` under `map`.
struct Image {
  AffineMap map;
  std::shared_ptr<const FuzzySet> source;
  std::shared_ptr<const std::vector<double>> values;
};
/// `value` where gauge(x) < threshold (or <= when not strict), else 0.
struct Sublevel {
  std::function<double(std::span<const double>)> gauge;
  double threshold;
  double value;
  bool strict;
  bool gauge_continuous;
  std::string label;
};

using Body = std::variant<Constant, CrispIndicator, Triangular, GridSample, Meet, Join, Scale,
                          Translate, Pullback, SupMinSum, Image, Sublevel>;

}  // namespace node

/// Immutable fuzzy set: a domain plus an expression tree. Copies share the
/// tree; evaluation is a pure function and is safe from many threads.
class FuzzySet {
 public:
  FuzzySet(Domain domain, node::Body body);

  const Domain& domain() const { return domain_; }
  const node::Body& body() const { return *body_; }

  /// Membership degree at x. Outside a bounded domain the degree is 0.
  double operator()(std::span<const double> x) const;
  double eval(std::span<const double> x) const { return (*this)(x); }
  double eval(std::initializer_list<double> x) const;

  /// Values on every lattice point, row-major.
  std::vector<double> sample() const;

  /// Short human-readable description of the tree root.
  std::string describe() const;

 private:
  double eval_body(std::span<const double> x) const;

  Domain domain_;
  std::shared_ptr<const node::Body> body_;
};

}  // namespace ftvs

#endif  // FTVS_FUZZY_SET_HPP
