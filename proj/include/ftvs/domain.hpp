#ifndef FTVS_DOMAIN_HPP
#define FTVS_DOMAIN_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftvs {

using Point = std::vector<double>;

/// Raised for malformed arguments: dimension mismatches, out-of-range
/// levels, empty operand lists.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Axis {
  double lo = -1.0;
  double hi = 1.0;
  std::size_t points = 2;
};

/// A box in R^n sampled by a uniform lattice.
///
/// Lattice coordinates are computed as (lo*(n-1-i) + hi*i)/(n-1), which is
/// exact at both endpoints and at the centre of symmetric boxes with an odd
/// point count. When `bounded` is true every fuzzy set defined on the domain
/// has membership 0 outside the box. An unbounded domain keeps the lattice for
/// sweeps but lets analytic memberships extend to all of R^n and lets grid
/// data extend by its nearest edge value.
class Domain {
 public:
  Domain() = default;
  Domain(std::vector<Axis> axes, bool bounded = true);

  /// Same interval and resolution on every axis.
  static Domain cube(std::size_t dimension, double lo, double hi, std::size_t points,
                     bool bounded = true);

  std::size_t dimension() const { return axes_.size(); }
  std::size_t size() const { return size_; }
  bool bounded() const { return bounded_; }
  const std::vector<Axis>& axes() const { return axes_; }
  const Axis& axis(std::size_t i) const { return axes_.at(i); }

  double coordinate(std::size_t axis, std::size_t index) const;
  double step(std::size_t axis) const;

  /// Lattice point for a flat row-major index (last axis fastest).
  Point point(std::size_t flat) const;
  void point_into(std::size_t flat, std::span<double> out) const;

  bool contains(std::span<const double> x) const;

  /// Nearest lattice index per axis, flattened. Points outside the box are
  /// clamped onto the nearest face.
  std::size_t nearest(std::span<const double> x) const;

  /// Flat index of the lattice point equal to x, or size() when x is not a
  /// lattice point.
  std::size_t find_exact(std::span<const double> x) const;

  /// Concatenation of axes, used by product fuzzy sets.
  static Domain product(const Domain& first, const Domain& second);

  bool operator==(const Domain& other) const;

  std::string describe() const;

 private:
  std::vector<Axis> axes_;
  std::size_t size_ = 0;
  bool bounded_ = true;
};

}  // namespace ftvs

#endif  // FTVS_DOMAIN_HPP
