#ifndef FTVS_ALGEBRA_HPP
#define FTVS_ALGEBRA_HPP

#include <span>
#include <vector>

#include "ftvs/fuzzy_set.hpp"

namespace ftvs {

// Leaf constructors.
FuzzySet constant(const Domain& domain, double value);
FuzzySet zero_set(const Domain& domain);
FuzzySet indicator(const Domain& domain, Predicate predicate);
FuzzySet triangular(const Domain& domain, double a, double b, double c);
FuzzySet grid_sample(const Domain& domain, std::vector<double> values);
/// Crisp singleton at the origin carrying `value` there and 0 elsewhere.
FuzzySet singleton(const Domain& domain, double value = 1.0);

/// Pointwise min / max. Operands must share a dimension; the result lives on
/// the first operand's domain.
FuzzySet meet(std::span<const FuzzySet> operands);
FuzzySet join(std::span<const FuzzySet> operands);
FuzzySet meet(const FuzzySet& a, const FuzzySet& b);
FuzzySet join(const FuzzySet& a, const FuzzySet& b);

/// (t mu)(x) = mu(x/t); for t = 0 the singleton at 0 carrying height(mu).
FuzzySet scalar_mul(double t, const FuzzySet& mu);

/// (v + mu)(y) = mu(y - v).
FuzzySet translate(std::span<const double> shift, const FuzzySet& mu);

/// f^{-1}(eta)(x) = eta(f(x)) on `source`, evaluated lazily.
FuzzySet preimage(const AffineMap& f, const FuzzySet& eta, const Domain& source);

/// f(mu)(y) = sup over f(x) = y of mu(x), materialized on `target`: each
/// target cell takes the max of mu over source lattice points mapped into it.
FuzzySet image(const AffineMap& f, const FuzzySet& mu, const Domain& target);

/// Sup-min convolution materialized on the shared lattice:
/// (mu1 + mu2)(x) = max over lattice x1 of min(mu1(x1), mu2(x - x1)).
FuzzySet add(const FuzzySet& mu1, const FuzzySet& mu2);

/// Closed-form sum of two crisp interval indicators on R (Minkowski sum of
/// the intervals; the result is open at an end when either operand is).
FuzzySet interval_sum(const FuzzySet& a, const FuzzySet& b);

/// (mu1 x mu2)(x1, x2) = min(mu1(x1), mu2(x2)) on the product domain.
FuzzySet product(const FuzzySet& mu1, const FuzzySet& mu2);

/// Max of mu over its lattice.
double height(const FuzzySet& mu);

/// Lattice points with membership at least `level`.
class AlphaCut {
 public:
  AlphaCut(double level, Domain domain, std::vector<bool> members);

  double level() const { return level_; }
  const Domain& domain() const { return domain_; }
  bool contains(std::size_t flat) const { return members_[flat]; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const AlphaCut& other) const;
  const std::vector<bool>& members() const { return members_; }

 private:
  double level_;
  Domain domain_;
  std::vector<bool> members_;
};

AlphaCut alpha_cut(const FuzzySet& mu, double level);

}  // namespace ftvs

#endif  // FTVS_ALGEBRA_HPP
