#ifndef FTVS_WEAK_HPP
#define FTVS_WEAK_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ftvs/check_report.hpp"
#include "ftvs/fuzzy_set.hpp"
#include "ftvs/linalg.hpp"

namespace ftvs {

/// x -> <x, c> on R^n.
struct LinearFunctional {
  std::vector<double> coefficients;

  LinearFunctional() = default;
  explicit LinearFunctional(std::vector<double> c) : coefficients(std::move(c)) {}
  LinearFunctional(std::initializer_list<double> c) : coefficients(c) {}

  std::size_t dimension() const { return coefficients.size(); }
  double operator()(std::span<const double> x) const;
  bool is_zero() const;
  LinearFunctional scaled(double t) const;
  AffineMap as_map() const { return AffineMap::functional(coefficients); }

  bool operator==(const LinearFunctional&) const = default;
};

/// Finite-dimensional dual pair: E = R^n sampled on `space`, a catalog of
/// functionals from E', and the scalar lattice for fuzzy sets on K.
struct DualPairScenario {
  Domain space;
  std::vector<LinearFunctional> functionals;
  Domain scalar;

  std::size_t dimension() const { return space.dimension(); }
  /// Rejects zero functionals and dimension mismatches.
  void validate() const;
  /// Whether the catalog distinguishes x from y.
  bool separates(std::span<const double> x, std::span<const double> y) const;
};

/// Basic weak fuzzy neighborhood: the meet of f_i^{-1}(mu_i).
class WeakNeighborhood {
 public:
  using Pair = std::pair<LinearFunctional, FuzzySet>;

  explicit WeakNeighborhood(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t dimension() const { return pairs_.front().first.dimension(); }

  /// The same neighborhood as an expression tree on `space`.
  FuzzySet as_fuzzy_set(const Domain& space) const;

 private:
  std::vector<Pair> pairs_;
};

/// min over pairs of mu_i(<x, f_i>).
double weak_eval(const WeakNeighborhood& v, std::span<const double> x);

/// Indicator of |t| < 1 on the scalar lattice, the Katsaras norm inducing
/// the usual topology of K.
FuzzySet scalar_unit_ball(const Domain& scalar);

/// Pairs (f_i, theta_i ^ t_i rho_K).
WeakNeighborhood weak_base_neighborhood(std::span<const LinearFunctional> functionals,
                                        std::span<const double> thetas, std::span<const double> ts,
                                        const Domain& scalar);

/// Neighborhood catalog at zero: one base neighborhood per (functional,
/// theta, t) combination.
std::vector<WeakNeighborhood> weak_base_catalog(std::span<const LinearFunctional> functionals,
                                                std::span<const double> thetas, std::span<const double> ts,
                                                const Domain& scalar);

/// Net convergence on a finite tail. Catalog criterion: for every V in the
/// catalog (neighborhoods of zero, translated to `limit`) and sampled
/// r = k/10 * V(0), k = 1..9, every entry from `tail` on has V > r. Scalar
/// criterion: max over the tail of |f(x_j - limit)| < scalar_tolerance for
/// every functional. Passes when both hold; disagreement is reported.
CheckReport net_converges_weakly(std::span<const Point> sequence, std::span<const double> limit,
                                 std::span<const LinearFunctional> functionals,
                                 std::span<const WeakNeighborhood> catalog, std::size_t tail,
                                 double scalar_tolerance);

inline constexpr double kResidualTolerance = 1e-9;

/// Either f0 = sum lambda_i f_i, or a point a with f0(a) = 1 and f_i(a) = 0.
struct DecomposeResult {
  std::optional<std::vector<double>> coefficients;
  std::optional<Point> witness;
  double residual = 0.0;

  bool in_span() const { return coefficients.has_value(); }
};

DecomposeResult decompose_or_witness(const LinearFunctional& target, std::span<const LinearFunctional> family);

struct HausdorffWitness {
  LinearFunctional functional;
  FuzzySet beta;
  FuzzySet eta;
};

/// Separates x and y through the first catalog functional with
/// |f(x) - f(y)| > 1e-12: beta and eta are indicators of open intervals of
/// radius half the gap around f(x) and f(y), meeting at the shared
/// midpoint, on a scalar lattice that covers both. Throws ArgumentError
/// when x == y or no functional separates them.
HausdorffWitness hausdorff_witness(std::span<const double> x, std::span<const double> y,
                                   const DualPairScenario& scenario);

/// Verifies a witness: beta ^ eta = 0 on its lattice, beta(f(x)) = 1,
/// eta(f(y)) = 1, and both pass is_lsc.
CheckReport hausdorff_witness_check(const HausdorffWitness& w, std::span<const double> x, std::span<const double> y);

/// is_lsc on x -> weak_eval(V, x) over `space`. The premise (each scalar
/// set lsc) is reported as a metric.
CheckReport weakly_lsc_check(const WeakNeighborhood& v, const Domain& space);

/// T maps R^n to R^m (m x n); the adjoint maps F' to E' by the transpose.
linalg::Matrix adjoint(const linalg::Matrix& t);
LinearFunctional apply_adjoint(const linalg::Matrix& t, const LinearFunctional& y);

/// Every F-catalog functional pulled back by T lies in the span of the
/// E catalog.
CheckReport weakly_continuous_check(const linalg::Matrix& t, const DualPairScenario& e,
                                    const DualPairScenario& f);

/// sup over scalars of the image fuzzy set x'(mu) on `scalar`.
double weak_seminorm(const FuzzySet& mu, const LinearFunctional& f, const Domain& scalar);

/// Scaling invariance phi(t f) = phi(f) over `scales` and phi(0) = height(mu),
/// lattice-exact. The report notes that phi is constant in f.
CheckReport weak_seminorm_check(const FuzzySet& mu, const LinearFunctional& f, const Domain& scalar,
                                std::span<const double> scales);

/// For each catalog functional, is_bounded of the image x'(mu) against the
/// scalar neighborhood catalog.
CheckReport weakly_bounded_check(const FuzzySet& mu, const DualPairScenario& scenario,
                                 std::span<const FuzzySet> scalar_neighborhoods);

/// Coordinate-projection neighborhoods on R^2 against min(mu1(a), mu2(b))
/// and the product fuzzy set at the given points.
CheckReport product_topology_check(const FuzzySet& mu1, const FuzzySet& mu2, std::span<const Point> points);

}  // namespace ftvs

#endif  // FTVS_WEAK_HPP
