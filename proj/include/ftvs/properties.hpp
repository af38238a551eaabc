#ifndef FTVS_PROPERTIES_HPP
#define FTVS_PROPERTIES_HPP

#include <span>
#include <string>
#include <vector>

#include "ftvs/check_report.hpp"
#include "ftvs/fuzzy_set.hpp"

namespace ftvs {

/// Absorption and absorbing-sup checks allow this slack; lattice-exact
/// checks use 0.
inline constexpr double kAbsorptionTolerance = 1e-9;
inline constexpr double kLscTolerance = 1e-9;

/// 61 log-spaced dilation factors over [1e-3, 1e3].
std::vector<double> default_dilation_grid();
/// 0, 0.1, ..., 1.
std::vector<double> default_unit_grid();
/// -1, -0.9, ..., 1.
std::vector<double> default_balance_grid();
/// 0.1, 0.2, ..., 1.
std::vector<double> default_level_grid();

/// mu(t a + (1-t) b) >= min(mu(a), mu(b)) over lattice pairs and sampled t.
CheckReport is_convex(const FuzzySet& mu, std::span<const double> ts = {});

/// mu(t x) >= mu(x) over the lattice and sampled |t| <= 1.
CheckReport is_balanced(const FuzzySet& mu, std::span<const double> ts = {});

/// max over sampled t > 0 of (t mu)(x) reaches 1 - tol for every lattice
/// point of `absorption_box` (defaults to mu's own domain).
CheckReport is_absorbing(const FuzzySet& mu, std::span<const double> ts = {},
                         const Domain* absorption_box = nullptr);

/// min over sampled t > 0 of (t mu)(x) stays within tol of 0 at every
/// nonzero lattice point.
CheckReport is_dilation_vanishing(const FuzzySet& mu, std::span<const double> ts = {});

/// mu absorbs eta: for each sampled theta < mu(0) some sampled t gives
/// theta ^ (t eta) <= mu on the lattice. NotApplicable when mu(0) = 0.
CheckReport absorbs(const FuzzySet& mu, const FuzzySet& eta, std::span<const double> thetas = {},
                    std::span<const double> ts = {});

/// mu is absorbed by every member of a finite catalog of neighborhoods of 0.
CheckReport is_bounded(const FuzzySet& mu, std::span<const FuzzySet> neighborhoods,
                       std::span<const double> thetas = {}, std::span<const double> ts = {});

enum class LscProof { Lsc, NotLsc, Undetermined };

struct StructuralLsc {
  LscProof proof;
  std::string reason;
};

/// Lower semicontinuity from the expression tree alone.
StructuralLsc structural_lsc(const FuzzySet& mu);

/// Searches lattice points for a jump down: probes at radius step/2^k along
/// the axes (and box corners in dimension <= 3), k = 0..refinements, keeping
/// only probes inside the box and distinct from the point, and stopping once
/// a step no longer moves a coordinate in floating point. A point is a
/// witness when every such level has a probe below mu(x) - tol.
struct LscFalsification {
  bool found = false;
  double violation = 0.0;
  Point witness;
  std::size_t points_examined = 0;
};
LscFalsification falsify_lsc(const FuzzySet& mu, double tol = kLscTolerance, int refinements = 60);

/// Three-valued lsc check: structural proof where the tree permits, the
/// refinement falsifier always. Pass needs a structural proof and no
/// falsification; a falsified or structurally non-lsc set fails; otherwise
/// Unknown.
CheckReport is_lsc(const FuzzySet& mu);

/// Finite family closed under pairwise meets and joins (hence all finite
/// ones) and containing each sampled constant, compared lattice-exactly.
CheckReport topology_axioms_check(std::span<const FuzzySet> family, std::span<const double> constants);

/// Some members eta, beta with eta(x) = beta(y) = 1 and eta ^ beta = 0 on
/// the lattice. Throws ArgumentError when x == y.
CheckReport hausdorff_check(std::span<const FuzzySet> family, std::span<const double> x,
                            std::span<const double> y);

}  // namespace ftvs

#endif  // FTVS_PROPERTIES_HPP
