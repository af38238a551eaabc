#ifndef FTVS_KATSARAS_HPP
#define FTVS_KATSARAS_HPP

#include <span>
#include <vector>

#include "ftvs/check_report.hpp"
#include "ftvs/fuzzy_real.hpp"
#include "ftvs/fuzzy_set.hpp"

namespace ftvs {

/// Katsaras fuzzy norm: an absolutely convex, absorbing fuzzy set whose
/// dilations vanish off the origin. See katsaras_axioms_check.
struct KatsarasNorm {
  FuzzySet rho;
};

/// theta ^ (t rho), a member of the neighborhood base at zero.
struct BaseNeighborhood {
  double theta;
  double t;
  KatsarasNorm rho;

  FuzzySet set() const;
};

/// rho(x) = 1 when the upper cut endpoint of ||x|| stays below 1 at every
/// sampled level, else 0.
KatsarasNorm katsaras_from_felbin(const FelbinNorm& norm, const Domain& domain);

/// Value alpha where ||y - center||^+_alpha < eps, else 0.
FuzzySet alpha_sphere(const FelbinNorm& norm, double alpha, std::span<const double> center, double eps,
                      const Domain& domain);

/// Pointwise min of the constant theta and t rho.
FuzzySet base_neighborhood(double theta, double t, const KatsarasNorm& rho);

/// Convex, balanced, absorbing and vanishing-dilation checks on rho.
std::vector<CheckReport> katsaras_axioms_check(const KatsarasNorm& rho, std::span<const double> dilations = {});

/// Decreasing default radii 2, 1, 1/2, ..., 2^-23 for open-sphere searches.
std::vector<double> default_radius_grid();

/// mu is a neighborhood of x: some sampled (theta, t) with
/// (x + theta ^ t rho) <= mu on the lattice and on probe points at x +- t/2^k
/// along each axis (k = 1..3).
CheckReport is_neighborhood_of(const FuzzySet& mu, std::span<const double> x, const KatsarasNorm& rho,
                               std::span<const double> thetas = {}, std::span<const double> ts = {});

/// Linear openness: for every supported lattice x and sampled alpha < mu(x)
/// some radius from the decreasing grid gives an alpha-open sphere around x
/// below mu, compared on the lattice and on probes x +- eps/2^k (k = 1..3).
CheckReport is_linearly_open(const FuzzySet& mu, const FelbinNorm& norm, std::span<const double> alphas = {},
                             std::span<const double> radii = {});

/// Max over sampled (alpha, eps) and the lattice of
/// |sphere(alpha, 0, eps)(y) - (alpha ^ eps rho)(y)|; passes only at 0.
CheckReport base_equivalence_check(const FelbinNorm& norm, const KatsarasNorm& rho, std::span<const double> alphas,
                                   std::span<const double> radii);

}  // namespace ftvs

#endif  // FTVS_KATSARAS_HPP
