#ifndef FTVS_FUZZY_REAL_HPP
#define FTVS_FUZZY_REAL_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ftvs/check_report.hpp"

namespace ftvs {

/// Default sampled alpha levels: 0.01, 0.05, then 0.1 through 1.0 in steps
/// of 0.1. Levels are generated as k/100 and k/10 so they compare equal to
/// the corresponding decimal literals.
std::vector<double> default_alpha_levels();

struct Interval {
  double lo;
  double hi;
  bool contains(double t) const { return t >= lo && t <= hi; }
  bool operator==(const Interval&) const = default;
};

/// Fuzzy real number stored as its alpha-cuts on an ascending grid of
/// levels in (0,1]. Construction does not validate; see validate_fuzzy_real.
class FuzzyReal {
 public:
  FuzzyReal(std::vector<double> levels, std::vector<Interval> cuts, double normal_point);

  static FuzzyReal crisp(double value, std::vector<double> levels = default_alpha_levels());

  const std::vector<double>& levels() const { return levels_; }
  const std::vector<Interval>& cuts() const { return cuts_; }
  double normal_point() const { return normal_point_; }

  /// Cut at the nearest sampled level at or below alpha (the lowest sampled
  /// level when alpha is below all of them).
  Interval cut(double alpha) const;
  double lower(double alpha) const { return cut(alpha).lo; }
  double upper(double alpha) const { return cut(alpha).hi; }

  /// Largest sampled level whose cut contains t, 0 when none does.
  double membership(double t) const;

  bool is_crisp(double value) const;
  bool is_crisp_zero() const { return is_crisp(0.0); }

 private:
  std::vector<double> levels_;
  std::vector<Interval> cuts_;
  double normal_point_;
};

struct FuzzyRealValidation {
  enum class Violation { None, N1, N2, Nesting, Negative };
  Violation violation = Violation::None;
  double alpha_first = 0.0;
  double alpha_second = 0.0;
  std::string message;

  bool ok() const { return violation == Violation::None; }
};

/// Checks finiteness and lo <= hi per cut, nesting between consecutive
/// levels, and normality (a level-1 cut containing the normal point), in
/// that order, reporting the first failure. With `non_negative` also
/// requires every lower endpoint to be >= 0.
FuzzyRealValidation validate_fuzzy_real(const FuzzyReal& eta, bool non_negative = false);

/// |r| (.) eta, cut by cut.
FuzzyReal scalar_scale(double r, const FuzzyReal& eta);

using CombinationMap = std::function<double(double, double)>;

/// Optional knowledge about a Felbin norm. `crisp_gauge` marks a crisp norm
/// and gives its length directly; `continuous` states that every cut
/// endpoint is a continuous function of x.
struct FelbinTraits {
  std::function<double(std::span<const double>)> crisp_gauge;
  bool continuous = false;
};

/// Felbin fuzzy norm: vectors of R^n to non-negative fuzzy reals, with left
/// and right combination maps L and R.
class FelbinNorm {
 public:
  using Evaluator = std::function<FuzzyReal(std::span<const double>)>;
  using Membership = std::function<double(std::span<const double>, double)>;

  using Traits = FelbinTraits;

  FelbinNorm(std::string name, std::size_t dimension, Evaluator evaluate, CombinationMap left,
             CombinationMap right, Membership membership = {}, Traits traits = {});

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dimension_; }

  FuzzyReal operator()(std::span<const double> x) const;
  FuzzyReal operator()(std::initializer_list<double> x) const {
    return (*this)(std::span<const double>(x.begin(), x.size()));
  }

  /// ||x||(t). Uses the closed form when the norm has one, otherwise the
  /// sampled cuts.
  double membership(std::span<const double> x, double t) const;

  double upper(std::span<const double> x, double alpha) const;
  /// Max over the sampled levels of the upper cut endpoint.
  double sup_upper(std::span<const double> x) const;

  bool crisp() const { return static_cast<bool>(traits_.crisp_gauge); }
  bool continuous() const { return traits_.continuous; }

  double left(double a, double b) const { return left_(a, b); }
  double right(double a, double b) const { return right_(a, b); }

 private:
  std::string name_;
  std::size_t dimension_;
  Evaluator evaluate_;
  CombinationMap left_;
  CombinationMap right_;
  Membership membership_;
  Traits traits_;
};

CombinationMap min_map();
CombinationMap max_map();

/// Crisp norm at the Euclidean length, L = min and R = max.
FelbinNorm euclidean_felbin_norm(std::size_t n, std::vector<double> levels = default_alpha_levels());

/// Norm on R with ||x||(t) = 1 - t/|x| on [0, |x|]; cuts [0, |x|(1 - alpha)].
FelbinNorm star_norm_on_K(std::vector<double> levels = default_alpha_levels());

/// Crisp norm at gauge(x) for a caller-supplied classical norm.
FelbinNorm crisp_felbin_norm(std::string name, std::size_t n,
                             std::function<double(std::span<const double>)> gauge,
                             std::vector<double> levels = default_alpha_levels());

/// Slack for the Felbin axioms. Non-crisp memberships are computed by
/// division, so equality cases of F3 can miss by an ulp.
inline constexpr double kAxiomTolerance = 1e-12;

/// Default scalars for the homogeneity check. Powers of two keep the scaled
/// Euclidean length exact.
std::vector<double> default_homogeneity_scalars();

/// Sampled check of F1 (zero iff crisp zero), F2 (homogeneity through
/// scalar_scale), F3R/F3L (triangle inequalities with the norm's R and L on
/// guarded (s,t) pairs), non-negativity and validity of each ||x||, and the
/// L/R map requirements. `vectors` gets the zero vector appended. The s and
/// t candidates are the level-1 lower endpoints shifted by +-`offsets`, the
/// sampled upper endpoints, and the values that make s+t hit ||x+y||^-_1.
CheckReport felbin_axioms_check(const FelbinNorm& norm, std::span<const Point> vectors,
                                std::span<const double> offsets,
                                std::span<const double> scalars = {});

}  // namespace ftvs

#endif  // FTVS_FUZZY_REAL_HPP
