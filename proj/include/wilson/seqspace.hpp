#pragma once

#include <string>
#include <vector>

#include "wilson/basis.hpp"

namespace wilson {

/// Polynomial weight (1 + i^2)^(l/2) used by the weighted sequence norms.
double weight(long long i, int l);

/// Which index runs in the outer reduction of a mixed norm.
enum class Axis { K, N };

/// One reduction stage of a mixed norm.
struct NormComponent {
  enum class Kind { SupWeighted, Lp, FiniteSupportCheck };
  Kind kind = Kind::SupWeighted;
  int l = 0;        // weight exponent for SupWeighted
  double p = 2.0;   // exponent for Lp; infinity means sup

  static NormComponent sup_weighted(int l) { return {Kind::SupWeighted, l, 2.0}; }
  static NormComponent lp(double p) { return {Kind::Lp, 0, p}; }
  static NormComponent finite_support_check() {
    return {Kind::FiniteSupportCheck, 0, 2.0};
  }
};

/// Composition of an inner reduction over one index and an outer reduction
/// over the other. FiniteSupportCheck reduces like an unweighted sup; the
/// support extent itself is reported by coefficient_support_radius.
struct NormFamilySpec {
  NormComponent outer;
  NormComponent inner;
  Axis outer_axis = Axis::N;
};

/// Rectangular view over either coefficient container.
struct CoeffView {
  const Complex* data = nullptr;
  int k_min = 0, k_max = 0, n_min = 0, n_max = 0;

  CoeffView() = default;
  CoeffView(const WilsonCoeffs& c);
  CoeffView(const GaborCoeffs& c);

  std::size_t cols() const { return static_cast<std::size_t>(n_max - n_min + 1); }
  const Complex& at(int k, int n) const {
    return data[static_cast<std::size_t>(k - k_min) * cols() +
                static_cast<std::size_t>(n - n_min)];
  }
};

double mixed_norm(const CoeffView& c, const NormFamilySpec& spec);

/// Largest |outer index| whose cross-section carries mass above
/// rel_tol * max|c|; -1 when the whole array is below the cut.
int coefficient_support_radius(const CoeffView& c, Axis axis,
                               double rel_tol = 1e-12);

/// mixed_norm with every SupWeighted stage evaluated at each l in l_values;
/// nondecreasing in l for a fixed array.
std::vector<double> decay_profile(const CoeffView& c,
                                  const std::vector<int>& l_values,
                                  NormFamilySpec spec);

/// Decay class of the translation index, ordered by inclusion.
enum class KClass { Finite, Rapid, Lp, C0, Bounded, Polynomial, Any };
/// Decay class of the modulation index.
enum class NClass { Rapid, Polynomial };

/// One of the classical test function / distribution spaces, identified by
/// the decay signature of its coefficient space.
struct SpaceLabel {
  std::string name;
  KClass k_class = KClass::Any;
  NClass n_class = NClass::Polynomial;
  int table = 0;      // 0 = test function row, 1 = distribution row
  int position = 0;   // position within the row, smallest space first
  bool inductive_refinement = false;  // claimed only via inclusion from below
};

/// The seventeen labels, smallest-first per table row. D_Lp labels render the
/// probed exponent.
std::vector<SpaceLabel> space_labels(double p);

struct ClassifyOptions {
  double p = 2.0;  // exponent probed by the Lp column test
  int l_max = 6;   // deepest weight probed by the slope fits
  double support_rel_tol = 1e-12;
  double slope_factor = 0.5;        // threshold = factor * log(1+(extent/2)^2)
  double lp_tail_fraction = 0.05;   // mass fraction allowed beyond 2/3 radius
  double c0_boundary_ratio = 0.1;   // boundary-to-peak ratio for c0 columns
  double bounded_growth_ratio = 1.5;  // outer/inner band ratio for boundedness
  double tail_threshold = 1e-3;     // weighted boundary mass for a conclusive run
};

struct AxisDiagnostics {
  std::string observed;       // class name, e.g. "finite-support", "rapid"
  double slope = 0.0;         // fitted log-norm slope across l
  double slope_threshold = 0.0;
  int support_radius = -1;
  double growth_ratio = 0.0;
  double boundary_ratio = 0.0;
  double lp_tail_fraction = 0.0;
};

struct Classification {
  std::vector<SpaceLabel> labels;  // consistent labels, smallest space first
  AxisDiagnostics k_diag;
  AxisDiagnostics n_diag;
  double tail_indicator = 0.0;
  bool conclusive = true;
  ClassifyOptions options;
};

/// Match the coefficient decay against the label signatures. The emitted set
/// is upward closed along each table row; the first label is the smallest
/// consistent space. Thresholds are finite-truncation heuristics: the verdict
/// is a best fit, not a membership certificate.
Classification classify(const WilsonCoeffs& c, const ClassifyOptions& opts = {});

}  // namespace wilson
