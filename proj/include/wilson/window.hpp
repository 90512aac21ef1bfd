#pragma once

#include <functional>
#include <vector>

#include "wilson/jet.hpp"
#include "wilson/sampled.hpp"

namespace wilson {

/// C-infinity step: 0 on (-inf,0], 1 on [1,inf), with s(1-x) = 1 - s(x).
/// Built as h(x)/(h(x)+h(1-x)) with h(x) = exp(-1/x) for x > 0.
double smooth_step(double x);

/// smooth_step evaluated in truncated Taylor arithmetic (exact derivatives).
Jet smooth_step(const Jet& x);

/// Real, even, compactly supported window with a closed-form evaluator.
/// The evaluator is exactly zero for |x| >= support_radius. grid_step is the
/// default step used when the window is materialized on a grid.
class Window {
public:
  using Eval = std::function<double(double)>;
  using JetEval = std::function<Jet(double)>;

  Window(Eval eval, double support_radius, double grid_step,
         JetEval jet_eval = nullptr);

  double operator()(double x) const;

  /// m-th derivative at x via the closed-form Taylor evaluator, m <= kJetOrder.
  /// Requires the window to carry a jet evaluator.
  double derivative(double x, int m) const;

  bool has_derivatives() const { return static_cast<bool>(jet_eval_); }
  double support_radius() const { return support_radius_; }
  double grid_step() const { return grid_step_; }

  /// max over j <= m of sup |psi^(j)| estimated on a grid of the support.
  double sup_norm(int m) const;

  /// Samples on [-support_radius, support_radius] inclusive at grid_step.
  SampledFunction sample() const;
  SampledFunction sample(double step) const;

private:
  Eval eval_;
  JetEval jet_eval_;
  double support_radius_;
  double grid_step_;
};

/// The canonical window: support [-1/2,1/2], sqrt(2)*sin((pi/2)*s(2x+1)) on
/// the left half and sqrt(2)*cos((pi/2)*s(2x)) on the right half. Its square
/// partitions unity over half-integer shifts, so the half-integer product
/// condition below holds exactly and the generated Wilson system is an
/// orthonormal basis.
Window build_wilson_window(double grid_step = 1.0 / 1024.0);

/// Entry n is sup over x in [0,1/2] (stepped by grid_step) of
/// |sum_k w(x-n-k/2) w(x-k/2) - 2*delta_{n,0}|. Entries for n >= 1 vanish for
/// windows supported in [-1/2,1/2].
std::vector<double> wilson_condition_residual(const Window& w, int n_max,
                                              double grid_step = 1e-3);

/// sup over the symmetric grid of |w(x) - conj(w(-x))|; windows are real, so
/// this measures evenness.
double check_symmetry(const Window& w, double grid_step = 1e-3);

/// L2 norm of the window by quadrature on its own grid.
double window_l2_norm(const Window& w);

}  // namespace wilson
