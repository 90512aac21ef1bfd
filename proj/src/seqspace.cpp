#include "wilson/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "wilson/errors.hpp"

namespace wilson {

double weight(long long i, int l) {
  const double base = 1.0 + static_cast<double>(i) * static_cast<double>(i);
  return std::pow(base, static_cast<double>(l) / 2.0);
}

CoeffView::CoeffView(const WilsonCoeffs& c)
    : data(c.values.data()), k_min(-c.K), k_max(c.K), n_min(0), n_max(c.N) {}

CoeffView::CoeffView(const GaborCoeffs& c)
    : data(c.values.data()), k_min(-c.K), k_max(c.K), n_min(-c.N), n_max(c.N) {}

namespace {

const char* kHeuristicNote =
    "finite-truncation heuristic; the verdict is a best fit, not a "
    "membership certificate";

double reduce_inner(const CoeffView& c, Axis outer_axis, int outer_index,
                    const NormComponent& comp) {
  const bool outer_is_n = outer_axis == Axis::N;
  const int lo = outer_is_n ? c.k_min : c.n_min;
  const int hi = outer_is_n ? c.k_max : c.n_max;
  auto entry = [&](int inner_index) {
    return outer_is_n ? std::abs(c.at(inner_index, outer_index))
                      : std::abs(c.at(outer_index, inner_index));
  };
  switch (comp.kind) {
    case NormComponent::Kind::SupWeighted: {
      double best = 0.0;
      for (int i = lo; i <= hi; ++i)
        best = std::max(best, weight(i, comp.l) * entry(i));
      return best;
    }
    case NormComponent::Kind::Lp: {
      if (std::isinf(comp.p)) {
        double best = 0.0;
        for (int i = lo; i <= hi; ++i) best = std::max(best, entry(i));
        return best;
      }
      double sum = 0.0;
      for (int i = lo; i <= hi; ++i) sum += std::pow(entry(i), comp.p);
      return std::pow(sum, 1.0 / comp.p);
    }
    case NormComponent::Kind::FiniteSupportCheck:
      throw ValidationError("finite-support check is an outer reduction only");
  }
  return 0.0;
}

}  // namespace

double mixed_norm(const CoeffView& c, const NormFamilySpec& spec) {
  const bool outer_is_n = spec.outer_axis == Axis::N;
  const int lo = outer_is_n ? c.n_min : c.k_min;
  const int hi = outer_is_n ? c.n_max : c.k_max;

  switch (spec.outer.kind) {
    case NormComponent::Kind::SupWeighted: {
      double best = 0.0;
      for (int i = lo; i <= hi; ++i)
        best = std::max(best,
                        weight(i, spec.outer.l) *
                            reduce_inner(c, spec.outer_axis, i, spec.inner));
      return best;
    }
    case NormComponent::Kind::Lp: {
      if (std::isinf(spec.outer.p)) {
        double best = 0.0;
        for (int i = lo; i <= hi; ++i)
          best = std::max(best, reduce_inner(c, spec.outer_axis, i, spec.inner));
        return best;
      }
      double sum = 0.0;
      for (int i = lo; i <= hi; ++i)
        sum += std::pow(reduce_inner(c, spec.outer_axis, i, spec.inner),
                        spec.outer.p);
      return std::pow(sum, 1.0 / spec.outer.p);
    }
    case NormComponent::Kind::FiniteSupportCheck: {
      // Reduces like an unweighted sup; the support extent itself is
      // reported by coefficient_support_radius.
      double best = 0.0;
      for (int i = lo; i <= hi; ++i)
        best = std::max(best, reduce_inner(c, spec.outer_axis, i, spec.inner));
      return best;
    }
  }
  return 0.0;
}

int coefficient_support_radius(const CoeffView& c, Axis axis, double rel_tol) {
  const bool on_k = axis == Axis::K;
  const int lo = on_k ? c.k_min : c.n_min;
  const int hi = on_k ? c.k_max : c.n_max;
  double peak = 0.0;
  for (int k = c.k_min; k <= c.k_max; ++k)
    for (int n = c.n_min; n <= c.n_max; ++n)
      peak = std::max(peak, std::abs(c.at(k, n)));
  const double cut = rel_tol * peak;
  int radius = -1;
  for (int i = lo; i <= hi; ++i) {
    double slice = 0.0;
    if (on_k) {
      for (int n = c.n_min; n <= c.n_max; ++n)
        slice = std::max(slice, std::abs(c.at(i, n)));
    } else {
      for (int k = c.k_min; k <= c.k_max; ++k)
        slice = std::max(slice, std::abs(c.at(k, i)));
    }
    if (slice > cut) radius = std::max(radius, std::abs(i));
  }
  return radius;
}

std::vector<double> decay_profile(const CoeffView& c,
                                  const std::vector<int>& l_values,
                                  NormFamilySpec spec) {
  std::vector<double> table;
  table.reserve(l_values.size());
  for (int l : l_values) {
    if (spec.outer.kind == NormComponent::Kind::SupWeighted) spec.outer.l = l;
    if (spec.inner.kind == NormComponent::Kind::SupWeighted) spec.inner.l = l;
    table.push_back(mixed_norm(c, spec));
  }
  return table;
}

std::vector<SpaceLabel> space_labels(double p) {
  std::string p_text;
  if (std::isinf(p)) {
    p_text = "inf";
  } else if (p == std::floor(p)) {
    p_text = std::to_string(static_cast<long long>(p));
  } else {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p);
    p_text = buf;
  }
  const std::string lp = "D_Lp(" + p_text + ")";
  return {
      {"D", KClass::Finite, NClass::Rapid, 0, 0, false},
      {"D_F", KClass::Finite, NClass::Rapid, 0, 1, false},
      {"S", KClass::Rapid, NClass::Rapid, 0, 2, false},
      {lp, KClass::Lp, NClass::Rapid, 0, 3, false},
      {"B_dot", KClass::C0, NClass::Rapid, 0, 4, false},
      {"D_Linf", KClass::Bounded, NClass::Rapid, 0, 5, false},
      {"O_C", KClass::Polynomial, NClass::Rapid, 0, 6, true},
      {"O_M", KClass::Polynomial, NClass::Rapid, 0, 7, false},
      {"E", KClass::Any, NClass::Rapid, 0, 8, false},
      {"E_prime", KClass::Finite, NClass::Polynomial, 1, 0, false},
      {"O_M_prime", KClass::Rapid, NClass::Polynomial, 1, 1, true},
      {"O_C_prime", KClass::Rapid, NClass::Polynomial, 1, 2, false},
      {lp + "_prime", KClass::Lp, NClass::Polynomial, 1, 3, false},
      {"B_dot_prime", KClass::C0, NClass::Polynomial, 1, 4, false},
      {"D_Linf_prime", KClass::Bounded, NClass::Polynomial, 1, 5, false},
      {"S_prime", KClass::Polynomial, NClass::Polynomial, 1, 6, false},
      {"D_prime", KClass::Any, NClass::Polynomial, 1, 7, false},
  };
}

namespace {

int k_rank(KClass c) { return static_cast<int>(c); }
int n_rank(NClass c) { return static_cast<int>(c); }

const char* k_class_name(KClass c) {
  switch (c) {
    case KClass::Finite: return "finite-support";
    case KClass::Rapid: return "rapid";
    case KClass::Lp: return "lp";
    case KClass::C0: return "c0";
    case KClass::Bounded: return "bounded";
    case KClass::Polynomial: return "polynomial";
    case KClass::Any: return "unrestricted";
  }
  return "?";
}

const char* n_class_name(NClass c) {
  return c == NClass::Rapid ? "rapid" : "polynomial";
}

/// Least-squares slope of log(norms[l]) against l, skipping zero norms.
double fitted_log_slope(const std::vector<double>& norms) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (!(norms[i] > 0.0)) continue;
    const double x = static_cast<double>(i);
    const double y = std::log(norms[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return 0.0;
  const double denom = count * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (count * sxy - sx * sy) / denom;
}

/// Cross-section peaks along one axis.
std::vector<double> axis_profile(const CoeffView& c, Axis axis) {
  const bool on_k = axis == Axis::K;
  const int lo = on_k ? c.k_min : c.n_min;
  const int hi = on_k ? c.k_max : c.n_max;
  std::vector<double> profile(static_cast<std::size_t>(hi - lo) + 1, 0.0);
  for (int k = c.k_min; k <= c.k_max; ++k)
    for (int n = c.n_min; n <= c.n_max; ++n) {
      const int i = on_k ? k : n;
      profile[static_cast<std::size_t>(i - lo)] =
          std::max(profile[static_cast<std::size_t>(i - lo)],
                   std::abs(c.at(k, n)));
    }
  return profile;
}

struct AxisProbe {
  std::vector<double> profile;  // indexed from axis lower bound
  int lo = 0;
  double slope = 0.0;
  double slope_threshold = 0.0;
  bool rapid = false;

  double value(int i) const { return profile[static_cast<std::size_t>(i - lo)]; }
};

AxisProbe probe_axis(const CoeffView& c, Axis axis, const ClassifyOptions& opts) {
  AxisProbe probe;
  probe.lo = axis == Axis::K ? c.k_min : c.n_min;
  probe.profile = axis_profile(c, axis);
  const int hi = axis == Axis::K ? c.k_max : c.n_max;

  std::vector<double> weighted(static_cast<std::size_t>(opts.l_max) + 1, 0.0);
  for (int l = 0; l <= opts.l_max; ++l) {
    double best = 0.0;
    for (int i = probe.lo; i <= hi; ++i)
      best = std::max(best, weight(i, l) * probe.value(i));
    weighted[static_cast<std::size_t>(l)] = best;
  }
  probe.slope = fitted_log_slope(weighted);
  const double extent = static_cast<double>(std::max(std::abs(probe.lo), hi));
  probe.slope_threshold =
      opts.slope_factor * std::log(1.0 + extent * extent / 4.0);
  probe.rapid = probe.slope <= probe.slope_threshold;
  return probe;
}

}  // namespace

Classification classify(const WilsonCoeffs& c, const ClassifyOptions& opts) {
  const CoeffView view(c);
  Classification result;
  result.options = opts;

  double peak = 0.0;
  for (const Complex& v : c.values) peak = std::max(peak, std::abs(v));

  // Tame both axes by the deepest probed weight; anything inside the probe
  // universe then has its weighted mass strictly inside the truncation, so a
  // weighted peak on the boundary means the truncation is too small.
  if (peak > 0.0) {
    double weighted_peak = 0.0;
    double weighted_boundary = 0.0;
    for (int k = -c.K; k <= c.K; ++k) {
      for (int n = 0; n <= c.N; ++n) {
        const double tamed = std::abs(c.at(k, n)) * weight(k, -opts.l_max) *
                             weight(n, -opts.l_max);
        weighted_peak = std::max(weighted_peak, tamed);
        if (std::abs(k) == c.K || n == c.N)
          weighted_boundary = std::max(weighted_boundary, tamed);
      }
    }
    if (weighted_peak > 0.0)
      result.tail_indicator = weighted_boundary / weighted_peak;
  }
  result.conclusive = result.tail_indicator <= opts.tail_threshold;

  // Modulation axis: rapid or polynomial.
  const AxisProbe n_probe = probe_axis(view, Axis::N, opts);
  const NClass n_obs = n_probe.rapid ? NClass::Rapid : NClass::Polynomial;
  result.n_diag.observed = n_class_name(n_obs);
  result.n_diag.slope = n_probe.slope;
  result.n_diag.slope_threshold = n_probe.slope_threshold;
  result.n_diag.support_radius = coefficient_support_radius(view, Axis::N, opts.support_rel_tol);

  // Translation axis, tested in inclusion order.
  const AxisProbe k_probe = probe_axis(view, Axis::K, opts);
  const int k_radius =
      coefficient_support_radius(view, Axis::K, opts.support_rel_tol);
  result.k_diag.support_radius = k_radius;
  result.k_diag.slope = k_probe.slope;
  result.k_diag.slope_threshold = k_probe.slope_threshold;

  KClass k_obs;
  if (k_radius < c.K) {
    k_obs = KClass::Finite;
  } else if (k_probe.rapid) {
    k_obs = KClass::Rapid;
  } else if (n_obs == NClass::Rapid) {
    // The Banach refinements between rapid decay and polynomial growth are
    // resolvable only against rapidly decaying modulation columns.
    double lp_total = 0.0, lp_outer = 0.0;
    double boundary = 0.0, inner_band = 0.0, outer_band = 0.0;
    for (int k = -c.K; k <= c.K; ++k) {
      const double u = k_probe.value(k);
      const double band = static_cast<double>(std::abs(k));
      lp_total += std::pow(u, opts.p);
      if (3 * band > 2 * c.K) lp_outer += std::pow(u, opts.p);
      if (std::abs(k) == c.K) boundary = std::max(boundary, u);
      if (3 * band <= c.K) inner_band = std::max(inner_band, u);
      if (3 * band > 2 * c.K) outer_band = std::max(outer_band, u);
    }
    const double profile_peak =
        *std::max_element(k_probe.profile.begin(), k_probe.profile.end());
    result.k_diag.lp_tail_fraction = lp_total > 0.0 ? lp_outer / lp_total : 0.0;
    result.k_diag.boundary_ratio =
        profile_peak > 0.0 ? boundary / profile_peak : 0.0;
    result.k_diag.growth_ratio = inner_band > 0.0 ? outer_band / inner_band : 0.0;

    if (result.k_diag.lp_tail_fraction <= opts.lp_tail_fraction)
      k_obs = KClass::Lp;
    else if (result.k_diag.boundary_ratio <= opts.c0_boundary_ratio)
      k_obs = KClass::C0;
    else if (result.k_diag.growth_ratio <= opts.bounded_growth_ratio)
      k_obs = KClass::Bounded;
    else
      k_obs = KClass::Polynomial;
  } else {
    k_obs = KClass::Polynomial;
  }
  result.k_diag.observed = k_class_name(k_obs);

  // Every label whose signature dominates the observed pair is consistent;
  // inductive-variant labels are claimed only when a strictly smaller label
  // in the same row already is.
  const auto all = space_labels(opts.p);
  std::vector<const SpaceLabel*> kept;
  for (const SpaceLabel& label : all)
    if (k_rank(k_obs) <= k_rank(label.k_class) &&
        n_rank(n_obs) <= n_rank(label.n_class))
      kept.push_back(&label);
  for (const SpaceLabel* label : kept) {
    if (label->inductive_refinement) {
      const bool anchored =
          std::any_of(kept.begin(), kept.end(), [&](const SpaceLabel* other) {
            return other->table == label->table &&
                   other->position < label->position &&
                   !other->inductive_refinement;
          });
      if (!anchored) continue;
    }
    result.labels.push_back(*label);
  }
  return result;
}

}  // namespace wilson
