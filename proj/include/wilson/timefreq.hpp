#pragma once

#include <cstddef>
#include <vector>

#include "wilson/sampled.hpp"
#include "wilson/window.hpp"

namespace wilson {

/// Uniform output grid request for synthesis operations.
struct GridSpec {
  double start = 0.0;
  double step = 1.0 / 1024.0;
  std::size_t count = 0;

  double end() const { return start + step * static_cast<double>(count - 1); }
  Interval coverage() const { return {start, end()}; }
};

/// Grid covering [lo, hi] at the given step, endpoints snapped outward.
GridSpec make_grid(double lo, double hi, double step);

/// Complex coefficients on the lattice (a k, b n), k in [-K,K], n in [-N,N],
/// stored row-major in k then n. `tail` is the largest coefficient modulus on
/// the truncation boundary, reported by the analysis operator.
struct GaborCoeffs {
  double a = 0.5;
  double b = 1.0;
  int K = 0;
  int N = 0;
  std::vector<Complex> values;
  double tail = 0.0;

  GaborCoeffs() = default;
  GaborCoeffs(double a, double b, int K, int N);

  std::size_t rows() const { return static_cast<std::size_t>(2 * K + 1); }
  std::size_t cols() const { return static_cast<std::size_t>(2 * N + 1); }
  Complex& at(int k, int n);
  const Complex& at(int k, int n) const;
  double boundary_max() const;
};

/// M_xi T_x f: grid translated by x (which must be a whole number of steps),
/// then each value at grid point t multiplied by e^{2 pi i xi t}.
SampledFunction tf_shift(const SampledFunction& f, double x, double xi);

/// Composite Simpson approximation of the bilinear pairing integral f*g over
/// the intersection of supports. No hidden conjugation; callers pass the
/// conjugate factor explicitly. Requires commensurable grids.
Complex inner_product(const SampledFunction& f, const SampledFunction& g);

/// sqrt of inner_product(f, conj f), real by construction.
double l2_norm(const SampledFunction& f);

/// Relative L2 distance |f-g| / |f| on the common grid (functions extended by
/// zero outside their coverage).
double relative_l2_error(const SampledFunction& f, const SampledFunction& g);

/// Short-time Fourier transform value
///   V_w f(x, xi) = integral f(t) conj(w(t-x)) e^{-2 pi i xi t} dt,
/// with x a whole number of grid steps.
Complex stft(const SampledFunction& f, const Window& w, double x, double xi);

/// Analysis operator: values[k][n] = <f, conj(T_{ak} M_{bn} w)> by quadrature
/// on f's grid. `a` must be a whole number of grid steps.
GaborCoeffs gabor_analysis(const SampledFunction& f, const Window& w, double a,
                           double b, int K, int N);

/// Synthesis operator: pointwise finite sum
///   sum_{k,n} c_{k,n} w(t - a k) e^{2 pi i b n (t - a k)}
/// on the requested grid, which must cover every translated window support.
SampledFunction gabor_synthesis(const GaborCoeffs& c, const Window& w,
                                const GridSpec& grid);

/// Bilinear pairing sum_{k,n} a_{k,n} b_{k,n} over matching index ranges.
Complex coeff_pairing(const GaborCoeffs& a, const GaborCoeffs& b);

}  // namespace wilson
