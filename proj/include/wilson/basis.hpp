#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "wilson/timefreq.hpp"

namespace wilson {

/// Coefficients on the Wilson index set, k in [-K,K], n in [0,N], row-major
/// in k then n.
struct WilsonCoeffs {
  int K = 0;
  int N = 0;
  std::vector<Complex> values;
  double tail = 0.0;

  WilsonCoeffs() = default;
  WilsonCoeffs(int K, int N);

  std::size_t rows() const { return static_cast<std::size_t>(2 * K + 1); }
  std::size_t cols() const { return static_cast<std::size_t>(N + 1); }
  Complex& at(int k, int n);
  const Complex& at(int k, int n) const;
  double boundary_max() const;
};

/// Wilson basis member on the requested grid:
///   n = 0:  w(t - k)
///   n > 0:  (1/sqrt 2) (e^{2 pi i n (t-k/2)} + (-1)^{k+n} e^{-2 pi i n (t-k/2)}) w(t-k/2)
SampledFunction wilson_atom(const Window& w, int k, int n, const GridSpec& grid);

/// Value of the atom at a single point (closed form, no grid).
Complex wilson_atom_value(const Window& w, int k, int n, double t);

/// m-th derivative of the atom at a single point by closed-form
/// differentiation (Leibniz rule over the modulation factors and the window's
/// Taylor evaluator); m <= kJetOrder.
Complex wilson_atom_derivative(const Window& w, int k, int n, double t, int m);

/// Frequency flip (c_{k,n}) -> (c_{k,-n}); an involution.
GaborCoeffs reindex_i2(const GaborCoeffs& c);

/// Fold lattice coefficients (a,b) = (1/2,1) onto the Wilson index set:
///   n = 0: c_{2k,0}
///   n > 0: (1/sqrt 2)(c_{k,n} + (-1)^{n+k} c_{k,-n})
/// The output k range is the largest with 2k inside the input k range.
WilsonCoeffs reindex_v(const GaborCoeffs& c);

/// Spread Wilson coefficients back over the (1/2,1) lattice:
///   n = 0, k odd:  0
///   n = 0, k even: c_{k/2,0}
///   n > 0:         c_{k,n} / sqrt 2
///   n < 0:         (-1)^{k+n} c_{k,-n} / sqrt 2
GaborCoeffs reindex_w(const WilsonCoeffs& c);

/// Wilson analysis: the fold of the (1/2,1) lattice analysis at ranges
/// (2K, N). Entry (k,n) equals the pairing of f with the conjugate atom.
WilsonCoeffs wilson_analysis(const SampledFunction& f, const Window& w, int K,
                             int N);

/// Wilson synthesis: lattice synthesis of the spread coefficients;
/// equivalently sum c_{k,n} atom_{k,n} pointwise on the grid.
SampledFunction wilson_synthesis(const WilsonCoeffs& c, const Window& w,
                                 const GridSpec& grid);

/// Index enumeration used to flatten the Wilson index set: diagonal by
/// diagonal over (|k|, n), within a diagonal k >= 0 entries first, each side
/// by increasing n. Restricted to |k| <= K, n <= N.
std::vector<std::pair<int, int>> enumerate_indices(int K, int N);

/// Pairwise products <atom_i, conj atom_j> by quadrature, flattened by
/// enumerate_indices. The window must satisfy the half-integer product
/// condition to residual 1e-10.
std::vector<Complex> gram_matrix(const Window& w, int K, int N);

/// Tagged functional paired against conjugate atoms.
struct DistributionInput {
  enum class Kind { Delta, DeltaDerivative, DiracComb, Polynomial, Function };

  Kind kind = Kind::Delta;
  double point = 0.0;                      // Delta / DeltaDerivative location
  int order = 0;                           // derivative or monomial order
  std::function<double(double)> function;  // Function kind evaluator

  static DistributionInput delta(double x0);
  static DistributionInput delta_derivative(double x0, int order);
  static DistributionInput dirac_comb();
  static DistributionInput polynomial(int order);
  static DistributionInput from_function(std::function<double(double)> f);
};

/// <d, conj atom_{k,n}>. Deltas and the comb are evaluated in closed form;
/// polynomial and function-backed inputs by quadrature over the atom support.
Complex pair_distribution(const DistributionInput& d, const Window& w, int k,
                          int n);

/// Wilson coefficients of a distribution, entry-wise via pair_distribution.
WilsonCoeffs wilson_analyze_distribution(const DistributionInput& d,
                                         const Window& w, int K, int N);

}  // namespace wilson
