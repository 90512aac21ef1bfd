#pragma once

#include <string>
#include <vector>

#include "wilson/basis.hpp"
#include "wilson/jet.hpp"

namespace wilson {

/// Plateau bump: smooth, exactly 1 on [-1/2,1/2], supported on [-1,1].
double bump_value(double t);
Jet bump_value(const Jet& t);

/// Standard Gaussian profile exp(-t^2/2).
double gaussian_value(double t);

/// Named test input with the decay class it is expected to land in.
struct CorpusEntry {
  std::string name;
  bool is_sampled = false;
  SampledFunction sampled;   // when is_sampled
  DistributionInput input;   // otherwise
  std::string expected_label;
  std::string note;
  int classify_K = 3;  // truncation sized to the entry's support
  int classify_N = 64;
};

struct CorpusParams {
  double grid_step = 1.0 / 1024.0;
  int monomial_order = 2;
  double delta_point = 0.0;
  double gaussian_radius = 8.0;
};

/// Entries: bump, gaussian, sine, constant, monomial, delta, delta_prime,
/// dirac_comb. Throws ValidationError for unknown names.
CorpusEntry make_entry(const std::string& name, const CorpusParams& params = {});

const std::vector<std::string>& corpus_names();

/// Wilson coefficients of an entry at the given truncation (analysis for
/// sampled entries, distribution pairing otherwise).
WilsonCoeffs analyze_entry(const CorpusEntry& e, const Window& w, int K, int N);

}  // namespace wilson
