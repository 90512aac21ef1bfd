#pragma once

#include <string>
#include <vector>

#include "wilson/corpus.hpp"
#include "wilson/seqspace.hpp"

namespace wilson {

/// Shortest string with up to 17 significant digits that round-trips the
/// double exactly; all serialized floating output goes through this.
std::string format_double(double x);

/// {"support_radius":..., "grid_step":..., "samples":[...]} over
/// [-support_radius, support_radius] inclusive.
std::string window_to_json(const Window& w);

/// {"start":..., "step":..., "support":[lo,hi], "values":[[re,im],...]}
std::string sampled_to_json(const SampledFunction& f);
SampledFunction sampled_from_json(const std::string& text);

/// {"a":..., "b":..., "K":..., "N":..., "values":[[[re,im],...],...]}
/// row-major in k then n.
std::string gabor_to_json(const GaborCoeffs& c);
GaborCoeffs gabor_from_json(const std::string& text);

/// Same layout with "n_min": 0 marking the one-sided modulation range.
std::string wilson_to_json(const WilsonCoeffs& c);
WilsonCoeffs wilson_from_json(const std::string& text);

/// CSV of |entry| with a header comment describing the index enumeration.
std::string gram_to_csv(const std::vector<Complex>& gram, int K, int N);

/// {"labels":[...], "signatures":{...}, "tail_indicator":..., "verdict":...}
std::string classification_to_json(const Classification& c);

/// [{"name":..., "expected_label":..., "kind":...}, ...]
std::string corpus_to_json(const CorpusParams& params = {});

}  // namespace wilson
