#include "wilson/corpus.hpp"

#include <cmath>
#include <numbers>

#include "wilson/errors.hpp"

namespace wilson {

double bump_value(double t) {
  if (t <= -1.0 || t >= 1.0) return 0.0;
  return smooth_step(2.0 * t + 2.0) * smooth_step(2.0 - 2.0 * t);
}

Jet bump_value(const Jet& t) {
  if (t.value() <= -1.0 || t.value() >= 1.0) return Jet{};
  const Jet two_t = 2.0 * t;
  return smooth_step(two_t + Jet::constant(2.0)) *
         smooth_step(Jet::constant(2.0) - two_t);
}

double gaussian_value(double t) { return std::exp(-t * t / 2.0); }

namespace {

SampledFunction sample_even(double radius, double step,
                            const std::function<double(double)>& f) {
  const long long half = static_cast<long long>(std::round(radius / step));
  std::vector<Complex> v(static_cast<std::size_t>(2 * half + 1));
  for (long long i = -half; i <= half; ++i)
    v[static_cast<std::size_t>(i + half)] = f(static_cast<double>(i) * step);
  return SampledFunction(-radius, step, std::move(v), {-radius, radius});
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "bump",  "gaussian", "sine",        "constant",
      "monomial", "delta", "delta_prime", "dirac_comb"};
  return names;
}

CorpusEntry make_entry(const std::string& name, const CorpusParams& params) {
  CorpusEntry e;
  e.name = name;
  if (name == "bump") {
    e.is_sampled = true;
    e.sampled = sample_even(1.0, params.grid_step,
                            [](double t) { return bump_value(t); });
    e.expected_label = "D";
    e.note = "smooth, compactly supported plateau";
    e.classify_K = 3;
  } else if (name == "gaussian") {
    e.is_sampled = true;
    e.sampled = sample_even(params.gaussian_radius, params.grid_step,
                            gaussian_value);
    e.expected_label = "S";
    e.note = "rapidly decaying at the truncation radius";
    // Keep the truncation inside the band where the coefficient columns are
    // still visibly nonzero, so the decay profile is observable.
    e.classify_K = static_cast<int>(2.0 * params.gaussian_radius) - 2;
  } else if (name == "sine") {
    e.input = DistributionInput::from_function(
        [](double t) { return std::sin(2.0 * std::numbers::pi * t); });
    e.expected_label = "D_Linf";
    e.note = "bounded oscillation, paired exactly over each atom support";
    e.classify_K = 12;
  } else if (name == "constant") {
    e.input = DistributionInput::from_function([](double) { return 1.0; });
    e.expected_label = "D_Linf";
    e.note = "constant function";
    e.classify_K = 12;
  } else if (name == "monomial") {
    e.input = DistributionInput::polynomial(params.monomial_order);
    e.expected_label = "O_M";
    e.note = "polynomially growing multiplier";
    e.classify_K = 12;
  } else if (name == "delta") {
    e.input = DistributionInput::delta(params.delta_point);
    e.expected_label = "E_prime";
    e.note = "point mass";
    e.classify_K = 2;
  } else if (name == "delta_prime") {
    e.input = DistributionInput::delta_derivative(params.delta_point, 1);
    e.expected_label = "E_prime";
    e.note = "point mass derivative";
    e.classify_K = 2;
  } else if (name == "dirac_comb") {
    e.input = DistributionInput::dirac_comb();
    e.expected_label = "S_prime";
    e.note = "unit point masses at the integers";
    e.classify_K = 12;
  } else {
    throw ValidationError("unknown corpus entry: " + name);
  }
  return e;
}

WilsonCoeffs analyze_entry(const CorpusEntry& e, const Window& w, int K, int N) {
  if (e.is_sampled) return wilson_analysis(e.sampled, w, K, N);
  return wilson_analyze_distribution(e.input, w, K, N);
}

}  // namespace wilson
