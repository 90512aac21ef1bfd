// Acceptance suite: one check per shipped guarantee, each printed as a
// single PASS/FAIL line with the measured value and its pinned tolerance.
// Exits nonzero when any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#include "test_helpers.hpp"
#include "wilson/basis.hpp"
#include "wilson/corpus.hpp"
#include "wilson/io.hpp"
#include "wilson/seqspace.hpp"

using namespace wilson;
using namespace wilson::testing;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              what, detail.c_str());
  if (!ok) ++failures;
}

std::string metric(const char* name, double value, double tol) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s=%.3e tol=%.0e", name, value, tol);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void criterion_1_window_validity(const Window& w) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> res = wilson_condition_residual(w, 3, 1e-3);
  const double worst_res = *std::max_element(res.begin(), res.end());
  const double sym = check_symmetry(w, 1e-3);
  const double l2 = window_l2_norm(w);
  const double elapsed = seconds_since(t0);
  const bool ok = worst_res <= 1e-10 && sym <= 1e-12 &&
                  std::abs(l2 - 1.0) <= 1e-10 && elapsed < 1.0;
  report(1, "window validity", ok,
         metric("residual", worst_res, 1e-10) + ", " +
             metric("symmetry", sym, 1e-12) + ", " +
             metric("|norm-1|", std::abs(l2 - 1.0), 1e-10) + ", " +
             metric("seconds", elapsed, 1));
}

void criterion_2_orthonormality(const Window& w) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Complex> gram = gram_matrix(w, 4, 8);
  const std::size_t m = 9 * 9;
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      worst = std::max(worst,
                       std::abs(gram[i * m + j] - (i == j ? 1.0 : 0.0)));
  const double elapsed = seconds_since(t0);
  const bool ok = worst <= 1e-8 && elapsed < 60.0;
  report(2, "orthonormality of the 81-atom gram matrix", ok,
         metric("max|G-I|", worst, 1e-8) + ", " + metric("seconds", elapsed, 60));
}

struct Fixture {
  SampledFunction f;
  WilsonCoeffs coeffs;
};

void criterion_3_roundtrip(const Window& w, const Fixture& bump,
                           const Fixture& gauss) {
  const SampledFunction bump_back = wilson_synthesis(
      bump.coeffs, w, make_grid(-3.5, 3.5, 1.0 / 1024.0));
  const double bump_err = relative_l2_error(bump.f, bump_back);

  const SampledFunction gauss_back = wilson_synthesis(
      gauss.coeffs, w, make_grid(-18.5, 18.5, 1.0 / 1024.0));
  const double gauss_err = relative_l2_error(gauss.f, gauss_back);

  const bool ok = bump_err <= 1e-6 && gauss_err <= 1e-6;
  report(3, "analysis-synthesis round trip", ok,
         metric("bump", bump_err, 1e-6) + ", " +
             metric("gaussian", gauss_err, 1e-6));
}

void criterion_4_parseval(const Fixture& bump, const Fixture& gauss) {
  auto rel = [](const Fixture& fx) {
    double energy = 0.0;
    for (const Complex& v : fx.coeffs.values) energy += std::norm(v);
    const double n2 = l2_norm(fx.f);
    return std::abs(energy - n2 * n2) / (n2 * n2);
  };
  const double b = rel(bump);
  const double g = rel(gauss);
  const bool ok = b <= 1e-6 && g <= 1e-6;
  report(4, "coefficient energy identity", ok,
         metric("bump", b, 1e-6) + ", " + metric("gaussian", g, 1e-6));
}

void criterion_5_algebraic_identities(const Window& w) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> kk(0, 4), nn(0, 6);
  bool fold_ok = true;
  bool flip_ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const WilsonCoeffs c = random_wilson_coeffs(rng, kk(rng), nn(rng));
    const WilsonCoeffs back = reindex_v(reindex_w(c));
    for (std::size_t i = 0; i < c.values.size() && fold_ok; ++i)
      fold_ok = within_ulps(back.values[i], c.values[i], 2);

    const GaborCoeffs g = random_gabor_coeffs(rng, kk(rng), nn(rng));
    const GaborCoeffs gg = reindex_i2(reindex_i2(g));
    for (std::size_t i = 0; i < g.values.size() && flip_ok; ++i)
      flip_ok = gg.values[i] == g.values[i];
  }

  const SampledFunction f = random_smooth_function(rng);
  const WilsonCoeffs direct = wilson_analysis(f, w, 2, 6);
  const WilsonCoeffs composed = reindex_v(gabor_analysis(f, w, 0.5, 1.0, 4, 6));
  const bool factored_ok =
      direct.values.size() == composed.values.size() &&
      std::memcmp(direct.values.data(), composed.values.data(),
                  direct.values.size() * sizeof(Complex)) == 0;

  report(5, "fold/spread and flip identities", fold_ok && flip_ok && factored_ok,
         std::string("fold=") + (fold_ok ? "<=2ulp" : "violated") +
             ", flip=" + (flip_ok ? "exact" : "violated") +
             ", factorization=" + (factored_ok ? "bit-identical" : "differs"));
}

void criterion_6_transpose_identity(const Window& w) {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<int> kk(0, 3), nn(0, 6);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const SampledFunction f = random_smooth_function(rng);
    const int K = kk(rng);
    const int N = nn(rng);
    const GaborCoeffs c = random_gabor_coeffs(rng, K, N);
    const GaborCoeffs analyzed = gabor_analysis(f, w, 0.5, 1.0, K, N);
    const Complex lhs = coeff_pairing(analyzed, c);
    const GridSpec grid = make_grid(-0.5 * K - 0.5 - 1.0, 0.5 * K + 0.5 + 1.0,
                                    1.0 / 1024.0);
    const SampledFunction synth = gabor_synthesis(reindex_i2(c), w, grid);
    const Complex rhs = inner_product(f, synth);
    worst = std::max(worst,
                     std::abs(lhs - rhs) / std::max(1e-30, std::abs(lhs)));
  }
  report(6, "analysis pairs as flipped synthesis", worst <= 1e-8,
         metric("worst relative gap", worst, 1e-8));
}

void criterion_7_delta_expansion(const Window& w) {
  const DistributionInput d = DistributionInput::delta(0.0);
  double worst_coeff = 0.0;
  for (int k = -2; k <= 2; ++k) {
    for (int n = 0; n <= 16; ++n) {
      Complex expect{};
      if (k == 0 && n == 0) expect = std::sqrt(2.0);
      else if (k == 0 && n > 0 && n % 2 == 0) expect = 2.0;
      worst_coeff = std::max(
          worst_coeff, std::abs(pair_distribution(d, w, k, n) - expect));
    }
  }

  const double step = 1.0 / 4096.0;
  const SampledFunction phi = sampled_bump(step);
  const GridSpec grid = make_grid(-0.5, 0.5, step);
  const double target = bump_value(0.0);
  std::vector<double> errors;
  for (int N : {16, 64, 256}) {
    Complex s{};
    for (int n = 0; n <= N; ++n) {
      const Complex c = pair_distribution(d, w, 0, n);
      if (std::abs(c) == 0.0) continue;
      s += c * inner_product(wilson_atom(w, 0, n, grid), phi);
    }
    errors.push_back(std::abs(s - target));
  }
  const bool monotone = errors[0] > errors[1] && errors[1] > errors[2];
  const bool ok = worst_coeff <= 1e-12 && monotone && errors[2] <= 1e-12;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "coeff dev=%.2e tol=1e-12, errors N=16/64/256: %.2e > %.2e > "
                "%.2e, final tol=1e-12",
                worst_coeff, errors[0], errors[1], errors[2]);
  report(7, "point-mass expansion", ok, buf);
}

void criterion_8_classification(const Window& w) {
  bool ok = true;
  std::string detail;
  for (const std::string& name : corpus_names()) {
    const CorpusEntry e = make_entry(name);
    const WilsonCoeffs c = analyze_entry(e, w, e.classify_K, e.classify_N);
    const Classification cls = classify(c);
    const bool smallest =
        !cls.labels.empty() && cls.labels.front().name == e.expected_label;
    bool suffix = true;
    for (int table : {0, 1}) {
      std::vector<int> positions;
      for (const SpaceLabel& l : cls.labels)
        if (l.table == table) positions.push_back(l.position);
      const int row_len = table == 0 ? 9 : 8;
      if (!positions.empty() && positions.back() != row_len - 1) suffix = false;
      for (std::size_t i = 1; i < positions.size(); ++i)
        if (positions[i] != positions[i - 1] + 1) suffix = false;
    }
    if (!(smallest && suffix && cls.conclusive)) ok = false;
    if (!detail.empty()) detail += " ";
    detail += name + "->" + (cls.labels.empty() ? "?" : cls.labels.front().name);
  }
  report(8, "corpus classification", ok, detail);
}

void criterion_9_unconditionality(const Window& w) {
  const SampledFunction f = sampled_bump();
  const WilsonCoeffs c = wilson_analysis(f, w, 3, 64);
  const double step = 1.0 / 1024.0;
  const SampledFunction phi = sample_callable(
      [](double t) { return Complex{bump_value(t - 0.25), 0.0}; }, -0.75, 1.25,
      step);

  std::vector<Complex> terms;
  for (const auto& [k, n] : enumerate_indices(3, 64)) {
    const double center = n == 0 ? k : k / 2.0;
    const GridSpec grid = make_grid(center - 0.5, center + 0.5, step);
    terms.push_back(c.at(k, n) * inner_product(wilson_atom(w, k, n, grid), phi));
  }
  Complex reference{};
  for (const Complex& t : terms) reference += t;

  std::mt19937_64 rng(107);
  std::vector<std::size_t> perm(terms.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Complex s{};
    for (std::size_t i : perm) s += terms[i];
    worst = std::max(worst, std::abs(s - reference));
  }
  report(9, "summation-order stability", worst <= 1e-8,
         metric("worst order gap", worst, 1e-8));
}

}  // namespace

int main() {
  const Window w = build_wilson_window();

  criterion_1_window_validity(w);
  criterion_2_orthonormality(w);

  Fixture bump{sampled_bump(), {}};
  bump.coeffs = wilson_analysis(bump.f, w, 3, 64);
  Fixture gauss{make_entry("gaussian").sampled, {}};
  gauss.coeffs = wilson_analysis(gauss.f, w, 18, 64);

  criterion_3_roundtrip(w, bump, gauss);
  criterion_4_parseval(bump, gauss);
  criterion_5_algebraic_identities(w);
  criterion_6_transpose_identity(w);
  criterion_7_delta_expansion(w);
  criterion_8_classification(w);
  criterion_9_unconditionality(w);

  if (failures == 0) std::printf("all acceptance criteria passed\n");
  else std::printf("%d acceptance criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
