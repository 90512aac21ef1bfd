// wbt: construct verified windows, run lattice analysis/synthesis on sampled
// functions and distributions, and classify coefficient decay.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "wilson/basis.hpp"
#include "wilson/corpus.hpp"
#include "wilson/errors.hpp"
#include "wilson/io.hpp"
#include "wilson/seqspace.hpp"

namespace {

using namespace wilson;

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitArguments = 4;

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(ch);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("io", "cannot write " + path);
  out << text;
  if (!out) throw Error("io", "failed writing " + path);
}

struct CommonConfig {
  double grid_step = 1.0 / 1024.0;
  int K = 3;
  int N = 64;
  double a = 0.5;
  double b = 1.0;
  std::string input;
  std::string corpus;
  std::string output;
};

/// Input resolution shared by analyze/roundtrip/classify: a sampled-function
/// file or a corpus entry name.
struct ResolvedInput {
  CorpusEntry entry;  // synthetic entry when reading from a file
};

ResolvedInput resolve_input(const CommonConfig& cfg, bool allow_file) {
  ResolvedInput r;
  if (!cfg.corpus.empty()) {
    CorpusParams params;
    params.grid_step = cfg.grid_step;
    r.entry = make_entry(cfg.corpus, params);
    return r;
  }
  if (allow_file && !cfg.input.empty()) {
    r.entry.name = cfg.input;
    r.entry.is_sampled = true;
    r.entry.sampled = sampled_from_json(read_file(cfg.input));
    return r;
  }
  throw Error("arguments", "provide --corpus NAME or --input FILE");
}

int run(int argc, char** argv) {
  CLI::App app{"Wilson window construction, time-frequency analysis and "
               "coefficient decay classification"};
  app.require_subcommand(1);

  CommonConfig cfg;
  bool gabor = false;
  int n_max = 3;
  double check_step = 1e-3;
  double residual_tol = 1e-10;
  double symmetry_tol = 1e-12;
  double norm_tol = 1e-10;
  double lp = 2.0;
  std::optional<double> grid_start;
  std::optional<std::size_t> grid_count;

  auto add_common = [&cfg](CLI::App* cmd, bool with_lattice) {
    cmd->add_option("--step", cfg.grid_step, "grid step for sampling/quadrature");
    cmd->add_option("--K", cfg.K, "translation truncation");
    cmd->add_option("--N", cfg.N, "modulation truncation");
    if (with_lattice) {
      cmd->add_option("--a", cfg.a, "lattice time step");
      cmd->add_option("--b", cfg.b, "lattice frequency step");
    }
  };

  CLI::App* make_window = app.add_subcommand(
      "make-window", "construct the canonical window and write its samples");
  make_window->add_option("--step", cfg.grid_step, "sampling step");
  make_window->add_option("-o,--output", cfg.output, "output JSON path")
      ->required();

  CLI::App* check_window = app.add_subcommand(
      "check-window", "verify the window conditions and report residuals");
  check_window->add_option("--n-max", n_max, "largest shift order checked");
  check_window->add_option("--grid-step", check_step, "verification grid step");
  check_window->add_option("--tol", residual_tol, "residual tolerance");
  check_window->add_option("--symmetry-tol", symmetry_tol, "symmetry tolerance");
  check_window->add_option("--norm-tol", norm_tol, "norm tolerance");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "compute coefficients of a sampled function or corpus entry");
  add_common(analyze, true);
  CLI::Option* analyze_input =
      analyze->add_option("--input", cfg.input, "sampled function JSON");
  analyze->add_option("--corpus", cfg.corpus, "corpus entry name")
      ->excludes(analyze_input);
  analyze->add_flag("--gabor", gabor, "emit lattice coefficients instead of folded ones");
  analyze->add_option("-o,--output", cfg.output, "output JSON path")->required();

  CLI::App* synthesize = app.add_subcommand(
      "synthesize", "evaluate the expansion of a coefficient file on a grid");
  synthesize->add_option("--coeffs", cfg.input, "coefficient JSON")->required();
  synthesize->add_option("--step", cfg.grid_step, "output grid step");
  synthesize->add_option("--grid-start", grid_start, "output grid start");
  synthesize->add_option("--grid-count", grid_count, "output grid point count");
  synthesize->add_option("-o,--output", cfg.output, "output JSON path")
      ->required();

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "analyze then synthesize and report the relative L2 error");
  add_common(roundtrip, false);
  roundtrip->add_option("--input", cfg.input, "sampled function JSON");
  roundtrip->add_option("--corpus", cfg.corpus, "corpus entry name");

  CLI::App* gram = app.add_subcommand(
      "gram", "pairwise atom products flattened to CSV");
  add_common(gram, false);
  gram->add_option("-o,--output", cfg.output, "output CSV path")->required();

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "match coefficient decay against the space signatures");
  add_common(classify_cmd, false);
  classify_cmd->add_option("--input", cfg.input,
                           "folded coefficient JSON (as written by analyze)");
  classify_cmd->add_option("--corpus", cfg.corpus, "corpus entry name");
  classify_cmd->add_option("--p", lp, "exponent probed by the Lp column test");
  classify_cmd->add_option("-o,--output", cfg.output, "report JSON path");

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "corpus inspection");
  CLI::App* corpus_list =
      corpus_cmd->add_subcommand("list", "names and expected labels as JSON");
  corpus_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitArguments;
  }

  try {
    const Window w = build_wilson_window(cfg.grid_step);

    if (make_window->parsed()) {
      write_file(cfg.output, window_to_json(w) + "\n");
      return 0;
    }

    if (check_window->parsed()) {
      const std::vector<double> res = wilson_condition_residual(w, n_max, check_step);
      const double worst = *std::max_element(res.begin(), res.end());
      const double sym = check_symmetry(w, check_step);
      const double norm_dev = std::abs(window_l2_norm(w) - 1.0);
      const bool pass =
          worst <= residual_tol && sym <= symmetry_tol && norm_dev <= norm_tol;
      std::ostringstream out;
      out << "{\"residuals\":[";
      for (std::size_t i = 0; i < res.size(); ++i) {
        if (i) out << ',';
        out << format_double(res[i]);
      }
      out << "],\"symmetry\":" << format_double(sym)
          << ",\"norm_deviation\":" << format_double(norm_dev)
          << ",\"pass\":" << (pass ? "true" : "false") << "}";
      std::cout << out.str() << "\n";
      return pass ? 0 : kExitValidation;
    }

    if (analyze->parsed()) {
      const ResolvedInput in = resolve_input(cfg, true);
      std::string payload;
      double tail = 0.0;
      if (gabor) {
        if (!in.entry.is_sampled)
          throw ValidationError(
              "lattice coefficients are only available for sampled inputs");
        const GaborCoeffs c =
            gabor_analysis(in.entry.sampled, w, cfg.a, cfg.b, cfg.K, cfg.N);
        tail = c.tail;
        payload = gabor_to_json(c);
      } else {
        const WilsonCoeffs c = analyze_entry(in.entry, w, cfg.K, cfg.N);
        tail = c.tail;
        payload = wilson_to_json(c);
      }
      write_file(cfg.output, payload + "\n");
      std::cout << "{\"output\":\"" << cfg.output
                << "\",\"tail\":" << format_double(tail) << "}\n";
      return 0;
    }

    if (synthesize->parsed()) {
      const std::string text = read_file(cfg.input);
      const bool folded = text.find("\"n_min\"") != std::string::npos;
      SampledFunction out = [&] {
        if (folded) {
          const WilsonCoeffs c = wilson_from_json(text);
          const double hull = static_cast<double>(c.K) + w.support_radius();
          const GridSpec grid = {
              grid_start.value_or(std::floor(-hull / cfg.grid_step) * cfg.grid_step),
              cfg.grid_step, 0};
          const GridSpec final_grid =
              grid_count ? GridSpec{grid.start, grid.step, *grid_count}
                         : make_grid(grid.start, hull, cfg.grid_step);
          return wilson_synthesis(c, w, final_grid);
        }
        const GaborCoeffs c = gabor_from_json(text);
        const double hull = c.a * c.K + w.support_radius();
        const GridSpec grid = {
            grid_start.value_or(std::floor(-hull / cfg.grid_step) * cfg.grid_step),
            cfg.grid_step, 0};
        const GridSpec final_grid =
            grid_count ? GridSpec{grid.start, grid.step, *grid_count}
                       : make_grid(grid.start, hull, cfg.grid_step);
        return gabor_synthesis(c, w, final_grid);
      }();
      write_file(cfg.output, sampled_to_json(out) + "\n");
      return 0;
    }

    if (roundtrip->parsed()) {
      const ResolvedInput in = resolve_input(cfg, true);
      if (!in.entry.is_sampled)
        throw ValidationError("round trips need a sampled reference function");
      const SampledFunction& f = in.entry.sampled;
      const WilsonCoeffs c = wilson_analysis(f, w, cfg.K, cfg.N);
      const double hull = cfg.K + w.support_radius();
      const SampledFunction back = wilson_synthesis(
          c, w,
          make_grid(std::min(-hull, f.start), std::max(hull, f.end()), f.step));
      const double err = relative_l2_error(f, back);
      std::cout << "{\"relative_l2_error\":" << format_double(err)
                << ",\"K\":" << cfg.K << ",\"N\":" << cfg.N
                << ",\"tail\":" << format_double(c.tail) << "}\n";
      return 0;
    }

    if (gram->parsed()) {
      const std::vector<Complex> g = gram_matrix(w, cfg.K, cfg.N);
      const std::size_t m = static_cast<std::size_t>(2 * cfg.K + 1) *
                            static_cast<std::size_t>(cfg.N + 1);
      double worst = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          worst = std::max(worst, std::abs(g[i * m + j] - (i == j ? 1.0 : 0.0)));
      write_file(cfg.output, gram_to_csv(g, cfg.K, cfg.N));
      std::cout << "{\"max_identity_deviation\":" << format_double(worst)
                << ",\"output\":\"" << cfg.output << "\"}\n";
      return 0;
    }

    if (classify_cmd->parsed()) {
      WilsonCoeffs c;
      if (!cfg.corpus.empty()) {
        CorpusParams params;
        params.grid_step = cfg.grid_step;
        const CorpusEntry e = make_entry(cfg.corpus, params);
        const int K = classify_cmd->count("--K") ? cfg.K : e.classify_K;
        const int N = classify_cmd->count("--N") ? cfg.N : e.classify_N;
        c = analyze_entry(e, w, K, N);
      } else if (!cfg.input.empty()) {
        c = wilson_from_json(read_file(cfg.input));
      } else {
        throw Error("arguments", "provide --corpus NAME or --input FILE");
      }
      ClassifyOptions opts;
      opts.p = lp;
      const std::string report = classification_to_json(classify(c, opts));
      if (!cfg.output.empty()) write_file(cfg.output, report + "\n");
      std::cout << report << "\n";
      return 0;
    }

    if (corpus_list->parsed()) {
      std::cout << corpus_to_json() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "{\"error\":{\"code\":\"" << e.code() << "\",\"message\":\""
              << json_escape(e.what()) << "\"}}\n";
    if (e.code() == "io") return kExitIo;
    if (e.code() == "arguments") return kExitArguments;
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":{\"code\":\"internal\",\"message\":\""
              << json_escape(e.what()) << "\"}}\n";
    return kExitValidation;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
