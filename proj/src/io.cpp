#include "wilson/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "wilson/errors.hpp"

namespace wilson {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

void append_complex(std::ostringstream& out, const Complex& v) {
  out << '[' << format_double(v.real()) << ',' << format_double(v.imag())
      << ']';
}

nlohmann::json parse(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("malformed JSON input");
  return j;
}

std::vector<Complex> parse_complex_row(const nlohmann::json& row) {
  std::vector<Complex> out;
  out.reserve(row.size());
  for (const auto& pair : row) {
    if (!pair.is_array() || pair.size() != 2)
      throw ValidationError("complex values must be [re, im] pairs");
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

}  // namespace

std::string window_to_json(const Window& w) {
  const SampledFunction s = w.sample();
  std::ostringstream out;
  out << "{\"support_radius\":" << format_double(w.support_radius())
      << ",\"grid_step\":" << format_double(w.grid_step()) << ",\"samples\":[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << format_double(s.values[i].real());
  }
  out << "]}";
  return out.str();
}

std::string sampled_to_json(const SampledFunction& f) {
  std::ostringstream out;
  out << "{\"start\":" << format_double(f.start)
      << ",\"step\":" << format_double(f.step) << ",\"support\":["
      << format_double(f.support.lo) << ',' << format_double(f.support.hi)
      << "],\"values\":[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out << ',';
    append_complex(out, f.values[i]);
  }
  out << "]}";
  return out.str();
}

SampledFunction sampled_from_json(const std::string& text) {
  const nlohmann::json j = parse(text);
  if (!j.contains("start") || !j.contains("step") || !j.contains("support") ||
      !j.contains("values"))
    throw ValidationError("sampled function JSON needs start/step/support/values");
  std::vector<Complex> values = parse_complex_row(j.at("values"));
  const auto& sup = j.at("support");
  return SampledFunction(j.at("start").get<double>(), j.at("step").get<double>(),
                         std::move(values),
                         {sup.at(0).get<double>(), sup.at(1).get<double>()});
}

std::string gabor_to_json(const GaborCoeffs& c) {
  std::ostringstream out;
  out << "{\"a\":" << format_double(c.a) << ",\"b\":" << format_double(c.b)
      << ",\"K\":" << c.K << ",\"N\":" << c.N << ",\"values\":[";
  for (int k = -c.K; k <= c.K; ++k) {
    if (k > -c.K) out << ',';
    out << '[';
    for (int n = -c.N; n <= c.N; ++n) {
      if (n > -c.N) out << ',';
      append_complex(out, c.at(k, n));
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

GaborCoeffs gabor_from_json(const std::string& text) {
  const nlohmann::json j = parse(text);
  GaborCoeffs c(j.at("a").get<double>(), j.at("b").get<double>(),
                j.at("K").get<int>(), j.at("N").get<int>());
  const auto& rows = j.at("values");
  if (rows.size() != c.rows())
    throw ValidationError("coefficient rows do not match the declared range");
  for (int k = -c.K; k <= c.K; ++k) {
    const std::vector<Complex> row =
        parse_complex_row(rows[static_cast<std::size_t>(k + c.K)]);
    if (row.size() != c.cols())
      throw ValidationError("coefficient columns do not match the declared range");
    for (int n = -c.N; n <= c.N; ++n)
      c.at(k, n) = row[static_cast<std::size_t>(n + c.N)];
  }
  c.tail = c.boundary_max();
  return c;
}

std::string wilson_to_json(const WilsonCoeffs& c) {
  std::ostringstream out;
  out << "{\"K\":" << c.K << ",\"N\":" << c.N << ",\"n_min\":0,\"values\":[";
  for (int k = -c.K; k <= c.K; ++k) {
    if (k > -c.K) out << ',';
    out << '[';
    for (int n = 0; n <= c.N; ++n) {
      if (n > 0) out << ',';
      append_complex(out, c.at(k, n));
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

WilsonCoeffs wilson_from_json(const std::string& text) {
  const nlohmann::json j = parse(text);
  WilsonCoeffs c(j.at("K").get<int>(), j.at("N").get<int>());
  const auto& rows = j.at("values");
  if (rows.size() != c.rows())
    throw ValidationError("coefficient rows do not match the declared range");
  for (int k = -c.K; k <= c.K; ++k) {
    const std::vector<Complex> row =
        parse_complex_row(rows[static_cast<std::size_t>(k + c.K)]);
    if (row.size() != c.cols())
      throw ValidationError("coefficient columns do not match the declared range");
    for (int n = 0; n <= c.N; ++n) c.at(k, n) = row[static_cast<std::size_t>(n)];
  }
  c.tail = c.boundary_max();
  return c;
}

std::string gram_to_csv(const std::vector<Complex>& gram, int K, int N) {
  const auto order = enumerate_indices(K, N);
  const std::size_t m = order.size();
  if (gram.size() != m * m)
    throw ValidationError("gram matrix size does not match the index ranges");
  std::ostringstream out;
  out << "# |<atom_i, conj atom_j>| flattened diagonal-by-diagonal over "
         "(|k|,n), k>=0 before k<0 within a diagonal, each side by "
         "increasing n; i runs over rows. K="
      << K << " N=" << N << "\n";
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j) out << ',';
      out << format_double(std::abs(gram[i * m + j]));
    }
    out << '\n';
  }
  return out.str();
}

std::string classification_to_json(const Classification& c) {
  std::ostringstream out;
  out << "{\"labels\":[";
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    if (i) out << ',';
    out << '"' << c.labels[i].name << '"';
  }
  out << "],\"signatures\":{";
  auto axis = [&out](const char* key, const AxisDiagnostics& d) {
    out << '"' << key << "\":{\"class\":\"" << d.observed
        << "\",\"slope\":" << format_double(d.slope)
        << ",\"slope_threshold\":" << format_double(d.slope_threshold)
        << ",\"support_radius\":" << d.support_radius
        << ",\"growth_ratio\":" << format_double(d.growth_ratio)
        << ",\"boundary_ratio\":" << format_double(d.boundary_ratio)
        << ",\"lp_tail_fraction\":" << format_double(d.lp_tail_fraction) << '}';
  };
  axis("k", c.k_diag);
  out << ',';
  axis("n", c.n_diag);
  out << ",\"p\":" << format_double(c.options.p)
      << ",\"l_max\":" << c.options.l_max
      << ",\"note\":\"finite-truncation heuristic; labels are a best fit, "
         "not a membership certificate\"}"
      << ",\"tail_indicator\":" << format_double(c.tail_indicator)
      << ",\"verdict\":\"" << (c.conclusive ? "conclusive" : "inconclusive")
      << "\"}";
  return out.str();
}

std::string corpus_to_json(const CorpusParams& params) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const std::string& name : corpus_names()) {
    const CorpusEntry e = make_entry(name, params);
    if (!first) out << ',';
    first = false;
    out << "{\"name\":\"" << e.name << "\",\"expected_label\":\""
        << e.expected_label << "\",\"kind\":\""
        << (e.is_sampled ? "sampled" : "distribution") << "\",\"note\":\""
        << e.note << "\"}";
  }
  out << ']';
  return out.str();
}

}  // namespace wilson
