#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wilson/basis.hpp"
#include "wilson/corpus.hpp"
#include "wilson/errors.hpp"
#include "wilson/io.hpp"
#include "wilson/seqspace.hpp"

namespace py = pybind11;
using namespace wilson;

namespace {

py::array_t<Complex> values_1d(const std::vector<Complex>& v) {
  py::array_t<Complex> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::array_t<Complex> values_2d(const std::vector<Complex>& v, std::size_t rows,
                               std::size_t cols) {
  py::array_t<Complex> out({static_cast<py::ssize_t>(rows),
                            static_cast<py::ssize_t>(cols)});
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

std::vector<Complex> from_array(const py::array_t<Complex>& a) {
  const auto buf = a.request();
  const auto* ptr = static_cast<const Complex*>(buf.ptr);
  std::size_t total = 1;
  for (const auto d : buf.shape) total *= static_cast<std::size_t>(d);
  return {ptr, ptr + total};
}

GridSpec grid_from_args(double start, double step, std::size_t count) {
  return {start, step, count};
}

Axis axis_from_string(const std::string& s) {
  if (s == "k" || s == "K") return Axis::K;
  if (s == "n" || s == "N") return Axis::N;
  throw ValidationError("axis must be 'k' or 'n'");
}

py::dict classification_to_dict(const Classification& c) {
  py::list labels;
  for (const SpaceLabel& l : c.labels) labels.append(l.name);
  py::dict axis_k, axis_n;
  auto fill = [](py::dict& d, const AxisDiagnostics& a) {
    d["class"] = a.observed;
    d["slope"] = a.slope;
    d["slope_threshold"] = a.slope_threshold;
    d["support_radius"] = a.support_radius;
    d["growth_ratio"] = a.growth_ratio;
    d["boundary_ratio"] = a.boundary_ratio;
    d["lp_tail_fraction"] = a.lp_tail_fraction;
  };
  fill(axis_k, c.k_diag);
  fill(axis_n, c.n_diag);
  py::dict out;
  out["labels"] = labels;
  out["smallest"] = c.labels.empty() ? py::object(py::none())
                                     : py::object(py::str(c.labels.front().name));
  out["signatures"] = py::dict(py::arg("k") = axis_k, py::arg("n") = axis_n);
  out["tail_indicator"] = c.tail_indicator;
  out["verdict"] = c.conclusive ? "conclusive" : "inconclusive";
  out["json"] = classification_to_json(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wilson window construction, lattice time-frequency analysis and "
            "coefficient decay classification";

  py::register_exception<GridError>(m, "GridError", PyExc_ValueError);
  py::register_exception<AlignmentError>(m, "AlignmentError", PyExc_ValueError);
  py::register_exception<CoverageError>(m, "CoverageError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def("smooth_step", py::overload_cast<double>(&smooth_step),
        "C-infinity step: 0 below 0, 1 above 1", py::arg("x"));

  py::class_<SampledFunction>(m, "SampledFunction")
      .def(py::init([](double start, double step, py::array_t<Complex> values,
                       std::pair<double, double> support) {
             return SampledFunction(start, step, from_array(values),
                                    {support.first, support.second});
           }),
           py::arg("start"), py::arg("step"), py::arg("values"),
           py::arg("support"))
      .def_readonly("start", &SampledFunction::start)
      .def_readonly("step", &SampledFunction::step)
      .def_property_readonly(
          "support",
          [](const SampledFunction& f) {
            return std::pair<double, double>{f.support.lo, f.support.hi};
          })
      .def_property_readonly(
          "values", [](const SampledFunction& f) { return values_1d(f.values); })
      .def_property_readonly("points",
                             [](const SampledFunction& f) {
                               py::array_t<double> out(
                                   static_cast<py::ssize_t>(f.size()));
                               for (std::size_t i = 0; i < f.size(); ++i)
                                 out.mutable_data()[i] = f.point(i);
                               return out;
                             })
      .def("__len__", &SampledFunction::size)
      .def("to_json", &sampled_to_json);

  m.def("sampled_from_json", &sampled_from_json, py::arg("text"));

  py::class_<Window>(m, "Window")
      .def("__call__", &Window::operator(), py::arg("x"))
      .def("derivative", &Window::derivative, py::arg("x"), py::arg("order") = 1)
      .def_property_readonly("support_radius", &Window::support_radius)
      .def_property_readonly("grid_step", &Window::grid_step)
      .def("sample", py::overload_cast<>(&Window::sample, py::const_))
      .def("sample", py::overload_cast<double>(&Window::sample, py::const_),
           py::arg("step"))
      .def("sup_norm", &Window::sup_norm, py::arg("order"))
      .def("to_json", &window_to_json);

  m.def("make_window", &build_wilson_window,
        py::arg("grid_step") = 1.0 / 1024.0,
        "canonical compactly supported window generating an orthonormal "
        "Wilson system");
  m.def("wilson_condition_residual", &wilson_condition_residual,
        py::arg("window"), py::arg("n_max") = 3, py::arg("grid_step") = 1e-3);
  m.def("check_symmetry", &check_symmetry, py::arg("window"),
        py::arg("grid_step") = 1e-3);
  m.def("window_l2_norm", &window_l2_norm, py::arg("window"));

  m.def("tf_shift", &tf_shift, py::arg("f"), py::arg("x"), py::arg("xi"),
        "modulated translation M_xi T_x f");
  m.def("inner_product", &inner_product, py::arg("f"), py::arg("g"),
        "bilinear Simpson pairing of f and g (no hidden conjugation)");
  m.def("l2_norm", &l2_norm, py::arg("f"));
  m.def("relative_l2_error", &relative_l2_error, py::arg("f"), py::arg("g"));
  m.def("stft", &stft, py::arg("f"), py::arg("window"), py::arg("x"),
        py::arg("xi"));

  py::class_<GaborCoeffs>(m, "GaborCoeffs")
      .def(py::init([](double a, double b, int K, int N,
                       py::array_t<Complex> values) {
             GaborCoeffs c(a, b, K, N);
             auto v = from_array(values);
             if (v.size() != c.values.size())
               throw ValidationError("value array does not match the ranges");
             c.values = std::move(v);
             c.tail = c.boundary_max();
             return c;
           }),
           py::arg("a"), py::arg("b"), py::arg("K"), py::arg("N"),
           py::arg("values"))
      .def_readonly("a", &GaborCoeffs::a)
      .def_readonly("b", &GaborCoeffs::b)
      .def_readonly("K", &GaborCoeffs::K)
      .def_readonly("N", &GaborCoeffs::N)
      .def_readonly("tail", &GaborCoeffs::tail)
      .def_property_readonly(
          "values",
          [](const GaborCoeffs& c) {
            return values_2d(c.values, c.rows(), c.cols());
          })
      .def("at", [](const GaborCoeffs& c, int k, int n) { return c.at(k, n); },
           py::arg("k"), py::arg("n"))
      .def("to_json", &gabor_to_json);

  py::class_<WilsonCoeffs>(m, "WilsonCoeffs")
      .def(py::init([](int K, int N, py::array_t<Complex> values) {
             WilsonCoeffs c(K, N);
             auto v = from_array(values);
             if (v.size() != c.values.size())
               throw ValidationError("value array does not match the ranges");
             c.values = std::move(v);
             c.tail = c.boundary_max();
             return c;
           }),
           py::arg("K"), py::arg("N"), py::arg("values"))
      .def_readonly("K", &WilsonCoeffs::K)
      .def_readonly("N", &WilsonCoeffs::N)
      .def_readonly("tail", &WilsonCoeffs::tail)
      .def_property_readonly(
          "values",
          [](const WilsonCoeffs& c) {
            return values_2d(c.values, c.rows(), c.cols());
          })
      .def("at", [](const WilsonCoeffs& c, int k, int n) { return c.at(k, n); },
           py::arg("k"), py::arg("n"))
      .def("to_json", &wilson_to_json);

  m.def("gabor_from_json", &gabor_from_json, py::arg("text"));
  m.def("wilson_from_json", &wilson_from_json, py::arg("text"));

  m.def("gabor_analysis", &gabor_analysis, py::arg("f"), py::arg("window"),
        py::arg("a") = 0.5, py::arg("b") = 1.0, py::arg("K") = 3,
        py::arg("N") = 64);
  m.def(
      "gabor_synthesis",
      [](const GaborCoeffs& c, const Window& w, double start, double step,
         std::size_t count) {
        return gabor_synthesis(c, w, grid_from_args(start, step, count));
      },
      py::arg("coeffs"), py::arg("window"), py::arg("grid_start"),
      py::arg("grid_step"), py::arg("grid_count"));
  m.def(
      "gabor_synthesis",
      [](const GaborCoeffs& c, const Window& w) {
        const double hull = c.a * c.K + w.support_radius();
        return gabor_synthesis(c, w, make_grid(-hull, hull, w.grid_step()));
      },
      py::arg("coeffs"), py::arg("window"));

  m.def(
      "wilson_atom",
      [](const Window& w, int k, int n, double start, double step,
         std::size_t count) {
        return wilson_atom(w, k, n, grid_from_args(start, step, count));
      },
      py::arg("window"), py::arg("k"), py::arg("n"), py::arg("grid_start"),
      py::arg("grid_step"), py::arg("grid_count"));
  m.def(
      "wilson_atom",
      [](const Window& w, int k, int n) {
        const double center = n == 0 ? k : k / 2.0;
        const double r = w.support_radius();
        return wilson_atom(
            w, k, n, make_grid(center - r, center + r, w.grid_step()));
      },
      py::arg("window"), py::arg("k"), py::arg("n"));
  m.def("wilson_atom_value", &wilson_atom_value, py::arg("window"),
        py::arg("k"), py::arg("n"), py::arg("t"));
  m.def("wilson_atom_derivative", &wilson_atom_derivative, py::arg("window"),
        py::arg("k"), py::arg("n"), py::arg("t"), py::arg("order"));

  m.def("reindex_i2", &reindex_i2, py::arg("coeffs"));
  m.def("reindex_v", &reindex_v, py::arg("coeffs"));
  m.def("reindex_w", &reindex_w, py::arg("coeffs"));
  m.def("wilson_analysis", &wilson_analysis, py::arg("f"), py::arg("window"),
        py::arg("K") = 3, py::arg("N") = 64);
  m.def(
      "wilson_synthesis",
      [](const WilsonCoeffs& c, const Window& w, double start, double step,
         std::size_t count) {
        return wilson_synthesis(c, w, grid_from_args(start, step, count));
      },
      py::arg("coeffs"), py::arg("window"), py::arg("grid_start"),
      py::arg("grid_step"), py::arg("grid_count"));
  m.def(
      "wilson_synthesis",
      [](const WilsonCoeffs& c, const Window& w) {
        const double hull = c.K + w.support_radius();
        return wilson_synthesis(c, w, make_grid(-hull, hull, w.grid_step()));
      },
      py::arg("coeffs"), py::arg("window"));

  m.def("enumerate_indices", &enumerate_indices, py::arg("K"), py::arg("N"));
  m.def(
      "gram_matrix",
      [](const Window& w, int K, int N) {
        const auto g = gram_matrix(w, K, N);
        const std::size_t mdim = static_cast<std::size_t>(2 * K + 1) *
                                 static_cast<std::size_t>(N + 1);
        return values_2d(g, mdim, mdim);
      },
      py::arg("window"), py::arg("K"), py::arg("N"));
  m.def(
      "gram_to_csv",
      [](const Window& w, int K, int N) {
        return gram_to_csv(gram_matrix(w, K, N), K, N);
      },
      py::arg("window"), py::arg("K"), py::arg("N"));

  py::class_<DistributionInput>(m, "DistributionInput")
      .def_static("delta", &DistributionInput::delta, py::arg("x0") = 0.0)
      .def_static("delta_derivative", &DistributionInput::delta_derivative,
                  py::arg("x0"), py::arg("order"))
      .def_static("dirac_comb", &DistributionInput::dirac_comb)
      .def_static("polynomial", &DistributionInput::polynomial, py::arg("order"))
      .def_static("from_function", &DistributionInput::from_function,
                  py::arg("f"));
  m.def("pair_distribution", &pair_distribution, py::arg("d"),
        py::arg("window"), py::arg("k"), py::arg("n"));
  m.def("wilson_analyze_distribution", &wilson_analyze_distribution,
        py::arg("d"), py::arg("window"), py::arg("K") = 3, py::arg("N") = 64);

  m.def("weight", &weight, py::arg("i"), py::arg("l"));

  py::class_<NormComponent>(m, "NormComponent")
      .def_static("sup_weighted", &NormComponent::sup_weighted, py::arg("l"))
      .def_static("lp", &NormComponent::lp, py::arg("p"))
      .def_static("finite_support_check", &NormComponent::finite_support_check);

  auto norm_impl = [](const CoeffView& view, const NormComponent& outer,
                      const NormComponent& inner, const std::string& axis) {
    return mixed_norm(view, {outer, inner, axis_from_string(axis)});
  };
  m.def(
      "mixed_norm",
      [norm_impl](const WilsonCoeffs& c, const NormComponent& outer,
                  const NormComponent& inner, const std::string& outer_axis) {
        return norm_impl(CoeffView(c), outer, inner, outer_axis);
      },
      py::arg("coeffs"), py::arg("outer"), py::arg("inner"),
      py::arg("outer_axis") = "n");
  m.def(
      "mixed_norm",
      [norm_impl](const GaborCoeffs& c, const NormComponent& outer,
                  const NormComponent& inner, const std::string& outer_axis) {
        return norm_impl(CoeffView(c), outer, inner, outer_axis);
      },
      py::arg("coeffs"), py::arg("outer"), py::arg("inner"),
      py::arg("outer_axis") = "n");
  m.def(
      "decay_profile",
      [](const WilsonCoeffs& c, const std::vector<int>& l_values,
         const NormComponent& outer, const NormComponent& inner,
         const std::string& outer_axis) {
        return decay_profile(CoeffView(c), l_values,
                             {outer, inner, axis_from_string(outer_axis)});
      },
      py::arg("coeffs"), py::arg("l_values"), py::arg("outer"),
      py::arg("inner"), py::arg("outer_axis") = "n");

  m.def(
      "classify",
      [](const WilsonCoeffs& c, double p, int l_max) {
        ClassifyOptions opts;
        opts.p = p;
        opts.l_max = l_max;
        return classification_to_dict(classify(c, opts));
      },
      py::arg("coeffs"), py::arg("p") = 2.0, py::arg("l_max") = 6);

  py::class_<CorpusEntry>(m, "CorpusEntry")
      .def_readonly("name", &CorpusEntry::name)
      .def_readonly("is_sampled", &CorpusEntry::is_sampled)
      .def_readonly("sampled", &CorpusEntry::sampled)
      .def_readonly("input", &CorpusEntry::input)
      .def_readonly("expected_label", &CorpusEntry::expected_label)
      .def_readonly("note", &CorpusEntry::note)
      .def_readonly("classify_K", &CorpusEntry::classify_K)
      .def_readonly("classify_N", &CorpusEntry::classify_N);
  m.def(
      "make_entry",
      [](const std::string& name, double grid_step, int monomial_order) {
        CorpusParams params;
        params.grid_step = grid_step;
        params.monomial_order = monomial_order;
        return make_entry(name, params);
      },
      py::arg("name"), py::arg("grid_step") = 1.0 / 1024.0,
      py::arg("monomial_order") = 2);
  m.def("corpus_names", [] { return corpus_names(); });
  m.def("corpus_to_json", [] { return corpus_to_json(); });
  m.def("analyze_entry", &analyze_entry, py::arg("entry"), py::arg("window"),
        py::arg("K"), py::arg("N"));

  m.def("bump", py::overload_cast<double>(&bump_value), py::arg("t"),
        "smooth plateau supported on [-1, 1]");
  m.def("gaussian", &gaussian_value, py::arg("t"));
}
