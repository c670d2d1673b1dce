#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "lcplab/classes.hpp"
#include "lcplab/generate.hpp"
#include "lcplab/io.hpp"
#include "lcplab/ipm.hpp"
#include "lcplab/lcp.hpp"
#include "lcplab/ppt.hpp"

namespace py = pybind11;
using namespace lcplab;

namespace {

// Entries cross the boundary as int, float, or "p/q" string; rationals go
// back as strings so nothing is rounded.
Rational entry_to_rational(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::bool_>(h))
    throw std::invalid_argument("matrix entries cannot be bool");
  if (py::isinstance<py::int_>(h))
    return parse_rational(py::str(h).cast<std::string>());
  if (py::isinstance<py::float_>(h))
    return rational_from_double(h.cast<double>());
  throw std::invalid_argument("matrix entries must be int, float, or str");
}

RationalMatrix matrix_in(const py::sequence& rows) {
  std::vector<RationalVector> r;
  for (const py::handle& row : rows) {
    RationalVector v;
    for (const py::handle& x : py::cast<py::sequence>(row))
      v.push_back(entry_to_rational(x));
    r.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(r);
}

RationalVector vector_in(const py::sequence& xs) {
  RationalVector v;
  for (const py::handle& x : xs) v.push_back(entry_to_rational(x));
  return v;
}

std::vector<std::string> vector_out(const RationalVector& v) {
  std::vector<std::string> out;
  for (const Rational& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::vector<std::string>> matrix_out(const RationalMatrix& a) {
  std::vector<std::vector<std::string>> out;
  for (int i = 0; i < a.n(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < a.n(); ++j) row.push_back(to_string(a.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

IndexSet alpha_in(const std::vector<int>& one_based, int n) {
  IndexSet s;
  for (int v : one_based) {
    if (v < 1 || v > n)
      throw std::invalid_argument("alpha indices must be 1..n");
    s.idx.push_back(v - 1);
  }
  std::sort(s.idx.begin(), s.idx.end());
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact LCP toolkit core";

  m.def("classify_json", [](const py::sequence& a) {
    return class_report_to_json(classify_full(matrix_in(a)));
  });

  m.def("solve_lemke", [](const py::sequence& a, const py::sequence& q) {
    LcpInstance inst(matrix_in(a), vector_in(q));
    LemkeOutcome out = solve_lemke(inst);
    py::dict d;
    d["pivots"] = out.pivots;
    if (out.solution) {
      d["status"] = "solved";
      d["z"] = vector_out(out.solution->z);
      d["w"] = vector_out(out.solution->w);
    } else {
      d["status"] = "ray";
      d["z"] = vector_out(out.ray->z);
      d["z_dir"] = vector_out(out.ray->z_dir);
    }
    return d;
  });

  m.def("solve_enumerate", [](const py::sequence& a, const py::sequence& q) {
    LcpInstance inst(matrix_in(a), vector_in(q));
    EnumerateResult out = solve_enumerate(inst);
    std::vector<std::vector<std::string>> zs;
    for (const LcpSolution& s : out.solutions) zs.push_back(vector_out(s.z));
    return zs;
  });

  m.def(
      "solve_ipm",
      [](const py::sequence& a, const py::sequence& q, double beta,
         double sigma, double eps, double kappa_slack, int max_iter,
         std::optional<std::vector<double>> z0) {
        LcpInstance inst(matrix_in(a), vector_in(q));
        IpmParams p;
        p.beta = beta;
        p.sigma = sigma;
        p.eps = eps;
        p.kappa_slack = kappa_slack;
        p.max_iter = max_iter;
        if (z0) p.z0 = *z0;
        IpmResult r = solve_ipm(inst, p);
        py::dict d;
        d["status"] = ipm_status_name(r.status);
        d["z"] = r.z;
        d["w"] = r.w;
        d["iterations"] = r.trace.empty() ? 0 : r.trace.back().k;
        d["ztw"] = r.trace.empty() ? 0.0 : r.trace.back().ztw;
        return d;
      },
      py::arg("a"), py::arg("q"), py::arg("beta") = 0.5,
      py::arg("sigma") = 0.2, py::arg("eps") = 1e-5,
      py::arg("kappa_slack") = 0.1, py::arg("max_iter") = 10000,
      py::arg("z0") = std::nullopt);

  m.def("ppt",
        [](const py::sequence& a, const std::vector<int>& alpha)
            -> std::optional<std::vector<std::vector<std::string>>> {
          RationalMatrix m_in = matrix_in(a);
          auto out = ppt_transform(m_in, alpha_in(alpha, m_in.n()));
          if (!out) return std::nullopt;
          return matrix_out(*out);
        });

  m.def("game_value", [](const py::sequence& a) {
    GameValue g = game_value(matrix_in(a));
    py::dict d;
    d["value"] = to_string(g.value);
    d["row_strategy"] = vector_out(g.row_strategy);
    d["col_strategy"] = vector_out(g.col_strategy);
    return d;
  });

  m.def("gen_structured", [](int n, std::uint64_t seed) {
    return matrix_out(generate_structured(n, seed));
  });

  m.def("gen_random",
        [](const std::string& cls, int n, std::uint64_t seed)
            -> std::optional<std::vector<std::vector<std::string>>> {
          auto filter = class_filter_from_name(cls);
          if (!filter)
            throw std::invalid_argument("unknown class '" + cls + "'");
          GenerateOutcome out = generate_random(*filter, n, seed);
          if (!out.matrix) return std::nullopt;
          return matrix_out(*out.matrix);
        });
}
