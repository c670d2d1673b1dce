#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lcplab/classes.hpp"
#include "lcplab/generate.hpp"
#include "lcplab/io.hpp"
#include "lcplab/ipm.hpp"
#include "lcplab/lcp.hpp"
#include "lcplab/ppt.hpp"
#include "lcplab/repro.hpp"

namespace {

using namespace lcplab;

// Exit codes: 0 success/solution, 2 no solution or ray, 3 input error,
// 4 stalled solver.
constexpr int kOk = 0;
constexpr int kNoSolution = 2;
constexpr int kInputError = 3;
constexpr int kStall = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RationalVector parse_rational_list(const std::string& text,
                                   const std::string& what) {
  RationalVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception& e) {
      throw InputError(what + ": bad entry '" + item + "': " + e.what());
    }
  }
  if (out.empty()) throw InputError(what + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& what) {
  std::vector<double> out;
  for (const Rational& r : parse_rational_list(text, what))
    out.push_back(to_double(r));
  return out;
}

IndexSet parse_alpha(const std::string& text, int n) {
  IndexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v < 1 || v > n)
      throw InputError("--alpha: indices must be 1.." + std::to_string(n) +
                       ", got '" + item + "'");
    if (out.contains(v - 1))
      throw InputError("--alpha: duplicate index " + item);
    out.idx.push_back(v - 1);
  }
  std::sort(out.idx.begin(), out.idx.end());
  return out;
}

MatrixDocument load(const std::string& path) {
  try {
    return read_matrix_document(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

LcpInstance load_instance(const std::string& path) {
  MatrixDocument doc = load(path);
  if (!doc.q)
    throw InputError(path + ": the instance has no q vector; solving needs "
                     "both A and q");
  return LcpInstance(doc.a, *doc.q);
}

std::string fmt(const std::vector<double>& v) {
  std::ostringstream os;
  os << std::setprecision(17) << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

void print_solution(const LcpSolution& s) {
  std::cout << "z = " << to_string(s.z) << "\n";
  std::cout << "w = " << to_string(s.w) << "\n";
  std::cout << "support = {";
  for (size_t i = 0; i < s.support.idx.size(); ++i)
    std::cout << (i ? ", " : "") << s.support.idx[i] + 1;
  std::cout << "}\n";
}

int run_classify(const std::string& input, const std::string& json_out) {
  MatrixDocument doc = load(input);
  ClassReport r = classify_full(doc.a);
  std::cout << render_class_report(r);
  if (!json_out.empty()) {
    std::ofstream os(json_out);
    if (!os) throw InputError("cannot write " + json_out);
    os << class_report_to_json(r);
  }
  return kOk;
}

int run_solve(const std::string& input, const std::string& method,
              const IpmParams& ipm, const std::string& z0_text,
              const std::string& covering_text, const std::string& trace) {
  LcpInstance inst = load_instance(input);

  if (method == "lemke") {
    RationalVector d;
    if (!covering_text.empty()) {
      d = parse_rational_list(covering_text, "--covering");
      if (static_cast<int>(d.size()) != inst.n())
        throw InputError("--covering: expected " + std::to_string(inst.n()) +
                         " entries");
    }
    LemkeOutcome out;
    try {
      out = solve_lemke(inst, d);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    std::cout << "pivots = " << out.pivots << "\n";
    if (out.solution) {
      print_solution(*out.solution);
      return kOk;
    }
    std::cout << "no solution: ray termination\n";
    std::cout << "z base = " << to_string(out.ray->z)
              << ", direction = " << to_string(out.ray->z_dir) << "\n";
    std::cout << "z0 base = " << to_string(out.ray->z0)
              << ", direction = " << to_string(out.ray->z0_dir) << "\n";
    return kNoSolution;
  }

  if (method == "enumerate") {
    EnumerateResult out;
    try {
      out = solve_enumerate(inst);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (!out.solvable) {
      std::cout << "no solution (all supports exhausted)\n";
      return kNoSolution;
    }
    std::cout << out.solutions.size()
              << (out.solutions.size() == 1 ? " solution\n" : " solutions\n");
    for (const LcpSolution& s : out.solutions) print_solution(s);
    return kOk;
  }

  // ipm
  IpmParams p = ipm;
  if (!z0_text.empty()) p.z0 = parse_double_list(z0_text, "--z0");
  IpmResult r;
  try {
    r = solve_ipm(inst, p);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!trace.empty()) {
    std::ofstream os(trace);
    if (!os) throw InputError("cannot write " + trace);
    write_trace_csv(os, r.trace);
  }
  std::cout << "status = " << ipm_status_name(r.status) << "\n";
  if (!r.trace.empty()) {
    std::cout << "iterations = " << r.trace.back().k << "\n";
    std::cout << std::setprecision(17)
              << "z^T w = " << r.trace.back().ztw << "\n";
  }
  if (!r.z.empty()) {
    std::cout << "z = " << fmt(r.z) << "\n";
    std::cout << "w = " << fmt(r.w) << "\n";
  }
  if (!r.detail.empty()) std::cout << r.detail << "\n";
  switch (r.status) {
    case IpmStatus::Converged:
      return kOk;
    case IpmStatus::NoStrictFeasiblePoint:
      return kNoSolution;
    default:
      return kStall;
  }
}

int run_ppt(const std::string& input, const std::string& alpha_text) {
  MatrixDocument doc = load(input);
  IndexSet alpha = parse_alpha(alpha_text, doc.a.n());
  auto m = ppt_transform(doc.a, alpha);
  if (!m) {
    std::cerr << "principal block is singular; the pivot is not legitimate\n";
    return kNoSolution;
  }
  for (int i = 0; i < m->n(); ++i) {
    RationalVector row;
    for (int j = 0; j < m->n(); ++j) row.push_back(m->at(i, j));
    std::cout << to_string(row) << "\n";
  }
  if (doc.q) {
    auto q = ppt_rhs(doc.a, *doc.q, alpha);
    std::cout << "q' = " << to_string(*q) << "\n";
  }
  return kOk;
}

int run_game(const std::string& input) {
  MatrixDocument doc = load(input);
  GameValue g = game_value(doc.a);
  std::cout << "v(A) = " << to_string(g.value) << "\n";
  std::cout << "row strategy = " << to_string(g.row_strategy) << "\n";
  std::cout << "column strategy = " << to_string(g.col_strategy) << "\n";
  return kOk;
}

int run_gen(bool structured, const std::string& cls, int n,
            std::uint64_t seed, const std::string& out_path) {
  RationalMatrix a;
  if (structured) {
    try {
      a = generate_structured(n, seed);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  } else {
    auto filter = class_filter_from_name(cls);
    if (!filter) throw InputError("--class: unknown class '" + cls + "'");
    GenerateOutcome out = generate_random(*filter, n, seed);
    if (!out.matrix) {
      std::cerr << "budget exhausted: no " << cls << " matrix in "
                << out.attempts << " draws\n";
      return kNoSolution;
    }
    a = *out.matrix;
  }
  MatrixDocument doc{a, std::nullopt};
  try {
    write_matrix_document(out_path, doc);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return kOk;
}

int run_repro(bool list_only) {
  if (list_only) {
    for (const ReproCheck& c : repro_checks()) std::cout << c.name << "\n";
    return kOk;
  }
  size_t width = 0;
  for (const ReproCheck& c : repro_checks())
    width = std::max(width, c.name.size());
  int failed = 0;
  for (const ReproCheck& c : repro_checks()) {
    ReproResult r = run_repro_check(c);
    std::cout << (r.pass ? "PASS " : "FAIL ") << std::left
              << std::setw(static_cast<int>(width)) << r.name;
    if (!r.pass) std::cout << "  " << r.message;
    std::cout << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << repro_checks().size() - failed << "/" << repro_checks().size()
            << " checks passed\n";
  return failed == 0 ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and floating-point toolkit for linear complementarity "
               "problems"};
  app.require_subcommand(1);

  std::string input, json_out, method = "lemke", z0_text, covering_text,
              trace, alpha_text, cls = "none", out_path;
  IpmParams ipm;
  bool structured = false, random = false, list_only = false;
  int n = 4;
  std::uint64_t seed = 1;

  CLI::App* classify = app.add_subcommand("classify", "matrix class report");
  classify->add_option("-i,--input", input, "matrix file")->required();
  classify->add_option("--json", json_out, "write the report as JSON here");

  CLI::App* solve = app.add_subcommand("solve", "solve LCP(q,A)");
  solve->add_option("-i,--input", input, "instance file with A and q")
      ->required();
  solve->add_option("--method", method, "lemke | ipm | enumerate")
      ->check(CLI::IsMember({"lemke", "ipm", "enumerate"}));
  solve->add_option("--beta", ipm.beta, "trust-ellipse radius");
  solve->add_option("--sigma", ipm.sigma, "Armijo slope fraction");
  solve->add_option("--eps", ipm.eps, "stop when z^T w <= eps");
  solve->add_option("--kappa-slack", ipm.kappa_slack,
                    "relative margin above the kappa lower bound");
  solve->add_option("--max-iter", ipm.max_iter, "iteration cap");
  solve->add_option("--max-halvings", ipm.max_halvings, "line-search cap");
  solve->add_option("--z0", z0_text, "start point, comma-separated");
  solve->add_option("--covering", covering_text,
                    "positive covering vector for lemke, comma-separated");
  solve->add_option("--trace", trace, "write the iteration trace CSV here");

  CLI::App* ppt = app.add_subcommand("ppt", "principal pivot transform");
  ppt->add_option("-i,--input", input, "matrix file")->required();
  ppt->add_option("--alpha", alpha_text, "pivot indices, 1-based, e.g. 1,3")
      ->required();

  CLI::App* game = app.add_subcommand("game", "value of the matrix game");
  game->add_option("-i,--input", input, "matrix file")->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a matrix file");
  gen->add_flag("--structured", structured,
                "bordered P0 construction (always E0s~)");
  gen->add_flag("--random", random, "rejection-sampled random matrix");
  gen->add_option("--class", cls, "acceptance filter for --random");
  gen->add_option("--n", n, "matrix order");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("-o,--output", out_path, "output file")->required();

  CLI::App* repro =
      app.add_subcommand("reproduce-paper", "run the reproduction suite");
  repro->add_flag("--list", list_only, "print check names without running");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (classify->parsed()) return run_classify(input, json_out);
    if (solve->parsed())
      return run_solve(input, method, ipm, z0_text, covering_text, trace);
    if (ppt->parsed()) return run_ppt(input, alpha_text);
    if (game->parsed()) return run_game(input);
    if (gen->parsed()) {
      if (structured == random)
        throw InputError("gen: pass exactly one of --structured, --random");
      return run_gen(structured, cls, n, seed, out_path);
    }
    if (repro->parsed()) return run_repro(list_only);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kInputError;
}
