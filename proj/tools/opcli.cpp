// opcli: command-line front end for the io(2) operator engine.
//
// Exit codes: 0 success, 1 verification/runtime failure, 2 bad command
// line, 3 operator parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "io2/algebra.hpp"
#include "io2/hermite.hpp"
#include "io2/parser.hpp"
#include "io2/rep.hpp"
#include "io2/transforms.hpp"
#include "io2/verify.hpp"

namespace {

using json = nlohmann::json;
using cplx = std::complex<double>;

json pair_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json coeffs_json(const std::vector<cplx>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(pair_json(z));
  return out;
}

std::string csv_num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<cplx> parse_coeff_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_array()) throw std::runtime_error("coeffs: expected a JSON array");
  std::vector<cplx> out;
  for (const auto& item : j) {
    if (item.is_number()) {
      out.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2) {
      out.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else {
      throw std::runtime_error("coeffs: entries must be numbers or [re, im]");
    }
  }
  return out;
}

struct CsvSamples {
  std::vector<double> xs;
  std::vector<cplx> values;
};

CsvSamples read_csv_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  CsvSamples out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() < 2)
      throw std::runtime_error("csv: expected columns x, re[, im]");
    try {
      const double x = std::stod(cells[0]);
      const double re = std::stod(cells[1]);
      const double im = cells.size() > 2 ? std::stod(cells[2]) : 0.0;
      out.xs.push_back(x);
      out.values.emplace_back(re, im);
    } catch (const std::exception&) {
      if (first) {
        first = false;
        continue;  // header row
      }
      throw std::runtime_error("csv: non-numeric row: " + line);
    }
    first = false;
  }
  return out;
}

// --fn csv:<path> or --fn coeffs:<json>
struct FnInput {
  bool is_csv = false;
  CsvSamples csv;
  std::vector<cplx> coeffs;
};

FnInput parse_fn(const std::string& spec) {
  FnInput out;
  if (spec.rfind("csv:", 0) == 0) {
    out.is_csv = true;
    out.csv = read_csv_samples(spec.substr(4));
    return out;
  }
  if (spec.rfind("coeffs:", 0) == 0) {
    out.coeffs = parse_coeff_json(spec.substr(7));
    return out;
  }
  throw std::runtime_error("--fn expects csv:<path> or coeffs:<json>");
}

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0, hi = 0;
  int count = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  if (!(is >> lo >> c1 >> hi >> c2 >> count) || c1 != ',' || c2 != ',' ||
      count < 1)
    throw std::runtime_error("--grid expects lo,hi,count");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  for (int k = 0; k < count; ++k)
    out.push_back(lo + (hi - lo) * k / (count - 1));
  return out;
}

io2::FrameParams parse_frame(const std::string& spec) {
  double x0 = 0, s = 1;
  char c = 0;
  std::istringstream is(spec);
  if (!(is >> x0 >> c >> s) || c != ',' || !(s > 0))
    throw std::runtime_error("--frame expects x0,s with s > 0");
  return {x0, s};
}

void emit_expr(const io2::UEAElement& e, const std::string& format) {
  if (format == "json") {
    std::cout << json{{"expr", io2::to_string(e)}}.dump() << "\n";
  } else {
    std::cout << io2::to_string(e) << "\n";
  }
}

void emit_vector(const std::vector<cplx>& v, const std::string& format) {
  if (format == "csv") {
    for (const auto& z : v)
      std::cout << csv_num(z.real()) << "," << csv_num(z.imag()) << "\n";
  } else {
    std::cout << coeffs_json(v).dump() << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Operator engine for the io(2) algebra on the line"};
  app.require_subcommand(1);

  // Expression commands default to the canonical text form; data commands
  // default to JSON.
  std::string format;
  app.add_option("--format", format, "Output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string expr_a, expr_b, fn_spec, grid_spec, frame_spec, suite = "all";
  int nmax = 32, quad = 0, dim = 8, un = 0;
  double tol = 1e-8, us = 1.0;
  bool momentum = false;

  auto* cmd_normal = app.add_subcommand("normal-order",
                                        "Canonical PBW form of an expression");
  cmd_normal->add_option("expr", expr_a)->required();

  auto* cmd_reduce = app.add_subcommand(
      "reduce", "Canonical form with every D power reduced below 2");
  cmd_reduce->add_option("expr", expr_a)->required();

  auto* cmd_comm = app.add_subcommand("commutator", "Canonical form of [A, B]");
  cmd_comm->add_option("exprA", expr_a)->required();
  cmd_comm->add_option("exprB", expr_b)->required();

  auto* cmd_tolad = app.add_subcommand("to-ladder",
                                       "Rewrite in the ad, N, a alphabet");
  cmd_tolad->add_option("expr", expr_a)->required();

  auto* cmd_fromlad = app.add_subcommand("from-ladder",
                                         "Rewrite in the X, D, N alphabet");
  cmd_fromlad->add_option("expr", expr_a)->required();

  auto* cmd_compile = app.add_subcommand(
      "compile", "Matrix of an operator on the first dim basis states");
  cmd_compile->add_option("expr", expr_a)->required();
  cmd_compile->add_option("--dim", dim, "Matrix dimension")->required();

  auto* cmd_apply =
      app.add_subcommand("apply", "Apply an operator to a coefficient vector");
  cmd_apply->add_option("expr", expr_a)->required();
  cmd_apply->add_option("--fn", fn_spec, "coeffs:<json>")->required();

  auto* cmd_transform = app.add_subcommand(
      "transform",
      "Samples -> coefficients (csv input) or coefficients -> profile "
      "(coeffs input with --grid)");
  cmd_transform->add_option("--fn", fn_spec, "csv:<path> or coeffs:<json>")
      ->required();
  cmd_transform->add_option("--nmax", nmax, "Coefficient count");
  cmd_transform->add_option("--quad", quad, "Quadrature size");
  cmd_transform->add_option("--grid", grid_spec, "lo,hi,count grid");
  cmd_transform->add_flag("--momentum", momentum, "Momentum-side profile");
  cmd_transform->add_option("--frame", frame_spec, "x0,s frame");

  auto* cmd_fourier = app.add_subcommand(
      "fourier-check", "Fourier-eigenvector residuals of psi_n");
  cmd_fourier->add_option("--nmax", nmax, "Highest n (inclusive)");
  cmd_fourier->add_option("--quad", quad, "Quadrature size");
  cmd_fourier->add_option("--grid", grid_spec, "lo,hi,count p grid");
  cmd_fourier->add_option("--tol", tol, "Failure threshold");

  auto* cmd_unc = app.add_subcommand("uncertainty",
                                     "Width product of psi[n, x0, s, .]");
  cmd_unc->add_option("--n", un, "Level")->required();
  cmd_unc->add_option("--s", us, "Scale")->required();

  auto* cmd_quad = app.add_subcommand("quad", "Gauss-Hermite nodes and weights");
  cmd_quad->add_option("M", quad, "Node count");
  cmd_quad->add_option("--quad", quad, "Node count");

  auto* cmd_verify = app.add_subcommand("verify", "Run the invariant suite");
  cmd_verify->add_option("--suite", suite,
                         "all, hermite, algebra, rep or transforms");

  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;     // unknown subcommand / bad command line
  }

  using io2::Basis;
  using io2::UEAElement;

  if (cmd_normal->parsed()) {
    emit_expr(io2::parse_element(expr_a, Basis::Differential), format);
    return 0;
  }
  if (cmd_reduce->parsed()) {
    emit_expr(io2::casimir_reduce(io2::parse_element(expr_a, Basis::Differential)),
              format);
    return 0;
  }
  if (cmd_comm->parsed()) {
    const UEAElement a = io2::parse_element(expr_a, Basis::Differential);
    const UEAElement b = io2::parse_element(expr_b, Basis::Differential);
    emit_expr(io2::commutator(a, b), format);
    return 0;
  }
  if (cmd_tolad->parsed()) {
    emit_expr(io2::to_ladder(io2::parse_element(expr_a, Basis::Differential)),
              format);
    return 0;
  }
  if (cmd_fromlad->parsed()) {
    emit_expr(io2::from_ladder(io2::parse_element(expr_a, Basis::Ladder)),
              format);
    return 0;
  }

  if (cmd_compile->parsed()) {
    const UEAElement a = io2::parse_element(expr_a, Basis::Differential);
    const io2::OperatorMatrix m = io2::compile(a, dim);
    if (format == "csv") {
      for (int r = 0; r < m.dim; ++r) {
        for (int c = 0; c < m.dim; ++c) {
          if (c) std::cout << ",";
          std::cout << csv_num(m.at(r, c).real()) << ","
                    << csv_num(m.at(r, c).imag());
        }
        std::cout << "\n";
      }
    } else {
      json entries = json::array();
      for (const auto& z : m.entries) entries.push_back(pair_json(z));
      std::cout << json{{"dim", m.dim}, {"entries", entries}}.dump() << "\n";
    }
    return 0;
  }

  if (cmd_apply->parsed()) {
    const UEAElement a = io2::parse_element(expr_a, Basis::Differential);
    const FnInput fn = parse_fn(fn_spec);
    if (fn.is_csv)
      throw std::runtime_error("apply acts on coefficient space; use coeffs:");
    io2::CoeffVector f;
    f.coeffs = fn.coeffs;
    emit_vector(io2::apply(a, f).coeffs, format);
    return 0;
  }

  if (cmd_transform->parsed()) {
    const FnInput fn = parse_fn(fn_spec);
    const bool framed = !frame_spec.empty();
    const io2::FrameParams frame =
        framed ? parse_frame(frame_spec) : io2::FrameParams{};
    if (fn.is_csv) {
      if (quad <= 0) quad = std::max(nmax + 8, 40);
      const io2::QuadratureRule rule = io2::gauss_hermite(quad);
      if (fn.csv.xs.size() != rule.size())
        throw std::runtime_error("csv: need one sample per quadrature node");
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const double want = frame.x0 + frame.s * rule.nodes[i];
        if (std::abs(fn.csv.xs[i] - want) > 1e-9 * (1.0 + std::abs(want)))
          throw std::runtime_error(
              "csv: sample abscissae must match the quadrature nodes");
      }
      io2::CoeffVector c =
          io2::analyze(io2::FunctionSpec::from_samples(fn.csv.values), nmax,
                       rule);
      // f_n against psi[n, x0, s, .]: u-substitution leaves a sqrt(s)
      for (auto& z : c.coeffs) z *= std::sqrt(frame.s);
      if (framed) c.frame = frame;
      emit_vector(c.coeffs, format);
      return 0;
    }
    if (grid_spec.empty())
      throw std::runtime_error("coefficient input needs --grid lo,hi,count");
    const std::vector<double> grid = parse_grid(grid_spec);
    io2::CoeffVector c;
    c.coeffs = fn.coeffs;
    std::vector<double> eval_at;
    eval_at.reserve(grid.size());
    for (double x : grid)
      eval_at.push_back(framed ? (x - frame.x0) / frame.s : x);
    std::vector<cplx> prof =
        momentum ? io2::synthesize_p(c, eval_at) : io2::synthesize_x(c, eval_at);
    if (framed)
      for (auto& z : prof) z /= std::sqrt(frame.s);
    if (format == "csv") {
      for (std::size_t k = 0; k < grid.size(); ++k)
        std::cout << csv_num(grid[k]) << "," << csv_num(prof[k].real()) << ","
                  << csv_num(prof[k].imag()) << "\n";
    } else {
      std::cout << json{{"x", grid}, {"fx", coeffs_json(prof)}}.dump() << "\n";
    }
    return 0;
  }

  if (cmd_fourier->parsed()) {
    if (quad <= 0) quad = 96;
    if (grid_spec.empty()) grid_spec = "-6,6,49";
    const std::vector<double> ps = parse_grid(grid_spec);
    const io2::QuadratureRule rule = io2::gauss_hermite(quad);
    double worst = 0.0;
    json per_n = json::array();
    for (int n = 0; n <= nmax; ++n) {
      const auto got = io2::fourier_num(
          io2::FunctionSpec::from_function(
              [n](double x) { return cplx{io2::eval_psi(n, x), 0.0}; }),
          rule, ps);
      cplx in{1.0, 0.0};
      for (int k = 0; k < n % 4; ++k) in *= cplx{0.0, 1.0};
      double err = 0.0;
      for (std::size_t k = 0; k < ps.size(); ++k)
        err = std::max(err, std::abs(got[k] - in * io2::eval_psi(n, ps[k])));
      worst = std::max(worst, err);
      per_n.push_back(err);
    }
    if (format == "csv") {
      for (std::size_t n = 0; n < per_n.size(); ++n)
        std::cout << n << "," << csv_num(per_n[n].get<double>()) << "\n";
    } else {
      std::cout << json{{"nmax", nmax},
                        {"quad", quad},
                        {"tol", tol},
                        {"max_err", worst},
                        {"per_n", per_n}}
                       .dump()
                << "\n";
    }
    return worst <= tol ? 0 : 1;
  }

  if (cmd_unc->parsed()) {
    const io2::Uncertainty u = io2::uncertainty_product(un, us);
    if (format == "csv") {
      std::cout << un << "," << csv_num(us) << "," << csv_num(u.dx) << ","
                << csv_num(u.dp) << "," << csv_num(u.product) << "\n";
    } else {
      std::cout << json{{"n", un},
                        {"s", us},
                        {"dx", u.dx},
                        {"dp", u.dp},
                        {"product", u.product}}
                       .dump()
                << "\n";
    }
    return 0;
  }

  if (cmd_quad->parsed()) {
    if (quad <= 0) throw std::runtime_error("quad: give a node count M >= 1");
    const io2::QuadratureRule rule = io2::gauss_hermite(quad);
    if (format == "csv") {
      for (std::size_t i = 0; i < rule.size(); ++i)
        std::cout << csv_num(rule.nodes[i]) << ","
                  << csv_num(rule.mod_weights[i]) << "\n";
    } else {
      std::cout << json{{"m", quad},
                        {"nodes", rule.nodes},
                        {"weights", rule.mod_weights}}
                       .dump()
                << "\n";
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    const auto results = io2::verify::run_suite(suite);
    bool all_pass = true;
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  "
                << r.detail << "\n";
      all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "OK" : "FAILED") << "  " << results.size()
              << " checks\n";
    return all_pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const io2::ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
