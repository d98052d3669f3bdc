#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bicomplex/io.hpp"
#include "bicomplex/verifier.hpp"

using namespace bicomplex;
using io::Json;

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

std::string run_calc(const std::vector<std::string>& args) {
  if (args.size() == 2 && args[1] == "inv") return io::format_scalar(inverse(io::parse_scalar(args[0]))) + '\n';
  if (args.size() == 2 && args[0] == "inv") return io::format_scalar(inverse(io::parse_scalar(args[1]))) + '\n';
  if (args.size() != 3) throw UsageError("calc expects 'A OP B' with OP in add|sub|mul|div, or 'inv A'");
  const auto x = io::parse_scalar(args[0]);
  const auto y = io::parse_scalar(args[2]);
  const auto& op = args[1];
  Bicomplexd r;
  if (op == "add" || op == "+") r = x + y;
  else if (op == "sub" || op == "-") r = x - y;
  else if (op == "mul" || op == "*") r = x * y;
  else if (op == "div" || op == "/") r = x * inverse(y);
  else throw UsageError("unknown operator '" + op + "'");
  return io::format_scalar(r) + '\n';
}

std::string run_decompose(const std::string& literal, double tol) {
  const auto w = io::parse_scalar(literal);
  const auto h = to_idempotent(w);
  const auto report = classify(w, tol);
  Json j = {{"scalar", io::to_json(w)},
            {"h1", Json::array({h.h1.real(), h.h1.imag()})},
            {"h2", Json::array({h.h2.real(), h.h2.imag()})},
            {"norm", norm(w)},
            {"singular", report.is_singular},
            {"report", io::to_json(report)}};
  return io::dump(j) + '\n';
}

std::string run_solve(const std::string& matrix_path, const std::string& rhs_path, double tol, const std::string& format) {
  const auto a = io::matrix_from_json(io::parse_json(io::read_file(matrix_path)));
  const auto b = io::load_vector(rhs_path);
  const auto x = solve(a, b, tol);
  if (format == "csv") return io::vector_to_csv(x);
  const double residual = vec_norm(vec_sub(apply(a, x), b));
  const double scale = vec_norm(b);
  Json j = {{"solution", io::to_json(x)},
            {"residual", residual},
            {"relative_residual", scale > 0 ? residual / scale : residual}};
  return io::dump(j) + '\n';
}

std::string run_norm(const std::string& matrix_path) {
  const auto a = io::matrix_from_json(io::parse_json(io::read_file(matrix_path)));
  Json j = io::to_json(op_norms(a));
  j["bound_constant"] = bound_constant(a);
  return io::dump(j) + '\n';
}

std::string run_extend(const std::string& submodule_path, const std::string& functional_path, const std::string& format) {
  const auto y = io::submodule_from_json(io::parse_json(io::read_file(submodule_path)));
  const auto ff = io::functional_from_json(io::parse_json(io::read_file(functional_path)));
  if (ff.n != y.ambient_dim()) throw DimensionMismatch(y.ambient_dim(), ff.n);
  ExtensionReport<double> report;
  if (ff.has_values) {
    report = hahn_banach_extend(ff.values, y);
  } else {
    TVectord c(ff.n);
    for (long k = 0; k < ff.n; ++k) c[k] = ff.coeffs[static_cast<std::size_t>(k)];
    report = hahn_banach_extend(TFunctionald{c}, y);
  }
  if (format == "csv") return io::vector_to_csv(report.extension.coeffs);
  return io::dump(io::to_json(report)) + '\n';
}

std::string csv_line(const verify::CheckReport& r, bool timing) {
  std::string line = r.check_id + ',' + (r.pass ? "pass" : "fail") + ',' + io::format_real(r.worst_value) + ',' +
                     io::format_real(r.bound) + ',' + std::to_string(r.trials_run) + ',' + std::to_string(r.seed);
  if (timing) line += ',' + io::format_real(r.elapsed);
  return line + '\n';
}

std::string run_verify(bool all, const std::string& check, std::uint64_t seed, long trials, double tol,
                       const std::string& format, bool timing, bool& all_pass) {
  if (all == !check.empty()) throw UsageError("verify needs exactly one of --all or --check ID");
  std::vector<verify::CheckReport> reports;
  if (all) {
    reports = verify::run_all(seed, trials, tol);
  } else {
    verify::CheckConfig cfg;
    cfg.check_id = check;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.tol = tol;
    reports.push_back(verify::run_check(cfg));
  }
  std::string out;
  if (format == "csv") out = std::string("check_id,pass,worst_value,bound,trials_run,seed") + (timing ? ",elapsed" : "") + '\n';
  all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    out += format == "csv" ? csv_line(r, timing) : io::dump(verify::to_json(r, timing)) + '\n';
  }
  return out;
}

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << io::dump(Json{{"error", kind}, {"message", message}}) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicomplex scalars, modules, operators and functionals"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";
  double tol = 1e-12;
  const auto positive = CLI::PositiveNumber;

  auto* calc = app.add_subcommand("calc", "Evaluate 'A OP B' (add, sub, mul, div) or 'inv A' on literals \"a b c d\"");
  std::vector<std::string> calc_args;
  calc->add_option("args", calc_args, "Operands and operator")->required();

  auto* decompose = app.add_subcommand("decompose", "Idempotent components and singularity report of a scalar");
  std::string literal;
  decompose->add_option("scalar", literal, "Scalar literal \"a b c d\"")->required();
  decompose->add_option("--tol", tol, "Singularity tolerance")->check(positive);

  auto* solve_cmd = app.add_subcommand("solve", "Solve A x = b");
  std::string matrix_path;
  std::string rhs_path;
  solve_cmd->add_option("matrix", matrix_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("rhs", rhs_path, "Right-hand side (.json or .csv)")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--tol", tol, "Reject components with condition number >= 1/tol")->check(positive);
  solve_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  solve_cmd->add_option("--out", out_path, "Write output to a file");

  auto* norm_cmd = app.add_subcommand("norm", "Operator norm report of a matrix");
  norm_cmd->add_option("matrix", matrix_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);
  norm_cmd->add_option("--out", out_path, "Write output to a file");

  auto* extend = app.add_subcommand("extend", "Extend a functional from a submodule to the whole module");
  std::string submodule_path;
  std::string functional_path;
  extend->add_option("submodule", submodule_path, "Submodule JSON file")->required()->check(CLI::ExistingFile);
  extend->add_option("functional", functional_path, "Functional JSON file")->required()->check(CLI::ExistingFile);
  extend->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  extend->add_option("--out", out_path, "Write output to a file");

  auto* verify_cmd = app.add_subcommand("verify", "Run randomized property checks");
  bool all = false;
  bool timing = false;
  std::string check;
  std::uint64_t seed = 42;
  long trials = 0;
  double verify_tol = 1e-10;
  verify_cmd->add_flag("--all", all, "Run every check");
  verify_cmd->add_option("--check", check, "Run one check by id");
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--trials", trials, "Trials per check (default: per-check count)")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", verify_tol, "Pass tolerance")->check(positive);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--out", out_path, "Write output to a file");
  verify_cmd->add_flag("--timing", timing, "Include elapsed seconds (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*calc) emit(run_calc(calc_args), out_path);
    if (*decompose) emit(run_decompose(literal, tol), out_path);
    if (*solve_cmd) emit(run_solve(matrix_path, rhs_path, tol, format), out_path);
    if (*norm_cmd) emit(run_norm(matrix_path), out_path);
    if (*extend) emit(run_extend(submodule_path, functional_path, format), out_path);
    if (*verify_cmd) {
      bool all_pass = true;
      emit(run_verify(all, check, seed, trials, verify_tol, format, timing, all_pass), out_path);
      return all_pass ? 0 : kDomainError;
    }
  } catch (const UsageError& e) {
    report_error("UsageError", e.what());
    return kUsageError;
  } catch (const ParseError& e) {
    report_error(e.kind(), e.what());
    return kUsageError;
  } catch (const UnknownCheckId& e) {
    report_error(e.kind(), e.what());
    return kUsageError;
  } catch (const Error& e) {
    report_error(e.kind(), e.what());
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    report_error("UsageError", e.what());
    return kUsageError;
  }
  return 0;
}
