#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <regex>
#include <stdexcept>
#include <variant>

#include "biforms/binary_ops.hpp"
#include "biforms/curves.hpp"
#include "biforms/parse.hpp"
#include "biforms/transvectant.hpp"
#include "biforms/verify.hpp"

namespace biforms::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using AnyForm = std::variant<BinaryForm, BiForm>;

bool mentions_pairs(const std::string& text) { return std::regex_search(text, std::regex("[XY][12]")); }

AnyForm parse_any(const std::string& text) {
  try {
    if (mentions_pairs(text)) return BiForm::parse(text);
    return BinaryForm::parse(text);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse '" + text + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError("'" + text + "' is not a form: " + e.what());
  }
}

BiForm parse_biform(const std::string& text) {
  // Plain [X, Y] input is read as a form in the second pair.
  const AnyForm f = parse_any(text);
  if (const auto* bi = std::get_if<BiForm>(&f)) return *bi;
  return from_second_factor(std::get<BinaryForm>(f));
}

struct VerifyOptions {
  std::optional<std::string> check;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::optional<std::string> out_path;
  bool timing = false;
};

int run_verify(const VerifyOptions& opts, const Fixtures& fixtures, std::ostream& out) {
  const Format format = parse_format(opts.format);
  Report report;
  if (opts.check) {
    report = Report{std::string(toolkit_version()), opts.seed, {run_check(*opts.check, opts.seed, fixtures)}};
  } else {
    report = run_all(opts.seed, fixtures);
  }
  const std::string text = emit(report, format, opts.timing);
  if (opts.out_path) {
    std::ofstream file(*opts.out_path);
    if (!file) throw UsageError("cannot write " + *opts.out_path);
    file << text;
  } else {
    out << text;
  }
  const bool all_pass = report.count(Status::Pass) == static_cast<int>(report.checks.size());
  return all_pass ? kOk : kCheckFailed;
}

struct TransvectOptions {
  std::string lhs, rhs;
  int r = 0;
  std::optional<int> s;
};

int run_transvect(const TransvectOptions& opts, std::ostream& out) {
  const AnyForm lhs = parse_any(opts.lhs);
  const AnyForm rhs = parse_any(opts.rhs);
  const bool binary = std::holds_alternative<BinaryForm>(lhs) && std::holds_alternative<BinaryForm>(rhs);
  try {
    if (binary && !opts.s) {
      out << to_string(transvectant(std::get<BinaryForm>(lhs), std::get<BinaryForm>(rhs), opts.r).poly()) << "\n";
    } else {
      const BiForm f = parse_biform(opts.lhs);
      const BiForm g = parse_biform(opts.rhs);
      out << to_string(bitransvectant(f, g, opts.r, opts.s.value_or(0)).poly()) << "\n";
    }
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

struct KernelOptions {
  std::string form;
  int r = 0, s = 0;
  std::vector<int> source;
};

int run_kernel(const KernelOptions& opts, std::ostream& out) {
  if (opts.source.size() != 2 || opts.source[0] < 0 || opts.source[1] < 0) {
    throw UsageError("--source expects two non-negative degrees A,B");
  }
  const BiForm f = parse_biform(opts.form);
  QMat m;
  try {
    m = transvectant_matrix(f, opts.r, opts.s, opts.source[0], opts.source[1]);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  const Subspace kernel = kernel_basis(m);
  out << "source: V_{" << opts.source[0] << "," << opts.source[1] << "} (dim " << m.cols() << ")\n";
  out << "target dim: " << m.rows() << "\n";
  out << "rank: " << rank(m) << "\n";
  out << "kernel dim: " << kernel.dim() << "\n";
  for (std::size_t k = 0; k < kernel.dim(); ++k) {
    const BiForm g = BiForm::from_coefficients(opts.source[0], opts.source[1], kernel.basis_vector(k));
    out << to_string(g.poly()) << "\n";
  }
  return kOk;
}

struct CurveOptions {
  std::string form;
  bool branch = false, span = false, degree = false;
  std::uint64_t seed = 1;
};

int run_curve(const CurveOptions& opts, std::ostream& out) {
  if (opts.branch + opts.span + opts.degree != 1) {
    throw UsageError("curve needs exactly one of --branch, --span, --degree");
  }
  const BiForm f = parse_biform(opts.form);
  if (f.is_zero()) throw UsageError("curve needs a nonzero form");
  if (opts.branch) {
    if (f.a() < 1 || f.b() < 1) throw UsageError("--branch needs bidegree (a, b) with a, b >= 1");
    const BranchForm br = branch_form(f);
    if (br.degenerate) {
      out << "degenerate: resultant vanishes identically\n";
      return kOk;
    }
    out << to_string(from_first_factor(br.form).poly()) << "\n";
    out << "degree: " << br.form.degree() << "\n";
    out << "squarefree: " << (is_squarefree(br.form) ? "yes" : "no") << "\n";
  } else if (opts.span) {
    out << span_dim(phi_components(f)) << "\n";
  } else {
    out << hyperplane_degree(phi_components(f), opts.seed) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Fixtures& fixtures) {
  CLI::App app{"Exact computations with binary forms, biforms and transvectants", "biforms"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification registry");
  verify_cmd->add_option("--check", verify.check, "Run a single check (C01..C14)");
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed")->capture_default_str();
  verify_cmd->add_option("--format", verify.format, "json or md")->capture_default_str();
  verify_cmd->add_option("--out", verify.out_path, "Write the report to a file");
  verify_cmd->add_flag("--timing", verify.timing, "Record wall-clock milliseconds per check");

  TransvectOptions transvect;
  auto* transvect_cmd = app.add_subcommand("transvect", "Transvectant of two forms");
  transvect_cmd->add_option("--lhs", transvect.lhs, "First form")->required();
  transvect_cmd->add_option("--rhs", transvect.rhs, "Second form")->required();
  transvect_cmd->add_option("--r", transvect.r, "Order in the first pair")->required();
  transvect_cmd->add_option("--s", transvect.s, "Order in the second pair (biforms)");

  KernelOptions kernel;
  auto* kernel_cmd = app.add_subcommand("kernel", "Kernel of G -> T^(r,s)(F, G)");
  kernel_cmd->add_option("--form", kernel.form, "The fixed form F")->required();
  kernel_cmd->add_option("--r", kernel.r)->required();
  kernel_cmd->add_option("--s", kernel.s)->required();
  kernel_cmd->add_option("--source", kernel.source, "Source bidegree A,B")->required()->delimiter(',');

  CurveOptions curve;
  auto* curve_cmd = app.add_subcommand("curve", "Geometry of the curve of a biform");
  curve_cmd->add_option("--form", curve.form, "The biform")->required();
  curve_cmd->add_flag("--branch", curve.branch, "Branch form of the first projection");
  curve_cmd->add_flag("--span", curve.span, "Projective dimension of the linear span");
  curve_cmd->add_flag("--degree", curve.degree, "Degree measured by a random hyperplane");
  curve_cmd->add_option("--seed", curve.seed, "Seed for the hyperplane")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(verify, fixtures, out);
    if (transvect_cmd->parsed()) return run_transvect(transvect, out);
    if (kernel_cmd->parsed()) return run_kernel(kernel, out);
    return run_curve(curve, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace biforms::cli
