#include "hankel/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hankel/associated.hpp"
#include "hankel/errors.hpp"
#include "hankel/io.hpp"
#include "hankel/plane.hpp"
#include "hankel/spectra.hpp"
#include "hankel/tensor.hpp"
#include "hankel/vandermonde.hpp"

namespace hankel::cli {

namespace {

using io::json;

struct Globals {
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  int digits = 17;
};

std::vector<int> parse_ints(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  for (double v : parse_vector(text, flag)) {
    if (v != std::floor(v)) throw InputError("flag '" + flag + "': expected integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

HankelTensor load_tensor(const std::string& path) {
  return io::tensor_from_json(io::read_file(path));
}

// Accepts either a plane tensor file or a Hankel tensor file (whose
// associated plane tensor is used).
PlaneTensor load_plane(const std::string& path) {
  const json j = io::read_file(path);
  if (j.is_object() && j.contains("order")) return assoc_plane(io::tensor_from_json(j));
  return io::plane_from_json(j);
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string fmt(double v) { return io::format_number(v, 10); }

}  // namespace

bool ExampleReport::all_passed() const {
  for (const auto& item : items) {
    if (!item.passed) return false;
  }
  return true;
}

std::vector<double> parse_vector(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("flag '" + flag + "': empty value");
    token = token.substr(first, last - first + 1);
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v)) {
      throw InputError("flag '" + flag + "': '" + token + "' is not a finite number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InputError("flag '" + flag + "': empty value");
  return out;
}

ExampleReport worked_examples() {
  ExampleReport report;
  const HankelTensor a = make_hankel(4, 2, {1.0, 0.0, -1.0 / 6.0, 0.0, 1.0});
  const HankelTensor b = make_hankel(4, 2, {0.0, 0.0, 1.0, 0.0, 0.0});

  {
    const PlaneExtremes ext = z_extremes(assoc_plane(a));
    const StrongCertificate cert = is_strong(a);
    const bool ok = close(ext.lambda_min, 0.25, 1e-6) && !cert.is_strong;
    report.items.push_back({"(1) A is PSD but not strong", ok,
                            "lambda_min(A) = " + fmt(ext.lambda_min) + ", strong = " +
                                (cert.is_strong ? "true" : "false") +
                                ", matrix min eigenvalue = " + fmt(cert.min_eigenvalue)});
  }
  {
    bool form_ok = true;
    for (const auto& x : {std::vector<double>{1.0, 1.0}, std::vector<double>{0.3, -2.0},
                          std::vector<double>{-1.5, 0.7}}) {
      const double expected = 6.0 * x[0] * x[0] * x[1] * x[1];
      form_ok = form_ok && close(eval_form(b, x), expected, 1e-12 * (1.0 + std::abs(expected)));
    }
    const std::vector<double> ev = eigenvalues(assoc_matrix(b));
    const bool spectrum_ok = ev.size() == 3 && close(ev[0], -1.0, 1e-10) &&
                             close(ev[1], 1.0, 1e-10) && close(ev[2], 1.0, 1e-10);
    report.items.push_back({"(2) B x^4 = 6 x1^2 x2^2; matrix spectrum {-1, 1, 1}",
                            form_ok && spectrum_ok,
                            "eigenvalues = {" + fmt(ev[0]) + ", " + fmt(ev[1]) + ", " +
                                fmt(ev[2]) + "}"});
    if (!is_strong(b).is_strong) {
      report.discrepancies.push_back(
          "paper claim not reproduced: B (gen = [0,0,1,0,0]) is claimed strong, but its "
          "associated Hankel matrix has eigenvalue " + fmt(ev[0]));
    }
  }
  {
    const HankelTensor ab = hadamard(a, b);
    const PlaneExtremes ext = z_extremes(assoc_plane(ab));
    const bool ok = close(ext.lambda_min, -0.25, 1e-6);
    report.items.push_back({"(3) A o B is not PSD", ok,
                            "lambda_min(A o B) = " + fmt(ext.lambda_min)});
  }
  {
    const ZBounds p6 = bounds_prop6(a);
    const ZBounds p7 = bounds_prop7(a);
    const PlaneExtremes ext = z_extremes(assoc_plane(a));
    const bool ok = p6.upper_for_min && p6.lower_for_max && p7.upper_for_min &&
                    p7.lower_for_max && ext.lambda_min <= *p6.upper_for_min + 1e-12 &&
                    ext.lambda_max >= *p6.lower_for_max - 1e-12 &&
                    ext.lambda_min <= *p7.upper_for_min + 1e-12 &&
                    ext.lambda_max >= *p7.lower_for_max - 1e-12;
    report.items.push_back(
        {"(4) eigenvalue bounds on A", ok,
         "diagonal bounds (" + fmt(p6.upper_for_min.value_or(NAN)) + ", " +
             fmt(p6.lower_for_max.value_or(NAN)) + "), plane bounds (" +
             fmt(p7.upper_for_min.value_or(NAN)) + ", " + fmt(p7.lower_for_max.value_or(NAN)) +
             "), lambda in [" + fmt(ext.lambda_min) + ", " + fmt(ext.lambda_max) + "]"});
  }
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hankel tensor toolkit", "hankel"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "Tolerance override")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("--digits", g.digits, "Significant digits in output")
      ->check(CLI::Range(1, 17));

  std::string file;
  std::string file2;
  std::string vec_text;
  std::string idx_text;
  std::string nodes_text;
  std::string output;
  std::string mode = "max";
  std::string source = "all";
  int order = 0;
  int dim = 0;
  int degree = 0;
  int restarts = 20;
  int iters = 500;
  int depth = 64;
  std::optional<double> completion;

  auto* build = app.add_subcommand("build", "Write a tensor file from a generating vector");
  build->add_option("--order", order)->required();
  build->add_option("--dim", dim)->required();
  build->add_option("--gen", vec_text, "Comma-separated generating vector")->required();
  build->add_option("-o,--output", output, "Also write the tensor to this file");

  auto* entry_cmd = app.add_subcommand("entry", "Entry at a 1-based multi-index");
  entry_cmd->add_option("tensor", file)->required();
  entry_cmd->add_option("--idx", idx_text)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate A x^m");
  eval->add_option("tensor", file)->required();
  eval->add_option("--x", vec_text)->required();

  auto* matrix = app.add_subcommand("assoc-matrix", "Associated Hankel matrix");
  matrix->add_option("tensor", file)->required();
  matrix->add_option("--completion", completion, "Corner value when (n-1)m is odd");

  auto* strong = app.add_subcommand("is-strong", "Strong Hankel certificate (exit 1 if not)");
  strong->add_option("tensor", file)->required();

  auto* plane = app.add_subcommand("plane", "Associated plane tensor");
  plane->add_option("tensor", file)->required();

  auto* copos = app.add_subcommand("copositive-plane",
                                   "Plane tensor copositivity (exit 1 if not copositive)");
  copos->add_option("file", file, "Plane tensor or Hankel tensor file");
  copos->add_option("--degree", degree);
  copos->add_option("--p", vec_text, "Comma-separated p_0..p_l");

  auto* decomp = app.add_subcommand("decompose", "Vandermonde decomposition");
  decomp->add_option("tensor", file)->required();
  decomp->add_option("--nodes", nodes_text, "Comma-separated distinct nodes");

  auto* comp = app.add_subcommand("compose", "Tensor from a decomposition file");
  comp->add_option("decomposition", file)->required();
  comp->add_option("--order", order)->required();
  comp->add_option("--dim", dim)->required();

  auto* measure = app.add_subcommand("from-measure", "Moment tensor of a discrete measure");
  measure->add_option("measure", file)->required();
  measure->add_option("--order", order)->required();
  measure->add_option("--dim", dim)->required();

  auto* had = app.add_subcommand("hadamard", "Hadamard product of two tensors");
  had->add_option("a", file)->required();
  had->add_option("b", file2)->required();

  auto* zeig = app.add_subcommand("zeig", "Extreme Z-eigenpair estimate");
  zeig->add_option("tensor", file)->required();
  zeig->add_option("--mode", mode)->check(CLI::IsMember({"min", "max"}));
  zeig->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  zeig->add_option("--iters", iters)->check(CLI::PositiveNumber);

  auto* heig = app.add_subcommand("heig2", "H-eigenpairs of a dimension-2 tensor");
  heig->add_option("tensor", file)->required();

  auto* bounds = app.add_subcommand("bounds", "Bounds on the extreme Z-eigenvalues");
  bounds->add_option("tensor", file)->required();
  bounds->add_option("--source", source)->check(CLI::IsMember({"prop6", "prop7", "all"}));

  auto* falsify = app.add_subcommand("falsify",
                                     "Search for a copositivity violation (exit 1 if found)");
  falsify->add_option("tensor", file)->required();
  falsify->add_option("--depth", depth)->check(CLI::PositiveNumber);

  auto* examples = app.add_subcommand("paper-examples", "Rerun the worked examples");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  auto emit = [&](const json& j) { out << io::dump(j, g.digits) << "\n"; };

  try {
    if (build->parsed()) {
      const HankelTensor a = make_hankel(order, dim, parse_vector(vec_text, "--gen"));
      const std::string text = io::dump(io::to_json(a), 17);
      if (!output.empty()) {
        std::ofstream f(output);
        if (!f) throw InputError("cannot write '" + output + "'");
        f << text << "\n";
      }
      emit(io::to_json(a));
    } else if (entry_cmd->parsed()) {
      const std::vector<int> idx = parse_ints(idx_text, "--idx");
      out << io::format_number(entry(load_tensor(file), idx), g.digits) << "\n";
    } else if (eval->parsed()) {
      out << io::format_number(eval_form(load_tensor(file), parse_vector(vec_text, "--x")),
                               g.digits)
          << "\n";
    } else if (matrix->parsed()) {
      emit(io::to_json(assoc_matrix(load_tensor(file), completion)));
    } else if (strong->parsed()) {
      const StrongCertificate cert = is_strong(load_tensor(file), g.tol);
      emit(io::to_json(cert));
      return cert.is_strong ? kExitOk : kExitNegative;
    } else if (plane->parsed()) {
      emit(io::to_json(assoc_plane(load_tensor(file))));
    } else if (copos->parsed()) {
      std::optional<PlaneTensor> p;
      if (!file.empty()) {
        p = load_plane(file);
      } else if (!vec_text.empty() && degree > 0) {
        p = PlaneTensor(degree, parse_vector(vec_text, "--p"));
      } else {
        err << "error: copositive-plane needs a file or --degree with --p\n";
        return kExitUsage;
      }
      const CopositivityReport r = copositive_check(*p, g.tol);
      emit(io::to_json(r));
      return r.is_copositive ? kExitOk : kExitNegative;
    } else if (decomp->parsed()) {
      std::optional<std::vector<double>> nodes;
      if (!nodes_text.empty()) nodes = parse_vector(nodes_text, "--nodes");
      emit(io::to_json(decompose(load_tensor(file), std::move(nodes))));
    } else if (comp->parsed()) {
      emit(io::to_json(compose(io::decomposition_from_json(io::read_file(file)), order, dim)));
    } else if (measure->parsed()) {
      emit(io::to_json(from_measure(io::measure_from_json(io::read_file(file)), order, dim)));
    } else if (had->parsed()) {
      emit(io::to_json(hadamard(load_tensor(file), load_tensor(file2))));
    } else if (zeig->parsed()) {
      const ZeigOptions opts{restarts, iters, g.seed};
      emit(io::to_json(
          zeig_extreme(load_tensor(file), mode == "min" ? Extreme::Min : Extreme::Max, opts)));
    } else if (heig->parsed()) {
      json arr = json::array();
      for (const auto& pair : heig_dim2(load_tensor(file))) arr.push_back(io::to_json(pair));
      emit(arr);
    } else if (bounds->parsed()) {
      const HankelTensor a = load_tensor(file);
      json arr = json::array();
      if (source != "prop7") arr.push_back(io::to_json(bounds_prop6(a)));
      if (source == "prop7" || (source == "all" && a.degree() % 2 == 0)) {
        arr.push_back(io::to_json(bounds_prop7(a)));
      }
      emit(arr);
    } else if (falsify->parsed()) {
      const HankelTensor a = load_tensor(file);
      const auto witness = copositive_falsify(a, depth);
      json j = {{"witness", witness ? json(*witness) : json(nullptr)},
                {"value", witness ? json(eval_form(a, *witness)) : json(nullptr)}};
      emit(j);
      return witness ? kExitNegative : kExitOk;
    } else if (examples->parsed()) {
      const ExampleReport report = worked_examples();
      for (const auto& item : report.items) {
        out << (item.passed ? "PASS  " : "FAIL  ") << item.name << "\n      " << item.detail
            << "\n";
      }
      for (const auto& d : report.discrepancies) out << "NOTE  " << d << "\n";
      return report.all_passed() ? kExitOk : kExitNegative;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace hankel::cli
