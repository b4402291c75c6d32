// Command-line front end: root finding, the Figure-1 style experiment and the bound audit.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "confed/basis.hpp"
#include "confed/eig.hpp"
#include "confed/harness.hpp"

namespace {

int cmd_roots(const std::string& basis, const std::string& file) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "confed: cannot open '" << file << "'\n";
    return 2;
  }
  const auto c = confed::read_coefficients(in);
  const auto spec = confed::parse_basis(basis, static_cast<int>(c.size()));
  if (spec.kind == confed::BasisKind::Jacobi && !spec.coefficient_bound_applies)
    std::cerr << "confed: warning: Jacobi coefficient estimate assumes alpha, beta >= 1/2\n";
  const auto res = confed::roots_of_poly(spec, c);
  if (!res.converged) {
    std::cerr << "confed: eigensolver did not converge\n";
    return 1;
  }
  for (const auto& z : res.values) std::printf("%.17g %.17g\n", z.real(), z.imag());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Confederate linearizations and structured backward error"};
  app.require_subcommand(1);

  std::string roots_basis = "chebyshev", roots_file;
  auto* roots = app.add_subcommand("roots", "Roots of phi_n + c^T Phi, coefficients one per line (highest first)");
  roots->add_option("--basis", roots_basis, "monomial | monomial-shifted | chebyshev | jacobi:A:B");
  roots->add_option("file", roots_file, "Coefficient file")->required();

  auto* experiment = app.add_subcommand("experiment", "Perturbation experiments");
  experiment->require_subcommand(1);
  auto* fig1 = experiment->add_subcommand("figure1", "Unbalanced random polynomials, one perturbed part at a time");
  std::string config_file, out_dir, basis, target, structure;
  int trials = 0, degree = 0;
  std::uint64_t seed = 0;
  double eps = 0.0;
  bool serial = false;
  fig1->add_option("--config", config_file, "key=value configuration file");
  fig1->add_option("--out", out_dir, "Output directory");
  fig1->add_option("--trials", trials, "Trials per target")->check(CLI::PositiveNumber);
  fig1->add_option("--seed", seed, "Base seed; trial t uses seed xor t");
  fig1->add_option("--basis", basis, "Basis tag");
  fig1->add_option("--degree", degree, "Polynomial degree")->check(CLI::Range(2, 512));
  fig1->add_option("--eps", eps, "Perturbation norm (relative to ||H|| for H)")->check(CLI::NonNegativeNumber);
  fig1->add_option("--target", target, "H | e1 | c | all");
  fig1->add_option("--structure", structure, "dense | symmetric | matchH");
  fig1->add_flag("--serial", serial, "Run trials on one thread");

  auto* audit = app.add_subcommand("audit", "Check closed-form constants over a range of degrees");
  std::string audit_basis = "chebyshev", audit_out;
  int nmin = 4, nmax = 64;
  bool audit_serial = false;
  audit->add_option("--basis", audit_basis, "Basis tag");
  audit->add_option("--nmin", nmin, "Smallest degree (>= 4)");
  audit->add_option("--nmax", nmax, "Largest degree (<= 512)");
  audit->add_option("--out", audit_out, "Write audit.csv and audit_nodes.csv here (default: stdout summary only)");
  audit->add_flag("--serial", audit_serial, "Run on one thread");

  CLI11_PARSE(app, argc, argv);

  try {
    if (roots->parsed()) return cmd_roots(roots_basis, roots_file);

    if (fig1->parsed()) {
      confed::Config cfg = config_file.empty() ? confed::Config{} : confed::load_config(config_file);
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      if (fig1->count("--trials")) cfg.trials = trials;
      if (fig1->count("--seed")) cfg.seed = seed;
      if (fig1->count("--basis")) cfg.basis = basis;
      if (fig1->count("--degree")) cfg.degree = degree;
      if (fig1->count("--eps")) {
        cfg.eps = eps;
        cfg.eps_h.reset();
        cfg.eps_1.reset();
        cfg.eps_c.reset();
      }
      if (fig1->count("--target")) cfg.target = confed::parse_target(target);
      if (fig1->count("--structure")) cfg.structure = confed::parse_structure(structure);
      confed::parse_basis(cfg.basis, cfg.degree);
      const auto res = confed::run_figure1(cfg, serial ? confed::Execution::Serial : confed::Execution::OpenMP);
      int failed = 0, above = 0;
      for (const auto& r : res.records) {
        if (r.status != "ok") ++failed;
        else if (!(r.deltaPInf <= r.boundCorollary)) ++above;
      }
      std::printf("%zu trials, %d failed, %d above the closed-form bound\n", res.records.size(), failed, above);
      for (const auto& f : res.files) std::printf("wrote %s\n", f.c_str());
      return failed ? 1 : 0;
    }

    if (audit->parsed()) {
      const auto res =
          confed::run_audit(audit_basis, nmin, nmax, audit_serial ? confed::Execution::Serial : confed::Execution::OpenMP);
      if (!audit_out.empty()) {
        std::filesystem::create_directories(audit_out);
        std::ofstream a(std::filesystem::path(audit_out) / "audit.csv");
        std::ofstream b(std::filesystem::path(audit_out) / "audit_nodes.csv");
        if (!a || !b) throw confed::ConfigError("cannot write into '" + audit_out + "'");
        confed::write_audit_csv(a, res);
        confed::write_audit_nodes_csv(b, res);
      } else {
        confed::write_audit_csv(std::cout, res);
      }
      int bad = 0;
      for (const auto& r : res.rows)
        if (!r.ok) {
          ++bad;
          std::fprintf(stderr, "n=%d: %s\n", r.n, r.violations.c_str());
        }
      std::fprintf(stderr, "%zu degrees audited, %d with violations\n", res.rows.size(), bad);
      return bad ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "confed: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
