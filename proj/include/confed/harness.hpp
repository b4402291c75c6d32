#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "confed/perturb.hpp"

namespace confed {

enum class Target { H, E1, C, All };
enum class Execution { Serial, OpenMP };

std::string target_name(Target t);
Target parse_target(const std::string& s);
PerturbStructure parse_structure(const std::string& s);
std::string structure_name(PerturbStructure s);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  int trials = 200;
  std::uint64_t seed = 42;
  int degree = 5;
  std::string basis = "chebyshev";
  double eps = 1e-6;  // used for any target without its own value
  std::optional<double> eps_h, eps_1, eps_c;
  Target target = Target::All;
  PerturbStructure structure = PerturbStructure::Dense;
  std::string out_dir = ".";

  /// eps_h is relative to ||H||_2; eps_1 and eps_c are absolute norms of the raw factors.
  [[nodiscard]] double eps_for(Target t) const;
};

/// key=value lines; '#' starts a comment. Unknown keys are rejected.
Config parse_config(std::istream& in);
Config load_config(const std::string& path);

/// CONFED_THREADS if set to a positive integer, else the OpenMP default.
int thread_count();

struct ExperimentRecord {
  std::uint64_t seed = 0;
  int trial = 0;
  std::string target;
  std::string basisTag;
  int n = 0;
  double normP2 = 0.0;  // coefficients of p including the leading 1, unscaled basis
  double normC2 = 0.0;  // non-leading coefficients, unscaled basis
  double epsH = 0.0, eps1 = 0.0, epsC = 0.0;
  double deltaPInf = 0.0, deltaP2 = 0.0;                  // working basis
  double deltaPInfUnscaled = 0.0, deltaP2Unscaled = 0.0;  // unscaled basis
  double boundCorollary = 0.0;   // chebyshev: corollary in the working basis; else basis closed form
  double boundCorollaryT = 0.0;  // chebyshev: corollary with chi = 2 against plain coefficients
  double boundAggregate = 0.0;
  double residual = 0.0;
  std::string status = "ok";
};

std::vector<ExperimentRecord> run_trials(const Config& cfg, Target target, Execution exec);
void write_records_csv(std::ostream& os, const std::vector<ExperimentRecord>& recs);
void write_scatter_svg(std::ostream& os, const std::vector<ExperimentRecord>& recs, const std::string& title);

struct Figure1Result {
  std::vector<ExperimentRecord> records;  // all targets, in target then trial order
  std::vector<std::string> files;
};

/// Runs the selected target (or all three) and writes figure1.csv plus one SVG per target.
Figure1Result run_figure1(const Config& cfg, Execution exec);

struct AuditRow {
  std::string basis;
  int n = 0;
  double maxM = 0.0, maxS = 0.0;
  double maxMOverN2 = 0.0, maxSOverN2 = 0.0;
  double lhatScaled = -1.0, lhatUnscaled = -1.0;  // -1 when not computed (n > 128)
  double mu = 0.0, muRatio = 0.0, Cn = 0.0;
  double etaM = 0.0, etaS = 0.0, etaD = 0.0;
  double closedFormS = 0.0;  // shifted monomial only
  bool ok = true;
  std::string violations;
};

struct AuditNodeRow {
  std::string basis;
  int n = 0;
  int node_index = 0;
  double M = 0.0, S = 0.0, gamma1 = 0.0, gammac = 0.0, gammaH = 0.0;
  double lhat = -1.0, aggregate = -1.0, closedForm = -1.0;
};

struct AuditResult {
  std::vector<AuditRow> rows;
  std::vector<AuditNodeRow> nodes;
  [[nodiscard]] bool ok() const;
};

/// 4 <= nmin <= nmax <= 512; L-hat is formed for n <= 128 only.
AuditResult run_audit(const std::string& basis, int nmin, int nmax, Execution exec);
void write_audit_csv(std::ostream& os, const AuditResult& res);
void write_audit_nodes_csv(std::ostream& os, const AuditResult& res);

/// One real per line, blank lines and '#' comments skipped.
std::vector<double> read_coefficients(std::istream& in);

/// Formats a double with %.17g.
std::string fmt17(double x);

}  // namespace confed
