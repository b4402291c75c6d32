#include "confed/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "confed/basis.hpp"
#include "confed/bounds.hpp"
#include "confed/eig.hpp"
#include "confed/linearize.hpp"
#include "confed/recover.hpp"

namespace confed {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError(what + ": not a number '" + v + "'");
  }
  if (used != v.size()) throw ConfigError(what + ": not a number '" + v + "'");
  return x;
}

long long parse_int(const std::string& v, const std::string& what) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    throw ConfigError(what + ": not an integer '" + v + "'");
  }
  if (used != v.size()) throw ConfigError(what + ": not an integer '" + v + "'");
  return x;
}

}  // namespace

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string target_name(Target t) {
  switch (t) {
    case Target::H: return "H";
    case Target::E1: return "e1";
    case Target::C: return "c";
    case Target::All: return "all";
  }
  return "?";
}

Target parse_target(const std::string& s) {
  if (s == "H") return Target::H;
  if (s == "e1") return Target::E1;
  if (s == "c") return Target::C;
  if (s == "all") return Target::All;
  throw ConfigError("target must be one of H, e1, c, all (got '" + s + "')");
}

PerturbStructure parse_structure(const std::string& s) {
  if (s == "dense") return PerturbStructure::Dense;
  if (s == "symmetric") return PerturbStructure::Symmetric;
  if (s == "matchH") return PerturbStructure::MatchH;
  throw ConfigError("structure must be one of dense, symmetric, matchH (got '" + s + "')");
}

std::string structure_name(PerturbStructure s) {
  switch (s) {
    case PerturbStructure::Dense: return "dense";
    case PerturbStructure::Symmetric: return "symmetric";
    case PerturbStructure::MatchH: return "matchH";
  }
  return "?";
}

double Config::eps_for(Target t) const {
  switch (t) {
    case Target::H: return eps_h.value_or(eps);
    case Target::E1: return eps_1.value_or(eps);
    case Target::C: return eps_c.value_or(eps);
    case Target::All: return eps;
  }
  return eps;
}

Config parse_config(std::istream& in) {
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "trials") {
      const auto v = parse_int(val, where);
      if (v < 1) throw ConfigError(where + ": trials must be positive");
      cfg.trials = static_cast<int>(v);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(val, where));
    } else if (key == "degree") {
      const auto v = parse_int(val, where);
      if (v < 2) throw ConfigError(where + ": degree must be at least 2");
      cfg.degree = static_cast<int>(v);
    } else if (key == "basis") {
      cfg.basis = val;
    } else if (key == "eps") {
      cfg.eps = parse_double(val, where);
    } else if (key == "eps_h") {
      cfg.eps_h = parse_double(val, where);
    } else if (key == "eps_1") {
      cfg.eps_1 = parse_double(val, where);
    } else if (key == "eps_c") {
      cfg.eps_c = parse_double(val, where);
    } else if (key == "perturb_target") {
      cfg.target = parse_target(val);
    } else if (key == "structure") {
      cfg.structure = parse_structure(val);
    } else if (key == "out_dir") {
      cfg.out_dir = val;
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  for (double e : {cfg.eps, cfg.eps_h.value_or(0.0), cfg.eps_1.value_or(0.0), cfg.eps_c.value_or(0.0)})
    if (!(e >= 0.0)) throw ConfigError("perturbation norms must be nonnegative");
  parse_basis(cfg.basis, cfg.degree);  // validate early
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

int thread_count() {
  if (const char* env = std::getenv("CONFED_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

namespace {

ExperimentRecord run_one(const Config& cfg, const BasisSpec& spec, Target target, int trial, double lhat) {
  ExperimentRecord r;
  r.seed = cfg.seed;
  r.trial = trial;
  r.target = target_name(target);
  r.basisTag = basis_tag(spec);
  r.n = spec.degree;
  try {
    SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
    const auto c = random_unbalanced_poly(rng, spec.degree);
    const ConfederateParts parts = build_working(spec, c);
    r.normC2 = norm2(c);
    r.normP2 = std::hypot(1.0, r.normC2);
    const double eps = cfg.eps_for(target);
    r.epsH = target == Target::H ? eps * spectral_norm(parts.H) : 0.0;
    r.eps1 = target == Target::E1 ? eps : 0.0;
    r.epsC = target == Target::C ? eps : 0.0;
    const Perturbation pert = random_perturbation(rng, spec.degree, r.epsH, r.eps1, r.epsC, cfg.structure, parts.structure);
    const DeltaP dp = backward_error(parts, pert);
    r.deltaPInf = dp.normInf;
    r.deltaP2 = dp.norm2;
    r.deltaPInfUnscaled = dp.unscaledInf;
    r.deltaP2Unscaled = dp.unscaled2;
    r.residual = dp.residual;
    const double wn = norm2(parts.w);
    if (spec.kind == BasisKind::Chebyshev1) {
      r.boundCorollary = bound_cheb_corollary(spec.degree, parts.chi_eff * wn, r.epsH, r.eps1, parts.chi_eff * r.epsC);
      r.boundCorollaryT = bound_cheb_corollary(spec.degree, spec.chi * wn, r.epsH, r.eps1, spec.chi * r.epsC);
    } else {
      r.boundCorollaryT = kNaN;
    }
    if (spec.kind == BasisKind::Monomial) {
      r.boundCorollary = kNaN;
      r.boundAggregate = kNaN;
    } else {
      const BoundReport rep = bound_structured(parts, r.epsH, r.eps1, r.epsC, lhat);
      r.boundAggregate = rep.aggregate;
      if (spec.kind != BasisKind::Chebyshev1) r.boundCorollary = rep.closedForm;
    }
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), ',', ';');
    r.status = "error: " + msg;
    r.deltaPInf = r.deltaP2 = r.deltaPInfUnscaled = r.deltaP2Unscaled = kNaN;
    r.boundCorollary = r.boundCorollaryT = r.boundAggregate = r.residual = kNaN;
  }
  return r;
}

}  // namespace

std::vector<ExperimentRecord> run_trials(const Config& cfg, Target target, Execution exec) {
  if (target == Target::All) throw std::invalid_argument("run_trials: pick a single target");
  const BasisSpec spec = parse_basis(cfg.basis, cfg.degree);
  double lhat = kNaN;
  if (spec.kind != BasisKind::Monomial) lhat = lagrange_inf_norm(build_working(spec, std::vector<double>(spec.degree, 0.0)));
  std::vector<ExperimentRecord> recs(static_cast<std::size_t>(cfg.trials));
  const int threads = exec == Execution::OpenMP ? thread_count() : 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (exec == Execution::OpenMP)
  for (int t = 0; t < cfg.trials; ++t) recs[t] = run_one(cfg, spec, target, t, lhat);
  return recs;
}

void write_records_csv(std::ostream& os, const std::vector<ExperimentRecord>& recs) {
  os << "seed,trial,target,basis,n,normP2,normC2,epsH,eps1,epsC,deltaPInf,deltaP2,deltaPInfUnscaled,"
        "deltaP2Unscaled,boundCorollary,boundCorollaryT,boundAggregate,residual,status\n";
  for (const auto& r : recs) {
    os << r.seed << ',' << r.trial << ',' << r.target << ',' << r.basisTag << ',' << r.n;
    for (double v : {r.normP2, r.normC2, r.epsH, r.eps1, r.epsC, r.deltaPInf, r.deltaP2, r.deltaPInfUnscaled,
                     r.deltaP2Unscaled, r.boundCorollary, r.boundCorollaryT, r.boundAggregate, r.residual})
      os << ',' << fmt17(v);
    os << ',' << r.status << '\n';
  }
}

namespace {

struct LogAxis {
  double lo, hi;  // decades
  double p0, p1;  // pixel range
  [[nodiscard]] double map(double v) const { return p0 + (std::log10(v) - lo) / (hi - lo) * (p1 - p0); }
};

LogAxis make_axis(double vmin, double vmax, double p0, double p1) {
  double lo = std::floor(std::log10(vmin));
  double hi = std::ceil(std::log10(vmax));
  if (hi <= lo) hi = lo + 1.0;
  return {lo, hi, p0, p1};
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void write_scatter_svg(std::ostream& os, const std::vector<ExperimentRecord>& recs, const std::string& title) {
  const double W = 640, Hh = 480, L = 80, R = 20, T = 40, B = 60;
  std::vector<const ExperimentRecord*> pts;
  for (const auto& r : recs)
    if (r.status == "ok" && r.normP2 > 0 && r.deltaPInf > 0 && std::isfinite(r.deltaPInf)) pts.push_back(&r);
  std::sort(pts.begin(), pts.end(), [](auto* a, auto* b) { return a->normP2 < b->normP2; });

  double xmin = 1, xmax = 10, ymin = 1e-12, ymax = 1;
  if (!pts.empty()) {
    xmin = ymin = std::numeric_limits<double>::infinity();
    xmax = ymax = 0;
    for (auto* p : pts) {
      xmin = std::min(xmin, p->normP2);
      xmax = std::max(xmax, p->normP2);
      ymin = std::min(ymin, p->deltaPInf);
      ymax = std::max(ymax, p->deltaPInf);
      if (std::isfinite(p->boundCorollary) && p->boundCorollary > 0) {
        ymin = std::min(ymin, p->boundCorollary);
        ymax = std::max(ymax, p->boundCorollary);
      }
    }
  }
  const LogAxis ax = make_axis(xmin, xmax, L, W - R);
  const LogAxis ay = make_axis(ymin, ymax, Hh - B, T);

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << Hh << "\" viewBox=\"0 0 " << W
     << ' ' << Hh << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << xml_escape(title)
     << "</text>\n";
  os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << Hh - T - B
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double d = ax.lo; d <= ax.hi + 1e-9; d += 1.0) {
    const double x = ax.map(std::pow(10.0, d));
    os << "<line x1=\"" << x << "\" y1=\"" << Hh - B << "\" x2=\"" << x << "\" y2=\"" << Hh - B + 5
       << "\" stroke=\"black\"/>";
    os << "<text x=\"" << x << "\" y=\"" << Hh - B + 20 << "\" text-anchor=\"middle\">1e" << static_cast<int>(d)
       << "</text>\n";
  }
  for (double d = ay.lo; d <= ay.hi + 1e-9; d += 1.0) {
    const double y = ay.map(std::pow(10.0, d));
    os << "<line x1=\"" << L - 5 << "\" y1=\"" << y << "\" x2=\"" << L << "\" y2=\"" << y << "\" stroke=\"black\"/>";
    os << "<text x=\"" << L - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e" << static_cast<int>(d)
       << "</text>\n";
  }
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << Hh - 15 << "\" text-anchor=\"middle\">||p||_2</text>\n";
  os << "<text x=\"18\" y=\"" << (T + Hh - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << (T + Hh - B) / 2 << ")\">||dp||_inf</text>\n";

  std::string line;
  for (auto* p : pts) {
    if (!std::isfinite(p->boundCorollary) || p->boundCorollary <= 0) continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", ax.map(p->normP2), ay.map(p->boundCorollary));
    line += buf;
  }
  if (!line.empty()) os << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"" << line << "\"/>\n";
  for (auto* p : pts) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2\" fill=\"#1f77b4\"/>\n", ax.map(p->normP2),
                  ay.map(p->deltaPInf));
    os << buf;
  }
  os << "<circle cx=\"" << L + 20 << "\" cy=\"" << T + 18 << "\" r=\"3\" fill=\"#1f77b4\"/>";
  os << "<text x=\"" << L + 30 << "\" y=\"" << T + 22 << "\">backward error</text>\n";
  os << "<line x1=\"" << L + 12 << "\" y1=\"" << T + 38 << "\" x2=\"" << L + 28 << "\" y2=\"" << T + 38
     << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>";
  os << "<text x=\"" << L + 30 << "\" y=\"" << T + 42 << "\">bound</text>\n";
  os << "</svg>\n";
}

Figure1Result run_figure1(const Config& cfg, Execution exec) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (!fs::is_directory(cfg.out_dir)) throw ConfigError("cannot create output directory '" + cfg.out_dir + "'");

  std::vector<Target> targets;
  if (cfg.target == Target::All)
    targets = {Target::H, Target::E1, Target::C};
  else
    targets = {cfg.target};

  Figure1Result res;
  for (Target t : targets) {
    auto recs = run_trials(cfg, t, exec);
    const std::string svg = (fs::path(cfg.out_dir) / ("figure1_" + target_name(t) + ".svg")).string();
    std::ofstream out(svg);
    if (!out) throw ConfigError("cannot write '" + svg + "'");
    std::ostringstream title;
    title.precision(3);
    const std::string what = t == Target::H ? "||dH|| = " : t == Target::E1 ? "||de1|| = " : "||dc|| = ";
    title << basis_tag(parse_basis(cfg.basis, cfg.degree)) << ", n = " << cfg.degree << ": " << what
          << cfg.eps_for(t) << (t == Target::H ? " ||H||" : "");
    write_scatter_svg(out, recs, title.str());
    res.files.push_back(svg);
    res.records.insert(res.records.end(), recs.begin(), recs.end());
  }
  const std::string csv = (fs::path(cfg.out_dir) / "figure1.csv").string();
  std::ofstream out(csv);
  if (!out) throw ConfigError("cannot write '" + csv + "'");
  write_records_csv(out, res.records);
  res.files.insert(res.files.begin(), csv);
  return res;
}

bool AuditResult::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.ok; });
}

namespace {

void add_violation(AuditRow& row, const std::string& what) {
  row.ok = false;
  if (!row.violations.empty()) row.violations += ';';
  row.violations += what;
}

void audit_one(const std::string& tag, int n, AuditRow& row, std::vector<AuditNodeRow>& nodes) {
  const BasisSpec spec = parse_basis(tag, n);
  if (spec.kind == BasisKind::Monomial)
    throw std::invalid_argument("audit: the plain monomial companion has non-normal H; use monomial-shifted");
  row.basis = basis_tag(spec);
  row.n = n;
  const double nn = n;
  const double n2 = nn * nn;
  const NodeSet ns = node_sets(spec);

  // Reference polynomial for the per-node table: all unscaled coefficients 1, unit perturbation norms.
  const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
  const ConfederateParts parts = build_working(spec, ones);
  const bool with_lhat = n <= 128;
  if (with_lhat) {
    row.lhatScaled = lagrange_inf_norm(parts);
    row.lhatUnscaled = lagrange_inf_norm(build_confederate(spec, ones));
  }
  const BoundReport rep = bound_structured(parts, 1.0, 1.0, 1.0, with_lhat ? row.lhatScaled : kNaN);
  for (std::size_t j = 0; j < rep.perNode.size(); ++j) {
    const auto& g = rep.perNode[j].gamma;
    row.maxM = std::max(row.maxM, g.M);
    row.maxS = std::max(row.maxS, g.S);
    AuditNodeRow nr;
    nr.basis = row.basis;
    nr.n = n;
    nr.node_index = static_cast<int>(j);
    nr.M = g.M;
    nr.S = g.S;
    nr.gamma1 = g.gamma1;
    nr.gammac = g.gammac;
    nr.gammaH = g.gammaH;
    nr.lhat = with_lhat ? row.lhatScaled : kNaN;
    nr.aggregate = with_lhat ? rep.aggregate : kNaN;
    nr.closedForm = rep.closedForm;
    nodes.push_back(nr);
  }
  row.maxMOverN2 = row.maxM / n2;
  row.maxSOverN2 = row.maxS / n2;
  row.etaM = row.maxM / n2;
  row.etaS = row.maxS / (n2 * nn);
  const auto dfirst = spec.d.empty() ? std::vector<double>{1.0} : std::vector<double>(spec.d.begin() + 1, spec.d.end());
  row.etaD = *std::max_element(dfirst.begin(), dfirst.end()) / *std::min_element(dfirst.begin(), dfirst.end());

  switch (spec.kind) {
    case BasisKind::Chebyshev1:
      row.mu = std::numbers::pi / nn;
      row.muRatio = 1.0;
      row.Cn = jacobi_cn(-0.5, -0.5, n, row.mu);
      if (!(row.maxM < 3.0 * n2)) add_violation(row, "M>=3n^2");
      if (!(row.maxS < 5.0 * n2)) add_violation(row, "S>=5n^2");
      if (with_lhat && !(row.lhatUnscaled <= 2.0 + 1e-9)) add_violation(row, "Lhat>2");
      if (with_lhat && !(row.lhatScaled <= 2.0 + 1e-9)) add_violation(row, "Lhat_scaled>2");
      break;
    case BasisKind::Jacobi: {
      const double a = spec.jacobi_alpha, b = spec.jacobi_beta;
      row.mu = jacobi_mu(a, b, n - 1);
      row.muRatio = row.mu * (nn + a + 0.5) / std::numbers::pi;
      try {
        row.Cn = jacobi_cn(a, b, n, row.mu);
      } catch (const OverflowError&) {
        row.Cn = std::numeric_limits<double>::infinity();
      }
      if (spec.coefficient_bound_applies && with_lhat && !(row.lhatUnscaled <= row.Cn))
        add_violation(row, "Lhat>C_n");
      break;
    }
    case BasisKind::MonomialShifted:
      row.closedFormS = (nn / 2.0) * std::log(nn / 2.0 + 0.5);
      if (!(row.maxM <= nn / 2.0)) add_violation(row, "M>n/2");
      if (!(row.maxS <= row.closedFormS)) add_violation(row, "S>(n/2)log(n/2+1/2)");
      break;
    case BasisKind::Monomial: break;
  }
}

}  // namespace

AuditResult run_audit(const std::string& basis, int nmin, int nmax, Execution exec) {
  if (nmin < 4 || nmax > 512 || nmin > nmax) throw ConfigError("audit range must satisfy 4 <= nmin <= nmax <= 512");
  parse_basis(basis, nmin);
  const int count = nmax - nmin + 1;
  std::vector<AuditRow> rows(static_cast<std::size_t>(count));
  std::vector<std::vector<AuditNodeRow>> nodes(static_cast<std::size_t>(count));
  std::vector<std::string> errors(static_cast<std::size_t>(count));
  const int threads = exec == Execution::OpenMP ? thread_count() : 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (exec == Execution::OpenMP)
  for (int i = 0; i < count; ++i) {
    // Largest degrees first so the dynamic schedule balances.
    const int k = count - 1 - i;
    try {
      audit_one(basis, nmin + k, rows[k], nodes[k]);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  AuditResult res;
  res.rows = std::move(rows);
  for (auto& v : nodes) res.nodes.insert(res.nodes.end(), v.begin(), v.end());
  return res;
}

void write_audit_csv(std::ostream& os, const AuditResult& res) {
  os << "basis,n,max_M,max_S,max_M_over_n2,max_S_over_n2,Lhat_norm,Lhat_norm_unscaled,mu,mu_ratio,C_n,eta_M,eta_S,"
        "eta_D,closed_form_S,ok,violations\n";
  for (const auto& r : res.rows) {
    os << r.basis << ',' << r.n;
    for (double v : {r.maxM, r.maxS, r.maxMOverN2, r.maxSOverN2, r.lhatScaled < 0 ? kNaN : r.lhatScaled,
                     r.lhatUnscaled < 0 ? kNaN : r.lhatUnscaled, r.mu, r.muRatio, r.Cn, r.etaM, r.etaS, r.etaD,
                     r.closedFormS})
      os << ',' << fmt17(v);
    os << ',' << (r.ok ? 1 : 0) << ',' << r.violations << '\n';
  }
}

void write_audit_nodes_csv(std::ostream& os, const AuditResult& res) {
  os << "basis,n,node_index,M,S,gamma1,gammac,gammaH,Lhat_norm,aggregate,closed_form\n";
  for (const auto& r : res.nodes) {
    os << r.basis << ',' << r.n << ',' << r.node_index;
    for (double v : {r.M, r.S, r.gamma1, r.gammac, r.gammaH, r.lhat, r.aggregate, r.closedForm})
      os << ',' << fmt17(v);
    os << '\n';
  }
}

std::vector<double> read_coefficients(std::istream& in) {
  std::vector<double> c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    c.push_back(parse_double(line, "line " + std::to_string(lineno)));
  }
  return c;
}

}  // namespace confed
