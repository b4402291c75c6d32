#include "confed/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace confed {

double SplitMix64::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

namespace {

bool in_pattern(HStructure pattern, int n, int i, int j) {
  switch (pattern) {
    case HStructure::SymmetricTridiagonal: return std::abs(i - j) <= 1;
    case HStructure::Hessenberg: return i <= j + 1;
    case HStructure::UnitaryPlusRankOne: return i == j + 1 || (i == 0 && j == n - 1);
  }
  return true;
}

void rescale(std::vector<double>& v, double target) {
  const double nrm = norm2(v);
  if (target == 0.0 || nrm == 0.0) {
    std::fill(v.begin(), v.end(), 0.0);
    return;
  }
  for (double& x : v) x *= target / nrm;
}

}  // namespace

Perturbation random_perturbation(SplitMix64& rng, int n, double epsH, double eps1, double epsC,
                                 PerturbStructure structure, HStructure pattern) {
  if (n < 1) throw std::invalid_argument("random_perturbation: n must be positive");
  if (epsH < 0.0 || eps1 < 0.0 || epsC < 0.0) throw std::invalid_argument("random_perturbation: negative norm");
  Perturbation p;
  p.deltaH = Matrix<double>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.deltaH(i, j) = rng.normal();
  p.deltaU.resize(static_cast<std::size_t>(n));
  p.deltaW.resize(static_cast<std::size_t>(n));
  for (auto& x : p.deltaU) x = rng.normal();
  for (auto& x : p.deltaW) x = rng.normal();

  if (structure == PerturbStructure::Symmetric) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double s = 0.5 * (p.deltaH(i, j) + p.deltaH(j, i));
        p.deltaH(i, j) = s;
        p.deltaH(j, i) = s;
      }
  } else if (structure == PerturbStructure::MatchH) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!in_pattern(pattern, n, i, j)) p.deltaH(i, j) = 0.0;
    if (pattern == HStructure::SymmetricTridiagonal)
      for (int i = 0; i + 1 < n; ++i) p.deltaH(i + 1, i) = p.deltaH(i, i + 1);
  }

  const double hn = spectral_norm(p.deltaH);
  if (epsH == 0.0 || hn == 0.0) {
    p.deltaH = Matrix<double>(n, n);
  } else {
    const double s = epsH / hn;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p.deltaH(i, j) *= s;
  }
  rescale(p.deltaU, eps1);
  rescale(p.deltaW, epsC);
  p.epsH = epsH;
  p.eps1 = eps1;
  p.epsC = epsC;
  return p;
}

Matrix<DoubleDouble> assemble_extended(const ConfederateParts& parts) {
  const std::size_t n = parts.H.rows();
  Matrix<DoubleDouble> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = DoubleDouble(parts.H(i, j)) + DoubleDouble(parts.u[i]) * DoubleDouble(parts.w[j]);
  return m;
}

Matrix<DoubleDouble> apply(const ConfederateParts& parts, const Perturbation& pert) {
  const std::size_t n = parts.H.rows();
  if (pert.deltaH.rows() != n || pert.deltaU.size() != n || pert.deltaW.size() != n)
    throw std::invalid_argument("apply: perturbation dimension mismatch");
  Matrix<DoubleDouble> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const DoubleDouble ui = DoubleDouble(parts.u[i]) + DoubleDouble(pert.deltaU[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const DoubleDouble wj = DoubleDouble(parts.w[j]) + DoubleDouble(pert.deltaW[j]);
      m(i, j) = DoubleDouble(parts.H(i, j)) + DoubleDouble(pert.deltaH(i, j)) + ui * wj;
    }
  }
  return m;
}

std::vector<double> random_unbalanced_poly(SplitMix64& rng, int n) {
  if (n < 2) throw std::invalid_argument("random_unbalanced_poly: n must be at least 2");
  std::vector<double> c(static_cast<std::size_t>(n));
  for (auto& x : c) {
    const double g = rng.normal();
    const double h = rng.normal();
    x = g * std::pow(3.0, 5.5 * h);
  }
  return c;
}

}  // namespace confed
