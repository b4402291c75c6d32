#pragma once

#include <cstdint>
#include <vector>

#include "confed/dd.hpp"
#include "confed/linearize.hpp"
#include "confed/matrix.hpp"

namespace confed {

/// SplitMix64 with Box-Muller normals. Fixed so outputs reproduce across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on (0, 1).
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  double normal();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

enum class PerturbStructure { Dense, Symmetric, MatchH };

struct Perturbation {
  Matrix<double> deltaH;
  std::vector<double> deltaU;
  std::vector<double> deltaW;
  double epsH = 0.0;
  double eps1 = 0.0;
  double epsC = 0.0;
};

/// Always consumes n*n + 2n normals regardless of structure, so the streams
/// for different structures stay aligned.
Perturbation random_perturbation(SplitMix64& rng, int n, double epsH, double eps1, double epsC,
                                 PerturbStructure structure, HStructure pattern = HStructure::Hessenberg);

/// (H + dH) + (u + du)(w + dw)^T with the products formed in double-double.
Matrix<DoubleDouble> apply(const ConfederateParts& parts, const Perturbation& pert);
/// H + u w^T promoted to double-double.
Matrix<DoubleDouble> assemble_extended(const ConfederateParts& parts);

/// c_j = g_j * 3^(5.5 h_j) with g_j, h_j standard normal.
std::vector<double> random_unbalanced_poly(SplitMix64& rng, int n);

}  // namespace confed
