#pragma once

#include <vector>

namespace qvcz {

/// Gauss–Hermite rule for the weight exp(−x²) on (−∞, ∞).
/// Nodes are symmetric about zero; weights sum to sqrt(pi).
/// Exact for polynomial integrands of degree <= 2n−1.
struct GaussHermite {
  std::vector<double> x;
  std::vector<double> w;

  static const GaussHermite& rule(int n);
};

}  // namespace qvcz
