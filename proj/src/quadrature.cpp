#include "qvcz/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qvcz {

namespace {

// Newton iteration on the orthonormal Hermite recurrence (weight exp(-x^2)).
GaussHermite compute_rule(int n) {
  if (n < 1 || n > 256) {
    throw std::invalid_argument("gauss-hermite: node count out of range");
  }
  GaussHermite r;
  r.x.assign(n, 0.0);
  r.w.assign(n, 0.0);
  const double pim4 = 0.7511255444649425;  // pi^(-1/4)
  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) -
          1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * r.x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * r.x[1];
    } else {
      z = 2.0 * z - r.x[i - 2];
    }
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 -
             std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * (1.0 + std::abs(z))) {
        break;
      }
    }
    r.x[i] = z;
    r.x[n - 1 - i] = -z;
    r.w[i] = 2.0 / (pp * pp);
    r.w[n - 1 - i] = r.w[i];
  }
  if (n % 2 == 1) {
    r.x[n / 2] = 0.0;
  }
  return r;
}

}  // namespace

const GaussHermite& GaussHermite::rule(int n) {
  static std::mutex mu;
  static std::map<int, GaussHermite> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, compute_rule(n)).first;
  }
  return it->second;
}

}  // namespace qvcz
