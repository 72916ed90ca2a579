#ifndef GELFAND_GAUSS_HPP
#define GELFAND_GAUSS_HPP

#include <cmath>
#include <utility>
#include <vector>

namespace gelfand {

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
/// Legendre recurrence.  Nodes ascend; the rule is symmetric by construction
/// (paired entries share one computed value).
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  const double eps = 1e-15;
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= eps) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return {x, w};
}

}  // namespace gelfand

#endif
