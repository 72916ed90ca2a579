// Test-only independent oracles.  Everything here recomputes expected values
// by a route different from the library implementation it checks: naive
// expansions, high-resolution quadrature, classical series, closed forms.
#ifndef GELFAND_TESTS_ORACLES_HPP
#define GELFAND_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "gelfand/polynomial.hpp"

namespace oracles {

using gelfand::GaussRat;
using gelfand::Int;
using gelfand::MultiIndex;
using gelfand::PolyQ;
using gelfand::Rat;

/// Naive product: expand term by term into a flat list, then combine.
inline PolyQ naive_product(const PolyQ& a, const PolyQ& b) {
  std::vector<std::pair<MultiIndex, Rat>> flat;
  for (const auto& [I, c] : a.terms())
    for (const auto& [J, d] : b.terms()) flat.emplace_back(I + J, Rat(c * d));
  PolyQ out(a.nvars());
  for (auto& [I, c] : flat) out.add_term(std::move(I), std::move(c));
  return out;
}

/// Substitution oracle for p(A x): evaluates both sides on a deterministic
/// rational point cloud rather than expanding.
inline bool compose_matches_pointwise(const PolyQ& composed, const PolyQ& p,
                                      const std::vector<std::vector<Rat>>& A,
                                      int npoints = 25) {
  const int n = p.nvars();
  std::mt19937 gen(1234);
  for (int t = 0; t < npoints; ++t) {
    std::vector<Rat> x(n), Ax(n, Rat(0));
    for (int i = 0; i < n; ++i)
      x[i] = gelfand::make_rat(static_cast<long>(gen() % 19) - 9,
                               static_cast<long>(gen() % 7) + 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Ax[i] += A[i][j] * x[j];
    if (composed.eval(x) != p.eval(Ax)) return false;
  }
  return true;
}

/// High-resolution trapezoid average of F over [0, 2pi).
inline std::complex<double> trapezoid_circle_average(
    const std::function<std::complex<double>(double)>& F, int N = 1 << 15) {
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j < N; ++j) acc += F(2.0 * M_PI * j / N);
  return acc / static_cast<double>(N);
}

/// Bessel J_nu of the first kind by its power series (nu integer >= 0);
/// plenty for |x| <= 10.
inline double bessel_j_series(int nu, double x, int kmax = 60) {
  double acc = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    double lognum = (2.0 * k + nu) * std::log(std::abs(x) / 2.0 + 1e-300);
    double logden = std::lgamma(k + 1.0) + std::lgamma(k + nu + 1.0);
    double term = std::exp(lognum - logden);
    acc += (k % 2 == 0 ? term : -term);
  }
  return acc;
}

/// (2k)!! n (n+2) ... (n+2(k-1)) — the closed-form self-pairing of |x|^2.
inline Int laplacian_pairing_product(int n, int k) {
  Int v = gelfand::double_factorial(2 * k);
  for (int j = 0; j < k; ++j) v *= Int(n + 2 * j);
  return v;
}

/// Gamma(k + n/2) / Gamma(n/2) in exact rationals via Gamma(z+1) = z Gamma(z).
inline Rat gamma_ratio_half(int n, int k) {
  Rat acc(1);
  for (int j = 0; j < k; ++j) acc *= gelfand::make_rat(n + 2 * j, 2);
  return acc;
}

/// Brute-force truncated expansion of cos<x, xi> as a polynomial in the
/// flattened variables (x_1..x_n, xi_1..xi_n): sum (-1)^m <x,xi>^{2m} / (2m)!.
inline PolyQ cos_inner_product_expansion(int n, long max_x_degree) {
  const int nv = 2 * n;
  PolyQ inner(nv);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(nv, 0);
    e[i] = 1;
    e[n + i] = 1;
    inner.add_term(MultiIndex(std::move(e)), Rat(1));
  }
  PolyQ acc = PolyQ::constant(nv, Rat(1));
  PolyQ power = PolyQ::constant(nv, Rat(1));
  for (long m = 1; 2 * m <= max_x_degree; ++m) {
    power = power * inner * inner;
    Rat c = gelfand::make_rat(Int(m % 2 == 0 ? 1 : -1), gelfand::factorial(2 * m));
    acc += power.scaled(c);
  }
  return acc;
}

/// Deterministic golden-angle spiral covering the disk of the given radius,
/// area-uniform radii.
inline std::vector<std::vector<double>> disk_spiral_points(int count, double radius) {
  std::vector<std::vector<double>> pts;
  const double ga = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    double r = radius * std::sqrt((i + 0.5) / count);
    pts.push_back({r * std::cos(i * ga), r * std::sin(i * ga)});
  }
  return pts;
}

/// Portable deterministic uniform double in [lo, hi) from a raw mt19937 draw.
inline double uniform(std::mt19937& gen, double lo, double hi) {
  return lo + (hi - lo) * (gen() * (1.0 / 4294967296.0));
}

/// Deterministic point in the closed n-ball of the given radius.
inline std::vector<double> ball_point(std::mt19937& gen, int n, double radius) {
  for (;;) {
    std::vector<double> x(n);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = uniform(gen, -radius, radius);
      r2 += x[i] * x[i];
    }
    if (r2 <= radius * radius) return x;
  }
}

/// Rational point in the ball of the given (integer) radius with small
/// denominators, for exact paths.
inline std::vector<Rat> rational_ball_point(std::mt19937& gen, int n, int radius) {
  for (;;) {
    std::vector<Rat> x(n);
    Rat r2(0);
    for (int i = 0; i < n; ++i) {
      long num = static_cast<long>(gen() % (2 * 8 * static_cast<unsigned>(radius) + 1)) -
                 8L * radius;
      long den = 8;
      x[i] = gelfand::make_rat(num, den);
      r2 += x[i] * x[i];
    }
    if (r2 <= Rat(radius * radius)) return x;
  }
}

}  // namespace oracles

#endif
