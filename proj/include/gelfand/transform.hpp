#ifndef GELFAND_TRANSFORM_HPP
#define GELFAND_TRANSFORM_HPP

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "gelfand/spherical.hpp"

namespace gelfand {

/// A K-invariant integrable function given by a pure evaluator, its declared
/// support radius (infinity for unbounded), and the group it claims
/// invariance under.  The claim is spot-audited before transforms run.
struct InvariantFunction {
  std::function<std::complex<double>(std::span<const double>)> evaluator;
  double support_radius = std::numeric_limits<double>::infinity();
  const CompactGroup* declared_invariant_under = nullptr;
  std::string name;

  std::complex<double> operator()(std::span<const double> x) const { return evaluator(x); }
};

/// Tensor Gauss-Legendre rule on the box [-R, R]^n, n <= 3.  Polynomial
/// exactness is spot-verified at construction.
class BoxQuadrature {
 public:
  BoxQuadrature(int dim, double half_width, int nodes_per_axis);

  int dim() const { return dim_; }
  double half_width() const { return half_width_; }
  int nodes_per_axis() const { return nodes_; }
  long total_nodes() const;

  /// Flattened node access, lexicographic over axes; deterministic order.
  void node(long idx, std::span<double> out) const;
  double weight(long idx) const;

  std::string describe() const;

 private:
  int dim_;
  double half_width_;
  int nodes_;
  std::vector<double> x1_, w1_;
};

/// Spot-checks |f(k x) - f(x)| <= tol on a fixed audit set; throws
/// InvarianceError on failure.
void audit_invariance(const InvariantFunction& f, const CompactGroup& K, double tol = 1e-12);

/// Non-fatal note when the declared support is not covered by the box.
std::optional<std::string> support_truncation_note(const InvariantFunction& f,
                                                   const BoxQuadrature& quad);

/// fhat(xi) = quadrature of f(x) exp(-i<x,xi>).
std::complex<double> fourier_forward(const InvariantFunction& f, const BoxQuadrature& quad,
                                     std::span<const double> xi);

/// Spherical transform: quadrature of f(x) phi_xi(-x); audits invariance.
/// Coincides with fourier_forward for invariant f.
std::complex<double> gelfand_transform(const GelfandPair& pair, const InvariantFunction& f,
                                       const BoxQuadrature& quad, std::span<const double> xi);

/// Inversion: (2pi)^{-n} quadrature of fhat(xi) exp(i<x,xi>).  Requires the
/// declared support of fhat inside the box.
std::complex<double> fourier_inverse(const InvariantFunction& fhat, const BoxQuadrature& quad,
                                     std::span<const double> x);

/// The aggregated global series h(t) = (2pi)^{-n} integral fhat(xi) h_xi(t):
/// one complex coefficient per generator index J, so repeated evaluations are
/// a single sparse polynomial sum.
struct GlobalHSeries {
  int ell = 0;
  long M = 0;
  std::vector<int> degrees;
  std::vector<std::pair<MultiIndex, std::complex<double>>> terms;

  std::complex<double> eval(std::span<const double> t) const;
  double tail_mass(std::span<const double> t) const;
};

/// include_inversion_factor: true for the reconstruction normalization
/// ((2pi)^{-n}, as in the inversion formula), false for the plain Lebesgue
/// pairing used by the transform-extension route.
GlobalHSeries build_global_h_series(const CoefficientTable& table, const InvariantFunction& fhat,
                                    const BoxQuadrature& quad, bool include_inversion_factor,
                                    bool negate_argument = false);

/// h(t) for one t; builds the aggregate behind the scenes.
std::complex<double> build_h_global(const CoefficientTable& table, const InvariantFunction& fhat,
                                    const BoxQuadrature& quad, std::span<const double> t);

/// h(t) = quadrature of g(-xi) h_xi(t) for compactly supported invariant g;
/// h(rho(xi)) extends the spherical transform of g.
std::complex<double> corollary_h_from_g(const CoefficientTable& table, const InvariantFunction& g,
                                        const BoxQuadrature& quad, std::span<const double> t);

struct SchwarzPoint {
  std::vector<double> x;
  std::complex<double> f;
  std::complex<double> h_rho;
  double err = 0.0;
};

struct SchwarzReport {
  std::string pair_name;
  long M = 0;
  double quad_radius = 0.0;
  int quad_nodes = 0;
  double max_abs_error = 0.0;
  double max_abs_f = 0.0;
  double tail_mass = 0.0;  // remainder proxy at the worst point
  std::vector<SchwarzPoint> points;
};

/// For each x: |fourier_inverse(fhat, x) - h(rho(x))| with h built from the
/// coefficient table.  The theorem under test says the defect is pure
/// quadrature + truncation error.
SchwarzReport verify_schwarz(const GelfandPair& pair, const CoefficientTable& table,
                             const InvariantFunction& fhat, const BoxQuadrature& quad,
                             std::span<const std::vector<double>> points);

}  // namespace gelfand

#endif
