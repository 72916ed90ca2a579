#include "gelfand/transform.hpp"

#include <cmath>
#include <sstream>

#include "gelfand/gauss.hpp"

namespace gelfand {

BoxQuadrature::BoxQuadrature(int dim, double half_width, int nodes_per_axis)
    : dim_(dim), half_width_(half_width), nodes_(nodes_per_axis) {
  if (dim < 1 || dim > 3)
    throw DimensionError("box quadrature supports 1 <= n <= 3 (got " + std::to_string(dim) + ")");
  if (!(half_width > 0.0)) throw ValidationError("box half-width must be positive");
  if (nodes_per_axis < 2) throw ValidationError("need at least 2 nodes per axis");
  auto [x, w] = gauss_legendre(nodes_per_axis);
  x1_.resize(x.size());
  w1_.resize(w.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x1_[i] = x[i] * half_width;
    w1_[i] = w[i] * half_width;
  }
  // Spot-verify polynomial exactness: integral of s^k over [-R, R].
  double wsum = 0.0;
  for (double wi : w1_) {
    if (!(wi > 0.0)) throw ValidationError("non-positive quadrature weight");
    wsum += wi;
  }
  if (std::abs(wsum - 2.0 * half_width) > 1e-12 * half_width)
    throw ValidationError("quadrature weights do not integrate the constant");
  const int kmax = std::min(2 * nodes_per_axis - 1, 20);
  for (int k = 1; k <= kmax; ++k) {
    double got = 0.0;
    for (std::size_t i = 0; i < x1_.size(); ++i) got += w1_[i] * std::pow(x1_[i], k);
    double want = (k % 2 == 0) ? 2.0 * std::pow(half_width, k + 1) / (k + 1) : 0.0;
    double scale = 2.0 * std::pow(half_width, k + 1) / (k + 1);
    if (std::abs(got - want) > 1e-12 * scale)
      throw ValidationError("quadrature fails exactness check at degree " + std::to_string(k));
  }
}

long BoxQuadrature::total_nodes() const {
  long t = 1;
  for (int i = 0; i < dim_; ++i) t *= nodes_;
  return t;
}

void BoxQuadrature::node(long idx, std::span<double> out) const {
  for (int a = dim_ - 1; a >= 0; --a) {
    out[a] = x1_[idx % nodes_];
    idx /= nodes_;
  }
}

double BoxQuadrature::weight(long idx) const {
  double w = 1.0;
  for (int a = dim_ - 1; a >= 0; --a) {
    w *= w1_[idx % nodes_];
    idx /= nodes_;
  }
  return w;
}

std::string BoxQuadrature::describe() const {
  std::ostringstream os;
  os << "Gauss-Legendre " << nodes_ << "^" << dim_ << " on [-" << half_width_ << ", "
     << half_width_ << "]^" << dim_;
  return os.str();
}

void audit_invariance(const InvariantFunction& f, const CompactGroup& K, double tol) {
  const int n = K.n();
  // Fixed audit set: a handful of points inside the declared support.
  double r0 = std::isfinite(f.support_radius) ? f.support_radius : 2.0;
  std::vector<std::vector<double>> pts;
  for (double frac : {0.15, 0.45, 0.8}) {
    std::vector<double> p(n, 0.0);
    for (int i = 0; i < n; ++i) p[i] = frac * r0 * (i == 0 ? 0.8 : (i == 1 ? -0.55 : 0.3));
    pts.push_back(std::move(p));
  }
  std::vector<const HaarNode*> ks;
  if (K.is_finite()) {
    for (const auto& nd : K.haar_nodes()) ks.push_back(&nd);
  } else {
    const auto& nodes = K.haar_nodes();
    for (std::size_t i : {nodes.size() / 7, nodes.size() / 3, (5 * nodes.size()) / 6})
      ks.push_back(&nodes[std::min(i, nodes.size() - 1)]);
  }
  for (const auto& p : pts)
    for (const HaarNode* k : ks) {
      auto kp = apply_node(*k, n, p);
      double defect = std::abs(f(kp) - f(p));
      if (defect > tol) {
        std::ostringstream os;
        os << "invariance audit failed for '" << f.name << "': |f(kx)-f(x)| = " << defect
           << " > " << tol;
        throw InvarianceError(os.str());
      }
    }
}

std::optional<std::string> support_truncation_note(const InvariantFunction& f,
                                                   const BoxQuadrature& quad) {
  if (f.support_radius <= quad.half_width()) return std::nullopt;
  std::ostringstream os;
  if (std::isfinite(f.support_radius))
    os << "declared support radius " << f.support_radius << " exceeds box half-width "
       << quad.half_width() << "; the integral is truncated";
  else
    os << "unbounded support truncated to the box [-" << quad.half_width() << ", "
       << quad.half_width() << "]^" << quad.dim() << "; tail left to the caller's budget";
  return os.str();
}

std::complex<double> fourier_forward(const InvariantFunction& f, const BoxQuadrature& quad,
                                     std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != quad.dim())
    throw DimensionError("fourier_forward: xi dimension mismatch");
  std::vector<double> x(quad.dim());
  std::complex<double> acc{0.0, 0.0};
  const long N = quad.total_nodes();
  for (long i = 0; i < N; ++i) {
    quad.node(i, x);
    double s = 0.0;
    for (int a = 0; a < quad.dim(); ++a) s += x[a] * xi[a];
    acc += quad.weight(i) * f(x) * std::complex<double>(std::cos(s), -std::sin(s));
  }
  return acc;
}

std::complex<double> gelfand_transform(const GelfandPair& pair, const InvariantFunction& f,
                                       const BoxQuadrature& quad, std::span<const double> xi) {
  audit_invariance(f, pair.group);
  std::vector<double> x(quad.dim()), mx(quad.dim());
  std::complex<double> acc{0.0, 0.0};
  const long N = quad.total_nodes();
  for (long i = 0; i < N; ++i) {
    quad.node(i, x);
    for (int a = 0; a < quad.dim(); ++a) mx[a] = -x[a];
    acc += quad.weight(i) * f(x) * eval_spherical_direct(pair, xi, mx);
  }
  return acc;
}

namespace {

void require_support_inside(const InvariantFunction& fhat, const BoxQuadrature& quad,
                            const char* who) {
  if (!(fhat.support_radius <= quad.half_width() * (1.0 + 1e-12)))
    throw SupportError(std::string(who) + ": declared support radius " +
                       std::to_string(fhat.support_radius) + " is not inside the box [-" +
                       std::to_string(quad.half_width()) + ", " +
                       std::to_string(quad.half_width()) + "]^" + std::to_string(quad.dim()));
}

double two_pi_pow(int n) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= 2.0 * M_PI;
  return p;
}

}  // namespace

std::complex<double> fourier_inverse(const InvariantFunction& fhat, const BoxQuadrature& quad,
                                     std::span<const double> x) {
  if (static_cast<int>(x.size()) != quad.dim())
    throw DimensionError("fourier_inverse: x dimension mismatch");
  require_support_inside(fhat, quad, "fourier_inverse");
  std::vector<double> xi(quad.dim());
  std::complex<double> acc{0.0, 0.0};
  const long N = quad.total_nodes();
  for (long i = 0; i < N; ++i) {
    quad.node(i, xi);
    double s = 0.0;
    for (int a = 0; a < quad.dim(); ++a) s += x[a] * xi[a];
    acc += quad.weight(i) * fhat(xi) * std::complex<double>(std::cos(s), std::sin(s));
  }
  return acc / two_pi_pow(quad.dim());
}

std::complex<double> GlobalHSeries::eval(std::span<const double> t) const {
  if (static_cast<int>(t.size()) != ell) throw DimensionError("global h: arity mismatch");
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [J, c] : terms) {
    double mono = 1.0;
    for (int k = 0; k < ell; ++k)
      for (int e = 0; e < J[k]; ++e) mono *= t[k];
    acc += c * mono;
  }
  return acc;
}

double GlobalHSeries::tail_mass(std::span<const double> t) const {
  long top = 0;
  for (const auto& [J, c] : terms) top = std::max(top, graded_degree(J, degrees).value);
  double mass = 0.0;
  for (const auto& [J, c] : terms) {
    if (graded_degree(J, degrees).value != top) continue;
    double mono = 1.0;
    for (int k = 0; k < ell; ++k)
      for (int e = 0; e < J[k]; ++e) mono *= std::abs(t[k]);
    mass += std::abs(c) * mono;
  }
  return mass;
}

GlobalHSeries build_global_h_series(const CoefficientTable& table, const InvariantFunction& fhat,
                                    const BoxQuadrature& quad, bool include_inversion_factor,
                                    bool negate_argument) {
  const GelfandPair& pair = table.pair;
  if (quad.dim() != pair.n()) throw DimensionError("quadrature dimension vs pair dimension");
  require_support_inside(fhat, quad, "global h series");
  audit_invariance(fhat, pair.group);

  // Flatten the a-table once: index t-monomials, then aggregate per node.
  std::vector<MultiIndex> Js, alphas;
  std::map<MultiIndex, int, GrlexLess> alpha_of;
  struct Entry {
    int j_idx;
    int alpha_idx;
    std::complex<double> c;
  };
  std::vector<Entry> entries;
  for (const auto& [J, qJ] : table.a) {
    int jid = static_cast<int>(Js.size());
    Js.push_back(J);
    for (const auto& [alpha, c] : qJ.terms()) {
      auto [it, fresh] = alpha_of.emplace(alpha, static_cast<int>(alphas.size()));
      if (fresh) alphas.push_back(alpha);
      entries.push_back({jid, it->second, to_complex(c)});
    }
  }

  std::vector<std::complex<double>> agg(Js.size(), {0.0, 0.0});
  std::vector<double> xi(quad.dim());
  std::vector<double> alpha_val(alphas.size());
  const int ell = pair.ell();
  std::vector<std::vector<double>> tpow(ell);
  std::vector<int> maxe(ell, 0);
  for (const auto& alpha : alphas)
    for (int k = 0; k < ell; ++k) maxe[k] = std::max(maxe[k], alpha[k]);
  const long N = quad.total_nodes();
  for (long i = 0; i < N; ++i) {
    quad.node(i, xi);
    if (negate_argument)
      for (double& v : xi) v = -v;
    std::complex<double> fv = fhat(xi);
    if (fv == std::complex<double>(0.0, 0.0)) continue;
    if (negate_argument)
      for (double& v : xi) v = -v;
    std::vector<double> rho = pair.rho(xi);
    for (int k = 0; k < ell; ++k) {
      tpow[k].assign(maxe[k] + 1, 1.0);
      for (int e = 1; e <= maxe[k]; ++e) tpow[k][e] = tpow[k][e - 1] * rho[k];
    }
    for (std::size_t aidx = 0; aidx < alphas.size(); ++aidx) {
      double v = 1.0;
      for (int k = 0; k < ell; ++k) v *= tpow[k][alphas[aidx][k]];
      alpha_val[aidx] = v;
    }
    std::complex<double> wf = quad.weight(i) * fv;
    for (const Entry& e : entries) agg[e.j_idx] += wf * e.c * alpha_val[e.alpha_idx];
  }

  GlobalHSeries out;
  out.ell = ell;
  out.M = table.max_degree;
  out.degrees = pair.degrees;
  const double norm = include_inversion_factor ? 1.0 / two_pi_pow(pair.n()) : 1.0;
  for (std::size_t j = 0; j < Js.size(); ++j)
    if (agg[j] != std::complex<double>(0.0, 0.0)) out.terms.emplace_back(Js[j], agg[j] * norm);
  return out;
}

std::complex<double> build_h_global(const CoefficientTable& table, const InvariantFunction& fhat,
                                    const BoxQuadrature& quad, std::span<const double> t) {
  return build_global_h_series(table, fhat, quad, /*include_inversion_factor=*/true).eval(t);
}

std::complex<double> corollary_h_from_g(const CoefficientTable& table, const InvariantFunction& g,
                                        const BoxQuadrature& quad, std::span<const double> t) {
  if (!std::isfinite(g.support_radius))
    throw SupportError("corollary route requires compactly supported g");
  return build_global_h_series(table, g, quad, /*include_inversion_factor=*/false,
                               /*negate_argument=*/true)
      .eval(t);
}

SchwarzReport verify_schwarz(const GelfandPair& pair, const CoefficientTable& table,
                             const InvariantFunction& fhat, const BoxQuadrature& quad,
                             std::span<const std::vector<double>> points) {
  SchwarzReport rep;
  rep.pair_name = pair.name;
  rep.M = table.max_degree;
  rep.quad_radius = quad.half_width();
  rep.quad_nodes = quad.nodes_per_axis();
  GlobalHSeries h = build_global_h_series(table, fhat, quad, /*include_inversion_factor=*/true);
  const std::vector<double>* worst = nullptr;
  for (const auto& x : points) {
    SchwarzPoint row;
    row.x = x;
    row.f = fourier_inverse(fhat, quad, x);
    row.h_rho = h.eval(pair.rho(x));
    row.err = std::abs(row.f - row.h_rho);
    rep.max_abs_f = std::max(rep.max_abs_f, std::abs(row.f));
    if (row.err >= rep.max_abs_error) {
      rep.max_abs_error = row.err;
      worst = &x;
    }
    rep.points.push_back(std::move(row));
  }
  if (worst) rep.tail_mass = h.tail_mass(pair.rho(*worst));
  return rep;
}

}  // namespace gelfand
