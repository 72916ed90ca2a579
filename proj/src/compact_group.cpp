#include "gelfand/compact_group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "gelfand/gauss.hpp"

namespace gelfand {

namespace {

struct MatQLess {
  bool operator()(const MatQ& a, const MatQ& b) const {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        int c = cmp(a(i, j), b(i, j));
        if (c != 0) return c < 0;
      }
    return false;
  }
};

bool is_orthogonal(const MatQ& m) {
  return m.transposed() * m == MatQ::identity(m.rows());
}

std::vector<double> to_doubles(const MatQ& m) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j).get_d());
  return out;
}

}  // namespace

void CompactGroup::build_nodes() {
  nodes_.clear();
  switch (kind_) {
    case Kind::finite: {
      const double w = 1.0 / static_cast<double>(elements_.size());
      for (const MatQ& m : elements_) nodes_.push_back({to_doubles(m), w});
      break;
    }
    case Kind::so2: {
      const int N = so2_points_;
      for (int j = 0; j < N; ++j) {
        double th = 2.0 * M_PI * j / N;
        double c = std::cos(th), s = std::sin(th);
        nodes_.push_back({{c, -s, s, c}, 1.0 / N});
      }
      break;
    }
    case Kind::so3: {
      // Euler ZYZ product rule: trapezoid in alpha and gamma (periodic),
      // Gauss-Legendre in cos(beta).  Haar = (1/8pi^2) sin(beta) da db dg.
      const int r = so3_resolution_;
      const int na = 2 * r, ng = 2 * r;
      auto [u, wu] = gauss_legendre(r);
      for (int ia = 0; ia < na; ++ia) {
        double a = 2.0 * M_PI * ia / na;
        double ca = std::cos(a), sa = std::sin(a);
        for (int ib = 0; ib < r; ++ib) {
          double cb = u[ib], sb = std::sqrt(std::max(0.0, 1.0 - cb * cb));
          for (int ig = 0; ig < ng; ++ig) {
            double g = 2.0 * M_PI * ig / ng;
            double cg = std::cos(g), sg = std::sin(g);
            // Rz(a) Ry(b) Rz(g)
            std::vector<double> m = {
                ca * cb * cg - sa * sg,  -ca * cb * sg - sa * cg,  ca * sb,
                sa * cb * cg + ca * sg,  -sa * cb * sg + ca * cg,  sa * sb,
                -sb * cg,                sb * sg,                  cb};
            nodes_.push_back({std::move(m), (wu[ib] / 2.0) / (na * ng)});
          }
        }
      }
      break;
    }
  }
}

CompactGroup validate_group(const RawGroup& raw) {
  CompactGroup g;
  if (raw.n <= 0) throw ValidationError("group dimension must be positive");
  g.n_ = raw.n;
  if (raw.kind == "finite") {
    g.kind_ = CompactGroup::Kind::finite;
    if (raw.matrices.empty()) throw ValidationError("finite group needs at least one matrix");
    std::map<MatQ, int, MatQLess> seen;
    for (std::size_t i = 0; i < raw.matrices.size(); ++i) {
      const MatQ& m = raw.matrices[i];
      if (m.rows() != raw.n || m.cols() != raw.n)
        throw DimensionError("group element " + std::to_string(i) + " is not " +
                             std::to_string(raw.n) + "x" + std::to_string(raw.n));
      if (!is_orthogonal(m))
        throw ValidationError("group element " + std::to_string(i) +
                              " is not orthogonal (M^T M != Id)");
      if (!seen.emplace(m, static_cast<int>(i)).second)
        throw ValidationError("duplicate group element at index " + std::to_string(i));
    }
    if (!seen.count(MatQ::identity(raw.n)))
      throw ValidationError("closure error: identity element missing");
    for (std::size_t i = 0; i < raw.matrices.size(); ++i)
      for (std::size_t j = 0; j < raw.matrices.size(); ++j) {
        MatQ prod = raw.matrices[i] * raw.matrices[j];
        if (!seen.count(prod))
          throw ValidationError("closure error: product of elements " + std::to_string(i) +
                                " and " + std::to_string(j) + " is not in the set");
      }
    g.elements_ = raw.matrices;
  } else if (raw.kind == "so2") {
    if (raw.n != 2) throw ValidationError("so2 group requires n = 2");
    g.kind_ = CompactGroup::Kind::so2;
    g.so2_points_ = raw.quadrature_points.value_or(256);
    if (g.so2_points_ <= 0) throw ValidationError("quadrature_points must be positive");
  } else if (raw.kind == "so3") {
    if (raw.n != 3) throw ValidationError("so3 group requires n = 3");
    g.kind_ = CompactGroup::Kind::so3;
    g.so3_resolution_ = raw.resolution.value_or(16);
    if (g.so3_resolution_ <= 0) throw ValidationError("resolution must be positive");
    g.so3_rule_ = raw.rule.value_or("euler-zyz");
    if (g.so3_rule_ != "euler-zyz")
      throw ValidationError("unknown so3 product rule '" + g.so3_rule_ + "'");
  } else {
    throw ValidationError("unknown group kind '" + raw.kind + "'");
  }
  g.build_nodes();
  // Normalized Haar: positive weights summing to 1.
  double sum = 0.0;
  for (const auto& nd : g.nodes_) {
    if (!(nd.weight > 0.0)) throw ValidationError("non-positive Haar weight");
    sum += nd.weight;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("Haar weights do not sum to 1");
  return g;
}

CompactGroup make_finite_group(std::vector<MatQ> elements) {
  RawGroup raw;
  raw.kind = "finite";
  raw.n = elements.empty() ? 0 : elements.front().rows();
  raw.matrices = std::move(elements);
  return validate_group(raw);
}

CompactGroup make_so2_group(int quadrature_points, int n) {
  RawGroup raw;
  raw.kind = "so2";
  raw.n = n;
  raw.quadrature_points = quadrature_points;
  return validate_group(raw);
}

CompactGroup make_so3_group(int resolution, const std::string& rule) {
  RawGroup raw;
  raw.kind = "so3";
  raw.n = 3;
  raw.resolution = resolution;
  raw.rule = rule;
  return validate_group(raw);
}

std::string CompactGroup::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::finite: os << "finite group of order " << elements_.size(); break;
    case Kind::so2: os << "SO(2), " << so2_points_ << " quadrature points"; break;
    case Kind::so3: os << "SO(3), " << so3_rule_ << " rule, resolution " << so3_resolution_; break;
  }
  os << " on R^" << n_;
  return os.str();
}

std::complex<double> haar_average_scalar(
    const CompactGroup& K, const std::function<std::complex<double>(const HaarNode&)>& F) {
  std::complex<double> acc{0.0, 0.0};
  if (K.is_finite()) {
    for (const auto& nd : K.haar_nodes()) acc += F(nd);
    return acc / static_cast<double>(K.order());
  }
  for (const auto& nd : K.haar_nodes()) acc += nd.weight * F(nd);
  return acc;
}

namespace {

/// Uniform moment of theta^I over the unit sphere S^{n-1}: zero unless every
/// exponent is even, else prod (i_k-1)!! / (n (n+2) ... (n+|I|-2)).
Rat sphere_moment(const MultiIndex& I, int n) {
  for (int j = 0; j < I.size(); ++j)
    if (I[j] % 2 != 0) return Rat(0);
  long m = I.degree() / 2;
  Int num(1);
  for (int j = 0; j < I.size(); ++j) num *= double_factorial(I[j] - 1);
  Int den(1);
  for (long k = 0; k < m; ++k) den *= Int(n + 2 * k);
  return make_rat(num, den);
}

}  // namespace

PolyQ reynolds(const CompactGroup& K, const PolyQ& p) {
  if (p.nvars() != K.n()) throw DimensionError("reynolds: polynomial arity vs group dimension");
  if (K.is_finite()) {
    PolyQ acc(p.nvars());
    for (const MatQ& k : K.elements()) {
      std::vector<std::vector<Rat>> A(K.n(), std::vector<Rat>(K.n()));
      for (int i = 0; i < K.n(); ++i)
        for (int j = 0; j < K.n(); ++j) A[i][j] = k(i, j);
      acc += p.compose_linear(A);
    }
    return acc.scaled(make_rat(1, K.order()));
  }
  // Rotation-average of a monomial is |x|^{|I|} times the sphere moment.
  const int n = K.n();
  PolyQ norm2(n);
  for (int j = 0; j < n; ++j) norm2.add_term(MultiIndex::unit(n, j) + MultiIndex::unit(n, j), Rat(1));
  std::vector<PolyQ> norm_pows{PolyQ::constant(n, Rat(1))};
  auto norm_pow = [&](long m) -> const PolyQ& {
    while (static_cast<long>(norm_pows.size()) <= m) norm_pows.push_back(norm_pows.back() * norm2);
    return norm_pows[m];
  };
  PolyQ acc(n);
  for (const auto& [I, c] : p.terms()) {
    if (I.degree() % 2 != 0) continue;
    Rat mu = sphere_moment(I, n);
    if (mu == 0) continue;
    acc += norm_pow(I.degree() / 2).scaled(Rat(c * mu));
  }
  return acc;
}

std::optional<int> invariance_witness(const CompactGroup& K, const PolyQ& p) {
  if (K.is_finite()) {
    for (int e = 0; e < K.order(); ++e) {
      const MatQ& k = K.elements()[e];
      std::vector<std::vector<Rat>> A(K.n(), std::vector<Rat>(K.n()));
      for (int i = 0; i < K.n(); ++i)
        for (int j = 0; j < K.n(); ++j) A[i][j] = k(i, j);
      if (p.compose_linear(A) != p) return e;
    }
    return std::nullopt;
  }
  return reynolds(K, p) == p ? std::nullopt : std::optional<int>(0);
}

}  // namespace gelfand
