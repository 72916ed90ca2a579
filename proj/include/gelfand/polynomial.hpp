#ifndef GELFAND_POLYNOMIAL_HPP
#define GELFAND_POLYNOMIAL_HPP

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "gelfand/multi_index.hpp"
#include "gelfand/rational.hpp"

namespace gelfand {

// Scalar conversions between the supported coefficient fields.  Conversions
// that leave the exact world are explicit call sites, never implicit.
template <class To>
struct ScalarCast;

template <>
struct ScalarCast<Rat> {
  static Rat from(const Rat& x) { return x; }
  static Rat from(const Int& x) { return Rat(x); }
};
template <>
struct ScalarCast<GaussRat> {
  static GaussRat from(const Rat& x) { return GaussRat(x); }
  static GaussRat from(const GaussRat& x) { return x; }
  static GaussRat from(const Int& x) { return GaussRat(Rat(x)); }
};
template <>
struct ScalarCast<double> {
  static double from(const Rat& x) { return x.get_d(); }
  static double from(const Int& x) { return x.get_d(); }
  static double from(double x) { return x; }
};
template <>
struct ScalarCast<std::complex<double>> {
  static std::complex<double> from(const Rat& x) { return {x.get_d(), 0.0}; }
  static std::complex<double> from(const GaussRat& x) { return to_complex(x); }
  static std::complex<double> from(const Int& x) { return {x.get_d(), 0.0}; }
  static std::complex<double> from(const std::complex<double>& x) { return x; }
};

template <class S>
inline bool scalar_is_zero(const S& x) {
  return x == S(0);
}
template <>
inline bool scalar_is_zero<Rat>(const Rat& x) {
  return x == 0;
}
template <>
inline bool scalar_is_zero<GaussRat>(const GaussRat& x) {
  return x.is_zero();
}
template <>
inline bool scalar_is_zero<std::complex<double>>(const std::complex<double>& x) {
  return x.real() == 0.0 && x.imag() == 0.0;
}

/// Sparse multivariate polynomial over a fixed number of variables.  Terms are
/// kept in canonical order and zero coefficients are pruned after every
/// operation, so equality of maps is equality of polynomials.
template <class S>
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, S, GrlexLess>;

  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw DimensionError("negative variable count");
  }

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, S c) {
    Polynomial p(nvars);
    p.add_term(MultiIndex::zeros(nvars), std::move(c));
    return p;
  }
  static Polynomial monomial(MultiIndex I, S c) {
    Polynomial p(I.size());
    p.add_term(std::move(I), std::move(c));
    return p;
  }
  static Polynomial variable(int nvars, int j) {
    return monomial(MultiIndex::unit(nvars, j), S(ScalarCast<S>::from(Rat(1))));
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  S coeff(const MultiIndex& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? S() : it->second;
  }

  void add_term(MultiIndex I, S c) {
    if (I.size() != nvars_) throw DimensionError("term arity mismatch");
    if (scalar_is_zero(c)) return;
    auto it = terms_.find(I);
    if (it == terms_.end()) {
      terms_.emplace(std::move(I), std::move(c));
    } else {
      it->second += c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [I, c] : o.terms_) add_term(I, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [I, c] : o.terms_) add_term(I, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [I, c] : terms_) r.terms_.emplace(I, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r(a.nvars_);
    for (const auto& [I, c] : a.terms_)
      for (const auto& [J, d] : b.terms_) r.add_term(I + J, c * d);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const S& s) const {
    Polynomial r(nvars_);
    if (scalar_is_zero(s)) return r;
    for (const auto& [I, c] : terms_) r.terms_.emplace(I, S(c * s));
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// -1 for the zero polynomial.
  long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
  }

  /// Splits into homogeneous parts, degree ascending; parts recompose exactly.
  std::vector<std::pair<long, Polynomial>> homogeneous_components() const {
    std::vector<std::pair<long, Polynomial>> out;
    for (const auto& [I, c] : terms_) {
      long d = I.degree();
      if (out.empty() || out.back().first != d) out.emplace_back(d, Polynomial(nvars_));
      out.back().second.terms_.emplace(I, c);
    }
    return out;
  }

  /// Evaluation at a point with components of type P; exact when S and P are.
  template <class P>
  P eval(std::span<const P> x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw DimensionError("eval: point dimension mismatch");
    // Per-variable power tables up to the maximal exponent in use.
    std::vector<int> maxe(nvars_, 0);
    for (const auto& [I, c] : terms_)
      for (int j = 0; j < nvars_; ++j) maxe[j] = std::max(maxe[j], I[j]);
    std::vector<std::vector<P>> pow(nvars_);
    for (int j = 0; j < nvars_; ++j) {
      pow[j].resize(maxe[j] + 1);
      pow[j][0] = ScalarCast<P>::from(Rat(1));
      for (int e = 1; e <= maxe[j]; ++e) pow[j][e] = P(pow[j][e - 1] * x[j]);
    }
    P acc = ScalarCast<P>::from(Rat(0));
    for (const auto& [I, c] : terms_) {
      P t = ScalarCast<P>::from(c);
      for (int j = 0; j < nvars_; ++j)
        if (I[j] > 0) t = P(t * pow[j][I[j]]);
      acc += t;
    }
    return acc;
  }
  template <class P>
  P eval(const std::vector<P>& x) const {
    return eval(std::span<const P>(x));
  }

  /// x -> p(A x) for a square matrix A given by rows; expanded and normalized.
  Polynomial compose_linear(const std::vector<std::vector<S>>& A) const {
    if (static_cast<int>(A.size()) != nvars_)
      throw DimensionError("compose_linear: matrix must be square of size nvars");
    for (const auto& row : A)
      if (static_cast<int>(row.size()) != nvars_)
        throw DimensionError("compose_linear: matrix must be square of size nvars");
    // Linear forms L_k(x) = (A x)_k and their cached powers.
    std::vector<Polynomial> forms;
    forms.reserve(nvars_);
    for (int k = 0; k < nvars_; ++k) {
      Polynomial L(nvars_);
      for (int j = 0; j < nvars_; ++j) L.add_term(MultiIndex::unit(nvars_, j), A[k][j]);
      forms.push_back(std::move(L));
    }
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power_of = [&](int k, int e) -> const Polynomial& {
      auto& cache = powers[k];
      if (cache.empty()) cache.push_back(constant(nvars_, ScalarCast<S>::from(Rat(1))));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * forms[k]);
      return cache[e];
    };
    Polynomial r(nvars_);
    for (const auto& [I, c] : terms_) {
      Polynomial t = constant(nvars_, c);
      for (int k = 0; k < nvars_; ++k)
        if (I[k] > 0) t = t * power_of(k, I[k]);
      r += t;
    }
    return r;
  }

 private:
  void check_same(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomial variable count mismatch");
  }

  int nvars_;
  TermMap terms_;
};

using PolyQ = Polynomial<Rat>;
using PolyG = Polynomial<GaussRat>;
using PolyC = Polynomial<std::complex<double>>;

template <class To, class From>
Polynomial<To> convert_poly(const Polynomial<From>& p) {
  Polynomial<To> r(p.nvars());
  for (const auto& [I, c] : p.terms()) r.add_term(I, ScalarCast<To>::from(c));
  return r;
}

/// <q, p> = sum_I q_I p_I I!  — the value at 0 of the constant-coefficient
/// operator built from q applied to p.  Symmetric; kills homogeneous factors
/// of different degrees exactly.
template <class S>
S derivative_at_zero_pairing(const Polynomial<S>& q, const Polynomial<S>& p) {
  if (q.nvars() != p.nvars()) throw DimensionError("pairing: variable count mismatch");
  const auto& small = q.term_count() <= p.term_count() ? q : p;
  const auto& large = q.term_count() <= p.term_count() ? p : q;
  S acc{};
  for (const auto& [I, c] : small.terms()) {
    auto it = large.terms().find(I);
    if (it == large.terms().end()) continue;
    acc += S(c * it->second * ScalarCast<S>::from(I.index_factorial()));
  }
  return acc;
}

/// Applies the constant-coefficient operator built from `op` to `p`.
template <class S>
Polynomial<S> apply_diff_operator(const Polynomial<S>& op, const Polynomial<S>& p) {
  if (op.nvars() != p.nvars()) throw DimensionError("operator arity mismatch");
  Polynomial<S> r(p.nvars());
  for (const auto& [K, c] : op.terms()) {
    for (const auto& [I, d] : p.terms()) {
      if (!K.divides(I)) continue;
      Int fall(1);  // I!/(I-K)!
      for (int j = 0; j < I.size(); ++j)
        for (int v = I[j]; v > I[j] - K[j]; --v) fall *= v;
      r.add_term(I - K, S(c * d * ScalarCast<S>::from(fall)));
    }
  }
  return r;
}

}  // namespace gelfand

#endif
