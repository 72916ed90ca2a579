#include "gelfand/spherical.hpp"

#include <algorithm>
#include <cmath>

namespace gelfand {

SpectrumPoint make_spectrum_point(const GelfandPair& pair, std::span<const double> xi) {
  return {pair.rho(xi), {xi.begin(), xi.end()}};
}

std::complex<double> eval_spherical_direct(const GelfandPair& pair, std::span<const double> xi,
                                           std::span<const double> x) {
  const int n = pair.n();
  if (static_cast<int>(xi.size()) != n || static_cast<int>(x.size()) != n)
    throw DimensionError("eval_spherical_direct: point dimension mismatch");
  const CompactGroup& K = pair.group;
  if (K.is_finite()) {
    // Exact rational phases <x, k xi>, sorted before summation: the multiset
    // is literally the same for (xi, x) and (x, xi), which makes the symmetry
    // defect vanish exactly.
    std::vector<Rat> xr(n), er(n);
    for (int i = 0; i < n; ++i) xr[i] = rat_from_double_exact(x[i]);
    for (int i = 0; i < n; ++i) er[i] = rat_from_double_exact(xi[i]);
    std::vector<Rat> phases;
    phases.reserve(K.order());
    for (const MatQ& k : K.elements()) {
      Rat s(0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s += xr[a] * k(a, b) * er[b];
      phases.push_back(std::move(s));
    }
    std::sort(phases.begin(), phases.end());
    std::complex<double> acc{0.0, 0.0};
    for (const Rat& s : phases) {
      double sd = s.get_d();
      acc += std::complex<double>(std::cos(sd), std::sin(sd));
    }
    return acc / static_cast<double>(K.order());
  }
  return haar_average_scalar(K, [&](const HaarNode& nd) {
    auto kxi = apply_node(nd, n, xi);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += x[i] * kxi[i];
    return std::complex<double>(std::cos(s), std::sin(s));
  });
}

std::complex<double> spherical_eigenvalue(const GelfandPair& pair, int j,
                                          std::span<const double> xi) {
  if (j < 1 || j > pair.ell()) throw DimensionError("generator index out of range");
  double r = pair.generators[j - 1].eval(xi);
  return to_complex(i_power(pair.degrees[j - 1])) * r;
}

GaussRat spherical_eigenvalue_exact(const GelfandPair& pair, int j, std::span<const Rat> xi) {
  if (j < 1 || j > pair.ell()) throw DimensionError("generator index out of range");
  return i_power(pair.degrees[j - 1]) * GaussRat(pair.generators[j - 1].eval(xi));
}

PolyG CoefficientTable::b_at(const MultiIndex& I) const {
  auto it = b.find(I);
  return it == b.end() ? PolyG::zero(pair.ell()) : it->second;
}

PolyG CoefficientTable::a_at(const MultiIndex& J) const {
  auto it = a.find(J);
  return it == a.end() ? PolyG::zero(pair.ell()) : it->second;
}

CoefficientTable build_coefficient_table(const GelfandPair& pair, long M) {
  if (M < 0) throw ValidationError("table depth must be non-negative");
  CoefficientTable table;
  table.pair = pair;
  table.max_degree = M;
  const int n = pair.n();

  for (long m = 0; m <= M; ++m) {
    const auto I_list = enumerate_exponents(n, m);
    const auto J_list = enumerate_graded(m, pair.degrees);
    const int R = static_cast<int>(I_list.size());
    const int C = static_cast<int>(J_list.size());
    std::map<MultiIndex, int, GrlexLess> row_of;
    for (int i = 0; i < R; ++i) row_of.emplace(I_list[i], i);

    // Reynolds images of the degree-m monomials, as columns.
    MatQ P(R, R);
    for (int col = 0; col < R; ++col) {
      PolyQ avg = reynolds(pair.group, PolyQ::monomial(I_list[col], Rat(1)));
      for (const auto& [I, c] : avg.terms()) P(row_of.at(I), col) = c;
    }

    if (C == 0) {
      // No invariants at this degree; every group average must vanish.
      for (int col = 0; col < R; ++col)
        for (int i = 0; i < R; ++i)
          if (P(i, col) != 0)
            throw ExpressibilityError(
                "group average of monomial " + I_list[col].to_string() +
                    " is not in the generator algebra (no generators reach degree " +
                    std::to_string(m) + ")",
                I_list[col].to_string());
      continue;
    }

    MatQ E = expansion_matrix(pair, m);
    int bad = -1;
    auto Q = min_norm_solve(E, P, &bad);  // C x R: column I holds q_I over J_list
    if (!Q)
      throw ExpressibilityError("group average of monomial " +
                                    I_list[bad >= 0 ? bad : 0].to_string() +
                                    " is not in the generator algebra",
                                I_list[bad >= 0 ? bad : 0].to_string());

    const GaussRat phase = i_power(m);

    // b[I] = (i^m / I!) q_I.
    for (int col = 0; col < R; ++col) {
      PolyG bI(pair.ell());
      Rat inv_fact = make_rat(Int(1), I_list[col].index_factorial());
      for (int r = 0; r < C; ++r) {
        if ((*Q)(r, col) == 0) continue;
        bI.add_term(J_list[r], phase * GaussRat(Rat((*Q)(r, col) * inv_fact)));
      }
      if (!bI.is_zero()) table.b.emplace(I_list[col], std::move(bI));
    }

    // a side: solve E A = B where column alpha of B collects, over the
    // monomial rows I, the t^alpha coefficient of b[I] (phase factored out).
    MatQ B(R, C);
    for (int i = 0; i < R; ++i) {
      Rat inv_fact = make_rat(Int(1), I_list[i].index_factorial());
      for (int r = 0; r < C; ++r) B(i, r) = Rat((*Q)(r, i) * inv_fact);
    }
    bad = -1;
    auto A = min_norm_solve(E, B, &bad);
    if (!A)
      throw ExpressibilityError("no generator expansion for the degree-" + std::to_string(m) +
                                    " Taylor band (t-monomial column " + std::to_string(bad) + ")",
                                "degree " + std::to_string(m));
    for (int r = 0; r < C; ++r) {
      PolyG qJ(pair.ell());
      for (int alpha = 0; alpha < C; ++alpha) {
        if ((*A)(r, alpha) == 0) continue;
        qJ.add_term(J_list[alpha], phase * GaussRat((*A)(r, alpha)));
      }
      if (!qJ.is_zero()) table.a.emplace(J_list[r], std::move(qJ));
    }
  }
  return table;
}

HSeries build_h_series(const CoefficientTable& table, std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != table.pair.n())
    throw DimensionError("build_h_series: xi dimension mismatch");
  HSeries h;
  h.ell = table.pair.ell();
  h.M = table.max_degree;
  h.xi.assign(xi.begin(), xi.end());
  h.degrees = table.pair.degrees;
  std::vector<std::complex<double>> t(table.pair.ell());
  auto rho = table.pair.rho(xi);
  for (int k = 0; k < table.pair.ell(); ++k) t[k] = rho[k];
  for (const auto& [J, qJ] : table.a) {
    std::complex<double> c = qJ.eval(std::span<const std::complex<double>>(t));
    if (c != std::complex<double>(0.0, 0.0)) h.terms.emplace_back(J, c);
  }
  return h;
}

std::map<MultiIndex, GaussRat, GrlexLess> build_h_series_exact(const CoefficientTable& table,
                                                               std::span<const Rat> xi) {
  std::vector<Rat> rho = table.pair.rho_exact(xi);
  std::vector<GaussRat> rg(rho.begin(), rho.end());
  std::map<MultiIndex, GaussRat, GrlexLess> out;
  for (const auto& [J, qJ] : table.a) {
    GaussRat c = qJ.eval(std::span<const GaussRat>(rg));
    if (!c.is_zero()) out.emplace(J, std::move(c));
  }
  return out;
}

std::complex<double> eval_h_series(const HSeries& h, std::span<const double> t) {
  if (static_cast<int>(t.size()) != h.ell) throw DimensionError("eval_h_series: arity mismatch");
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [J, c] : h.terms) {
    double mono = 1.0;
    for (int k = 0; k < h.ell; ++k)
      for (int e = 0; e < J[k]; ++e) mono *= t[k];
    acc += c * mono;
  }
  return acc;
}

double h_series_tail_mass(const HSeries& h, std::span<const double> t) {
  long top = 0;
  for (const auto& [J, c] : h.terms)
    top = std::max(top, graded_degree(J, h.degrees).value);
  double mass = 0.0;
  for (const auto& [J, c] : h.terms) {
    if (graded_degree(J, h.degrees).value != top) continue;
    double mono = 1.0;
    for (int k = 0; k < h.ell; ++k)
      for (int e = 0; e < J[k]; ++e) mono *= std::abs(t[k]);
    mass += std::abs(c) * mono;
  }
  return mass;
}

double truncation_stability_delta(const GelfandPair& pair, long M,
                                  std::span<const std::vector<double>> xis,
                                  std::span<const std::vector<double>> ts) {
  CoefficientTable t1 = build_coefficient_table(pair, M);
  CoefficientTable t2 = build_coefficient_table(pair, 2 * M);
  double delta = 0.0;
  for (const auto& xi : xis) {
    HSeries h1 = build_h_series(t1, xi);
    HSeries h2 = build_h_series(t2, xi);
    for (const auto& t : ts)
      delta = std::max(delta, std::abs(eval_h_series(h1, t) - eval_h_series(h2, t)));
  }
  return delta;
}

namespace {

/// Taylor polynomial of phi_xi through degree M at an exact rational xi.
PolyG taylor_polynomial_exact(const CoefficientTable& table, std::span<const Rat> xi) {
  std::vector<Rat> rho = table.pair.rho_exact(xi);
  std::vector<GaussRat> rg(rho.begin(), rho.end());
  PolyG T(table.pair.n());
  for (const auto& [I, bI] : table.b) {
    GaussRat c = bI.eval(std::span<const GaussRat>(rg));
    if (!c.is_zero()) T.add_term(I, std::move(c));
  }
  return T;
}

Rat max_coeff_norm1(const PolyG& p, long max_degree) {
  Rat worst(0);
  for (const auto& [I, c] : p.terms()) {
    if (I.degree() > max_degree) continue;
    Rat v = c.norm1();
    if (v > worst) worst = v;
  }
  return worst;
}

}  // namespace

Rat verify_eigenfunction(const CoefficientTable& table, int j, std::span<const Rat> xi) {
  const GelfandPair& pair = table.pair;
  if (j < 1 || j > pair.ell()) throw DimensionError("generator index out of range");
  const int d = pair.degrees[j - 1];
  if (table.max_degree < d)
    throw DepthError("table depth " + std::to_string(table.max_degree) +
                     " is below deg(rho_" + std::to_string(j) + ") = " + std::to_string(d));
  PolyG T = taylor_polynomial_exact(table, xi);
  PolyG Dj = convert_poly<GaussRat>(pair.generators[j - 1]);
  PolyG DT = apply_diff_operator(Dj, T);
  GaussRat lambda = spherical_eigenvalue_exact(pair, j, xi);
  PolyG R = DT - T.scaled(lambda);
  return max_coeff_norm1(R, table.max_degree - d);
}

Rat verify_eigenfunction_symbolic(const CoefficientTable& table, int j) {
  const GelfandPair& pair = table.pair;
  if (j < 1 || j > pair.ell()) throw DimensionError("generator index out of range");
  const int n = pair.n(), ell = pair.ell();
  const int d = pair.degrees[j - 1];
  if (table.max_degree < d) throw DepthError("table depth below generator degree");
  // Flattened variables (x_1..x_n, t_1..t_ell).
  const int nv = n + ell;
  auto embed_x = [&](const MultiIndex& I) {
    std::vector<int> e(nv, 0);
    for (int k = 0; k < n; ++k) e[k] = I[k];
    return MultiIndex(std::move(e));
  };
  auto embed_t = [&](const MultiIndex& J) {
    std::vector<int> e(nv, 0);
    for (int k = 0; k < ell; ++k) e[n + k] = J[k];
    return MultiIndex(std::move(e));
  };
  PolyG T(nv);
  for (const auto& [I, bI] : table.b)
    for (const auto& [J, c] : bI.terms()) T.add_term(embed_x(I) + embed_t(J), c);
  PolyG Dj(nv);
  for (const auto& [I, c] : pair.generators[j - 1].terms())
    Dj.add_term(embed_x(I), GaussRat(c));
  PolyG DT = apply_diff_operator(Dj, T);
  PolyG lam = PolyG::monomial(embed_t(MultiIndex::unit(ell, j - 1)), i_power(d));
  PolyG R = DT - lam * T;
  Rat worst(0);
  for (const auto& [I, c] : R.terms()) {
    long xdeg = 0;
    for (int k = 0; k < n; ++k) xdeg += I[k];
    if (xdeg > table.max_degree - d) continue;
    Rat v = c.norm1();
    if (v > worst) worst = v;
  }
  return worst;
}

double verify_symmetry(const GelfandPair& pair, std::span<const double> xi,
                       std::span<const double> x) {
  return std::abs(eval_spherical_direct(pair, xi, x) - eval_spherical_direct(pair, x, xi));
}

GaussRat special_case_a(const GelfandPair& pair, const MultiIndex& J, std::span<const Rat> xi) {
  long m = graded_degree(J, pair.degrees).value;
  auto chk = check_special_assumption(pair, m);
  if (!chk.holds) {
    const auto& [cj, cjp, v] = *chk.counterexample;
    throw Error("orthogonality assumption fails for this pair: (D^J rho^J')(0) = " +
                v.get_str() + " for J = " + cj.to_string() + ", J' = " + cjp.to_string());
  }
  // lambda(xi)^J = i^{|J|_rho} rho(xi)^J.
  std::vector<Rat> rho = pair.rho_exact(xi);
  GaussRat num = i_power(m);
  for (int k = 0; k < pair.ell(); ++k)
    for (int e = 0; e < J[k]; ++e) num *= GaussRat(rho[k]);
  PolyQ pw = pair.generator_power(J);
  Rat den = derivative_at_zero_pairing(pw, pw);
  if (den == 0) throw Error("degenerate pairing (D^J rho^J)(0) = 0");
  return num / GaussRat(den);
}

}  // namespace gelfand
