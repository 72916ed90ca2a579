#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gelfand/builtin.hpp"
#include "gelfand/spherical.hpp"
#include "oracles.hpp"

using namespace gelfand;

namespace {

PolyG g_from_terms(int n, std::initializer_list<std::pair<std::vector<int>, GaussRat>> ts) {
  PolyG p(n);
  for (const auto& [e, c] : ts) p.add_term(MultiIndex(e), c);
  return p;
}

}  // namespace

TEST_CASE("eval_spherical_direct: trivial, z2, so2") {
  GelfandPair trivial = make_builtin_pair("trivial");
  std::vector<double> xi{1.0, 0.0}, x{M_PI, 0.0};
  auto v = eval_spherical_direct(trivial, xi, x);
  CHECK(v.real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(v.imag()) < 1e-15);

  GelfandPair z2 = make_builtin_pair("z2-r2");
  std::vector<double> xi2{1.0, 1.0}, x2{M_PI / 2, M_PI / 2};
  auto v2 = eval_spherical_direct(z2, xi2, x2);
  // Two-term average (e^{i pi} + e^{-i pi})/2 = cos(pi) = -1.
  CHECK(v2.real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(v2.imag() == 0.0);

  GelfandPair so2 = make_builtin_pair("so2");
  std::vector<double> e1{1.0, 0.0};
  auto v3 = eval_spherical_direct(so2, e1, e1);
  CHECK(std::abs(v3.real() - 0.7651976865579666) < 1e-10);  // J_0(1)
  CHECK(std::abs(v3.imag()) < 1e-14);

  // Normalization at the origin is exact for finite groups.
  std::vector<double> zero{0.0, 0.0};
  CHECK(eval_spherical_direct(z2, xi2, zero) == std::complex<double>(1.0, 0.0));
  CHECK(eval_spherical_direct(trivial, xi, zero) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("spherical boundedness and orbit constancy") {
  std::mt19937 gen(2024);
  GelfandPair z2 = make_builtin_pair("z2-r2");
  GelfandPair so2 = make_builtin_pair("so2");
  for (int trial = 0; trial < 25; ++trial) {
    auto xi = oracles::ball_point(gen, 2, 3.0);
    auto x = oracles::ball_point(gen, 2, 3.0);
    CHECK(std::abs(eval_spherical_direct(z2, xi, x)) <= 1.0 + 1e-12);
    CHECK(std::abs(eval_spherical_direct(so2, xi, x)) <= 1.0 + 1e-10);
    // Orbit label: xi and -xi give the same spherical function (exact for Z2).
    std::vector<double> mxi{-xi[0], -xi[1]};
    CHECK(eval_spherical_direct(z2, xi, x) == eval_spherical_direct(z2, mxi, x));
    // SO(2): any rotation of xi, up to quadrature tolerance.
    double c = std::cos(0.83), s = std::sin(0.83);
    std::vector<double> rxi{c * xi[0] - s * xi[1], s * xi[0] + c * xi[1]};
    CHECK(std::abs(eval_spherical_direct(so2, xi, x) - eval_spherical_direct(so2, rxi, x)) <
          1e-10);
  }
}

TEST_CASE("verify_symmetry") {
  std::mt19937 gen(7);
  for (const char* name : {"trivial", "z2-r2"}) {
    GelfandPair pair = make_builtin_pair(name);
    for (int trial = 0; trial < 25; ++trial) {
      auto xi = oracles::ball_point(gen, 2, 2.5);
      auto x = oracles::ball_point(gen, 2, 2.5);
      CHECK(verify_symmetry(pair, xi, x) == 0.0);  // exact for finite groups
    }
  }
  GelfandPair so2 = make_builtin_pair("so2");
  std::vector<double> xi{1.0, 0.0}, x{0.0, 2.0};
  CHECK(verify_symmetry(so2, xi, x) <= 1e-10);
  // Both sides equal J_0(2).
  auto a = eval_spherical_direct(so2, xi, x);
  CHECK(std::abs(a.real() - oracles::bessel_j_series(0, 2.0)) < 1e-10);
}

TEST_CASE("spherical_eigenvalue") {
  GelfandPair so2 = make_builtin_pair("so2");
  std::vector<double> xi{2.0, 0.0};
  auto lam = spherical_eigenvalue(so2, 1, xi);
  CHECK(lam.real() == doctest::Approx(-4.0));  // i^2 * |xi|^2
  CHECK(lam.imag() == 0.0);

  std::vector<double> zero{0.0, 0.0};
  CHECK(spherical_eigenvalue(so2, 1, zero) == std::complex<double>(0.0, 0.0));

  GelfandPair z2 = make_builtin_pair("z2-r2");
  std::vector<double> xi2{1.0, 2.0};
  CHECK(spherical_eigenvalue(z2, 2, xi2).real() == doctest::Approx(-2.0));

  CHECK_THROWS_AS(spherical_eigenvalue(z2, 4, xi2), DimensionError);
  CHECK_THROWS_AS(spherical_eigenvalue(z2, 0, xi2), DimensionError);

  // Exact flavor and spectrum representation.
  std::vector<Rat> xr{Rat(1), Rat(2)};
  CHECK(spherical_eigenvalue_exact(z2, 2, xr) == GaussRat(Rat(-2)));
  GelfandPair trivial = make_builtin_pair("trivial");
  std::vector<Rat> t1{Rat(3), Rat(-1)};
  CHECK(spherical_eigenvalue_exact(trivial, 1, t1) == GaussRat(Rat(0), Rat(3)));
  auto sp = make_spectrum_point(z2, std::vector<double>{1.0, 2.0});
  CHECK(sp.lambda == std::vector<double>{1.0, 2.0, 4.0});
}

TEST_CASE("coefficient table: z2 low-degree entries") {
  GelfandPair z2 = make_builtin_pair("z2-r2");
  CoefficientTable table = build_coefficient_table(z2, 4);

  CHECK(table.b_at(MultiIndex({1, 0})).is_zero());  // odd monomial averages to 0
  // b[(2,0)] = -t1/2.
  CHECK(table.b_at(MultiIndex({2, 0})) ==
        g_from_terms(3, {{{1, 0, 0}, GaussRat(make_rat(-1, 2))}}));
  // b[(0,0)] = 1.
  CHECK(table.b_at(MultiIndex({0, 0})) == g_from_terms(3, {{{0, 0, 0}, GaussRat(Rat(1))}}));
  // a at J=(0,1,0) is q = -t2 (degree-2 band of the cosine).
  CHECK(table.a_at(MultiIndex({0, 1, 0})) ==
        g_from_terms(3, {{{0, 1, 0}, GaussRat(Rat(-1))}}));
  // M = 0 keeps only q_0 = 1.
  CoefficientTable t0 = build_coefficient_table(z2, 0);
  CHECK(t0.a.size() == 1);
  CHECK(t0.a_at(MultiIndex({0, 0, 0})) == g_from_terms(3, {{{0, 0, 0}, GaussRat(Rat(1))}}));
}

TEST_CASE("coefficient table: so2 matches the classical radial series") {
  GelfandPair so2 = make_builtin_pair("so2");
  CoefficientTable table = build_coefficient_table(so2, 16);
  // a_k = i^{2k} / (Gamma-ratio * k! * 2^{2k}) = (-1)^k / (4^k (k!)^2) for n=2.
  for (int k = 0; k <= 8; ++k) {
    GaussRat want = i_power(2 * k) *
                    GaussRat(Rat(1) / Rat(oracles::gamma_ratio_half(2, k) *
                                          Rat(factorial(k)) * Rat(Int(1) << (2 * k))));
    PolyG got = table.a_at(MultiIndex({k}));
    REQUIRE(got.term_count() == 1);
    CHECK(got.coeff(MultiIndex({k})) == want);
  }
  // b at (2,0) = -t/4: coefficient of x1^2 in the J0 series.
  CHECK(table.b_at(MultiIndex({2, 0})) ==
        g_from_terms(1, {{{1}, GaussRat(make_rat(-1, 4))}}));
}

TEST_CASE("coefficient table: incomplete generator set surfaces the monomial") {
  CompactGroup z2g = make_builtin_pair("z2-r2").group;
  PolyQ x1sq(2);
  x1sq.add_term(MultiIndex({2, 0}), Rat(1));
  GelfandPair incomplete = validate_pair(z2g, {x1sq});
  try {
    build_coefficient_table(incomplete, 2);
    FAIL("expected ExpressibilityError");
  } catch (const ExpressibilityError& e) {
    CHECK(e.offending_index == "(0,2)");
  }
}

TEST_CASE("coefficient table invariant: a-terms expand to b-terms per degree") {
  for (const char* name : {"z2-r2", "so2", "trivial"}) {
    GelfandPair pair = make_builtin_pair(name);
    CoefficientTable table = build_coefficient_table(pair, 8);
    for (long m = 0; m <= 8; ++m) {
      // sum_J a_J rho(x)^J == sum_I b_I x^I at degree m, as polynomials in
      // (x, t): expand the a-side through the generator powers.
      PolyG lhs(pair.n() + pair.ell()), rhs(pair.n() + pair.ell());
      auto embed = [&](const MultiIndex& I, const MultiIndex& J) {
        std::vector<int> e(pair.n() + pair.ell(), 0);
        for (int i = 0; i < pair.n(); ++i) e[i] = I[i];
        for (int k = 0; k < pair.ell(); ++k) e[pair.n() + k] = J[k];
        return MultiIndex(std::move(e));
      };
      for (const auto& J : enumerate_graded(m, pair.degrees)) {
        PolyG q = table.a_at(J);
        PolyQ pw = pair.generator_power(J);
        for (const auto& [alpha, c] : q.terms())
          for (const auto& [I, d] : pw.terms()) lhs.add_term(embed(I, alpha), c * GaussRat(d));
      }
      for (const auto& I : enumerate_exponents(pair.n(), m))
        for (const auto& [alpha, c] : table.b_at(I).terms()) rhs.add_term(embed(I, alpha), c);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("z2 table against the brute-force cosine expansion") {
  GelfandPair z2 = make_builtin_pair("z2-r2");
  const long M = 10;
  CoefficientTable table = build_coefficient_table(z2, M);
  // cos<x, xi> expanded in flattened (x1, x2, xi1, xi2).
  PolyQ cosexp = oracles::cos_inner_product_expansion(2, M);
  for (const auto& I : enumerate_exponents(2, 4)) {
    // Extract the xi-polynomial multiplying x^I.
    PolyQ bxi(2);
    for (const auto& [E, c] : cosexp.terms()) {
      if (E[0] == I[0] && E[1] == I[1]) bxi.add_term(MultiIndex({E[2], E[3]}), c);
    }
    // Canonicalize through the generators and compare with b[I].
    PolyQ canon = express_in_generators(z2, bxi);
    CHECK(convert_poly<GaussRat>(canon) == table.b_at(I));
  }
}

TEST_CASE("z2 fiber sums reproduce the cosine coefficients with the derived sign") {
  // For each monomial x1^p x2^q (p, q even sums), the a-coefficients along
  // the relation fiber {(p-s, s, q-s)} must add up to the cosine coefficient
  // (-1)^{(p+q)/2} xi1^p xi2^q / (p! q!).  The sign alternates with the
  // degree; it is not a fixed minus.
  GelfandPair z2 = make_builtin_pair("z2-r2");
  CoefficientTable table = build_coefficient_table(z2, 12);
  std::vector<Rat> xi{make_rat(3, 2), make_rat(-2, 3)};
  std::vector<GaussRat> rho_xi;
  for (const auto& g : z2.generators) rho_xi.emplace_back(g.eval(xi));
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 6; ++q) {
      if ((p + q) % 2 != 0 || p + q == 0 || p + q > 12) continue;
      GaussRat sum(Rat(0));
      for (int s = 0; s <= std::min(p, q); ++s) {
        if ((p - s) % 2 == 0 && (q - s) % 2 == 0) {
          MultiIndex J({(p - s) / 2, s, (q - s) / 2});
          sum += table.a_at(J).eval(std::span<const GaussRat>(rho_xi));
        }
      }
      long m = (p + q) / 2;
      Rat want = Rat(m % 2 == 0 ? 1 : -1);
      for (int e = 0; e < p; ++e) want *= xi[0];
      for (int e = 0; e < q; ++e) want *= xi[1];
      want /= Rat(factorial(p) * factorial(q));
      CHECK(sum == GaussRat(want));
    }
}

TEST_CASE("h series: normalization, z2 degree-2 band, so2 Bessel") {
  GelfandPair z2 = make_builtin_pair("z2-r2");
  CoefficientTable tz2 = build_coefficient_table(z2, 40);
  std::vector<Rat> xi11{Rat(1), Rat(1)};
  auto exact = build_h_series_exact(tz2, xi11);
  CHECK(exact.at(MultiIndex({0, 0, 0})) == GaussRat(Rat(1)));
  CHECK(exact.at(MultiIndex({1, 0, 0})) == GaussRat(make_rat(-1, 2)));
  CHECK(exact.at(MultiIndex({0, 1, 0})) == GaussRat(Rat(-1)));
  CHECK(exact.at(MultiIndex({0, 0, 1})) == GaussRat(make_rat(-1, 2)));

  std::vector<double> xi11d{1.0, 1.0};
  HSeries h = build_h_series(tz2, xi11d);
  std::vector<double> zero3{0.0, 0.0, 0.0};
  CHECK(eval_h_series(h, zero3) == std::complex<double>(1.0, 0.0));

  // h at t = rho(pi/2, pi/2) reproduces cos(pi) = -1.
  double a = M_PI * M_PI / 4;
  std::vector<double> t{a, a, a};
  CHECK(std::abs(eval_h_series(h, t) - std::complex<double>(-1.0, 0.0)) < 1e-10);

  GelfandPair so2 = make_builtin_pair("so2");
  CoefficientTable tso2 = build_coefficient_table(so2, 30);
  std::vector<double> e1{1.0, 0.0};
  HSeries hso2 = build_h_series(tso2, e1);
  // Coefficients (-1)^k / (4^k (k!)^2).
  for (const auto& [J, c] : hso2.terms) {
    int k = J[0];
    double want = (k % 2 ? -1.0 : 1.0) / (std::pow(4.0, k) * std::pow(std::tgamma(k + 1.0), 2));
    CHECK(c.real() == doctest::Approx(want).epsilon(1e-12));
  }
  std::vector<double> one{1.0};
  CHECK(std::abs(eval_h_series(hso2, one).real() - oracles::bessel_j_series(0, 1.0)) < 1e-12);
}

TEST_CASE("series agrees with direct evaluation inside the validated ball") {
  GelfandPair z2 = make_builtin_pair("z2-r2");
  CoefficientTable table = build_coefficient_table(z2, 30);
  std::mt19937 gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto xi = oracles::ball_point(gen, 2, 2.0);
    auto x = oracles::ball_point(gen, 2, 2.0);
    HSeries h = build_h_series(table, xi);
    auto series = eval_h_series(h, z2.rho(x));
    auto direct = eval_spherical_direct(z2, xi, x);
    CHECK(std::abs(series - direct) < 1e-10);
    CHECK(h_series_tail_mass(h, z2.rho(x)) < 1e-10);
  }
}

TEST_CASE("truncation stability under doubling") {
  // Inside the validated ball (|x|, |xi| <= 2) the default depth M = 30 is
  // stable under doubling; shallow depths outside the ball are not, which is
  // exactly what the check is for.
  GelfandPair so2 = make_builtin_pair("so2");
  std::vector<std::vector<double>> xis{{1.0, 0.0}, {1.5, 1.0}};
  std::vector<std::vector<double>> ts{{1.0}, {4.0}};
  CHECK(truncation_stability_delta(so2, 30, xis, ts) < 1e-12);
  CHECK(truncation_stability_delta(so2, 8, xis, ts) > 1e-6);

  GelfandPair z2 = make_builtin_pair("z2-r2");
  std::vector<std::vector<double>> xis2{{1.0, 1.0}};
  std::vector<std::vector<double>> ts2{{1.0, 1.0, 1.0}, {2.25, 2.25, 2.25}};
  CHECK(truncation_stability_delta(z2, 24, xis2, ts2) < 1e-12);
}

TEST_CASE("verify_eigenfunction: exact residuals at rational xi") {
  std::vector<Rat> xi2{Rat(1), Rat(2)};
  std::vector<Rat> xi2b{make_rat(3, 2), make_rat(-1, 3)};
  for (const char* name : {"trivial", "z2-r2", "so2"}) {
    GelfandPair pair = make_builtin_pair(name);
    CoefficientTable table = build_coefficient_table(pair, 12);
    for (int j = 1; j <= pair.ell(); ++j) {
      CHECK(verify_eigenfunction(table, j, xi2) == 0);
      CHECK(verify_eigenfunction(table, j, xi2b) == 0);
    }
  }
}

TEST_CASE("verify_eigenfunction: symbolic xi for relation-free pairs") {
  GelfandPair so2 = make_builtin_pair("so2");
  CoefficientTable t1 = build_coefficient_table(so2, 20);
  CHECK(verify_eigenfunction_symbolic(t1, 1) == 0);

  GelfandPair trivial = make_builtin_pair("trivial");
  CoefficientTable t2 = build_coefficient_table(trivial, 10);
  CHECK(verify_eigenfunction_symbolic(t2, 1) == 0);
  CHECK(verify_eigenfunction_symbolic(t2, 2) == 0);

  CHECK_THROWS_AS(verify_eigenfunction_symbolic(build_coefficient_table(so2, 1), 1), DepthError);
}

TEST_CASE("special_case_a") {
  GelfandPair so2 = make_builtin_pair("so2");
  std::vector<Rat> e1{Rat(1), Rat(0)};
  // J = 2: lambda^J / (D^2 rho^2)(0) = 1/64.
  CHECK(special_case_a(so2, MultiIndex({2}), e1) == GaussRat(make_rat(1, 64)));
  CHECK(special_case_a(so2, MultiIndex({0}), e1) == GaussRat(Rat(1)));

  // Trivial pair, J = e_j: i xi_j.
  GelfandPair trivial = make_builtin_pair("trivial");
  std::vector<Rat> xi{make_rat(2, 3), Rat(5)};
  CHECK(special_case_a(trivial, MultiIndex({1, 0}), xi) ==
        GaussRat(Rat(0), make_rat(2, 3)));
  CHECK(special_case_a(trivial, MultiIndex({0, 1}), xi) == GaussRat(Rat(0), Rat(5)));

  // Consistency with the general pipeline wherever the assumption holds.
  CoefficientTable table = build_coefficient_table(so2, 12);
  std::vector<GaussRat> rho{GaussRat(Rat(1))};  // rho(e1) = 1
  for (int k = 0; k <= 6; ++k) {
    CHECK(special_case_a(so2, MultiIndex({k}), e1) ==
          table.a_at(MultiIndex({k})).eval(std::span<const GaussRat>(rho)));
  }

  // Refusal with counterexample for the related pair.
  GelfandPair z2 = make_builtin_pair("z2-r2");
  std::vector<Rat> xi2{Rat(1), Rat(1)};
  CHECK_THROWS_WITH_AS(special_case_a(z2, MultiIndex({1, 0, 1}), xi2),
                       doctest::Contains("(1,0,1)"), Error);
}

TEST_CASE("b-table against numerical differentiation of phi") {
  // Central finite differences of the direct Haar evaluation at 0 vs
  // I! b_I(rho(xi)), low orders.
  GelfandPair z2 = make_builtin_pair("z2-r2");
  CoefficientTable table = build_coefficient_table(z2, 3);
  std::vector<Rat> xir{make_rat(1, 2), Rat(1)};
  std::vector<double> xid{0.5, 1.0};
  const double h = 1e-3;
  auto phi = [&](double u, double v) {
    std::vector<double> x{u, v};
    return eval_spherical_direct(z2, xid, x);
  };
  // d^2/dx1^2 at 0.
  std::complex<double> d20 = (phi(h, 0) - 2.0 * phi(0, 0) + phi(-h, 0)) / (h * h);
  std::vector<Rat> rho_r = z2.rho_exact(xir);
  std::vector<GaussRat> rho(rho_r.begin(), rho_r.end());
  auto b20 = table.b_at(MultiIndex({2, 0})).eval(std::span<const GaussRat>(rho));
  CHECK(std::abs(d20 - 2.0 * to_complex(b20)) < 1e-5);
  // Mixed d^2/dx1 dx2 at 0.
  std::complex<double> d11 =
      (phi(h, h) - phi(h, -h) - phi(-h, h) + phi(-h, -h)) / (4.0 * h * h);
  auto b11 = table.b_at(MultiIndex({1, 1})).eval(std::span<const GaussRat>(rho));
  CHECK(std::abs(d11 - to_complex(b11)) < 1e-5);
}
