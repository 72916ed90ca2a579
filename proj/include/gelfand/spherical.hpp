#ifndef GELFAND_SPHERICAL_HPP
#define GELFAND_SPHERICAL_HPP

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "gelfand/invariant_algebra.hpp"

namespace gelfand {

/// Parameter point of a spherical function; phi_xi depends only on the orbit
/// of xi.
struct SphericalPoint {
  std::vector<double> xi;
};

/// A point of the spectrum, identified with rho(R^n) in R^ell, together with
/// the xi realizing it.
struct SpectrumPoint {
  std::vector<double> lambda;
  std::vector<double> witness_xi;
};

SpectrumPoint make_spectrum_point(const GelfandPair& pair, std::span<const double> xi);

/// phi_xi(x) = Haar average of exp(i <x, k xi>).  For finite groups the
/// phases are accumulated as exact rationals and summed in sorted order, so
/// the symmetry phi_xi(x) = phi_x(xi) holds bit-for-bit.
std::complex<double> eval_spherical_direct(const GelfandPair& pair, std::span<const double> xi,
                                           std::span<const double> x);

/// Eigenvalue of D_j on phi_xi: i^{deg rho_j} rho_j(xi).  j is 1-based.
std::complex<double> spherical_eigenvalue(const GelfandPair& pair, int j,
                                          std::span<const double> xi);
GaussRat spherical_eigenvalue_exact(const GelfandPair& pair, int j, std::span<const Rat> xi);

/// Exact per-degree tables: b[I] is the generator polynomial with
/// I! b[I](rho(xi)) = (d^I phi_xi)(0), carrying its i^{|I|} phase as an exact
/// Gaussian rational; a[J] = q_J, so that the homogeneous parts written in the
/// monomial and in the generator basis coincide through the expansion matrix.
/// Entries not stored are zero.
struct CoefficientTable {
  GelfandPair pair;
  long max_degree = 0;
  std::map<MultiIndex, PolyG, GrlexLess> b;
  std::map<MultiIndex, PolyG, GrlexLess> a;

  PolyG b_at(const MultiIndex& I) const;
  PolyG a_at(const MultiIndex& J) const;
};

/// Builds b and a to plain/graded degree M.  b[I] comes from the monomial
/// Reynolds route (the group average of x^I expressed in the generators);
/// a solves the expansion system per degree with the minimum-norm rule.
/// Throws ExpressibilityError naming the offending monomial if some group
/// average escapes the generator algebra (incomplete generator set).
CoefficientTable build_coefficient_table(const GelfandPair& pair, long M);

/// Truncated series h_xi(t) = sum_J q_J(rho(xi)) t^J for a concrete xi.
struct HSeries {
  int ell = 0;
  long M = 0;
  std::vector<double> xi;
  std::vector<int> degrees;  // generator degrees, for graded bookkeeping
  std::vector<std::pair<MultiIndex, std::complex<double>>> terms;  // canonical order
};

HSeries build_h_series(const CoefficientTable& table, std::span<const double> xi);

/// Exact coefficients q_J(rho(xi)) for rational xi (test-grade accessor).
std::map<MultiIndex, GaussRat, GrlexLess> build_h_series_exact(const CoefficientTable& table,
                                                               std::span<const Rat> xi);

std::complex<double> eval_h_series(const HSeries& h, std::span<const double> t);

/// Coefficient mass of the top graded band at t: an empirical remainder proxy
/// for the truncation error.
double h_series_tail_mass(const HSeries& h, std::span<const double> t);

/// Maximal delta of h_xi(t) between tables of depth M and 2M over the probe
/// points; the doubling stability check for a truncation level.
double truncation_stability_delta(const GelfandPair& pair, long M,
                                  std::span<const std::vector<double>> xis,
                                  std::span<const std::vector<double>> ts);

/// Applies D_j to the reconstructed degree-<=M Taylor polynomial of phi_xi at
/// an exact rational xi, subtracts lambda_j(xi) times it, and returns the
/// largest coefficient magnitude (|re|+|im|) on degrees <= M - deg(rho_j).
/// Exact; zero is the expected value.  j is 1-based.
Rat verify_eigenfunction(const CoefficientTable& table, int j, std::span<const Rat> xi);

/// Same residual with xi kept symbolic through t = rho(xi); valid as an exact
/// zero test when the generators are algebraically independent (for related
/// generators the residual vanishes only on the relation variety, so use the
/// concrete-xi form there).
Rat verify_eigenfunction_symbolic(const CoefficientTable& table, int j);

/// |phi_xi(x) - phi_x(xi)|; exactly zero for finite groups.
double verify_symmetry(const GelfandPair& pair, std::span<const double> xi,
                       std::span<const double> x);

/// Closed-form coefficient lambda(xi)^J / (D^J rho^J)(0), valid whenever the
/// orthogonality assumption holds up to |J|'s graded degree; refuses with the
/// detector's counterexample otherwise.
GaussRat special_case_a(const GelfandPair& pair, const MultiIndex& J, std::span<const Rat> xi);

}  // namespace gelfand

#endif
