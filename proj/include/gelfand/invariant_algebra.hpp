#ifndef GELFAND_INVARIANT_ALGEBRA_HPP
#define GELFAND_INVARIANT_ALGEBRA_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gelfand/compact_group.hpp"
#include "gelfand/linalg.hpp"
#include "gelfand/polynomial.hpp"

namespace gelfand {

/// A validated (group, generator list) bundle.  Generators are homogeneous,
/// nonzero, K-invariant rational polynomials; degrees[j] = deg(rho_j).
struct GelfandPair {
  CompactGroup group;
  std::vector<PolyQ> generators;
  std::vector<int> degrees;
  std::string name;

  int n() const { return group.n(); }
  int ell() const { return static_cast<int>(generators.size()); }

  /// rho(x) = (rho_1(x), ..., rho_ell(x)) at a real point.
  std::vector<double> rho(std::span<const double> x) const;
  /// Exact image for rational points.
  std::vector<Rat> rho_exact(std::span<const Rat> x) const;
  /// rho(x)^J.
  PolyQ generator_power(const MultiIndex& J) const;
};

GelfandPair validate_pair(CompactGroup group, std::vector<PolyQ> generators,
                          std::string name = {});

/// All J >= 0 with sum J_k deg_k = m, complete and duplicate-free, in the
/// canonical term order.
std::vector<MultiIndex> enumerate_graded(long m, std::span<const int> degrees);

/// Columns are the degree-m monomial coefficient vectors of rho(x)^J; rows are
/// indexed by enumerate_exponents(n, m) and columns by enumerate_graded(m).
MatQ expansion_matrix(const GelfandPair& pair, long m);

/// Writes a K-invariant p as q(rho_1, ..., rho_ell).  Per homogeneous degree
/// the coefficient vector is the minimum-Euclidean-norm exact solution of the
/// expansion system, which makes the representative canonical when the
/// generators satisfy relations.
PolyQ express_in_generators(const GelfandPair& pair, const PolyQ& p);

struct SpecialAssumptionResult {
  bool holds = true;
  long checked_to = 0;
  // First violating pair in canonical order, with the nonzero pairing value.
  std::optional<std::tuple<MultiIndex, MultiIndex, Rat>> counterexample;
};

/// Exhaustively tests (D^J rho^{J'})(0) = 0 over all pairs J != J' with graded
/// degrees <= M via the derivative pairing; exact.
SpecialAssumptionResult check_special_assumption(const GelfandPair& pair, long M);

}  // namespace gelfand

#endif
