#include "gelfand/invariant_algebra.hpp"

#include <algorithm>
#include <map>

namespace gelfand {

std::vector<double> GelfandPair::rho(std::span<const double> x) const {
  std::vector<double> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.eval(x));
  return out;
}

std::vector<Rat> GelfandPair::rho_exact(std::span<const Rat> x) const {
  std::vector<Rat> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.eval(x));
  return out;
}

PolyQ GelfandPair::generator_power(const MultiIndex& J) const {
  if (J.size() != ell()) throw DimensionError("generator_power: index arity mismatch");
  PolyQ r = PolyQ::constant(n(), Rat(1));
  for (int k = 0; k < ell(); ++k)
    for (int e = 0; e < J[k]; ++e) r = r * generators[k];
  return r;
}

GelfandPair validate_pair(CompactGroup group, std::vector<PolyQ> generators, std::string name) {
  if (generators.empty()) throw ValidationError("generator list must be nonempty");
  GelfandPair pair;
  pair.degrees.reserve(generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    const PolyQ& g = generators[j];
    if (g.nvars() != group.n())
      throw DimensionError("generator " + std::to_string(j + 1) + " has " +
                           std::to_string(g.nvars()) + " variables, group acts on R^" +
                           std::to_string(group.n()));
    if (g.is_zero())
      throw ValidationError("generator " + std::to_string(j + 1) + " is the zero polynomial");
    if (!g.is_homogeneous())
      throw ValidationError("generator " + std::to_string(j + 1) + " is not homogeneous");
    if (auto w = invariance_witness(group, g)) {
      std::string msg = "generator " + std::to_string(j + 1) + " is not invariant";
      if (group.is_finite()) msg += " (witness: group element " + std::to_string(*w) + ")";
      throw ValidationError(msg);
    }
    pair.degrees.push_back(static_cast<int>(g.degree()));
  }
  pair.group = std::move(group);
  pair.generators = std::move(generators);
  pair.name = std::move(name);
  return pair;
}

std::vector<MultiIndex> enumerate_graded(long m, std::span<const int> degrees) {
  if (m < 0) throw ValidationError("graded degree must be non-negative");
  const int ell = static_cast<int>(degrees.size());
  std::vector<MultiIndex> out;
  std::vector<int> cur(ell, 0);
  auto rec = [&](auto&& self, int pos, long rem) -> void {
    if (pos == ell) {
      if (rem == 0) out.emplace_back(cur);
      return;
    }
    long top = degrees[pos] > 0 ? rem / degrees[pos] : 0;
    for (long e = top; e >= 0; --e) {
      cur[pos] = static_cast<int>(e);
      self(self, pos + 1, rem - e * degrees[pos]);
    }
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

MatQ expansion_matrix(const GelfandPair& pair, long m) {
  const auto rows = enumerate_exponents(pair.n(), m);
  const auto cols = enumerate_graded(m, pair.degrees);
  std::map<MultiIndex, int, GrlexLess> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], static_cast<int>(i));
  MatQ E(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    PolyQ pj = pair.generator_power(cols[j]);
    for (const auto& [I, c] : pj.terms()) E(row_of.at(I), static_cast<int>(j)) = c;
  }
  return E;
}

namespace {

/// Minimum-norm coefficients of one homogeneous invariant component.
std::optional<std::vector<Rat>> express_homogeneous(const GelfandPair& pair, const PolyQ& pm,
                                                    long m, const std::vector<MultiIndex>& cols) {
  const auto rows = enumerate_exponents(pair.n(), m);
  std::map<MultiIndex, int, GrlexLess> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], static_cast<int>(i));
  MatQ b(static_cast<int>(rows.size()), 1);
  for (const auto& [I, c] : pm.terms()) b(row_of.at(I), 0) = c;
  MatQ E = expansion_matrix(pair, m);
  auto X = min_norm_solve(E, b);
  if (!X) return std::nullopt;
  std::vector<Rat> out(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) out[j] = (*X)(static_cast<int>(j), 0);
  return out;
}

}  // namespace

PolyQ express_in_generators(const GelfandPair& pair, const PolyQ& p) {
  if (p.nvars() != pair.n()) throw DimensionError("express: polynomial arity mismatch");
  PolyQ q(pair.ell());
  for (const auto& [m, pm] : p.homogeneous_components()) {
    if (reynolds(pair.group, pm) != pm)
      throw InvarianceError("degree-" + std::to_string(m) +
                            " component is not invariant under the group");
    const auto cols = enumerate_graded(m, pair.degrees);
    auto a = express_homogeneous(pair, pm, m, cols);
    if (!a)
      throw ExpressibilityError(
          "degree-" + std::to_string(m) + " component is not in the generator algebra",
          "degree " + std::to_string(m));
    for (std::size_t j = 0; j < cols.size(); ++j) q.add_term(cols[j], (*a)[j]);
  }
  return q;
}

SpecialAssumptionResult check_special_assumption(const GelfandPair& pair, long M) {
  if (M < 0) throw ValidationError("truncation must be non-negative");
  std::vector<MultiIndex> all;
  for (long m = 0; m <= M; ++m) {
    auto js = enumerate_graded(m, pair.degrees);
    all.insert(all.end(), js.begin(), js.end());
  }
  std::sort(all.begin(), all.end(), GrlexLess{});
  std::vector<PolyQ> pw;
  pw.reserve(all.size());
  for (const auto& J : all) pw.push_back(pair.generator_power(J));
  SpecialAssumptionResult res;
  res.checked_to = M;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i == j) continue;
      Rat v = derivative_at_zero_pairing(pw[i], pw[j]);
      if (v != 0) {
        res.holds = false;
        res.counterexample = {all[i], all[j], v};
        return res;
      }
    }
  return res;
}

}  // namespace gelfand
