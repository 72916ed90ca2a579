#ifndef GELFAND_BUILTIN_HPP
#define GELFAND_BUILTIN_HPP

#include <string>
#include <vector>

#include "gelfand/transform.hpp"

namespace gelfand {

/// Catalog of built-in pairs: "trivial" ({Id} on R^2 with coordinate
/// generators), "z2-r2" ({+-Id} on R^2 with x1^2, x1 x2, x2^2), "so2"
/// (rotations of R^2 with |x|^2), "so3" (rotations of R^3 with |x|^2).
std::vector<std::string> builtin_pair_names();
bool is_builtin_pair(const std::string& name);
GelfandPair make_builtin_pair(const std::string& name);

/// Per-builtin defaults used by the command-line pipelines.
struct BuiltinDefaults {
  long max_degree = 30;
  double quad_radius = 1.5;
  int quad_nodes = 64;
  std::vector<double> demo_xi;
};
BuiltinDefaults builtin_defaults(const std::string& name);

/// The smooth compactly supported test profile exp(-1/(1 - |x/r|^2)) on
/// |x| < r, extended by zero; O(n)-invariant, so invariant for every pair.
InvariantFunction make_radial_bump(const CompactGroup& K, double radius = 1.0,
                                   double amplitude = 1.0);

/// exp(-|x|^2/2); unbounded support, for transform calibration only.
InvariantFunction make_gaussian(const CompactGroup& K);

}  // namespace gelfand

#endif
