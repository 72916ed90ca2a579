#ifndef GELFAND_COMPACT_GROUP_HPP
#define GELFAND_COMPACT_GROUP_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/linalg.hpp"
#include "gelfand/polynomial.hpp"

namespace gelfand {

/// One Haar quadrature node: a rotation matrix (row-major doubles) and its
/// weight.  For finite groups the weight is 1/|K| and the matrix is the
/// rounded image of the exact element.
struct HaarNode {
  std::vector<double> mat;  // n*n row-major
  double weight = 0.0;
};

inline std::vector<double> apply_node(const HaarNode& k, int n, std::span<const double> v) {
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += k.mat[static_cast<std::size_t>(i) * n + j] * v[j];
  return out;
}

/// Raw, unvalidated description of a compact group.
struct RawGroup {
  std::string kind;  // "finite" | "so2" | "so3"
  int n = 0;
  std::vector<MatQ> matrices;             // finite
  std::optional<int> quadrature_points;   // so2
  std::optional<int> resolution;          // so3
  std::optional<std::string> rule;        // so3, default "euler-zyz"
};

/// A compact subgroup of O(n): a finite rational matrix group held exactly,
/// or SO(2)/SO(3) with a normalized Haar quadrature.  Immutable once built.
class CompactGroup {
 public:
  enum class Kind { finite, so2, so3 };

  /// Empty placeholder; real groups come from validate_group and friends.
  CompactGroup() = default;

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  bool is_finite() const { return kind_ == Kind::finite; }

  const std::vector<MatQ>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int quadrature_points() const { return so2_points_; }
  int resolution() const { return so3_resolution_; }
  const std::string& rule() const { return so3_rule_; }

  /// Haar quadrature nodes; exact mean for finite groups, trapezoid for SO(2),
  /// the named product rule for SO(3).  Weights are positive and sum to 1.
  const std::vector<HaarNode>& haar_nodes() const { return nodes_; }

  std::string describe() const;

  friend CompactGroup validate_group(const RawGroup& raw);
  friend CompactGroup make_so2_group(int quadrature_points, int n);
  friend CompactGroup make_so3_group(int resolution, const std::string& rule);

 private:
  void build_nodes();

  Kind kind_ = Kind::finite;
  int n_ = 0;
  std::vector<MatQ> elements_;
  int so2_points_ = 0;
  int so3_resolution_ = 0;
  std::string so3_rule_;
  std::vector<HaarNode> nodes_;
};

/// Validates a raw description: exact orthogonality, closure and identity for
/// finite groups; positive node counts for the quadrature groups.
CompactGroup validate_group(const RawGroup& raw);

CompactGroup make_finite_group(std::vector<MatQ> elements);
CompactGroup make_so2_group(int quadrature_points = 256, int n = 2);
CompactGroup make_so3_group(int resolution = 16, const std::string& rule = "euler-zyz");

/// Normalized Haar average of F over the group; exact arithmetic mean for
/// finite groups, quadrature otherwise.  Fixed summation order.
std::complex<double> haar_average_scalar(
    const CompactGroup& K, const std::function<std::complex<double>(const HaarNode&)>& F);

/// Reynolds operator p -> average of x -> p(k x).  Exact for finite groups;
/// for SO(2)/SO(3) computed from closed-form sphere moments (every monomial
/// average is a rational multiple of a power of |x|^2), not by sampling.
PolyQ reynolds(const CompactGroup& K, const PolyQ& p);

/// For finite groups: index of the first element under which p moves, if any.
/// For quadrature groups falls back to the exact Reynolds fixed-point test
/// (returns 0 as a pseudo-witness when that fails).
std::optional<int> invariance_witness(const CompactGroup& K, const PolyQ& p);

}  // namespace gelfand

#endif
