#ifndef GELFAND_MULTI_INDEX_HPP
#define GELFAND_MULTI_INDEX_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gelfand/errors.hpp"
#include "gelfand/rational.hpp"

namespace gelfand {

/// Exponent vector of a monomial; entries are non-negative.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int v : e_)
      if (v < 0) throw ValidationError("multi-index with negative entry");
  }
  static MultiIndex zeros(int n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex unit(int n, int j) {
    std::vector<int> e(n, 0);
    e.at(j) = 1;
    return MultiIndex(std::move(e));
  }

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int j) const { return e_[j]; }
  const std::vector<int>& exponents() const { return e_; }

  /// Plain degree: the entry sum.
  long degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

  /// I! = i_1! ... i_n!, exact.
  Int index_factorial() const {
    Int f(1);
    for (int v : e_) f *= factorial(v);
    return f;
  }

  bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
  bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }

  /// Componentwise I <= J.
  bool divides(const MultiIndex& o) const {
    if (size() != o.size()) return false;
    for (int j = 0; j < size(); ++j)
      if (e_[j] > o.e_[j]) return false;
    return true;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    if (size() != o.size()) throw DimensionError("multi-index length mismatch");
    std::vector<int> r(e_);
    for (int j = 0; j < size(); ++j) r[j] += o.e_[j];
    return MultiIndex(std::move(r));
  }

  /// this - o; requires o.divides(*this).
  MultiIndex operator-(const MultiIndex& o) const {
    if (!o.divides(*this)) throw DimensionError("multi-index subtraction out of range");
    std::vector<int> r(e_);
    for (int j = 0; j < size(); ++j) r[j] -= o.e_[j];
    return MultiIndex(std::move(r));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (int j = 0; j < size(); ++j) os << (j ? "," : "") << e_[j];
    os << ')';
    return os.str();
  }

 private:
  std::vector<int> e_;
};

/// Weighted degree |J| = sum j_k * deg_k for a generator-degree vector.
struct GradedDegree {
  long value = 0;
};

inline GradedDegree graded_degree(const MultiIndex& J, std::span<const int> degs) {
  if (J.size() != static_cast<int>(degs.size()))
    throw DimensionError("graded_degree: index length " + std::to_string(J.size()) +
                         " vs " + std::to_string(degs.size()) + " degrees");
  long v = 0;
  for (int k = 0; k < J.size(); ++k) v += static_cast<long>(J[k]) * degs[k];
  return GradedDegree{v};
}

/// Canonical term order: plain degree ascending, ties broken lexicographically
/// with the larger leading exponents first.  All serialized term lists and
/// matrix row/column orderings use this comparator.
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
  }
};

/// All exponent vectors of length nvars with plain degree m, in canonical order.
inline std::vector<MultiIndex> enumerate_exponents(int nvars, long m) {
  std::vector<MultiIndex> out;
  if (nvars == 0) {
    if (m == 0) out.push_back(MultiIndex(std::vector<int>{}));
    return out;
  }
  std::vector<int> cur(nvars, 0);
  auto rec = [&](auto&& self, int pos, long rem) -> void {
    if (pos == nvars - 1) {
      cur[pos] = static_cast<int>(rem);
      out.emplace_back(cur);
      return;
    }
    for (long e = rem; e >= 0; --e) {
      cur[pos] = static_cast<int>(e);
      self(self, pos + 1, rem - e);
    }
  };
  rec(rec, 0, m);
  return out;
}

}  // namespace gelfand

#endif
