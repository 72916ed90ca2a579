#include "gelfand/builtin.hpp"

#include <algorithm>
#include <cmath>

namespace gelfand {

std::vector<std::string> builtin_pair_names() { return {"trivial", "z2-r2", "so2", "so3"}; }

bool is_builtin_pair(const std::string& name) {
  auto names = builtin_pair_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

MatQ scaled_identity(int n, int s) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rat(s);
  return m;
}

PolyQ sq(int n, int i) {
  return PolyQ::monomial(MultiIndex::unit(n, i) + MultiIndex::unit(n, i), Rat(1));
}

PolyQ norm2_poly(int n) {
  PolyQ p(n);
  for (int i = 0; i < n; ++i) p += sq(n, i);
  return p;
}

}  // namespace

GelfandPair make_builtin_pair(const std::string& name) {
  if (name == "trivial") {
    CompactGroup K = make_finite_group({scaled_identity(2, 1)});
    return validate_pair(std::move(K), {PolyQ::variable(2, 0), PolyQ::variable(2, 1)}, name);
  }
  if (name == "z2-r2") {
    CompactGroup K = make_finite_group({scaled_identity(2, 1), scaled_identity(2, -1)});
    PolyQ p12(2);
    p12.add_term(MultiIndex({1, 1}), Rat(1));
    return validate_pair(std::move(K), {sq(2, 0), p12, sq(2, 1)}, name);
  }
  if (name == "so2") {
    return validate_pair(make_so2_group(), {norm2_poly(2)}, name);
  }
  if (name == "so3") {
    return validate_pair(make_so3_group(), {norm2_poly(3)}, name);
  }
  throw ValidationError("unknown builtin pair '" + name + "'");
}

BuiltinDefaults builtin_defaults(const std::string& name) {
  BuiltinDefaults d;
  if (name == "trivial") {
    d.demo_xi = {1.0, 0.5};
  } else if (name == "z2-r2") {
    d.demo_xi = {1.0, 1.0};
  } else if (name == "so2") {
    d.demo_xi = {1.0, 0.0};
  } else if (name == "so3") {
    d.max_degree = 16;
    d.demo_xi = {1.0, 0.5, 0.25};
  } else {
    throw ValidationError("unknown builtin pair '" + name + "'");
  }
  return d;
}

InvariantFunction make_radial_bump(const CompactGroup& K, double radius, double amplitude) {
  InvariantFunction f;
  f.name = "radial-bump(r=" + std::to_string(radius) + ")";
  f.support_radius = radius;
  f.declared_invariant_under = &K;
  f.evaluator = [radius, amplitude](std::span<const double> x) -> std::complex<double> {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    r2 /= radius * radius;
    if (r2 >= 1.0) return {0.0, 0.0};
    return {amplitude * std::exp(-1.0 / (1.0 - r2)), 0.0};
  };
  return f;
}

InvariantFunction make_gaussian(const CompactGroup& K) {
  InvariantFunction f;
  f.name = "gaussian";
  f.declared_invariant_under = &K;
  f.evaluator = [](std::span<const double> x) -> std::complex<double> {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    return {std::exp(-r2 / 2.0), 0.0};
  };
  return f;
}

}  // namespace gelfand
