#ifndef GELFAND_RATIONAL_HPP
#define GELFAND_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdlib>
#include <string>

#include "gelfand/errors.hpp"

namespace gelfand {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational from a numerator/denominator pair.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

/// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw ValidationError("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

/// Exact rational value of a double (every finite double is dyadic).
inline Rat rat_from_double_exact(double x) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

inline Int factorial(long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// (n)!! with the convention (-1)!! = 0!! = 1.
inline Int double_factorial(long n) {
  if (n <= 0) return Int(1);
  Int f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// Element of Q(i) with exact rational real and imaginary parts.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT: implicit from Rat is intended
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussRat(long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussRat operator-() const { return {Rat(-re), Rat(-im)}; }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {Rat(a.re * b.re - a.im * b.im), Rat(a.re * b.im + a.im * b.re)};
  }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw Error("division by zero in Q(i)");
    return {Rat((a.re * b.re + a.im * b.im) / n), Rat((a.im * b.re - a.re * b.im) / n)};
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  /// |re| + |im|; an exact zero test proxy for magnitude.
  Rat norm1() const { return Rat(abs(re) + abs(im)); }
};

/// i^k as an exact Gaussian rational.
inline GaussRat i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussRat(Rat(1), Rat(0));
    case 1: return GaussRat(Rat(0), Rat(1));
    case 2: return GaussRat(Rat(-1), Rat(0));
    default: return GaussRat(Rat(0), Rat(-1));
  }
}

inline std::complex<double> to_complex(const GaussRat& z) {
  return {z.re.get_d(), z.im.get_d()};
}

}  // namespace gelfand

#endif
