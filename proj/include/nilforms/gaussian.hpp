#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace nilforms {

// Exact rational; always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;

// Builds a canonical Rational from a raw numerator/denominator pair.
Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

// Canonical "p" or "p/q" rendering.
std::string rational_str(const Rational& r);

// An element of Q(i): the coefficient field of the whole engine.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long v) : re(v), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }
  // (num/den) + (inum/iden) i, canonicalized.
  static GaussianRational make(long num, long den = 1, long inum = 0, long iden = 1);

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  GaussianRational conj() const { return {re, Rational(-im)}; }
  // |z|^2 = z * conj(z), a nonnegative rational.
  Rational norm() const;

  GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }
  GaussianRational operator+(const GaussianRational& o) const;
  GaussianRational operator-(const GaussianRational& o) const;
  GaussianRational operator*(const GaussianRational& o) const;
  // exact field division; throws std::domain_error on zero divisor
  GaussianRational operator/(const GaussianRational& o) const;
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  // z^k for k >= 0
  GaussianRational pow(unsigned k) const;

  // Canonical literal form shared with the DSL: "0", "3", "-1/2", "i",
  // "-3i", "(1/2)i", "(2-3i)", "(1/2+3i)", ...
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace nilforms
