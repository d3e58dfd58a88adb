#include "nilforms/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace nilforms {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) {
  return r.get_str();
}

GaussianRational GaussianRational::make(long num, long den, long inum, long iden) {
  return {make_rational(num, den), make_rational(inum, iden)};
}

Rational GaussianRational::norm() const {
  Rational n = re * re + im * im;
  return n;
}

GaussianRational GaussianRational::operator+(const GaussianRational& o) const {
  return {Rational(re + o.re), Rational(im + o.im)};
}

GaussianRational GaussianRational::operator-(const GaussianRational& o) const {
  return {Rational(re - o.re), Rational(im - o.im)};
}

GaussianRational GaussianRational::operator*(const GaussianRational& o) const {
  return {Rational(re * o.re - im * o.im), Rational(re * o.im + im * o.re)};
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  Rational n = o.norm();
  return {Rational((re * o.re + im * o.im) / n), Rational((im * o.re - re * o.im) / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  *this = *this * o;
  return *this;
}

GaussianRational GaussianRational::pow(unsigned k) const {
  GaussianRational acc(1);
  GaussianRational base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

namespace {

// "1/2" needs parentheses before "i" so the literal re-parses as a product
bool needs_parens(const Rational& r) {
  return r.get_den() != 1;
}

std::string imag_part_str(const Rational& im, bool inside_parens) {
  // renders |im| * i for im != 0; caller handles sign
  Rational a = abs(im);
  if (a == 1) return "i";
  if (!inside_parens && needs_parens(a)) return "(" + a.get_str() + ")i";
  return a.get_str() + "i";
}

}  // namespace

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  if (im == 0) return re.get_str();
  if (re == 0) {
    std::string body = imag_part_str(im, false);
    if (im < 0) {
      if (body == "i") return "-i";
      if (body[0] == '(') return "-" + body;
      return "-" + body;
    }
    return body;
  }
  // full complex value, always parenthesized: "(2-3i)", "(1/2+3i)"
  std::string out = "(" + re.get_str();
  out += (im < 0) ? "-" : "+";
  out += imag_part_str(im, true);
  out += ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.str();
}

}  // namespace nilforms
