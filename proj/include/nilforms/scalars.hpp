#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilforms/gaussian.hpp"

namespace nilforms {

// A declared parameter. Complex parameters come in (z, cz) pairs linked by
// `partner`; real parameters are their own partner.
struct ParamSymbol {
  std::string name;
  bool real = true;
  std::size_t partner = 0;
  // false for the auto-generated conjugate of a complex parameter
  bool primary = true;
};

class ParamTable {
 public:
  std::size_t size() const { return syms_.size(); }
  const ParamSymbol& symbol(std::size_t i) const { return syms_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;
  bool operator==(const ParamTable& o) const;

 private:
  friend class ParamTableBuilder;
  std::vector<ParamSymbol> syms_;
  std::map<std::string, std::size_t> index_;
};

using ParamTablePtr = std::shared_ptr<const ParamTable>;

// Parameters are declared once, up front; the frozen table fixes the exponent
// vector layout for every polynomial of the session.
class ParamTableBuilder {
 public:
  ParamTableBuilder& real(const std::string& name);
  // declares `name` and its conjugate partner "c" + name
  ParamTableBuilder& complex(const std::string& name);
  ParamTablePtr freeze();

 private:
  void add(ParamSymbol s);
  ParamTable table_;
};

// Compatible means equal as symbol lists, or at least one side constant.
bool same_table(const ParamTablePtr& a, const ParamTablePtr& b);

class Assignment;

// Sparse multivariate polynomial over Q(i) in the declared parameters.
// Exponent vectors are dense over the table; a constant may carry no table.
class PolyScalar {
 public:
  using Monomials = std::map<std::vector<unsigned>, GaussianRational>;

  PolyScalar() = default;
  explicit PolyScalar(GaussianRational c);
  explicit PolyScalar(long c) : PolyScalar(GaussianRational(c)) {}

  static PolyScalar constant(GaussianRational c) { return PolyScalar(std::move(c)); }
  static PolyScalar symbol(ParamTablePtr t, const std::string& name);

  bool is_zero() const { return mono_.empty(); }
  bool is_constant() const;
  // throws std::domain_error when the polynomial is not constant
  GaussianRational constant_value() const;
  bool is_real() const;

  ParamTablePtr table() const { return table_; }
  const Monomials& monomials() const { return mono_; }

  PolyScalar operator-() const;
  PolyScalar operator+(const PolyScalar& o) const;
  PolyScalar operator-(const PolyScalar& o) const;
  PolyScalar operator*(const PolyScalar& o) const;
  PolyScalar& operator+=(const PolyScalar& o);
  PolyScalar& operator-=(const PolyScalar& o);
  PolyScalar& operator*=(const PolyScalar& o);

  bool operator==(const PolyScalar& o) const;
  bool operator!=(const PolyScalar& o) const { return !(*this == o); }

  // conjugates coefficients and swaps each complex parameter with its partner
  PolyScalar conj() const;

  GaussianRational substitute(const Assignment& a) const;

  // highest exponent of the parameter at table index `sym`
  unsigned degree_in(std::size_t sym) const;
  // p = hi*x + lo with hi, lo free of x; throws when degree in x exceeds 1
  std::pair<PolyScalar, PolyScalar> linear_parts(std::size_t sym) const;

  // monic-like normalization: divides by the coefficient of the leading
  // monomial so proportional polynomials collapse to one representative
  PolyScalar normalized() const;

  std::string str() const;
  // sign-extracted factor form for use inside larger expressions:
  // {negative, text}; text re-parses as a single multiplicand
  std::pair<bool, std::string> display_atom() const;

 private:
  void insert(const std::vector<unsigned>& key, const GaussianRational& c);
  // rebases constants onto a table and checks table compatibility
  static void align(PolyScalar& a, PolyScalar& b);
  void rebase(const ParamTablePtr& t);

  ParamTablePtr table_;  // null for plain constants
  Monomials mono_;
};

PolyScalar operator*(const GaussianRational& c, const PolyScalar& p);
std::ostream& operator<<(std::ostream& os, const PolyScalar& p);

// A valuation of the declared parameters. Setting a complex parameter also
// sets its partner to the conjugate value, so admissible inputs are
// conjugation-consistent by construction.
class Assignment {
 public:
  explicit Assignment(ParamTablePtr t);

  void set(const std::string& name, const GaussianRational& v);
  bool has(std::size_t idx) const;
  // throws std::domain_error for an unassigned parameter
  const GaussianRational& value(std::size_t idx) const;
  ParamTablePtr table() const { return table_; }

 private:
  ParamTablePtr table_;
  std::vector<std::optional<GaussianRational>> values_;
};

// Ratio of polynomials with nonzero denominator; equality is tested by
// cross-multiplication, never by GCD reduction.
class RatScalar {
 public:
  RatScalar() : num_(), den_(GaussianRational(1)) {}
  RatScalar(PolyScalar num, PolyScalar den);
  explicit RatScalar(GaussianRational c) : num_(std::move(c)), den_(GaussianRational(1)) {}

  const PolyScalar& num() const { return num_; }
  const PolyScalar& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussianRational constant_value() const;
  GaussianRational substitute(const Assignment& a) const;

  RatScalar operator-() const;
  RatScalar operator+(const RatScalar& o) const;
  RatScalar operator-(const RatScalar& o) const;
  RatScalar operator*(const RatScalar& o) const;

  bool operator==(const RatScalar& o) const;
  bool operator!=(const RatScalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  PolyScalar num_;
  PolyScalar den_;
};

// Unique root of p viewed as a linear polynomial in x; throws
// std::domain_error when p is not linear in x or the leading coefficient
// vanishes identically.
RatScalar solve_linear(const PolyScalar& p, const std::string& x);

}  // namespace nilforms
