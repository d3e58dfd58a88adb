#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "nilforms/scalars.hpp"

namespace nilforms {

// Generators are numbered w1 < cw1 < w2 < cw2 < ... < wn < cwn; a blade is
// the bitmask of its generators, so masks sort exactly like blades.
struct Generator {
  int index = 1;    // 1..n
  bool barred = false;

  unsigned code() const { return 2u * unsigned(index - 1) + (barred ? 1u : 0u); }
  static Generator from_code(unsigned c) { return {int(c / 2) + 1, (c & 1u) != 0}; }
  std::string str() const { return (barred ? "cw" : "w") + std::to_string(index); }
};

using BladeMask = std::uint64_t;

namespace blade {

BladeMask of(std::initializer_list<Generator> gens);
int degree(BladeMask b);
// (#unbarred, #barred)
std::pair<int, int> bidegree(BladeMask b);
// sign of sorting the concatenation a·b; 0 when a and b share a generator
int wedge_sign(BladeMask a, BladeMask b);
// barred <-> unbarred swap: resulting mask and the reordering sign
BladeMask conjugate(BladeMask b);
int conjugate_sign(BladeMask b);
BladeMask volume(int n);
std::string str(BladeMask b);

}  // namespace blade

// Finite sum of PolyScalar-weighted blades over a fixed ambient dimension.
// May be inhomogeneous; zero-coefficient terms are never stored.
class Form {
 public:
  Form() = default;
  explicit Form(int n) : n_(n) {}

  static Form zero(int n) { return Form(n); }
  static Form unit(int n);
  static Form scalar(int n, PolyScalar c);
  static Form generator(int n, int index, bool barred);
  static Form term(int n, BladeMask b, PolyScalar c);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<BladeMask, PolyScalar>& terms() const { return terms_; }
  void add_term(BladeMask b, const PolyScalar& c);

  Form operator-() const;
  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form scaled(const PolyScalar& c) const;
  Form scaled(const GaussianRational& c) const;

  bool operator==(const Form& o) const;
  bool operator!=(const Form& o) const { return !(*this == o); }

  // true when every term has total degree d (the zero form is homogeneous)
  bool homogeneous(int d) const;
  int max_degree() const;

  Form substitute(const Assignment& a) const;

  std::string str() const;

 private:
  int n_ = 0;
  std::map<BladeMask, PolyScalar> terms_;
};

Form wedge(const Form& f, const Form& g);
Form power(const Form& f, unsigned k);
Form conjugate_form(const Form& f);
Form bidegree_component(const Form& f, int p, int q);
PolyScalar top_coefficient(const Form& f);

std::ostream& operator<<(std::ostream& os, const Form& f);

}  // namespace nilforms
