#include "nilforms/exterior.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace nilforms {

namespace blade {

BladeMask of(std::initializer_list<Generator> gens) {
  BladeMask b = 0;
  for (const Generator& g : gens) {
    BladeMask bit = BladeMask(1) << g.code();
    if (b & bit) throw std::domain_error("repeated generator in blade");
    b |= bit;
  }
  return b;
}

int degree(BladeMask b) { return std::popcount(b); }

std::pair<int, int> bidegree(BladeMask b) {
  constexpr BladeMask even = 0x5555555555555555ull;
  int p = std::popcount(b & even);
  int q = std::popcount(b & ~even);
  return {p, q};
}

int wedge_sign(BladeMask a, BladeMask b) {
  if (a & b) return 0;
  // inversions of the merge: generators of b that sit below a generator of a
  int inv = 0;
  BladeMask rest = a;
  while (rest) {
    unsigned code = unsigned(std::countr_zero(rest));
    rest &= rest - 1;
    BladeMask below = (BladeMask(1) << code) - 1;
    inv += std::popcount(b & below);
  }
  return (inv & 1) ? -1 : 1;
}

BladeMask conjugate(BladeMask b) {
  constexpr BladeMask even = 0x5555555555555555ull;
  return ((b & even) << 1) | ((b & ~even) >> 1);
}

int conjugate_sign(BladeMask b) {
  // swapping bars reverses exactly the (wj, cwj) pairs present in full
  constexpr BladeMask even = 0x5555555555555555ull;
  int pairs = std::popcount(b & (b >> 1) & even);
  return (pairs & 1) ? -1 : 1;
}

BladeMask volume(int n) {
  return n >= 32 ? ~BladeMask(0) : (BladeMask(1) << (2 * n)) - 1;
}

std::string str(BladeMask b) {
  std::string out;
  while (b) {
    unsigned code = unsigned(std::countr_zero(b));
    b &= b - 1;
    if (!out.empty()) out += "^";
    out += Generator::from_code(code).str();
  }
  return out;
}

}  // namespace blade

Form Form::unit(int n) { return scalar(n, PolyScalar(GaussianRational(1))); }

Form Form::scalar(int n, PolyScalar c) {
  Form f(n);
  if (!c.is_zero()) f.terms_.emplace(0, std::move(c));
  return f;
}

Form Form::generator(int n, int index, bool barred) {
  if (index < 1 || index > n) throw std::domain_error("generator index out of range");
  Form f(n);
  f.terms_.emplace(BladeMask(1) << Generator{index, barred}.code(),
                   PolyScalar(GaussianRational(1)));
  return f;
}

Form Form::term(int n, BladeMask b, PolyScalar c) {
  Form f(n);
  if (n < 32 && b >= (BladeMask(1) << (2 * n)))
    throw std::domain_error("blade exceeds ambient dimension");
  if (!c.is_zero()) f.terms_.emplace(b, std::move(c));
  return f;
}

void Form::add_term(BladeMask b, const PolyScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Form Form::operator-() const {
  Form r(n_);
  for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
  return r;
}

Form Form::operator+(const Form& o) const {
  if (n_ != o.n_) throw std::invalid_argument("forms of different ambient dimension");
  Form r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, c);
  return r;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form& Form::operator+=(const Form& o) { return *this = *this + o; }
Form& Form::operator-=(const Form& o) { return *this = *this - o; }

Form Form::scaled(const PolyScalar& c) const {
  Form r(n_);
  for (const auto& [b, coeff] : terms_) r.add_term(b, coeff * c);
  return r;
}

Form Form::scaled(const GaussianRational& c) const { return scaled(PolyScalar(c)); }

bool Form::operator==(const Form& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

bool Form::homogeneous(int d) const {
  for (const auto& [b, c] : terms_) {
    (void)c;
    if (blade::degree(b) != d) return false;
  }
  return true;
}

int Form::max_degree() const {
  int d = 0;
  for (const auto& [b, c] : terms_) {
    (void)c;
    d = std::max(d, blade::degree(b));
  }
  return d;
}

Form Form::substitute(const Assignment& a) const {
  Form r(n_);
  for (const auto& [b, c] : terms_) r.add_term(b, PolyScalar(c.substitute(a)));
  return r;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    auto [neg, atom] = c.display_atom();
    std::string body;
    if (b == 0) {
      body = atom;
    } else if (atom == "1") {
      body = blade::str(b);
    } else {
      body = atom + "*" + blade::str(b);
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

Form wedge(const Form& f, const Form& g) {
  if (f.n() != g.n()) throw std::invalid_argument("forms of different ambient dimension");
  Form r(f.n());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      int s = blade::wedge_sign(a, b);
      if (s == 0) continue;
      PolyScalar c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(a | b, c);
    }
  }
  return r;
}

Form power(const Form& f, unsigned k) {
  Form r = Form::unit(f.n());
  for (unsigned i = 0; i < k; ++i) r = wedge(r, f);
  return r;
}

Form conjugate_form(const Form& f) {
  Form r(f.n());
  for (const auto& [b, c] : f.terms()) {
    PolyScalar cc = c.conj();
    if (blade::conjugate_sign(b) < 0) cc = -cc;
    r.add_term(blade::conjugate(b), cc);
  }
  return r;
}

Form bidegree_component(const Form& f, int p, int q) {
  Form r(f.n());
  for (const auto& [b, c] : f.terms()) {
    if (blade::bidegree(b) == std::pair<int, int>(p, q)) r.add_term(b, c);
  }
  return r;
}

PolyScalar top_coefficient(const Form& f) {
  auto it = f.terms().find(blade::volume(f.n()));
  if (it == f.terms().end()) return PolyScalar();
  return it->second;
}

std::ostream& operator<<(std::ostream& os, const Form& f) { return os << f.str(); }

}  // namespace nilforms
