#include "nilforms/structure.hpp"

#include <bit>
#include <stdexcept>

namespace nilforms {

StructureEquations::StructureEquations(int n, std::vector<Form> d_gen, ParamTablePtr table)
    : n_(n), table_(std::move(table)), d_gen_(std::move(d_gen)) {
  if (n_ < 1) throw std::invalid_argument("ambient dimension must be positive");
  if (n_ > 16) throw std::invalid_argument("ambient dimension too large");
  if (int(d_gen_.size()) != n_)
    throw std::invalid_argument("expected one differential per generator");
  for (const Form& f : d_gen_) {
    if (f.n() != n_) throw std::invalid_argument("differential over a different ambient dimension");
    if (!f.homogeneous(2)) throw std::invalid_argument("generator differential must have degree 2");
  }
  d_gen_bar_.reserve(d_gen_.size());
  for (const Form& f : d_gen_) d_gen_bar_.push_back(conjugate_form(f));
  run_validation();
}

const Form& StructureEquations::d_generator(int j, bool barred) const {
  if (j < 1 || j > n_) throw std::domain_error("generator index out of range");
  return barred ? d_gen_bar_[j - 1] : d_gen_[j - 1];
}

Form StructureEquations::d(const Form& f) const {
  Form out(n_);
  for (const auto& [b, c] : f.terms()) {
    BladeMask rest = b;
    while (rest) {
      unsigned code = unsigned(std::countr_zero(rest));
      rest &= rest - 1;
      // Leibniz: the differential of the generator at position t picks up
      // (-1)^t for the t generators standing before it
      int below = std::popcount(b & ((BladeMask(1) << code) - 1));
      const Form& dg = (code & 1u) ? d_gen_bar_[code / 2] : d_gen_[code / 2];
      Form part = wedge(Form::term(n_, b & ~(BladeMask(1) << code), c), dg);
      out += (below & 1) ? -part : part;
    }
  }
  return out;
}

void StructureEquations::require_validated(const char* op) const {
  if (!report_.ok())
    throw std::logic_error(std::string(op) + " requires a validated structure");
}

Form StructureEquations::del(const Form& f) const {
  require_validated("del");
  Form out(n_);
  for (const auto& [b, c] : f.terms()) {
    auto [p, q] = blade::bidegree(b);
    out += bidegree_component(d(Form::term(n_, b, c)), p + 1, q);
  }
  return out;
}

Form StructureEquations::delbar(const Form& f) const {
  require_validated("delbar");
  Form out(n_);
  for (const auto& [b, c] : f.terms()) {
    auto [p, q] = blade::bidegree(b);
    out += bidegree_component(d(Form::term(n_, b, c)), p, q + 1);
  }
  return out;
}

bool StructureEquations::is_abelian() const {
  require_validated("is_abelian");
  for (const Form& f : d_gen_) {
    if (!bidegree_component(f, 2, 0).is_zero()) return false;
  }
  return true;
}

bool StructureEquations::canonical_form_closed() const {
  Form omega = Form::unit(n_);
  for (int j = 1; j <= n_; ++j) omega = wedge(omega, Form::generator(n_, j, false));
  return d(omega).is_zero();
}

void StructureEquations::run_validation() {
  report_ = ValidationReport();
  report_.d_squared_zero = true;
  report_.integrable = true;
  for (int j = 1; j <= n_; ++j) {
    if (!d(d_gen_[j - 1]).is_zero()) {
      report_.d_squared_zero = false;
      report_.failures.push_back("d(d w" + std::to_string(j) + ") != 0");
    }
    if (!bidegree_component(d_gen_[j - 1], 0, 2).is_zero()) {
      report_.integrable = false;
      report_.failures.push_back("d w" + std::to_string(j) + " has a (0,2) part");
    }
  }

  // nilpotency: repeatedly accept generators whose differential involves only
  // indices accepted earlier (closed generators enter first)
  std::vector<bool> accepted(size_t(n_), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < n_; ++j) {
      if (accepted[j]) continue;
      bool ok = true;
      for (const auto& [b, c] : d_gen_[j].terms()) {
        (void)c;
        BladeMask rest = b;
        while (rest) {
          unsigned code = unsigned(std::countr_zero(rest));
          rest &= rest - 1;
          if (!accepted[code / 2]) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) {
        accepted[j] = true;
        changed = true;
      }
    }
  }
  report_.filtration = true;
  for (int j = 0; j < n_; ++j) {
    if (!accepted[j]) {
      report_.filtration = false;
      report_.failures.push_back("w" + std::to_string(j + 1) +
                                 " never enters the nilpotent filtration");
    }
  }
}

StructureEquations StructureEquations::substitute(const Assignment& a) const {
  std::vector<Form> subs;
  subs.reserve(d_gen_.size());
  for (const Form& f : d_gen_) subs.push_back(f.substitute(a));
  return StructureEquations(n_, std::move(subs), nullptr);
}

}  // namespace nilforms
