#pragma once

#include <string>
#include <vector>

#include "nilforms/exterior.hpp"

namespace nilforms {

struct ValidationReport {
  bool d_squared_zero = false;
  bool integrable = false;
  bool filtration = false;
  std::vector<std::string> failures;

  bool ok() const { return d_squared_zero && integrable && filtration; }
};

// Structure equations of an n-dimensional complex Lie algebra given by the
// differentials of the (1,0) generators; the barred differentials are always
// the conjugates. Construction runs the validation checks once and caches
// the report; failures are recorded, not thrown.
class StructureEquations {
 public:
  StructureEquations(int n, std::vector<Form> d_gen, ParamTablePtr table = nullptr);

  int n() const { return n_; }
  ParamTablePtr table() const { return table_; }
  const ValidationReport& validation() const { return report_; }
  bool validated() const { return report_.ok(); }

  // d of the generator with 1-based index j
  const Form& d_generator(int j, bool barred = false) const;

  // degree-raising antiderivation extending the generator differentials
  Form d(const Form& f) const;
  // bidegree (p,q) -> (p+1,q) and (p,q+1) parts of d, term by term;
  // throw std::logic_error on structures that failed validation
  Form del(const Form& f) const;
  Form delbar(const Form& f) const;

  // true when no differential has a (2,0) part; requires validation
  bool is_abelian() const;
  // d(w1^w2^...^wn) == 0; computable on any structure, validated or not
  bool canonical_form_closed() const;

  // substitutes parameters in every differential, keeping the same n
  StructureEquations substitute(const Assignment& a) const;

 private:
  void run_validation();
  void require_validated(const char* op) const;

  int n_;
  ParamTablePtr table_;
  std::vector<Form> d_gen_;      // index j-1 holds d(wj)
  std::vector<Form> d_gen_bar_;  // cached conjugates
  ValidationReport report_;
};

}  // namespace nilforms
