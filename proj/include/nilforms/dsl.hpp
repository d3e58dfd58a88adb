#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilforms/hermitian.hpp"

namespace nilforms {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

struct MetricDecl {
  std::string name;
  bool diag = true;
  std::vector<PolyScalar> diag_entries;
  std::map<std::pair<int, int>, PolyScalar> herm_entries;  // keys have j <= k
  int line = 0;

  HermitianMetric build(int n) const;
  bool operator==(const MetricDecl& o) const;
};

// Abstract syntax of one input file. Source positions are kept per
// declaration; equality compares the mathematical content only.
struct ManifoldFile {
  std::string name;  // taken from the file name, not the text
  int n = 0;
  ParamTablePtr params;     // null when the file declares none
  std::vector<Form> diffs;  // diffs[j-1] = d wj
  std::vector<MetricDecl> metrics;

  StructureEquations structure() const;
  const MetricDecl* find_metric(const std::string& metric_name) const;
  bool operator==(const ManifoldFile& o) const;
};

// Throws ParseError (and nothing else) on invalid input.
ManifoldFile parse(const std::string& text, const std::string& name = "");
std::string print(const ManifoldFile& m);

// Literal parsers shared with the CLI flags: "3", "-1/2", "i", "(2-3i)", ...
GaussianRational parse_gaussian(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace nilforms
