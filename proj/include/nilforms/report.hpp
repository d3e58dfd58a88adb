#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilforms/hermitian.hpp"

namespace nilforms {

struct ConstantEntry {
  int k = 0;
  std::string numerator;
  std::string denominator;
  std::optional<std::string> value;  // set when the constant is numeric
};

struct IdentityEntry {
  std::string name;
  std::optional<int> k;
  bool ok = false;
};

// Everything one CLI invocation wants to say, assembled first and rendered
// once; JSON key order is fixed so equal inputs give byte-equal output.
struct Report {
  std::string command;
  std::string manifold;
  int n = 0;
  std::optional<ValidationReport> validation;
  std::optional<bool> abelian;
  std::optional<bool> canonical_closed;
  std::optional<std::string> metric;
  std::vector<ConditionReport> conditions;
  std::vector<ConstantEntry> constants;
  std::vector<IdentityEntry> identities;
  std::vector<std::pair<std::string, std::string>> family;
  std::vector<std::string> warnings;
  bool ok = true;

  std::string to_json() const;
  std::string to_text() const;
  std::string render(const std::string& output_mode) const;
};

const char* condition_status_name(ConditionStatus s);

}  // namespace nilforms
