#include "nilforms/scalars.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace nilforms {

std::optional<std::size_t> ParamTable::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ParamTable::operator==(const ParamTable& o) const {
  if (syms_.size() != o.syms_.size()) return false;
  for (std::size_t i = 0; i < syms_.size(); ++i) {
    const ParamSymbol& a = syms_[i];
    const ParamSymbol& b = o.syms_[i];
    if (a.name != b.name || a.real != b.real || a.partner != b.partner || a.primary != b.primary)
      return false;
  }
  return true;
}

void ParamTableBuilder::add(ParamSymbol s) {
  if (table_.index_.count(s.name))
    throw std::domain_error("parameter '" + s.name + "' declared twice");
  table_.index_[s.name] = table_.syms_.size();
  table_.syms_.push_back(std::move(s));
}

ParamTableBuilder& ParamTableBuilder::real(const std::string& name) {
  ParamSymbol s;
  s.name = name;
  s.real = true;
  s.partner = table_.syms_.size();
  add(std::move(s));
  return *this;
}

ParamTableBuilder& ParamTableBuilder::complex(const std::string& name) {
  std::size_t base = table_.syms_.size();
  ParamSymbol z;
  z.name = name;
  z.real = false;
  z.partner = base + 1;
  ParamSymbol zbar;
  zbar.name = "c" + name;
  zbar.real = false;
  zbar.partner = base;
  zbar.primary = false;
  add(std::move(z));
  add(std::move(zbar));
  return *this;
}

ParamTablePtr ParamTableBuilder::freeze() {
  auto p = std::make_shared<ParamTable>(std::move(table_));
  table_ = ParamTable();
  return p;
}

bool same_table(const ParamTablePtr& a, const ParamTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return true;
  return *a == *b;
}

PolyScalar::PolyScalar(GaussianRational c) {
  if (!c.is_zero()) mono_.emplace(std::vector<unsigned>{}, std::move(c));
}

PolyScalar PolyScalar::symbol(ParamTablePtr t, const std::string& name) {
  if (!t) throw std::domain_error("symbol requires a parameter table");
  auto idx = t->find(name);
  if (!idx) throw std::domain_error("undeclared parameter '" + name + "'");
  PolyScalar p;
  p.table_ = std::move(t);
  std::vector<unsigned> key(p.table_->size(), 0);
  key[*idx] = 1;
  p.mono_.emplace(std::move(key), GaussianRational(1));
  return p;
}

bool PolyScalar::is_constant() const {
  if (mono_.empty()) return true;
  if (mono_.size() > 1) return false;
  const auto& key = mono_.begin()->first;
  return std::all_of(key.begin(), key.end(), [](unsigned e) { return e == 0; });
}

GaussianRational PolyScalar::constant_value() const {
  if (mono_.empty()) return GaussianRational();
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return mono_.begin()->second;
}

bool PolyScalar::is_real() const {
  return *this == conj();
}

void PolyScalar::insert(const std::vector<unsigned>& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = mono_.find(key);
  if (it == mono_.end()) {
    mono_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) mono_.erase(it);
}

void PolyScalar::rebase(const ParamTablePtr& t) {
  if (!t || table_) return;
  table_ = t;
  Monomials moved;
  std::vector<unsigned> zeros(t->size(), 0);
  for (auto& [key, c] : mono_) {
    (void)key;
    moved.emplace(zeros, c);
  }
  mono_ = std::move(moved);
}

void PolyScalar::align(PolyScalar& a, PolyScalar& b) {
  if (!same_table(a.table_, b.table_))
    throw std::logic_error("polynomials over different parameter tables");
  if (a.table_ && !b.table_) b.rebase(a.table_);
  if (b.table_ && !a.table_) a.rebase(b.table_);
}

PolyScalar PolyScalar::operator-() const {
  PolyScalar r = *this;
  for (auto& [key, c] : r.mono_) {
    (void)key;
    c = -c;
  }
  return r;
}

PolyScalar PolyScalar::operator+(const PolyScalar& o) const {
  PolyScalar a = *this, b = o;
  align(a, b);
  for (const auto& [key, c] : b.mono_) a.insert(key, c);
  return a;
}

PolyScalar PolyScalar::operator-(const PolyScalar& o) const {
  return *this + (-o);
}

PolyScalar PolyScalar::operator*(const PolyScalar& o) const {
  PolyScalar a = *this, b = o;
  align(a, b);
  PolyScalar r;
  r.table_ = a.table_ ? a.table_ : b.table_;
  for (const auto& [ka, ca] : a.mono_) {
    for (const auto& [kb, cb] : b.mono_) {
      std::vector<unsigned> key = ka;
      if (key.size() < kb.size()) key.resize(kb.size(), 0);
      for (std::size_t i = 0; i < kb.size(); ++i) key[i] += kb[i];
      r.insert(key, ca * cb);
    }
  }
  return r;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) { return *this = *this + o; }
PolyScalar& PolyScalar::operator-=(const PolyScalar& o) { return *this = *this - o; }
PolyScalar& PolyScalar::operator*=(const PolyScalar& o) { return *this = *this * o; }

bool PolyScalar::operator==(const PolyScalar& o) const {
  if (is_constant() || o.is_constant()) {
    if (is_constant() != o.is_constant()) return false;
    return constant_value() == o.constant_value();
  }
  if (!same_table(table_, o.table_)) return false;
  return mono_ == o.mono_;
}

PolyScalar PolyScalar::conj() const {
  PolyScalar r;
  r.table_ = table_;
  for (const auto& [key, c] : mono_) {
    std::vector<unsigned> swapped = key;
    for (std::size_t i = 0; i < key.size(); ++i) {
      std::size_t p = table_->symbol(i).partner;
      swapped[p] = key[i];
    }
    r.insert(swapped, c.conj());
  }
  return r;
}

GaussianRational PolyScalar::substitute(const Assignment& a) const {
  if (table_ && a.table() && !same_table(table_, a.table()))
    throw std::logic_error("assignment over a different parameter table");
  GaussianRational total;
  for (const auto& [key, c] : mono_) {
    GaussianRational term = c;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] == 0) continue;
      term *= a.value(i).pow(key[i]);
    }
    total += term;
  }
  return total;
}

unsigned PolyScalar::degree_in(std::size_t sym) const {
  unsigned d = 0;
  for (const auto& [key, c] : mono_) {
    (void)c;
    if (sym < key.size()) d = std::max(d, key[sym]);
  }
  return d;
}

std::pair<PolyScalar, PolyScalar> PolyScalar::linear_parts(std::size_t sym) const {
  PolyScalar hi, lo;
  hi.table_ = table_;
  lo.table_ = table_;
  for (const auto& [key, c] : mono_) {
    unsigned e = sym < key.size() ? key[sym] : 0;
    if (e > 1) throw std::domain_error("polynomial is not linear in the requested parameter");
    if (e == 1) {
      std::vector<unsigned> reduced = key;
      reduced[sym] = 0;
      hi.insert(reduced, c);
    } else {
      lo.insert(key, c);
    }
  }
  return {hi, lo};
}

PolyScalar PolyScalar::normalized() const {
  if (mono_.empty()) return *this;
  GaussianRational lead = mono_.rbegin()->second;
  PolyScalar r;
  r.table_ = table_;
  GaussianRational inv = GaussianRational(1) / lead;
  for (const auto& [key, c] : mono_) r.mono_.emplace(key, c * inv);
  return r;
}

namespace {

std::string monomial_vars(const ParamTablePtr& table, const std::vector<unsigned>& key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += table->symbol(i).name;
    if (key[i] > 1) out += "^" + std::to_string(key[i]);
  }
  return out;
}

// splits a coefficient into sign and magnitude when the sign is printable,
// i.e. for pure real or pure imaginary values
std::pair<bool, GaussianRational> extract_sign(const GaussianRational& c) {
  bool neg = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
  return {neg, neg ? -c : c};
}

}  // namespace

std::string PolyScalar::str() const {
  if (mono_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : mono_) {
    auto [neg, mag] = extract_sign(c);
    std::string vars = table_ ? monomial_vars(table_, key) : std::string();
    std::string body;
    if (vars.empty()) {
      body = mag.str();
    } else if (mag.is_one()) {
      body = vars;
    } else {
      body = mag.str() + "*" + vars;
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

std::pair<bool, std::string> PolyScalar::display_atom() const {
  if (mono_.empty()) return {false, "0"};
  if (mono_.size() == 1) {
    const auto& [key, c] = *mono_.begin();
    auto [neg, mag] = extract_sign(c);
    std::string vars = table_ ? monomial_vars(table_, key) : std::string();
    if (vars.empty()) return {neg, mag.str()};
    if (mag.is_one()) return {neg, vars};
    return {neg, mag.str() + "*" + vars};
  }
  return {false, "(" + str() + ")"};
}

PolyScalar operator*(const GaussianRational& c, const PolyScalar& p) {
  return PolyScalar(c) * p;
}

std::ostream& operator<<(std::ostream& os, const PolyScalar& p) {
  return os << p.str();
}

Assignment::Assignment(ParamTablePtr t) : table_(std::move(t)) {
  values_.resize(table_ ? table_->size() : 0);
}

void Assignment::set(const std::string& name, const GaussianRational& v) {
  if (!table_) throw std::domain_error("assignment has no parameter table");
  auto idx = table_->find(name);
  if (!idx) throw std::domain_error("undeclared parameter '" + name + "'");
  const ParamSymbol& s = table_->symbol(*idx);
  if (s.real && !v.is_real())
    throw std::domain_error("complex value assigned to real parameter '" + name + "'");
  values_[*idx] = v;
  if (!s.real) values_[s.partner] = v.conj();
}

bool Assignment::has(std::size_t idx) const {
  return idx < values_.size() && values_[idx].has_value();
}

const GaussianRational& Assignment::value(std::size_t idx) const {
  if (!has(idx)) {
    std::string name = table_ && idx < table_->size() ? table_->symbol(idx).name : "?";
    throw std::domain_error("parameter '" + name + "' has no assigned value");
  }
  return *values_[idx];
}

RatScalar::RatScalar(PolyScalar num, PolyScalar den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational scalar with zero denominator");
}

GaussianRational RatScalar::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

GaussianRational RatScalar::substitute(const Assignment& a) const {
  GaussianRational d = den_.substitute(a);
  if (d.is_zero()) throw std::domain_error("denominator vanishes at the assignment");
  return num_.substitute(a) / d;
}

RatScalar RatScalar::operator-() const { return RatScalar(-num_, den_); }

RatScalar RatScalar::operator+(const RatScalar& o) const {
  return RatScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatScalar RatScalar::operator-(const RatScalar& o) const { return *this + (-o); }

RatScalar RatScalar::operator*(const RatScalar& o) const {
  return RatScalar(num_ * o.num_, den_ * o.den_);
}

bool RatScalar::operator==(const RatScalar& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string RatScalar::str() const {
  if (is_constant()) return constant_value().str();
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatScalar solve_linear(const PolyScalar& p, const std::string& x) {
  if (!p.table()) throw std::domain_error("polynomial has no parameter table");
  auto idx = p.table()->find(x);
  if (!idx) throw std::domain_error("undeclared parameter '" + x + "'");
  auto [hi, lo] = p.linear_parts(*idx);
  if (hi.is_zero())
    throw std::domain_error("coefficient of '" + x + "' vanishes identically");
  return RatScalar(-lo, hi);
}

}  // namespace nilforms
