#include "nilforms/dsl.hpp"

#include <cctype>
#include <optional>

namespace nilforms {

namespace {

enum class Tok {
  Int, Ident, Gen, IUnit,
  KwDim, KwParam, KwReal, KwComplex, KwD, KwMetric, KwDiag, KwHerm,
  Eq, Colon, Comma, LParen, RParen, Plus, Minus, Star, Caret, Slash,
  End,
};

struct Token {
  Tok kind;
  std::string text;   // digits for Int, name for Ident
  int gen_index = 0;  // for Gen
  bool gen_barred = false;
  int line = 1;
  int col = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(t.line, t.col, msg);
}

bool gen_like(const std::string& s, int& index, bool& barred) {
  std::size_t pos = 0;
  barred = false;
  if (s.size() >= 2 && s[0] == 'c' && s[1] == 'w') {
    barred = true;
    pos = 2;
  } else if (s[0] == 'w') {
    pos = 1;
  } else {
    return false;
  }
  if (pos >= s.size()) return false;
  long value = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    value = value * 10 + (s[pos] - '0');
    if (value > 1000) return false;  // generator index this large is an identifier
  }
  index = int(value);
  return true;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        advance(text[i]);
        ++i;
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i];
        advance(text[i]);
        ++i;
      }
      t.kind = Tok::Int;
      t.text = std::move(digits);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        word += text[i];
        advance(text[i]);
        ++i;
      }
      if (word == "dim") t.kind = Tok::KwDim;
      else if (word == "param") t.kind = Tok::KwParam;
      else if (word == "real") t.kind = Tok::KwReal;
      else if (word == "complex") t.kind = Tok::KwComplex;
      else if (word == "d") t.kind = Tok::KwD;
      else if (word == "metric") t.kind = Tok::KwMetric;
      else if (word == "diag") t.kind = Tok::KwDiag;
      else if (word == "herm") t.kind = Tok::KwHerm;
      else if (word == "i") t.kind = Tok::IUnit;
      else {
        int index;
        bool barred;
        if (gen_like(word, index, barred)) {
          t.kind = Tok::Gen;
          t.gen_index = index;
          t.gen_barred = barred;
        } else {
          t.kind = Tok::Ident;
          t.text = std::move(word);
        }
      }
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '=': t.kind = Tok::Eq; break;
      case ':': t.kind = Tok::Colon; break;
      case ',': t.kind = Tok::Comma; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '^': t.kind = Tok::Caret; break;
      case '/': t.kind = Tok::Slash; break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    advance(c);
    ++i;
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(std::move(end));
  return out;
}

long token_long(const Token& t, long bound, const char* what) {
  if (t.text.size() > 9) fail(t, std::string(what) + " out of range");
  long v = 0;
  for (char c : t.text) v = v * 10 + (c - '0');
  if (v > bound) fail(t, std::string(what) + " out of range");
  return v;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ManifoldFile run(const std::string& name) {
    collect_params();
    ManifoldFile m;
    m.name = name;
    m.params = table_;

    expect(Tok::KwDim, "expected 'dim' at the start of the file");
    m.n = int(token_long(expect(Tok::Int, "expected dimension"), 16, "dimension"));
    if (m.n < 1) fail(prev(), "dimension out of range");
    n_ = m.n;

    m.diffs.assign(size_t(n_), Form::zero(n_));
    std::vector<bool> seen(size_t(n_), false);

    while (peek().kind != Tok::End) {
      switch (peek().kind) {
        case Tok::KwParam:
          skip_param_decl();
          break;
        case Tok::KwD:
          parse_diff(m, seen);
          break;
        case Tok::KwMetric:
          parse_metric(m);
          break;
        default:
          fail(peek(), "expected a declaration");
      }
    }
    for (int j = 1; j <= n_; ++j) {
      if (!seen[size_t(j - 1)])
        fail(peek(), "missing differential for w" + std::to_string(j));
    }
    return m;
  }

  // parses a bare scalar expression (used for CLI literals)
  PolyScalar run_scalar() {
    PolyScalar p = scalar_sum();
    if (peek().kind != Tok::End) fail(peek(), "trailing input after scalar");
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& prev() const { return toks_[pos_ ? pos_ - 1 : 0]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  const Token& expect(Tok kind, const std::string& msg) {
    if (peek().kind != kind) fail(peek(), msg);
    return next();
  }

  void collect_params() {
    ParamTableBuilder tb;
    bool any = false;
    for (std::size_t i = 0; i < toks_.size(); ++i) {
      if (toks_[i].kind != Tok::KwParam) continue;
      std::size_t j = i + 1;
      std::vector<const Token*> names;
      while (j < toks_.size() && toks_[j].kind == Tok::Ident) names.push_back(&toks_[j++]);
      if (names.empty()) fail(toks_[j < toks_.size() ? j : i], "expected parameter name");
      if (j >= toks_.size() || toks_[j].kind != Tok::Colon)
        fail(toks_[j < toks_.size() ? j : i], "expected ':' after parameter names");
      ++j;
      if (j >= toks_.size() ||
          (toks_[j].kind != Tok::KwReal && toks_[j].kind != Tok::KwComplex))
        fail(toks_[j < toks_.size() ? j : i], "expected 'real' or 'complex'");
      bool real = toks_[j].kind == Tok::KwReal;
      for (const Token* name : names) {
        try {
          if (real) tb.real(name->text);
          else tb.complex(name->text);
        } catch (const std::domain_error& e) {
          fail(*name, e.what());
        }
        any = true;
      }
      i = j;
    }
    if (any) table_ = tb.freeze();
  }

  void skip_param_decl() {
    expect(Tok::KwParam, "expected 'param'");
    while (peek().kind == Tok::Ident) next();
    expect(Tok::Colon, "expected ':' after parameter names");
    if (peek().kind != Tok::KwReal && peek().kind != Tok::KwComplex)
      fail(peek(), "expected 'real' or 'complex'");
    next();
  }

  Generator parse_gen() {
    const Token& t = expect(Tok::Gen, "expected generator");
    if (t.gen_index < 1 || t.gen_index > n_) fail(t, "generator index out of range");
    return Generator{t.gen_index, t.gen_barred};
  }

  void parse_diff(ManifoldFile& m, std::vector<bool>& seen) {
    expect(Tok::KwD, "expected 'd'");
    const Token& g = expect(Tok::Gen, "expected generator after 'd'");
    if (g.gen_barred) fail(g, "conjugate differentials are derived, not declared");
    if (g.gen_index < 1 || g.gen_index > n_) fail(g, "generator index out of range");
    if (seen[size_t(g.gen_index - 1)])
      fail(g, "duplicate differential for w" + std::to_string(g.gen_index));
    seen[size_t(g.gen_index - 1)] = true;
    expect(Tok::Eq, "expected '=' in differential declaration");
    m.diffs[size_t(g.gen_index - 1)] = parse_form_sum();
  }

  bool at_decl_boundary() const {
    Tok k = peek().kind;
    return k == Tok::End || k == Tok::KwD || k == Tok::KwParam || k == Tok::KwMetric;
  }

  Form parse_form_sum() {
    // explicit "= 0" for a vanishing differential
    if (peek().kind == Tok::Int && peek().text == "0") {
      next();
      if (!at_decl_boundary()) fail(peek(), "unexpected input after '0'");
      return Form::zero(n_);
    }
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      neg = true;
      next();
    } else if (peek().kind == Tok::Plus) {
      next();
    }
    Form total = parse_form_term(neg);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      total += parse_form_term(minus);
    }
    return total;
  }

  bool scalar_starts() const {
    Tok k = peek().kind;
    return k == Tok::Int || k == Tok::IUnit || k == Tok::LParen || k == Tok::Ident;
  }

  Form parse_form_term(bool negated) {
    PolyScalar coeff(GaussianRational(1));
    if (scalar_starts()) {
      coeff = scalar_product();
      expect(Tok::Star, "expected '*' between coefficient and generator");
    }
    Generator first = parse_gen();
    Form blade = Form::generator(n_, first.index, first.barred);
    while (peek().kind == Tok::Caret) {
      next();
      Generator g = parse_gen();
      blade = wedge(blade, Form::generator(n_, g.index, g.barred));
    }
    if (negated) coeff = -coeff;
    return blade.scaled(coeff);
  }

  GaussianRational parse_literal() {
    const Token& t = next();
    if (t.kind == Tok::IUnit) return GaussianRational::unit_i();
    // Int, possibly a fraction
    mpz_class num(t.text);
    mpz_class den(1);
    if (peek().kind == Tok::Slash) {
      next();
      const Token& d = expect(Tok::Int, "expected denominator");
      den = mpz_class(d.text);
      if (den == 0) fail(d, "zero denominator");
    }
    return GaussianRational(make_rational(num, den));
  }

  PolyScalar scalar_factor() {
    const Token& t = peek();
    PolyScalar p;
    bool literal_like = false;
    switch (t.kind) {
      case Tok::Int:
      case Tok::IUnit:
        p = PolyScalar(parse_literal());
        literal_like = t.kind == Tok::Int;
        break;
      case Tok::LParen: {
        next();
        p = scalar_sum();
        expect(Tok::RParen, "expected ')'");
        literal_like = true;
        break;
      }
      case Tok::Ident: {
        if (!table_ || !table_->find(t.text)) fail(t, "undeclared parameter '" + t.text + "'");
        p = PolyScalar::symbol(table_, t.text);
        next();
        break;
      }
      case Tok::Gen:
        fail(t, "generator in scalar context");
      default:
        fail(t, "expected a scalar");
    }
    // literal or parenthesized value directly followed by the imaginary unit
    if (literal_like && peek().kind == Tok::IUnit) {
      next();
      p *= PolyScalar(GaussianRational::unit_i());
    }
    if (peek().kind == Tok::Caret) {
      if (peek(1).kind != Tok::Int) fail(peek(1), "expected integer exponent");
      next();
      long e = token_long(next(), 1000, "exponent");
      PolyScalar acc(GaussianRational(1));
      for (long r = 0; r < e; ++r) acc *= p;
      p = acc;
    }
    return p;
  }

  PolyScalar scalar_product() {
    PolyScalar p = scalar_factor();
    while (peek().kind == Tok::Star && peek(1).kind != Tok::Gen) {
      next();
      p *= scalar_factor();
    }
    return p;
  }

  PolyScalar scalar_sum() {
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      neg = true;
      next();
    } else if (peek().kind == Tok::Plus) {
      next();
    }
    PolyScalar total = scalar_product();
    if (neg) total = -total;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      PolyScalar term = scalar_product();
      if (minus) total -= term;
      else total += term;
    }
    return total;
  }

  void parse_metric(ManifoldFile& m) {
    const Token& kw = expect(Tok::KwMetric, "expected 'metric'");
    MetricDecl decl;
    decl.line = kw.line;
    const Token& name = expect(Tok::Ident, "expected metric name");
    decl.name = name.text;
    for (const MetricDecl& other : m.metrics) {
      if (other.name == decl.name) fail(name, "duplicate metric '" + decl.name + "'");
    }
    expect(Tok::Eq, "expected '=' in metric declaration");
    if (peek().kind == Tok::KwDiag) {
      next();
      decl.diag = true;
      expect(Tok::LParen, "expected '('");
      while (true) {
        const Token& at = peek();
        PolyScalar entry = scalar_sum();
        if (!entry.is_real()) fail(at, "diagonal metric entry must be real");
        decl.diag_entries.push_back(std::move(entry));
        if (peek().kind == Tok::Comma) {
          next();
          continue;
        }
        break;
      }
      expect(Tok::RParen, "expected ')'");
      if (int(decl.diag_entries.size()) != n_)
        fail(prev(), "expected " + std::to_string(n_) + " diagonal entries");
    } else if (peek().kind == Tok::KwHerm) {
      next();
      decl.diag = false;
      expect(Tok::LParen, "expected '('");
      while (true) {
        const Token& jt = expect(Tok::Int, "expected row index");
        int j = int(token_long(jt, 16, "row index"));
        const Token& kt = expect(Tok::Int, "expected column index");
        int k = int(token_long(kt, 16, "column index"));
        if (j < 1 || j > n_ || k < 1 || k > n_) fail(jt, "metric index out of range");
        if (j > k) fail(jt, "metric entries must have row <= column");
        if (decl.herm_entries.count({j, k})) fail(jt, "duplicate metric entry");
        const Token& at = peek();
        PolyScalar entry = scalar_sum();
        if (j == k && !entry.is_real()) fail(at, "diagonal metric entry must be real");
        decl.herm_entries[{j, k}] = std::move(entry);
        if (peek().kind == Tok::Comma) {
          next();
          continue;
        }
        break;
      }
      expect(Tok::RParen, "expected ')'");
    } else {
      fail(peek(), "expected 'diag' or 'herm'");
    }
    m.metrics.push_back(std::move(decl));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int n_ = 0;
  ParamTablePtr table_;
};

}  // namespace

HermitianMetric MetricDecl::build(int n) const {
  if (diag) return HermitianMetric::diagonal(n, diag_entries);
  return HermitianMetric::hermitian(n, herm_entries);
}

bool MetricDecl::operator==(const MetricDecl& o) const {
  return name == o.name && diag == o.diag && diag_entries == o.diag_entries &&
         herm_entries == o.herm_entries;
}

StructureEquations ManifoldFile::structure() const {
  return StructureEquations(n, diffs, params);
}

const MetricDecl* ManifoldFile::find_metric(const std::string& metric_name) const {
  for (const MetricDecl& m : metrics) {
    if (m.name == metric_name) return &m;
  }
  return nullptr;
}

bool ManifoldFile::operator==(const ManifoldFile& o) const {
  if (n != o.n || diffs != o.diffs || metrics != o.metrics) return false;
  if (!params != !o.params) return false;
  if (params && !(*params == *o.params)) return false;
  return true;
}

ManifoldFile parse(const std::string& text, const std::string& name) {
  return Parser(text).run(name);
}

std::string print(const ManifoldFile& m) {
  std::string out = "dim " + std::to_string(m.n) + "\n";
  if (m.params) {
    std::vector<std::string> names;
    bool run_real = true;
    auto flush = [&]() {
      if (names.empty()) return;
      out += "param";
      for (const std::string& s : names) out += " " + s;
      out += run_real ? " : real\n" : " : complex\n";
      names.clear();
    };
    for (std::size_t i = 0; i < m.params->size(); ++i) {
      const ParamSymbol& s = m.params->symbol(i);
      if (!s.primary) continue;
      if (!names.empty() && s.real != run_real) flush();
      run_real = s.real;
      names.push_back(s.name);
    }
    flush();
  }
  for (int j = 1; j <= m.n; ++j) {
    out += "d w" + std::to_string(j) + " = " + m.diffs[size_t(j - 1)].str() + "\n";
  }
  for (const MetricDecl& decl : m.metrics) {
    out += "metric " + decl.name + " = ";
    if (decl.diag) {
      out += "diag(";
      for (std::size_t i = 0; i < decl.diag_entries.size(); ++i) {
        if (i) out += ", ";
        out += decl.diag_entries[i].str();
      }
      out += ")\n";
    } else {
      out += "herm(";
      bool first = true;
      for (const auto& [jk, entry] : decl.herm_entries) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(jk.first) + " " + std::to_string(jk.second) + " " + entry.str();
      }
      out += ")\n";
    }
  }
  return out;
}

GaussianRational parse_gaussian(const std::string& text) {
  PolyScalar p = Parser(text).run_scalar();
  if (!p.is_constant()) throw ParseError(1, 1, "literal is not constant");
  return p.constant_value();
}

Rational parse_rational(const std::string& text) {
  GaussianRational v = parse_gaussian(text);
  if (!v.is_real()) throw ParseError(1, 1, "literal must be real");
  return v.re;
}

}  // namespace nilforms
