#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nilforms/dsl.hpp"
#include "nilforms/families.hpp"
#include "nilforms/report.hpp"

using namespace nilforms;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

ManifoldFile load(const std::string& path) {
  return parse(read_file(path), stem_of(path));
}

void add_validation(Report& r, const StructureEquations& S) {
  r.validation = S.validation();
  if (S.validated()) {
    r.abelian = S.is_abelian();
    r.canonical_closed = S.canonical_form_closed();
  }
}

int emit(Report& r, bool all_ok, const std::string& output) {
  r.ok = all_ok;
  std::cout << r.render(output);
  return all_ok ? 0 : 1;
}

int cmd_validate(const std::string& path, const std::string& output) {
  ManifoldFile mf = load(path);
  StructureEquations S = mf.structure();
  Report r;
  r.command = "validate";
  r.manifold = mf.name;
  r.n = mf.n;
  add_validation(r, S);
  return emit(r, S.validated(), output);
}

HermitianMetric named_metric(const ManifoldFile& mf, const std::string& name) {
  const MetricDecl* decl = mf.find_metric(name);
  if (!decl) throw InputError("unknown metric '" + name + "'");
  return decl->build(mf.n);
}

int parse_embedded_k(const std::string& token) {
  std::string digits = token.substr(token.find('=') + 1);
  if (digits.empty() || digits.size() > 6 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("malformed condition '" + token + "'");
  return std::stoi(digits);
}

void run_condition(Report& r, const StructureEquations& S, const HermitianMetric& M,
                   const std::string& token, int k_flag) {
  int n = S.n();
  if (token == "balanced") {
    r.conditions.push_back(is_balanced(S, M));
  } else if (token == "skt") {
    r.conditions.push_back(is_skt(S, M));
  } else if (token == "astheno") {
    r.conditions.push_back(is_astheno_kahler(S, M));
  } else if (token == "gauduchon") {
    r.conditions.push_back(is_k_gauduchon(S, M, n - 1));
  } else if (token == "kgauduchon") {
    if (k_flag < 0) throw InputError("condition 'kgauduchon' needs --k");
    r.conditions.push_back(is_k_gauduchon(S, M, k_flag));
  } else if (token.rfind("kgauduchon=", 0) == 0) {
    r.conditions.push_back(is_k_gauduchon(S, M, parse_embedded_k(token)));
  } else if (token == "all") {
    r.conditions.push_back(is_balanced(S, M));
    if (n >= 3) {
      r.conditions.push_back(is_skt(S, M));
      r.conditions.push_back(is_astheno_kahler(S, M));
    }
    for (int k = 1; k <= n - 1; ++k) r.conditions.push_back(is_k_gauduchon(S, M, k));
    r.identities.push_back({"constant relation", std::nullopt, verify_constant_relation(S, M)});
    for (int k = 1; k <= n - 1; ++k)
      r.identities.push_back({"degree identity", k, verify_degree_identity(S, M, k)});
  } else {
    throw InputError("unknown condition '" + token + "'");
  }
}

int cmd_check(const std::string& path, const std::string& metric_name,
              const std::string& conditions, int k_flag, const std::string& output) {
  ManifoldFile mf = load(path);
  StructureEquations S = mf.structure();
  if (!S.validated()) {
    std::string why;
    for (const std::string& f : S.validation().failures) why += "\n  " + f;
    throw InputError("structure fails validation:" + why);
  }
  HermitianMetric M = named_metric(mf, metric_name);
  Report r;
  r.command = "check";
  r.manifold = mf.name;
  r.n = mf.n;
  r.metric = metric_name;
  for (const std::string& token : split_csv(conditions)) run_condition(r, S, M, token, k_flag);
  bool all_ok = true;
  for (const ConditionReport& c : r.conditions) all_ok = all_ok && c.holds();
  for (const IdentityEntry& e : r.identities) all_ok = all_ok && e.ok;
  return emit(r, all_ok, output);
}

int cmd_constants(const std::string& path, const std::string& metric_name,
                  const std::string& output) {
  ManifoldFile mf = load(path);
  StructureEquations S = mf.structure();
  if (!S.validated()) throw InputError("structure fails validation");
  HermitianMetric M = named_metric(mf, metric_name);
  Report r;
  r.command = "constants";
  r.manifold = mf.name;
  r.n = mf.n;
  r.metric = metric_name;
  for (int k = 1; k <= mf.n - 1; ++k) {
    RatScalar c = gauduchon_constant(S, M, k);
    ConstantEntry e;
    e.k = k;
    e.numerator = c.num().str();
    e.denominator = c.den().str();
    if (c.is_constant()) e.value = c.constant_value().str();
    r.constants.push_back(std::move(e));
  }
  return emit(r, true, output);
}

int cmd_family_heisenberg(int n, const std::string& a_csv, const std::string& output) {
  if (n < 3) throw InputError("--n must be at least 3");
  if (a_csv.empty()) throw InputError("--a is required");
  std::vector<Rational> a;
  for (const std::string& tok : split_csv(a_csv)) a.push_back(parse_rational(tok));

  Report r;
  r.command = "family";
  r.manifold = "heisenberg";
  r.n = n;
  r.family.emplace_back("kind", "heisenberg");

  if (int(a.size()) == n - 2) {
    std::vector<GaussianRational> head(a.begin(), a.end());
    Rational tail = solve_balanced_tail(head).re;
    a.push_back(tail);
    r.family.emplace_back("completed_tail", rational_str(tail));
  }
  if (int(a.size()) != n - 1)
    throw InputError("expected " + std::to_string(n - 1) + " (or " + std::to_string(n - 2) +
                     ") coefficients in --a");

  HeisenbergFamily fam;
  fam.n = n;
  for (const Rational& v : a) fam.a.emplace_back(GaussianRational(v));
  {
    std::string shown;
    for (std::size_t i = 0; i < a.size(); ++i) shown += (i ? ", " : "") + rational_str(a[i]);
    r.family.emplace_back("a", shown);
  }
  if (!fam.nonzero_hypothesis())
    r.warnings.push_back("zero coefficient in --a: the family asks for nonzero entries");

  StructureEquations S = fam.build();
  add_validation(r, S);
  ConditionReport balanced = is_balanced(S, HermitianMetric::canonical(n));
  bool all_ok = S.validated() && balanced.holds();
  r.conditions.push_back(std::move(balanced));

  bool positive_head = true;
  for (int j = 0; j < n - 2; ++j) positive_head = positive_head && a[size_t(j)] > 0;
  if (r.conditions.back().holds() && positive_head) {
    HermitianMetric M = solve_astheno_diagonal(n, a);
    std::string shown;
    for (int j = 1; j <= n; ++j)
      shown += (j > 1 ? ", " : "") + M.entry(j, j).constant_value().str();
    r.family.emplace_back("b", shown);
    ConditionReport astheno = is_astheno_kahler(S, M);
    all_ok = all_ok && astheno.holds();
    r.conditions.push_back(std::move(astheno));
  } else {
    r.warnings.push_back(
        "diagonal solver skipped: needs a balanced vector with positive leading entries");
  }
  return emit(r, all_ok, output);
}

int cmd_family_xabc(const std::string& A_lit, const std::string& B_lit,
                      const std::string& C_lit, const std::string& alpha_lit,
                      const std::string& beta_lit, const std::string& output) {
  GaussianRational A = parse_gaussian(A_lit);
  GaussianRational B = parse_gaussian(B_lit);
  GaussianRational C = parse_gaussian(C_lit);
  Rational alpha = parse_rational(alpha_lit);
  Rational beta = parse_rational(beta_lit);

  Report r;
  r.command = "family";
  r.manifold = "xabc";
  r.n = 4;
  r.family.emplace_back("kind", "xabc");
  r.family.emplace_back("A", A.str());
  r.family.emplace_back("B", B.str());
  r.family.emplace_back("C", C.str());
  r.family.emplace_back("alpha", rational_str(alpha));
  r.family.emplace_back("beta", rational_str(beta));

  StructureEquations S = build_xabc(A, B, C);
  add_validation(r, S);

  // gamma = alpha = beta = 1 always gives a balanced metric
  ConditionReport balanced = is_balanced(S, HermitianMetric::canonical(4));
  bool all_ok = S.validated() && balanced.holds();
  r.conditions.push_back(std::move(balanced));

  HermitianMetric M = solve_astheno_xabc(A, B, C, alpha, beta);
  r.family.emplace_back("gamma", M.entry(3, 3).constant_value().str());
  ConditionReport astheno = is_astheno_kahler(S, M);
  all_ok = all_ok && astheno.holds();
  r.conditions.push_back(std::move(astheno));
  for (int k = 1; k <= 3; ++k) {
    ConditionReport g = is_k_gauduchon(S, M, k);
    all_ok = all_ok && g.holds();
    r.conditions.push_back(std::move(g));
  }
  return emit(r, all_ok, output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for invariant Hermitian metrics on complex nilmanifolds"};
  app.require_subcommand(1);

  std::string output = "text";
  std::string file;
  std::string metric_name;
  std::string conditions = "all";
  int k_flag = -1;
  std::string kind;
  int n = 0;
  std::string a_csv;
  std::string A_lit = "0", B_lit = "0", C_lit = "0";
  std::string alpha_lit = "1", beta_lit = "1";

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", output, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "run the structure checks on a file");
  validate->add_option("file", file, "input file")->required();
  add_output(validate);

  CLI::App* check = app.add_subcommand("check", "decide metric conditions");
  check->add_option("file", file, "input file")->required();
  check->add_option("--metric", metric_name, "metric name declared in the file")->required();
  check->add_option("--condition", conditions,
                    "comma list: balanced, skt, astheno, gauduchon, kgauduchon=<k>, all");
  check->add_option("--k", k_flag, "k for the kgauduchon condition");
  add_output(check);

  CLI::App* constants = app.add_subcommand("constants", "volume ratios C_{F,k} for every k");
  constants->add_option("file", file, "input file")->required();
  constants->add_option("--metric", metric_name, "metric name declared in the file")->required();
  add_output(constants);

  CLI::App* family = app.add_subcommand("family", "build and solve a named family");
  family->add_option("kind", kind, "heisenberg or xabc")
      ->required()
      ->check(CLI::IsMember({"heisenberg", "xabc"}));
  family->add_option("--n", n, "dimension (heisenberg)");
  family->add_option("--a", a_csv, "comma list of rational coefficients (heisenberg)");
  family->add_option("--A", A_lit, "Gaussian rational literal (xabc)");
  family->add_option("--B", B_lit, "Gaussian rational literal (xabc)");
  family->add_option("--C", C_lit, "Gaussian rational literal (xabc)");
  family->add_option("--alpha", alpha_lit, "positive rational (xabc)");
  family->add_option("--beta", beta_lit, "positive rational (xabc)");
  add_output(family);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, output);
    if (check->parsed()) return cmd_check(file, metric_name, conditions, k_flag, output);
    if (constants->parsed()) return cmd_constants(file, metric_name, output);
    if (family->parsed()) {
      if (kind == "heisenberg") return cmd_family_heisenberg(n, a_csv, output);
      return cmd_family_xabc(A_lit, B_lit, C_lit, alpha_lit, beta_lit, output);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
