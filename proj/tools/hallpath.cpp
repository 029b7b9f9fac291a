#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hallpath/checker.hpp"
#include "hallpath/coefficients.hpp"
#include "hallpath/eha.hpp"
#include "hallpath/errors.hpp"
#include "hallpath/json_io.hpp"
#include "hallpath/oracle.hpp"
#include "hallpath/polyrep.hpp"
#include "hallpath/rewriter.hpp"

using namespace hallpath;

namespace {

struct Common {
  int degree_cap = 6;
  int level_cap = 3;
  std::string params;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--degree-cap,-N", c.degree_cap, "Total box cap N")->check(CLI::PositiveNumber);
  sub->add_option("--level-cap,-K", c.level_cap, "Level cap K")->check(CLI::PositiveNumber);
  sub->add_option("--params", c.params, "Evaluate at a point instead of exactly: q=<rat>,t=<rat>");
  sub->add_option("--out,-o", c.out, "Write the result to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

std::optional<std::pair<mpq_class, mpq_class>> parse_params(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::optional<mpq_class> q, t;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("expected q=<rat>,t=<rat>, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const mpq_class v = rational_from_json(item.substr(eq + 1));
    if (key == "q")
      q = v;
    else if (key == "t")
      t = v;
    else
      throw InvalidInput("unknown parameter '" + key + "'");
  }
  if (!q || !t) throw InvalidInput("--params needs both q and t");
  return std::make_pair(*q, *t);
}

// Inline JSON, or @path to read it from a file.
json read_json_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InvalidInput("cannot open " + arg.substr(1));
    return json::parse(in);
  }
  return json::parse(arg);
}

void emit(const Common& c, const json& j, const std::string& text) {
  const std::string body = c.format == "json" ? j.dump(2) + "\n" : text;
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InvalidInput("cannot write " + c.out);
  f << body;
}

TruncationPolicy policy_of(const Common& c) { return TruncationPolicy{c.degree_cap, c.level_cap}; }

template <class F>
json act_with(PolyRep<F>& rep, const NamedOperator& op, const Vect<typename F::Scalar>& v, std::string& text) {
  const auto r = apply_operator(rep, op, v);
  text = r.to_string() + "\n";
  return to_json(r);
}

int cmd_act(const Common& c, const std::string& word, const std::string& state, int level) {
  const json sj = read_json_arg(state);
  Vect<RatFunc> v;
  if (sj.is_array())
    v = vect_from_json(sj);
  else
    v = Vect<RatFunc>(state_from_json(sj));
  int src = level;
  if (!v.is_zero()) src = v.begin()->first.level();
  const NamedOperator op = parse_operator(word, src);
  if (op.expr)
    for (const auto& [s, x] : v)
      if (s.level() != op.source())
        throw LevelError("state " + s.to_string() + " is not at the source level " + std::to_string(op.source()) +
                         " of '" + word + "'");
  std::string text;
  json out;
  if (auto p = parse_params(c.params)) {
    PolyRep<PointField> rep(PointField{p->first, p->second}, policy_of(c));
    Vect<mpq_class> pv;
    for (const auto& [s, x] : v) pv.add(s, x.eval(p->first, p->second));
    out = act_with(rep, op, pv, text);
  } else {
    PolyRep<ExactField> rep(ExactField{}, policy_of(c));
    out = act_with(rep, op, v, text);
  }
  emit(c, out, text);
  return 0;
}

int cmd_verify(const Common& c, const std::string& relations, int series_order, std::uint64_t seed, unsigned threads,
               bool list) {
  if (list) {
    json out = json::array();
    std::string text;
    for (const auto& r : list_relations()) {
      out.push_back(json{{"id", r.id}, {"family", r.family}, {"statement", r.statement}});
      text += r.id + "  [" + r.family + "]  " + r.statement + "\n";
    }
    emit(c, out, text);
    return 0;
  }
  CheckConfig cfg;
  cfg.policy = policy_of(c);
  cfg.series_order = series_order;
  cfg.seed = seed;
  cfg.threads = threads;
  if (auto p = parse_params(c.params)) {
    cfg.fast = true;
    cfg.q0 = p->first;
    cfg.t0 = p->second;
  }
  std::stringstream ss(relations);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) cfg.select.push_back(item);
  const auto known = list_relations();
  for (const auto& s : cfg.select) {
    bool ok = s == "all";
    for (const auto& r : known) ok = ok || r.id == s || r.family == s;
    if (!ok) throw InvalidInput("unknown relation or family '" + s + "'");
  }
  Checker checker(cfg);
  const auto reports = checker.run();
  std::string text;
  for (const auto& r : reports) {
    text += std::string(r.status == Status::Pass ? "PASS " : "FAIL ") + r.id + " " + r.params +
            " (domain " + std::to_string(r.domain_size) + ")";
    if (!r.note.empty()) text += " [" + r.note + "]";
    if (r.status == Status::Fail) text += "\n  witness " + r.witness + "\n  lhs " + r.lhs + "\n  rhs " + r.rhs;
    text += "\n";
  }
  emit(c, report_file(cfg, checker.mode(), reports), text);
  return all_passed(reports) ? 0 : 1;
}

template <class F>
json matrix_with(PolyRep<F>& rep, const NamedOperator& op, int margin, std::string& text) {
  using S = typename F::Scalar;
  const int N = rep.policy().max_boxes;
  const auto cols = enumerate_states(op.source(), N - margin);
  const auto rows = enumerate_states(op.target(), N);
  std::map<State, size_t> row_index;
  for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
  json triplets = json::array();
  for (size_t j = 0; j < cols.size(); ++j) {
    const auto img = apply_operator(rep, op, Vect<S>(cols[j]));
    for (const auto& [s, x] : img) {
      triplets.push_back(json::array({row_index.at(s), j, to_json(x)}));
      text += "(" + std::to_string(row_index.at(s)) + ", " + std::to_string(j) + ") " + scalar_string(x) + "\n";
    }
  }
  json rj = json::array(), cj = json::array();
  for (const auto& s : rows) rj.push_back(to_json(s));
  for (const auto& s : cols) cj.push_back(to_json(s));
  return json{{"operator", op.name},   {"source", op.source()}, {"target", op.target()}, {"mode", rep.field().name()},
              {"rows", rj},            {"cols", cj},            {"triplets", triplets}};
}

int cmd_matrix(const Common& c, const std::string& name, int level) {
  const NamedOperator op = parse_operator(name, level);
  const int margin = op.expr ? op.expr->margin() : 0;
  std::string text;
  json out;
  if (auto p = parse_params(c.params)) {
    PolyRep<PointField> rep(PointField{p->first, p->second}, policy_of(c));
    out = matrix_with(rep, op, margin, text);
  } else {
    PolyRep<ExactField> rep(ExactField{}, policy_of(c));
    out = matrix_with(rep, op, margin, text);
  }
  emit(c, out, text);
  return 0;
}

int cmd_rewrite(const Common& c, const std::string& word, int level, bool check) {
  const Word w = parse_word(word, level);
  w.validate();
  SpecialRewriter rw;
  const NormalForm nf = rw.to_special(w);
  json out = to_json(nf, w.source);
  std::string text = to_string(nf) + "\n";
  if (check) {
    const bool ok = oracle_equal(Expr(w), to_expr(nf, w.source), policy_of(c));
    out["oracle_equal"] = ok;
    text += std::string("oracle ") + (ok ? "equal" : "DIFFERENT") + "\n";
    if (!ok) {
      emit(c, out, text);
      return 1;
    }
  }
  emit(c, out, text);
  return 0;
}

int cmd_psi(const Common& c, const std::string& lambda, const std::string& sign, int order) {
  const Partition lam = partition_from_json(read_json_arg(lambda));
  const PsiSign s = sign == "+" ? PsiSign::Plus : PsiSign::Minus;
  const Series co = psi_coeffs(s, lam, order);
  json arr = json::array();
  std::string text;
  for (int j = 0; j <= order; ++j) {
    arr.push_back(to_json(co[j]));
    text += std::string("psi") + sign + "[" + std::to_string(j) + "] = " + co[j].to_string() + "\n";
  }
  emit(c, json{{"lambda", to_json(lam)}, {"sign", sign}, {"order", order}, {"coefficients", arr}}, text);
  return 0;
}

int cmd_coeffs(const Common& c, const std::string& lambda) {
  const Partition lam = partition_from_json(read_json_arg(lambda));
  json add = json::array(), rem = json::array();
  std::string text = "d = " + d_lambda(lam).to_string() + "\n";
  for (const auto& x : addable_boxes(lam)) {
    const RatFunc v = c_coeff(lam, x);
    add.push_back(json{{"box", to_json(x)}, {"c", to_json(v)}, {"text", v.to_string()}});
    text += "c(" + lam.to_string() + "; " + x.to_string() + ") = " + v.to_string() + "\n";
  }
  for (const auto& x : removable_boxes(lam)) {
    const RatFunc v = cstar_coeff(lam, x), l = cstar_lambda_form(lam, x);
    rem.push_back(json{{"box", to_json(x)}, {"cstar", to_json(v)}, {"cstar_lambda_form", to_json(l)}, {"text", v.to_string()}});
    text += "c*(" + lam.to_string() + "; " + x.to_string() + ") = " + v.to_string() + "\n";
  }
  emit(c, json{{"lambda", to_json(lam)}, {"d", to_json(d_lambda(lam))}, {"addable", add}, {"removable", rem}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the polynomial representation of the double Dyck path algebra"};
  app.require_subcommand(1);

  Common act_c, ver_c, mat_c, rew_c, psi_c, co_c;
  std::string word, state, relations = "all", op_name, lambda, sign = "+";
  int level = 0, series_order = 6, order = 6;
  std::uint64_t seed = CheckConfig{}.seed;
  unsigned threads = 0;
  bool list = false, check = false;

  auto* act = app.add_subcommand("act", "Apply a word or named operator to a state or vector");
  add_common(act, act_c);
  act->add_option("--word,-w", word, "Word in surface syntax or e[m], f[m], Y[..], psi+[m], ...")->required();
  act->add_option("--state,-s", state, "State or vector JSON, or @file")->required();
  act->add_option("--level", level, "Source level for phi when the vector is empty");

  auto* ver = app.add_subcommand("verify", "Check relations on truncated domains");
  add_common(ver, ver_c);
  ver->add_option("--relations,-r", relations, "Comma-separated relation ids or families, or all");
  ver->add_option("--series-order,-M", series_order, "Series order")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", seed, "Random seed");
  ver->add_option("--threads", threads, "Worker threads (default HALLPATH_THREADS or all cores)");
  ver->add_flag("--list", list, "List relation ids and exit");

  auto* mat = app.add_subcommand("matrix", "Export an operator as a triplet matrix");
  add_common(mat, mat_c);
  mat->add_option("--op", op_name, "Operator name or word")->required();
  mat->add_option("--level", level, "Source level for phi and bare words");

  auto* rew = app.add_subcommand("rewrite", "Rewrite a word into special and factorizable terms");
  add_common(rew, rew_c);
  rew->add_option("--word,-w", word, "Word in surface syntax")->required();
  rew->add_option("--level", level, "Source level when the word has no 1_k");
  rew->add_flag("--check", check, "Compare the result with the input on the oracle");

  auto* psi = app.add_subcommand("psi", "psi eigenvalue series on I_lambda");
  add_common(psi, psi_c);
  psi->add_option("--lambda,-l", lambda, "Partition JSON, e.g. [2,1]")->required();
  psi->add_option("--sign", sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
  psi->add_option("--order,-M", order, "Series order")->check(CLI::NonNegativeNumber);

  auto* co = app.add_subcommand("coeffs", "c, c* and d for a partition");
  add_common(co, co_c);
  co->add_option("--lambda,-l", lambda, "Partition JSON, e.g. [2,1]")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*act) return cmd_act(act_c, word, state, level);
    if (*ver) return cmd_verify(ver_c, relations, series_order, seed, threads, list);
    if (*mat) return cmd_matrix(mat_c, op_name, level);
    if (*rew) return cmd_rewrite(rew_c, word, level, check);
    if (*psi) return cmd_psi(psi_c, lambda, sign, order);
    if (*co) return cmd_coeffs(co_c, lambda);
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
