#include "hallpath/json_io.hpp"

#include <algorithm>

#include "hallpath/errors.hpp"

namespace hallpath {

namespace {

json poly_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& term : p.terms()) out.push_back(json::array({term.e.a, term.e.b, term.c.get_str()}));
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial JSON must be a list of [a, b, \"r/s\"] terms");
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw InvalidInput("polynomial term must be [a, b, \"r/s\"]");
    p += LaurentPoly::monomial(t[0].get<int>(), t[1].get<int>(), rational_from_json(t[2]));
  }
  return p;
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be a list of integers");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(x.get<int>());
  return out;
}

}  // namespace

json to_json(const RatFunc& r) { return json{{"num", poly_json(r.num())}, {"den", poly_json(r.den())}}; }

RatFunc ratfunc_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return RatFunc(rational_from_json(j));
  if (!j.is_object() || !j.contains("num")) throw InvalidInput("RatFunc JSON needs \"num\" and \"den\"");
  const LaurentPoly num = poly_from_json(j.at("num"));
  const LaurentPoly den = j.contains("den") ? poly_from_json(j.at("den")) : LaurentPoly(1);
  if (den.is_zero()) throw InvalidInput("RatFunc JSON has a zero denominator");
  return RatFunc(num, den);
}

json to_json(const mpq_class& x) { return x.get_str(); }

mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) throw InvalidInput("expected a rational string \"r/s\"");
  mpq_class x;
  if (x.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad rational '" + j.get<std::string>() + "'");
  if (x.get_den() == 0) throw InvalidInput("rational with zero denominator");
  x.canonicalize();
  return x;
}

json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j) { return Partition(int_list(j, "partition")); }

json to_json(const BoxPos& b) { return json::array({b.row, b.col}); }

BoxPos box_from_json(const json& j) {
  const auto v = int_list(j, "box");
  if (v.size() != 2) throw InvalidInput("box must be [row, col]");
  return BoxPos{v[0], v[1]};
}

json to_json(const State& s) {
  json w = json::array();
  for (auto it = s.w.rbegin(); it != s.w.rend(); ++it) w.push_back(to_json(*it));
  return json{{"side", s.side == Side::Plus ? "+" : "-"}, {"lambda", to_json(s.lambda)}, {"w", w}};
}

State state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lambda")) throw InvalidInput("state JSON needs \"lambda\"");
  const std::string side = j.value("side", std::string("+"));
  if (side != "+" && side != "-") throw InvalidInput("state side must be \"+\" or \"-\"");
  std::vector<BoxPos> w;
  if (j.contains("w"))
    for (const auto& b : j.at("w")) w.push_back(box_from_json(b));
  std::reverse(w.begin(), w.end());
  State s = State::make(side == "+" ? Side::Plus : Side::Minus, partition_from_json(j.at("lambda")), std::move(w));
  if (!is_valid_state(s)) throw InvalidInput("invalid state " + s.to_string());
  return s;
}

Vect<RatFunc> vect_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("vector JSON must be a list of [state, coefficient] pairs");
  Vect<RatFunc> v;
  for (const auto& p : j) v.add(state_from_json(p.at(0)), ratfunc_from_json(p.at(1)));
  return v;
}

Vect<mpq_class> point_vect_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("vector JSON must be a list of [state, coefficient] pairs");
  Vect<mpq_class> v;
  for (const auto& p : j) v.add(state_from_json(p.at(0)), rational_from_json(p.at(1)));
  return v;
}

json to_json(const Expr& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms()) terms.push_back(json{{"word", w.to_string()}, {"coeff", to_json(c)}});
  return json{{"source", e.source()}, {"target", e.target()}, {"terms", terms}};
}

Expr expr_from_json(const json& j) {
  Expr e(j.at("source").get<int>(), j.at("target").get<int>());
  for (const auto& t : j.at("terms")) {
    Word w = parse_word(t.at("word").get<std::string>(), e.source());
    w.validate();
    if (w.source != e.source() || w.target() != e.target())
      throw LevelError("term '" + w.to_string() + "' does not match the expression levels");
    e.add(w, ratfunc_from_json(t.at("coeff")));
  }
  return e;
}

json to_json(const NormalForm& nf, int level) {
  json terms = json::array();
  for (const auto& [t, c] : nf) {
    json ys = json::array();
    for (const auto& m : t.ys) ys.push_back(m);
    json special = nullptr;
    if (t.tail) {
      json steps = json::array();
      for (const auto& s : t.tail->steps)
        steps.push_back(json{{"letter", s.kind == LetterKind::Dminus ? "d-" : "phi"}, {"z1", s.z1}});
      special = json{{"steps", steps}, {"tail", t.tail->tail}};
    }
    terms.push_back(json{{"term", t.to_string()},
                         {"kind", t.is_unit() ? "unit" : t.is_special() ? "special" : "factorizable"},
                         {"ys", ys},
                         {"special", special},
                         {"coeff", to_json(c)}});
  }
  return json{{"level", level}, {"terms", terms}, {"expr", to_json(to_expr(nf, level))}};
}

NormalForm normal_form_from_json(const json& j) {
  NormalForm nf;
  for (const auto& t : j.at("terms")) {
    NormalTerm term;
    for (const auto& m : t.at("ys")) term.ys.push_back(int_list(m, "Y index"));
    const json& sp = t.at("special");
    if (!sp.is_null()) {
      SpecialWord s;
      for (const auto& st : sp.at("steps")) {
        const std::string l = st.at("letter").get<std::string>();
        if (l != "d-" && l != "phi") throw InvalidInput("special step must be \"d-\" or \"phi\"");
        s.steps.push_back({l == "d-" ? LetterKind::Dminus : LetterKind::Phi, st.at("z1").get<int>()});
      }
      s.tail = int_list(sp.at("tail"), "tail");
      term.tail = s;
    }
    nf[term] += ratfunc_from_json(t.at("coeff"));
  }
  return nf;
}

json to_json(const RelationReport& r) {
  return json{{"id", r.id},
              {"family", r.family},
              {"params", r.params},
              {"status", r.status == Status::Pass ? "pass" : "fail"},
              {"domain_size", r.domain_size},
              {"witness", r.witness},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"note", r.note}};
}

RelationReport report_from_json(const json& j) {
  RelationReport r;
  r.id = j.at("id").get<std::string>();
  r.family = j.at("family").get<std::string>();
  r.params = j.at("params").get<std::string>();
  const std::string st = j.at("status").get<std::string>();
  if (st != "pass" && st != "fail") throw InvalidInput("status must be \"pass\" or \"fail\"");
  r.status = st == "pass" ? Status::Pass : Status::Fail;
  r.domain_size = j.at("domain_size").get<size_t>();
  r.witness = j.value("witness", "");
  r.lhs = j.value("lhs", "");
  r.rhs = j.value("rhs", "");
  r.note = j.value("note", "");
  return r;
}

json report_file(const CheckConfig& cfg, const std::string& mode, const std::vector<RelationReport>& reports) {
  json rel = json::array();
  size_t passed = 0;
  for (const auto& r : reports) {
    rel.push_back(to_json(r));
    if (r.status == Status::Pass) ++passed;
  }
  json select = json::array();
  for (const auto& s : cfg.select) select.push_back(s);
  return json{{"config",
               {{"degree_cap", cfg.policy.max_boxes},
                {"level_cap", cfg.policy.max_level},
                {"series_order", cfg.series_order},
                {"grid", cfg.grid},
                {"y_grid", cfg.y_grid},
                {"y_arity", cfg.y_arity},
                {"random_words", cfg.random_words},
                {"seed", cfg.seed},
                {"relations", select}}},
              {"mode", mode},
              {"reports", rel},
              {"summary", {{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}}}};
}

}  // namespace hallpath
