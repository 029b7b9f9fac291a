#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "hallpath/checker.hpp"
#include "hallpath/ratfunc.hpp"
#include "hallpath/rewriter.hpp"
#include "hallpath/state.hpp"
#include "hallpath/vect.hpp"
#include "hallpath/word.hpp"

namespace hallpath {

using json = nlohmann::ordered_json;

// {"num": [[a, b, "r/s"], ...], "den": [...]}
json to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const json& j);
// Exact rational as a string "r/s".
json to_json(const mpq_class& x);
mpq_class rational_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);
json to_json(const BoxPos& b);
BoxPos box_from_json(const json& j);

// {"side": "+", "lambda": [2, 1], "w": [[row, col], ...]}, w listed as w_k, ..., w_1.
json to_json(const State& s);
State state_from_json(const json& j);

// List of [State, scalar] pairs.
template <class S>
json to_json(const Vect<S>& v) {
  json out = json::array();
  for (const auto& [s, c] : v) out.push_back(json::array({to_json(s), to_json(c)}));
  return out;
}
Vect<RatFunc> vect_from_json(const json& j);
Vect<mpq_class> point_vect_from_json(const json& j);

// {"source": k, "target": l, "terms": [{"word": "1_0 d- d+ 1_0", "coeff": RatFunc}, ...]}
json to_json(const Expr& e);
Expr expr_from_json(const json& j);

json to_json(const NormalForm& nf, int level);
NormalForm normal_form_from_json(const json& j);

json to_json(const RelationReport& r);
RelationReport report_from_json(const json& j);
// Report file: config, evaluation mode, one entry per relation instance and a summary.
json report_file(const CheckConfig& cfg, const std::string& mode, const std::vector<RelationReport>& reports);

}  // namespace hallpath
