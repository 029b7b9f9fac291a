#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hallpath/state.hpp"
#include "hallpath/word.hpp"

namespace hallpath {

struct CheckConfig {
  TruncationPolicy policy{};
  int series_order = 6;
  int grid = 2;    // indices of e, f and Delta commutators run over [-grid, grid]
  int y_grid = 1;  // indices of Y words
  int y_arity = 3;
  int random_words = 200;
  std::uint64_t seed = 20240611;
  unsigned threads = 0;  // 0: HALLPATH_THREADS, else hardware concurrency
  bool fast = false;     // evaluate at (q0, t0) instead of exactly
  mpq_class q0{3, 7};
  mpq_class t0{-5, 11};
  std::vector<std::string> select;  // relation ids or family names; empty selects all
};

enum class Status { Pass, Fail };

struct RelationReport {
  std::string id;
  std::string family;
  std::string params;
  Status status = Status::Pass;
  size_t domain_size = 0;
  std::string witness;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct RelationInfo {
  std::string id;
  std::string family;
  std::string statement;
};

// Every registered relation, in run order.
std::vector<RelationInfo> list_relations();

class Checker {
 public:
  explicit Checker(CheckConfig cfg);
  ~Checker();
  Checker(const Checker&) = delete;
  Checker& operator=(const Checker&) = delete;

  // Runs the relations picked by config().select.
  std::vector<RelationReport> run();
  // Runs one relation id or every relation of one family.
  std::vector<RelationReport> run(const std::string& id_or_family);

  // lhs - rhs applied to every state of the source level within the truncation margin.
  RelationReport check_identity(const std::string& id, const std::string& family, const std::string& params,
                                const Expr& lhs, const Expr& rhs);

  const CheckConfig& config() const;
  unsigned threads() const;
  std::string mode() const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

// Exit-code helper: true when every report passed.
bool all_passed(const std::vector<RelationReport>& reports);

}  // namespace hallpath
