#include <set>

#include "doctest.h"
#include "hallpath/checker.hpp"
#include "hallpath/eha.hpp"
#include "hallpath/errors.hpp"

using namespace hallpath;

namespace {

CheckConfig small(std::vector<std::string> select, TruncationPolicy pol = {5, 3}) {
  CheckConfig cfg;
  cfg.policy = pol;
  cfg.select = std::move(select);
  cfg.threads = 2;
  return cfg;
}

}  // namespace

TEST_CASE("registry ids are unique") {
  std::set<std::string> ids;
  for (const auto& r : list_relations()) {
    CHECK(ids.insert(r.id).second);
    CHECK_FALSE(r.family.empty());
    CHECK_FALSE(r.statement.empty());
  }
  CHECK(ids.count("cubic_e"));
  CHECK(ids.count("ft_comparison"));
  CHECK(ids.count("rewriter_soundness"));
}

TEST_CASE("a true and a false identity") {
  Checker ch(small({}));
  const Expr e0(e_word(0));
  CHECK(ch.check_identity("x", "test", "", e0, e0).status == Status::Pass);
  const auto bad = ch.check_identity("y", "test", "", e0, Expr(e_word(1)));
  CHECK(bad.status == Status::Fail);
  CHECK_FALSE(bad.witness.empty());
  CHECK(bad.lhs != bad.rhs);
  CHECK(bad.domain_size > 0);
}

TEST_CASE("single relation families at a small policy") {
  Checker ch(small({}));
  for (const char* id : {"cubic_e", "hecke_quadratic+", "hecke_quadratic-", "ef_commutator"}) {
    const auto reports = ch.run(id);
    REQUIRE_FALSE(reports.empty());
    CHECK_MESSAGE(all_passed(reports), id);
  }
  CHECK_THROWS_AS(ch.run("no_such_relation"), InvalidInput);
}

TEST_CASE("relations that need a fourth level") {
  Checker ch(small({}, {6, 4}));
  bool saw_k3 = false;
  for (const auto& r : ch.run("phi2_T")) {
    CHECK_MESSAGE(r.status == Status::Pass, r.params);
    if (r.params.find("k=3") != std::string::npos) {
      saw_k3 = true;
      CHECK(r.domain_size > 0);
    }
  }
  CHECK(saw_k3);
  for (const char* id : {"phi_commute_T", "hecke_far+", "hecke_far-"}) {
    const auto reports = ch.run(id);
    REQUIRE_FALSE(reports.empty());
    for (const auto& r : reports) {
      CHECK_MESSAGE(r.status == Status::Pass, id);
      CHECK(r.domain_size > 0);
    }
  }
}

TEST_CASE("relations with no instance under the level cap are reported as vacuous") {
  Checker ch(small({}, {6, 3}));
  const auto reports = ch.run("phi_commute_T");
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == Status::Pass);
  CHECK(reports[0].domain_size == 0);
  CHECK(reports[0].note.find("level cap") != std::string::npos);
}

TEST_CASE("fast mode agrees with exact mode") {
  CheckConfig cfg = small({"DB0"});
  Checker exact(cfg);
  cfg.fast = true;
  Checker fast(cfg);
  const auto a = exact.run(), b = fast.run();
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].status == b[i].status);
  }
  CHECK(fast.mode().find("point") == 0);
}

TEST_CASE("reports do not depend on the thread count") {
  CheckConfig cfg = small({"Y_relation_1"});
  cfg.threads = 1;
  Checker one(cfg);
  cfg.threads = 4;
  Checker four(cfg);
  const auto a = one.run(), b = four.run();
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].domain_size == b[i].domain_size);
    CHECK(a[i].witness == b[i].witness);
  }
}
