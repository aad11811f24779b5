#include "doctest.h"

#include "sbdo/errors.hpp"
#include "sbdo/verify.hpp"

using namespace sbdo;

TEST_CASE("reports do not depend on the number of jobs") {
  VerifyOptions o;
  o.n_max = 2;
  o.m_max = 2;
  o.checks = {"gn", "covB", "lemma", "ledger"};
  const VerifyReport one = run_verification(o);
  o.jobs = 4;
  const VerifyReport four = run_verification(o);
  CHECK(one.all_passed());
  CHECK(one.json(false) == four.json(false));
  // Records follow the suite order, not the order of the request.
  CHECK(one.records.front().check == "lemma");
  CHECK(one.records.size() == 2 + 2 + 10 + 2);
}

TEST_CASE("option validation") {
  VerifyOptions o;
  o.n_max = 5;
  CHECK_THROWS_AS(run_verification(o), DomainError);
  o.n_max = 1;
  o.m_max = 0;
  CHECK_THROWS_AS(run_verification(o), DomainError);
  o.m_max = 1;
  o.jobs = 0;
  CHECK_THROWS_AS(run_verification(o), DomainError);
  o.jobs = 1;
  o.checks = {"lemma", "bogus"};
  CHECK_THROWS_AS(run_verification(o), DomainError);
}

TEST_CASE("a failing record makes the report fail") {
  VerifyReport r;
  r.records.push_back({"lemma", "n=1", true, "", 0});
  CHECK(r.all_passed());
  r.records.push_back({"main", "n=1", false, "normalized symbols, constant 1", 0});
  CHECK_FALSE(r.all_passed());
  CHECK(r.text().find("FAIL main n=1") != std::string::npos);
  CHECK(r.text().find("1/2 checks passed") != std::string::npos);
}
