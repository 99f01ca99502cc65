#include <doctest.h>

#include "factorforge/suite.hpp"
#include "helpers.hpp"

using namespace fft;

TEST_CASE("claim selection") {
  const auto quick = select_claims("quick");
  const auto all = select_claims("all");
  CHECK_FALSE(quick.empty());
  CHECK(all.size() == suite_claims().size());
  CHECK(quick.size() < all.size());
  CHECK(select_claims("bergman-a4,s4-multifold") == std::vector<std::string>{"bergman-a4", "s4-multifold"});
  CHECK_THROWS_AS(select_claims("no-such-claim"), Error);
  CHECK(run_suite({}).empty());
  CHECK(suite_json(run_suite({}))["claims"].empty());
}

TEST_CASE("quick claims pass") {
  const auto results = run_suite(select_claims("quick"));
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(suite_text({r}));
    CHECK(r.outcome == ClaimOutcome::Pass);
  }
  const auto json = suite_json(results);
  CHECK(json["schema"] == "factorforge.suite/1");
  CHECK(json["claims"].size() == results.size());
}

TEST_CASE("a tiny budget is reported, not failed") {
  const auto results = run_suite({"bergman-a4"}, 1);
  REQUIRE(results.size() == 1);
  CHECK(results[0].outcome != ClaimOutcome::Fail);
}
