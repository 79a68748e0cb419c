#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "maxitive/errors.hpp"
#include "maxitive/harness.hpp"
#include "maxitive/variation.hpp"

using namespace maxitive;
using test_util::MM;
using test_util::V;

TEST_CASE("trial rng is deterministic per (seed, stream) and unbiased draws stay in range") {
  TrialRng a(42, 7), b(42, 7), c(42, 8);
  std::vector<std::uint64_t> xs, ys;
  for (int i = 0; i < 64; ++i) {
    xs.push_back(a.next());
    ys.push_back(b.next());
  }
  CHECK(xs == ys);

  bool any_difference = false;
  for (int i = 0; i < 64; ++i) any_difference |= (c.next() != xs[static_cast<std::size_t>(i)]);
  CHECK(any_difference);

  TrialRng r(1, 2);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 3000; ++i) {
    std::uint64_t v = r.below(5);
    CHECK(v < 5);
    seen.insert(v);
  }
  CHECK(seen.size() == 5);

  CHECK_THROWS_AS(r.below(0), std::invalid_argument);
  CHECK_FALSE(r.chance(0, 16));
  CHECK(r.chance(16, 16));
}

TEST_CASE("config validation") {
  TrialConfig config;
  CHECK_NOTHROW(config.validate());

  TrialConfig bad = config;
  bad.max_atoms = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.max_atoms = 7;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = config;
  bad.trials = -1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = config;
  bad.value_grid.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.value_grid = {ExtRat::infinity()};  // no finite entry to draw
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = config;
  bad.infinity_weight = V("17/16");
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.infinity_weight = ExtRat::infinity();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("random measures are a pure function of (seed, index)") {
  TrialConfig config;
  config.seed = 1;
  CHECK(random_maxitive(config, 0) == random_maxitive(config, 0));
  CHECK(make_trial_case(config, 3).tau == make_trial_case(config, 3).tau);

  TrialConfig zeros;
  zeros.seed = 9;
  zeros.value_grid = {V("0")};
  for (int i = 0; i < 20; ++i) {
    MaxitiveMeasure tau = random_maxitive(zeros, i);
    for (const ExtRat& v : tau.atom_values()) CHECK(v.is_zero());
  }
}

TEST_CASE("generated nu values are always finite under the default grid") {
  TrialConfig config;
  config.seed = 5;
  for (int i = 0; i < 300; ++i) {
    TrialCase tc = make_trial_case(config, i);
    for (const ExtRat& v : tc.nu) CHECK(v.is_finite());
    CHECK(tc.labels.size() == tc.tau.size());
    CHECK(tc.labels.size() == tc.c.size());
    CHECK(tc.labels.size() >= 1);
    CHECK(tc.labels.size() <= 4);
  }
}

TEST_CASE("verify_representation on the worked examples") {
  RepVerdict v = verify_representation(MM({"1/2", "1", "0"}));
  CHECK(v.ok);
  CHECK_FALSE(v.failed_stage.has_value());
  CHECK(v.m == disjoint_variation(MM({"1/2", "1", "0"})));
  REQUIRE(v.c.has_value());
  CHECK(v.c->values()[0] == V("1/2"));
  CHECK(v.c->values()[1] == V("1"));
  CHECK(v.c->values()[2] == V("0"));

  CHECK(verify_representation(MM({"0", "0"})).ok);

  RepVerdict inf = verify_representation(MM({"inf", "1"}));
  CHECK(inf.ok);
  REQUIRE(inf.c.has_value());
  CHECK(inf.c->values()[0].is_infinite());
}

TEST_CASE("verify_corollary is gated on two-valuedness") {
  CHECK(verify_corollary(MM({"1", "0", "1"})).ok);
  CHECK(verify_corollary(MM({"1"})).ok);
  CHECK_THROWS_AS(verify_corollary(MM({"1/2", "1"})), PreconditionNotTwoValued);
}

TEST_CASE("verify_sugeno_murofushi covers both directions of the equivalence") {
  CHECK(verify_sugeno_murofushi(MM({"3", "1/2"}), MM({"2", "2"})).ok);
  CHECK(verify_sugeno_murofushi(MM({"0", "1"}), MM({"1", "0"})).ok);  // non-AC branch

  MaxitiveMeasure tau = MM({"1/2", "2", "0"});
  CheckVerdict self = verify_sugeno_murofushi(tau, tau);
  CHECK(self.ok);
  Density c = density(tau, tau);
  for (int atom = 0; atom < 3; ++atom) {
    if (tau.atom_value(atom).is_positive()) CHECK(c(atom) == V("1"));
  }

  CHECK_THROWS_AS(verify_sugeno_murofushi(MM({"1"}), MM({"inf"})), NotSigmaFinite);
  CHECK_THROWS_AS(verify_sugeno_murofushi(MM({"1"}), MM({"1", "1"})), SpaceMismatch);
}

TEST_CASE("every property holds on generated cases and failure text is empty") {
  TrialConfig config;
  config.seed = 77;
  for (int i = 0; i < 40; ++i) {
    TrialCase tc = make_trial_case(config, i);
    for (TrialProperty p : {TrialProperty::representation, TrialProperty::corollary,
                            TrialProperty::sugeno_murofushi, TrialProperty::variation_oracle_agreement,
                            TrialProperty::shilkret_oracle_agreement}) {
      CAPTURE(static_cast<int>(p));
      CHECK(property_holds(p, tc));
      CHECK(describe_property_failure(p, tc).empty());
    }
  }
}

TEST_CASE("shrinking deletes atoms first, then zeroes values") {
  // Synthetic property: a case "fails" while tau still carries an
  // infinite atom. The shrinker must reach one atom with everything
  // else zeroed.
  TrialCase failing;
  failing.labels = {"a", "b", "c", "d"};
  failing.tau = {V("1"), V("inf"), V("0"), V("inf")};
  failing.nu = {V("2"), V("1"), V("1/2"), V("7")};
  failing.c = {V("7"), V("0"), V("2"), V("1/3")};

  auto holds = [](const TrialCase& tc) {
    for (const ExtRat& v : tc.tau) {
      if (v.is_infinite()) return false;
    }
    return true;
  };
  REQUIRE_FALSE(holds(failing));

  TrialCase shrunk = shrink_case(failing, holds);
  // deletions land on the last infinite atom: a, then b (d still carries
  // the failure), then c
  CHECK(shrunk.labels == std::vector<std::string>{"d"});
  CHECK(shrunk.tau == std::vector<ExtRat>{ExtRat::infinity()});
  CHECK(shrunk.nu == std::vector<ExtRat>{V("0")});
  CHECK(shrunk.c == std::vector<ExtRat>{V("0")});
  CHECK_FALSE(holds(shrunk));
}

TEST_CASE("shrinking keeps the failure alive, never resurrects a passing case") {
  // Property sensitive to deletions and zeroing both: fails while the
  // sum of tau values is at least 3.
  TrialCase failing;
  failing.labels = {"a", "b", "c"};
  failing.tau = {V("2"), V("2"), V("2")};
  failing.nu = {V("1"), V("1"), V("1")};
  failing.c = {V("1"), V("1"), V("1")};
  auto holds = [](const TrialCase& tc) {
    ExtRat sum = ExtRat(0u);
    for (const ExtRat& v : tc.tau) sum = sum + v;
    return sum < ExtRat(3u);
  };
  TrialCase shrunk = shrink_case(failing, holds);
  CHECK_FALSE(holds(shrunk));
  CHECK(shrunk.labels.size() == 2);  // two atoms of 2 keep the sum at 4; one would drop it to 2
  CHECK(shrunk.tau == std::vector<ExtRat>{V("2"), V("2")});
}

TEST_CASE("run_trials aggregates deterministically") {
  TrialConfig config;
  config.seed = 42;
  config.trials = 200;
  config.max_atoms = 5;

  TrialReport first = run_trials(config);
  TrialReport second = run_trials(config);
  CHECK(first == second);
  CHECK(first.to_text() == second.to_text());
  CHECK(first.trials_run == 200);
  CHECK(first.failures == 0);
  CHECK_FALSE(first.first_failure.has_value());
  CHECK(first.corollary_checked > 0);

  TrialConfig empty = config;
  empty.trials = 0;
  TrialReport none = run_trials(empty);
  CHECK(none.trials_run == 0);
  CHECK(none.failures == 0);
  CHECK(none.corollary_checked == 0);
}

TEST_CASE("arbitrary-rational mode also passes its trials") {
  TrialConfig config;
  config.seed = 3;
  config.trials = 60;
  config.max_atoms = 5;
  config.arbitrary_rationals = true;
  TrialReport report = run_trials(config);
  CHECK(report.failures == 0);
  CHECK(report.trials_run == 60);
}

TEST_CASE("report text renders counts and the failure block") {
  TrialReport report;
  report.trials_run = 5;
  report.failures = 0;
  report.corollary_checked = 2;
  CHECK(report.to_text() == "trials-run: 5\ncorollary-checked: 2\nfailures: 0\n");

  report.failures = 1;
  report.first_failure = FailureRecord{3, "representation", "tau={a:1}", "stage=positivity witness={a}"};
  std::string text = report.to_text();
  CHECK(text.find("failures: 1\n") != std::string::npos);
  CHECK(text.find("first-failure:\n  trial: 3\n  property: representation\n") != std::string::npos);
  CHECK(text.find("  inputs: tau={a:1}\n") != std::string::npos);
  CHECK(text.find("  witness: stage=positivity witness={a}\n") != std::string::npos);
}

TEST_CASE("stage and property names are stable") {
  CHECK(to_string(RepStage::positivity) == "positivity");
  CHECK(to_string(RepStage::absolute_continuity) == "absolute-continuity");
  CHECK(to_string(RepStage::density_construction) == "density-construction");
  CHECK(to_string(RepStage::essential_supremum) == "essential-supremum");
  CHECK(to_string(TrialProperty::sugeno_murofushi) == "sugeno-murofushi");
  CHECK(to_string(TrialProperty::variation_oracle_agreement) == "variation-oracle-agreement");
}
