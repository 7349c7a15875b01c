#include "laxalg/verify.hpp"

#include <gtest/gtest.h>

#include "laxalg/central.hpp"
#include "laxalg/errors.hpp"
#include "test_support.hpp"

namespace lax {
namespace {

RunConfig Quick(Family family, int n, std::size_t points) {
  RunConfig run;
  run.spec = AlgebraSpec(family, n);
  run.random_points = points;
  run.trials = 4;
  run.degrees = {-2, 2};
  return run;
}

void ExpectAllPassed(const VerifyReport& report) {
  ASSERT_EQ(report.suites.size(), suite_names().size());
  for (const auto& s : report.suites) EXPECT_TRUE(s.passed) << s.name << ": " << s.detail;
  EXPECT_TRUE(report.passed());
}

TEST(RunVerify, DefaultConfiguration) {
  RunConfig run;
  VerifyReport report = run_verify(run);
  ExpectAllPassed(report);
  EXPECT_EQ(report.attempts, 1u);
  for (std::size_t i = 0; i < report.suites.size(); ++i) EXPECT_EQ(report.suites[i].name, suite_names()[i]);
}

TEST(RunVerify, SuiteNames) {
  EXPECT_EQ(suite_names(), (std::vector<std::string>{"closure", "grading-dimension", "residue-eigenvalue", "regularity",
                                                     "cocycle-identity", "locality", "loop-reduction", "gl-split"}));
}

TEST(RunVerify, LoopAlgebra) { ExpectAllPassed(run_verify(Quick(Family::sl, 2, 0))); }

TEST(RunVerify, OtherFamilies) {
  ExpectAllPassed(run_verify(Quick(Family::gl, 2, 2)));
  ExpectAllPassed(run_verify(Quick(Family::so, 3, 2)));
  ExpectAllPassed(run_verify(Quick(Family::sp, 1, 2)));
}

TEST(RunVerify, Deterministic) {
  RunConfig run = Quick(Family::sl, 2, 2);
  EXPECT_EQ(to_json(run_verify(run)).dump(), to_json(run_verify(run)).dump());
  RunConfig other = run;
  other.seed = 43;
  EXPECT_NE(to_json(run_verify(run)).dump(), to_json(run_verify(other)).dump());
}

TEST(RunVerify, CorruptedLambdaFailsRegularity) {
  RunConfig run = Quick(Family::sl, 2, 1);
  ConfigPtr config = materialize(run);
  ConnectionForm lambda = construct_connection(config, run.max_pole);
  lambda.coefficient += RationalMatrixFunction::pole(config, ExactMatrix::unit(2, 0, 0), 0, 1);
  VerifyReport report = run_verify(run, to_json(lambda));
  EXPECT_FALSE(report.passed());
  for (const auto& s : report.suites) {
    if (s.name == "regularity") {
      EXPECT_FALSE(s.passed);
    }
  }
}

TEST(RunVerify, PersistentDegeneracyIsReported) {
  VerifyReport report = run_verify(Quick(Family::sp, 1, 1));
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.attempts, 6u);
  for (const auto& s : report.suites) EXPECT_NE(s.detail.find("degenerate"), std::string::npos);
}

TEST(RunVerify, ReportJsonShape) {
  Json j = to_json(run_verify(Quick(Family::sl, 2, 0)));
  for (const char* key : {"config", "attempts", "configuration", "lambda", "suites", "passed"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("suites").size(), 8u);
  EXPECT_EQ(j.at("suites")[0].at("name"), "closure");
}

}  // namespace
}  // namespace lax
