#include <gtest/gtest.h>

#include "test_util.hpp"
#include "tridec/json_io.hpp"

using namespace tridec;
using namespace testutil;

TEST(Json, DecompositionRoundTrip) {
  auto f = qsys("x2+x1+2; (x2+2)*x3+x1; (x3+x2)*x4+x3-1; x4+x2", 4);
  auto result = decompose(f, Algorithm::wang, 4);
  auto j = decomposition_to_json(f, result, vars_x(4), Algorithm::wang, true);

  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["kind"], "decomposition");
  EXPECT_EQ(j["algorithm"], "wang");
  EXPECT_EQ(j["systems"].size(), 3u);
  EXPECT_EQ(j["ordering"].size(), 4u);
  EXPECT_TRUE(j.contains("tree"));
  EXPECT_EQ(j["tree"]["nodes"][0]["label"], "root");

  auto loaded = decomposition_from_json(j);
  ASSERT_EQ(loaded.input.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(loaded.input[i], f[i]);
  ASSERT_EQ(loaded.systems.size(), result.systems.size());
  for (std::size_t i = 0; i < result.systems.size(); ++i) {
    EXPECT_EQ(loaded.systems[i].T, result.systems[i].T);
    EXPECT_EQ(loaded.systems[i].U, result.systems[i].U);
  }
}

TEST(Json, RejectsWrongSchema) {
  json j = {{"schema", 99}, {"kind", "decomposition"}};
  EXPECT_THROW(decomposition_from_json(j), std::invalid_argument);
  json j2 = {{"schema", 1}, {"kind", "something"}};
  EXPECT_THROW(decomposition_from_json(j2), std::invalid_argument);
}

TEST(Json, VerifyReportShape) {
  auto f = qsys("x1^2-1", 1);
  auto result = decompose(f, Algorithm::wang, 1);
  auto report = verify_decomposition(f, result.systems, 1, {5, 7});
  auto j = verify_report_to_json(report);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["status"], "pass");
  ASSERT_EQ(j["primes"].size(), 2u);
  EXPECT_EQ(j["primes"][0]["p"], 5);
  EXPECT_EQ(j["primes"][0]["status"], "pass");
}

TEST(Json, GraphShape) {
  auto f = qsys("x1*x2; x2*x3", 3);
  auto j = graph_to_json(associated_graph(f), vars_x(3));
  EXPECT_EQ(j["vertices"].size(), 3u);
  ASSERT_EQ(j["edges"].size(), 2u);
  EXPECT_EQ(j["edges"][0]["u"], "x1");
  EXPECT_EQ(j["edges"][0]["v"], "x2");
  EXPECT_EQ(j["edges"][0]["w"], 1);
}

TEST(Json, PolynomialStringsAreCanonical) {
  auto f = qsys("x1^2 - 1/2", 1);
  auto result = decompose(f, Algorithm::wang, 1);
  auto j = decomposition_to_json(f, result, vars_x(1), Algorithm::wang, false);
  EXPECT_EQ(j["input"][0], "x1^2-1/2");  // exact rational, never floats
}
