#include "laxalg/serialize.hpp"

#include <gtest/gtest.h>

#include "laxalg/central.hpp"
#include "laxalg/config.hpp"
#include "laxalg/errors.hpp"
#include "test_support.hpp"

namespace lax {
namespace {

using testing::gi;

TEST(GaussianJson, ObjectFormOnOutput) {
  Json j = to_json(testing::gq(-3, 2, 1, 1));
  EXPECT_EQ(j.dump(), R"({"re":"-3/2","im":"1"})");
}

TEST(GaussianJson, AcceptsBothInputForms) {
  EXPECT_EQ(gaussian_from_json(Json::parse(R"({"re":"1/2","im":"-3"})")), testing::gq(1, 2, -3, 1));
  EXPECT_EQ(gaussian_from_json(Json::parse(R"("1/2-3 i")")), testing::gq(1, 2, -3, 1));
  EXPECT_EQ(gaussian_from_json(Json::parse("4")), gi(4));
  EXPECT_EQ(gaussian_from_json(Json::parse(R"({"im":"1"})")), gi(0, 1));
  EXPECT_THROW(gaussian_from_json(Json::parse(R"({"re":"1","x":"2"})")), ParseError);
  EXPECT_THROW(gaussian_from_json(Json::parse("1.5")), ParseError);
  EXPECT_THROW(gaussian_from_json(Json::parse(R"("1/0")")), ParseError);
}

TEST(MatrixJson, RoundTrip) {
  Rng rng(1);
  ExactMatrix m = testing::random_matrix(rng, 3, 3, 20);
  EXPECT_EQ(matrix_from_json(to_json(m), 3, "m"), m);
  EXPECT_THROW(matrix_from_json(to_json(m), 2, "m"), ParseError);
}

TEST(SeriesJson, RoundTrip) {
  Rng rng(2);
  MatrixLaurentSeries s = testing::random_series(rng, 2, -2, 3);
  Json j = to_json(s);
  EXPECT_EQ(j.at("valuation"), -2);
  EXPECT_EQ(j.at("trunc"), 3);
  EXPECT_EQ(series_from_json(j, 2), s);
}

TEST(FunctionJson, RoundTripAndShape) {
  AlgebraSpec gl(Family::gl, 2);
  auto config = make_config(gl, random_tyurin_points(gl, 2, 3));
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = testing::random_function(rng, config, -2, 2, 2);
    EXPECT_EQ(function_from_json(config, to_json(f)), f);
  }
  auto pole = RationalMatrixFunction::pole(config, ExactMatrix::identity(2), 1, 2);
  Json j = to_json(pole);
  ASSERT_EQ(j.at("principal").size(), 1u);
  EXPECT_EQ(j.at("principal")[0].at("point"), 1);
  EXPECT_TRUE(j.at("principal")[0].at("orders").contains("2"));
}

TEST(FunctionJson, Rejects) {
  AlgebraSpec gl(Family::gl, 2);
  auto config = make_config(gl, random_tyurin_points(gl, 1, 3));
  EXPECT_THROW(function_from_json(config, Json::parse(R"({"poly_min":0,"extra":1})")), ParseError);
  EXPECT_THROW(function_from_json(config, Json::parse(R"({"principal":[{"point":5,"orders":{}}]})")), ParseError);
  EXPECT_THROW(function_from_json(config, Json::parse(R"({"principal":[{"point":0,"orders":{"0":[]}}]})")),
               ParseError);
}

TEST(ConnectionJson, RoundTripRecomputesValuations) {
  AlgebraSpec sl(Family::sl, 2);
  auto config = make_config(sl, random_tyurin_points(sl, 2, 5));
  auto lambda = construct_connection(config, 6);
  Json j = to_json(lambda);
  j["m_plus"] = 99;
  auto back = connection_from_json(config, j);
  EXPECT_EQ(back.coefficient, lambda.coefficient);
  EXPECT_EQ(back.beta_tilde, lambda.beta_tilde);
  EXPECT_EQ(back.kappa_tilde, lambda.kappa_tilde);
  EXPECT_EQ(back.m_plus, lambda.m_plus);
  EXPECT_EQ(back.m_minus, lambda.m_minus);
}

TEST(StructureExport, JsonAndCsvAgree) {
  AlgebraSpec sl(Family::sl, 2);
  auto config = make_config(sl, random_tyurin_points(sl, 1, 6));
  BasisCache cache(config);
  auto c = structure_constants(cache, 1, -1);
  Json j = to_json(c);
  std::string csv = structure_to_csv(c);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,l,i,j,r,re,im");
  std::size_t lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
  EXPECT_EQ(lines, j.at("constants").size() + 1);
  for (const auto& entry : j.at("constants")) EXPECT_FALSE(gaussian_from_json(entry.at("value")).is_zero());
}

TEST(CocycleTableExport, HeaderAndRows) {
  AlgebraSpec sl(Family::sl, 2);
  auto config = make_config(sl, {});
  BasisCache cache(config);
  auto table = cocycle_table(cache, construct_connection(config, 6), -1, 1);
  Json j = to_json(table);
  EXPECT_EQ(j.at("header").at("window").at("lower"), 0);
  EXPECT_EQ(j.at("header").at("antisymmetric"), true);
  EXPECT_EQ(j.at("values").size(), 81u);
  std::string csv = cocycle_table_to_csv(table);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,i,l,j,re,im");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), 82u);
}

}  // namespace
}  // namespace lax
