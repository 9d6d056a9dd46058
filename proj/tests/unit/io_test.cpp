#include <gtest/gtest.h>

#include <functional>

#include "lindeg/errors.hpp"
#include "lindeg/io.hpp"

using namespace lindeg;
using nlohmann::json;

namespace {

json feigin() {
  return json::parse(R"({"m": 3, "n": 2, "field": {"kind": "prime", "p": 2}, "d": [1, 2],
                         "maps": [{"type": "projection", "zero_indices": [1]}]})");
}

}  // namespace

TEST(Problem, ParsesProjectionTuple) {
  const ProblemFile p = parse_problem(feigin());
  EXPECT_EQ(p.d.values(), (std::vector<int>{1, 2}));
  EXPECT_EQ(p.rep.field(), Field::prime(2));
  ASSERT_TRUE(p.projections.has_value());
  EXPECT_EQ(p.projections->zero_sets, (std::vector<std::vector<std::size_t>>{{1}}));
  EXPECT_EQ(rank(p.rep.arrow(1)), 2u);
}

TEST(Problem, ParsesExactMatrixEntries) {
  const ProblemFile p = parse_problem(std::string(R"({"m": 3, "n": 2, "d": [1, 2],
    "maps": [{"type": "matrix", "entries": [["1", "-3/7", "0"], ["2", "-6/7", "0"], ["0", "0", "0"]]}]})"));
  EXPECT_EQ(p.rep.field(), Field::rationals());
  EXPECT_EQ(p.rep.arrow(1).at(0, 1), mpq_class(-3, 7));
  EXPECT_EQ(rank(p.rep.arrow(1)), 1u);
  EXPECT_FALSE(p.projections.has_value());
}

TEST(Problem, IdentityAndZeroAreProjections) {
  json j = feigin();
  j["n"] = 3;
  j["d"] = {1, 2, 2};
  j["maps"] = json::array({{{"type", "identity"}}, {{"type", "zero"}}});
  EXPECT_THROW(parse_problem(j), ValidationError);  // d not strictly increasing
  j["m"] = 4;
  j["d"] = {1, 2, 3};
  const ProblemFile p = parse_problem(j);
  ASSERT_TRUE(p.projections.has_value());
  EXPECT_TRUE(p.projections->zero_sets[0].empty());
  EXPECT_EQ(p.projections->zero_sets[1], (std::vector<std::size_t>{1, 2, 3, 4}));
}

TEST(Problem, RejectsMalformedInput) {
  const auto bad = [](const std::function<void(json&)>& edit) {
    json j = feigin();
    edit(j);
    EXPECT_THROW(parse_problem(j), ValidationError) << j.dump();
  };
  bad([](json& j) { j.erase("m"); });
  bad([](json& j) { j["d"] = {1}; });
  bad([](json& j) { j["d"] = {0, 2}; });
  bad([](json& j) { j["d"] = {1, 3}; });
  bad([](json& j) { j["maps"][0]["zero_indices"] = {4}; });
  bad([](json& j) { j["maps"][0]["type"] = "rotation"; });
  bad([](json& j) { j["maps"] = json::array(); });
  bad([](json& j) { j["field"]["p"] = 6; });
  bad([](json& j) { j["field"]["kind"] = "real"; });
  bad([](json& j) { j["maps"][0] = {{"type", "matrix"}, {"entries", {{"1", "0"}}}}; });
  bad([](json& j) { j["maps"][0] = {{"type", "matrix"}, {"entries", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; });
  EXPECT_THROW(parse_problem(std::string("{not json")), ValidationError);
}

TEST(Problem, AsProjectionTupleRecognisesDiagonals) {
  const Field q = Field::rationals();
  Matrix a = Matrix::identity(q, 3);
  a.set(1, 1, 0LL);
  const auto t = as_projection_tuple(RepMatrices::from_maps({a}));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->zero_sets[0], (std::vector<std::size_t>{2}));
  Matrix b = Matrix::identity(q, 3);
  b.set(0, 1, 1LL);
  EXPECT_FALSE(as_projection_tuple(RepMatrices::from_maps({b})).has_value());
}

TEST(Json, ReportIsStable) {
  const ProblemFile p = parse_problem(feigin());
  const DegenerationReport r = classify(p.rep, p.d);
  const json j = to_json(r);
  EXPECT_EQ(j.dump(), to_json(classify(p.rep, p.d)).dump());
  EXPECT_EQ(j["rank_sequence"]["map_ranks"], json({2}));
  EXPECT_EQ(j["flags"]["smooth"], false);
  EXPECT_EQ(j["flags"]["irreducible"], true);
  EXPECT_EQ(j["flags"]["normal"]["source"], "by theorem");
  EXPECT_EQ(j["dimension"], 3);
  EXPECT_EQ(j["singular"]["kind"], "exact");
  EXPECT_EQ(j["singular"]["sing_codim"], 3);
  EXPECT_EQ(j["decomposition"]["text"], "U[1,1] + U[1,2]^2 + U[2,2]");
}

TEST(Json, Decomposition) {
  const json j = to_json(Decomposition(2).add({1, 2}, 2));
  EXPECT_EQ(j["summands"][0]["interval"], json({1, 2}));
  EXPECT_EQ(j["summands"][0]["multiplicity"], 2);
  EXPECT_EQ(j["dims"], json({2, 2}));
}

TEST(Table, HasOneLinePerField) {
  const ProblemFile p = parse_problem(feigin());
  const std::string t = to_table(classify(p.rep, p.d));
  EXPECT_NE(t.find("smooth: no"), std::string::npos);
  EXPECT_NE(t.find("irreducible: yes"), std::string::npos);
  EXPECT_NE(t.find("dimension: 3"), std::string::npos);
}
