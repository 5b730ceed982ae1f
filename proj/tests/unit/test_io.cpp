#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "stacklin/io.hpp"

using namespace stacklin;
using namespace fixtures;

TEST(Io, IntegersFromNumbersAndStrings) {
  EXPECT_EQ(parse_int(Json(-7), "x"), -7);
  EXPECT_EQ(parse_int(Json("123456789012345678901234567890"), "x"), Int("123456789012345678901234567890"));
  EXPECT_EQ(parse_int(Json(" 4 "), "x"), 4);
  EXPECT_EQ(error_code([] { parse_int(Json("4a"), "x"); }), "BadInteger");
  EXPECT_EQ(error_code([] { parse_int(Json(true), "x"); }), "BadInteger");
  EXPECT_EQ(parse_int_list("-3,2,1", "theta"), iv({-3, 2, 1}));
  EXPECT_EQ(error_code([] { parse_int_list("", "theta"); }), "BadInteger");
}

TEST(Io, FanParsing) {
  const auto fan = parse_fan(Json::parse(R"({"rank":2,"rays":[[1,0],[-1,-2],[0,1]],"max_cones":[[0,1],[1,2],[0,2]]})"));
  EXPECT_EQ(fan.rays, p112_fan().rays);
  EXPECT_EQ(fan.max_cones, p112_fan().max_cones);
  EXPECT_EQ(error_code([] { parse_fan(Json::object()); }), "MissingField");
  EXPECT_EQ(error_code([] { parse_fan(Json::array()); }), "NotAnObject");
  EXPECT_EQ(error_code([] { parse_fan(Json::parse(R"({"rank":1,"rays":[],"max_cones":[]})")); }), "EmptyFan");
  EXPECT_EQ(error_code([] { parse_fan(Json::parse(R"({"rank":1,"rays":[[1]],"max_cones":[[-1]]})")); }), "BadIndex");
}

TEST(Io, CoxParsing) {
  const auto x = parse_cox(Json::parse(
      R"({"num_vars":4,"pic":{"free_rank":1,"torsion":[2,2]},"deg":[[1,0,0],[1,1,0],[1,0,1],[1,1,1]],"irrelevant":[[0],[1],[2],[3]]})"));
  const CoxSpace expected = z2z2_cox();
  EXPECT_EQ(x.degrees, expected.degrees);
  EXPECT_EQ(x.irrelevant, expected.irrelevant);
  EXPECT_EQ(x.pic.describe(), "Z + Z/2 + Z/2");
  EXPECT_EQ(error_code([] {
              parse_cox(Json::parse(R"({"num_vars":1,"pic":{"free_rank":1,"torsion":[3,2]},"deg":[[1,0,0]],"irrelevant":[[0]]})"));
            }),
            "BadInvariantFactors");
  EXPECT_EQ(error_code([] {
              parse_cox(Json::parse(R"({"num_vars":2,"pic":{"free_rank":1,"torsion":[]},"deg":[[1]],"irrelevant":[[0]]})"));
            }),
            "DimensionMismatch");
}

TEST(Io, CollectionParsing) {
  const CoxSpace football = cox_space(football_fan());
  EXPECT_EQ(parse_collection("O, O(2,1), O(4)", football.pic), football_collection());
  EXPECT_EQ(parse_collection("O(2,3)", football.pic), ivs({{2, 1}}));
  EXPECT_EQ(error_code([&] { parse_collection("O(1", football.pic); }), "BadCollection");
  EXPECT_EQ(error_code([&] { parse_collection("L(1)", football.pic); }), "BadCollection");
  EXPECT_EQ(error_code([&] { parse_collection("O(1,0,0)", football.pic); }), "DimensionMismatch");
}

TEST(Io, QuiverRoundTrip) {
  const auto ex = section_example(p112_fan(), twists({0, 1, 2}));
  const LabelledQuiver back = parse_quiver(quiver_json(ex.q));
  EXPECT_EQ(back.vertices, ex.q.vertices);
  EXPECT_EQ(back.division(), ex.q.division());
  EXPECT_EQ(back.incidence(), ex.q.incidence());
  EXPECT_EQ(error_code([] { parse_quiver(Json::parse(R"({"label_rank":1,"vertices":[[0]],"arrows":[{"tail":0}]})")); }),
            "MissingField");
}

TEST(Io, ActionParsing) {
  const auto a = parse_action(Json::parse(R"({"invariant_factors":[3],"weights":[[1],[2]],"require_sl":true})"));
  EXPECT_TRUE(a.require_sl);
  EXPECT_EQ(a.dimension(), 2U);
  EXPECT_EQ(error_code([] { parse_action(Json::parse(R"({"invariant_factors":[3],"weights":[[1],[1]],"require_sl":true})")); }),
            "NotSpecialLinear");
  EXPECT_EQ(error_code([] { parse_action(Json::parse(R"({"invariant_factors":[3],"weights":[[1],[2]],"require_sl":1})")); }),
            "NotABoolean");
}

TEST(Io, IntegersAreSerializedAsStrings) {
  EXPECT_EQ(to_json(Int("98765432109876543210")).dump(), "\"98765432109876543210\"");
  EXPECT_EQ(to_json(RatVec{Rat(2, 3), Rat(-1)}).dump(), R"(["2/3","-1"])");
  EXPECT_EQ(support_json(support_of({0, 3})).dump(), "[0,3]");
  EXPECT_EQ(group_json(cox_space(football_fan()).pic).dump(), R"({"description":"Z + Z/2","free_rank":1,"torsion":["2"]})");
}

TEST(Io, TextRendering) {
  const std::string text = render_text(Json{{"name", "x"}, {"values", Json::array({"1", "2"})}});
  EXPECT_NE(text.find("name: x"), std::string::npos);
  EXPECT_NE(text.find("values:"), std::string::npos);
}

TEST(Io, Files) {
  EXPECT_EQ(error_code([] { load_json("/nonexistent/input.json"); }), "Unreadable");
}
