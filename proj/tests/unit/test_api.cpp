#include <algorithm>

#include <gtest/gtest.h>

#include "bridgeland/api.hpp"
#include "bridgeland/error.hpp"

namespace bridgeland {
namespace {

Json k3d2() { return Json{{"gram", {{2}}}, {"ample", {1}}, {"k3", true}}; }

Request request(std::map<std::string, std::string> options) {
  Request r;
  r.options = std::move(options);
  if (r.options.count("lattice")) {
    r.options.erase("lattice");
    r.documents["lattice"] = k3d2();
  }
  return r;
}

TEST(Registry, EveryCommandIsListed) {
  const std::vector<std::string>& names = command_names();
  for (const char* c : {"pairing", "charge", "phase-compare", "heart", "hn", "support", "walls",
                        "chambers", "plot", "nef", "classify-wall", "lagrangian", "gieseker"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), c), names.end()) << c;
  }
  EXPECT_TRUE(is_document_option("lattice"));
  EXPECT_FALSE(is_document_option("v"));
  EXPECT_THROW(command_options("nope"), ValidationError);
}

TEST(Commands, Pairing) {
  const Response r = run_command("pairing", request({{"lattice", ""}, {"v", "1,0,-1"}, {"w", "0,0,1"}}));
  EXPECT_EQ(r.json["value"], "-1");
  EXPECT_EQ(r.json["euler"], "1");
}

TEST(Commands, Charge) {
  const Response r =
      run_command("charge", request({{"lattice", ""}, {"v", "1,0,-1"}, {"beta", "0"}, {"omega", "2"}}));
  EXPECT_EQ(r.json["z"]["re"], "5");
  EXPECT_EQ(r.json["z"]["im"], "0");
  EXPECT_EQ(r.json["phase_valid"], false);
}

TEST(Commands, PhaseCompare) {
  EXPECT_EQ(run_command("phase-compare", request({{"z1", "0,1"}, {"z2", "-1,0"}})).json["result"], "LT");
  EXPECT_THROW(run_command("phase-compare", request({{"z1", "1,0"}, {"z2", "-1,0"}})), ValidationError);
}

TEST(Commands, Hn) {
  Request r;
  r.documents["category"] = Json::parse(R"({
    "zero": "0",
    "objects": [{"id": "0", "class": [0, 0]}, {"id": "S", "class": [1, 0]},
                {"id": "T", "class": [0, 1]}, {"id": "M", "class": [1, 1]}],
    "edges": [{"sub": "S", "ambient": "M", "quotient": "T"}]
  })");
  r.documents["charge"] = Json{{"row", {"0,1", "1,1"}}};
  r.options["object"] = "M";
  const Response out = run_command("hn", r);
  EXPECT_EQ(out.json["filtration"]["steps"], (Json{"0", "S", "M"}));
}

TEST(Commands, Support) {
  const Response r = run_command(
      "support", request({{"lattice", ""}, {"beta", "0"}, {"omega", "2"}, {"count", "50"}}));
  EXPECT_EQ(r.json["min_root_norm"]["c2"], "9/8");
  EXPECT_EQ(r.json["roundtrip"]["K"], "72/25");
  EXPECT_EQ(r.json["roundtrip"]["C2"], "72/97");
  EXPECT_EQ(r.json["roundtrip"]["pass"], true);
  EXPECT_EQ(r.json["Q_Z_negative_definite_on_kernel"], true);
}

TEST(Commands, WallsFeedChambersAndPlot) {
  const Response walls = run_command(
      "walls", request({{"lattice", ""}, {"v", "1,0,-1"}, {"b", "-3:0"}, {"t", "0.1:4"}, {"bound", "8"}}));
  EXPECT_EQ(walls.json["walls"].size(), 13u);
  EXPECT_EQ(walls.json["nesting"]["violations"], 0);

  Request ch;
  ch.documents["walls"] = walls.json;
  ch.options = {{"b", "-1"}, {"t", "0.1:4"}};
  const Response path = run_command("chambers", ch);
  EXPECT_EQ(path.json["crossings"].size(), 12u);

  Request pl;
  pl.documents["walls"] = walls.json;
  pl.options = {{"b", "-3:0"}, {"t", "0.1:4"}};
  const Response svg = run_command("plot", pl);
  EXPECT_NE(svg.text.find("<svg"), std::string::npos);
  EXPECT_NE(svg.text.find("wall-12"), std::string::npos);
}

TEST(Commands, ClassifyWall) {
  const Response r = run_command(
      "classify-wall", request({{"lattice", ""}, {"v", "1,0,-1"}, {"w", "0,0,1"}, {"point", "0,1"}}));
  EXPECT_EQ(r.json["roots"].size(), 2u);
  EXPECT_EQ(r.json["isotropic"].size(), 2u);
  EXPECT_EQ(r.json["decompositions"].size(), 1u);
}

TEST(Commands, NefAndLagrangian) {
  const Response nef =
      run_command("nef", request({{"lattice", ""}, {"v", "1,0,-1"}, {"beta", "0"}, {"omega", "2"}}));
  EXPECT_EQ(nef.json["bb_square"], "8/25");
  EXPECT_EQ(nef.json["moduli_dimension"]["dimension"], "4");
  const Response lag = run_command("lagrangian", request({{"lattice", ""}, {"v", "1,0,-1"}}));
  EXPECT_EQ(lag.json["candidates"], (Json{"1,-1,1", "1,1,1"}));
}

TEST(Commands, Gieseker) {
  const Response r = run_command("gieseker", request({{"lattice", ""}, {"v", "1,1,0"}, {"w", "2,1,0"},
                                                      {"beta", "0"}, {"omega", "1"}}));
  EXPECT_EQ(r.json["gieseker"], "GT");
  EXPECT_TRUE(r.json.contains("threshold"));
}

TEST(Commands, Heart) {
  EXPECT_EQ(run_command("heart", request({{"slopes", "1,0"}})).json["position"], "MIXED");
}

TEST(Errors, UnknownCommandAndOption) {
  EXPECT_THROW(run_command("nope", Request{}), ValidationError);
  EXPECT_THROW(run_command("heart", request({{"slopes", "1"}, {"bogus", "1"}})), ValidationError);
  EXPECT_THROW(run_command("pairing", request({{"lattice", ""}, {"v", "1,0"}, {"w", "0,0,1"}})),
               ValidationError);
  EXPECT_THROW(run_command("pairing", request({{"v", "1,0,-1"}, {"w", "0,0,1"}})), ValidationError);
}

TEST(Determinism, RepeatedRunsAgree) {
  const Request r = request({{"lattice", ""}, {"beta", "0"}, {"omega", "2"}, {"count", "30"}, {"seed", "7"}});
  EXPECT_EQ(run_command("support", r).json.dump(), run_command("support", r).json.dump());
}

}  // namespace
}  // namespace bridgeland
