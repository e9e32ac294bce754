#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bdcoords/io.hpp"

using namespace bdcoords;

namespace {

const std::string kData = BDCOORDS_DATA_DIR;

Json genus2() {
  return Json::parse(R"({
    "genus": 2,
    "pants": [{"id": "P0", "type": "I"}, {"id": "P1", "type": "II", "distinguished": 2,
               "spiral_signs": {"C1": 1, "2": -1, "3": 1}}],
    "curves": [
      {"id": "C1", "ends": [["P0", 1], ["P1", 1]], "short_arc": {"right_triangle": "T1"}},
      {"id": "C2", "ends": [["P0", 2], ["P1", 2]], "short_arc": {"left_triangle": "T1", "right_triangle": "T0"}},
      {"id": "C3", "ends": [["P0", 3], ["P1", 3]]}
    ]
  })");
}

std::string schema_error(const Json& j) {
  try {
    parse_surface(j);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a spec without parameters") {
  const SurfaceInput in = parse_surface(genus2());
  CHECK_FALSE(in.parameters);
  CHECK_FALSE(in.slice);
  REQUIRE(in.spec.pants.size() == 2);
  const auto& lam = in.spec.pants[1].lamination;
  CHECK(lam.type == LaminationType::II);
  CHECK(lam.distinguished == 1);
  CHECK(lam.spiral_signs == std::array<int, 3>{1, -1, 1});
  CHECK(in.spec.curves[1].ends[1].slot == 1);
  CHECK(in.spec.curves[1].short_arc.left_triangle == "T1");
  CHECK(in.spec.curves[2].short_arc.left_triangle == "T0");
}

TEST_CASE("schema errors name the JSON path") {
  Json j = genus2();
  j["curves"][0]["ends"][1][1] = 4;
  CHECK(schema_error(j) == "$.curves[0].ends[1][1]: slot 4 is not 1, 2 or 3");

  j = genus2();
  j["curves"][1]["ends"][0][1] = 1;
  CHECK(schema_error(j).find("slot P0:C1 is used by both C1 and C2") != std::string::npos);

  j = genus2();
  j["pants"][0]["type"] = "III";
  CHECK(schema_error(j).find("$.pants[0].type") == 0);

  j = genus2();
  j["curves"][2]["short_arc"] = {{"right_triangle", "T1"}};
  CHECK(schema_error(j) == "curve C3 right short arc: triangle has no corner at the curve's slot");

  j = genus2();
  j.erase("genus");
  CHECK(schema_error(j) == "$.genus: missing");

  j = genus2();
  j["pants"][0]["spiral_signs"] = {{"1", 2}};
  CHECK(schema_error(j).find("expected +1 or -1") != std::string::npos);

  j = genus2();
  j["shears"] = {{"P0", {{"B12", 1}, {"B23", 1}, {"B31", 1}}}, {"P1", {{"B22", 1}, {"B23", 1}}}};
  CHECK(schema_error(j) == "$.shears.P1.B21: missing");

  j["shears"]["P1"]["B99"] = 1;
  CHECK(schema_error(j).find("unknown leaf 'B99'") != std::string::npos);

  j = genus2();
  j["shears"] = {{"P0", {{"B12", 1}, {"B23", 1}, {"B31", 1}}}, {"P1", {{"B22", 1}, {"B23", 1}, {"B21", 1}}}};
  j["twists"] = {{"C7", 0.5}};
  CHECK(schema_error(j) == "$.twists.C7: unknown curve");
}

TEST_CASE("example files") {
  const SurfaceInput in = load_surface(kData + "/genus2.json");
  REQUIRE(in.parameters);
  CHECK(in.parameters->twists == std::vector<double>{0.3, -0.2, 0.0});
  CHECK(in.parameters->shears[1].x[2] == -1.5);
  const SurfaceInput sl = load_surface(kData + "/genus2_slice.json");
  REQUIRE(sl.slice);
  CHECK(sl.slice->z.size() == 6);
  CHECK(sl.slice->w.at("C2") == 0.0);
  CHECK_THROWS_AS(load_surface(kData + "/missing.json"), SchemaError);
}

TEST_CASE("spec round trip through JSON") {
  const SurfaceInput in = load_surface(kData + "/genus2.json");
  const Json out = surface_to_json(in.spec, &*in.parameters);
  const SurfaceInput again = parse_surface(Json::parse(dump_json(out)));
  REQUIRE(again.parameters);
  for (int p = 0; p < 2; ++p) {
    CHECK(again.parameters->shears[p].x == in.parameters->shears[p].x);
    CHECK(again.spec.pants[p].lamination.spiral_signs == in.spec.pants[p].lamination.spiral_signs);
    CHECK(again.spec.pants[p].lamination.leaf_orientations == in.spec.pants[p].lamination.leaf_orientations);
  }
  CHECK(again.parameters->twists == in.parameters->twists);
}

TEST_CASE("BD vector outputs") {
  const SurfaceInput in = load_surface(kData + "/genus2.json");
  const DevelopedSurface ds = assemble_surface(in.spec, *in.parameters);
  const BDVector v = bd_vector(ds, 3);
  const Json j = bd_vector_to_json(v);
  CHECK(j["size"] == 22);
  CHECK(j["blocks"]["tau"] == 4);
  CHECK(j["entries"][4]["object"] == "P0.B12");
  const std::string csv = bd_vector_csv(v);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "block,object,indices,value");
  std::getline(lines, line);
  CHECK(line.rfind("tau,P0.T0,1:1:1,", 0) == 0);
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 21);
  // Doubles survive the text round trip bit for bit.
  const Json back = Json::parse(dump_json(j));
  for (std::size_t i = 0; i < v.values.size(); ++i) CHECK(back["entries"][i]["value"].get<double>() == v.values[i]);
}

TEST_CASE("dump_json writes non-finite values as null") {
  const Json j{{"a", std::nan("")}, {"b", 1.5}};
  const Json back = Json::parse(dump_json(j));
  CHECK(back["a"].is_null());
  CHECK(back["b"] == 1.5);
}
