#include <regex>

#include "doctest.h"
#include "stockpoly/render.hpp"
#include "stockpoly/report.hpp"

using namespace stockpoly;
using nlohmann::json;

namespace {

Date D(const char* iso) { return *parse_iso_date(iso); }

const PriceTable& fixture() {
  static const PriceTable table = read_price_csv(std::string(STOCKPOLY_TEST_DATA) + "/market_fixture.csv");
  return table;
}

}  // namespace

TEST_CASE("analyze the fixture through 2013-06-05") {
  const auto r = analyze(fixture(), D("2013-05-15"), D("2013-06-05"), true);
  CHECK(to_string(r.state) == "{1R,3,2,4L}");
  CHECK(r.necklace.k == 2);
  CHECK(r.cell_dimension == 1);
  CHECK(r.positroid.bases() == std::vector<Subset>{Subset{2, 4}, Subset{3, 4}});
  CHECK(r.polytope.vertex_count == 2);
  CHECK(r.polytope.affine_dimension == 1);
  REQUIRE(r.polytope.facets.has_value());
  CHECK(r.polytope.facets->size() == 2);
  CHECK(r.components == Partition{{1}, {2, 3}, {4}});

  const json j = to_json(r, fixture());
  CHECK(j["schema_version"] == 1);
  CHECK(j["decorations"].size() == 2);
  CHECK(j["decorations"][0]["orientation"] == "RIGHT");
  CHECK(j["decorations"][1]["ticker"] == "PG");
  CHECK(check_report(j).empty());
}

TEST_CASE("analyze without facets omits them") {
  const auto r = analyze(fixture(), D("2013-05-15"), D("2013-06-03"));
  CHECK_FALSE(r.polytope.facets.has_value());
  const json j = to_json(r, fixture());
  CHECK_FALSE(j["polytope"].contains("facets"));
  CHECK(j["polytope"]["vertex_count"] == 5);
  CHECK(check_report(j).empty());
  CHECK(canonical_json(r, fixture()).back() == '\n');
}

TEST_CASE("check_report flags tampered fields") {
  const json good = to_json(analyze(fixture(), D("2013-05-15"), D("2013-06-03"), true), fixture());
  auto tamper = [&](auto edit) {
    json j = good;
    edit(j);
    return check_report(j);
  };
  CHECK_FALSE(tamper([](json& j) { j["necklace"][0] = {1, 2}; }).empty());
  CHECK_FALSE(tamper([](json& j) { j["k"] = 3; }).empty());
  CHECK_FALSE(tamper([](json& j) { j["bases"].erase(0); }).empty());
  CHECK_FALSE(tamper([](json& j) { j["affine_lift"][3] = 8; }).empty());
  CHECK_FALSE(tamper([](json& j) { j["polytope"]["facet_count"] = 6; }).empty());
  CHECK_FALSE(tamper([](json& j) { j["crossings"][0]["position"] = 1; }).empty());
  CHECK_FALSE(tamper([](json& j) { j["permutation"] = {2, 1, 4, 3}; }).empty());
  CHECK_THROWS_AS(tamper([](json& j) { j["permutation"] = {1, 1, 2, 3}; }), std::invalid_argument);
  CHECK_FALSE(tamper([](json& j) { j.erase("components"); }).empty());
  CHECK_FALSE(tamper([](json& j) { j["schema_version"] = 2; }).empty());
  CHECK_THROWS_AS(check_report(json::array()), json::exception);
}

TEST_CASE("market chain through the recrossings") {
  const auto chain = market_chain(fixture(), D("2013-05-15"), D("2013-06-07"));
  std::vector<int> dims;
  for (const auto& s : chain) dims.push_back(s.dimension);
  CHECK(dims == std::vector<int>{0, 1, 2, 3, 2, 1, 0, 1, 0});
  CHECK_FALSE(chain[0].event.has_value());
  CHECK(chain[3].event->date == D("2013-06-03"));
  const auto text = chain_to_text(chain, fixture(), D("2013-05-15"));
  CHECK(text.rfind("step", 0) == 0);
  CHECK(text.find("(drop)") != std::string::npos);
}

TEST_CASE("render_wiring") {
  const WiringWord w(4, {2, 3, 1});
  const std::vector<std::string> labels{"AXP", "HD", "WMT", "PG"};
  const auto ascii = render_wiring(w, labels, RenderFormat::Ascii);
  CHECK(ascii.find("s2  s3  s1") != std::string::npos);
  CHECK(ascii.find("AXP ---------X-- WMT\n") != std::string::npos);
  CHECK(ascii.find("PG  -----X------ HD\n") != std::string::npos);
  const auto svg = render_wiring(w, labels, RenderFormat::Svg);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // three crossing markers, all coordinates integral
  const std::regex circle("<circle");
  CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), circle), std::sregex_iterator()) == 3);
  const auto body = svg.substr(svg.find('\n'));
  CHECK_FALSE(std::regex_search(body, std::regex(R"(="[0-9]+\.[0-9])")));
  CHECK_THROWS_AS(render_wiring(w, {"A", "B"}, RenderFormat::Ascii), std::invalid_argument);
  CHECK(render_wiring(WiringWord(2, {}), {"A", "B"}, RenderFormat::Ascii).find("A  A") != std::string::npos);
  CHECK(render_wiring(w, {"A&B", "<x>", "c", "d"}, RenderFormat::Svg).find("A&amp;B") != std::string::npos);
}

TEST_CASE("render_chords counts arcs and loops") {
  using O = Orientation;
  const DecoratedPermutation dp{Permutation{{1, 3, 2, 4}}, {O::Right, std::nullopt, std::nullopt, O::Left}};
  const auto ascii = render_chords(dp, RenderFormat::Ascii);
  CHECK(ascii.find("right arcs 1, left arcs 1, right loops 1, left loops 1") != std::string::npos);
  const auto svg = render_chords(dp, RenderFormat::Svg, {"AXP", "HD", "WMT", "PG"});
  CHECK(svg.find("loop-left") != std::string::npos);
  CHECK(svg.find(">PG<") != std::string::npos);
}

TEST_CASE("render_hooks prints the dimension arithmetic") {
  const BoundedAffinePermutation f(4, {2, 4, 5, 7});
  const auto ascii = render_hooks(f, {1, 2, 2, 2}, RenderFormat::Ascii);
  CHECK(ascii.find("dim = 7 \xE2\x88\x92 4 = 3") != std::string::npos);
  CHECK(ascii.find("4->7") != std::string::npos);
  CHECK(render_hooks(f, {1, 2, 2, 2}, RenderFormat::Svg).find("</svg>") != std::string::npos);
  CHECK_THROWS_AS(render_hooks(f, {1, 2}, RenderFormat::Ascii), std::invalid_argument);
}
