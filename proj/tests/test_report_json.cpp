#include <doctest.h>

#include "sp4eis/report_json.hpp"

using namespace sp4eis;

TEST_CASE("envelope")
{
  const Json j = envelope("weyl", Json{{"a", 1}}, true);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["command"] == "weyl");
  CHECK(j["a"] == 1);
  CHECK(j["pass"] == true);
  const std::string text = dump(j);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"schema\"") < text.find("\"pass\""));
}

TEST_CASE("weyl tables")
{
  const Json j = weyl_json();
  CHECK(j["heisenberg"].size() == 4);
  CHECK(j["siegel"].size() == 4);
  CHECK(j["group"].size() == 8);
  for(const auto &row : j["group"])
    CHECK(row["negative_set"].size() == row["length"].get<std::size_t>());
}

TEST_CASE("normfactor json")
{
  const Json j = normfactor_json(Case::Heisenberg, sp4_weyl_group().parse("s"));
  CHECK(j["factor"] == "L(s+1,chi) / (L(s+2,chi)*eps(s+2,chi))");
  CHECK(j["alias"] == "s");
}

TEST_CASE("report json is deterministic and complete")
{
  const auto profile = PlaceProfile::spherical(CharClass::Trivial);
  const auto a = dump(to_json(eisenstein_order(Case::Heisenberg, profile, 2)));
  const auto b = dump(to_json(eisenstein_order(Case::Heisenberg, profile, 2)));
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["terms"].size() == 4);
  CHECK(j["pole"]["order"] == 1);
  CHECK(j["combined_order"]["text"] == "-1");
  CHECK(j.contains("image"));
  CHECK(j.contains("groups"));
}

TEST_CASE("order values")
{
  CHECK(to_json(OrderValue::known(-1))["text"] == "-1");
  const Json u = to_json(OrderValue{0, 0, 1, {"L(1/2,chi)"}});
  CHECK(u["known"] == false);
}
