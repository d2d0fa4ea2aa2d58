#include <doctest.h>

#include <algorithm>

#include "rootfan/report.hpp"

using namespace rootfan;

namespace {

std::shared_ptr<const RootSystem> sys(const char* spec) {
  return std::make_shared<const RootSystem>(RootSystemSpec::parse(spec));
}

}  // namespace

TEST_CASE("json round trip") {
  for (auto [spec, bits] : {std::pair{"G2", 2u}, {"A2", 3u}, {"A4", 2u}, {"B3", 4u}, {"A3", 2u}}) {
    ReportOptions o;
    o.regularity = true;
    auto doc = make_report(sys(spec), IndexSet(bits), o);
    auto text = to_json(doc);
    CAPTURE(text);
    CHECK(report_from_json(text) == doc);
    CHECK(to_json(report_from_json(text)) == text);
  }
}

TEST_CASE("rationals are strings") {
  auto doc = make_report(sys("B3"), IndexSet(4));
  auto text = to_json(doc);
  CHECK(text.find('.', text.find("\"input\"")) == std::string::npos);
  REQUIRE(doc.normal.has_value());
  for (const auto& p : doc.normal->phi) CHECK_NOTHROW(Rational::parse(p));
}

TEST_CASE("scan supports") {
  CHECK(scan_supports(RootSystem(RootSystemSpec::parse("A4"))).size() == 15);
  CHECK(scan_supports(RootSystem(RootSystemSpec::parse("B3xG2"))).size() == 21);
  auto s = scan_supports(RootSystem(RootSystemSpec::parse("A3")));
  CHECK(s.front() == IndexSet(1));
  CHECK(s.back() == IndexSet(7));
}

TEST_CASE("scan is deterministic across thread counts") {
  ReportOptions one, many;
  one.threads = 1;
  many.threads = 8;
  auto a = scan(sys("B4"), one);
  auto b = scan(sys("B4"), many);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("long scans are gated") {
  CHECK_THROWS_AS(scan(sys("E7"), {}), CapacityError);
}

TEST_CASE("support parsing") {
  CHECK(parse_support({1, 3}, 4) == IndexSet(5));
  CHECK(one_based(IndexSet(5)) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(parse_support({0}, 3), ArgumentError);
  CHECK_THROWS_AS(parse_support({4}, 3), ArgumentError);
  CHECK_THROWS_AS(parse_support({}, 3), ArgumentError);
}

TEST_CASE("table rows") {
  auto rows = table({'G'}, 2, {});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].label == "(G2, -w1)");
  CHECK(rows[1].label == "(G2, -w2)");
  for (const auto& r : rows) CHECK(r.lattice_regular == "yes");
  auto empty = table_text({});
  CHECK(empty.find("(type, lambda)") != std::string::npos);
  CHECK(std::count(empty.begin(), empty.end(), '\n') == 2);
}

TEST_CASE("csv quotes list fields") {
  auto csv = to_csv({make_report(sys("A3"), IndexSet(5))});
  CHECK(csv.find("\"1;3\"") != std::string::npos);
}
