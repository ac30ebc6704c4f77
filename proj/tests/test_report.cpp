#include <doctest.h>

#include "polycensus/report.hpp"

using namespace polycensus;

namespace {

CountResult result(Variant v, int m, int n, long long H, long long count) {
  CountResult r;
  r.query = CountQuery{6, Int(H), true, v, m, n};
  r.count = count;
  r.workers = 4;
  r.elapsed_seconds = 0.25;
  return r;
}

}  // namespace

TEST_CASE("csv rows") {
  CHECK(csv_header() == "d,monic,variant,m,n,H,count,method,workers,elapsed_seconds");
  CHECK(csv_row(result(Variant::Total, 0, 0, 3, 945), false) == "6,true,total,,,3,945,forward,4,");
  CHECK(csv_row(result(Variant::Split, 3, 2, 3, 595), false) == "6,true,split,3,2,3,595,forward,4,");
  CHECK(csv_row(result(Variant::IndecompPair, 0, 0, 3, 595), false) == "6,true,indecomp_pair,3,2,3,595,forward,4,");
  CHECK(csv_row(result(Variant::Total, 0, 0, 3, 945), true).rfind("6,true,total,,,3,945,forward,4,0.25", 0) == 0);
}

TEST_CASE("csv round trip") {
  std::string doc = csv_header() + "\n";
  doc += csv_row(result(Variant::Total, 0, 0, 3, 945), false) + "\n";
  doc += csv_row(result(Variant::Split, 2, 3, 4, 1234), true) + "\n";
  const auto rows = parse_csv(doc);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].variant == Variant::Total);
  CHECK(rows[0].count == Int(945));
  CHECK(rows[1].variant == Variant::Split);
  CHECK(rows[1].m == 2);
  CHECK(rows[1].n == 3);
  CHECK(rows[1].height == Int(4));
  CHECK_THROWS_AS(parse_csv("a,b\n1,2\n"), PreconditionError);
  CHECK_THROWS_AS(parse_csv(csv_header() + "\n6,1,total\n"), PreconditionError);
}

TEST_CASE("json rows and manifest") {
  const auto j = json_row(result(Variant::Split, 3, 2, 3, 595), false);
  CHECK(j["count"] == "595");
  CHECK(j["H"] == 3);
  CHECK(j["variant"] == "split");
  RunManifest m;
  m.argv = {"polycensus", "count"};
  m.started_utc = utc_timestamp();
  m.finished_utc = m.started_utc;
  const auto mj = m.to_json();
  CHECK(mj["version"] == kVersion);
  CHECK(mj["argv"].size() == 2);
  CHECK(m.started_utc.size() == 20);
}
