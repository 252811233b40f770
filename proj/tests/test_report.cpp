#include <set>

#include "doctest.h"
#include "wzw/report.hpp"

using namespace wzw;

namespace {

VerifyOptions small(uint64_t seed) {
  VerifyOptions o;
  o.seed = seed;
  o.cap = 24;
  o.max_level = 1;
  return o;
}

}  // namespace

TEST_CASE("report is deterministic for a fixed seed") {
  auto a = verify_paper(small(7));
  auto b = verify_paper(small(7));
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.ok());
  CHECK(a.count(ClaimStatus::Assumed) == 1);
  CHECK(a.count(ClaimStatus::Fail) == 0);
}

TEST_CASE("every claim is anchored and unique") {
  auto r = verify_paper(small(3));
  std::set<std::string> ids;
  for (auto& c : r.claims) {
    CHECK_FALSE(c.anchor.empty());
    CHECK(ids.insert(c.id).second);
  }
  auto j = r.to_json();
  CHECK(j.contains("claims"));
  CHECK(j["seed"] == 3);
  // The only assumed entry is the fusion/Kac-Walton identification.
  for (auto& c : r.claims)
    if (c.status == ClaimStatus::Assumed) CHECK(c.id == "kac-walton-identification");
}

TEST_CASE("json helpers keep rationals exact") {
  CHECK(to_json(Q(-3, 4)) == "-3/4");
  auto w = weight_json(AlgebraId::parse("B2"), Lbl{0, 1});
  CHECK(w["coords"][1] == "1");
  CHECK(w["algebra"] == "B2");
}
