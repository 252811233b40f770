#include "doctest.h"
#include "wzw/linalg.hpp"

using namespace wzw;

TEST_CASE("parse rationals") {
  CHECK(parse_q("3") == Q(3));
  CHECK(parse_q("-1/2") == Q(-1, 2));
  CHECK(parse_q("4/6") == Q(2, 3));
  CHECK_THROWS(parse_q("1/0"));
  CHECK_THROWS(parse_q("abc"));
  CHECK_THROWS(parse_q("1.5"));
  auto v = parse_qlist("1,0,1/2");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == Q(1, 2));
}

TEST_CASE("rank, nullspace, inverse") {
  QMat m(3, 3);
  int vals[9] = {1, 2, 3, 2, 4, 6, 1, 0, 1};
  for (int i = 0; i < 9; ++i) m.a[i] = vals[i];
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(mul(m, ns[0])));
  CHECK_FALSE(inverse(m).has_value());

  QMat c(2, 2);
  c(0, 0) = 2, c(0, 1) = -1, c(1, 0) = -3, c(1, 1) = 2;
  auto ci = inverse(c);
  REQUIRE(ci);
  CHECK(*ci * c == QMat::identity(2));
}

TEST_CASE("solve reports inconsistency") {
  QMat m(2, 1);
  m(0, 0) = 1;
  m(1, 0) = 1;
  CHECK(solve(m, {Q(1), Q(1)}).has_value());
  CHECK_FALSE(solve(m, {Q(1), Q(2)}).has_value());
}

TEST_CASE("span basis") {
  SpanBasis s(3);
  CHECK(s.add({1, 1, 0}));
  CHECK(s.add({0, 1, 1}));
  CHECK_FALSE(s.add({1, 2, 1}));
  CHECK(s.contains({2, 0, -2}));
  CHECK(s.dim() == 2);
}
