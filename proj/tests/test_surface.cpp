#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surface.hpp"

#include <random>

using namespace affiet;
using namespace affiet::surface;

namespace {

Rational rq(long long n, long long d) { return Rational(Int(n), Int(d)); }

ProjPoint pp(long long n, long long d) { return ProjPoint(rq(n, d)); }

}  // namespace

TEST_CASE("standard model data") {
  Model m = standard();
  CHECK(m.height == rq(1, 6));
  CHECK(m.gluing.same_map(iet::base_map()));
  CHECK(m.gluing.branches.size() == 4);
}

TEST_CASE("drift per strip crossing") {
  CHECK(drift(pp(0, 1)) == Rational(0));
  CHECK(drift(pp(3, 2)) == rq(1, 4));
  CHECK(drift(pp(2, 1)) == rq(1, 3));
  CHECK(drift(pp(6, 1)) == Rational(0));
  CHECK(drift(pp(7, 1)) == rq(1, 6));
  CHECK(drift(pp(-1, 1)) == rq(5, 6));
  CHECK_THROWS_AS(drift(ProjPoint::infinity()), std::domain_error);
}

TEST_CASE("vertical return map is the gluing itself") {
  CHECK(first_return_direction(pp(0, 1)).same_map(iet::base_map()));
  CHECK(first_return_direction(pp(6, 1)).same_map(iet::base_map()));
  CHECK(first_return_direction(pp(-12, 1)).same_map(iet::base_map()));
}

TEST_CASE("slope 1 return map matches the drifted family member") {
  iet::Aiet direct = first_return_direction(pp(1, 1));
  iet::Aiet family = iet::family_member(rq(1, 6));
  CHECK(direct.same_map(family));
  REQUIRE(direct.branches.size() == 4);
  CHECK(direct.branches[0].lo == Rational(0));
  CHECK(direct.branches[0].hi == rq(1, 3));
  CHECK(direct.branches[0].slope == rq(1, 2));
  CHECK(direct.branches[0].intercept == Rational(0));
}

TEST_CASE("return maps agree with the rotated family on random slopes") {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 40; ++i) {
    long long den = 1 + static_cast<long long>(rng() % 60);
    long long num = static_cast<long long>(rng() % 201) - 100;
    ProjPoint p = ProjPoint(rq(num, den));
    Rational t = (p.slope() / Rational(6)).mod1();
    CHECK(first_return_direction(p).same_map(iet::family_member(t)));
  }
  CHECK_THROWS_AS(first_return_direction(ProjPoint::infinity()), std::domain_error);
}

TEST_CASE("vertical leaf through 1/3 closes after two crossings") {
  LeafTrace tr = trace_leaf(rq(1, 3), pp(0, 1), 10);
  CHECK(!tr.singular_hit.has_value());
  CHECK(tr.closed);
  CHECK(tr.closed_at == 2);
  CHECK(tr.holonomy == Rational(1));
  REQUIRE(tr.crossings.size() == 2);
  CHECK(tr.crossings[0].position == rq(1, 12));
  CHECK(tr.crossings[0].level == 1);
  CHECK(tr.crossings[0].branch == 1);
  CHECK(tr.crossings[0].derivative == rq(1, 2));
  CHECK(tr.crossings[1].position == rq(1, 3));
  CHECK(tr.crossings[1].level == 2);
  CHECK(tr.crossings[1].branch == 0);
  CHECK(tr.crossings[1].derivative == Rational(1));
}

TEST_CASE("leaves into cone points stop with a singular report") {
  LeafTrace tr = trace_leaf(rq(1, 6), pp(0, 1), 10);
  REQUIRE(tr.singular_hit.has_value());
  CHECK(*tr.singular_hit == 1);
  CHECK(tr.crossings.empty());
  CHECK(!tr.closed);
  // slope 2 drifts by 1/3, so the leaf from 1/6 runs into the cut at 1/2
  LeafTrace tr2 = trace_leaf(rq(1, 6), pp(2, 1), 10);
  REQUIRE(tr2.singular_hit.has_value());
  CHECK(*tr2.singular_hit == 1);
}

TEST_CASE("another vertical leaf closes with trivial holonomy") {
  LeafTrace tr = trace_leaf(rq(1, 5), pp(0, 1), 10);
  CHECK(tr.closed);
  CHECK(tr.closed_at == 2);
  CHECK(tr.holonomy == Rational(1));
  CHECK(tr.crossings[0].position == rq(1, 60));
}

TEST_CASE("contracting direction shrinks the leaf derivative") {
  LeafTrace tr = trace_leaf(rq(417, 991), pp(3, 2), 64);
  CHECK(!tr.closed);
  CHECK(!tr.singular_hit.has_value());
  REQUIRE(tr.crossings.size() == 64);
  CHECK(tr.crossings.back().derivative < Rational(1));
  CHECK(tr.holonomy == tr.crossings.back().derivative);
}

TEST_CASE("leaf table export") {
  LeafTrace tr = trace_leaf(rq(1, 3), pp(0, 1), 10);
  CHECK(leaf_csv(tr) ==
        "step,x_num,x_den,level,deriv_num,deriv_den\n"
        "1,1,12,1,1,2\n"
        "2,1,3,2,1,1\n");
}

TEST_CASE("trace rejects bad input") {
  CHECK_THROWS_AS(trace_leaf(Rational(1), pp(0, 1), 4), std::domain_error);
  CHECK_THROWS_AS(trace_leaf(rq(-1, 2), pp(0, 1), 4), std::domain_error);
  CHECK_THROWS_AS(trace_leaf(rq(1, 3), ProjPoint::infinity(), 4), std::domain_error);
}

TEST_CASE("vertical flow decomposes into two closed families") {
  auto cyls = find_cylinders(pp(0, 1), 24);
  REQUIRE(cyls.size() == 2);
  CHECK(cyls[0].multiplier == Rational(1));
  CHECK(cyls[1].multiplier == Rational(1));
  CHECK(cyls[0].period == 2);
  CHECK(cyls[1].period == 2);
  CHECK(cyls[0].itinerary == "0,1");
  CHECK(cyls[1].itinerary == "2,3");
  CHECK(cyls[0].representative < rq(1, 6));
  CHECK(rq(1, 2) <= cyls[1].representative);
  CHECK(cyls[1].representative < rq(5, 6));
}

TEST_CASE("horizontal flow is one closed family") {
  auto cyls = find_cylinders(ProjPoint::infinity(), 8);
  REQUIRE(cyls.size() == 1);
  CHECK(cyls[0].multiplier == Rational(1));
  CHECK(cyls[0].period == 1);
}

TEST_CASE("attracting closed leaf in a contracting direction") {
  auto cyls = find_cylinders(pp(3, 2), 24);
  bool attracting = false;
  for (const Cylinder& c : cyls)
    if (c.multiplier == rq(1, 2) && c.representative == rq(1, 12) &&
        c.period == 1 && c.itinerary == "0")
      attracting = true;
  CHECK(attracting);
  CHECK(cyls.size() <= 3);
  CHECK(cyls.size() >= 2);  // the inverse flow finds the repelling side
}

TEST_CASE("cylinder search validates the sample count") {
  CHECK_THROWS_AS(find_cylinders(pp(0, 1), 0), std::domain_error);
}

TEST_CASE("cone angles sum to the genus two excess") {
  auto angles = vertex_angle_check();
  REQUIRE(angles.size() == 2);
  CHECK(angles[0] == 4);
  CHECK(angles[1] == 4);
  long long excess = 0;
  for (long long a : angles) excess += a - 2;
  CHECK(excess == 4);
}
