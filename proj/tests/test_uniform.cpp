#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfc/uniform.hpp"

using namespace pfc;

namespace {

struct Discrete2 {
  FiniteFrame f = FiniteFrame::powerset({"a", "b"});
  int a, b;
  UniformityBase singletons;
  Discrete2() {
    a = *f.index_of("{a}");
    b = *f.index_of("{b}");
    singletons.covers = {Cover{{a, b}}};
    singletons.star_witness = {0};
  }
};

}  // namespace

TEST_CASE("star basics on discrete-2") {
  Discrete2 d;
  Cover u{{d.a, d.b}};
  CHECK(star(d.f, d.f.bottom(), u) == d.f.bottom());
  CHECK(star(d.f, d.a, u) == d.a);
  Cover with_top{{d.a, d.b, d.f.top()}};
  CHECK(star(d.f, d.a, with_top) == d.f.top());
}

TEST_CASE("star cover of disjoint singletons is itself") {
  Discrete2 d;
  Cover u{{d.a, d.b}};
  Cover sc = star_cover(d.f, u);
  std::vector<int> expect{d.a, d.b};
  std::sort(expect.begin(), expect.end());
  CHECK(sc.members == expect);

  Cover top_only{{d.f.top()}};
  CHECK(star_cover(d.f, top_only).members == std::vector<int>{d.f.top()});
}

TEST_CASE("refinement preorder") {
  Discrete2 d;
  Cover fine{{d.a, d.b}}, mixed{{d.f.top(), d.a}}, coarse{{d.f.top()}};
  CHECK(refines(d.f, fine, fine));
  CHECK(refines(d.f, fine, mixed));
  CHECK(!refines(d.f, coarse, fine));

  // Preorder laws over all covers of discrete-2.
  std::vector<Cover> covers;
  for (unsigned mask = 1; mask < 16; ++mask) {
    Cover c;
    for (int e = 0; e < 4; ++e)
      if (mask >> e & 1) c.members.push_back(e);
    if (d.f.join_all(c.members) == d.f.top()) covers.push_back(c);
  }
  for (const auto& c : covers) CHECK(refines(d.f, c, c));
  for (const auto& c1 : covers)
    for (const auto& c2 : covers)
      for (const auto& c3 : covers)
        if (refines(d.f, c1, c2) && refines(d.f, c2, c3)) CHECK(refines(d.f, c1, c3));
}

TEST_CASE("uniformly below on discrete-2") {
  Discrete2 d;
  for (int x = 0; x < d.f.size(); ++x) CHECK(uniformly_below(d.f, x, x, d.singletons).has_value());
  CHECK(!uniformly_below(d.f, d.f.top(), d.a, d.singletons).has_value());
}

TEST_CASE("validate_uniformity: singleton base is uniform") {
  Discrete2 d;
  auto v = validate_uniformity(d.f, d.singletons);
  CHECK(v.validity.ok());
  CHECK(v.uniform);
}

TEST_CASE("validate_uniformity: indiscrete base is pre-uniform but not uniform") {
  Discrete2 d;
  UniformityBase ind;
  ind.covers = {Cover{{d.f.top()}}};
  ind.star_witness = {0};
  auto v = validate_uniformity(d.f, ind);
  CHECK(v.validity.ok());
  CHECK(!v.uniform);
}

TEST_CASE("validate_uniformity: bottom member is not strong") {
  Discrete2 d;
  UniformityBase bad;
  bad.covers = {Cover{{d.f.bottom(), d.f.top()}}};
  bad.star_witness = {0};
  auto v = validate_uniformity(d.f, bad);
  CHECK(!v.validity.ok());
}

TEST_CASE("uniform reflection") {
  Discrete2 d;
  SUBCASE("singleton base fixes the whole frame") {
    Subframe s = uniform_reflection(d.f, d.singletons);
    CHECK(s.frame.size() == d.f.size());
    CHECK(s.closure_checks.ok());
  }
  SUBCASE("indiscrete base fixes only 0 and 1") {
    UniformityBase ind;
    ind.covers = {Cover{{d.f.top()}}};
    ind.star_witness = {0};
    Subframe s = uniform_reflection(d.f, ind);
    CHECK(s.frame.size() == 2);
    CHECK(s.closure_checks.ok());
  }
  SUBCASE("atom cover fixes every powerset frame") {
    for (int pts = 1; pts <= 4; ++pts) {
      std::vector<std::string> names;
      for (int i = 0; i < pts; ++i) names.push_back(std::string(1, char('a' + i)));
      FiniteFrame f = FiniteFrame::powerset(names);
      UniformityBase base;
      base.covers = {Cover{f.atoms()}};
      base.star_witness = {0};
      Subframe s = uniform_reflection(f, base);
      CHECK(s.frame.size() == f.size());
    }
  }
}

TEST_CASE("metric uniformity on the 2-point discrete metric") {
  FiniteMetric m;
  m.points = {"a", "b"};
  m.dist = {{rat(0), rat(1)}, {rat(1), rat(0)}};

  SUBCASE("eps = 1/2 gives the singleton cover") {
    MetricInstance mi = metric_uniformity(m, {rat(1, 2)});
    REQUIRE(mi.base.covers.size() == 1);
    std::vector<int> members = mi.base.covers[0].members;
    std::sort(members.begin(), members.end());
    CHECK(members == std::vector<int>{*mi.frame.index_of("{a}"), *mi.frame.index_of("{b}")});
  }
  SUBCASE("eps = 2 gives the whole-space cover") {
    MetricInstance mi = metric_uniformity(m, {rat(2)});
    REQUIRE(mi.base.covers.size() == 1);
    CHECK(mi.base.covers[0].members == std::vector<int>{mi.frame.top()});
  }
  SUBCASE("halving schedule validates") {
    MetricInstance mi = metric_uniformity(m, {rat(2), rat(1), rat(1, 2), rat(1, 4)});
    auto v = validate_uniformity(mi.frame, mi.base);
    CHECK(v.validity.ok());
    CHECK(v.uniform);
  }
  SUBCASE("empty space throws") {
    FiniteMetric e;
    CHECK_THROWS_AS(metric_uniformity(e, {rat(1)}), EmptySpace);
  }
}
