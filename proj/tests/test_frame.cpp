#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfc/frame.hpp"

using namespace pfc;

namespace {

// M3: bottom, three incomparable midpoints, top. A lattice, not distributive.
FiniteFrame m3() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, i);
  for (int m : {1, 2, 3}) {
    pairs.emplace_back(0, m);
    pairs.emplace_back(m, 4);
  }
  pairs.emplace_back(0, 4);
  return FiniteFrame::from_relation({"0", "x", "y", "z", "1"}, pairs);
}

}  // namespace

TEST_CASE("powerset of {a,b} is a frame") {
  FiniteFrame f = FiniteFrame::powerset({"a", "b"});
  Report r = check_frame_axioms(f);
  CHECK(r.ok());
  CHECK(f.size() == 4);
  CHECK(f.name(f.top()) == "1");
  CHECK(f.name(f.bottom()) == "0");
  int a = *f.index_of("{a}"), b = *f.index_of("{b}");
  CHECK(f.meet(a, b) == f.bottom());
  CHECK(f.join(a, b) == f.top());
}

TEST_CASE("M3 fails distributivity with a witness triple") {
  FiniteFrame f = m3();
  Report r = check_frame_axioms(f);
  CHECK(!r.ok());
  const CheckItem* fail = r.first_failure();
  REQUIRE(fail != nullptr);
  CHECK(fail->id == "distributivity");

  // Oracle: brute-force all triples; the library's witness must be among them.
  int viol = 0;
  auto meet_of = [&](int p, int q) {
    // glb by scan
    int best = -1;
    for (int c = 0; c < f.size(); ++c)
      if (f.leq(c, p) && f.leq(c, q) && (best == -1 || f.leq(best, c))) best = c;
    return best;
  };
  auto join_of = [&](int p, int q) {
    int best = -1;
    for (int c = 0; c < f.size(); ++c)
      if (f.leq(p, c) && f.leq(q, c) && (best == -1 || f.leq(c, best))) best = c;
    return best;
  };
  for (int a = 0; a < f.size(); ++a)
    for (int b = 0; b < f.size(); ++b)
      for (int c = 0; c < f.size(); ++c)
        if (meet_of(a, join_of(b, c)) != join_of(meet_of(a, b), meet_of(a, c))) ++viol;
  CHECK(viol > 0);
}

TEST_CASE("one-element lattice is a (degenerate) frame") {
  FiniteFrame f = FiniteFrame::chain(1);
  CHECK(check_frame_axioms(f).ok());
  CHECK(f.top() == f.bottom());
}

TEST_CASE("malformed orders are rejected") {
  // Missing reflexivity.
  FiniteFrame f = FiniteFrame::from_relation({"a", "b"}, {{0, 1}, {1, 1}});
  CHECK_THROWS_AS(check_frame_axioms(f), MalformedOrder);
  // Missing transitivity.
  FiniteFrame g = FiniteFrame::from_relation({"a", "b", "c"},
                                             {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
  CHECK_THROWS_AS(check_frame_axioms(g), MalformedOrder);
}

TEST_CASE("identity is a frame homomorphism") {
  FiniteFrame f = FiniteFrame::powerset({"a", "b"});
  LatticeMap id{&f, &f, {0, 1, 2, 3}};
  CHECK(check_morphism(id, MorphismKind::FrameHom).ok());
  CHECK(check_morphism(id, MorphismKind::SupHom).ok());
}

TEST_CASE("constant-to-top map is not a suplattice homomorphism") {
  FiniteFrame f = FiniteFrame::powerset({"a", "b"});
  LatticeMap c{&f, &f, std::vector<int>(4, f.top())};
  Report r = check_morphism(c, MorphismKind::SupHom);
  CHECK(!r.ok());
  CHECK(r.first_failure()->id == "empty-join");
}

TEST_CASE("frame-hom implies suplattice-hom on enumerated maps") {
  FiniteFrame f = FiniteFrame::powerset({"a", "b"});
  int framehoms = 0;
  for (int t0 = 0; t0 < 4; ++t0)
    for (int t1 = 0; t1 < 4; ++t1)
      for (int t2 = 0; t2 < 4; ++t2)
        for (int t3 = 0; t3 < 4; ++t3) {
          LatticeMap m{&f, &f, {t0, t1, t2, t3}};
          if (check_morphism(m, MorphismKind::FrameHom).ok()) {
            ++framehoms;
            CHECK(check_morphism(m, MorphismKind::SupHom).ok());
          }
        }
  CHECK(framehoms > 1);
}

TEST_CASE("composition of verified frame-homs is a frame-hom") {
  FiniteFrame f = FiniteFrame::powerset({"a", "b"});
  std::vector<LatticeMap> homs;
  for (int t0 = 0; t0 < 4; ++t0)
    for (int t1 = 0; t1 < 4; ++t1)
      for (int t2 = 0; t2 < 4; ++t2)
        for (int t3 = 0; t3 < 4; ++t3) {
          LatticeMap m{&f, &f, {t0, t1, t2, t3}};
          if (check_morphism(m, MorphismKind::FrameHom).ok()) homs.push_back(m);
        }
  for (const auto& g : homs)
    for (const auto& h : homs)
      CHECK(check_morphism(compose(g, h), MorphismKind::FrameHom).ok());
}

TEST_CASE("meet below, join above, exhaustively") {
  for (const FiniteFrame& f :
       {FiniteFrame::powerset({"a", "b", "c"}), FiniteFrame::chain(5)}) {
    for (int a = 0; a < f.size(); ++a)
      for (int b = 0; b < f.size(); ++b) {
        CHECK(f.leq(f.meet(a, b), a));
        CHECK(f.leq(a, f.join(a, b)));
      }
  }
}

TEST_CASE("downset lattices are frames") {
  // The N poset on 4 points.
  FiniteFrame f = FiniteFrame::downsets(4, {{0, 2}, {1, 2}, {1, 3}});
  CHECK(check_frame_axioms(f).ok());
  CHECK(f.size() > 4);
}
