#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfc/coverage.hpp"

using namespace pfc;

namespace {

// Discrete-2 completion site built directly as a meet table on
// {[0 in F], [{a} in F], [{b} in F], TOP} with the covering rules.
Site disc2_completion_site() {
  std::vector<std::vector<int>> mt = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  std::vector<Site::Rule> rules;
  rules.push_back({0, {}, "properness"});
  rules.push_back({3, {1, 2}, "cover"});
  rules.push_back({1, {0, 1}, "regularity a"});
  rules.push_back({2, {0, 2}, "regularity b"});
  rules.push_back({3, {0, 1, 2, 3}, "regularity 1"});
  return Site::from_meet_table({"[0 in F]", "[{a} in F]", "[{b} in F]", "TOP"}, mt, rules);
}

}  // namespace

TEST_CASE("coverage correspondence holds on the discrete-2 completion site") {
  Report r = coverage_iso_check(disc2_completion_site());
  CHECK(r.ok());
}

TEST_CASE("one-generator site with no covers: both sides are the 2-element lattice") {
  Site s = Site::from_meet_table({"g"}, {{0}}, {});
  Report r = coverage_iso_check(s);
  CHECK(r.ok());
  bool saw = false;
  for (const auto& it : r.items())
    if (it.id == "frame-side-size") {
      CHECK(it.note == "2 elements");
      saw = true;
    }
  CHECK(saw);
}

TEST_CASE("refinement-stability hypothesis violations are caught") {
  // Chain b < a < 1 with a single rule on a and nothing refined at b.
  std::vector<std::vector<int>> mt = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  Site s = Site::from_meet_table({"b", "a", "1"}, mt, {{1, {0}, "a cov {b}"}});
  Report r = coverage_iso_check(s);
  CHECK(!r.ok());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->id == "hypothesis");
  CHECK(r.first_failure()->note.find("b") != std::string::npos);
}

TEST_CASE("size budget") {
  // A 6-element chain exceeds the free-lattice generator cap.
  std::vector<std::vector<int>> mt(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) mt[i][j] = std::min(i, j);
  std::vector<std::string> names;
  for (int i = 0; i < 6; ++i) names.push_back("c" + std::to_string(i));
  Site s = Site::from_meet_table(names, mt, {});
  CHECK_THROWS_AS(coverage_iso_check(s), SizeBudgetExceeded);
}

TEST_CASE("every hypothesis-satisfying site on tiny semilattices passes the iso") {
  // All meet-semilattices on <= 3 labeled elements, with at most one
  // covering family per element drawn from its strict downset; the
  // acceptance suite runs the full <= 4 enumeration.
  int sites_checked = 0;
  for (int n = 1; n <= 3; ++n) {
    // Enumerate partial orders as upper-triangular strict relations.
    int pairs = n * (n - 1) / 2;
    for (unsigned rel = 0; rel < (1u << pairs); ++rel) {
      std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
      for (int i = 0; i < n; ++i) le[i][i] = true;
      int k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
          if (rel >> k & 1) le[i][j] = true;
      // transitivity
      bool trans = true;
      for (int a = 0; a < n && trans; ++a)
        for (int b = 0; b < n && trans; ++b)
          for (int c = 0; c < n; ++c)
            if (le[a][b] && le[b][c] && !le[a][c]) {
              trans = false;
              break;
            }
      if (!trans) continue;
      // meet table
      std::vector<std::vector<int>> mt(n, std::vector<int>(n, -1));
      bool is_semilattice = true;
      for (int a = 0; a < n && is_semilattice; ++a)
        for (int b = 0; b < n; ++b) {
          int glb = -1;
          for (int c = 0; c < n; ++c)
            if (le[c][a] && le[c][b] && (glb == -1 || le[glb][c])) glb = c;
          bool greatest = glb != -1;
          for (int c = 0; c < n && greatest; ++c)
            if (le[c][a] && le[c][b] && !le[c][glb]) greatest = false;
          if (!greatest) {
            is_semilattice = false;
            break;
          }
          mt[a][b] = glb;
        }
      if (!is_semilattice) continue;
      bool has_top = false;
      for (int t = 0; t < n && !has_top; ++t) {
        has_top = true;
        for (int x = 0; x < n; ++x)
          if (!le[x][t]) has_top = false;
      }
      if (!has_top) continue;

      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));

      // One optional family per element.
      std::vector<std::vector<std::vector<int>>> options(n);
      for (int e = 0; e < n; ++e) {
        options[e].push_back({});  // no rule marker: empty vector of rules handled below
        std::vector<int> strictly_below;
        for (int x = 0; x < n; ++x)
          if (le[x][e] && x != e) strictly_below.push_back(x);
        for (unsigned m = 0; m < (1u << strictly_below.size()); ++m) {
          std::vector<int> fam;
          for (std::size_t i = 0; i < strictly_below.size(); ++i)
            if (m >> i & 1) fam.push_back(strictly_below[i]);
          options[e].push_back(fam);
        }
      }
      std::vector<int> choice(n, 0);
      while (true) {
        std::vector<Site::Rule> rules;
        for (int e = 0; e < n; ++e)
          if (choice[e] > 0) rules.push_back({e, options[e][choice[e]], "r"});
        Site s = Site::from_meet_table(names, mt, rules);
        Report r = coverage_iso_check(s);
        bool hyp_ok = true;
        for (const auto& it : r.items())
          if (it.id == "hypothesis" && !it.pass) hyp_ok = false;
        if (hyp_ok) {
          ++sites_checked;
          CHECK(r.ok());
        }
        int e = 0;
        while (e < n && ++choice[e] >= int(options[e].size())) choice[e++] = 0;
        if (e == n) break;
      }
    }
  }
  CHECK(sites_checked > 10);
}
