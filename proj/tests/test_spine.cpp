#include <doctest.h>

#include <algorithm>
#include <set>

#include "tvsum/coloring.hpp"
#include "tvsum/errors.hpp"
#include "tvsum/spine.hpp"
#include "tvsum/surfaces.hpp"
#include "tvsum/triangulation.hpp"
#include "support/test_util.hpp"

using tvsum::AbstractSpine;
using tvsum::Triangulation;

namespace {

bool structurally_equal(const AbstractSpine& a, const AbstractSpine& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
      a.faces.size() != b.faces.size()) {
    return false;
  }
  for (size_t i = 0; i < a.vertices.size(); ++i) {
    if (a.vertices[i].faces != b.vertices[i].faces) return false;
  }
  for (size_t i = 0; i < a.edges.size(); ++i) {
    if (a.edges[i].faces != b.edges[i].faces || a.edges[i].chi != b.edges[i].chi) return false;
  }
  for (size_t i = 0; i < a.faces.size(); ++i) {
    if (a.faces[i].chi != b.faces[i].chi || a.faces[i].forced != b.faces[i].forced) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("triangulation parsing and validation") {
  CHECK(testutil::fixture_triangulation("fig8.json").tet_count() == 2);
  CHECK(testutil::fixture_triangulation("one_tet.json").tet_count() == 1);

  CHECK_THROWS_AS((void)Triangulation::parse("not json"), tvsum::InvalidInput);
  CHECK_THROWS_AS((void)Triangulation::parse("{\"tetrahedra\":[]}"), tvsum::InvalidInput);
  // Dangling neighbor index.
  CHECK_THROWS_AS(
      (void)Triangulation::parse(
          R"({"tetrahedra":[{"neighbors":[5,0,0,0],
              "gluings":[[1,2,3,0],[3,0,1,2],[1,2,3,0],[3,0,1,2]]}]})"),
      tvsum::InvalidInput);
  // A gluing entry that is not a bijection.
  CHECK_THROWS_AS(
      (void)Triangulation::parse(
          R"({"tetrahedra":[{"neighbors":[0,0,0,0],
              "gluings":[[1,1,3,0],[3,0,1,2],[1,2,3,0],[3,0,1,2]]}]})"),
      tvsum::InvalidInput);
  // Involution broken: swap two gluings of the one-tet fixture.
  CHECK_THROWS_AS(
      (void)Triangulation::parse(
          R"({"tetrahedra":[{"neighbors":[0,0,0,0],
              "gluings":[[1,2,3,0],[1,2,3,0],[3,0,1,2],[3,0,1,2]]}]})"),
      tvsum::InvalidInput);
}

TEST_CASE("edge classes") {
  const auto fig8 = testutil::fixture_triangulation("fig8.json");
  const auto classes = tvsum::edge_classes(fig8);
  CHECK(classes.count() == 2);
  CHECK(classes.members[0].size() == 6);
  CHECK(classes.members[1].size() == 6);
  CHECK(classes.class_of.size() == 12);

  const auto one = tvsum::edge_classes(testutil::fixture_triangulation("one_tet.json"));
  CHECK(one.count() == 2);
  CHECK(one.members[0].size() + one.members[1].size() == 6);
}

TEST_CASE("dual spine structure and duality counts") {
  const auto fig8 = testutil::fixture_triangulation("fig8.json");
  const auto s = tvsum::dual_spine(fig8);
  CHECK(s.vertex_count() == 2);
  CHECK(s.edge_count() == 4);
  CHECK(s.face_count() == 2);
  CHECK(tvsum::euler_characteristic(s) == 0);
  CHECK_FALSE(s.is_augmented());

  const auto one = testutil::fixture_spine("one_tet.json");
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 2);
  CHECK(one.face_count() == 2);
  CHECK(tvsum::euler_characteristic(one) == 1);

  for (const auto* spine : {&s, &one}) {
    // #v = tets, #e = 2 tets, #f = classes, all chi weights 1.
    CHECK(spine->edge_count() == 2 * spine->vertex_count());
    for (const auto& e : spine->edges) CHECK(e.chi == 1);
    for (const auto& f : spine->faces) {
      CHECK(f.chi == 1);
      CHECK_FALSE(f.forced.has_value());
    }
    // Corner consistency: every corner triple equals some incident edge
    // triple as a multiset.
    for (const auto& v : spine->vertices) {
      for (const auto& corner : v.corner_triples()) {
        auto want = corner;
        std::sort(want.begin(), want.end());
        bool found = false;
        for (const auto& e : spine->edges) {
          auto have = e.faces;
          std::sort(have.begin(), have.end());
          if (have == want) found = true;
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("spine JSON round-trip") {
  const auto s = testutil::fixture_spine("fig8.json");
  const auto loaded = tvsum::load_spine(tvsum::serialize_spine(s));
  CHECK(structurally_equal(s, loaded));

  const auto aug = tvsum::load_spine(testutil::fixture_text("augmented.json"));
  CHECK(aug.is_augmented());
  CHECK(structurally_equal(aug, tvsum::load_spine(tvsum::serialize_spine(aug))));
}

TEST_CASE("load_spine validation") {
  // Forced color must be 1.
  CHECK_THROWS_AS((void)tvsum::load_spine(R"({"vertices":[{"faces":[0,0,0,0,0,0]}],
      "edges":[{"faces":[0,0,0],"chi":1}],
      "faces":[{"chi":0,"forced":3}]})"),
                  tvsum::InvalidInput);
  // chi weight outside {0,1}.
  CHECK_THROWS_AS((void)tvsum::load_spine(R"({"vertices":[{"faces":[0,0,0,0,0,0]}],
      "edges":[{"faces":[0,0,0],"chi":1}],
      "faces":[{"chi":2,"forced":null}]})"),
                  tvsum::InvalidInput);
  // Face id out of range.
  CHECK_THROWS_AS((void)tvsum::load_spine(R"({"vertices":[{"faces":[0,0,0,0,0,9]}],
      "edges":[{"faces":[0,0,0],"chi":1}],
      "faces":[{"chi":1,"forced":null}]})"),
                  tvsum::InvalidInput);
  // Corner triple with no matching edge.
  CHECK_THROWS_AS((void)tvsum::load_spine(R"({"vertices":[{"faces":[0,1,0,0,0,0]}],
      "edges":[{"faces":[0,0,0],"chi":1}],
      "faces":[{"chi":1,"forced":null},{"chi":1,"forced":null}]})"),
                  tvsum::InvalidInput);
  // An annular face accepted when forced to 1 with chi 0.
  CHECK_NOTHROW((void)tvsum::load_spine(testutil::fixture_text("augmented.json")));
}

TEST_CASE("boundary coloring") {
  const auto s = testutil::fixture_spine("fig8.json");
  const auto b = tvsum::boundary_coloring(s);
  CHECK(b.colors == std::vector<long>{2, 2});
  CHECK(tvsum::is_admissible_coloring(s, b));
  CHECK(tvsum::is_normal(s, b));
  // Every vertex labeling is (2,2,2;2,2,2).
  for (int v = 0; v < s.vertex_count(); ++v) {
    CHECK(tvsum::vertex_labeling(s, b, v).column_sums_sorted() == std::array<long, 3>{4, 4, 4});
  }

  const auto aug = tvsum::load_spine(testutil::fixture_text("augmented.json"));
  CHECK_THROWS_AS((void)tvsum::boundary_coloring(aug), tvsum::InvalidInput);
}
