#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "tvsum/coloring.hpp"
#include "tvsum/errors.hpp"
#include "tvsum/surfaces.hpp"
#include "support/net_tracer.hpp"
#include "support/test_util.hpp"

using tvsum::Coloring;
using tvsum::TetLabels;

namespace {

const tvsum::AbstractSpine& fig8() {
  static const auto s = testutil::fixture_spine("fig8.json");
  return s;
}

Coloring xy(long x, long y) { return Coloring{{x, y}}; }

}  // namespace

TEST_CASE("circle count: named examples and tracing oracle") {
  CHECK(tvsum::circle_count(TetLabels(2, 2, 2, 2, 2, 2)) == 4);
  CHECK(tvsum::circle_count(TetLabels(1, 1, 0, 1, 1, 0)) == 1);
  CHECK(tvsum::circle_count(TetLabels(1, 1, 2, 1, 1, 2)) == 1);

  CHECK(testutil::traced_circles(TetLabels(2, 2, 2, 2, 2, 2)) == 4);
  CHECK(testutil::traced_circles(TetLabels(1, 1, 0, 1, 1, 0)) == 1);
  CHECK(testutil::traced_circles(TetLabels(1, 1, 2, 1, 1, 2)) == 1);

  // gcd formula == explicit tracing for every admissible net with entries
  // <= 6 (the <= 10 sweep runs in the acceptance suite).
  long checked = 0;
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b)
      for (long e = 0; e <= 6; ++e)
        for (long c = 0; c <= 6; ++c)
          for (long d = 0; d <= 6; ++d)
            for (long f = 0; f <= 6; ++f) {
              if (!(tvsum::is_admissible(a, d, e) && tvsum::is_admissible(b, c, e) &&
                    tvsum::is_admissible(a, b, f) && tvsum::is_admissible(c, d, f))) {
                continue;
              }
              const TetLabels L(a, b, e, c, d, f);
              ++checked;
              REQUIRE(tvsum::circle_count(L) == testutil::traced_circles(L));
            }
  CHECK(checked > 1000);
}

TEST_CASE("curve types") {
  const auto quad = tvsum::curve_type(TetLabels(1, 1, 0, 1, 1, 0));
  REQUIRE(quad.has_value());
  CHECK(quad->a == 0);
  CHECK(quad->b == 1);
  CHECK(quad->multiplicity == 1);

  const auto oct = tvsum::curve_type(TetLabels(1, 1, 2, 1, 1, 2));
  REQUIRE(oct.has_value());
  CHECK(oct->a == 1);
  CHECK(oct->b == 1);
  CHECK(oct->multiplicity == 1);

  CHECK_FALSE(tvsum::curve_type(TetLabels(2, 2, 2, 2, 2, 2)).has_value());

  const auto doubled = tvsum::curve_type(TetLabels(2, 2, 0, 2, 2, 0));
  REQUIRE(doubled.has_value());
  CHECK(doubled->a == 0);
  CHECK(doubled->b == 1);
  CHECK(doubled->multiplicity == 2);
}

TEST_CASE("admissible colorings on the figure-eight spine") {
  CHECK(tvsum::is_admissible_coloring(fig8(), xy(0, 0)));
  CHECK(tvsum::is_admissible_coloring(fig8(), tvsum::boundary_coloring(fig8())));
  CHECK_FALSE(tvsum::is_admissible_coloring(fig8(), xy(1, 0)));  // odd triple somewhere
  CHECK_FALSE(tvsum::is_admissible_coloring(fig8(), xy(0, 2)));  // triangle inequality fails
  CHECK_FALSE(tvsum::is_admissible_coloring(fig8(), Coloring{{-2, 0}}));
}

TEST_CASE("enumeration: counts, order, completeness") {
  CHECK(tvsum::all_colorings(fig8(), 0) == std::vector<Coloring>{xy(0, 0)});

  // N = 2: exhaustive 3x3 check pins the full set.
  const auto at2 = tvsum::all_colorings(fig8(), 2);
  CHECK(at2 == std::vector<Coloring>{xy(0, 0), xy(2, 2)});

  // Monotone: the N-set is a prefix-filter of the (N+2)-set.
  for (long n : {2L, 4L, 8L}) {
    const auto small = tvsum::all_colorings(fig8(), n);
    const auto big = tvsum::all_colorings(fig8(), n + 2);
    std::set<std::vector<long>> bigset;
    for (const auto& c : big) bigset.insert(c.colors);
    for (const auto& c : small) CHECK(bigset.count(c.colors) == 1);
  }

  // Completeness against the brute-force filter on 2-face spines, and
  // lexicographic order.
  for (const char* fx : {"fig8.json", "one_tet.json"}) {
    const auto spine = testutil::fixture_spine(fx);
    REQUIRE(spine.face_count() == 2);
    const long n = 7;
    std::vector<Coloring> expected;
    for (long u0 = 0; u0 <= n; ++u0)
      for (long u1 = 0; u1 <= n; ++u1) {
        Coloring c{{u0, u1}};
        if (tvsum::is_admissible_coloring(spine, c)) expected.push_back(c);
      }
    CHECK(tvsum::all_colorings(spine, n) == expected);
  }

  // Forced faces obey the bound: nothing fits under N = 0 on the augmented
  // fixture, and the forced color stays 1 above it.
  const auto aug = tvsum::load_spine(testutil::fixture_text("augmented.json"));
  CHECK(tvsum::all_colorings(aug, 0).empty());
  for (const auto& c : tvsum::all_colorings(aug, 3)) CHECK(c.colors[2] == 1);
  CHECK_FALSE(tvsum::all_colorings(aug, 3).empty());
}

TEST_CASE("vertex labelings on the figure-eight fixture") {
  const Coloring zero = xy(0, 0);
  CHECK(tvsum::vertex_labeling(fig8(), zero, 0) == TetLabels(0, 0, 0, 0, 0, 0));
  const auto b = tvsum::boundary_coloring(fig8());
  CHECK(tvsum::vertex_labeling(fig8(), b, 0) == TetLabels(2, 2, 2, 2, 2, 2));
  CHECK(tvsum::vertex_labeling(fig8(), b, 1) == TetLabels(2, 2, 2, 2, 2, 2));

  // Hand-traced incidences of the fixture: with face 0 the class of
  // tet0-edge (0,1) and face 1 the class of (0,2), the coloring (2,4) yields
  // these labelings at the two vertices.
  const Coloring c24 = xy(2, 4);
  REQUIRE(tvsum::is_admissible_coloring(fig8(), c24));
  CHECK(tvsum::vertex_labeling(fig8(), c24, 0) == TetLabels(2, 4, 4, 2, 2, 4));
  CHECK(tvsum::vertex_labeling(fig8(), c24, 1) == TetLabels(4, 4, 2, 2, 4, 2));
}

TEST_CASE("surface Euler characteristic") {
  CHECK(tvsum::surface_euler_char(fig8(), xy(0, 0)) == 0);
  CHECK(tvsum::surface_euler_char(fig8(), tvsum::boundary_coloring(fig8())) == 0);

  const auto aug = tvsum::load_spine(testutil::fixture_text("augmented.json"));
  CHECK_THROWS_AS((void)tvsum::surface_euler_char(aug, Coloring{{1, 0, 1}}),
                  tvsum::InvalidInput);

  // Additivity over pairs whose per-vertex curve types match (or are
  // triangle-only on one side).
  const auto colorings = tvsum::all_colorings(fig8(), 10);
  long pairs_checked = 0;
  for (const auto& f1 : colorings) {
    for (const auto& f2 : colorings) {
      bool compatible = true;
      for (int v = 0; v < fig8().vertex_count() && compatible; ++v) {
        const auto t1 = tvsum::curve_type(tvsum::vertex_labeling(fig8(), f1, v));
        const auto t2 = tvsum::curve_type(tvsum::vertex_labeling(fig8(), f2, v));
        if (t1 && t2 && (t1->a != t2->a || t1->b != t2->b)) compatible = false;
      }
      if (!compatible) continue;
      if (!tvsum::common_sector_exists(fig8(), f1, f2)) continue;
      ++pairs_checked;
      const auto sum = tvsum::add_colorings(fig8(), f1, f2);
      CHECK(tvsum::surface_euler_char(fig8(), sum) ==
            tvsum::surface_euler_char(fig8(), f1) + tvsum::surface_euler_char(fig8(), f2));
    }
  }
  CHECK(pairs_checked > 10);
}

TEST_CASE("Q: examples, boundary shifts, lower bound") {
  CHECK(tvsum::q_value(fig8(), xy(0, 0)) == 0);
  // Boundary coloring: per-vertex term 4, faces contribute -8; equals
  // -4 chi(M) = 0 here.
  CHECK(tvsum::q_value(fig8(), tvsum::boundary_coloring(fig8())) == 0);

  // Independent recomputation for (2,4) straight from the definition.
  const Coloring c24 = xy(2, 4);
  long expected = -2 * (2 + 4);
  for (int v = 0; v < fig8().vertex_count(); ++v) {
    const auto C = tvsum::vertex_labeling(fig8(), c24, v).column_sums_sorted();
    expected += (C[0] - C[1]) * (C[0] - C[2]) / 2 + C[0];
  }
  CHECK(tvsum::q_value(fig8(), c24) == expected);
  CHECK(tvsum::q_value(fig8(), c24) == 12);

  const long chi = tvsum::euler_characteristic(fig8());
  for (const auto& c : tvsum::all_colorings(fig8(), 12)) {
    // -2 chi(F) <= Q(F)
    CHECK(-2 * tvsum::surface_euler_char(fig8(), c) <= tvsum::q_value(fig8(), c));
    // Q(F + k dM) = Q(F) - 4k chi(M)
    for (long k = 1; k <= 5; ++k) {
      CHECK(tvsum::q_value(fig8(), tvsum::shift(fig8(), c, k)) ==
            tvsum::q_value(fig8(), c) - 4 * k * chi);
    }
  }
}

TEST_CASE("Q super-additivity on common sectors") {
  const auto colorings = tvsum::all_colorings(fig8(), 8);
  CHECK(tvsum::q_cross_term(fig8(), xy(0, 0), xy(2, 4)) == 0);  // zero surface
  const auto b = tvsum::boundary_coloring(fig8());
  CHECK(tvsum::q_cross_term(fig8(), b, b) == 0);  // all columns tie

  long pairs = 0;
  for (const auto& f1 : colorings) {
    for (const auto& f2 : colorings) {
      if (!tvsum::common_sector_exists(fig8(), f1, f2)) continue;
      ++pairs;
      const long cross = tvsum::q_cross_term(fig8(), f1, f2);
      CHECK(cross >= 0);
      CHECK(tvsum::q_value(fig8(), tvsum::add_colorings(fig8(), f1, f2)) ==
            tvsum::q_value(fig8(), f1) + tvsum::q_value(fig8(), f2) + cross);
    }
  }
  CHECK(pairs > 20);

  // (2,4) and (4,2) sit in disjoint sectors at both vertices.
  CHECK_FALSE(tvsum::common_sector_exists(fig8(), xy(2, 4), xy(4, 2)));
  CHECK_THROWS_AS((void)tvsum::q_cross_term(fig8(), xy(2, 4), xy(4, 2)), tvsum::InvalidInput);
}

TEST_CASE("sectors") {
  const auto zero_sectors = tvsum::sector_of(fig8(), xy(0, 0));
  for (const auto& vs : zero_sectors) {
    CHECK(vs.compatible_mask == 0x3f);  // total tie: all 6 orderings
    CHECK(vs.canonical == std::array<int, 3>{0, 1, 2});
  }
  CHECK(tvsum::sector_label(zero_sectors) == "012|012");

  // Strict sums give a unique ordering: (2,4) has columns (4,6,8) at vertex
  // 0 and (6,8,4) at vertex 1.
  const auto s24 = tvsum::sector_of(fig8(), xy(2, 4));
  CHECK(s24[0].canonical == std::array<int, 3>{2, 1, 0});
  CHECK(__builtin_popcount(s24[0].compatible_mask) == 1);
  CHECK(s24[1].canonical == std::array<int, 3>{1, 0, 2});

  // Component property on genuine decompositions: a multiple of a primitive
  // ray splits into parallel copies, and adding boundary copies adds
  // all-triangle components. Each component's sector set contains the whole
  // surface's sectors.
  long checked = 0;
  const auto check_split = [&](const Coloring& whole, const Coloring& part) {
    const auto sw = tvsum::sector_of(fig8(), whole);
    const auto sp = tvsum::sector_of(fig8(), part);
    for (size_t v = 0; v < sw.size(); ++v) {
      CHECK((sw[v].compatible_mask & ~sp[v].compatible_mask) == 0);
    }
    ++checked;
  };
  for (long x = 2; x <= 8; x += 2) {
    for (long x1 = 2; x1 < x; x1 += 2) {
      check_split(xy(x, 2 * x), xy(x1, 2 * x1));          // parallel copies of (1,2)
      check_split(xy(2 * x, x), xy(2 * x1, x1));
    }
    for (long k = 1; k <= 3; ++k) {
      check_split(tvsum::shift(fig8(), xy(x, 2 * x), k), xy(x, 2 * x));
      check_split(tvsum::shift(fig8(), xy(x, 2 * x), k),
                  tvsum::shift(fig8(), xy(0, 0), k));     // the boundary copies
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("peel index and peel/add") {
  CHECK(tvsum::peel_index(fig8(), xy(0, 0)) == 0);
  CHECK(tvsum::peel_index(fig8(), tvsum::boundary_coloring(fig8())) == 1);

  const Coloring f = xy(2, 4);  // 0-peelable: strand number 0 somewhere
  CHECK(tvsum::peel_index(fig8(), f) == 0);
  const auto f3 = tvsum::shift(fig8(), f, 3);
  CHECK(tvsum::peel_index(fig8(), f3) == 3);
  CHECK(tvsum::peel(fig8(), f3, 3) == f);
  CHECK(tvsum::add_colorings(fig8(), f, xy(0, 0)) == f);
  CHECK_THROWS_AS((void)tvsum::peel(fig8(), f3, 4), tvsum::InvalidInput);

  // Equivalence of the strand-number minimum with the subtraction test,
  // exhaustively for colors <= 10.
  for (const auto& c : tvsum::all_colorings(fig8(), 10)) {
    const long k = tvsum::peel_index(fig8(), c);
    long k_sub = 0;
    Coloring probe = c;
    for (;;) {
      Coloring next = probe;
      for (auto& u : next.colors) u -= 2;
      bool nonneg = true;
      for (long u : next.colors) nonneg = nonneg && u >= 0;
      if (nonneg && tvsum::is_admissible_coloring(fig8(), next)) {
        probe = next;
        ++k_sub;
      } else {
        break;
      }
    }
    CHECK(k == k_sub);
  }

  // Additivity of admissible colorings: sums stay admissible (colors <= 6).
  const auto small = tvsum::all_colorings(fig8(), 6);
  for (const auto& f1 : small)
    for (const auto& f2 : small) {
      CHECK(tvsum::is_admissible_coloring(fig8(), tvsum::add_colorings(fig8(), f1, f2)));
    }
}

TEST_CASE("normality") {
  CHECK(tvsum::is_normal(fig8(), tvsum::boundary_coloring(fig8())));
  CHECK(tvsum::is_normal(fig8(), xy(0, 0)));
  // (2,4) has column sums (8,6,4) at vertex 0: C1 != C2.
  CHECK_FALSE(tvsum::is_normal(fig8(), xy(2, 4)));
}

TEST_CASE("level sets of Q on 0-peelable colorings stabilize") {
  // Counts per Q-level among S_0, computed at two enumeration bounds; if the
  // level sets are finite the counts at low levels agree.
  const long level_cap = 30;
  std::map<long, long> at20, at40;
  for (const auto& c : tvsum::all_colorings(fig8(), 20)) {
    if (tvsum::peel_index(fig8(), c) != 0) continue;
    const long q = tvsum::q_value(fig8(), c);
    if (q <= level_cap) ++at20[q];
  }
  for (const auto& c : tvsum::all_colorings(fig8(), 40)) {
    if (tvsum::peel_index(fig8(), c) != 0) continue;
    const long q = tvsum::q_value(fig8(), c);
    if (q <= level_cap) ++at40[q];
  }
  CHECK(at20 == at40);
  CHECK(at20.at(0) == 1);  // only the empty surface at level 0
}

TEST_CASE("analyze record") {
  const auto inv = tvsum::analyze(fig8(), xy(2, 4));
  CHECK(inv.q == 12);
  CHECK(inv.peel == 0);
  CHECK_FALSE(inv.normal);
  CHECK(inv.max_color == 4);
  CHECK(inv.m_even == 4);
  REQUIRE(inv.euler_char.has_value());
  // Both vertices carry sorted sums (8,6,4): per-vertex term gcd(2,4)/2 +
  // 3 + 2 - 12 = -6; total 6 - 12 = -6.
  CHECK(*inv.euler_char == -6);
  CHECK(inv.vertices.size() == 2);
}
