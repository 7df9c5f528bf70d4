#include "tvsum/coloring.hpp"

#include <algorithm>

#include "tvsum/errors.hpp"

namespace tvsum {

long Coloring::max_color() const {
  long m = 0;
  for (long u : colors) m = std::max(m, u);
  return m;
}

long Coloring::m_even() const {
  const long m = max_color();
  return m + (m % 2);
}

namespace {

void require_matching(const AbstractSpine& spine, const Coloring& c) {
  if (c.colors.size() != spine.faces.size()) {
    throw InvalidInput("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                       std::to_string(spine.faces.size()) + " faces");
  }
}

}  // namespace

bool is_admissible_coloring(const AbstractSpine& spine, const Coloring& coloring) {
  require_matching(spine, coloring);
  for (size_t i = 0; i < spine.faces.size(); ++i) {
    if (coloring.colors[i] < 0) return false;
    const auto& forced = spine.faces[i].forced;
    if (forced.has_value() && coloring.colors[i] != *forced) return false;
  }
  for (const auto& e : spine.edges) {
    if (!is_admissible(coloring.colors[static_cast<size_t>(e.faces[0])],
                       coloring.colors[static_cast<size_t>(e.faces[1])],
                       coloring.colors[static_cast<size_t>(e.faces[2])])) {
      return false;
    }
  }
  return true;
}

Coloring boundary_coloring(const AbstractSpine& spine) {
  if (spine.is_augmented()) {
    throw InvalidInput("boundary coloring undefined on augmented spines (forced faces carry 1)");
  }
  Coloring c{std::vector<long>(spine.faces.size(), 2)};
  return c;
}

TetLabels vertex_labeling(const AbstractSpine& spine, const Coloring& coloring, int vertex) {
  require_matching(spine, coloring);
  if (vertex < 0 || vertex >= spine.vertex_count()) throw InvalidInput("vertex out of range");
  const auto& s = spine.vertices[static_cast<size_t>(vertex)].faces;
  const auto u = [&](int slot) { return coloring.colors[static_cast<size_t>(s[static_cast<size_t>(slot)])]; };
  return {u(0), u(1), u(2), u(3), u(4), u(5)};
}

Coloring add_colorings(const AbstractSpine& spine, const Coloring& x, const Coloring& y) {
  if (spine.is_augmented()) throw InvalidInput("cannot add colorings on an augmented spine");
  require_matching(spine, x);
  require_matching(spine, y);
  Coloring out{std::vector<long>(x.colors.size())};
  for (size_t i = 0; i < x.colors.size(); ++i) out.colors[i] = x.colors[i] + y.colors[i];
  return out;
}

Coloring shift(const AbstractSpine& spine, const Coloring& coloring, long k) {
  require_matching(spine, coloring);
  if (k < 0) throw InvalidInput("shift k must be nonnegative");
  Coloring out = coloring;
  for (size_t i = 0; i < out.colors.size(); ++i) {
    if (!spine.faces[i].forced.has_value()) out.colors[i] += 2 * k;
  }
  return out;
}

Coloring peel(const AbstractSpine& spine, const Coloring& coloring, long k) {
  require_matching(spine, coloring);
  if (k < 0) throw InvalidInput("peel k must be nonnegative");
  Coloring out = coloring;
  for (size_t i = 0; i < out.colors.size(); ++i) {
    if (!spine.faces[i].forced.has_value()) out.colors[i] -= 2 * k;
  }
  if (!is_admissible_coloring(spine, out)) {
    throw InvalidInput("peel by " + std::to_string(k) + " exceeds the peel index");
  }
  return out;
}

namespace {

struct Enumerator {
  const AbstractSpine& spine;
  long bound;
  const std::function<void(const Coloring&)>& yield;
  Coloring current;
  // Edges become checkable once their last (highest-id) free... all faces are
  // assigned in id order, so an edge is complete when its max face id is set.
  std::vector<std::vector<int>> complete_at;

  Enumerator(const AbstractSpine& s, long n, const std::function<void(const Coloring&)>& y)
      : spine(s), bound(n), yield(y) {
    current.colors.assign(s.faces.size(), 0);
    complete_at.assign(s.faces.size(), {});
    for (size_t ei = 0; ei < s.edges.size(); ++ei) {
      int mx = 0;
      for (int f : s.edges[ei].faces) mx = std::max(mx, f);
      complete_at[static_cast<size_t>(mx)].push_back(static_cast<int>(ei));
    }
  }

  bool edges_ok(size_t face) const {
    for (int ei : complete_at[face]) {
      const auto& e = spine.edges[static_cast<size_t>(ei)];
      if (!is_admissible(current.colors[static_cast<size_t>(e.faces[0])],
                         current.colors[static_cast<size_t>(e.faces[1])],
                         current.colors[static_cast<size_t>(e.faces[2])])) {
        return false;
      }
    }
    return true;
  }

  void run(size_t face) {
    if (face == spine.faces.size()) {
      yield(current);
      return;
    }
    const auto& forced = spine.faces[face].forced;
    if (forced.has_value() && *forced > bound) return;  // bound applies to every u_f
    const long lo = forced.value_or(0), hi = forced.value_or(bound);
    for (long u = lo; u <= hi; ++u) {
      current.colors[face] = u;
      if (edges_ok(face)) run(face + 1);
    }
    current.colors[face] = 0;
  }
};

}  // namespace

void enumerate_colorings(const AbstractSpine& spine, long max_color,
                         const std::function<void(const Coloring&)>& yield) {
  if (max_color < 0) throw InvalidInput("max color must be nonnegative");
  Enumerator en(spine, max_color, yield);
  en.run(0);
}

std::vector<Coloring> all_colorings(const AbstractSpine& spine, long max_color) {
  std::vector<Coloring> out;
  enumerate_colorings(spine, max_color, [&](const Coloring& c) { out.push_back(c); });
  return out;
}

}  // namespace tvsum
