#pragma once

#include <functional>
#include <vector>

#include "tvsum/spine.hpp"
#include "tvsum/tet_labels.hpp"

namespace tvsum {

/// Assignment of a nonnegative color u_f to each spine face, indexed by face
/// id. Forced faces carry exactly their forced color.
struct Coloring {
  std::vector<long> colors;

  long max_color() const;
  /// Least even number >= max color (0 for the zero coloring).
  long m_even() const;

  friend bool operator==(const Coloring& x, const Coloring& y) { return x.colors == y.colors; }
  friend bool operator<(const Coloring& x, const Coloring& y) { return x.colors < y.colors; }
};

/// Every edge triple admissible and all forced colors respected.
bool is_admissible_coloring(const AbstractSpine& spine, const Coloring& coloring);

/// The all-2 coloring (boundary surface). Rejects augmented spines: forced
/// faces cannot carry 2.
Coloring boundary_coloring(const AbstractSpine& spine);

/// The 6 colors at a vertex in positions (a, b, e, c, d, f).
TetLabels vertex_labeling(const AbstractSpine& spine, const Coloring& coloring, int vertex);

/// Facewise sum. Unaugmented spines only (sums of two augmented colorings
/// break the forced colors).
Coloring add_colorings(const AbstractSpine& spine, const Coloring& x, const Coloring& y);

/// Subtracts 2k from every non-forced face; requires peel_index >= k.
Coloring peel(const AbstractSpine& spine, const Coloring& coloring, long k);

/// Adds 2k to every non-forced face (the k-fold boundary shift).
Coloring shift(const AbstractSpine& spine, const Coloring& coloring, long k);

/// Streams the admissible colorings with every free color <= max_color, each
/// exactly once, in lexicographic order. DFS with per-edge pruning.
void enumerate_colorings(const AbstractSpine& spine, long max_color,
                         const std::function<void(const Coloring&)>& yield);

std::vector<Coloring> all_colorings(const AbstractSpine& spine, long max_color);

}  // namespace tvsum
