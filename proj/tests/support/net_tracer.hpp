#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "tvsum/tet_labels.hpp"

// Independent circle counter for colored tetrahedral nets: lays the strands
// out explicitly and follows them, instead of using the gcd formula.
//
// The net is the dual 1-skeleton on the boundary sphere: four trivalent
// nodes (one per tetrahedron face) joined by six strand bundles (one per
// tetrahedron edge, carrying that edge's label). Per node the three bundle
// ends appear in the cyclic order induced by the outward orientation of the
// face; positions along a bundle end are indexed so that crossing arcs nest
// without intersections, and traversing a bundle reverses the index.
namespace testutil {

class NetTracer {
 public:
  explicit NetTracer(const tvsum::TetLabels& L) {
    // Bundle sizes by letter a,b,e,c,d,f -> indices 0..5 as in TetLabels.
    n_ = {L.a(), L.b(), L.e(), L.c(), L.d(), L.f()};
    // Nodes = tetrahedron faces, sides listed in outward cyclic order:
    //   opp0 {1,2,3}: f, c, d     opp1 {0,3,2}: e, c, b
    //   opp2 {0,1,3}: a, d, e     opp3 {0,1,2}: b, f, a
    // (letters index bundles: a=0, b=1, e=2, c=3, d=4, f=5)
    nodes_ = {{{5, 3, 4}, {2, 3, 1}, {0, 4, 2}, {1, 5, 0}}};
  }

  long circles() const {
    // Port = (bundle, node-end, position). Forward motion: cross the node via
    // the corner arc, then run along the next bundle to its far end. Each
    // circle appears as two cycles (one per direction).
    std::map<std::array<long, 3>, long> port_ids;
    std::vector<std::array<long, 3>> ports;
    for (long b = 0; b < 6; ++b) {
      for (int end = 0; end < 2; ++end) {
        for (long p = 1; p <= n_[static_cast<size_t>(b)]; ++p) {
          port_ids[{b, end, p}] = static_cast<long>(ports.size());
          ports.push_back({b, end, p});
        }
      }
    }
    if (ports.empty()) return 0;

    std::vector<long> next(ports.size(), -1);
    for (size_t id = 0; id < ports.size(); ++id) {
      const auto [bundle, end, pos] = std::tuple(ports[id][0], ports[id][1], ports[id][2]);
      const int node = node_of(bundle, end);
      const int side = side_of(node, bundle);
      // Within the node: sides s0,s1,s2 cyclic; side s_i holds x_{i-1} arcs
      // toward s_{i-1} first (positions 1..x_{i-1}) and x_i arcs toward
      // s_{i+1} last; nesting pairs position n_i+1-j with j.
      const auto sides = nodes_[static_cast<size_t>(node)];
      const std::array<long, 3> nn = {n_[static_cast<size_t>(sides[0])],
                                      n_[static_cast<size_t>(sides[1])],
                                      n_[static_cast<size_t>(sides[2])]};
      const auto x = [&](int i) {  // arcs at corner (s_i, s_{i+1})
        const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
        return (nn[static_cast<size_t>(i)] + nn[static_cast<size_t>(i1)] -
                nn[static_cast<size_t>(i2)]) / 2;
      };
      long out_side, out_pos;
      const long ni = nn[static_cast<size_t>(side)];
      if (pos > ni - x(side)) {
        // corner (side, side+1): arc j = n_i + 1 - pos, lands at position j
        out_side = (side + 1) % 3;
        out_pos = ni + 1 - pos;
      } else {
        // corner (side-1, side): arc j = pos, lands at position n_{i-1}+1-pos
        out_side = (side + 2) % 3;
        out_pos = nn[static_cast<size_t>(out_side)] + 1 - pos;
      }
      const long out_bundle = sides[static_cast<size_t>(out_side)];
      const int far_end = 1 - end_of(node, out_bundle);
      // Crossing the bundle reverses the position index.
      const long far_pos = n_[static_cast<size_t>(out_bundle)] + 1 - out_pos;
      next[id] = port_ids.at({out_bundle, far_end, far_pos});
    }

    std::vector<bool> seen(ports.size(), false);
    long cycles = 0;
    for (size_t i = 0; i < ports.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      long j = static_cast<long>(i);
      while (!seen[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = true;
        j = next[static_cast<size_t>(j)];
      }
    }
    if (cycles % 2 != 0) throw std::logic_error("tracer: odd direction-cycle count");
    return cycles / 2;
  }

 private:
  int node_of(long bundle, int end) const {
    int hit = 0;
    for (int node = 0; node < 4; ++node) {
      for (long s : nodes_[static_cast<size_t>(node)]) {
        if (s == bundle && hit++ == end) return node;
      }
    }
    throw std::logic_error("tracer: bundle end not found");
  }
  int end_of(int node, long bundle) const {
    // Which end (0 or 1) of `bundle` sits at `node`.
    int hit = 0;
    for (int nd = 0; nd < 4; ++nd) {
      for (long s : nodes_[static_cast<size_t>(nd)]) {
        if (s != bundle) continue;
        if (nd == node) return hit;
        ++hit;
      }
    }
    throw std::logic_error("tracer: node/bundle pair not found");
  }
  int side_of(int node, long bundle) const {
    for (int i = 0; i < 3; ++i) {
      if (nodes_[static_cast<size_t>(node)][static_cast<size_t>(i)] == bundle) return i;
    }
    throw std::logic_error("tracer: bundle not on node");
  }

  std::array<long, 6> n_;
  std::array<std::array<long, 3>, 4> nodes_;
};

inline long traced_circles(const tvsum::TetLabels& L) { return NetTracer(L).circles(); }

}  // namespace testutil
