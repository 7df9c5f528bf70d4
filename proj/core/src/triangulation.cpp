#include "tvsum/triangulation.hpp"

#include <json.hpp>

#include <numeric>

#include "tvsum/errors.hpp"

namespace tvsum {

namespace {

bool is_permutation4(const std::array<int, 4>& p) {
  std::array<bool, 4> seen{};
  for (int x : p) {
    if (x < 0 || x > 3 || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = true;
  }
  return true;
}

std::array<int, 4> inverse4(const std::array<int, 4>& p) {
  std::array<int, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[static_cast<size_t>(p[static_cast<size_t>(i)])] = i;
  return inv;
}

}  // namespace

Triangulation::Triangulation(std::vector<Tetrahedron> tets) : tets_(std::move(tets)) {
  if (tets_.empty()) throw InvalidInput("triangulation has no tetrahedra");
  const int n = tet_count();
  for (int t = 0; t < n; ++t) {
    for (int face = 0; face < 4; ++face) {
      const int nb = tets_[static_cast<size_t>(t)].neighbors[static_cast<size_t>(face)];
      const auto& g = tets_[static_cast<size_t>(t)].gluings[static_cast<size_t>(face)];
      if (nb < 0 || nb >= n) {
        throw InvalidInput("tet " + std::to_string(t) + " face " + std::to_string(face) +
                           ": dangling neighbor index " + std::to_string(nb));
      }
      if (!is_permutation4(g)) {
        throw InvalidInput("tet " + std::to_string(t) + " face " + std::to_string(face) +
                           ": gluing is not a vertex permutation");
      }
      const int image_face = g[static_cast<size_t>(face)];
      if (nb == t && image_face == face) {
        throw InvalidInput("tet " + std::to_string(t) + ": face glued to itself");
      }
      const auto& back = tets_[static_cast<size_t>(nb)];
      if (back.neighbors[static_cast<size_t>(image_face)] != t ||
          back.gluings[static_cast<size_t>(image_face)] != inverse4(g)) {
        throw InvalidInput("non-involutive gluing at tet " + std::to_string(t) + " face " +
                           std::to_string(face));
      }
    }
  }
}

Triangulation Triangulation::parse(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed triangulation JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("tetrahedra") || !j["tetrahedra"].is_array()) {
    throw InvalidInput("triangulation JSON needs a \"tetrahedra\" array");
  }
  std::vector<Tetrahedron> tets;
  for (const auto& jt : j["tetrahedra"]) {
    Tetrahedron t{};
    if (!jt.contains("neighbors") || !jt.contains("gluings") || jt["neighbors"].size() != 4 ||
        jt["gluings"].size() != 4) {
      throw InvalidInput("each tetrahedron needs 4 neighbors and 4 gluings");
    }
    for (int i = 0; i < 4; ++i) {
      t.neighbors[static_cast<size_t>(i)] = jt["neighbors"][static_cast<size_t>(i)].get<int>();
      const auto& jg = jt["gluings"][static_cast<size_t>(i)];
      if (jg.size() != 4) throw InvalidInput("gluing permutation needs 4 entries");
      for (int k = 0; k < 4; ++k) {
        t.gluings[static_cast<size_t>(i)][static_cast<size_t>(k)] = jg[static_cast<size_t>(k)].get<int>();
      }
    }
    tets.push_back(t);
  }
  return Triangulation(std::move(tets));
}

int edge_index(int u, int v) {
  if (u > v) std::swap(u, v);
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  if (u < 0 || v > 3 || u == v) throw InvalidInput("bad edge vertices");
  return table[u][v];
}

std::array<int, 2> edge_vertices(int index) {
  static constexpr std::array<std::array<int, 2>, 6> table = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return table.at(static_cast<size_t>(index));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

EdgeClasses edge_classes(const Triangulation& tri) {
  const int n = tri.tet_count();
  UnionFind uf(static_cast<size_t>(6 * n));
  for (int t = 0; t < n; ++t) {
    const auto& tet = tri.tetrahedra()[static_cast<size_t>(t)];
    for (int face = 0; face < 4; ++face) {
      const int nb = tet.neighbors[static_cast<size_t>(face)];
      const auto& g = tet.gluings[static_cast<size_t>(face)];
      // The three edges of this face map across the gluing.
      std::array<int, 3> fv{};
      int w = 0;
      for (int v = 0; v < 4; ++v) {
        if (v != face) fv[static_cast<size_t>(w++)] = v;
      }
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          const int u = fv[static_cast<size_t>(i)], v = fv[static_cast<size_t>(j)];
          uf.unite(6 * t + edge_index(u, v),
                   6 * nb + edge_index(g[static_cast<size_t>(u)], g[static_cast<size_t>(v)]));
        }
      }
    }
  }
  EdgeClasses out;
  out.class_of.assign(static_cast<size_t>(6 * n), -1);
  for (int slot = 0; slot < 6 * n; ++slot) {
    const int root = uf.find(slot);
    if (out.class_of[static_cast<size_t>(root)] < 0) {
      out.class_of[static_cast<size_t>(root)] = static_cast<int>(out.members.size());
      out.members.emplace_back();
    }
    const int cls = out.class_of[static_cast<size_t>(root)];
    out.class_of[static_cast<size_t>(slot)] = cls;
    out.members[static_cast<size_t>(cls)].push_back(slot);
  }
  return out;
}

}  // namespace tvsum
