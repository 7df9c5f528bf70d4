#include "tvsum/spine.hpp"

#include <json.hpp>

#include <algorithm>

#include "tvsum/errors.hpp"

namespace tvsum {

bool AbstractSpine::is_augmented() const {
  for (const auto& f : faces) {
    if (f.forced.has_value() || f.chi == 0) return true;
  }
  for (const auto& e : edges) {
    if (e.chi == 0) return true;
  }
  return false;
}

namespace {

std::array<int, 3> sorted3(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

void check_incidence(const AbstractSpine& s) {
  std::vector<std::array<int, 3>> edge_triples;
  edge_triples.reserve(s.edges.size());
  for (const auto& e : s.edges) edge_triples.push_back(sorted3(e.faces));
  for (size_t vi = 0; vi < s.vertices.size(); ++vi) {
    for (const auto& corner : s.vertices[vi].corner_triples()) {
      const auto key = sorted3(corner);
      if (std::find(edge_triples.begin(), edge_triples.end(), key) == edge_triples.end()) {
        throw InvalidInput("vertex " + std::to_string(vi) +
                           " has a corner triple matching no edge");
      }
    }
  }
}

}  // namespace

AbstractSpine dual_spine(const Triangulation& tri) {
  const auto classes = edge_classes(tri);
  AbstractSpine s;
  s.faces.assign(static_cast<size_t>(classes.count()), SpineFace{1, std::nullopt});

  const auto cls = [&](int tet, int u, int v) {
    return classes.class_of[static_cast<size_t>(6 * tet + edge_index(u, v))];
  };
  for (int t = 0; t < tri.tet_count(); ++t) {
    SpineVertex v{};
    v.faces = {cls(t, 0, 1), cls(t, 0, 2), cls(t, 0, 3),
               cls(t, 2, 3), cls(t, 1, 3), cls(t, 1, 2)};
    s.vertices.push_back(v);
  }
  // One spine edge per glued face pair; triple = classes of the triangle's
  // three edges, in lex order of the face's vertex pairs.
  for (int t = 0; t < tri.tet_count(); ++t) {
    const auto& tet = tri.tetrahedra()[static_cast<size_t>(t)];
    for (int face = 0; face < 4; ++face) {
      const int nb = tet.neighbors[static_cast<size_t>(face)];
      const int nb_face = tet.gluings[static_cast<size_t>(face)][static_cast<size_t>(face)];
      if (std::pair(nb, nb_face) < std::pair(t, face)) continue;  // partner emits it
      std::array<int, 3> fv{};
      int w = 0;
      for (int v = 0; v < 4; ++v) {
        if (v != face) fv[static_cast<size_t>(w++)] = v;
      }
      SpineEdge e;
      e.faces = {cls(t, fv[0], fv[1]), cls(t, fv[0], fv[2]), cls(t, fv[1], fv[2])};
      e.chi = 1;
      s.edges.push_back(e);
    }
  }
  check_incidence(s);
  return s;
}

long euler_characteristic(const AbstractSpine& spine) {
  long disks = 0;
  for (const auto& f : spine.faces) {
    if (f.chi == 1) ++disks;
  }
  return disks - spine.vertex_count();
}

AbstractSpine load_spine(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed spine JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j.contains("faces")) {
    throw InvalidInput("spine JSON needs vertices, edges and faces arrays");
  }
  AbstractSpine s;
  for (const auto& jf : j["faces"]) {
    SpineFace f;
    f.chi = jf.at("chi").get<int>();
    if (f.chi != 0 && f.chi != 1) throw InvalidInput("face chi weight outside {0,1}");
    if (jf.contains("forced") && !jf["forced"].is_null()) {
      f.forced = jf["forced"].get<int>();
      if (*f.forced != 1) throw InvalidInput("forced face color must be 1");
      if (f.chi != 0) throw InvalidInput("forced (annular) faces must have chi 0");
    } else if (f.chi == 0) {
      throw InvalidInput("chi-0 faces must carry the forced color 1");
    }
    s.faces.push_back(f);
  }
  const int nf = s.face_count();
  const auto check_face = [&](int id) {
    if (id < 0 || id >= nf) throw InvalidInput("face id out of range: " + std::to_string(id));
  };
  for (const auto& jv : j["vertices"]) {
    const auto& arr = jv.at("faces");
    if (arr.size() != 6) throw InvalidInput("spine vertex needs 6 face slots");
    SpineVertex v{};
    for (int i = 0; i < 6; ++i) {
      v.faces[static_cast<size_t>(i)] = arr[static_cast<size_t>(i)].get<int>();
      check_face(v.faces[static_cast<size_t>(i)]);
    }
    s.vertices.push_back(v);
  }
  for (const auto& je : j["edges"]) {
    const auto& arr = je.at("faces");
    if (arr.size() != 3) throw InvalidInput("spine edge needs 3 faces");
    SpineEdge e;
    for (int i = 0; i < 3; ++i) {
      e.faces[static_cast<size_t>(i)] = arr[static_cast<size_t>(i)].get<int>();
      check_face(e.faces[static_cast<size_t>(i)]);
    }
    e.chi = je.at("chi").get<int>();
    if (e.chi != 0 && e.chi != 1) throw InvalidInput("edge chi weight outside {0,1}");
    s.edges.push_back(e);
  }
  if (s.vertices.empty()) throw InvalidInput("spine has no vertices");
  check_incidence(s);
  return s;
}

std::string serialize_spine(const AbstractSpine& spine) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : spine.vertices) {
    j["vertices"].push_back({{"faces", v.faces}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : spine.edges) {
    j["edges"].push_back({{"faces", e.faces}, {"chi", e.chi}});
  }
  j["faces"] = nlohmann::ordered_json::array();
  for (const auto& f : spine.faces) {
    nlohmann::ordered_json jf;
    jf["chi"] = f.chi;
    if (f.forced.has_value()) {
      jf["forced"] = *f.forced;
    } else {
      jf["forced"] = nullptr;
    }
    j["faces"].push_back(jf);
  }
  return j.dump(2) + "\n";
}

}  // namespace tvsum
