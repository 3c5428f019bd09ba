#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include <json.hpp>

#include "braids/bkl_band.hpp"
#include "braids/inverse_braid.hpp"
#include "braids/presentations.hpp"
#include "braids/singular_monoid.hpp"

namespace braids {

namespace {

[[noreturn]] void fail(std::string const& msg) { throw std::invalid_argument(msg); }

bool numeric(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(),
                                    [](char c) { return c >= '0' && c <= '9'; });
}

std::string prefixed(std::string_view prefix, std::string_view id) {
  return std::string(prefix) + (numeric(id) ? "" : "_") + std::string(id);
}

std::string tau_label(std::string_view id) { return prefixed("t", id); }
std::string x_label(std::string_view id) { return prefixed("x", id); }
std::string eps_label(int v) { return "e" + std::to_string(v); }

// A dart is edge index * 2 + d; d = 0 runs u -> v, d = 1 runs v -> u.
struct Darts {
  PlanarGraph const* g = nullptr;
  // rotation positions as edge indices, clockwise
  std::map<int, std::vector<int>> rot;

  int tail(int dart) const {
    auto const& e = g->edges[static_cast<std::size_t>(dart / 2)];
    return dart % 2 == 0 ? e.u : e.v;
  }
  int head(int dart) const {
    auto const& e = g->edges[static_cast<std::size_t>(dart / 2)];
    return dart % 2 == 0 ? e.v : e.u;
  }
  int leaving(int edge, int v) const {
    return g->edges[static_cast<std::size_t>(edge)].u == v ? edge * 2 : edge * 2 + 1;
  }
  // arriving along dart, leave along the clockwise successor at its head
  int next(int dart) const {
    int v = head(dart);
    auto const& r = rot.at(v);
    auto it = std::find(r.begin(), r.end(), dart / 2);
    auto pos = static_cast<std::size_t>(it - r.begin());
    int e = r[(pos + 1) % r.size()];
    return leaving(e, v);
  }
};

// rotation restricted to `keep` edges (all when empty)
Darts make_darts(PlanarGraph const& g, std::vector<char> const& keep = {}) {
  Darts d;
  d.g = &g;
  for (int v : g.vertices) {
    auto& r = d.rot[v];
    for (auto const& id : g.rotation.at(v)) {
      int e = g.edge_index(id);
      if (keep.empty() || keep[static_cast<std::size_t>(e)]) {
        r.push_back(e);
      }
    }
  }
  return d;
}

std::vector<std::vector<int>> dart_orbits(Darts const& d, int edge_count) {
  std::vector<char> seen(static_cast<std::size_t>(2 * edge_count), 0);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < 2 * edge_count; ++start) {
    if (seen[static_cast<std::size_t>(start)]) {
      continue;
    }
    std::vector<int> orbit;
    int dart = start;
    do {
      seen[static_cast<std::size_t>(dart)] = 1;
      orbit.push_back(dart);
      dart = d.next(dart);
    } while (dart != start);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool cyclic_match(std::vector<std::string> const& a, std::vector<std::string> const& b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::equal(a.begin(), a.end(), b.begin() + static_cast<std::ptrdiff_t>(k),
                   b.end()) &&
        std::equal(a.begin() + static_cast<std::ptrdiff_t>(a.size() - k), a.end(),
                   b.begin())) {
      return true;
    }
  }
  return false;
}

// Faces as dart cycles, outer face (when known) first, each rotated to
// start at its earliest edge.
std::vector<std::vector<int>> face_darts(PlanarGraph const& g) {
  auto d = make_darts(g);
  auto orbits = dart_orbits(d, static_cast<int>(g.edges.size()));
  for (auto& o : orbits) {
    auto best = std::min_element(o.begin(), o.end());
    std::rotate(o.begin(), best, o.end());
  }
  if (!g.outer_face.empty()) {
    auto ids = [&](std::vector<int> const& o) {
      std::vector<std::string> out;
      for (int dart : o) {
        out.push_back(g.edges[static_cast<std::size_t>(dart / 2)].id);
      }
      return out;
    };
    auto it = std::find_if(orbits.begin(), orbits.end(), [&](auto const& o) {
      return cyclic_match(ids(o), g.outer_face);
    });
    if (it == orbits.end()) {
      fail("outer_face does not match any face of the rotation system");
    }
    std::rotate(orbits.begin(), it, it + 1);
  }
  return orbits;
}

std::size_t outer_index_or_throw(PlanarGraph const& g, std::size_t face_count) {
  if (g.outer_face.empty() && face_count > 1) {
    fail("graph has bounded faces but no outer_face");
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// PlanarGraph

int PlanarGraph::edge_index(std::string_view id) const {
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].id == id) {
      return static_cast<int>(k);
    }
  }
  fail("unknown edge '" + std::string(id) + "'");
}

std::vector<std::string> PlanarGraph::incident(int v) const {
  std::vector<std::string> out;
  for (auto const& e : edges) {
    if (e.u == v || e.v == v) {
      out.push_back(e.id);
    }
  }
  return out;
}

int PlanarGraph::degree(int v) const { return static_cast<int>(incident(v).size()); }

bool PlanarGraph::adjacent_to(std::string_view edge, int v) const {
  auto const& e = edges[static_cast<std::size_t>(edge_index(edge))];
  return e.u == v || e.v == v;
}

void PlanarGraph::validate() const {
  if (vertices.empty()) {
    fail("graph has no vertices");
  }
  std::set<int> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) {
    fail("duplicate vertex id");
  }
  std::set<std::string> ids;
  std::set<std::pair<int, int>> ends;
  for (auto const& e : edges) {
    if (e.id.empty() || !ids.insert(e.id).second) {
      fail("empty or duplicate edge id '" + e.id + "'");
    }
    if (!vs.count(e.u) || !vs.count(e.v)) {
      fail("edge " + e.id + " has an unknown endpoint");
    }
    if (e.u == e.v) {
      fail("edge " + e.id + " is a loop");
    }
    if (!ends.insert(std::minmax(e.u, e.v)).second) {
      fail("edge " + e.id + " duplicates another edge");
    }
  }
  // connected
  std::map<int, int> parent;
  for (int v : vertices) {
    parent[v] = v;
  }
  auto find = [&](int v) {
    while (parent[v] != v) {
      v = parent[v] = parent[parent[v]];
    }
    return v;
  };
  for (auto const& e : edges) {
    parent[find(e.u)] = find(e.v);
  }
  for (int v : vertices) {
    if (find(v) != find(vertices.front())) {
      fail("graph is not connected");
    }
  }
  for (int v : vertices) {
    auto it = rotation.find(v);
    auto inc = incident(v);
    if (it == rotation.end()) {
      fail("vertex " + std::to_string(v) + " has no rotation");
    }
    auto r = it->second;
    std::sort(r.begin(), r.end());
    std::sort(inc.begin(), inc.end());
    if (r != inc) {
      fail("rotation at vertex " + std::to_string(v)
           + " does not list exactly its incident edges");
    }
  }
  for (auto const& [v, r] : rotation) {
    if (!vs.count(v)) {
      fail("rotation given for unknown vertex " + std::to_string(v));
    }
  }
  if (!edges.empty()) {
    auto d = make_darts(*this);
    auto faces = dart_orbits(d, static_cast<int>(edges.size()));
    long euler = static_cast<long>(vertices.size()) - static_cast<long>(edges.size())
                 + static_cast<long>(faces.size());
    if (euler != 2) {
      fail("rotation system is not planar (V - E + F = " + std::to_string(euler) + ")");
    }
    face_darts(*this);  // checks outer_face
  }
  for (int v : distinguished) {
    if (!vs.count(v)) {
      fail("distinguished vertex " + std::to_string(v) + " is unknown");
    }
  }
  for (auto const& [id, ht] : orientation) {
    auto const& e = edges[static_cast<std::size_t>(edge_index(id))];
    if (std::minmax(ht.first, ht.second) != std::minmax(e.u, e.v)) {
      fail("orientation of " + id + " does not match its endpoints");
    }
  }
}

PlanarGraph PlanarGraph::lower_arcs(int n,
                                    std::vector<std::pair<int, int>> const& arcs) {
  std::vector<Arc> drawn;
  for (auto const& [s, t] : arcs) {
    drawn.push_back({s, t, false});
  }
  return two_page(n, drawn);
}

PlanarGraph PlanarGraph::two_page(int n, std::vector<Arc> const& arcs) {
  if (n < 1) {
    fail("two_page needs n >= 1");
  }
  PlanarGraph g;
  for (int v = 1; v <= n; ++v) {
    g.vertices.push_back(v);
  }
  std::vector<bool> upper;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    auto [s, t] = std::minmax(arcs[k].s, arcs[k].t);
    if (s < 1 || t > n || s == t) {
      fail("arc (" + std::to_string(s) + "," + std::to_string(t) + ") out of range");
    }
    g.edges.push_back({std::to_string(k + 1), s, t});
    upper.push_back(arcs[k].upper);
  }
  for (std::size_t a = 0; a < g.edges.size(); ++a) {
    for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
      auto const& x = g.edges[a];
      auto const& y = g.edges[b];
      bool cross = (x.u < y.u && y.u < x.v && x.v < y.v)
                   || (y.u < x.u && x.u < y.v && y.v < x.v);
      if (cross && upper[a] == upper[b]) {
        fail("arcs " + x.id + " and " + y.id + " cross");
      }
    }
  }
  // Clockwise from east: lower right arcs nearest first, lower left arcs
  // farthest first, upper left arcs nearest first, upper right arcs farthest
  // first.
  for (int v = 1; v <= n; ++v) {
    std::vector<std::pair<int, std::string>> quarter[4];
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      auto const& e = g.edges[k];
      if (e.u == v) {
        quarter[upper[k] ? 3 : 0].emplace_back(e.v, e.id);
      } else if (e.v == v) {
        quarter[upper[k] ? 2 : 1].emplace_back(e.u, e.id);
      }
    }
    std::sort(quarter[0].begin(), quarter[0].end());
    std::sort(quarter[1].begin(), quarter[1].end());
    std::sort(quarter[2].rbegin(), quarter[2].rend());
    std::sort(quarter[3].rbegin(), quarter[3].rend());
    auto& r = g.rotation[v];
    for (auto const& part : quarter) {
      for (auto const& [w, id] : part) {
        r.push_back(id);
      }
    }
  }
  g.validate();
  // The unbounded face touches the leftmost vertex with an edge from the
  // west: it is entered along the last lower arc there, or along the last
  // rotation edge when there is no lower arc.
  for (int v = 1; v <= n; ++v) {
    auto const& r = g.rotation[v];
    if (r.empty()) {
      continue;
    }
    auto lower = static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [&](auto const& id) {
      return !upper[static_cast<std::size_t>(g.edge_index(id))];
    }));
    auto const& in = lower > 0 ? r[lower - 1] : r.back();
    auto d = make_darts(g);
    int arrive = d.leaving(g.edge_index(in), v) ^ 1;
    int dart = arrive;
    std::vector<int> orbit;
    do {
      orbit.push_back(dart);
      dart = d.next(dart);
    } while (dart != arrive);
    auto best = std::min_element(orbit.begin(), orbit.end());
    std::rotate(orbit.begin(), best, orbit.end());
    for (int x : orbit) {
      g.outer_face.push_back(g.edges[static_cast<std::size_t>(x / 2)].id);
    }
    break;
  }
  return g;
}

// ---------------------------------------------------------------------------
// JSON

PlanarGraph parse_graph_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    fail(std::string("graph file: ") + e.what());
  }
  auto id_of = [](json const& x) -> std::string {
    if (x.is_string()) {
      return x.get<std::string>();
    }
    if (x.is_number_integer()) {
      return std::to_string(x.get<long>());
    }
    fail("edge ids must be strings or integers");
  };
  auto vertex_of = [](json const& x) -> int {
    if (x.is_number_integer()) {
      return x.get<int>();
    }
    if (x.is_string()) {
      auto s = x.get<std::string>();
      int v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec == std::errc{} && ptr == s.data() + s.size()) {
        return v;
      }
    }
    fail("vertex ids must be integers");
  };
  PlanarGraph g;
  try {
    for (auto const& v : j.at("vertices")) {
      g.vertices.push_back(vertex_of(v));
    }
    for (auto const& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) {
        fail("edges entries must be [id, u, v]");
      }
      g.edges.push_back({id_of(e[0]), vertex_of(e[1]), vertex_of(e[2])});
    }
    if (j.contains("rotation")) {
      for (auto const& [v, ids] : j.at("rotation").items()) {
        auto& r = g.rotation[vertex_of(json(v))];
        for (auto const& id : ids) {
          r.push_back(id_of(id));
        }
      }
    }
    if (j.contains("outer_face")) {
      for (auto const& id : j.at("outer_face")) {
        g.outer_face.push_back(id_of(id));
      }
    }
    if (j.contains("distinguished")) {
      for (auto const& v : j.at("distinguished")) {
        g.distinguished.push_back(vertex_of(v));
      }
    }
    if (j.contains("orientation")) {
      for (auto const& [id, ht] : j.at("orientation").items()) {
        if (!ht.is_array() || ht.size() != 2) {
          fail("orientation entries must be [tail, head]");
        }
        g.orientation[id] = {vertex_of(ht[0]), vertex_of(ht[1])};
      }
    }
  } catch (json::exception const& e) {
    fail(std::string("graph file: ") + e.what());
  }
  // vertices of degree <= 2 have only one cyclic order
  for (int v : g.vertices) {
    if (!g.rotation.count(v) && g.degree(v) <= 2) {
      g.rotation[v] = g.incident(v);
    }
  }
  g.validate();
  return g;
}

std::string to_json(PlanarGraph const& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices;
  j["edges"] = nlohmann::ordered_json::array();
  for (auto const& e : g.edges) {
    j["edges"].push_back({e.id, e.u, e.v});
  }
  j["rotation"] = nlohmann::ordered_json::object();
  for (auto const& [v, r] : g.rotation) {
    j["rotation"][std::to_string(v)] = r;
  }
  j["outer_face"] = g.outer_face;
  j["distinguished"] = g.distinguished;
  j["orientation"] = nlohmann::ordered_json::object();
  for (auto const& [id, ht] : g.orientation) {
    j["orientation"][id] = {ht.first, ht.second};
  }
  return j.dump(2);
}

std::string edge_label(std::string_view id) {
  return numeric(id) ? "s" + std::string(id) : std::string(id);
}

// ---------------------------------------------------------------------------
// Faces, pseudocycles, tree circuits

std::vector<std::vector<std::string>> graph_faces(PlanarGraph const& g) {
  g.validate();
  std::vector<std::vector<std::string>> out;
  if (g.edges.empty()) {
    return out;
  }
  for (auto const& o : face_darts(g)) {
    std::vector<std::string> face;
    for (int dart : o) {
      face.push_back(g.edges[static_cast<std::size_t>(dart / 2)].id);
    }
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<std::vector<std::string>> graph_pseudocycles(PlanarGraph const& g) {
  auto faces = graph_faces(g);
  if (faces.size() <= 1) {
    return {};
  }
  outer_index_or_throw(g, faces.size());
  faces.erase(faces.begin());
  return faces;
}

std::vector<std::string> tree_circuit(PlanarGraph const& g,
                                      std::vector<std::string> const& tree,
                                      std::string_view start, int x, int y) {
  g.validate();
  std::vector<char> keep(g.edges.size(), 0);
  for (auto const& id : tree) {
    auto& k = keep[static_cast<std::size_t>(g.edge_index(id))];
    if (k) {
      fail("tree lists edge " + id + " twice");
    }
    k = 1;
  }
  if (tree.size() + 1 != g.vertices.size()) {
    fail("not a maximal tree: expected " + std::to_string(g.vertices.size() - 1)
         + " edges");
  }
  std::map<int, int> parent;
  for (int v : g.vertices) {
    parent[v] = v;
  }
  auto find = [&](int v) {
    while (parent[v] != v) {
      v = parent[v] = parent[parent[v]];
    }
    return v;
  };
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (!keep[k]) {
      continue;
    }
    int a = find(g.edges[k].u);
    int b = find(g.edges[k].v);
    if (a == b) {
      fail("not a maximal tree: edge " + g.edges[k].id + " closes a cycle");
    }
    parent[a] = b;
  }
  int s = g.edge_index(start);
  if (!keep[static_cast<std::size_t>(s)]) {
    fail("start edge " + std::string(start) + " is not in the tree");
  }
  auto const& se = g.edges[static_cast<std::size_t>(s)];
  if (std::minmax(x, y) != std::minmax(se.u, se.v)) {
    fail("start edge " + std::string(start) + " does not join the given vertices");
  }
  auto d = make_darts(g, keep);
  int first = d.leaving(s, x);
  std::vector<std::string> out;
  int dart = first;
  do {
    out.push_back(g.edges[static_cast<std::size_t>(dart / 2)].id);
    dart = d.next(dart);
  } while (dart != first);
  return out;
}

// ---------------------------------------------------------------------------
// Sergiescu presentations

GraphVariant parse_variant(std::string_view name) {
  static std::pair<std::string_view, GraphVariant> const table[] = {
      {"plane", GraphVariant::plane},
      {"annulus", GraphVariant::annulus},
      {"sphere", GraphVariant::sphere},
      {"singular-plane", GraphVariant::singular_plane},
      {"singular-annulus", GraphVariant::singular_annulus},
      {"inverse-plane", GraphVariant::inverse_plane},
  };
  for (auto const& [n, v] : table) {
    if (n == name) {
      return v;
    }
  }
  fail("unknown graph variant '" + std::string(name) + "'");
}

std::string_view variant_name(GraphVariant v) {
  switch (v) {
    case GraphVariant::plane: return "plane";
    case GraphVariant::annulus: return "annulus";
    case GraphVariant::sphere: return "sphere";
    case GraphVariant::singular_plane: return "singular-plane";
    case GraphVariant::singular_annulus: return "singular-annulus";
    case GraphVariant::inverse_plane: return "inverse-plane";
  }
  return "?";
}

namespace {

struct Builder {
  PlanarGraph const& g;
  Presentation& p;
  int puncture = 0;  // 0 when there is none

  bool at_puncture(int e) const {
    auto const& x = g.edges[static_cast<std::size_t>(e)];
    return puncture != 0 && (x.u == puncture || x.v == puncture);
  }
  std::string const& id(int e) const { return g.edges[static_cast<std::size_t>(e)].id; }
  // sigma_a, or tau_b for edges at the puncture
  PLetter s(int e, int sign = 1) const {
    return {p.gen(at_puncture(e) ? tau_label(id(e)) : edge_label(id(e))), sign};
  }
  PLetter x(int e) const { return {p.gen(x_label(id(e))), 1}; }

  bool disjoint(int a, int b) const {
    auto const& x = g.edges[static_cast<std::size_t>(a)];
    auto const& y = g.edges[static_cast<std::size_t>(b)];
    return x.u != y.u && x.u != y.v && x.v != y.u && x.v != y.v;
  }
  int edge_count() const { return static_cast<int>(g.edges.size()); }

  void rel(PWord l, PWord r, char const* kind) { p.relate(std::move(l), std::move(r), kind); }

  // clockwise triples (a, b, c) at every vertex, all three rotations
  template <class F>
  void for_each_nodal(F f) const {
    for (int v : g.vertices) {
      std::vector<int> r;
      for (auto const& eid : g.rotation.at(v)) {
        r.push_back(g.edge_index(eid));
      }
      std::size_t k = r.size();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          for (std::size_t l = j + 1; l < k; ++l) {
            f(v, r[i], r[j], r[l]);
            f(v, r[j], r[l], r[i]);
            f(v, r[l], r[i], r[j]);
          }
        }
      }
    }
  }

  struct Face {
    std::size_t index = 0;  // into walks
    std::vector<int> edges;
  };

  // dart orbits, outer face first when known
  std::vector<std::vector<int>> walks = g.edges.empty() ? std::vector<std::vector<int>>{}
                                                        : face_darts(g);

  std::vector<Face> faces(bool bounded_only) const {
    std::vector<Face> out;
    if (bounded_only && walks.size() > 1) {
      outer_index_or_throw(g, walks.size());
    }
    for (std::size_t f = bounded_only ? 1 : 0; f < walks.size(); ++f) {
      Face face{f, {}};
      for (int dart : walks[f]) {
        face.edges.push_back(dart / 2);
      }
      out.push_back(std::move(face));
    }
    return out;
  }

  int dart_head(int dart) const {
    auto const& e = g.edges[static_cast<std::size_t>(dart / 2)];
    return dart % 2 == 0 ? e.v : e.u;
  }

  int dart_tail(int dart) const { return dart_head(dart ^ 1); }

  // Faces other than `face` grouped into the pieces of the sphere minus the
  // closed face: two faces share a piece when a chain of shared edges avoids
  // `face`. The piece of `face` itself is -1.
  std::vector<int> pieces(std::size_t face) const {
    std::vector<int> face_of(2 * g.edges.size(), -1);
    for (std::size_t f = 0; f < walks.size(); ++f) {
      for (int d : walks[f]) {
        face_of[static_cast<std::size_t>(d)] = static_cast<int>(f);
      }
    }
    std::vector<int> piece(walks.size(), -1);
    int next = 0;
    for (std::size_t f0 = 0; f0 < walks.size(); ++f0) {
      if (f0 == face || piece[f0] >= 0) {
        continue;
      }
      piece[f0] = next;
      std::vector<std::size_t> todo{f0};
      while (!todo.empty()) {
        std::size_t f = todo.back();
        todo.pop_back();
        for (int d : walks[f]) {
          auto h = static_cast<std::size_t>(face_of[static_cast<std::size_t>(d ^ 1)]);
          if (h != face && piece[h] < 0) {
            piece[h] = next;
            todo.push_back(h);
          }
        }
      }
      ++next;
    }
    return piece;
  }

  // Pieces touched by the component C of G - tail(dart) holding head(dart),
  // through the edges meeting C. The face surrounds C exactly when the
  // unbounded face's piece is not among them; bridges and pendant edges are
  // special cases.
  std::set<int> touched(int dart, std::vector<int> const& piece) const {
    int cut = dart_tail(dart);
    std::set<int> seen{dart_head(dart)};
    std::vector<int> todo{dart_head(dart)};
    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      for (auto const& x : g.edges) {
        if ((x.u != v && x.v != v) || x.u == cut || x.v == cut) {
          continue;
        }
        int w = x.u == v ? x.v : x.u;
        if (seen.insert(w).second) {
          todo.push_back(w);
        }
      }
    }
    std::set<int> out;
    for (std::size_t f = 0; f < walks.size(); ++f) {
      for (int d : walks[f]) {
        if (piece[f] >= 0 && (seen.count(dart_head(d)) || seen.count(dart_tail(d)))) {
          out.insert(piece[f]);
        }
      }
    }
    return out;
  }

  template <class F>
  void for_each_pr(Face const& face, F f, bool any_outer = false) const {
    auto const& walk = walks[face.index];
    std::size_t m = walk.size();
    if (m < 2) {
      return;
    }
    auto piece = pieces(face.index);
    std::set<int> outers;
    for (std::size_t o = 0; o < walks.size(); ++o) {
      if (o != face.index && (any_outer || o == 0)) {
        outers.insert(piece[o]);
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t last = (k + m - 1) % m;
      // a lone face (a tree) surrounds everything: no PR, TR covers it
      auto into = touched(walk[k], piece);
      auto out_of = touched(walk[last] ^ 1, piece);
      bool ok = std::any_of(outers.begin(), outers.end(), [&](int o) {
        return into.count(o) > 0 && out_of.count(o) > 0;
      });
      if (!ok) {
        continue;
      }
      std::vector<int> a;
      for (std::size_t i = 0; i < m; ++i) {
        a.push_back(face.edges[(k + i) % m]);
      }
      f(a);
    }
  }

  PWord word_of(std::vector<int> const& a, std::size_t from, std::size_t to) const {
    PWord w;
    for (std::size_t i = from; i < to; ++i) {
      w.push_back(s(a[i]));
    }
    return w;
  }

  // DR, AR, NR and PR over sigma letters (no puncture)
  void classical(bool all_faces) {
    int m = edge_count();
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (disjoint(a, b)) {
          rel({s(a), s(b)}, {s(b), s(a)}, "DR");
        }
      }
    }
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (!disjoint(a, b)) {
          rel({s(a), s(b), s(a)}, {s(b), s(a), s(b)}, "AR");
        }
      }
    }
    for_each_nodal([&](int, int a, int b, int c) {
      rel({s(a), s(b), s(c), s(a)}, {s(b), s(c), s(a), s(b)}, "NR");
    });
    for (auto const& face : faces(!all_faces)) {
      for_each_pr(face, [&](std::vector<int> const& a) {
        rel(word_of(a, 0, a.size() - 1), word_of(a, 1, a.size()), "PR");
      }, all_faces);
    }
  }
};

void declare_edges(PlanarGraph const& g, Presentation& p) {
  for (auto const& e : g.edges) {
    p.add_generator(edge_label(e.id), true);
  }
}

void require_puncture(PlanarGraph const& g) {
  if (g.distinguished.size() != 1) {
    fail("annulus variants need exactly one distinguished vertex");
  }
  int v = g.distinguished.front();
  if (g.vertices.size() < 2) {
    fail("annulus variants need at least two vertices");
  }
  // the graph minus v and its edges stays connected
  std::map<int, int> parent;
  for (int w : g.vertices) {
    parent[w] = w;
  }
  auto find = [&](int w) {
    while (parent[w] != w) {
      w = parent[w] = parent[parent[w]];
    }
    return w;
  };
  for (auto const& e : g.edges) {
    if (e.u != v && e.v != v) {
      parent[find(e.u)] = find(e.v);
    }
  }
  int root = -1;
  for (int w : g.vertices) {
    if (w == v) {
      continue;
    }
    if (root < 0) {
      root = find(w);
    } else if (find(w) != root) {
      fail("graph minus the distinguished vertex is not connected");
    }
  }
  if (g.degree(v) == 0) {
    fail("distinguished vertex has no edges");
  }
}

void build_plane(PlanarGraph const& g, Presentation& p) {
  declare_edges(g, p);
  Builder{g, p}.classical(false);
}

// Relations of the 1-punctured graph presentation of Br_n(Ann).
void annulus_relations(Builder& b) {
  auto const& g = b.g;
  int m = b.edge_count();
  for (int a = 0; a < m; ++a) {
    for (int c = a + 1; c < m; ++c) {
      if (b.at_puncture(a) && b.at_puncture(c)) {
        continue;
      }
      if (b.disjoint(a, c)) {
        b.rel({b.s(a), b.s(c)}, {b.s(c), b.s(a)}, "DR");
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int c = a + 1; c < m; ++c) {
      if (b.disjoint(a, c) || (b.at_puncture(a) && b.at_puncture(c))) {
        continue;
      }
      if (!b.at_puncture(a) && !b.at_puncture(c)) {
        b.rel({b.s(a), b.s(c), b.s(a)}, {b.s(c), b.s(a), b.s(c)}, "AR");
      } else {
        int t = b.at_puncture(a) ? a : c;
        int o = t == a ? c : a;
        b.rel({b.s(t), b.s(o), b.s(t), b.s(o)}, {b.s(o), b.s(t), b.s(o), b.s(t)}, "AR");
      }
    }
  }
  b.for_each_nodal([&](int v, int x, int y, int z) {
    if (v == b.puncture) {
      return;
    }
    int taus = b.at_puncture(x) + b.at_puncture(y) + b.at_puncture(z);
    if (taus == 0) {
      b.rel({b.s(x), b.s(y), b.s(z), b.s(x)}, {b.s(y), b.s(z), b.s(x), b.s(y)}, "NR");
    } else if (taus == 1 && b.at_puncture(z)) {
      // clockwise (a, c, b) with b at the puncture
      b.rel({b.s(x), b.s(y), b.s(z), b.s(x)}, {b.s(y), b.s(z), b.s(x), b.s(y)}, "NR");
    } else if (taus == 1 && b.at_puncture(y)) {
      // clockwise (a, b, c) with b at the puncture
      int a = x;
      int t = y;
      int c = z;
      b.rel({b.s(t), b.s(c), b.s(a), b.s(t), b.s(c)},
            {b.s(a), b.s(t), b.s(c), b.s(a), b.s(t)}, "NR");
    }
  });
  for (auto const& face : b.faces(true)) {
    b.for_each_pr(face, [&](std::vector<int> const& a) {
      std::size_t len = a.size();
      std::size_t at = 0;
      for (int e : a) {
        at += b.at_puncture(e);
      }
      bool plain = at == 0;
      bool through = at >= 1 && b.at_puncture(a[0]) && b.at_puncture(a[len - 1])
                     && std::none_of(a.begin() + 1, a.end() - 1,
                                     [&](int e) { return b.at_puncture(e); });
      if (plain || through) {
        b.rel(b.word_of(a, 0, len - 1), b.word_of(a, 1, len), "PR");
      }
    });
  }
  (void)g;
}

void build_annulus(PlanarGraph const& g, Presentation& p) {
  require_puncture(g);
  int v = g.distinguished.front();
  for (auto const& e : g.edges) {
    bool t = e.u == v || e.v == v;
    p.add_generator(t ? tau_label(e.id) : edge_label(e.id), true);
  }
  Builder b{g, p, v};
  annulus_relations(b);
}

// Throws past `cap` trees when `strict`, otherwise stops there.
void spanning_trees(PlanarGraph const& g, std::size_t cap, bool strict,
                    std::vector<std::vector<int>>& out) {
  int n = static_cast<int>(g.vertices.size());
  int m = static_cast<int>(g.edges.size());
  std::map<int, int> pos;
  for (int k = 0; k < n; ++k) {
    pos[g.vertices[static_cast<std::size_t>(k)]] = k;
  }
  std::vector<int> chosen;
  // union-find with undo by copying: graphs here are small
  auto rec = [&](auto&& self, int e, std::vector<int> parent) -> void {
    if (!strict && out.size() >= cap) {
      return;
    }
    if (static_cast<int>(chosen.size()) == n - 1) {
      if (out.size() >= cap) {
        fail("more than " + std::to_string(cap)
             + " maximal trees; use the minimal tree relations");
      }
      out.push_back(chosen);
      return;
    }
    if (e == m || m - e < n - 1 - static_cast<int>(chosen.size())) {
      return;
    }
    auto find = [&](std::vector<int>& pr, int x) {
      while (pr[static_cast<std::size_t>(x)] != x) {
        x = pr[static_cast<std::size_t>(x)];
      }
      return x;
    };
    auto const& edge = g.edges[static_cast<std::size_t>(e)];
    int a = find(parent, pos[edge.u]);
    int b = find(parent, pos[edge.v]);
    if (a != b) {
      auto with = parent;
      with[static_cast<std::size_t>(a)] = b;
      chosen.push_back(e);
      self(self, e + 1, with);
      chosen.pop_back();
    }
    self(self, e + 1, std::move(parent));
  };
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  rec(rec, 0, parent);
}

void build_sphere(PlanarGraph const& g, Presentation& p, SergiescuOptions const& opts) {
  declare_edges(g, p);
  Builder b{g, p};
  b.classical(true);
  std::vector<std::vector<int>> trees;
  if (opts.minimal) {
    spanning_trees(g, 1, false, trees);
    trees.resize(std::min<std::size_t>(trees.size(), 1));
  } else {
    spanning_trees(g, opts.max_trees, true, trees);
  }
  for (auto const& tree : trees) {
    std::vector<std::string> ids;
    for (int e : tree) {
      ids.push_back(g.edges[static_cast<std::size_t>(e)].id);
    }
    for (int e : tree) {
      auto const& edge = g.edges[static_cast<std::size_t>(e)];
      for (auto [x, y] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
        PWord w;
        for (auto const& id : tree_circuit(g, ids, edge.id, x, y)) {
          w.push_back({p.gen(edge_label(id)), 1});
        }
        p.relate(std::move(w), PWord{}, "TR");
      }
    }
  }
}

void singular_relations(Builder& b, bool skip_puncture) {
  int m = b.edge_count();
  auto ok = [&](int e) { return !skip_puncture || !b.at_puncture(e); };
  for (int a = 0; a < m; ++a) {
    if (!ok(a)) {
      continue;
    }
    for (int c = 0; c < m; ++c) {
      if (!ok(c) || a == c || !b.disjoint(a, c)) {
        continue;
      }
      if (a < c) {
        b.rel({b.s(a), b.s(c)}, {b.s(c), b.s(a)}, "DR");
        b.rel({b.x(a), b.x(c)}, {b.x(c), b.x(a)}, "DR");
      }
      b.rel({b.s(a), b.x(c)}, {b.x(c), b.s(a)}, "DR");
    }
  }
  for (int a = 0; a < m; ++a) {
    if (ok(a)) {
      b.rel({b.s(a), b.x(a)}, {b.x(a), b.s(a)}, "commute");
    }
  }
  for (int a = 0; a < m; ++a) {
    if (ok(a)) {
      b.rel({b.s(a), b.s(a, -1)}, {}, "unit");
      b.rel({b.s(a, -1), b.s(a)}, {}, "unit");
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int c = 0; c < m; ++c) {
      if (!ok(a) || !ok(c) || a == c || b.disjoint(a, c)) {
        continue;
      }
      if (a < c) {
        b.rel({b.s(a), b.s(c), b.s(a)}, {b.s(c), b.s(a), b.s(c)}, "AR");
      }
      b.rel({b.x(a), b.s(c), b.s(a)}, {b.s(c), b.s(a), b.x(c)}, "AR");
    }
  }
  b.for_each_nodal([&](int, int a, int c, int d) {
    if (!ok(a) || !ok(c) || !ok(d)) {
      return;
    }
    b.rel({b.s(a), b.s(c), b.s(d), b.s(a)}, {b.s(c), b.s(d), b.s(a), b.s(c)}, "NR");
    b.rel({b.x(a), b.s(c), b.s(d), b.s(a)}, {b.s(c), b.s(d), b.s(a), b.x(c)}, "NR");
    b.rel({b.s(a), b.s(c), b.x(d), b.s(a)}, {b.s(c), b.x(d), b.s(a), b.s(c)}, "NR");
    b.rel({b.x(a), b.s(c), b.x(d), b.s(a)}, {b.s(c), b.x(d), b.s(a), b.x(c)}, "NR");
  });
  for (auto const& face : b.faces(true)) {
    if (!std::all_of(face.edges.begin(), face.edges.end(), ok)) {
      continue;
    }
    b.for_each_pr(face, [&](std::vector<int> const& a) {
      std::size_t len = a.size();
      b.rel(b.word_of(a, 0, len - 1), b.word_of(a, 1, len), "PR");
      PWord l{b.x(a[0])};
      PWord mid = b.word_of(a, 1, len - 1);
      l.insert(l.end(), mid.begin(), mid.end());
      PWord r = mid;
      r.push_back(b.x(a[len - 1]));
      b.rel(std::move(l), std::move(r), "PR");
    });
  }
}

void build_singular_plane(PlanarGraph const& g, Presentation& p) {
  declare_edges(g, p);
  for (auto const& e : g.edges) {
    p.add_generator(x_label(e.id), false);
  }
  Builder b{g, p};
  singular_relations(b, false);
}

void build_singular_annulus(PlanarGraph const& g, Presentation& p) {
  require_puncture(g);
  int v = g.distinguished.front();
  for (auto const& e : g.edges) {
    bool t = e.u == v || e.v == v;
    p.add_generator(t ? tau_label(e.id) : edge_label(e.id), true);
  }
  for (auto const& e : g.edges) {
    if (e.u != v && e.v != v) {
      p.add_generator(x_label(e.id), false);
    }
  }
  Builder b{g, p, v};
  annulus_relations(b);
  singular_relations(b, true);
  int m = b.edge_count();
  for (int t = 0; t < m; ++t) {
    if (!b.at_puncture(t)) {
      continue;
    }
    for (int c = 0; c < m; ++c) {
      if (b.at_puncture(c)) {
        continue;
      }
      if (b.disjoint(t, c)) {
        b.rel({b.s(t), b.x(c)}, {b.x(c), b.s(t)}, "DR");
      } else {
        b.rel({b.s(t), b.s(c), b.s(t), b.x(c)}, {b.x(c), b.s(t), b.s(c), b.s(t)}, "AR");
      }
    }
  }
  b.for_each_nodal([&](int w, int x, int y, int z) {
    if (w == b.puncture) {
      return;
    }
    int taus = b.at_puncture(x) + b.at_puncture(y) + b.at_puncture(z);
    if (taus != 1 || !b.at_puncture(y)) {
      return;
    }
    // clockwise (a, b, c) with b at the puncture
    int a = x;
    int t = y;
    int c = z;
    b.rel({b.s(a), b.s(t), b.s(c), b.x(a)}, {b.x(c), b.s(a), b.s(t), b.s(c)}, "NR");
    b.rel({b.s(t), b.s(c), b.s(a), b.s(t), b.x(c)},
          {b.x(a), b.s(t), b.s(c), b.s(a), b.s(t)}, "NR");
  });
  for (int t = 0; t < m; ++t) {
    if (b.at_puncture(t)) {
      b.rel({b.s(t), b.s(t, -1)}, {}, "unit");
      b.rel({b.s(t, -1), b.s(t)}, {}, "unit");
    }
  }
}

void build_inverse_plane(PlanarGraph const& g, Presentation& p) {
  declare_edges(g, p);
  for (int v : g.vertices) {
    p.add_generator(eps_label(v), false);
  }
  Builder b{g, p};
  b.classical(false);
  auto e = [&](int v) { return PLetter{p.gen(eps_label(v)), 1}; };
  for (int k = 0; k < b.edge_count(); ++k) {
    b.rel({b.s(k), b.s(k, -1)}, {}, "unit");
    b.rel({b.s(k, -1), b.s(k)}, {}, "unit");
  }
  for (int k = 0; k < b.edge_count(); ++k) {
    auto const& edge = g.edges[static_cast<std::size_t>(k)];
    auto [v0, v1] = std::pair{edge.u, edge.v};
    if (auto it = g.orientation.find(edge.id); it != g.orientation.end()) {
      std::tie(v0, v1) = it->second;
    }
    for (int v : g.vertices) {
      if (v != v0 && v != v1) {
        b.rel({e(v), b.s(k)}, {b.s(k), e(v)}, "eps");
      }
    }
    b.rel({e(v0), b.s(k)}, {b.s(k), e(v1)}, "eps");
    b.rel({e(v1), b.s(k)}, {b.s(k), e(v0)}, "eps");
    for (int v : {v0, v1}) {
      b.rel({e(v), b.s(k), b.s(k)}, {b.s(k), b.s(k), e(v)}, "eps");
      b.rel({b.s(k), b.s(k), e(v)}, {e(v)}, "eps");
    }
    b.rel({e(v0), e(v1), b.s(k)}, {b.s(k), e(v0), e(v1)}, "eps");
    b.rel({b.s(k), e(v0), e(v1)}, {e(v0), e(v1)}, "eps");
  }
  for (int v : g.vertices) {
    b.rel({e(v)}, {e(v), e(v)}, "eps");
  }
}

}  // namespace

Presentation sergiescu(PlanarGraph const& g, GraphVariant variant,
                       SergiescuOptions const& opts) {
  g.validate();
  Presentation p;
  p.family = "graph/" + std::string(variant_name(variant));
  switch (variant) {
    case GraphVariant::plane: build_plane(g, p); break;
    case GraphVariant::annulus: build_annulus(g, p); break;
    case GraphVariant::sphere: build_sphere(g, p, opts); break;
    case GraphVariant::singular_plane: build_singular_plane(g, p); break;
    case GraphVariant::singular_annulus: build_singular_annulus(g, p); break;
    case GraphVariant::inverse_plane: build_inverse_plane(g, p); break;
  }
  p.validate();
  return p;
}

// ---------------------------------------------------------------------------
// Models on lower-arc graphs

namespace {

int vertex_count_on_line(PlanarGraph const& g) {
  g.validate();
  int n = static_cast<int>(g.vertices.size());
  std::vector<int> vs = g.vertices;
  std::sort(vs.begin(), vs.end());
  for (int k = 0; k < n; ++k) {
    if (vs[static_cast<std::size_t>(k)] != k + 1) {
      fail("band models need vertices 1..n");
    }
  }
  for (std::size_t a = 0; a < g.edges.size(); ++a) {
    for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
      auto [xu, xv] = std::minmax(g.edges[a].u, g.edges[a].v);
      auto [yu, yv] = std::minmax(g.edges[b].u, g.edges[b].v);
      if ((xu < yu && yu < xv && xv < yv) || (yu < xu && xu < yv && yv < xv)) {
        fail("arcs " + g.edges[a].id + " and " + g.edges[b].id + " cross");
      }
    }
  }
  return n;
}

BandWord band_of(int n, PlanarEdge const& e, int sign = 1) {
  auto [s, t] = std::minmax(e.u, e.v);
  return BandWord(n, {BandLetter{t, s, sign}});
}

}  // namespace

Assignment band_assignment(PlanarGraph const& g) {
  int n = vertex_count_on_line(g);
  std::map<std::string, BraidWord> images;
  std::map<std::string, BraidWord> inverses;
  for (auto const& e : g.edges) {
    images.emplace(edge_label(e.id), band_to_artin(band_of(n, e)));
    inverses.emplace(edge_label(e.id), band_to_artin(band_of(n, e, -1)));
  }
  return make_assignment(
      "Br_" + std::to_string(n) + " (edges as band generators)", BraidWord(n),
      std::move(images), std::move(inverses),
      [](BraidWord const& u, BraidWord const& v) { return u * v; },
      [](BraidWord const& u, BraidWord const& v) { return braid_equal(u, v); });
}

Assignment two_page_assignment(int n, std::vector<PlanarGraph::Arc> const& arcs) {
  auto g = PlanarGraph::two_page(n, arcs);  // rejects crossings
  // A lower arc passes in front of the strands it spans, an upper arc behind.
  auto image = [&](PlanarGraph::Arc const& arc, int sign) {
    auto [s, t] = std::minmax(arc.s, arc.t);
    int over = arc.upper ? -1 : 1;
    BraidWord w(n);
    for (int i = t - 1; i > s; --i) {
      w.letters.push_back({i, over});
    }
    w.letters.push_back({s, sign});
    for (int i = s + 1; i < t; ++i) {
      w.letters.push_back({i, -over});
    }
    return w;
  };
  std::map<std::string, BraidWord> images;
  std::map<std::string, BraidWord> inverses;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    images.emplace(edge_label(g.edges[k].id), image(arcs[k], 1));
    inverses.emplace(edge_label(g.edges[k].id), image(arcs[k], -1));
  }
  return make_assignment(
      "Br_" + std::to_string(n) + " (two-page arcs)", BraidWord(n), std::move(images),
      std::move(inverses), [](BraidWord const& u, BraidWord const& v) { return u * v; },
      [](BraidWord const& u, BraidWord const& v) { return braid_equal(u, v); });
}

namespace {

// Edges act as transpositions of the vertices; works for any drawing.
Assignment transposition_quotient(PlanarGraph const& g) {
  g.validate();
  std::vector<int> order = g.vertices;
  std::sort(order.begin(), order.end());
  auto pos = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), v)
                                    - order.begin());
  };
  int n = static_cast<int>(order.size());
  std::map<std::string, Permutation> images;
  for (auto const& e : g.edges) {
    auto p = Permutation::identity(n);
    std::swap(p.image[pos(e.u)], p.image[pos(e.v)]);
    images.emplace(edge_label(e.id), p);
  }
  auto inverses = images;
  return make_assignment(
      "S_" + std::to_string(n), Permutation::identity(n), std::move(images),
      std::move(inverses), [](Permutation const& a, Permutation const& b) { return a.then(b); },
      [](Permutation const& a, Permutation const& b) { return a == b; });
}

}  // namespace

Assignment graph_model(PlanarGraph const& g, GraphVariant variant) {
  if (variant == GraphVariant::sphere) {
    return transposition_quotient(g);
  }
  int n = vertex_count_on_line(g);
  bool punctured =
      variant == GraphVariant::annulus || variant == GraphVariant::singular_annulus;
  if (punctured) {
    require_puncture(g);
    if (g.distinguished.front() != 1) {
      fail("annulus models need the distinguished vertex at position 1");
    }
  }
  auto at_puncture = [&](PlanarEdge const& e) {
    return punctured && (e.u == 1 || e.v == 1);
  };
  switch (variant) {
    case GraphVariant::plane:
      return band_assignment(g);
    case GraphVariant::annulus: {
      std::map<std::string, BraidWord> images;
      std::map<std::string, BraidWord> inverses;
      for (auto const& e : g.edges) {
        auto w = band_to_artin(band_of(n, e));
        if (at_puncture(e)) {
          images.emplace(tau_label(e.id), w * w);
          inverses.emplace(tau_label(e.id), (w * w).inverse());
        } else {
          images.emplace(edge_label(e.id), w);
          inverses.emplace(edge_label(e.id), w.inverse());
        }
      }
      return make_assignment(
          "Br_" + std::to_string(n) + " (first strand fixed, tau_b -> a_ts^2)",
          BraidWord(n), std::move(images), std::move(inverses),
          [](BraidWord const& u, BraidWord const& v) { return u * v; },
          [](BraidWord const& u, BraidWord const& v) { return braid_equal(u, v); });
    }
    case GraphVariant::sphere:
      break;  // handled above
    case GraphVariant::singular_plane:
    case GraphVariant::singular_annulus: {
      std::map<std::string, SBandWord> images;
      std::map<std::string, SBandWord> inverses;
      for (auto const& e : g.edges) {
        auto [s, t] = std::minmax(e.u, e.v);
        if (at_puncture(e)) {
          images.emplace(tau_label(e.id), SBandWord(n, {a_gen(t, s), a_gen(t, s)}));
          inverses.emplace(tau_label(e.id),
                           SBandWord(n, {a_gen(t, s, -1), a_gen(t, s, -1)}));
        } else {
          images.emplace(edge_label(e.id), SBandWord(n, {a_gen(t, s)}));
          inverses.emplace(edge_label(e.id), SBandWord(n, {a_gen(t, s, -1)}));
          images.emplace(x_label(e.id), SBandWord(n, {b_gen(t, s)}));
        }
      }
      return make_assignment(
          "SB_" + std::to_string(n) + " (edges as band generators)", SBandWord(n),
          std::move(images), std::move(inverses),
          [](SBandWord const& u, SBandWord const& v) { return u * v; },
          [](SBandWord const& u, SBandWord const& v) { return singular_equal(u, v); });
    }
    case GraphVariant::inverse_plane: {
      std::map<std::string, PartialBraid> images;
      std::map<std::string, PartialBraid> inverses;
      for (auto const& e : g.edges) {
        auto w = band_to_artin(band_of(n, e));
        images.emplace(edge_label(e.id), PartialBraid::from_braid(w));
        inverses.emplace(edge_label(e.id), PartialBraid::from_braid(w.inverse()));
      }
      for (int v = 1; v <= n; ++v) {
        images.emplace(eps_label(v), PartialBraid::eps(n, v));
      }
      return make_assignment(
          "IB_" + std::to_string(n) + " (edges as band generators)",
          PartialBraid::identity(n), std::move(images), std::move(inverses),
          pb_multiply, [](PartialBraid const& a, PartialBraid const& b) { return a == b; });
    }
  }
  fail("unknown variant");
}

}  // namespace braids
