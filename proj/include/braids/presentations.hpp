#pragma once

// Finite presentations of braid-like groups and monoids, Sergiescu-style
// presentations read off planar graphs, and a checker that evaluates every
// relation in a computable model.
//
// Words act left to right, like everywhere else in the library: the model
// image of "u v" is image(u) then image(v).

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braids {

struct PLetter {
  int gen = 0;  // index into Presentation::gens
  int sign = 1;

  friend bool operator==(PLetter const&, PLetter const&) = default;
  friend auto operator<=>(PLetter const&, PLetter const&) = default;
};

using PWord = std::vector<PLetter>;

struct Generator {
  std::string label;
  bool invertible = true;
};

struct Relation {
  PWord lhs;
  PWord rhs;
  std::string kind;  // family tag, e.g. "braid", "DR", "PR", "TR"

  friend bool operator==(Relation const& a, Relation const& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct Presentation {
  std::string family;
  std::vector<Generator> gens;
  std::vector<Relation> relations;

  // index of a label; throws std::invalid_argument when absent
  int gen(std::string_view label) const;
  bool has(std::string_view label) const;
  int add_generator(std::string label, bool invertible);

  // Whitespace-separated "label", "label'" or "label^k" (k may be negative);
  // "1" is the empty word. Throws std::invalid_argument on unknown labels and
  // on inverses of non-invertible generators.
  PWord word(std::string_view text) const;

  // Appends unless an identical relation (either orientation) is present.
  // Returns whether it was added.
  bool relate(PWord lhs, PWord rhs, std::string kind);
  bool relate(std::string_view lhs, std::string_view rhs, std::string kind);

  // Throws std::invalid_argument: unknown generator index, inverse of a
  // non-invertible generator, duplicate labels, sign other than +-1.
  void validate() const;
};

PWord power(PWord const& w, int k);  // k >= 0
PWord concat(std::initializer_list<PWord> parts);
PWord inverse(Presentation const& p, PWord const& w);

std::string format_word(Presentation const& p, PWord const& w);
std::string format_relation(Presentation const& p, Relation const& r);
// one "lhs = rhs" line per relation
std::string export_text(Presentation const& p);

struct FamilyParams {
  int n = 0;  // strands, or the rank r for the complex reflection families
  int d = 0;
  int e = 0;
};

struct FamilyInfo {
  std::string name;
  std::string description;
  bool needs_n = true;
  bool needs_e = false;
  bool has_model = false;     // a faithful computable model exists
  bool has_quotient = false;  // a necessary-condition quotient exists
};

std::vector<FamilyInfo> const& builtin_families();
// throws std::invalid_argument on an unknown family or bad parameters
Presentation builtin_presentation(std::string_view family,
                                  FamilyParams const& params);

// ---------------------------------------------------------------------------
// Models

// Decides equality of two presentation words in some model.
struct Assignment {
  std::string model;
  std::vector<std::string> labels;  // generators with an image
  std::function<bool(Presentation const&, PWord const&, PWord const&)> equal;
  // true when equal may be called from several threads at once
  bool thread_safe = true;

  bool covers(std::string_view label) const;
};

// Builds an assignment from generator images. Inverse letters use `inv`
// when given, otherwise the explicit entry in `inverse_images`.
template <class E, class Mul, class Eq>
Assignment make_assignment(std::string model, E identity,
                           std::map<std::string, E> images,
                           std::map<std::string, E> inverse_images, Mul mul,
                           Eq eq) {
  Assignment a;
  a.model = std::move(model);
  for (auto const& [label, img] : images) {
    a.labels.push_back(label);
  }
  a.equal = [identity = std::move(identity), images = std::move(images),
             inverse_images = std::move(inverse_images), mul,
             eq](Presentation const& p, PWord const& u, PWord const& v) {
    auto eval = [&](PWord const& w) {
      E acc = identity;
      for (auto const& l : w) {
        auto const& label = p.gens[static_cast<std::size_t>(l.gen)].label;
        auto const& table = l.sign > 0 ? images : inverse_images;
        auto it = table.find(label);
        if (it == table.end()) {
          throw std::invalid_argument("no image for " + label
                                      + (l.sign > 0 ? "" : "'"));
        }
        acc = mul(acc, it->second);
      }
      return acc;
    };
    return eq(eval(u), eval(v));
  };
  return a;
}

enum class Verdict { holds, fails, skipped };

struct RelationVerdict {
  std::size_t index = 0;  // into Presentation::relations
  Verdict verdict = Verdict::skipped;
  std::string witness;  // the failing relation, formatted
};

struct VerificationReport {
  std::string model;
  std::vector<RelationVerdict> verdicts;  // generation order
  int holds = 0;
  int fails = 0;
  int skipped = 0;

  bool all_hold() const { return fails == 0 && skipped == 0; }
};

// Evaluates both sides of every relation. An assignment without `equal`
// skips everything. Throws std::invalid_argument when a generator used by
// some relation has no image.
VerificationReport verify_homomorphism(Presentation const& p,
                                       Assignment const& a,
                                       bool parallel = true);

// Faithful model for the family, when one is implemented (braid groups,
// free-group automorphisms, SB_n, IB_n and relatives).
std::optional<Assignment> builtin_model(std::string_view family,
                                        FamilyParams const& params);
// Necessary-condition quotient: symmetric groups, Coxeter groups, monomial
// reflection groups, or a larger monoid the family maps onto.
std::optional<Assignment> builtin_quotient(std::string_view family,
                                           FamilyParams const& params);

// ---------------------------------------------------------------------------
// Planar graphs

struct PlanarEdge {
  std::string id;
  int u = 0;
  int v = 0;
};

struct PlanarGraph {
  std::vector<int> vertices;
  std::vector<PlanarEdge> edges;
  // vertex -> incident edge ids in clockwise order
  std::map<int, std::vector<std::string>> rotation;
  // edges of the unbounded face in traversal order (face on the left);
  // may be empty for a tree
  std::vector<std::string> outer_face;
  std::vector<int> distinguished;
  // edge id -> (tail, head); edges without an entry use (u, v)
  std::map<std::string, std::pair<int, int>> orientation;

  int edge_index(std::string_view id) const;  // throws when absent
  std::vector<std::string> incident(int v) const;
  int degree(int v) const;
  bool adjacent_to(std::string_view edge, int v) const;

  // Normal (connected, simple, no loops) with a consistent rotation system
  // of genus 0. Throws std::invalid_argument.
  void validate() const;

  // Vertices 1..n on a horizontal line, every edge a lower half-disc arc.
  // Edge ids are "1".."m" in input order; rotation and outer face follow
  // from the drawing. Throws when two arcs cross.
  static PlanarGraph lower_arcs(int n,
                                std::vector<std::pair<int, int>> const& arcs);

  struct Arc {
    int s = 0;
    int t = 0;
    bool upper = false;  // drawn above the line
  };
  // As lower_arcs, with arcs on either side of the line. Arcs on the same
  // side must not cross.
  static PlanarGraph two_page(int n, std::vector<Arc> const& arcs);
};

PlanarGraph parse_graph_json(std::string_view text);
std::string to_json(PlanarGraph const& g);

// Generator label of an edge: "s<id>" for numeric ids, the id otherwise.
std::string edge_label(std::string_view id);

// Every face as a cyclic edge sequence (face on the left), outer face first
// when known. Each orbit starts at its earliest edge in input order.
std::vector<std::vector<std::string>> graph_faces(PlanarGraph const& g);
// one pseudocycle per bounded face
std::vector<std::vector<std::string>> graph_pseudocycles(PlanarGraph const& g);

// Circuit around the maximal tree starting with edge `start` walked from x
// to y; passes every tree edge twice. Throws unless `tree` is a spanning
// tree containing `start` with endpoints {x, y}.
std::vector<std::string> tree_circuit(PlanarGraph const& g,
                                      std::vector<std::string> const& tree,
                                      std::string_view start, int x, int y);

enum class GraphVariant {
  plane,
  annulus,
  sphere,
  singular_plane,
  singular_annulus,
  inverse_plane
};

GraphVariant parse_variant(std::string_view name);
std::string_view variant_name(GraphVariant v);

struct SergiescuOptions {
  // sphere: tree relations for one maximal tree only
  bool minimal = false;
  // sphere: refuse to enumerate more maximal trees than this
  std::size_t max_trees = 20000;
};

Presentation sergiescu(PlanarGraph const& g, GraphVariant variant,
                       SergiescuOptions const& opts = {});

// Edge (s, t), s < t, of a lower-arc graph on vertices 1..n goes to the band
// generator a_ts in Br_n. Throws on crossing arcs or other vertex ids.
Assignment band_assignment(PlanarGraph const& g);
// Br_n image of a two-page drawing: a lower arc (s, t) is a_ts, an upper arc
// its mirror conjugate, passing behind the strands in between.
Assignment two_page_assignment(int n, std::vector<PlanarGraph::Arc> const& arcs);
// Model for any variant with one: plane -> Br_n, singular-plane -> SB_n
// (x_e -> b_ts), inverse-plane -> IB_n (e_v -> strand v deleted), annulus
// and singular-annulus -> Br_n / SB_n with the distinguished vertex as the
// fixed first strand and tau_b -> a_ts^2, sphere -> symmetric group quotient.
Assignment graph_model(PlanarGraph const& g, GraphVariant variant);

}  // namespace braids
