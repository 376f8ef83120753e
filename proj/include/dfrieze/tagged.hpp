#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dfrieze/complex.hpp"
#include "dfrieze/frieze.hpp"

namespace dfrieze {

enum class TaggedKind { Chord, CentralPlain, CentralNotched };

struct TaggedArc {
  TaggedKind kind = TaggedKind::Chord;
  int i = 0;
  int j = 0;  // 0 for central arcs

  static TaggedArc chord(int i, int j) { return {TaggedKind::Chord, i, j}; }
  static TaggedArc plain(int i) { return {TaggedKind::CentralPlain, i, 0}; }
  static TaggedArc notched(int i) { return {TaggedKind::CentralNotched, i, 0}; }

  bool central() const { return kind != TaggedKind::Chord; }
  auto operator<=>(const TaggedArc&) const = default;
};

std::string to_string(const TaggedArc& a);
// Accepts "chord i j", "central+ i", "central- i"; a bare "central i" is plain.
TaggedArc parse_tagged_arc(std::string_view text);
void validate_tagged_arc(const TaggedArc& a, int n);

// The plain arc in bijection with a tagged arc: a notched central arc becomes the loop at its foot.
Arc underlying(const TaggedArc& a);

bool tagged_compatible(const TaggedArc& a, const TaggedArc& b, int n);
std::vector<TaggedArc> tagged_universe(int n);

struct TaggedTriangulation {
  int n = 0;
  std::vector<TaggedArc> arcs;  // sorted

  bool contains(const TaggedArc& a) const;
  int notches() const;
  int centrals() const;
  bool operator==(const TaggedTriangulation&) const = default;
};

TaggedTriangulation make_tagged_triangulation(int n, std::vector<TaggedArc> arcs);
std::vector<TaggedTriangulation> enumerate_tagged(int n);

TaggedArc flip_partner(const TaggedTriangulation& t, const TaggedArc& a);
TaggedTriangulation flip(const TaggedTriangulation& t, const TaggedArc& a);

// Plain triangulation whose ends match those of t; with two or more notches the
// notched arcs become central arcs and the pattern is recovered with iota.
Triangulation plain_image(const TaggedTriangulation& t);
TaggedTriangulation tagged_from_plain(const Triangulation& t);

FriezePatternD frieze_of_tagged(const TaggedTriangulation& t);

}  // namespace dfrieze
