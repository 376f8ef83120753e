#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfrieze/surface.hpp"

namespace dfrieze {

class TriangulationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Triangulation {
  Disc disc;
  std::vector<Arc> arcs;  // canonical, sorted

  bool contains(const Arc& a) const;
  bool operator==(const Triangulation&) const = default;
};

// Validates compatibility, cardinality and maximality.
Triangulation make_triangulation(const Disc& disc, std::vector<Arc> arcs);

// All maximal cliques of the graph on 0..count-1.
std::vector<std::vector<int>> maximal_cliques(int count, const std::function<bool(int, int)>& adjacent);

std::vector<Triangulation> enumerate_triangulations(const Disc& disc);

enum class EndKind { BoundaryNext, Depart, Central, Arrive, BoundaryPrev, Puncture };

struct End {
  EndKind kind = EndKind::BoundaryNext;
  int arc = -1;  // index into triangulation().arcs, -1 for boundary edges
};

// Sector s at a vertex lies between ends s and s+1 of its rotation.
struct Corner {
  int vertex = 0;
  int sector = 0;
  auto operator<=>(const Corner&) const = default;
};

enum class FaceType { Ordinary, LoopType, SelfFolded };

struct Face {
  std::vector<Corner> corners;
  FaceType type = FaceType::Ordinary;

  // Corner vertices as a sorted multiset.
  std::vector<int> incidence() const;
  bool touches(int v) const;
};

class FaceComplex {
 public:
  explicit FaceComplex(Triangulation t);

  const Triangulation& triangulation() const { return t_; }
  const Disc& disc() const { return t_.disc; }
  int n() const { return t_.disc.n; }

  const std::vector<End>& rotation(int v) const { return rotation_.at(v); }
  int sector_count(int v) const;
  const std::vector<Face>& faces() const { return faces_; }
  int face_of(Corner c) const;
  Corner next(Corner c) const;
  // The opposite end of end index `e` at vertex v.
  std::pair<int, int> partner(int v, int e) const;
  // Index of the end of `arc` with the given kind at v, or -1.
  int end_index(int v, EndKind kind, int arc) const;
  int arc_index(const Arc& a) const;

  int d0() const;
  int degree(int v) const { return sector_count(v); }
  std::vector<int> degrees() const;

  const std::string& label(int face) const { return labels_.at(face); }
  void set_label(int face, std::string label);
  // Face with the given sorted corner multiset, or -1.
  int find_face(std::vector<int> incidence) const;

 private:
  Triangulation t_;
  std::vector<std::vector<End>> rotation_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> face_of_;
  std::vector<std::string> labels_;
};

FaceComplex build_complex(const Triangulation& t);

// Primed copies of a boundary vertex k are encoded as -k.
std::string vertex_name(int v);

struct Region {
  int face = -1;
  int occurrence = 0;
  std::vector<int> vertices;  // corner multiset on the retained side
};

struct Subdivision {
  std::string cut;
  std::vector<int> boundary;
  std::vector<Region> regions;

  std::vector<int> split_faces() const;
};

Subdivision truncate_chord(const FaceComplex& fc, int i, int j);
Subdivision truncate_loop(const FaceComplex& fc, int i);

struct PolygonCut {
  enum class Kind { P, Q } kind = Kind::P;
  std::vector<int> boundary;  // clockwise, may contain 0 and primed copies
  std::vector<Region> regions;
};

struct PolygonCuts {
  PolygonCut p;
  std::optional<PolygonCut> q;
};

PolygonCuts cut_p_q(const FaceComplex& fc, int i);

}  // namespace dfrieze
