#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dfrieze/frieze.hpp"
#include "dfrieze/tagged.hpp"

namespace dfrieze {

using Rational = boost::multiprecision::cpp_rational;

struct Quiver {
  std::vector<std::vector<int>> b;  // b[x][y] > 0: b[x][y] arrows x -> y

  int size() const { return static_cast<int>(b.size()); }
  bool operator==(const Quiver&) const = default;
};

void validate_quiver(const Quiver& q);
Quiver mutate(const Quiver& q, int k);

struct Seed {
  Quiver quiver;
  std::vector<Rational> values;
  std::vector<TaggedArc> labels;
};

// Fan at vertex 1 with arrows along the chords toward Chord(1,n), which points to both central arcs.
Seed initial_seed(int n);
Seed mutate(const Seed& s, int k);

TaggedTriangulation seed_triangulation(const Seed& s);

struct SeedClosure {
  std::map<std::vector<TaggedArc>, Seed> seeds;  // keyed by sorted labels
  std::map<TaggedArc, BigInt> u;
};

// Breadth-first closure under mutation; every occurrence of an arc must carry the same positive integer.
SeedClosure explore(const Seed& root);
std::map<TaggedArc, BigInt> specialise_all(int n);

// (i,j) for chords, (i,0) for plain central arcs, (i,i) for notched ones.
Label position_label(const TaggedArc& a);
FriezePatternD pattern_from_values(int n, const std::map<TaggedArc, BigInt>& u);

// Underlying graph is the type D_n Dynkin diagram (a path of three vertices when n = 3).
bool is_dynkin_d(const Quiver& q);

class ClusterAtlas {
 public:
  explicit ClusterAtlas(int n);

  int n() const { return n_; }
  const SeedClosure& closure() const { return closure_; }
  const Seed& seed(const TaggedTriangulation& t) const;
  bool is_slice_seed(const TaggedTriangulation& t) const;
  FriezePatternD fc_pattern(const TaggedTriangulation& t) const;

 private:
  int n_;
  SeedClosure closure_;
};

bool is_slice_seed(const TaggedTriangulation& t);
FriezePatternD fc_pattern(const TaggedTriangulation& t);

struct ConjectureRow {
  TaggedTriangulation triangulation;
  bool slice = false;
  int centrals = 0;
  int notches = 0;
  bool equal = false;
  std::vector<Label> mismatches;

  // "theorem" for slice seeds, "conjectural" otherwise.
  std::string status() const { return slice ? "theorem" : "conjectural"; }
};

struct ConjectureReport {
  int n = 0;
  std::vector<ConjectureRow> rows;

  std::size_t equal_count() const;
  std::size_t slice_count() const;
  std::size_t slice_mismatches() const;
};

ConjectureReport conjecture_report(int n);

}  // namespace dfrieze
