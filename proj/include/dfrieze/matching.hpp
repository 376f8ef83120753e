#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dfrieze/complex.hpp"

namespace dfrieze {

using BigInt = boost::multiprecision::cpp_int;

// Entry label: (i,j) for chords, (i,i) for loops, (i,0) for central arcs.
struct Label {
  int i = 0;
  int j = 0;
  auto operator<=>(const Label&) const = default;
};

std::string to_string(const Label& l);
Label parse_label(const std::string& text);

// mult[v][r]: number of corners region r has at the v-th vertex.
using IncidenceMatrix = std::vector<std::vector<int>>;

IncidenceMatrix incidence_matrix(const std::vector<int>& vertices, const std::vector<Region>& regions);

// Allocations of distinct regions to the listed vertices, weighted by corner multiplicity.
BigInt count_matchings(const IncidenceMatrix& m);
BigInt count_matchings(const std::vector<int>& vertices, const std::vector<Region>& regions);
// Same count as a rectangular permanent, via Ryser's formula on a padded square matrix.
BigInt ryser_permanent(const IncidenceMatrix& m);

struct Matching {
  std::vector<int> vertices;
  std::vector<int> regions;
  std::vector<int> corners;  // which of the region's corners at the vertex, 0-based
};

std::vector<Matching> list_matchings(const std::vector<int>& vertices, const std::vector<Region>& regions);

// "6A 7E 8G 1H": vertex, then the region's face label, a trailing ' for a second corner.
std::string format_matching(const Matching& m, const std::vector<Region>& regions,
                            const std::function<std::string(int)>& face_label);

struct MatchingProblem {
  std::vector<int> vertices;
  std::vector<Region> regions;
};

MatchingProblem matching_problem(const FaceComplex& fc, const Label& label);
BigInt matching_number(const FaceComplex& fc, const Label& label);
std::vector<Label> entry_labels(int n);
std::map<Label, BigInt> matching_numbers(const FaceComplex& fc);

MatchingProblem m_tilde_problem(const FaceComplex& fc, int i);
BigInt m_tilde(const FaceComplex& fc, int i);

// Matchings of the polygon's triangulation with every boundary vertex except x and y.
BigInt polygon_pq_counts(const PolygonCut& cut, int x, int y);

}  // namespace dfrieze
