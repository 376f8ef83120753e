#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dfrieze/cluster.hpp"
#include "dfrieze/complex.hpp"
#include "dfrieze/frieze.hpp"
#include "dfrieze/tagged.hpp"

namespace dfrieze {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text form:
//   n 8
//   unpunctured            (optional)
//   chord i j | loop i | central i | central+ i | central- i
//   label X a b c          (optional face label by corner multiset, 0 = puncture)
// JSON form: {"n": 8, "punctured": true, "arcs": ["chord 6 3", ...], "labels": {"A": [5, 6, 0]}}
struct TriangulationFile {
  Disc disc;
  bool tagged = false;
  std::vector<Arc> arcs;
  std::vector<TaggedArc> tagged_arcs;
  std::vector<std::pair<std::string, std::vector<int>>> labels;
};

TriangulationFile parse_triangulation(const std::string& text);
TriangulationFile parse_triangulation_json(const nlohmann::json& j);
TriangulationFile load_triangulation(const std::string& path);
std::string read_file(const std::string& path);

Triangulation to_triangulation(const TriangulationFile& f);
TaggedTriangulation to_tagged(const TriangulationFile& f);
// Applies the file's face labels; unknown multisets are an error.
FaceComplex labelled_complex(const TriangulationFile& f);
// Pattern of the file: F(T) for plain input, F of the tagged triangulation otherwise.
FriezePatternD pattern_of(const TriangulationFile& f);

TriangulationFile file_of(const Triangulation& t);
TriangulationFile file_of(const TaggedTriangulation& t);
std::string serialise_text(const TriangulationFile& f);
nlohmann::json to_json(const TriangulationFile& f);

// Text form: optional "type A|D" header, then one row per line with an optional "@k" offset.
// JSON form: {"type": "D", "rows": [[...], ...], "offsets": [...]}.
bool looks_like_grid(const std::string& text);
RawGrid parse_grid(const std::string& text);

nlohmann::json to_json(const BigInt& v);
BigInt big_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FriezePatternD& p);
FriezePatternD pattern_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const ConjectureReport& r);

}  // namespace dfrieze
