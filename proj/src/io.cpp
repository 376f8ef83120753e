#include "dfrieze/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace dfrieze {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) { return trim(s.substr(0, s.find('#'))); }

bool is_tagged_kind(const std::string& word) { return word == "central+" || word == "central-"; }

void add_arc(TriangulationFile& f, const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  if (is_tagged_kind(kind)) {
    f.tagged = true;
    f.tagged_arcs.push_back(parse_tagged_arc(text));
    return;
  }
  Arc a = parse_arc(text);
  f.arcs.push_back(a);
  f.tagged_arcs.push_back(a.kind == ArcKind::Loop ? TaggedArc::notched(a.i) : parse_tagged_arc(text));
}

void finish(TriangulationFile& f, bool saw_loop, const std::vector<std::string>& where) {
  if (f.disc.n == 0) throw ParseError("missing 'n' declaration");
  if (f.tagged && saw_loop) throw ParseError("loops cannot be mixed with tagged central arcs; use central-");
  if (f.tagged && !f.disc.punctured) throw ParseError("tagged arcs need a punctured disc");
  for (std::size_t k = 0; k < where.size(); ++k) {
    try {
      if (f.tagged) validate_tagged_arc(f.tagged_arcs[k], f.disc.n);
      else validate_arc(f.arcs[k], f.disc);
    } catch (const std::exception& e) {
      std::string arc = f.tagged ? to_string(f.tagged_arcs[k]) : to_string(f.arcs[k]);
      throw ParseError(where[k] + ": invalid arc " + arc + ": " + e.what());
    }
  }
  if (f.tagged) f.arcs.clear();
  else f.tagged_arcs.clear();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TriangulationFile parse_triangulation(const std::string& text) {
  std::string head = trim(text);
  if (!head.empty() && head.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_triangulation_json(j);
  }
  TriangulationFile f;
  bool saw_loop = false;
  std::vector<std::string> where;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string key;
    words >> key;
    try {
      if (key == "n") {
        if (f.disc.n != 0) throw std::invalid_argument("duplicate 'n' declaration");
        if (!(words >> f.disc.n)) throw std::invalid_argument("'n' needs an integer");
        validate_disc(Disc{f.disc.n, true});
      } else if (key == "unpunctured") {
        f.disc.punctured = false;
      } else if (key == "punctured") {
        f.disc.punctured = true;
      } else if (key == "label") {
        std::string name;
        std::vector<int> verts;
        int v;
        words >> name;
        while (words >> v) verts.push_back(v);
        if (name.empty() || verts.size() != 3 || !words.eof())
          throw std::invalid_argument("label needs a name and three vertices");
        std::sort(verts.begin(), verts.end());
        f.labels.emplace_back(name, verts);
      } else {
        if (key == "loop") saw_loop = true;
        add_arc(f, line);
        where.push_back("line " + std::to_string(line_no));
      }
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  finish(f, saw_loop, where);
  return f;
}

TriangulationFile parse_triangulation_json(const json& j) {
  TriangulationFile f;
  bool saw_loop = false;
  std::vector<std::string> where;
  if (!j.is_object()) throw ParseError("triangulation JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("n: missing or not an integer");
  f.disc.n = j["n"].get<int>();
  try {
    validate_disc(Disc{f.disc.n, true});
  } catch (const std::exception& e) {
    throw ParseError(std::string("n: ") + e.what());
  }
  if (j.contains("punctured")) {
    if (!j["punctured"].is_boolean()) throw ParseError("punctured: not a boolean");
    f.disc.punctured = j["punctured"].get<bool>();
  }
  if (!j.contains("arcs") || !j["arcs"].is_array()) throw ParseError("arcs: missing or not an array");
  for (std::size_t k = 0; k < j["arcs"].size(); ++k) {
    const json& a = j["arcs"][k];
    try {
      if (!a.is_string()) throw std::invalid_argument("not a string");
      std::string s = a.get<std::string>();
      if (s.rfind("loop", 0) == 0) saw_loop = true;
      add_arc(f, s);
      where.push_back("arcs[" + std::to_string(k) + "]");
    } catch (const std::exception& e) {
      throw ParseError("arcs[" + std::to_string(k) + "]: " + e.what());
    }
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_object()) throw ParseError("labels: not an object");
    for (const auto& [name, verts] : j["labels"].items()) {
      if (!verts.is_array() || verts.size() != 3) throw ParseError("labels." + name + ": needs three vertices");
      std::vector<int> v;
      for (const json& x : verts) {
        if (!x.is_number_integer()) throw ParseError("labels." + name + ": vertices must be integers");
        v.push_back(x.get<int>());
      }
      std::sort(v.begin(), v.end());
      f.labels.emplace_back(name, v);
    }
  }
  finish(f, saw_loop, where);
  return f;
}

TriangulationFile load_triangulation(const std::string& path) { return parse_triangulation(read_file(path)); }

Triangulation to_triangulation(const TriangulationFile& f) {
  if (f.tagged) return plain_image(to_tagged(f));
  return make_triangulation(f.disc, f.arcs);
}

TaggedTriangulation to_tagged(const TriangulationFile& f) {
  if (!f.tagged) return tagged_from_plain(make_triangulation(f.disc, f.arcs));
  return make_tagged_triangulation(f.disc.n, f.tagged_arcs);
}

FaceComplex labelled_complex(const TriangulationFile& f) {
  FaceComplex fc = build_complex(to_triangulation(f));
  for (const auto& [name, verts] : f.labels) {
    int face = fc.find_face(verts);
    if (face < 0) {
      std::string v;
      for (int x : verts) v += " " + std::to_string(x);
      throw ParseError("label " + name + ": no face with corners" + v);
    }
    fc.set_label(face, name);
  }
  return fc;
}

FriezePatternD pattern_of(const TriangulationFile& f) {
  if (f.tagged) return frieze_of_tagged(to_tagged(f));
  return build_frieze(build_complex(to_triangulation(f)));
}

TriangulationFile file_of(const Triangulation& t) {
  TriangulationFile f;
  f.disc = t.disc;
  f.arcs = t.arcs;
  return f;
}

TriangulationFile file_of(const TaggedTriangulation& t) {
  TriangulationFile f;
  f.disc = Disc{t.n, true};
  f.tagged = true;
  f.tagged_arcs = t.arcs;
  return f;
}

namespace {

std::vector<std::string> arc_strings(const TriangulationFile& f) {
  std::vector<std::string> out;
  if (f.tagged)
    for (const TaggedArc& a : f.tagged_arcs) out.push_back(to_string(a));
  else
    for (const Arc& a : f.arcs) out.push_back(to_string(a));
  return out;
}

}  // namespace

std::string serialise_text(const TriangulationFile& f) {
  std::ostringstream s;
  s << "n " << f.disc.n << "\n";
  if (!f.disc.punctured) s << "unpunctured\n";
  for (const std::string& a : arc_strings(f)) s << a << "\n";
  for (const auto& [name, verts] : f.labels) {
    s << "label " << name;
    for (int v : verts) s << " " << v;
    s << "\n";
  }
  return s.str();
}

json to_json(const TriangulationFile& f) {
  json j;
  j["n"] = f.disc.n;
  j["punctured"] = f.disc.punctured;
  j["arcs"] = arc_strings(f);
  if (!f.labels.empty()) {
    j["labels"] = json::object();
    for (const auto& [name, verts] : f.labels) j["labels"][name] = verts;
  }
  return j;
}

bool looks_like_grid(const std::string& text) {
  std::string head = trim(text);
  if (!head.empty() && head.front() == '{') {
    try {
      return json::parse(text).contains("rows");
    } catch (const json::exception&) {
      return false;
    }
  }
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    return line.rfind("type", 0) == 0 || line.front() == '@' || std::isdigit(static_cast<unsigned char>(line.front()));
  }
  return false;
}

namespace {

BigInt parse_big(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; }))
    throw std::invalid_argument("not an integer: '" + s + "'");
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
}

char parse_type(const std::string& t) {
  if (t == "A" || t == "D") return t[0];
  throw std::invalid_argument("grid type must be A or D, got '" + t + "'");
}

}  // namespace

RawGrid parse_grid(const std::string& text) {
  RawGrid g;
  std::string head = trim(text);
  if (!head.empty() && head.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (j.contains("type")) {
      try {
        g.type = parse_type(j["type"].get<std::string>());
      } catch (const std::exception& e) {
        throw ParseError(std::string("type: ") + e.what());
      }
    }
    if (!j.contains("rows") || !j["rows"].is_array()) throw ParseError("rows: missing or not an array");
    for (std::size_t r = 0; r < j["rows"].size(); ++r) {
      const json& row = j["rows"][r];
      if (!row.is_array()) throw ParseError("rows[" + std::to_string(r) + "]: not an array");
      std::vector<BigInt> vals;
      for (std::size_t k = 0; k < row.size(); ++k) {
        try {
          vals.push_back(big_from_json(row[k]));
        } catch (const std::exception& e) {
          throw ParseError("rows[" + std::to_string(r) + "][" + std::to_string(k) + "]: " + e.what());
        }
      }
      g.rows.push_back(std::move(vals));
    }
    if (j.contains("offsets")) {
      if (!j["offsets"].is_array()) throw ParseError("offsets: not an array");
      for (const json& o : j["offsets"]) {
        if (!o.is_number_integer()) throw ParseError("offsets: entries must be integers");
        g.offsets.push_back(o.get<int>());
      }
      if (g.offsets.size() != g.rows.size()) throw ParseError("offsets: one per row required");
    }
    return g;
  }
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int with_offset = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string w;
    try {
      words >> w;
      if (w == "type") {
        if (!g.rows.empty()) throw std::invalid_argument("type must precede the rows");
        std::string t;
        words >> t;
        g.type = parse_type(t);
        continue;
      }
      std::vector<BigInt> vals;
      if (w.front() == '@') {
        g.offsets.push_back(std::stoi(w.substr(1)));
        ++with_offset;
      } else {
        vals.push_back(parse_big(w));
      }
      while (words >> w) vals.push_back(parse_big(w));
      g.rows.push_back(std::move(vals));
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (with_offset != 0 && with_offset != static_cast<int>(g.rows.size()))
    throw ParseError("either every row or no row carries an @offset");
  return g;
}

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return parse_big(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

json to_json(const FriezePatternD& p) {
  json values = json::object();
  for (const auto& [l, v] : p.entries()) values[to_string(l)] = to_json(v);
  return {{"type", "D"}, {"n", p.n()}, {"values", values}};
}

FriezePatternD pattern_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("values")) throw ParseError("pattern JSON needs n and values");
  int n = j["n"].get<int>();
  FriezePatternD p(n);
  for (const auto& [key, v] : j["values"].items()) {
    try {
      p.set(parse_label(key), big_from_json(v));
    } catch (const std::exception& e) {
      throw ParseError("values." + key + ": " + e.what());
    }
  }
  return p;
}

json to_json(const RelationReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations)
    violations.push_back({{"relation", v.relation}, {"at", v.at}, {"detail", v.detail}});
  return {{"checked", r.checked}, {"ok", r.ok()}, {"violations", violations}};
}

json to_json(const ConjectureReport& r) {
  json rows = json::array();
  for (const ConjectureRow& row : r.rows) {
    json mism = json::array();
    for (const Label& l : row.mismatches) mism.push_back(to_string(l));
    json arcs = json::array();
    for (const TaggedArc& a : row.triangulation.arcs) arcs.push_back(to_string(a));
    rows.push_back({{"arcs", arcs},
                    {"slice", row.slice},
                    {"status", row.status()},
                    {"centrals", row.centrals},
                    {"notches", row.notches},
                    {"verdict", row.equal ? "equal" : "mismatch"},
                    {"mismatches", mism}});
  }
  return {{"n", r.n},
          {"seeds", r.rows.size()},
          {"equal", r.equal_count()},
          {"slice_seeds", r.slice_count()},
          {"slice_mismatches", r.slice_mismatches()},
          {"rows", rows}};
}

}  // namespace dfrieze
