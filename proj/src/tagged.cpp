#include "dfrieze/tagged.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dfrieze {

std::string to_string(const TaggedArc& a) {
  switch (a.kind) {
    case TaggedKind::Chord: return "chord " + std::to_string(a.i) + " " + std::to_string(a.j);
    case TaggedKind::CentralPlain: return "central+ " + std::to_string(a.i);
    case TaggedKind::CentralNotched: return "central- " + std::to_string(a.i);
  }
  return {};
}

TaggedArc parse_tagged_arc(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  TaggedArc a;
  if (kind == "chord") {
    a.kind = TaggedKind::Chord;
    if (!(in >> a.i >> a.j)) throw std::invalid_argument("chord needs two vertices: '" + std::string(text) + "'");
  } else if (kind == "central" || kind == "central+" || kind == "central-") {
    a.kind = kind == "central-" ? TaggedKind::CentralNotched : TaggedKind::CentralPlain;
    if (!(in >> a.i)) throw std::invalid_argument(kind + " needs a vertex: '" + std::string(text) + "'");
  } else {
    throw std::invalid_argument("unknown tagged arc kind '" + kind + "'");
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing text in arc '" + std::string(text) + "'");
  return a;
}

Arc underlying(const TaggedArc& a) {
  switch (a.kind) {
    case TaggedKind::Chord: return Arc::chord(a.i, a.j);
    case TaggedKind::CentralPlain: return Arc::central(a.i);
    case TaggedKind::CentralNotched: return Arc::loop(a.i);
  }
  return {};
}

void validate_tagged_arc(const TaggedArc& a, int n) { validate_arc(underlying(a), Disc{n, true}); }

bool tagged_compatible(const TaggedArc& a, const TaggedArc& b, int n) {
  if (a == b) return true;
  if (a.central() && b.central()) return a.kind == b.kind || a.i == b.i;
  return compatible(underlying(a), underlying(b), Disc{n, true});
}

std::vector<TaggedArc> tagged_universe(int n) {
  validate_disc(Disc{n, true});
  std::vector<TaggedArc> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j)
      if (j != i && j != wrap(i + 1, n)) out.push_back(TaggedArc::chord(i, j));
    out.push_back(TaggedArc::plain(i));
    out.push_back(TaggedArc::notched(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool TaggedTriangulation::contains(const TaggedArc& a) const {
  return std::binary_search(arcs.begin(), arcs.end(), a);
}

int TaggedTriangulation::notches() const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(),
                                        [](const TaggedArc& a) { return a.kind == TaggedKind::CentralNotched; }));
}

int TaggedTriangulation::centrals() const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [](const TaggedArc& a) { return a.central(); }));
}

TaggedTriangulation make_tagged_triangulation(int n, std::vector<TaggedArc> arcs) {
  validate_disc(Disc{n, true});
  for (const TaggedArc& a : arcs) {
    try {
      validate_tagged_arc(a, n);
    } catch (const std::exception& e) {
      throw TriangulationError("invalid tagged arc " + to_string(a) + ": " + e.what());
    }
  }
  std::sort(arcs.begin(), arcs.end());
  if (auto dup = std::adjacent_find(arcs.begin(), arcs.end()); dup != arcs.end())
    throw TriangulationError("duplicate arc: " + to_string(*dup));
  for (std::size_t x = 0; x < arcs.size(); ++x)
    for (std::size_t y = x + 1; y < arcs.size(); ++y)
      if (!tagged_compatible(arcs[x], arcs[y], n))
        throw TriangulationError("incompatible arcs: " + to_string(arcs[x]) + " and " + to_string(arcs[y]));
  for (const TaggedArc& c : tagged_universe(n)) {
    if (std::binary_search(arcs.begin(), arcs.end(), c)) continue;
    if (std::all_of(arcs.begin(), arcs.end(), [&](const TaggedArc& a) { return tagged_compatible(a, c, n); }))
      throw TriangulationError("not maximal: " + to_string(c) + " can be added");
  }
  if (static_cast<int>(arcs.size()) != n)
    throw TriangulationError("wrong cardinality: " + std::to_string(arcs.size()) + " arcs, expected " +
                             std::to_string(n));
  return {n, std::move(arcs)};
}

std::vector<TaggedTriangulation> enumerate_tagged(int n) {
  std::vector<TaggedArc> universe = tagged_universe(n);
  auto cliques = maximal_cliques(static_cast<int>(universe.size()), [&](int a, int b) {
    return tagged_compatible(universe[a], universe[b], n);
  });
  std::vector<TaggedTriangulation> out;
  for (const auto& c : cliques) {
    TaggedTriangulation t{n, {}};
    for (int k : c) t.arcs.push_back(universe[k]);
    std::sort(t.arcs.begin(), t.arcs.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.arcs < b.arcs; });
  return out;
}

TaggedArc flip_partner(const TaggedTriangulation& t, const TaggedArc& a) {
  if (!t.contains(a)) throw std::invalid_argument(to_string(a) + " is not in the triangulation");
  std::vector<TaggedArc> found;
  for (const TaggedArc& c : tagged_universe(t.n)) {
    if (t.contains(c)) continue;
    bool fits = std::all_of(t.arcs.begin(), t.arcs.end(),
                            [&](const TaggedArc& x) { return x == a || tagged_compatible(x, c, t.n); });
    if (fits) found.push_back(c);
  }
  if (found.size() != 1)
    throw std::logic_error("flip of " + to_string(a) + " found " + std::to_string(found.size()) + " replacements");
  return found.front();
}

TaggedTriangulation flip(const TaggedTriangulation& t, const TaggedArc& a) {
  TaggedArc b = flip_partner(t, a);
  TaggedTriangulation out = t;
  *std::find(out.arcs.begin(), out.arcs.end(), a) = b;
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

Triangulation plain_image(const TaggedTriangulation& t) {
  bool several = t.notches() >= 2;
  std::vector<Arc> arcs;
  for (const TaggedArc& a : t.arcs)
    arcs.push_back(several && a.kind == TaggedKind::CentralNotched ? Arc::central(a.i) : underlying(a));
  return make_triangulation(Disc{t.n, true}, std::move(arcs));
}

TaggedTriangulation tagged_from_plain(const Triangulation& t) {
  if (!t.disc.punctured) throw std::invalid_argument("tagged arcs need a punctured disc");
  std::vector<TaggedArc> arcs;
  for (const Arc& a : t.arcs) {
    switch (a.kind) {
      case ArcKind::Chord: arcs.push_back(TaggedArc::chord(a.i, a.j)); break;
      case ArcKind::Central: arcs.push_back(TaggedArc::plain(a.i)); break;
      case ArcKind::Loop: arcs.push_back(TaggedArc::notched(a.i)); break;
    }
  }
  return make_tagged_triangulation(t.disc.n, std::move(arcs));
}

FriezePatternD frieze_of_tagged(const TaggedTriangulation& t) {
  FriezePatternD p = build_frieze(build_complex(plain_image(t)));
  return t.notches() >= 2 ? iota(p) : p;
}

}  // namespace dfrieze
