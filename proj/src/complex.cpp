#include "dfrieze/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace dfrieze {

bool Triangulation::contains(const Arc& a) const {
  return std::binary_search(arcs.begin(), arcs.end(), canonical(a, disc));
}

Triangulation make_triangulation(const Disc& disc, std::vector<Arc> arcs) {
  validate_disc(disc);
  for (auto& a : arcs) {
    try {
      validate_arc(a, disc);
    } catch (const std::exception& e) {
      throw TriangulationError(std::string("invalid arc: ") + e.what());
    }
    a = canonical(a, disc);
  }
  std::sort(arcs.begin(), arcs.end());
  if (auto dup = std::adjacent_find(arcs.begin(), arcs.end()); dup != arcs.end())
    throw TriangulationError("duplicate arc: " + to_string(*dup));
  for (std::size_t x = 0; x < arcs.size(); ++x)
    for (std::size_t y = x + 1; y < arcs.size(); ++y)
      if (!compatible(arcs[x], arcs[y], disc))
        throw TriangulationError("incompatible arcs: " + to_string(arcs[x]) + " and " + to_string(arcs[y]));
  for (const Arc& c : arc_universe(disc)) {
    if (std::binary_search(arcs.begin(), arcs.end(), c)) continue;
    bool fits = std::all_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return compatible(a, c, disc); });
    if (fits) throw TriangulationError("not maximal: " + to_string(c) + " can be added");
  }
  std::size_t expected = disc.punctured ? disc.n : disc.n - 3;
  if (arcs.size() != expected)
    throw TriangulationError("wrong cardinality: " + std::to_string(arcs.size()) + " arcs, expected " +
                             std::to_string(expected));
  return {disc, std::move(arcs)};
}

std::vector<std::vector<int>> maximal_cliques(int count, const std::function<bool(int, int)>& adjacent) {
  std::vector<std::vector<char>> adj(count, std::vector<char>(count, 0));
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b) adj[a][b] = adj[b][a] = adjacent(a, b) ? 1 : 0;

  std::vector<std::vector<int>> out;
  std::vector<int> r;
  std::function<void(std::vector<int>, std::vector<int>)> bk = [&](std::vector<int> p, std::vector<int> x) {
    if (p.empty()) {
      if (x.empty()) {
        out.push_back(r);
        std::sort(out.back().begin(), out.back().end());
      }
      return;
    }
    int pivot = p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x})
      for (int u : *set) {
        std::size_t c = std::count_if(p.begin(), p.end(), [&](int v) { return adj[u][v]; });
        if (c >= best) best = c, pivot = u;
      }
    std::vector<int> candidates;
    for (int v : p)
      if (!adj[pivot][v]) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> np, nx;
      for (int u : p)
        if (adj[v][u]) np.push_back(u);
      for (int u : x)
        if (adj[v][u]) nx.push_back(u);
      r.push_back(v);
      bk(std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<int> all(count);
  for (int v = 0; v < count; ++v) all[v] = v;
  bk(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangulation> enumerate_triangulations(const Disc& disc) {
  std::vector<Arc> universe = arc_universe(disc);
  auto cliques = maximal_cliques(static_cast<int>(universe.size()), [&](int a, int b) {
    return compatible(universe[a], universe[b], disc);
  });
  std::vector<Triangulation> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) {
    Triangulation t{disc, {}};
    for (int k : c) t.arcs.push_back(universe[k]);
    std::sort(t.arcs.begin(), t.arcs.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const Triangulation& a, const Triangulation& b) { return a.arcs < b.arcs; });
  return out;
}

std::vector<int> Face::incidence() const {
  std::vector<int> out;
  for (const Corner& c : corners) out.push_back(c.vertex);
  std::sort(out.begin(), out.end());
  return out;
}

bool Face::touches(int v) const {
  return std::any_of(corners.begin(), corners.end(), [&](const Corner& c) { return c.vertex == v; });
}

namespace {

using EndKey = std::tuple<int, int>;

EndKey end_key(const End& e, const Triangulation& t) {
  const Arc& a = t.arcs[e.arc];
  int len = lifted_length(a, t.disc.n);
  switch (e.kind) {
    case EndKind::Depart: return {1, len};
    case EndKind::Central: return {2, 0};
    case EndKind::Arrive: return {3, -len};
    case EndKind::Puncture: return {0, a.i};
    default: return {0, 0};
  }
}

std::string default_label(int k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + k % 26));
    k = k / 26 - 1;
  } while (k >= 0);
  return s;
}

}  // namespace

FaceComplex::FaceComplex(Triangulation t) : t_(std::move(t)) {
  int n = t_.disc.n;
  std::vector<std::vector<std::pair<EndKey, End>>> ends(n + 1);
  auto add = [&](int v, End e) { ends[v].emplace_back(end_key(e, t_), e); };
  for (int idx = 0; idx < static_cast<int>(t_.arcs.size()); ++idx) {
    const Arc& a = t_.arcs[idx];
    switch (a.kind) {
      case ArcKind::Chord:
        add(a.i, {EndKind::Depart, idx});
        add(a.j, {EndKind::Arrive, idx});
        break;
      case ArcKind::Loop:
        add(a.i, {EndKind::Depart, idx});
        add(a.i, {EndKind::Arrive, idx});
        break;
      case ArcKind::Central:
        add(a.i, {EndKind::Central, idx});
        add(0, {EndKind::Puncture, idx});
        break;
    }
  }
  rotation_.assign(n + 1, {});
  for (int v = 0; v <= n; ++v) {
    std::stable_sort(ends[v].begin(), ends[v].end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    if (v > 0) rotation_[v].push_back({EndKind::BoundaryNext, -1});
    for (const auto& [key, e] : ends[v]) rotation_[v].push_back(e);
    if (v > 0) rotation_[v].push_back({EndKind::BoundaryPrev, -1});
  }

  face_of_.assign(n + 1, {});
  for (int v = 0; v <= n; ++v) face_of_[v].assign(sector_count(v), -1);
  for (int v = 0; v <= n; ++v) {
    for (int s = 0; s < sector_count(v); ++s) {
      if (face_of_[v][s] >= 0) continue;
      Face f;
      Corner c{v, s};
      while (face_of_[c.vertex][c.sector] < 0) {
        face_of_[c.vertex][c.sector] = static_cast<int>(faces_.size());
        f.corners.push_back(c);
        c = next(c);
      }
      faces_.push_back(std::move(f));
    }
  }

  std::size_t expected = t_.disc.punctured ? n : n - 2;
  if (faces_.size() != expected)
    throw std::logic_error("face tracing produced " + std::to_string(faces_.size()) + " faces, expected " +
                           std::to_string(expected));
  for (Face& f : faces_) {
    if (f.corners.size() != 3) throw std::logic_error("face tracing produced a face with " +
                                                      std::to_string(f.corners.size()) + " corners");
    std::vector<int> inc = f.incidence();
    std::set<int> distinct(inc.begin(), inc.end());
    if (distinct.size() == 3) {
      f.type = FaceType::Ordinary;
    } else if (distinct.size() == 2) {
      f.type = distinct.count(0) ? FaceType::SelfFolded : FaceType::LoopType;
    } else {
      throw std::logic_error("degenerate face");
    }
  }

  std::vector<int> order(faces_.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return faces_[a].incidence() < faces_[b].incidence(); });
  labels_.resize(faces_.size());
  for (std::size_t k = 0; k < order.size(); ++k) labels_[order[k]] = default_label(static_cast<int>(k));
}

int FaceComplex::sector_count(int v) const {
  int size = static_cast<int>(rotation_.at(v).size());
  return v == 0 ? size : size - 1;
}

int FaceComplex::face_of(Corner c) const { return face_of_.at(c.vertex).at(c.sector); }

int FaceComplex::end_index(int v, EndKind kind, int arc) const {
  const auto& rot = rotation_.at(v);
  for (std::size_t k = 0; k < rot.size(); ++k)
    if (rot[k].kind == kind && rot[k].arc == arc) return static_cast<int>(k);
  return -1;
}

int FaceComplex::arc_index(const Arc& a) const {
  Arc c = canonical(a, t_.disc);
  auto it = std::lower_bound(t_.arcs.begin(), t_.arcs.end(), c);
  if (it == t_.arcs.end() || *it != c) return -1;
  return static_cast<int>(it - t_.arcs.begin());
}

std::pair<int, int> FaceComplex::partner(int v, int e) const {
  const End& end = rotation_.at(v).at(e);
  int n = t_.disc.n;
  switch (end.kind) {
    case EndKind::BoundaryNext: {
      int w = wrap(v + 1, n);
      return {w, static_cast<int>(rotation_[w].size()) - 1};
    }
    case EndKind::BoundaryPrev: return {wrap(v - 1, n), 0};
    case EndKind::Depart: {
      const Arc& a = t_.arcs[end.arc];
      int w = a.kind == ArcKind::Chord ? a.j : a.i;
      return {w, end_index(w, EndKind::Arrive, end.arc)};
    }
    case EndKind::Arrive: {
      int w = t_.arcs[end.arc].i;
      return {w, end_index(w, EndKind::Depart, end.arc)};
    }
    case EndKind::Central: return {0, end_index(0, EndKind::Puncture, end.arc)};
    case EndKind::Puncture: {
      int w = t_.arcs[end.arc].i;
      return {w, end_index(w, EndKind::Central, end.arc)};
    }
  }
  return {-1, -1};
}

Corner FaceComplex::next(Corner c) const {
  auto [w, t] = partner(c.vertex, c.sector);
  if (w == 0) {
    int size = static_cast<int>(rotation_[0].size());
    return {0, (t - 1 + size) % size};
  }
  return {w, t - 1};
}

int FaceComplex::d0() const {
  std::set<int> at0;
  for (int s = 0; s < sector_count(0); ++s) at0.insert(face_of({0, s}));
  return static_cast<int>(at0.size());
}

std::vector<int> FaceComplex::degrees() const {
  std::vector<int> out;
  for (int v = 1; v <= n(); ++v) out.push_back(degree(v));
  return out;
}

void FaceComplex::set_label(int face, std::string label) { labels_.at(face) = std::move(label); }

int FaceComplex::find_face(std::vector<int> incidence) const {
  std::sort(incidence.begin(), incidence.end());
  for (std::size_t f = 0; f < faces_.size(); ++f)
    if (faces_[f].incidence() == incidence) return static_cast<int>(f);
  return -1;
}

FaceComplex build_complex(const Triangulation& t) { return FaceComplex(t); }

std::string vertex_name(int v) {
  if (v == 0) return "O";
  if (v < 0) return std::to_string(-v) + "'";
  return std::to_string(v);
}

std::vector<int> Subdivision::split_faces() const {
  std::map<int, int> uses;
  for (const Region& r : regions) ++uses[r.face];
  std::vector<int> out;
  for (auto [f, c] : uses)
    if (c > 1) out.push_back(f);
  return out;
}

namespace {

EndKey key_of(const FaceComplex& fc, const End& e) { return end_key(e, fc.triangulation()); }

// Sector in which an arc end with the given key would leave v.
int insertion_sector(const FaceComplex& fc, int v, EndKey key) {
  const auto& rot = fc.rotation(v);
  int p = 1;
  while (p < static_cast<int>(rot.size()) - 1 && key_of(fc, rot[p]) < key) ++p;
  return p - 1;
}

Region whole_region(const FaceComplex& fc, int f) { return {f, 0, fc.faces()[f].incidence()}; }

Subdivision truncate_along(const FaceComplex& fc, int i, int j, const Arc& cut) {
  const Disc& disc = fc.disc();
  int n = disc.n;
  int len = lifted_length(cut, n);
  std::vector<int> corridor;
  for (int k = 1; k < len; ++k) corridor.push_back(wrap(i + k, n));

  Subdivision out;
  out.cut = to_string(cut);
  out.boundary.push_back(i);
  out.boundary.insert(out.boundary.end(), corridor.begin(), corridor.end());
  out.boundary.push_back(j);

  std::set<Corner> retained;
  for (int v : corridor)
    for (int s = 0; s < fc.sector_count(v); ++s) retained.insert({v, s});

  int idx = fc.arc_index(cut);
  if (idx >= 0) {
    int p = fc.end_index(i, EndKind::Depart, idx);
    int q = fc.end_index(j, EndKind::Arrive, idx);
    for (int s = 0; s < p; ++s) retained.insert({i, s});
    for (int s = q; s < fc.sector_count(j); ++s) retained.insert({j, s});
    for (std::size_t f = 0; f < fc.faces().size(); ++f) {
      const Face& face = fc.faces()[f];
      int inside = static_cast<int>(std::count_if(face.corners.begin(), face.corners.end(),
                                                  [&](const Corner& c) { return retained.count(c) > 0; }));
      if (inside == 0) continue;
      if (inside != 3) throw std::logic_error("face straddles an arc of the triangulation");
      out.regions.push_back(whole_region(fc, static_cast<int>(f)));
    }
    return out;
  }

  int sd = insertion_sector(fc, i, {1, len});
  int sa = insertion_sector(fc, j, {3, -len});
  for (int s = 0; s < sd; ++s) retained.insert({i, s});
  for (int s = sa + 1; s < fc.sector_count(j); ++s) retained.insert({j, s});

  const auto& arcs = fc.triangulation().arcs;
  std::vector<char> crossed(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) crossed[a] = crossing_count(cut, arcs[a], disc) > 0;

  std::vector<Corner> crossings;
  for (int v : corridor) {
    std::vector<int> hit;
    const auto& rot = fc.rotation(v);
    for (int s = 0; s < static_cast<int>(rot.size()); ++s)
      if (rot[s].arc >= 0 && crossed[rot[s].arc]) hit.push_back(s);
    if (hit.empty()) continue;
    if (hit.back() - hit.front() + 1 != static_cast<int>(hit.size()))
      throw std::logic_error("crossing ends at vertex " + std::to_string(v) + " are not contiguous");
    for (auto it = hit.rbegin(); it != hit.rend(); ++it) crossings.push_back({v, *it});
  }

  std::vector<Corner> entries{{i, sd}}, exits;
  for (const Corner& c : crossings) {
    entries.push_back({c.vertex, c.sector - 1});
    exits.push_back(c);
  }
  exits.push_back({j, sa});

  std::map<int, int> occurrences;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    Corner cur = entries[k];
    int f = fc.face_of(cur);
    if (fc.face_of(exits[k]) != f) throw std::logic_error("cut segment leaves its face");
    Region r{f, occurrences[f]++, {cur.vertex}};
    for (int steps = 0; cur != exits[k]; ++steps) {
      if (steps >= 4) throw std::logic_error("cut segment does not close");
      cur = fc.next(cur);
      r.vertices.push_back(cur.vertex);
    }
    std::sort(r.vertices.begin(), r.vertices.end());
    out.regions.push_back(std::move(r));
  }
  for (std::size_t f = 0; f < fc.faces().size(); ++f) {
    if (occurrences.count(static_cast<int>(f))) continue;
    const Face& face = fc.faces()[f];
    int inside = static_cast<int>(std::count_if(face.corners.begin(), face.corners.end(),
                                                [&](const Corner& c) { return retained.count(c) > 0; }));
    if (inside == 0) continue;
    if (inside != 3) throw std::logic_error("uncrossed face straddles the cut");
    out.regions.push_back(whole_region(fc, static_cast<int>(f)));
  }
  return out;
}

void require_punctured(const FaceComplex& fc, const char* what) {
  if (!fc.disc().punctured) throw std::invalid_argument(std::string(what) + " needs a punctured disc");
}

}  // namespace

Subdivision truncate_chord(const FaceComplex& fc, int i, int j) {
  require_punctured(fc, "truncate_chord");
  Arc cut = Arc::chord(i, j);
  validate_arc(cut, fc.disc());
  return truncate_along(fc, i, j, cut);
}

Subdivision truncate_loop(const FaceComplex& fc, int i) {
  require_punctured(fc, "truncate_loop");
  Arc cut = Arc::loop(i);
  validate_arc(cut, fc.disc());
  return truncate_along(fc, i, i, cut);
}

PolygonCuts cut_p_q(const FaceComplex& fc, int i) {
  require_punctured(fc, "cut_p_q");
  const Disc& disc = fc.disc();
  if (i < 1 || i > disc.n) throw std::out_of_range("vertex " + std::to_string(i) + " out of range");
  const auto& arcs = fc.triangulation().arcs;
  std::vector<int> feet;
  for (const Arc& a : arcs)
    if (a.kind == ArcKind::Central) feet.push_back(a.i);
  std::sort(feet.begin(), feet.end());

  if (feet.size() >= 2) {
    int k = feet.back();
    for (int f : feet)
      if (f <= i) k = f;
    auto after = std::upper_bound(feet.begin(), feet.end(), k);
    int j = after == feet.end() ? feet.front() : *after;
    int ck = fc.arc_index(Arc::central(k)), cj = fc.arc_index(Arc::central(j));

    std::map<int, std::vector<int>> faces_on_arc;
    for (std::size_t f = 0; f < fc.faces().size(); ++f)
      for (const Corner& c : fc.faces()[f].corners) {
        int a = fc.rotation(c.vertex)[c.sector].arc;
        if (a >= 0) faces_on_arc[a].push_back(static_cast<int>(f));
      }
    int start = fc.face_of({0, fc.end_index(0, EndKind::Puncture, ck)});
    std::set<int> inside{start};
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (const auto& [a, fs] : faces_on_arc) {
        if (a == ck || a == cj || std::find(fs.begin(), fs.end(), f) == fs.end()) continue;
        for (int g : fs)
          if (inside.insert(g).second) stack.push_back(g);
      }
    }
    PolygonCuts out;
    out.p.kind = PolygonCut::Kind::P;
    out.p.boundary = interval_vertices(k, j, disc);
    out.p.boundary.push_back(0);
    PolygonCut q;
    q.kind = PolygonCut::Kind::Q;
    q.boundary = interval_vertices(j, k, disc);
    q.boundary.push_back(0);
    for (std::size_t f = 0; f < fc.faces().size(); ++f) {
      Region r = whole_region(fc, static_cast<int>(f));
      (inside.count(static_cast<int>(f)) ? out.p : q).regions.push_back(std::move(r));
    }
    out.q = std::move(q);
    return out;
  }

  int k = feet.front();
  int cidx = fc.end_index(k, EndKind::Central, fc.arc_index(Arc::central(k)));
  PolygonCuts out;
  out.p.kind = PolygonCut::Kind::P;
  out.p.boundary.push_back(-k);
  for (int t = 1; t < disc.n; ++t) out.p.boundary.push_back(wrap(k + t, disc.n));
  out.p.boundary.push_back(k);
  out.p.boundary.push_back(0);
  for (std::size_t f = 0; f < fc.faces().size(); ++f) {
    Region r{static_cast<int>(f), 0, {}};
    for (const Corner& c : fc.faces()[f].corners)
      r.vertices.push_back(c.vertex == k && c.sector < cidx ? -k : c.vertex);
    std::sort(r.vertices.begin(), r.vertices.end());
    out.p.regions.push_back(std::move(r));
  }
  return out;
}

}  // namespace dfrieze
