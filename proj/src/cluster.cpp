#include "dfrieze/cluster.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace dfrieze {

void validate_quiver(const Quiver& q) {
  int s = q.size();
  for (int x = 0; x < s; ++x) {
    if (static_cast<int>(q.b[x].size()) != s) throw std::invalid_argument("quiver matrix is not square");
    if (q.b[x][x] != 0) throw std::invalid_argument("quiver has a loop");
    for (int y = 0; y < s; ++y)
      if (q.b[x][y] != -q.b[y][x]) throw std::invalid_argument("quiver matrix is not skew-symmetric");
  }
}

Quiver mutate(const Quiver& q, int k) {
  int s = q.size();
  if (k < 0 || k >= s) throw std::out_of_range("mutation position out of range");
  Quiver out = q;
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y) {
      if (x == k || y == k) {
        out.b[x][y] = -q.b[x][y];
      } else {
        out.b[x][y] = q.b[x][y] + (std::abs(q.b[x][k]) * q.b[k][y] + q.b[x][k] * std::abs(q.b[k][y])) / 2;
      }
    }
  return out;
}

Seed initial_seed(int n) {
  validate_disc(Disc{n, true});
  Seed s;
  for (int k = 3; k <= n; ++k) s.labels.push_back(TaggedArc::chord(1, k));
  s.labels.push_back(TaggedArc::plain(1));
  s.labels.push_back(TaggedArc::notched(1));
  int size = static_cast<int>(s.labels.size());
  s.quiver.b.assign(size, std::vector<int>(size, 0));
  auto arrow = [&](int x, int y) {
    s.quiver.b[x][y] = 1;
    s.quiver.b[y][x] = -1;
  };
  for (int k = 0; k + 1 < n - 2; ++k) arrow(k, k + 1);
  arrow(n - 3, n - 2);
  arrow(n - 3, n - 1);
  s.values.assign(size, Rational(1));
  return s;
}

TaggedTriangulation seed_triangulation(const Seed& s) {
  TaggedTriangulation t{static_cast<int>(s.labels.size()), s.labels};
  std::sort(t.arcs.begin(), t.arcs.end());
  return t;
}

Seed mutate(const Seed& s, int k) {
  int size = s.quiver.size();
  if (k < 0 || k >= size) throw std::out_of_range("mutation position out of range");
  Rational up = 1, down = 1;
  for (int j = 0; j < size; ++j) {
    int b = s.quiver.b[j][k];
    for (int e = 0; e < std::abs(b); ++e) (b > 0 ? up : down) *= s.values[j];
  }
  Seed out;
  out.quiver = mutate(s.quiver, k);
  out.values = s.values;
  out.values[k] = (up + down) / s.values[k];
  if (out.values[k] <= 0) throw std::logic_error("mutation produced a non-positive value");
  out.labels = s.labels;
  out.labels[k] = flip_partner(seed_triangulation(s), s.labels[k]);
  return out;
}

namespace {

std::vector<TaggedArc> key_of(const Seed& s) {
  std::vector<TaggedArc> k = s.labels;
  std::sort(k.begin(), k.end());
  return k;
}

BigInt as_integer(const Rational& r, const TaggedArc& a) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::logic_error("specialised value of " + to_string(a) + " is not an integer");
  BigInt v = boost::multiprecision::numerator(r);
  if (v <= 0) throw std::logic_error("specialised value of " + to_string(a) + " is not positive");
  return v;
}

}  // namespace

SeedClosure explore(const Seed& root) {
  SeedClosure c;
  auto record = [&](const TaggedArc& a, const Rational& value) {
    BigInt v = as_integer(value, a);
    auto [it, fresh] = c.u.emplace(a, v);
    if (!fresh && it->second != v)
      throw std::logic_error("arc " + to_string(a) + " reached with values " + it->second.str() + " and " + v.str());
  };
  for (std::size_t k = 0; k < root.labels.size(); ++k) record(root.labels[k], root.values[k]);
  std::deque<std::vector<TaggedArc>> queue;
  auto root_key = key_of(root);
  c.seeds.emplace(root_key, root);
  queue.push_back(root_key);
  while (!queue.empty()) {
    Seed s = c.seeds.at(queue.front());
    queue.pop_front();
    for (int k = 0; k < s.quiver.size(); ++k) {
      Seed m = mutate(s, k);
      record(m.labels[k], m.values[k]);
      auto key = key_of(m);
      if (c.seeds.emplace(key, m).second) queue.push_back(key);
    }
  }
  return c;
}

std::map<TaggedArc, BigInt> specialise_all(int n) { return explore(initial_seed(n)).u; }

Label position_label(const TaggedArc& a) {
  switch (a.kind) {
    case TaggedKind::Chord: return {a.i, a.j};
    case TaggedKind::CentralPlain: return {a.i, 0};
    case TaggedKind::CentralNotched: return {a.i, a.i};
  }
  return {};
}

FriezePatternD pattern_from_values(int n, const std::map<TaggedArc, BigInt>& u) {
  std::map<Label, BigInt> entries;
  for (const auto& [a, v] : u) entries[position_label(a)] = v;
  return pattern_from_entries(n, entries);
}

bool is_dynkin_d(const Quiver& q) {
  int s = q.size();
  std::vector<std::vector<int>> adj(s);
  int edges = 0;
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y) {
      if (q.b[x][y] == 0) continue;
      if (std::abs(q.b[x][y]) != 1) return false;
      adj[x].push_back(y);
      if (x < y) ++edges;
    }
  if (edges != s - 1) return false;
  std::vector<char> seen(s, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) seen[y] = 1, ++reached, stack.push_back(y);
  }
  if (reached != s) return false;
  if (s <= 3) return true;
  std::vector<int> branch;
  for (int x = 0; x < s; ++x) {
    if (adj[x].size() > 3) return false;
    if (adj[x].size() == 3) branch.push_back(x);
  }
  if (branch.size() != 1) return false;
  int leaves = static_cast<int>(std::count_if(adj[branch[0]].begin(), adj[branch[0]].end(),
                                              [&](int y) { return adj[y].size() == 1; }));
  return leaves >= 2;
}

ClusterAtlas::ClusterAtlas(int n) : n_(n), closure_(explore(initial_seed(n))) {}

const Seed& ClusterAtlas::seed(const TaggedTriangulation& t) const {
  if (t.n != n_) throw std::invalid_argument("triangulation has a different n");
  auto it = closure_.seeds.find(t.arcs);
  if (it == closure_.seeds.end()) throw std::invalid_argument("triangulation not reached by mutation");
  return it->second;
}

bool ClusterAtlas::is_slice_seed(const TaggedTriangulation& t) const { return is_dynkin_d(seed(t).quiver); }

FriezePatternD ClusterAtlas::fc_pattern(const TaggedTriangulation& t) const {
  Seed s = seed(t);
  std::fill(s.values.begin(), s.values.end(), Rational(1));
  return pattern_from_values(n_, explore(s).u);
}

bool is_slice_seed(const TaggedTriangulation& t) { return ClusterAtlas(t.n).is_slice_seed(t); }

FriezePatternD fc_pattern(const TaggedTriangulation& t) { return ClusterAtlas(t.n).fc_pattern(t); }

std::size_t ConjectureReport::equal_count() const {
  return std::count_if(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.equal; });
}

std::size_t ConjectureReport::slice_count() const {
  return std::count_if(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.slice; });
}

std::size_t ConjectureReport::slice_mismatches() const {
  return std::count_if(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.slice && !r.equal; });
}

ConjectureReport conjecture_report(int n) {
  ClusterAtlas atlas(n);
  ConjectureReport rep;
  rep.n = n;
  for (const TaggedTriangulation& t : enumerate_tagged(n)) {
    ConjectureRow row;
    row.triangulation = t;
    row.slice = atlas.is_slice_seed(t);
    row.centrals = t.centrals();
    row.notches = t.notches();
    FriezePatternD f = frieze_of_tagged(t);
    FriezePatternD fc = atlas.fc_pattern(t);
    for (const Label& l : entry_labels(n))
      if (f.at(l) != fc.at(l)) row.mismatches.push_back(l);
    row.equal = row.mismatches.empty();
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace dfrieze
