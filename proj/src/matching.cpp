#include "dfrieze/matching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dfrieze {

std::string to_string(const Label& l) { return std::to_string(l.i) + "," + std::to_string(l.j); }

Label parse_label(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  Label l;
  std::string rest;
  if (!(in >> l.i >> l.j) || (in >> rest)) throw std::invalid_argument("bad label '" + text + "', expected i,j");
  return l;
}

IncidenceMatrix incidence_matrix(const std::vector<int>& vertices, const std::vector<Region>& regions) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("matched vertex listed twice");
  IncidenceMatrix m(vertices.size(), std::vector<int>(regions.size(), 0));
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (std::size_t r = 0; r < regions.size(); ++r)
      m[v][r] = static_cast<int>(std::count(regions[r].vertices.begin(), regions[r].vertices.end(), vertices[v]));
  return m;
}

BigInt count_matchings(const IncidenceMatrix& m) {
  if (m.empty()) return 1;
  std::size_t cols = m.front().size();
  if (cols > 64) throw std::length_error("more than 64 regions");
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  auto options = [&](std::size_t v) { return std::count_if(m[v].begin(), m[v].end(), [](int x) { return x > 0; }); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return options(a) < options(b); });

  std::unordered_map<std::uint64_t, BigInt> layer{{0, 1}};
  for (std::size_t v : order) {
    std::unordered_map<std::uint64_t, BigInt> next;
    for (const auto& [mask, count] : layer)
      for (std::size_t r = 0; r < cols; ++r) {
        if (m[v][r] == 0 || (mask >> r & 1u)) continue;
        next[mask | (std::uint64_t{1} << r)] += count * m[v][r];
      }
    layer = std::move(next);
    if (layer.empty()) return 0;
  }
  BigInt total = 0;
  for (const auto& [mask, count] : layer) total += count;
  return total;
}

BigInt count_matchings(const std::vector<int>& vertices, const std::vector<Region>& regions) {
  return count_matchings(incidence_matrix(vertices, regions));
}

BigInt ryser_permanent(const IncidenceMatrix& m) {
  std::size_t k = m.size();
  if (k == 0) return 1;
  std::vector<std::size_t> used;
  for (std::size_t c = 0; c < m.front().size(); ++c)
    if (std::any_of(m.begin(), m.end(), [&](const auto& row) { return row[c] != 0; })) used.push_back(c);
  std::size_t size = used.size();
  if (k > size) return 0;
  if (size > 30) throw std::length_error("Ryser oracle limited to 30 columns");
  std::vector<std::vector<long long>> a(size, std::vector<long long>(size, 1));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < size; ++c) a[r][c] = m[r][used[c]];

  double log_bound = static_cast<double>(size);
  for (const auto& row : a) log_bound += std::log2(static_cast<double>(std::accumulate(row.begin(), row.end(), 1LL)));
  bool narrow = log_bound < 120.0;

  // Gray-code walk over column subsets, tracking each row's sum over the subset.
  std::vector<long long> sums(size, 0);
  BigInt total = 0;
  __int128 total_narrow = 0;
  std::uint64_t prev = 0;
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << size); ++g) {
    std::uint64_t gray = g ^ (g >> 1);
    std::uint64_t flip = gray ^ prev;
    std::size_t col = static_cast<std::size_t>(__builtin_ctzll(flip));
    long long sign = (gray & flip) ? 1 : -1;
    for (std::size_t r = 0; r < size; ++r) sums[r] += sign * a[r][col];
    prev = gray;
    bool positive = (size - __builtin_popcountll(gray)) % 2 == 0;
    if (narrow) {
      __int128 prod = 1;
      for (std::size_t r = 0; r < size && prod != 0; ++r) prod *= sums[r];
      total_narrow += positive ? prod : -prod;
    } else {
      BigInt prod = 1;
      for (std::size_t r = 0; r < size && prod != 0; ++r) prod *= sums[r];
      if (positive) total += prod;
      else total -= prod;
    }
  }
  if (narrow) {
    bool neg = total_narrow < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(total_narrow) : total_narrow;
    total = static_cast<std::uint64_t>(mag >> 64);
    total <<= 64;
    total += static_cast<std::uint64_t>(mag);
    if (neg) total = -total;
  }
  BigInt pad = 1;
  for (std::size_t t = 2; t <= size - k; ++t) pad *= t;
  return total / pad;
}

std::vector<Matching> list_matchings(const std::vector<int>& vertices, const std::vector<Region>& regions) {
  IncidenceMatrix m = incidence_matrix(vertices, regions);
  std::vector<Matching> out;
  Matching cur;
  cur.vertices = vertices;
  std::vector<char> taken(regions.size(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == vertices.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < regions.size(); ++r) {
      if (taken[r]) continue;
      for (int c = 0; c < m[v][r]; ++c) {
        taken[r] = 1;
        cur.regions.push_back(static_cast<int>(r));
        cur.corners.push_back(c);
        go(v + 1);
        cur.regions.pop_back();
        cur.corners.pop_back();
        taken[r] = 0;
      }
    }
  };
  go(0);
  return out;
}

std::string format_matching(const Matching& m, const std::vector<Region>& regions,
                            const std::function<std::string(int)>& face_label) {
  std::string out;
  for (std::size_t k = 0; k < m.vertices.size(); ++k) {
    if (k) out += ' ';
    out += vertex_name(m.vertices[k]) + face_label(regions[m.regions[k]].face);
    if (m.corners[k] > 0) out += std::string(m.corners[k], '\'');
  }
  return out;
}

namespace {

std::vector<Region> face_regions(const FaceComplex& fc) {
  std::vector<Region> out;
  for (std::size_t f = 0; f < fc.faces().size(); ++f) out.push_back({static_cast<int>(f), 0, fc.faces()[f].incidence()});
  return out;
}

void check_label(const FaceComplex& fc, const Label& l) {
  int n = fc.n();
  if (!fc.disc().punctured) throw std::invalid_argument("matching numbers need a punctured disc");
  if (l.i < 1 || l.i > n || l.j < 0 || l.j > n) throw std::invalid_argument("label " + to_string(l) + " out of range");
}

}  // namespace

MatchingProblem matching_problem(const FaceComplex& fc, const Label& l) {
  check_label(fc, l);
  int n = fc.n();
  const Disc& disc = fc.disc();
  if (l.j == wrap(l.i + 1, n)) return {};
  if (l.j == 0) {
    PolygonCuts cuts = cut_p_q(fc, l.i);
    MatchingProblem p;
    for (int v : cuts.p.boundary)
      if (v != l.i && v != 0) p.vertices.push_back(v);
    p.regions = std::move(cuts.p.regions);
    return p;
  }
  if (l.j == l.i) {
    MatchingProblem p;
    p.vertices = interval_vertices(wrap(l.i + 1, n), wrap(l.i - 1, n), disc);
    p.vertices.push_back(0);
    p.regions = face_regions(fc);
    return p;
  }
  MatchingProblem p;
  p.vertices = interval_vertices(wrap(l.i + 1, n), wrap(l.j - 1, n), disc);
  p.regions = truncate_chord(fc, l.i, l.j).regions;
  return p;
}

BigInt matching_number(const FaceComplex& fc, const Label& l) {
  MatchingProblem p = matching_problem(fc, l);
  return count_matchings(p.vertices, p.regions);
}

std::vector<Label> entry_labels(int n) {
  std::vector<Label> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::map<Label, BigInt> matching_numbers(const FaceComplex& fc) {
  std::map<Label, BigInt> out;
  for (const Label& l : entry_labels(fc.n())) out[l] = matching_number(fc, l);
  return out;
}

MatchingProblem m_tilde_problem(const FaceComplex& fc, int i) {
  MatchingProblem p;
  for (int v = 1; v <= fc.n(); ++v)
    if (v != i) p.vertices.push_back(v);
  p.regions = truncate_loop(fc, i).regions;
  return p;
}

BigInt m_tilde(const FaceComplex& fc, int i) {
  MatchingProblem p = m_tilde_problem(fc, i);
  return count_matchings(p.vertices, p.regions);
}

BigInt polygon_pq_counts(const PolygonCut& cut, int x, int y) {
  auto on = [&](int v) { return std::find(cut.boundary.begin(), cut.boundary.end(), v) != cut.boundary.end(); };
  if (!on(x) || !on(y)) throw std::invalid_argument("omitted vertex not on the polygon boundary");
  std::vector<int> vertices;
  for (int v : cut.boundary)
    if (v != x && v != y) vertices.push_back(v);
  return count_matchings(vertices, cut.regions);
}

}  // namespace dfrieze
