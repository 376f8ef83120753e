#include "dfrieze/frieze.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>
#include <set>
#include <sstream>

namespace dfrieze {

FriezePatternD::FriezePatternD(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("type D pattern needs n >= 3");
}

Label FriezePatternD::label(int i, int j, int n) { return {wrap(i, n), j == 0 ? 0 : wrap(j, n)}; }

bool FriezePatternD::has(const Label& l) const {
  Label k = label(l.i, l.j, n_);
  return k.j == wrap(k.i + 1, n_) || entries_.count(k) > 0;
}

const BigInt& FriezePatternD::at(const Label& l) const {
  static const BigInt one = 1;
  Label k = label(l.i, l.j, n_);
  if (k.j == wrap(k.i + 1, n_)) return one;
  auto it = entries_.find(k);
  if (it == entries_.end()) throw std::invalid_argument("missing entry " + to_string(k));
  return it->second;
}

void FriezePatternD::set(const Label& l, BigInt v) { entries_[label(l.i, l.j, n_)] = std::move(v); }

const BigInt& FriezePatternD::m(long i, long j) const {
  return at({wrap(i, n_), wrap(j, n_)});
}

const BigInt& FriezePatternD::z(long i) const { return at({wrap(i, n_), 0}); }

FriezePatternD pattern_from_entries(int n, const std::map<Label, BigInt>& entries) {
  FriezePatternD p(n);
  for (const auto& [l, v] : entries) p.set(l, v);
  for (int i = 1; i <= n; ++i) p.set({i, wrap(i + 1, n)}, 1);
  return p;
}

FriezePatternD build_frieze(const FaceComplex& fc) { return pattern_from_entries(fc.n(), matching_numbers(fc)); }

std::string RelationReport::summary() const {
  std::ostringstream out;
  out << checked << " relations checked, " << violations.size() << " violations";
  return out.str();
}

namespace {

std::string show(const BigInt& v) { return v.str(); }

void check(RelationReport& rep, const std::string& name, std::vector<long> at, const BigInt& lhs, const BigInt& rhs) {
  ++rep.checked;
  if (lhs != rhs) rep.violations.push_back({name, std::move(at), show(lhs) + " != " + show(rhs)});
}

}  // namespace

RelationReport verify_relations(const FriezePatternD& p) {
  RelationReport rep;
  int n = p.n();
  for (const Label& l : entry_labels(n))
    if (!p.has(l)) throw std::invalid_argument("pattern is missing entry " + to_string(l));
  for (const Label& l : entry_labels(n)) {
    ++rep.checked;
    if (p.at(l) <= 0) rep.violations.push_back({"positive", {l.i, l.j}, "entry is " + show(p.at(l))});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == wrap(i - 1, n) || j == i || j == wrap(i + 1, n)) continue;
      check(rep, "eq1", {i, j}, p.m(i, j) * p.m(i + 1, j + 1), p.m(i + 1, j) * p.m(i, j + 1) + 1);
    }
    check(rep, "eq2", {i}, p.m(i, i - 1) * p.m(i + 1, i), p.m(i + 1, i - 1) * p.m(i, i) * p.z(i) + 1);
    check(rep, "eq3", {i}, p.m(i, i) * p.z(i + 1), p.m(i + 1, i) + 1);
    check(rep, "eq4", {i}, p.z(i) * p.m(i + 1, i + 1), p.m(i + 1, i) + 1);
  }
  return rep;
}

void apply_default_offsets(RawGrid& g) {
  if (!g.offsets.empty()) return;
  int rows = static_cast<int>(g.rows.size());
  for (int r = 0; r < rows; ++r) g.offsets.push_back(g.type == 'D' && r == rows - 1 ? r - 1 : r);
}

RelationReport verify_raw_grid(const RawGrid& input) {
  RawGrid g = input;
  apply_default_offsets(g);
  int rows = static_cast<int>(g.rows.size());
  if (g.type != 'A' && g.type != 'D') throw std::invalid_argument("malformed grid: type must be A or D");
  if (rows < (g.type == 'D' ? 4 : 3)) throw std::invalid_argument("malformed grid: too few rows");
  if (static_cast<int>(g.offsets.size()) != rows) throw std::invalid_argument("malformed grid: offset count");
  for (int r = 0; r < rows; ++r)
    if (g.rows[r].empty()) throw std::invalid_argument("malformed grid: row " + std::to_string(r) + " is empty");
  int last_stagger = g.type == 'D' ? rows - 2 : rows - 1;
  for (int r = 1; r <= last_stagger; ++r)
    if ((g.offsets[r] - g.offsets[r - 1]) % 2 == 0)
      throw std::invalid_argument("malformed grid: rows " + std::to_string(r - 1) + " and " + std::to_string(r) +
                                  " are not staggered");
  if (g.type == 'D' && (g.offsets[rows - 1] - g.offsets[rows - 2]) % 2 != 0)
    throw std::invalid_argument("malformed grid: bottom rows must be aligned");

  auto get = [&](int r, long pos) -> const BigInt* {
    if (r < 0 || r >= rows) return nullptr;
    long d = pos - g.offsets[r];
    if (d < 0 || d % 2 != 0 || d / 2 >= static_cast<long>(g.rows[r].size())) return nullptr;
    return &g.rows[r][d / 2];
  };
  auto pos_of = [&](int r, std::size_t k) { return static_cast<long>(g.offsets[r]) + 2 * static_cast<long>(k); };

  RelationReport rep;
  auto ones = [&](int r) {
    for (std::size_t k = 0; k < g.rows[r].size(); ++k) check(rep, "ones", {r, pos_of(r, k)}, g.rows[r][k], 1);
  };
  auto diamond = [&](int r, const std::string& name, bool doubled) {
    for (std::size_t k = 0; k + 1 < g.rows[r].size(); ++k) {
      long p = pos_of(r, k) + 1;
      const BigInt* b = get(r - 1, p);
      const BigInt* c = get(r + 1, p);
      const BigInt* c2 = doubled ? get(r + 2, p) : nullptr;
      if (!b || !c || (doubled && !c2)) continue;
      BigInt below = doubled ? *c * *c2 : *c;
      check(rep, name, {r, p}, g.rows[r][k] * g.rows[r][k + 1], *b * below + 1);
    }
  };

  ones(0);
  if (g.type == 'A') {
    ones(rows - 1);
    for (int r = 1; r + 1 < rows; ++r) diamond(r, "diamond", false);
    return rep;
  }
  int nn = rows - 1;
  for (int r = 1; r <= nn - 3; ++r) diamond(r, "eq1", false);
  diamond(nn - 2, "eq2", true);
  for (int r : {nn - 1, nn})
    for (std::size_t k = 0; k + 1 < g.rows[r].size(); ++k) {
      long p = pos_of(r, k) + 1;
      const BigInt* above = get(nn - 2, p);
      if (!above) continue;
      check(rep, r == nn - 1 ? "eq3" : "eq4", {r, p}, g.rows[r][k] * g.rows[r][k + 1], *above + 1);
    }
  return rep;
}

std::map<int, BigInt> bci_labels(const FaceComplex& fc, int base) {
  int n = fc.n();
  if (base < 1 || base > n) throw std::out_of_range("base vertex out of range");
  std::map<int, BigInt> lab{{base, 0}, {wrap(base + 1, n), 1}, {wrap(base - 1, n), 1}};
  for (const Arc& a : fc.triangulation().arcs) {
    if (a.kind != ArcKind::Chord) continue;
    if (a.i == base) lab[a.j] = 1;
    if (a.j == base) lab[a.i] = 1;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Face& f : fc.faces()) {
      std::vector<int> inc = f.incidence();
      inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
      std::vector<int> missing;
      BigInt sum = 0;
      for (int v : inc) {
        if (v == 0) continue;
        if (auto it = lab.find(v); it != lab.end()) sum += it->second;
        else missing.push_back(v);
      }
      if (missing.size() == 1 && inc.size() == 3) {
        lab[missing.front()] = sum;
        progress = true;
      }
    }
  }
  if (static_cast<int>(lab.size()) != n) throw std::logic_error("label propagation did not reach every vertex");
  lab.erase(base);
  return lab;
}

namespace {

std::vector<Region> all_faces(const FaceComplex& fc) {
  std::vector<Region> out;
  for (std::size_t f = 0; f < fc.faces().size(); ++f) out.push_back({static_cast<int>(f), 0, fc.faces()[f].incidence()});
  return out;
}

}  // namespace

BigInt type_a_number(const FaceComplex& fc, int i, int j) {
  if (i == j) throw std::invalid_argument("type A numbers need distinct vertices");
  int n = fc.n();
  if (j == wrap(i + 1, n)) return 1;
  return count_matchings(interval_vertices(wrap(i + 1, n), wrap(j - 1, n), fc.disc()), all_faces(fc));
}

BigInt n_ij(const FaceComplex& fc, int i, int j) {
  if (i == j) throw std::invalid_argument("n_ij needs distinct vertices");
  std::vector<int> rest;
  for (int v = 1; v <= fc.n(); ++v)
    if (v != i && v != j) rest.push_back(v);
  return count_matchings(rest, all_faces(fc));
}

FriezePatternD iota(const FriezePatternD& p) {
  FriezePatternD out = p;
  for (int i = 1; i <= p.n(); ++i) {
    out.set({i, i}, p.z(i));
    out.set({i, 0}, p.m(i, i));
  }
  return out;
}

std::optional<Label> layout_label(int n, int row, long pos) {
  if (row >= 1 && row <= n - 2) {
    long d = pos - 1 - row;
    if (d % 2 != 0) return std::nullopt;
    long i = d / 2;
    return Label{wrap(i, n), wrap(i + 1 + row, n)};
  }
  if (row == n - 1 || row == n) {
    long d = pos - n;
    if (d % 2 != 0) return std::nullopt;
    long c = d / 2;
    bool loop_on_top = ((c % 2) + 2) % 2 == 1;
    bool loop_here = (row == n - 1) == loop_on_top;
    int i = wrap(c, n);
    return Label{i, loop_here ? i : 0};
  }
  return std::nullopt;
}

std::vector<Label> Slice::labels() const {
  std::vector<Label> out;
  long pos = start;
  auto put = [&](int row, long p) {
    auto l = layout_label(n, row, p);
    if (!l) throw std::invalid_argument("slice leaves the layout lattice");
    out.push_back(*l);
  };
  put(1, pos);
  for (std::size_t r = 0; r < steps.size(); ++r) {
    pos += steps[r];
    put(static_cast<int>(r) + 2, pos);
  }
  put(n - 1, pos + upper);
  put(n, pos + lower);
  return out;
}

std::vector<Slice> enumerate_slices(int n) {
  if (n < 3) throw std::invalid_argument("slices need n >= 3");
  std::map<std::vector<Label>, Slice> seen;
  int depth = n - 3;
  for (long i = 1; i <= 2 * n; ++i) {
    for (long bits = 0; bits < (1L << depth); ++bits) {
      Slice s{n, 2 * i + 2, {}, 1, 1};
      for (int r = 0; r < depth; ++r) s.steps.push_back((bits >> r & 1) ? 1 : -1);
      for (int up : {-1, 1})
        for (int lo : {-1, 1}) {
          s.upper = up;
          s.lower = lo;
          std::vector<Label> key = s.labels();
          std::sort(key.begin(), key.end());
          seen.emplace(key, s);
        }
    }
  }
  std::vector<Slice> out;
  for (auto& [k, s] : seen) out.push_back(s);
  return out;
}

std::map<Label, BigInt> slice_values(const FriezePatternD& p, const Slice& s) {
  std::map<Label, BigInt> out;
  for (const Label& l : s.labels()) out[l] = p.at(l);
  return out;
}

namespace {

// prod(lhs) == prod(rhs) + 1
struct Relation {
  std::vector<Label> lhs;
  std::vector<Label> rhs;
};

std::vector<Relation> relations(int n) {
  auto L = [n](long i, long j) { return FriezePatternD::label(static_cast<int>(wrap(i, n)), static_cast<int>(wrap(j, n)), n); };
  auto Z = [n](long i) { return Label{wrap(i, n), 0}; };
  std::vector<Relation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == wrap(i - 1, n) || j == i || j == wrap(i + 1, n)) continue;
      out.push_back({{L(i, j), L(i + 1, j + 1)}, {L(i + 1, j), L(i, j + 1)}});
    }
    out.push_back({{L(i, i - 1), L(i + 1, i)}, {L(i + 1, i - 1), L(i, i), Z(i)}});
    out.push_back({{L(i, i), Z(i + 1)}, {L(i + 1, i)}});
    out.push_back({{Z(i), L(i + 1, i + 1)}, {L(i + 1, i)}});
  }
  return out;
}

}  // namespace

FriezePatternD frieze_from_slice(int n, const std::map<Label, BigInt>& values) {
  if (static_cast<int>(values.size()) != n) throw ReconstructionError("a slice has exactly n entries");
  std::map<Label, BigInt> known;
  for (int i = 1; i <= n; ++i) known[{i, wrap(i + 1, n)}] = 1;
  for (const auto& [l, v] : values) {
    if (l.i < 1 || l.i > n || l.j < 0 || l.j > n) throw ReconstructionError("slice label " + to_string(l) + " out of range");
    if (v <= 0) throw ReconstructionError("slice value at " + to_string(l) + " is not positive");
    known[l] = v;
  }
  std::vector<Relation> rels = relations(n);
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Relation& rel : rels) {
      std::vector<std::pair<bool, Label>> unknown;
      for (const Label& l : rel.lhs)
        if (!known.count(l)) unknown.push_back({true, l});
      for (const Label& l : rel.rhs)
        if (!known.count(l)) unknown.push_back({false, l});
      if (unknown.size() != 1) continue;
      auto [on_left, target] = unknown.front();
      BigInt left = 1, right = 1;
      for (const Label& l : rel.lhs)
        if (l != target) left *= known.at(l);
      for (const Label& l : rel.rhs)
        if (l != target) right *= known.at(l);
      BigInt num = on_left ? BigInt(right + 1) : BigInt(left - 1);
      BigInt den = on_left ? left : right;
      if (num % den != 0) throw ReconstructionError("non-integral value at " + to_string(target));
      BigInt v = num / den;
      if (v <= 0) throw ReconstructionError("non-positive value at " + to_string(target));
      known[target] = v;
      progress = true;
    }
  }
  for (const Label& l : entry_labels(n))
    if (!known.count(l)) throw ReconstructionError("propagation stuck before " + to_string(l));
  FriezePatternD p = pattern_from_entries(n, known);
  RelationReport rep = verify_relations(p);
  if (!rep.ok())
    throw ReconstructionError("slice values are inconsistent: " + rep.violations.front().relation + " fails");
  return p;
}

FriezePatternD frieze_from_degrees(const std::vector<int>& degrees, int d0, bool swap_bottom) {
  int n = static_cast<int>(degrees.size());
  if (n < 3) throw ReconstructionError("need at least three degrees");
  if (d0 < 1) throw ReconstructionError("d0 must be positive");
  FriezePatternD p(n);
  for (int i = 1; i <= n; ++i) {
    if (degrees[wrap(i + 1, n) - 1] < 1) throw ReconstructionError("degrees must be positive");
    p.set({i, wrap(i + 1, n)}, 1);
    p.set({i, wrap(i + 2, n)}, degrees[wrap(i + 1, n) - 1]);
  }
  for (int len = 2; len <= n - 2; ++len) {
    for (int i = 1; i <= n; ++i) {
      int j = wrap(i + len, n);
      BigInt num = p.m(i, j) * p.m(i + 1, j + 1) - 1;
      const BigInt& den = p.m(i + 1, j);
      if (num <= 0 || num % den != 0)
        throw ReconstructionError("degrees give a non-integral entry at " + to_string(Label{i, wrap(j + 1, n)}));
      p.set({i, wrap(j + 1, n)}, num / den);
    }
  }
  for (int i = 1; i <= n; ++i) {
    BigInt num = p.m(i, i - 1) * p.m(i + 1, i) - 1;
    const BigInt& den = p.m(i + 1, i - 1);
    if (num <= 0 || num % den != 0) throw ReconstructionError("non-integral bottom product at vertex " + std::to_string(i));
    BigInt prod = num / den;
    if (prod % d0 != 0) throw ReconstructionError("bottom product not divisible by d0 at vertex " + std::to_string(i));
    BigInt sq = prod / d0;
    BigInt root = boost::multiprecision::sqrt(sq);
    if (root * root != sq) throw ReconstructionError("bottom entries not integral at vertex " + std::to_string(i));
    BigInt loop = root * d0;
    p.set({i, i}, swap_bottom ? root : loop);
    p.set({i, 0}, swap_bottom ? loop : root);
  }
  RelationReport rep = verify_relations(p);
  if (!rep.ok()) throw ReconstructionError("degrees do not give a frieze pattern: " + rep.violations.front().relation);
  return p;
}

std::string render_ascii(const FriezePatternD& p) {
  int n = p.n();
  std::size_t width = 2;
  for (const auto& [l, v] : p.entries()) width = std::max(width, v.str().size() + 1);
  std::vector<std::vector<std::pair<long, std::string>>> rows(n + 1);
  for (long i = 1; i <= n + 1; ++i) rows[0].push_back({2 * i + 1, "1"});
  for (int r = 1; r <= n; ++r) {
    long first = r <= n - 2 ? 2 + 1 + r : 2 + n;
    for (long k = 0; k <= n; ++k) {
      long pos = first + 2 * k;
      if (auto l = layout_label(n, r, pos)) rows[r].push_back({pos, p.at(*l).str()});
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (const auto& [pos, text] : row) {
      std::size_t end = static_cast<std::size_t>(pos + 1) * width;
      if (line.size() + text.size() < end) line.append(end - line.size() - text.size(), ' ');
      line += text;
    }
    out += line + "\n";
  }
  return out;
}

std::string render_csv(const FriezePatternD& p) {
  std::string out = "i,j,value\n";
  for (const Label& l : entry_labels(p.n())) out += to_string(l) + "," + p.at(l).str() + "\n";
  return out;
}

}  // namespace dfrieze
