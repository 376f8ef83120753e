#include "dfrieze/surface.hpp"

#include <sstream>
#include <stdexcept>

namespace dfrieze {

void validate_disc(const Disc& disc) {
  if (disc.n < 3) throw std::invalid_argument("disc needs n >= 3, got " + std::to_string(disc.n));
}

int wrap(long v, int n) {
  long r = (v - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r + 1);
}

int interval_size(int from, int to, int n) { return wrap(to - from + 1, n); }

static void check_vertex(int v, const Disc& disc) {
  if (v < 1 || v > disc.n)
    throw std::out_of_range("vertex " + std::to_string(v) + " not in 1.." + std::to_string(disc.n));
}

std::vector<int> interval_vertices(int from, int to, const Disc& disc) {
  check_vertex(from, disc);
  check_vertex(to, disc);
  std::vector<int> out;
  int len = interval_size(from, to, disc.n);
  out.reserve(len);
  for (int k = 0; k < len; ++k) out.push_back(wrap(from + k, disc.n));
  return out;
}

bool in_interval(int v, int from, int to, int n) {
  return wrap(v - from + 1, n) <= interval_size(from, to, n);
}

std::string to_string(const Arc& a) {
  switch (a.kind) {
    case ArcKind::Chord: return "chord " + std::to_string(a.i) + " " + std::to_string(a.j);
    case ArcKind::Loop: return "loop " + std::to_string(a.i);
    case ArcKind::Central: return "central " + std::to_string(a.i);
  }
  return {};
}

Arc parse_arc(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  int i = 0, j = 0;
  if (kind == "chord") {
    if (!(in >> i >> j)) throw std::invalid_argument("chord needs two vertices: '" + std::string(text) + "'");
  } else if (kind == "loop" || kind == "central") {
    if (!(in >> i)) throw std::invalid_argument(kind + " needs a vertex: '" + std::string(text) + "'");
  } else {
    throw std::invalid_argument("unknown arc kind '" + kind + "'");
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing text in arc '" + std::string(text) + "'");
  if (kind == "chord") return Arc::chord(i, j);
  return kind == "loop" ? Arc::loop(i) : Arc::central(i);
}

void validate_arc(const Arc& a, const Disc& disc) {
  check_vertex(a.i, disc);
  switch (a.kind) {
    case ArcKind::Chord:
      check_vertex(a.j, disc);
      if (a.i == a.j) throw std::invalid_argument(to_string(a) + ": endpoints coincide");
      if (a.j == wrap(a.i + 1, disc.n) || (!disc.punctured && a.i == wrap(a.j + 1, disc.n)))
        throw std::invalid_argument(to_string(a) + ": endpoints are boundary neighbours");
      break;
    case ArcKind::Loop:
    case ArcKind::Central:
      if (!disc.punctured) throw std::invalid_argument(to_string(a) + ": needs a punctured disc");
      break;
  }
}

Arc canonical(const Arc& a, const Disc& disc) {
  if (!disc.punctured && a.kind == ArcKind::Chord && a.i > a.j) return Arc::chord(a.j, a.i);
  return a;
}

int lifted_length(const Arc& a, int n) {
  switch (a.kind) {
    case ArcKind::Chord: return wrap(a.j - a.i + 1, n) - 1;
    case ArcKind::Loop: return n;
    case ArcKind::Central: return 0;
  }
  return 0;
}

LiftInterval lift(const Arc& a, const Disc& disc) {
  Arc c = canonical(a, disc);
  return {c.i, static_cast<long>(c.i) + lifted_length(c, disc.n)};
}

int crossing_count(const Arc& a, const Arc& b, const Disc& disc) {
  validate_arc(a, disc);
  validate_arc(b, disc);
  if (canonical(a, disc) == canonical(b, disc)) return 0;
  LiftInterval x = lift(a, disc), y = lift(b, disc);
  if (x.is_point() && y.is_point()) return 0;
  int count = 0;
  for (long t = -2; t <= 2; ++t) {
    long s = t * disc.n;
    long y1 = y.lo + s, y2 = y.hi + s;
    if (!x.is_point() && !y.is_point()) {
      if ((x.lo < y1 && y1 < x.hi && x.hi < y2) || (y1 < x.lo && x.lo < y2 && y2 < x.hi)) ++count;
    } else if (y.is_point()) {
      if (x.lo < y1 && y1 < x.hi) ++count;
    } else if (y1 < x.lo && x.lo < y2) {
      ++count;
    }
  }
  return count;
}

bool compatible(const Arc& a, const Arc& b, const Disc& disc) {
  return canonical(a, disc) == canonical(b, disc) || crossing_count(a, b, disc) == 0;
}

std::vector<Arc> arc_universe(const Disc& disc) {
  validate_disc(disc);
  std::vector<Arc> out;
  int n = disc.n;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == wrap(i + 1, n)) continue;
      if (!disc.punctured && (j < i || i == wrap(j + 1, n))) continue;
      out.push_back(Arc::chord(i, j));
    }
    if (disc.punctured) {
      out.push_back(Arc::loop(i));
      out.push_back(Arc::central(i));
    }
  }
  return out;
}

}  // namespace dfrieze
