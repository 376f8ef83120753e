#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace dfrieze {

// Boundary vertices are 1..n, the puncture is 0.
struct Disc {
  int n = 0;
  bool punctured = true;

  bool operator==(const Disc&) const = default;
};

void validate_disc(const Disc& disc);

// Reduces any integer to the residue in 1..n.
int wrap(long v, int n);

// V_{from,to}: clockwise from `from` to `to`, inclusive.
std::vector<int> interval_vertices(int from, int to, const Disc& disc);
int interval_size(int from, int to, int n);
bool in_interval(int v, int from, int to, int n);

enum class ArcKind { Chord, Loop, Central };

struct Arc {
  ArcKind kind = ArcKind::Chord;
  int i = 0;
  int j = 0;  // Loop: j == i, Central: j == 0

  static Arc chord(int i, int j) { return {ArcKind::Chord, i, j}; }
  static Arc loop(int i) { return {ArcKind::Loop, i, i}; }
  static Arc central(int i) { return {ArcKind::Central, i, 0}; }

  auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& a);
Arc parse_arc(std::string_view text);

// Throws std::invalid_argument when the arc does not exist on the disc.
void validate_arc(const Arc& a, const Disc& disc);

// In an unpunctured disc Chord(i,j) and Chord(j,i) coincide; the canonical form has i < j.
Arc canonical(const Arc& a, const Disc& disc);

struct LiftInterval {
  long lo = 0;
  long hi = 0;
  bool is_point() const { return lo == hi; }
};

LiftInterval lift(const Arc& a, const Disc& disc);

// Clockwise length of the lift: chord (j-i) mod n, loop n, central 0.
int lifted_length(const Arc& a, int n);

int crossing_count(const Arc& a, const Arc& b, const Disc& disc);
bool compatible(const Arc& a, const Arc& b, const Disc& disc);

// Every arc of the disc in canonical order.
std::vector<Arc> arc_universe(const Disc& disc);

}  // namespace dfrieze
