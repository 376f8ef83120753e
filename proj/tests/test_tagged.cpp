#include <doctest.h>

#include <deque>
#include <set>

#include "dfrieze/tagged.hpp"
#include "support.hpp"

using namespace dfrieze;

namespace {

TaggedTriangulation all_notched_d8() {
  std::vector<TaggedArc> arcs;
  for (int k : {3, 4, 5, 6}) arcs.push_back(TaggedArc::notched(k));
  for (auto [i, j] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {7, 2}, {8, 2}}) arcs.push_back(TaggedArc::chord(i, j));
  return make_tagged_triangulation(8, arcs);
}

std::size_t flip_closure(const TaggedTriangulation& start) {
  std::set<std::vector<TaggedArc>> seen{start.arcs};
  std::deque<TaggedTriangulation> queue{start};
  while (!queue.empty()) {
    TaggedTriangulation t = queue.front();
    queue.pop_front();
    for (const TaggedArc& a : t.arcs) {
      TaggedTriangulation u = flip(t, a);
      if (seen.insert(u.arcs).second) queue.push_back(u);
    }
  }
  return seen.size();
}

}  // namespace

TEST_SUITE("tagged") {
  TEST_CASE("compatibility of central arcs") {
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) {
        CHECK(tagged_compatible(TaggedArc::plain(i), TaggedArc::plain(j), 5));
        CHECK(tagged_compatible(TaggedArc::notched(i), TaggedArc::notched(j), 5));
        CHECK(tagged_compatible(TaggedArc::plain(i), TaggedArc::notched(j), 5) == (i == j));
      }
    CHECK(tagged_compatible(TaggedArc::chord(1, 3), TaggedArc::notched(2), 5) == false);
    CHECK(tagged_compatible(TaggedArc::chord(1, 3), TaggedArc::notched(4), 5));
  }

  TEST_CASE("serialisation") {
    for (const TaggedArc& a : tagged_universe(5)) CHECK(parse_tagged_arc(to_string(a)) == a);
    CHECK(parse_tagged_arc("central 2") == TaggedArc::plain(2));
    CHECK(to_string(TaggedArc::notched(2)) == "central- 2");
    CHECK_THROWS(parse_tagged_arc("central* 2"));
    CHECK_THROWS(make_tagged_triangulation(4, {TaggedArc::chord(1, 2)}));
  }

  TEST_CASE("universe and enumeration") {
    CHECK(tagged_universe(8).size() == 64);
    CHECK(enumerate_tagged(4).size() == 50);
    CHECK(enumerate_tagged(5).size() == 182);
    for (int n = 3; n <= 5; ++n)
      for (const TaggedTriangulation& t : enumerate_tagged(n)) {
        CHECK(static_cast<int>(t.arcs.size()) == n);
        CHECK_NOTHROW(make_tagged_triangulation(n, t.arcs));
        int plain = t.centrals() - t.notches();
        bool pair = t.centrals() == 2 && plain == 1 && t.notches() == 1;
        CHECK((plain == 0 || t.notches() == 0 || pair));
      }
  }

  TEST_CASE("plain and tagged counts") {
    for (int n = 3; n <= 5; ++n) {
      std::size_t doubled = 0, single = 0;
      for (const Triangulation& t : enumerate_triangulations(Disc{n, true})) (build_complex(t).d0() >= 2 ? doubled : single)++;
      CHECK(2 * doubled + single == enumerate_tagged(n).size());
    }
  }

  TEST_CASE("flips") {
    auto all = enumerate_tagged(4);
    for (const TaggedTriangulation& t : all)
      for (const TaggedArc& a : t.arcs) {
        TaggedTriangulation u = flip(t, a);
        TaggedArc b = flip_partner(t, a);
        CHECK(b != a);
        CHECK(u.contains(b));
        CHECK(flip(u, b) == t);
      }
    CHECK(flip_closure(all.front()) == 50);
    CHECK(flip_closure(enumerate_tagged(5).back()) == 182);
    TaggedTriangulation fan = to_tagged(fixtures::load("fan4.tri"));
    CHECK(fan.contains(TaggedArc::notched(1)));
    CHECK(flip_partner(fan, TaggedArc::plain(1)) == TaggedArc::notched(4));
    CHECK(flip_partner(fan, TaggedArc::notched(1)) == TaggedArc::plain(4));
    CHECK_THROWS(flip(fan, TaggedArc::chord(2, 4)));
  }

  TEST_CASE("pattern of a tagged triangulation") {
    TaggedTriangulation fan = to_tagged(fixtures::load("fan4.tri"));
    CHECK(frieze_of_tagged(fan) == build_frieze(labelled_complex(fixtures::load("fan4.tri"))));
    FriezePatternD d8 = build_frieze(labelled_complex(fixtures::load("d8.tri")));
    CHECK(frieze_of_tagged(tagged_from_plain(to_triangulation(fixtures::load("d8.tri")))) == d8);
    FriezePatternD notched = frieze_of_tagged(all_notched_d8());
    CHECK(notched == iota(d8));
    CHECK(notched.at({1, 1}) == 8);
    CHECK(notched.at({1, 0}) == 32);
    for (int n = 3; n <= 5; ++n)
      for (const TaggedTriangulation& t : enumerate_tagged(n)) CHECK(verify_relations(frieze_of_tagged(t)).ok());
  }
}
