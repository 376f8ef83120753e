#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "dfrieze/cli.hpp"
#include "dfrieze/io.hpp"

using namespace dfrieze;

namespace {

using Clock = std::chrono::steady_clock;

std::string fixture(const std::string& name) { return std::string(DFRIEZE_FIXTURES) + "/" + name; }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

struct Outcome {
  bool ok = true;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<Region> face_regions(const FaceComplex& fc) {
  std::vector<Region> out;
  for (std::size_t f = 0; f < fc.faces().size(); ++f) out.push_back({static_cast<int>(f), 0, fc.faces()[f].incidence()});
  return out;
}

// Every counting subproblem of a punctured triangulation.
void punctured_problems(const FaceComplex& fc, const std::function<void(const MatchingProblem&)>& visit) {
  for (const Label& l : entry_labels(fc.n())) visit(matching_problem(fc, l));
}

Outcome c1() {
  Outcome o;
  auto t0 = Clock::now();
  FaceComplex fc = labelled_complex(load_triangulation(fixture("d8.tri")));
  FriezePatternD p = build_frieze(fc);
  auto golden = nlohmann::json::parse(read_file(fixture("d8_golden.json")));
  std::size_t n = 0;
  for (const auto& [k, v] : golden.items()) {
    o.expect(p.at(parse_label(k)) == big_from_json(v), "entry " + k);
    ++n;
  }
  o.expect(n == 64, "golden table size");
  for (auto [i, j, v] : std::vector<std::tuple<int, int, int>>{
           {1, 3, 3}, {2, 7, 23}, {5, 2, 5}, {2, 2, 12}, {1, 7, 62}, {1, 8, 159}, {1, 1, 32}, {1, 0, 8}, {8, 8, 20}})
    o.expect(p.at({i, j}) == v, "anchor " + std::to_string(i) + "," + std::to_string(j));
  double s = seconds_since(t0);
  o.expect(s < 30, "time");
  o.note = o.ok ? "64 entries, " + std::to_string(s) + " s" : o.note;
  return o;
}

Outcome c2() {
  Outcome o;
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    run_cli(args, out, err);
    return lines_of(out.str());
  };
  std::string input = fixture("d8.tri");
  o.expect(run({"matchings", "--input", input, "--arc", "5,2", "--list"}) == lines_of(read_file(fixture("d8_matchings_52.txt"))),
           "listing 5,2");
  o.expect(run({"matchings", "--input", input, "--arc", "2,2", "--list"}) == lines_of(read_file(fixture("d8_matchings_22.txt"))),
           "listing 2,2");
  FaceComplex fc = labelled_complex(load_triangulation(input));
  MatchingProblem prob = matching_problem(fc, {2, 7});
  bool two_e = false;
  for (const Matching& m : list_matchings(prob.vertices, prob.regions)) {
    std::set<int> e;
    for (int r : m.regions)
      if (fc.label(prob.regions[r].face) == "E") e.insert(r);
    two_e = two_e || e.size() == 2;
  }
  o.expect(two_e, "m_27 matching using two regions of E");
  if (o.ok) o.note = "5 + 12 listings, split face E used twice";
  return o;
}

Outcome c3() {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t count = 0;
  for (int n = 4; n <= 6; ++n)
    for (const Triangulation& t : enumerate_triangulations(Disc{n, true})) {
      FaceComplex fc = build_complex(t);
      for (int i = 1; i <= n; ++i) {
        o.expect(fc.d0() * matching_number(fc, {i, 0}) == matching_number(fc, {i, i}), "vertex " + std::to_string(i));
        ++count;
      }
    }
  double s = seconds_since(t0);
  o.expect(s < 60, "time");
  if (o.ok) o.note = std::to_string(count) + " vertices, " + std::to_string(s) + " s";
  return o;
}

Outcome c4() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 4; n <= 6; ++n)
    for (const Triangulation& t : enumerate_triangulations(Disc{n, true})) {
      RelationReport r = verify_relations(build_frieze(build_complex(t)));
      o.expect(r.ok() && r.checked > 0, serialise_text(file_of(t)));
      ++count;
    }
  RelationReport d5 = verify_raw_grid(parse_grid(read_file(fixture("d5.grid"))));
  RelationReport a6 = verify_raw_grid(parse_grid(read_file(fixture("a6.grid"))));
  o.expect(d5.ok() && d5.checked > 0, "D5 grid");
  o.expect(a6.ok() && a6.checked > 0, "order-6 grid");
  if (o.ok) o.note = std::to_string(count) + " patterns, both grids clean";
  return o;
}

Outcome c5() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 5; n <= 8; ++n)
    for (const Triangulation& t : enumerate_triangulations(Disc{n, false})) {
      FaceComplex fc = build_complex(t);
      std::map<std::pair<int, int>, BigInt> lab;
      for (int i = 1; i <= n; ++i)
        for (const auto& [j, v] : bci_labels(fc, i)) lab[{i, j}] = v;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j) {
            BigInt v = lab.at({i, j});
            o.expect(v == type_a_number(fc, i, j) && v == n_ij(fc, i, j), "triple equality");
          }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
              o.expect(lab.at({i, k}) * lab.at({j, l}) == lab.at({i, j}) * lab.at({k, l}) + lab.at({l, i}) * lab.at({j, k}),
                       "Ptolemy");
      ++count;
    }
  if (o.ok) o.note = std::to_string(count) + " polygon triangulations";
  return o;
}

Outcome c6() {
  Outcome o;
  std::size_t count = 0;
  auto check = [&](const std::vector<int>& vertices, const std::vector<Region>& regions) {
    IncidenceMatrix m = incidence_matrix(vertices, regions);
    o.expect(count_matchings(m) == ryser_permanent(m), "subproblem");
    ++count;
  };
  auto visit = [&](const MatchingProblem& p) { check(p.vertices, p.regions); };
  punctured_problems(labelled_complex(load_triangulation(fixture("d8.tri"))), visit);
  for (int n = 4; n <= 6; ++n)
    for (const Triangulation& t : enumerate_triangulations(Disc{n, true})) punctured_problems(build_complex(t), visit);
  for (int n = 5; n <= 8; ++n)
    for (const Triangulation& t : enumerate_triangulations(Disc{n, false})) {
      FaceComplex fc = build_complex(t);
      auto regions = face_regions(fc);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          if (j != wrap(i + 1, n)) check(interval_vertices(wrap(i + 1, n), wrap(j - 1, n), fc.disc()), regions);
          std::vector<int> rest;
          for (int v = 1; v <= n; ++v)
            if (v != i && v != j) rest.push_back(v);
          check(rest, regions);
        }
    }
  if (o.ok) o.note = std::to_string(count) + " subproblems";
  return o;
}

Outcome c7() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 4; n <= 5; ++n)
    for (const Triangulation& t : enumerate_triangulations(Disc{n, true})) {
      FaceComplex fc = build_complex(t);
      for (int i = 1; i <= n; ++i) {
        o.expect(m_tilde(fc, i) == matching_number(fc, {i, 0}) * matching_number(fc, {i, i}), "vertex " + std::to_string(i));
        ++count;
      }
    }
  if (o.ok) o.note = std::to_string(count) + " vertices";
  return o;
}

Outcome c8() {
  Outcome o;
  std::size_t tagged = enumerate_tagged(4).size();
  SeedClosure c = explore(initial_seed(4));
  bool positive = std::all_of(c.u.begin(), c.u.end(), [](const auto& kv) { return kv.second >= 1; });
  o.expect(tagged == 50, "tagged count " + std::to_string(tagged));
  o.expect(c.seeds.size() == 50, "seed count " + std::to_string(c.seeds.size()));
  o.expect(c.u.size() == 16, "arc count " + std::to_string(c.u.size()));
  o.expect(positive, "positivity");
  std::set<std::vector<TaggedArc>> a, b;
  for (const auto& t : enumerate_tagged(4)) a.insert(t.arcs);
  for (const auto& [k, s] : c.seeds) b.insert(k);
  o.expect(a == b, "seed sets differ");
  if (o.ok) o.note = "50 tagged = 50 seeds, 16 arcs";
  return o;
}

Outcome c9() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 4; n <= 5; ++n) {
    ClusterAtlas atlas(n);
    for (const TaggedTriangulation& t : enumerate_tagged(n)) {
      if (!atlas.is_slice_seed(t)) continue;
      o.expect(atlas.fc_pattern(t) == frieze_of_tagged(t), serialise_text(file_of(t)));
      ++count;
    }
  }
  o.expect(count == 32 + 80, "slice seed count " + std::to_string(count));
  if (o.ok) o.note = std::to_string(count) + " slice seeds";
  return o;
}

Outcome c10() {
  Outcome o;
  ConjectureReport rep = conjecture_report(4);
  o.expect(rep.rows.size() == 50, "row count");
  for (const ConjectureRow& row : rep.rows) o.expect(!row.status().empty(), "verdict");
  if (o.ok)
    o.note = std::to_string(rep.rows.size()) + " verdicts, " + std::to_string(rep.equal_count()) + " equal, " +
             std::to_string(rep.rows.size() - rep.equal_count()) + " flagged";
  return o;
}

Outcome c11() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 4; n <= 6; ++n)
    for (const Triangulation& t : enumerate_triangulations(Disc{n, true})) {
      FaceComplex fc = build_complex(t);
      FriezePatternD p = build_frieze(fc);
      FriezePatternD q = iota(p);
      o.expect(iota(q) == p, "involution");
      o.expect((q == p) == (fc.d0() == 1), "fixed points");
      ++count;
    }
  if (o.ok) o.note = std::to_string(count) + " patterns";
  return o;
}

Outcome c12() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 4; n <= 5; ++n) {
    auto slices = enumerate_slices(n);
    for (const Triangulation& t : enumerate_triangulations(Disc{n, true})) {
      FaceComplex fc = build_complex(t);
      FriezePatternD p = build_frieze(fc);
      try {
        for (const Slice& s : slices) o.expect(frieze_from_slice(n, slice_values(p, s)) == p, "slice");
        o.expect(frieze_from_degrees(fc.degrees(), fc.d0()) == p, "degrees");
      } catch (const ReconstructionError& e) {
        o.expect(false, e.what());
      }
      ++count;
    }
    for (const TaggedTriangulation& t : enumerate_tagged(n)) {
      FaceComplex fc = build_complex(plain_image(t));
      FriezePatternD p = frieze_of_tagged(t);
      try {
        for (const Slice& s : slices) o.expect(frieze_from_slice(n, slice_values(p, s)) == p, "tagged slice");
        o.expect(frieze_from_degrees(fc.degrees(), fc.d0(), t.notches() >= 2) == p, "tagged degrees");
      } catch (const ReconstructionError& e) {
        o.expect(false, e.what());
      }
      ++count;
    }
  }
  if (o.ok) o.note = std::to_string(count) + " patterns";
  return o;
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << o.note << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
