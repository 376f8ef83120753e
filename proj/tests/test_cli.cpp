#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dfrieze/cli.hpp"
#include "support.hpp"

using namespace dfrieze;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string p = std::string(DFRIEZE_SCRATCH) + "/" + name;
  std::ofstream(p) << content;
  return p;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("build") {
    Run csv = run({"build", "--input", fixtures::path("d8.tri"), "--format", "csv"});
    CHECK(csv.code == kOk);
    std::map<Label, BigInt> got;
    for (const std::string& line : split_lines(csv.out)) {
      if (line == "i,j,value") continue;
      auto k = line.rfind(',');
      got[parse_label(line.substr(0, k))] = BigInt(line.substr(k + 1));
    }
    for (const auto& [l, v] : fixtures::values(fixtures::json("d8_golden.json"))) CHECK(got.at(l) == v);

    Run json = run({"build", "--input", fixtures::path("d8.tri"), "--format", "json"});
    CHECK(json.code == kOk);
    FriezePatternD p = pattern_from_json(nlohmann::json::parse(json.out));
    CHECK(p == build_frieze(labelled_complex(fixtures::load("d8.tri"))));
    CHECK(nlohmann::json::parse(json.out)["values"]["2,7"] == 23);

    Run ascii = run({"build", "--input", fixtures::path("d8.tri")});
    CHECK(ascii.out.find("159") != std::string::npos);
  }

  TEST_CASE("invalid input is rejected with a location") {
    Run bad = run({"build", "--input", temp_file("bad_arc.tri", "n 5\nchord 2 3\n")});
    CHECK(bad.code == kInvalid);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(bad.err.find("chord 2 3") != std::string::npos);
    Run cross = run({"build", "--input", temp_file("cross.tri", "n 4\nchord 1 3\nchord 2 4\ncentral 1\ncentral 2\n")});
    CHECK(cross.code == kInvalid);
    CHECK(cross.err.find("incompatible arcs: chord 1 3 and chord 2 4") != std::string::npos);
    Run json = run({"build", "--input", temp_file("bad.json", R"({"n": 4, "arcs": ["chord 1 3", 7]})")});
    CHECK(json.code == kInvalid);
    CHECK(json.err.find("arcs[1]") != std::string::npos);
    CHECK(run({"build", "--input", fixtures::path("d8.tri"), "--format", "xml"}).code == kUsage);
    CHECK(run({"frobnicate"}).code == kUsage);
    CHECK(run({}).code == kUsage);
    CHECK(run({"build", "--input", "/nonexistent"}).code == kInvalid);
  }

  TEST_CASE("matchings") {
    Run l52 = run({"matchings", "--input", fixtures::path("d8.tri"), "--arc", "5,2", "--list"});
    CHECK(l52.code == kOk);
    auto want52 = fixtures::lines("d8_matchings_52.txt");
    std::sort(want52.begin(), want52.end());
    CHECK(split_lines(l52.out) == want52);
    Run l22 = run({"matchings", "--input", fixtures::path("d8.tri"), "--arc", "2,2", "--list"});
    auto want22 = fixtures::lines("d8_matchings_22.txt");
    std::sort(want22.begin(), want22.end());
    CHECK(split_lines(l22.out) == want22);
    CHECK(run({"matchings", "--input", fixtures::path("d8.tri"), "--arc", "2,2", "--count"}).out == "12\n");
    Run adj = run({"matchings", "--input", fixtures::path("d8.tri"), "--arc", "1,2"});
    CHECK(adj.out.rfind("1 ", 0) == 0);
    CHECK(adj.out.find("boundary-adjacent") != std::string::npos);
    CHECK(run({"matchings", "--input", fixtures::path("d8.tri"), "--arc", "1,0", "--count"}).out == "8\n");
    CHECK(run({"matchings", "--input", fixtures::path("d8.tri"), "--arc", "1,9"}).code == kInvalid);
    CHECK(run({"matchings", "--input", fixtures::path("d8.tri"), "--arc", "1,3", "--list", "--count"}).code == kUsage);
  }

  TEST_CASE("verify") {
    Run grid = run({"verify", "--input", fixtures::path("d5.grid")});
    CHECK(grid.code == kOk);
    CHECK(grid.out.find(" 0 violations") != std::string::npos);
    CHECK(run({"verify", "--input", fixtures::path("a6.grid")}).code == kOk);
    CHECK(run({"verify", "--input", fixtures::path("d8.tri")}).code == kOk);
    std::string text = read_file(fixtures::path("d5.grid"));
    text.replace(text.find("8 2 1 7"), 7, "8 2 2 7");
    Run bad = run({"verify", "--input", temp_file("perturbed.grid", text)});
    CHECK(bad.code == kViolations);
    CHECK(bad.out.find("violation ") != std::string::npos);
    Run js = run({"verify", "--input", temp_file("perturbed.grid", text), "--format", "json"});
    auto report = nlohmann::json::parse(js.out);
    CHECK(report["ok"] == false);
    CHECK_FALSE(report["violations"].empty());
    CHECK(report["violations"][0].contains("at"));

    Run pattern = run({"build", "--input", fixtures::path("d8.tri"), "--format", "json"});
    std::string pj = temp_file("d8_pattern.json", pattern.out);
    CHECK(run({"verify", "--input", pj}).code == kOk);
  }

  TEST_CASE("enumerate") {
    CHECK(run({"enumerate", "--tagged", "--n", "4", "--count"}).out == "50\n");
    CHECK(run({"enumerate", "--n", "4", "--count"}).out == "35\n");
    CHECK(run({"enumerate", "--n", "6", "--unpunctured", "--count"}).out == "14\n");
    CHECK(run({"enumerate", "--n", "2"}).code == kUsage);
    for (bool tagged : {true, false}) {
      std::vector<std::string> args{"enumerate", "--n", "4"};
      if (tagged) args.push_back("--tagged");
      auto lines = split_lines(run(args).out);
      CHECK(lines.size() == (tagged ? 50u : 35u));
      for (const std::string& l : lines) {
        TriangulationFile f = parse_triangulation(l);
        CHECK(to_json(f).dump() == l);
        if (tagged) CHECK_NOTHROW(to_tagged(f));
        else CHECK_NOTHROW(to_triangulation(f));
      }
    }
  }

  TEST_CASE("cluster") {
    Run fan = run({"cluster", "--input", fixtures::path("fan4.tri")});
    CHECK(fan.code == kOk);
    CHECK(fan.out.find("theorem | equal") != std::string::npos);
    Run rep = run({"cluster", "--report", "--n", "4", "--format", "json"});
    auto j = nlohmann::json::parse(rep.out);
    CHECK(j["rows"].size() == 50);
    CHECK(j["slice_mismatches"] == 0);
    int conjectural = 0;
    for (const auto& row : j["rows"]) {
      CHECK(row["status"] == (row["slice"].get<bool>() ? "theorem" : "conjectural"));
      conjectural += row["status"] == "conjectural";
    }
    CHECK(conjectural == 18);
    Run text = run({"cluster", "--report", "--n", "4"});
    CHECK(split_lines(text.out).size() == 51);
    CHECK(run({"cluster"}).code == kUsage);
  }

  TEST_CASE("slice") {
    Run all = run({"slice", "--input", fixtures::path("d8.tri")});
    CHECK(all.code == kOk);
    CHECK(all.out.find("mismatch") == std::string::npos);
    Run one = run({"slice", "--input", fixtures::path("d8.tri"), "--slice", "0", "--format", "csv"});
    CHECK(one.code == kOk);
    CHECK(one.out.find("1,8,159") != std::string::npos);
    CHECK(run({"slice", "--input", fixtures::path("d8.tri"), "--slice", "100000"}).code == kUsage);
  }

  TEST_CASE("round trips") {
    for (const char* name : {"d8.tri", "fan4.tri", "hexfan2.tri"}) {
      TriangulationFile f = fixtures::load(name);
      TriangulationFile g = parse_triangulation(serialise_text(f));
      TriangulationFile h = parse_triangulation_json(to_json(f));
      CHECK(to_json(g) == to_json(f));
      CHECK(to_json(h) == to_json(f));
      CHECK(serialise_text(h) == serialise_text(f));
    }
    for (const TaggedTriangulation& t : enumerate_tagged(4)) CHECK(to_tagged(parse_triangulation(serialise_text(file_of(t)))) == t);
    FriezePatternD p = build_frieze(labelled_complex(fixtures::load("d8.tri")));
    CHECK(pattern_from_json(to_json(p)) == p);
    FriezePatternD big(3);
    big.set({1, 3}, BigInt("123456789012345678901234567890"));
    CHECK(to_json(big)["values"]["1,3"].is_string());
    CHECK(pattern_from_json(to_json(big)) == big);
    RawGrid g = parse_grid(read_file(fixtures::path("a6.grid")));
    nlohmann::json gj{{"type", "A"}, {"rows", nlohmann::json::array()}, {"offsets", g.offsets}};
    for (const auto& row : g.rows) {
      nlohmann::json r = nlohmann::json::array();
      for (const BigInt& v : row) r.push_back(to_json(v));
      gj["rows"].push_back(r);
    }
    RawGrid h = parse_grid(gj.dump());
    CHECK(h.rows == g.rows);
    CHECK(h.offsets == g.offsets);
    CHECK(looks_like_grid(gj.dump()));
    CHECK_FALSE(looks_like_grid(read_file(fixtures::path("d8.tri"))));
  }

  TEST_CASE("tagged input files") {
    std::string p = temp_file("notched.tri", "n 4\ncentral- 1\ncentral- 2\nchord 2 4\nchord 2 1\n");
    TriangulationFile f = load_triangulation(p);
    CHECK(f.tagged);
    Run b = run({"build", "--input", p, "--format", "json"});
    CHECK(b.code == kOk);
    CHECK(pattern_from_json(nlohmann::json::parse(b.out)) == frieze_of_tagged(to_tagged(f)));
    CHECK_THROWS_AS(parse_triangulation("n 4\nloop 1\ncentral- 2\n"), ParseError);
    CHECK_THROWS_AS(parse_triangulation("chord 1 3\n"), ParseError);
  }
}
