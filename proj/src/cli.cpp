#include "dfrieze/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "dfrieze/io.hpp"

namespace dfrieze {

namespace {

struct Options {
  std::string input;
  std::string format = "ascii";
  std::string arc;
  bool list = false;
  bool count = false;
  bool report = false;
  bool tagged = false;
  bool unpunctured = false;
  int n = 0;
  int slice = -1;
};

void print_pattern(const FriezePatternD& p, const std::string& format, std::ostream& out) {
  if (format == "csv") out << render_csv(p);
  else if (format == "json") out << to_json(p).dump(2) << "\n";
  else out << render_ascii(p);
}

void print_report(const RelationReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(r).dump(2) << "\n";
    return;
  }
  for (const Violation& v : r.violations) {
    out << "violation " << v.relation << " at";
    for (long x : v.at) out << " " << x;
    out << ": " << v.detail << "\n";
  }
  out << r.summary() << "\n";
}

int cmd_build(const Options& o, std::ostream& out) {
  print_pattern(pattern_of(load_triangulation(o.input)), o.format, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::string text = read_file(o.input);
  RelationReport rep;
  if (looks_like_grid(text)) {
    rep = verify_raw_grid(parse_grid(text));
  } else if (text.find("\"values\"") != std::string::npos) {
    rep = verify_relations(pattern_from_json(nlohmann::json::parse(text)));
  } else {
    rep = verify_relations(pattern_of(parse_triangulation(text)));
  }
  print_report(rep, o.format, out);
  return rep.ok() ? kOk : kViolations;
}

int cmd_matchings(const Options& o, std::ostream& out, std::ostream& err) {
  TriangulationFile f = load_triangulation(o.input);
  if (f.tagged && to_tagged(f).notches() >= 2)
    err << "note: counts refer to the plain image with notched arcs read as central arcs\n";
  FaceComplex fc = labelled_complex(f);
  Label l = parse_label(o.arc);
  MatchingProblem prob = matching_problem(fc, l);
  if (o.list) {
    std::vector<std::string> lines;
    for (const Matching& m : list_matchings(prob.vertices, prob.regions))
      lines.push_back(format_matching(m, prob.regions, [&](int face) { return fc.label(face); }));
    std::sort(lines.begin(), lines.end());
    for (const std::string& s : lines) out << (s.empty() ? "(empty matching)" : s) << "\n";
    return kOk;
  }
  out << count_matchings(prob.vertices, prob.regions);
  if (prob.vertices.empty()) out << " (boundary-adjacent entry)";
  out << "\n";
  return kOk;
}

void print_row(const ConjectureRow& row, std::ostream& out) {
  for (std::size_t k = 0; k < row.triangulation.arcs.size(); ++k)
    out << (k ? "; " : "") << to_string(row.triangulation.arcs[k]);
  out << " | " << row.status() << " | " << (row.equal ? "equal" : "mismatch");
  for (const Label& l : row.mismatches) out << " " << to_string(l);
  out << "\n";
}

int cmd_cluster(const Options& o, std::ostream& out) {
  if (o.report) {
    if (o.n < 3) throw CLI::ValidationError("--report needs --n 3 or more");
    ConjectureReport rep = conjecture_report(o.n);
    if (o.format == "json") {
      out << to_json(rep).dump(2) << "\n";
      return kOk;
    }
    for (const ConjectureRow& row : rep.rows) print_row(row, out);
    out << rep.rows.size() << " seeds, " << rep.equal_count() << " equal, " << rep.slice_count()
        << " slice seeds, " << rep.slice_mismatches() << " slice mismatches\n";
    return kOk;
  }
  if (o.input.empty()) throw CLI::ValidationError("cluster needs --input or --report");
  TaggedTriangulation t = to_tagged(load_triangulation(o.input));
  ClusterAtlas atlas(t.n);
  ConjectureRow row;
  row.triangulation = t;
  row.slice = atlas.is_slice_seed(t);
  FriezePatternD f = frieze_of_tagged(t), fc = atlas.fc_pattern(t);
  for (const Label& l : entry_labels(t.n))
    if (f.at(l) != fc.at(l)) row.mismatches.push_back(l);
  row.equal = row.mismatches.empty();
  if (o.format == "json") {
    ConjectureReport rep{t.n, {row}};
    out << to_json(rep)["rows"][0].dump(2) << "\n";
  } else {
    print_row(row, out);
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  std::vector<TriangulationFile> files;
  if (o.tagged) {
    if (o.unpunctured) throw CLI::ValidationError("--tagged and --unpunctured exclude each other");
    for (const auto& t : enumerate_tagged(o.n)) files.push_back(file_of(t));
  } else {
    for (const auto& t : enumerate_triangulations(Disc{o.n, !o.unpunctured})) files.push_back(file_of(t));
  }
  if (o.count) {
    out << files.size() << "\n";
    return kOk;
  }
  for (const auto& f : files) out << to_json(f).dump() << "\n";
  return kOk;
}

int cmd_slice(const Options& o, std::ostream& out) {
  FriezePatternD p = pattern_of(load_triangulation(o.input));
  std::vector<Slice> slices = enumerate_slices(p.n());
  std::vector<int> which;
  if (o.slice >= 0) {
    if (o.slice >= static_cast<int>(slices.size()))
      throw CLI::ValidationError("--slice must be below " + std::to_string(slices.size()));
    which.push_back(o.slice);
  } else {
    for (int k = 0; k < static_cast<int>(slices.size()); ++k) which.push_back(k);
  }
  int bad = 0;
  for (int k : which) {
    FriezePatternD r = frieze_from_slice(p.n(), slice_values(p, slices[k]));
    bool match = r == p;
    if (!match) ++bad;
    out << "slice " << k << ":";
    for (const Label& l : slices[k].labels()) out << " " << to_string(l);
    out << " -> " << (match ? "match" : "mismatch") << "\n";
    if (o.slice >= 0 && o.format != "ascii") print_pattern(r, o.format, out);
  }
  return bad == 0 ? kOk : kViolations;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type D frieze patterns from triangulations of a punctured disc"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"ascii", "csv", "json"};
  auto input = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--input", o.input, "Triangulation or grid file");
    if (required) opt->required();
  };

  auto* build = app.add_subcommand("build", "Compute the frieze pattern of a triangulation");
  input(build, true);
  build->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Check frieze relations of a grid, pattern or triangulation");
  input(verify, true);
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* matchings = app.add_subcommand("matchings", "Count or list the matchings of one entry");
  input(matchings, true);
  matchings->add_option("--arc", o.arc, "Entry label i,j (0 = puncture)")->required();
  auto* list = matchings->add_flag("--list", o.list);
  matchings->add_flag("--count", o.count)->excludes(list);

  auto* cluster = app.add_subcommand("cluster", "Compare with cluster-variable specialisations");
  input(cluster, false);
  cluster->add_flag("--report", o.report, "Report over every tagged triangulation");
  cluster->add_option("--n", o.n);
  cluster->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* enumerate = app.add_subcommand("enumerate", "List every triangulation of the disc");
  enumerate->add_option("--n", o.n)->required()->check(CLI::Range(3, 12));
  enumerate->add_flag("--tagged", o.tagged);
  enumerate->add_flag("--unpunctured", o.unpunctured);
  enumerate->add_flag("--count", o.count);

  auto* slice = app.add_subcommand("slice", "Rebuild the pattern from slices of its own entries");
  input(slice, true);
  slice->add_option("--slice", o.slice, "Slice index; all slices when omitted");
  slice->add_option("--format", o.format)->check(CLI::IsMember(formats));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (matchings->parsed()) return cmd_matchings(o, out, err);
    if (cluster->parsed()) return cmd_cluster(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (slice->parsed()) return cmd_slice(o, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ReconstructionError& e) {
    err << "error: " << e.what() << "\n";
    return kViolations;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}

}  // namespace dfrieze
