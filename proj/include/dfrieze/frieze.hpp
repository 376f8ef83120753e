#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfrieze/complex.hpp"
#include "dfrieze/matching.hpp"

namespace dfrieze {

class FriezePatternD {
 public:
  FriezePatternD() = default;
  explicit FriezePatternD(int n);

  int n() const { return n_; }
  bool odd_layout() const { return n_ % 2 == 1; }

  // Indices are reduced mod n; j == 0 is the puncture.
  static Label label(int i, int j, int n);
  bool has(const Label& l) const;
  const BigInt& at(const Label& l) const;
  void set(const Label& l, BigInt v);
  const BigInt& m(long i, long j) const;
  const BigInt& z(long i) const;

  const std::map<Label, BigInt>& entries() const { return entries_; }
  bool operator==(const FriezePatternD&) const = default;

 private:
  int n_ = 0;
  std::map<Label, BigInt> entries_;
};

FriezePatternD build_frieze(const FaceComplex& fc);
FriezePatternD pattern_from_entries(int n, const std::map<Label, BigInt>& entries);

struct Violation {
  std::string relation;
  std::vector<long> at;
  std::string detail;
};

struct RelationReport {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

RelationReport verify_relations(const FriezePatternD& p);

// Unlabelled staggered grid; entry k of row r sits at half-step position offsets[r] + 2k.
struct RawGrid {
  char type = 'D';
  std::vector<std::vector<BigInt>> rows;
  std::vector<int> offsets;
};

// Fills offsets when absent: row r at r, the last row of a type D grid aligned with the one above.
void apply_default_offsets(RawGrid& g);
RelationReport verify_raw_grid(const RawGrid& g);

// Propagated labels (base,j) for every j != base of an unpunctured triangulation.
std::map<int, BigInt> bci_labels(const FaceComplex& fc, int base);
BigInt type_a_number(const FaceComplex& fc, int i, int j);
BigInt n_ij(const FaceComplex& fc, int i, int j);

FriezePatternD iota(const FriezePatternD& p);

// Entry at half-step position `pos` of layout row `row` (1..n), if that position is occupied.
std::optional<Label> layout_label(int n, int row, long pos);

// E_1 at `start` in row 1, then one step of +-1 per row down to row n-2; the two
// bottom entries each sit one step from E_{n-2}.
struct Slice {
  int n = 0;
  long start = 0;
  std::vector<int> steps;
  int upper = 1;
  int lower = 1;

  std::vector<Label> labels() const;
};

// One slice per distinct label set.
std::vector<Slice> enumerate_slices(int n);
std::map<Label, BigInt> slice_values(const FriezePatternD& p, const Slice& s);

class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FriezePatternD frieze_from_slice(int n, const std::map<Label, BigInt>& values);
// degrees[v-1] is the corner count at boundary vertex v.
FriezePatternD frieze_from_degrees(const std::vector<int>& degrees, int d0, bool swap_bottom = false);

std::string render_ascii(const FriezePatternD& p);
std::string render_csv(const FriezePatternD& p);

}  // namespace dfrieze
