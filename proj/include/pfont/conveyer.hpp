#pragma once

// Conveyer-belt font: unit disks wrapped by a taut closed belt.

#include "pfont/geometry.hpp"
#include "pfont/svg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pfont {

/// Unit disks with pairwise center distance at least 2 + kTol.
class DiskSet {
 public:
  DiskSet() = default;
  /// Throws InvalidArgument for non-finite or overlapping disks.
  explicit DiskSet(std::vector<Point2> centers);

  const std::vector<Point2>& centers() const { return centers_; }
  size_t size() const { return centers_.size(); }
  const Point2& operator[](size_t i) const { return centers_[i]; }

 private:
  std::vector<Point2> centers_;
};

struct WindingEntry {
  int disk = 0;
  Orientation orientation = Orientation::CCW;

  auto operator<=>(const WindingEntry&) const = default;
};

/// Cyclic wrap order of a belt. CCW means the belt goes around the disk
/// counter-clockwise, keeping the disk on its left.
struct BeltSpec {
  std::vector<WindingEntry> winding;

  /// Lexicographically least rotation over the spec and its reversal with
  /// orientations flipped; both traverse the same belt.
  BeltSpec canonical() const;
  /// Text form "0+ 1+ 2-" where + is CCW and - is CW.
  std::string to_string() const;
  static BeltSpec parse(const std::string& text);

  auto operator<=>(const BeltSpec&) const = default;
};

struct BeltPath {
  std::vector<PathElement> elements;  // segment, arc, segment, arc, ...
  std::vector<int> element_disk;      // disk index for arcs, -1 for segments
  double total_length = 0.0;
};

/// Throws InvalidSpec for malformed windings, InternalTangentInfeasible when a
/// crossing tangent is requested between disks closer than 2.
BeltPath compute_belt(const DiskSet& disks, const BeltSpec& spec);

struct BeltReport {
  bool simple = false;
  bool avoids_interiors = false;
  bool visits_all = false;
  bool taut = false;

  bool ok() const { return simple && avoids_interiors && visits_all && taut; }
};

BeltReport validate_belt(const DiskSet& disks, const BeltPath& path);

struct BeltSolveResult {
  std::vector<BeltSpec> solutions;  // canonical specs, sorted
  bool complete = true;             // false when the node budget ran out
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBeltBudget = 10'000'000;
inline constexpr size_t kMaxSolverDisks = 9;

/// Exhaustive search over wrap orders and orientations. Throws
/// InvalidArgument above kMaxSolverDisks disks.
BeltSolveResult solve_belt(const DiskSet& disks, std::uint64_t budget = kDefaultBeltBudget);

/// Translation-invariant, order-invariant key quantized at 1e-6.
std::string fingerprint(const DiskSet& disks);

struct ConveyerLetter {
  DiskSet disks;
  BeltSpec belt;  // the letter-shaped solution
};

class ConveyerFont {
 public:
  ConveyerFont() = default;
  explicit ConveyerFont(std::map<char, ConveyerLetter> letters) : letters_(std::move(letters)) {}

  const std::map<char, ConveyerLetter>& letters() const { return letters_; }
  bool contains(char c) const { return letters_.count(c) != 0; }
  const ConveyerLetter& at(char c) const;

  /// Letters whose disk configuration matches `disks` up to translation.
  std::vector<char> match(const DiskSet& disks) const;

 private:
  std::map<char, ConveyerLetter> letters_;
};

VectorScene render_disks(const DiskSet& disks);
VectorScene render_belt(const DiskSet& disks, const BeltPath& path);

}  // namespace pfont
