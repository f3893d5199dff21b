#pragma once

// Hinged-dissection font: polyabolo glyphs, their 4-way refinement into
// half-size triangular slots, and folding a hinged triangle chain into them.

#include "pfont/geometry.hpp"
#include "pfont/svg.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace pfont {

/// Point on the half-integer lattice, stored doubled so coordinates stay integral.
struct HalfPoint {
  int x2 = 0;
  int y2 = 0;

  Point2 to_point() const { return Point2(0.5 * x2, 0.5 * y2); }
  auto operator<=>(const HalfPoint&) const = default;
};

enum class Diagonal { NE, NW };
enum class Half { First, Second };

/// Half of the unit square at (x, y). NE splits along (x,y)-(x+1,y+1): first is
/// the lower-right half, second the upper-left. NW splits along
/// (x+1,y)-(x,y+1): first is lower-left, second upper-right.
struct AboloCell {
  int x = 0;
  int y = 0;
  Diagonal diagonal = Diagonal::NE;
  Half half = Half::First;

  auto operator<=>(const AboloCell&) const = default;
};

/// Right isosceles triangle with its right-angle corner `r` and acute corners
/// `a`, `b` in counter-clockwise order.
struct RightTriangle {
  HalfPoint r;
  HalfPoint a;
  HalfPoint b;

  std::array<Point2, 3> corners() const { return {r.to_point(), a.to_point(), b.to_point()}; }
};

RightTriangle triangle_of(const AboloCell& cell);

struct Polyabolo {
  std::vector<AboloCell> cells;

  double area() const { return 0.5 * static_cast<double>(cells.size()); }
};

struct PolyaboloReport {
  size_t cell_count = 0;
  size_t expected_cells = 0;
  bool count_ok = false;
  bool distinct = false;
  bool overlap_free = false;  // no two cells of one square on crossing diagonals
  bool connected = false;     // through shared full edges
  double area = 0.0;

  bool ok() const { return count_ok && distinct && overlap_free && connected; }
};

inline constexpr size_t kGlyphCells = 32;

PolyaboloReport validate_polyabolo(const Polyabolo& p, size_t expected_cells = kGlyphCells);

/// One quarter of a cell, cut along the altitude to the hypotenuse midpoint m
/// and on to both leg midpoints. Sub-indices: 0 = (r, m) half at the r-a leg,
/// 1 = (a, m), 2 = (r, m) half at the r-b leg, 3 = (b, m).
struct Slot {
  int cell = 0;
  int sub = 0;
  RightTriangle tri;
};

struct RefinedShape {
  std::vector<Slot> slots;                     // ordered by (cell, sub)
  std::vector<std::vector<int>> edge_adjacent;  // slots sharing a full edge
  std::vector<std::vector<int>> vertex_adjacent;  // slots sharing at least a corner
};

/// Cells are sorted before refinement so slot order depends only on the shape.
/// Throws InvalidPolyabolo for empty, overlapping or disconnected shapes.
RefinedShape refine(const Polyabolo& p);

enum class Corner { Right, A, B };

/// Corner of piece i joined to corner of piece i+1.
struct Hinge {
  Corner out = Corner::B;
  Corner in = Corner::A;
};

/// Chain of congruent right isosceles triangles with legs 1/2.
struct HingedChain {
  size_t pieces = 0;
  std::vector<Hinge> hinges;  // pieces - 1 entries

  /// Every piece is hinged at both acute corners: it enters at A and leaves
  /// at B, so a fold is a trail along slot hypotenuses.
  static HingedChain standard(size_t pieces);
  bool valid() const { return pieces > 0 && hinges.size() == pieces - 1; }
  double area() const { return static_cast<double>(pieces) / 8.0; }
};

inline constexpr size_t kChainPieces = 128;

/// Piece placed onto a slot. Congruences must send the right angle to the right
/// angle, so each slot admits two: direct (a->a, b->b) and mirrored (a->b, b->a).
struct Placement {
  int slot = 0;
  bool mirrored = false;

  auto operator<=>(const Placement&) const = default;
};

HalfPoint corner_position(const RefinedShape& shape, const Placement& pl, Corner c);

struct FoldAssignment {
  std::vector<Placement> placements;  // one per chain piece

  std::vector<int> slot_indices() const;
};

inline constexpr std::uint64_t kDefaultFoldBudget = 10'000'000;
inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

struct FoldSearchStats {
  std::uint64_t nodes = 0;
};

/// Depth-first search placing pieces in chain order. Candidates are tried
/// fewest-continuations first, ties broken by slot index and direct before
/// mirrored. Returns nullopt once the space is
/// exhausted; throws BudgetExceeded when the node budget runs out first.
std::optional<FoldAssignment> fold_chain(const HingedChain& chain, const Polyabolo& p,
                                         std::uint64_t budget = kDefaultFoldBudget,
                                         FoldSearchStats* stats = nullptr);

bool verify_fold(const HingedChain& chain, const Polyabolo& p, const FoldAssignment& assignment);

Polyabolo square_polyabolo(int side);

VectorScene render_polyabolo(const Polyabolo& p);
VectorScene render_fold(const HingedChain& chain, const Polyabolo& p, const FoldAssignment& assignment);
/// Schematic of the unfolded chain: rows of pieces alternating above and below
/// a baseline, serpentine from row to row.
VectorScene render_chain(const HingedChain& chain, size_t per_row = 16);

}  // namespace pfont
