#pragma once

// Origami-maze font: grid mazes, their extrusion views, and crease patterns
// built from full-length pleats with a local flat-foldability checker.

#include "pfont/geometry.hpp"
#include "pfont/svg.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace pfont {

/// Unit lattice edge stored with its lexicographically smaller endpoint first.
struct LatticeEdge {
  int x1 = 0, y1 = 0, x2 = 0, y2 = 0;

  /// Throws InvalidArgument unless the endpoints span one axis-parallel unit.
  static LatticeEdge make(int xa, int ya, int xb, int yb);
  bool horizontal() const { return y1 == y2; }

  auto operator<=>(const LatticeEdge&) const = default;
};

class GridMaze {
 public:
  GridMaze() = default;
  GridMaze(int width, int height, std::set<LatticeEdge> walls = {});

  int width() const { return width_; }
  int height() const { return height_; }
  const std::set<LatticeEdge>& walls() const { return walls_; }
  bool has_wall(int xa, int ya, int xb, int yb) const;

  /// Adds every unit edge along an axis-parallel integer segment.
  void add_wall_run(int xa, int ya, int xb, int yb);

  bool operator==(const GridMaze&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::set<LatticeEdge> walls_;
};

struct ExtrusionParams {
  int height = 1;  // extrusion height in tunnel widths
};

/// Per-side ratio of paper to folded footprint: each grid line gives up a
/// pleat of width 2h, so a unit tunnel needs 1 + 2h units of paper.
int scale_factor(const ExtrusionParams& params);

enum class Fold { Mountain, Valley };

struct Crease {
  Point2 a;
  Point2 b;
  Fold fold;
};

enum class PaperEdge { Left, Right, Bottom, Top };

struct InterfacePoint {
  double position;  // coordinate along the edge
  Fold fold;
};

struct CreasePattern {
  double width = 0;
  double height = 0;
  std::vector<Crease> creases;

  /// Crease endpoints on one paper edge, sorted by position.
  std::vector<InterfacePoint> boundary_interface(PaperEdge edge) const;
  bool has_fold(Fold f) const;
};

CreasePattern generate_crease_pattern(const GridMaze& maze, const ExtrusionParams& params = {});

struct VertexCheck {
  Point2 position;
  int mountains = 0;
  int valleys = 0;
  bool maekawa = false;
  bool kawasaki = false;

  bool ok() const { return maekawa && kawasaki; }
};

struct FoldabilityReport {
  std::vector<VertexCheck> vertices;  // interior vertices only

  size_t failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Maekawa and Kawasaki at every interior vertex. Collinear abutting creases
/// with equal assignment are merged first, so a straight pass-through is not a vertex.
FoldabilityReport check_flat_foldability_local(const CreasePattern& cp);

enum class ComposeSide { Right, Below };

/// Glues cpB to the right of / below cpA. Throws InterfaceMismatch when the
/// creases meeting the shared edge disagree in position or assignment.
CreasePattern compose(const CreasePattern& cpA, const CreasePattern& cpB, ComposeSide side);

/// Blank sheet that carries `neighbor`'s right-edge creases straight across.
CreasePattern spacer_for(const CreasePattern& neighbor, double width);

VectorScene render_maze_2d(const GridMaze& maze);
VectorScene render_extrusion_3d(const GridMaze& maze, const ExtrusionParams& params = {});
VectorScene render_crease_pattern(const CreasePattern& cp);

/// One crease per line: "x1 y1 x2 y2 M|V".
std::string write_crease_list(const CreasePattern& cp);

}  // namespace pfont
