#pragma once

// Reference implementations for cross-checking the library. They share no
// code with src/ beyond the public data types.

#include "pfont/conveyer.hpp"
#include "pfont/glyphdata.hpp"
#include "pfont/hinged.hpp"
#include "pfont/maze.hpp"

#include <array>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using pfont::Point2;

// ---- conveyer ------------------------------------------------------------

/// Winding as (disk, clockwise) pairs.
using Winding = std::vector<std::pair<int, bool>>;

/// Canonical key: least rotation of the winding or of its mirror.
Winding canonical_winding(const Winding& w);

/// Every valid belt found by trying all orders and orientations.
std::set<Winding> naive_belts(const std::vector<Point2>& centers);

/// Total length of the belt for `w`, built from scratch.
double naive_belt_length(const std::vector<Point2>& centers, const Winding& w);

Winding from_spec(const pfont::BeltSpec& spec);

/// Random centers with pairwise distance at least `min_dist`.
std::vector<Point2> random_disks(std::mt19937_64& gen, int n, double box, double min_dist);

/// Perimeter of the convex hull (monotone chain).
double hull_perimeter(std::vector<Point2> pts);

// ---- geometry ------------------------------------------------------------

using IPoint = std::array<long long, 2>;

/// Exact simplicity test for a polyline on integer points; closed when the
/// last point equals the first.
bool lattice_path_simple(const std::vector<IPoint>& pts);

// ---- linkage -------------------------------------------------------------

/// Number of shapes the five-joint chain can take, up to rotation,
/// translation and reading direction.
size_t count_chain_shapes(const std::array<double, 5>& angles);

// ---- maze ----------------------------------------------------------------

struct MazeVertexVerdict {
  long long kx = 0, ky = 0;  // position scaled by 1e6
  bool ok = false;

  auto operator<=>(const MazeVertexVerdict&) const = default;
};

/// Maekawa and Kawasaki at every interior vertex of an axis-parallel pattern.
std::set<MazeVertexVerdict> axis_pattern_vertices(const pfont::CreasePattern& cp);

// ---- hinged --------------------------------------------------------------

/// Whether the standard chain of 4*cells pieces can fill the shape, decided by
/// the Euler-trail condition on slot hypotenuses.
bool standard_chain_fits(const std::vector<pfont::AboloCell>& cells);

/// Exhaustive placement search for arbitrary hinges on small shapes.
bool chain_fits_dp(const std::vector<pfont::AboloCell>& cells, const std::vector<pfont::Hinge>& hinges);

// ---- documents -----------------------------------------------------------

/// Minimal XML check: balanced tags, quoted attributes, one root element.
bool xml_well_formed(const std::string& doc, std::string* why = nullptr);

pfont::FontData load_shipped(pfont::FontId id);
std::string font_path(pfont::FontId id);

}  // namespace oracle
