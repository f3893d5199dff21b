#include "pfont/maze.hpp"

#include "pfont/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace pfont {

LatticeEdge LatticeEdge::make(int xa, int ya, int xb, int yb) {
  const int dx = std::abs(xb - xa);
  const int dy = std::abs(yb - ya);
  if (dx + dy != 1) {
    throw Error(ErrorCode::InvalidArgument, "wall edge must join adjacent lattice points");
  }
  if (std::pair(xb, yb) < std::pair(xa, ya)) {
    std::swap(xa, xb);
    std::swap(ya, yb);
  }
  return LatticeEdge{xa, ya, xb, yb};
}

GridMaze::GridMaze(int width, int height, std::set<LatticeEdge> walls)
    : width_(width), height_(height), walls_(std::move(walls)) {
  if (width < 1 || height < 1) throw Error(ErrorCode::InvalidArgument, "maze must be at least 1x1");
  for (const auto& e : walls_) {
    if (e.x1 < 0 || e.y1 < 0 || e.x2 > width || e.y2 > height) {
      throw Error(ErrorCode::InvalidArgument, "wall edge outside the maze bounds");
    }
  }
}

bool GridMaze::has_wall(int xa, int ya, int xb, int yb) const {
  return walls_.count(LatticeEdge::make(xa, ya, xb, yb)) != 0;
}

void GridMaze::add_wall_run(int xa, int ya, int xb, int yb) {
  if (xa != xb && ya != yb) throw Error(ErrorCode::InvalidArgument, "wall runs must be axis-parallel");
  const int steps = std::abs(xb - xa) + std::abs(yb - ya);
  const int sx = (xb > xa) - (xb < xa);
  const int sy = (yb > ya) - (yb < ya);
  for (int k = 0; k < steps; ++k) {
    const LatticeEdge e = LatticeEdge::make(xa + k * sx, ya + k * sy, xa + (k + 1) * sx, ya + (k + 1) * sy);
    if (e.x1 < 0 || e.y1 < 0 || e.x2 > width_ || e.y2 > height_) {
      throw Error(ErrorCode::InvalidArgument, "wall edge outside the maze bounds");
    }
    walls_.insert(e);
  }
}

int scale_factor(const ExtrusionParams& params) {
  if (params.height < 1) throw Error(ErrorCode::InvalidArgument, "extrusion height must be >= 1");
  return 1 + 2 * params.height;
}

bool CreasePattern::has_fold(Fold f) const {
  return std::any_of(creases.begin(), creases.end(), [f](const Crease& c) { return c.fold == f; });
}

std::vector<InterfacePoint> CreasePattern::boundary_interface(PaperEdge edge) const {
  std::vector<InterfacePoint> out;
  auto on_edge = [&](const Point2& p) {
    switch (edge) {
      case PaperEdge::Left: return std::abs(p.x()) <= kTol;
      case PaperEdge::Right: return std::abs(p.x() - width) <= kTol;
      case PaperEdge::Bottom: return std::abs(p.y()) <= kTol;
      case PaperEdge::Top: return std::abs(p.y() - height) <= kTol;
    }
    return false;
  };
  const bool vertical_edge = edge == PaperEdge::Left || edge == PaperEdge::Right;
  for (const auto& c : creases) {
    if (on_edge(c.a) && on_edge(c.b)) continue;  // lies along the edge
    for (const Point2* p : {&c.a, &c.b}) {
      if (on_edge(*p)) out.push_back({vertical_edge ? p->y() : p->x(), c.fold});
    }
  }
  std::sort(out.begin(), out.end(), [](const InterfacePoint& l, const InterfacePoint& r) {
    return l.position < r.position || (l.position == r.position && l.fold < r.fold);
  });
  return out;
}

namespace {

// --- crease generation ------------------------------------------------------

// Lines of one maze grid line: a full pleat (3 lines) inside the sheet, a
// single line along the outer border.
struct GridLine {
  int index = 0;
  std::vector<double> positions;
};

struct PleatSegment {
  int lines = 3;
  bool raised = false;
  bool dangling = false;
  std::vector<int> bits;  // 1 = mountain, per line, low coordinate first
};

// GF(2) system: rows are block equations, columns are free segment parities.
class ParitySystem {
 public:
  explicit ParitySystem(size_t vars) : vars_(vars) {}

  void add_row(std::vector<uint8_t> coeffs, uint8_t rhs) {
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(rhs);
  }

  // Returns false when inconsistent; unconstrained variables are set to 0.
  bool solve(std::vector<uint8_t>& x) {
    std::vector<int> pivot_of_row;
    size_t r = 0;
    for (size_t c = 0; c < vars_ && r < rows_.size(); ++c) {
      size_t p = r;
      while (p < rows_.size() && !rows_[p][c]) ++p;
      if (p == rows_.size()) continue;
      std::swap(rows_[p], rows_[r]);
      std::swap(rhs_[p], rhs_[r]);
      for (size_t k = 0; k < rows_.size(); ++k) {
        if (k != r && rows_[k][c]) {
          for (size_t j = c; j < vars_; ++j) rows_[k][j] ^= rows_[r][j];
          rhs_[k] ^= rhs_[r];
        }
      }
      pivot_of_row.push_back(static_cast<int>(c));
      ++r;
    }
    for (size_t k = r; k < rows_.size(); ++k) {
      if (rhs_[k]) return false;
    }
    x.assign(vars_, 0);
    for (size_t k = 0; k < r; ++k) x[pivot_of_row[k]] = rhs_[k];
    return true;
  }

 private:
  size_t vars_;
  std::vector<std::vector<uint8_t>> rows_;
  std::vector<uint8_t> rhs_;
};

class CreaseGenerator {
 public:
  CreaseGenerator(const GridMaze& maze, const ExtrusionParams& params)
      : maze_(maze), h_(params.height), s_(scale_factor(params)) {}

  CreasePattern run() {
    CreasePattern cp;
    cp.width = s_ * maze_.width();
    cp.height = s_ * maze_.height();
    if (maze_.walls().empty()) return cp;

    cols_ = grid_lines(maze_.width(), /*vertical=*/true);
    rows_ = grid_lines(maze_.height(), /*vertical=*/false);
    build_segments();
    solve_parities();
    emit(cp);
    return cp;
  }

 private:
  // Interior grid lines always carry a pleat once the maze has any wall; the
  // outer border line only when some wall touches that border.
  std::vector<GridLine> grid_lines(int count, bool vertical) const {
    std::vector<GridLine> out;
    for (int g = 0; g <= count; ++g) {
      GridLine line{g, {}};
      if (g > 0 && g < count) {
        line.positions = {double(s_ * g - h_), double(s_ * g), double(s_ * g + h_)};
      } else {
        bool touched = false;
        for (const auto& e : maze_.walls()) {
          const int c1 = vertical ? e.x1 : e.y1;
          const int c2 = vertical ? e.x2 : e.y2;
          if (c1 == g || c2 == g) touched = true;
        }
        if (!touched) continue;
        line.positions = {g == 0 ? double(h_) : double(s_ * count - h_)};
      }
      out.push_back(std::move(line));
    }
    return out;
  }

  // Segments of a pleat along grid line `g` between the crossing pleats `across`.
  std::vector<PleatSegment> segments_along(const GridLine& line, const std::vector<GridLine>& across,
                                           bool horizontal_line, int extent) const {
    std::vector<PleatSegment> segs;
    const int lines = static_cast<int>(line.positions.size());
    auto covered_has_wall = [&](int from, int to) {
      for (int t = from; t < to; ++t) {
        const bool w = horizontal_line ? maze_.has_wall(t, line.index, t + 1, line.index)
                                       : maze_.has_wall(line.index, t, line.index, t + 1);
        if (w) return true;
      }
      return false;
    };
    const int m = static_cast<int>(across.size());
    for (int t = 0; t <= m; ++t) {
      const int from = t == 0 ? 0 : across[t - 1].index;
      const int to = t == m ? extent : across[t].index;
      PleatSegment seg;
      seg.lines = lines;
      seg.dangling = t == 0 || t == m;
      seg.raised = covered_has_wall(from, to);
      segs.push_back(seg);
    }
    return segs;
  }

  void build_segments() {
    for (const auto& r : rows_) hseg_.push_back(segments_along(r, cols_, true, maze_.width()));
    for (const auto& c : cols_) vseg_.push_back(segments_along(c, rows_, false, maze_.height()));
  }

  // A segment's parity is free when its outer pleat lines can absorb it.
  // Dangling single lines and unraised dangling pleats prefer parity 0 so that
  // every glyph shows the same pattern at its border.
  enum class VarKind { Free, Preferred, Fixed };

  VarKind kind_of(const PleatSegment& s) const {
    if (s.lines == 3) return s.dangling && !s.raised ? VarKind::Preferred : VarKind::Free;
    return s.dangling && !s.raised ? VarKind::Preferred : VarKind::Fixed;
  }

  int fixed_parity(const PleatSegment& s) const {
    if (s.lines == 1 && !s.dangling) return s.raised ? 0 : 1;  // raised border folds as a valley
    return 0;
  }

  void solve_parities() {
    std::vector<PleatSegment*> all;
    for (auto& row : hseg_) for (auto& s : row) all.push_back(&s);
    for (auto& col : vseg_) for (auto& s : col) all.push_back(&s);

    std::vector<int> par(all.size(), 0);
    for (bool relax : {false, true}) {
      std::vector<int> var(all.size(), -1);
      size_t nvars = 0;
      for (size_t i = 0; i < all.size(); ++i) {
        const VarKind k = kind_of(*all[i]);
        if (k == VarKind::Free || (relax && k == VarKind::Preferred)) var[i] = static_cast<int>(nvars++);
      }
      auto index_of = [&](const PleatSegment* s) {
        return static_cast<size_t>(std::find(all.begin(), all.end(), s) - all.begin());
      };
      ParitySystem sys(nvars);
      for (size_t r = 0; r < rows_.size(); ++r) {
        for (size_t c = 0; c < cols_.size(); ++c) {
          std::vector<uint8_t> coeffs(nvars, 0);
          uint8_t rhs = 1;
          for (const PleatSegment* s : {&hseg_[r][c], &hseg_[r][c + 1], &vseg_[c][r], &vseg_[c][r + 1]}) {
            const size_t i = index_of(s);
            if (var[i] >= 0) coeffs[var[i]] ^= 1;
            else rhs ^= static_cast<uint8_t>(fixed_parity(*s));
          }
          sys.add_row(std::move(coeffs), rhs);
        }
      }
      std::vector<uint8_t> x;
      if (!sys.solve(x)) continue;
      for (size_t i = 0; i < all.size(); ++i) par[i] = var[i] >= 0 ? x[var[i]] : fixed_parity(*all[i]);
      for (size_t i = 0; i < all.size(); ++i) assign_bits(*all[i], par[i]);
      return;
    }
    throw Error(ErrorCode::Unsupported, "no consistent crease assignment for this maze");
  }

  static void assign_bits(PleatSegment& s, int p) {
    if (s.lines == 1) {
      s.bits = {p};
      return;
    }
    const int mid = s.raised ? 1 : 0;  // a standing wall has a mountain ridge
    s.bits = {mid == p ? 0 : 1, mid, 0};
  }

  // Flip matrix of the block where row pleat r meets column pleat c: entry
  // (i, j) is 1 when the row line flips there, else the column line flips.
  std::vector<std::vector<int>> flips(size_t r, size_t c) const {
    const auto& left = hseg_[r][c].bits;
    const auto& right = hseg_[r][c + 1].bits;
    const auto& below = vseg_[c][r].bits;
    const auto& above = vseg_[c][r + 1].bits;
    const size_t nh = left.size();
    const size_t nv = below.size();
    std::vector<std::vector<int>> f(nh, std::vector<int>(nv, 0));
    std::vector<int> colp(nv);
    for (size_t j = 0; j < nv; ++j) colp[j] = static_cast<int>((nh + (below[j] ^ above[j])) & 1);
    for (size_t i = 0; i + 1 < nh; ++i) f[i][nv - 1] = left[i] ^ right[i];
    int last = left[nh - 1] ^ right[nh - 1];
    for (size_t j = 0; j + 1 < nv; ++j) {
      f[nh - 1][j] = colp[j];
      last ^= colp[j];
    }
    f[nh - 1][nv - 1] = last;
    return f;
  }

  void emit(CreasePattern& cp) const {
    std::vector<std::vector<std::vector<std::vector<int>>>> f(rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r) {
      for (size_t c = 0; c < cols_.size(); ++c) f[r].push_back(flips(r, c));
    }
    auto piece = [&](Point2 a, Point2 b, int bit) {
      if ((b - a).norm() > kTol) cp.creases.push_back({a, b, bit ? Fold::Mountain : Fold::Valley});
    };
    for (size_t r = 0; r < rows_.size(); ++r) {
      for (size_t i = 0; i < rows_[r].positions.size(); ++i) {
        const double y = rows_[r].positions[i];
        int bit = hseg_[r].front().bits[i];
        double x0 = 0;
        for (size_t c = 0; c < cols_.size(); ++c) {
          for (size_t j = 0; j < cols_[c].positions.size(); ++j) {
            const double x = cols_[c].positions[j];
            piece({x0, y}, {x, y}, bit);
            bit ^= f[r][c][i][j];
            x0 = x;
          }
        }
        piece({x0, y}, {cp.width, y}, bit);
      }
    }
    for (size_t c = 0; c < cols_.size(); ++c) {
      for (size_t j = 0; j < cols_[c].positions.size(); ++j) {
        const double x = cols_[c].positions[j];
        int bit = vseg_[c].front().bits[j];
        double y0 = 0;
        for (size_t r = 0; r < rows_.size(); ++r) {
          for (size_t i = 0; i < rows_[r].positions.size(); ++i) {
            const double y = rows_[r].positions[i];
            piece({x, y0}, {x, y}, bit);
            bit ^= 1 ^ f[r][c][i][j];
            y0 = y;
          }
        }
        piece({x, y0}, {x, cp.height}, bit);
      }
    }
  }

  const GridMaze& maze_;
  int h_;
  int s_;
  std::vector<GridLine> cols_;
  std::vector<GridLine> rows_;
  std::vector<std::vector<PleatSegment>> hseg_;  // [row][segment]
  std::vector<std::vector<PleatSegment>> vseg_;  // [column][segment]
};

// --- local flat-foldability -------------------------------------------------

struct MergedCrease {
  Point2 a;
  Point2 b;
  Fold fold;
};

std::vector<MergedCrease> merge_collinear(const std::vector<Crease>& creases) {
  struct Item {
    double t0, t1;
    Fold fold;
  };
  struct Group {
    Point2 dir;
    double offset;
    std::vector<Item> items;
  };
  std::map<std::pair<long long, long long>, Group> groups;
  for (const auto& c : creases) {
    Point2 d = (c.b - c.a).normalized();
    if (d.x() < -1e-12 || (std::abs(d.x()) <= 1e-12 && d.y() < 0)) d = -d;
    const double offset = cross2(d, c.a);
    const auto key = std::pair(std::llround(heading_of(d) * 1e6), std::llround(offset * 1e7));
    auto& g = groups[key];
    g.dir = d;
    g.offset = offset;
    double t0 = d.dot(c.a), t1 = d.dot(c.b);
    if (t1 < t0) std::swap(t0, t1);
    g.items.push_back({t0, t1, c.fold});
  }
  std::vector<MergedCrease> out;
  for (auto& [key, g] : groups) {
    std::sort(g.items.begin(), g.items.end(), [](const Item& l, const Item& r) { return l.t0 < r.t0; });
    const Point2 n = left_normal(g.dir);  // point = t*dir + offset*n recovers the line
    auto at = [&](double t) -> Point2 { return t * g.dir + g.offset * n; };
    Item cur = g.items.front();
    for (size_t i = 1; i < g.items.size(); ++i) {
      const Item& it = g.items[i];
      if (it.fold == cur.fold && it.t0 <= cur.t1 + kTol) {
        cur.t1 = std::max(cur.t1, it.t1);
      } else {
        out.push_back({at(cur.t0), at(cur.t1), cur.fold});
        cur = it;
      }
    }
    out.push_back({at(cur.t0), at(cur.t1), cur.fold});
  }
  return out;
}

struct PointKey {
  long long x, y;
  bool operator==(const PointKey&) const = default;
};

struct PointKeyHash {
  size_t operator()(const PointKey& k) const {
    return std::hash<long long>()(k.x) * 1000003u ^ std::hash<long long>()(k.y);
  }
};

PointKey key_of(const Point2& p) { return {std::llround(p.x() * 1e6), std::llround(p.y() * 1e6)}; }

}  // namespace

CreasePattern generate_crease_pattern(const GridMaze& maze, const ExtrusionParams& params) {
  return CreaseGenerator(maze, params).run();
}

size_t FoldabilityReport::failures() const {
  return static_cast<size_t>(
      std::count_if(vertices.begin(), vertices.end(), [](const VertexCheck& v) { return !v.ok(); }));
}

FoldabilityReport check_flat_foldability_local(const CreasePattern& cp) {
  const std::vector<MergedCrease> creases = merge_collinear(cp.creases);
  const size_t n = creases.size();

  std::unordered_map<PointKey, size_t, PointKeyHash> index;
  std::vector<Point2> points;
  std::vector<std::vector<size_t>> on_crease(n);
  auto register_point = [&](const Point2& p, size_t crease) {
    const PointKey k = key_of(p);
    auto [it, inserted] = index.try_emplace(k, points.size());
    if (inserted) points.push_back(p);
    auto& list = on_crease[crease];
    if (std::find(list.begin(), list.end(), it->second) == list.end()) list.push_back(it->second);
  };
  for (size_t i = 0; i < n; ++i) {
    register_point(creases[i].a, i);
    register_point(creases[i].b, i);
  }

  // Sweep on x to find crossings and T-junctions.
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  auto minx = [&](size_t i) { return std::min(creases[i].a.x(), creases[i].b.x()); };
  auto maxx = [&](size_t i) { return std::max(creases[i].a.x(), creases[i].b.x()); };
  std::sort(order.begin(), order.end(), [&](size_t l, size_t r) { return minx(l) < minx(r); });
  for (size_t oi = 0; oi < n; ++oi) {
    const size_t i = order[oi];
    const double ylo = std::min(creases[i].a.y(), creases[i].b.y());
    const double yhi = std::max(creases[i].a.y(), creases[i].b.y());
    for (size_t oj = oi + 1; oj < n && minx(order[oj]) <= maxx(i) + kTol; ++oj) {
      const size_t j = order[oj];
      if (std::max(creases[j].a.y(), creases[j].b.y()) < ylo - kTol ||
          std::min(creases[j].a.y(), creases[j].b.y()) > yhi + kTol) {
        continue;
      }
      const Contact c = intersect(Segment{creases[i].a, creases[i].b}, Segment{creases[j].a, creases[j].b});
      if (c.kind == ContactKind::Cross || c.kind == ContactKind::Touch) {
        for (const auto& p : c.points) {
          register_point(p, i);
          register_point(p, j);
        }
      }
    }
  }

  struct Ray {
    double angle;
    Fold fold;
  };
  std::vector<std::vector<Ray>> rays(points.size());
  for (size_t i = 0; i < n; ++i) {
    const auto& c = creases[i];
    for (size_t v : on_crease[i]) {
      const Point2& p = points[v];
      if ((p - c.a).norm() > 1e-6) rays[v].push_back({heading_of(c.a - p), c.fold});
      if ((p - c.b).norm() > 1e-6) rays[v].push_back({heading_of(c.b - p), c.fold});
    }
  }

  FoldabilityReport report;
  for (size_t v = 0; v < points.size(); ++v) {
    const Point2& p = points[v];
    const bool boundary = p.x() <= kTol || p.y() <= kTol || p.x() >= cp.width - kTol ||
                          p.y() >= cp.height - kTol;
    if (boundary) continue;
    auto& r = rays[v];
    std::sort(r.begin(), r.end(), [](const Ray& a, const Ray& b) { return a.angle < b.angle; });
    VertexCheck vc;
    vc.position = p;
    for (const auto& ray : r) (ray.fold == Fold::Mountain ? vc.mountains : vc.valleys)++;
    vc.maekawa = std::abs(vc.mountains - vc.valleys) == 2;
    if (r.size() % 2 == 0 && !r.empty()) {
      double odd = 0, even = 0;
      for (size_t k = 0; k < r.size(); ++k) {
        const double next = k + 1 < r.size() ? r[k + 1].angle : r[0].angle + 360.0;
        (k % 2 ? odd : even) += next - r[k].angle;
      }
      vc.kawasaki = std::abs(odd - 180.0) <= 1e-6 && std::abs(even - 180.0) <= 1e-6;
    }
    report.vertices.push_back(vc);
  }
  return report;
}

CreasePattern compose(const CreasePattern& cpA, const CreasePattern& cpB, ComposeSide side) {
  const bool right = side == ComposeSide::Right;
  const double shared_a = right ? cpA.height : cpA.width;
  const double shared_b = right ? cpB.height : cpB.width;
  if (std::abs(shared_a - shared_b) > kTol) {
    throw Error(ErrorCode::InterfaceMismatch, "glued edges differ in length");
  }
  const auto ia = cpA.boundary_interface(right ? PaperEdge::Right : PaperEdge::Bottom);
  const auto ib = cpB.boundary_interface(right ? PaperEdge::Left : PaperEdge::Top);
  const size_t common = std::min(ia.size(), ib.size());
  for (size_t k = 0; k < common; ++k) {
    if (std::abs(ia[k].position - ib[k].position) > kTol || ia[k].fold != ib[k].fold) {
      throw Error(ErrorCode::InterfaceMismatch,
                  "seam disagrees at position " + fixed6(std::min(ia[k].position, ib[k].position)));
    }
  }
  if (ia.size() != ib.size()) {
    const double pos = ia.size() > common ? ia[common].position : ib[common].position;
    throw Error(ErrorCode::InterfaceMismatch, "unmatched crease at seam position " + fixed6(pos));
  }

  CreasePattern out;
  Point2 offset_a = Point2::Zero();
  Point2 offset_b = Point2::Zero();
  if (right) {
    out.width = cpA.width + cpB.width;
    out.height = cpA.height;
    offset_b = Point2(cpA.width, 0);
  } else {
    out.width = cpA.width;
    out.height = cpA.height + cpB.height;
    offset_a = Point2(0, cpB.height);
  }
  out.creases.reserve(cpA.creases.size() + cpB.creases.size());
  for (const auto& c : cpA.creases) out.creases.push_back({c.a + offset_a, c.b + offset_a, c.fold});
  for (const auto& c : cpB.creases) out.creases.push_back({c.a + offset_b, c.b + offset_b, c.fold});
  return out;
}

CreasePattern spacer_for(const CreasePattern& neighbor, double width) {
  CreasePattern out;
  out.width = width;
  out.height = neighbor.height;
  for (const auto& p : neighbor.boundary_interface(PaperEdge::Right)) {
    out.creases.push_back({Point2(0, p.position), Point2(width, p.position), p.fold});
  }
  return out;
}

VectorScene render_maze_2d(const GridMaze& maze) {
  VectorScene scene;
  // Merge unit edges into maximal straight strokes.
  std::map<std::pair<int, int>, std::vector<int>> horiz, vert;
  for (const auto& e : maze.walls()) {
    if (e.horizontal()) horiz[{e.y1, 0}].push_back(e.x1);
    else vert[{e.x1, 0}].push_back(e.y1);
  }
  auto runs = [&](std::map<std::pair<int, int>, std::vector<int>>& m, bool horizontal) {
    for (auto& [key, starts] : m) {
      std::sort(starts.begin(), starts.end());
      size_t i = 0;
      while (i < starts.size()) {
        size_t j = i;
        while (j + 1 < starts.size() && starts[j + 1] == starts[j] + 1) ++j;
        const int fixed = key.first;
        const int lo = starts[i];
        const int hi = starts[j] + 1;
        if (horizontal) scene.add_segment(Point2(lo, fixed), Point2(hi, fixed), StyleClass::Wall);
        else scene.add_segment(Point2(fixed, lo), Point2(fixed, hi), StyleClass::Wall);
        i = j + 1;
      }
    }
  };
  runs(horiz, true);
  runs(vert, false);
  return scene;
}

VectorScene render_extrusion_3d(const GridMaze& maze, const ExtrusionParams& params) {
  VectorScene scene;
  const double w = maze.width();
  const double hgt = maze.height();
  scene.add(PolygonPrim{{Point2(0, 0), Point2(w, 0), Point2(w, hgt), Point2(0, hgt)}, StyleClass::Floor});
  // Oblique projection: height drawn along 30 degrees at half scale.
  const Point2 lift = 0.5 * params.height * unit_direction(30.0);
  std::vector<LatticeEdge> walls(maze.walls().begin(), maze.walls().end());
  auto depth = [&](const LatticeEdge& e) { return (e.x1 + e.x2) * lift.x() + (e.y1 + e.y2) * lift.y(); };
  std::stable_sort(walls.begin(), walls.end(),
                   [&](const LatticeEdge& a, const LatticeEdge& b) { return depth(a) > depth(b); });
  for (const auto& e : walls) {
    const Point2 p(e.x1, e.y1), q(e.x2, e.y2);
    scene.add(PolygonPrim{{p, q, q + lift, p + lift}, StyleClass::Extrusion});
  }
  return scene;
}

VectorScene render_crease_pattern(const CreasePattern& cp) {
  VectorScene scene;
  for (const auto& c : cp.creases) {
    scene.add_segment(c.a, c.b, c.fold == Fold::Mountain ? StyleClass::Mountain : StyleClass::Valley);
  }
  scene.add(PolylinePrim{{Point2(0, 0), Point2(cp.width, 0), Point2(cp.width, cp.height), Point2(0, cp.height)},
                         true,
                         StyleClass::Boundary});
  return scene;
}

std::string write_crease_list(const CreasePattern& cp) {
  std::string out;
  for (const auto& c : cp.creases) {
    out += fixed6(c.a.x()) + " " + fixed6(c.a.y()) + " " + fixed6(c.b.x()) + " " + fixed6(c.b.y()) + " " +
           (c.fold == Fold::Mountain ? "M" : "V") + "\n";
  }
  return out;
}

}  // namespace pfont
