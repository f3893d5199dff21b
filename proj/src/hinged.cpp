#include "pfont/hinged.hpp"

#include "pfont/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace pfont {

namespace {

long long cross(const HalfPoint& o, const HalfPoint& p, const HalfPoint& q) {
  return static_cast<long long>(p.x2 - o.x2) * (q.y2 - o.y2) -
         static_cast<long long>(p.y2 - o.y2) * (q.x2 - o.x2);
}

RightTriangle oriented(HalfPoint r, HalfPoint p, HalfPoint q) {
  if (cross(r, p, q) < 0) std::swap(p, q);
  return {r, p, q};
}

HalfPoint mid(const HalfPoint& p, const HalfPoint& q) { return {(p.x2 + q.x2) / 2, (p.y2 + q.y2) / 2}; }

// Cut from the right angle to the hypotenuse midpoint, then from there to
// both leg midpoints. Every piece keeps its hypotenuse on a cell vertex and
// the cell's hypotenuse midpoint.
std::array<RightTriangle, 4> subdivide(const RightTriangle& t) {
  const HalfPoint mra = mid(t.r, t.a);
  const HalfPoint mrb = mid(t.r, t.b);
  const HalfPoint mab = mid(t.a, t.b);
  return {oriented(mra, t.r, mab), oriented(mra, t.a, mab), oriented(mrb, t.r, mab),
          oriented(mrb, t.b, mab)};
}

using EdgeKey = std::pair<HalfPoint, HalfPoint>;

EdgeKey edge_key(HalfPoint p, HalfPoint q) {
  if (q < p) std::swap(p, q);
  return {p, q};
}

std::array<EdgeKey, 3> edges_of(const RightTriangle& t) {
  return {edge_key(t.r, t.a), edge_key(t.a, t.b), edge_key(t.b, t.r)};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Separating-axis test on exact integer coordinates: interiors overlap iff no
// edge normal of either triangle separates them strictly.
bool interiors_overlap(const RightTriangle& s, const RightTriangle& t) {
  const std::array<HalfPoint, 3> ps = {s.r, s.a, s.b};
  const std::array<HalfPoint, 3> qs = {t.r, t.a, t.b};
  auto separated_by = [](const std::array<HalfPoint, 3>& tri, const std::array<HalfPoint, 3>& other) {
    for (int e = 0; e < 3; ++e) {
      const HalfPoint& p = tri[e];
      const HalfPoint& q = tri[(e + 1) % 3];
      const HalfPoint& opposite = tri[(e + 2) % 3];
      const long long side = cross(p, q, opposite);
      bool all_outside = true;
      for (const auto& v : other) {
        const long long c = cross(p, q, v);
        if ((side > 0 && c > 0) || (side < 0 && c < 0)) all_outside = false;
      }
      if (all_outside) return true;
    }
    return false;
  };
  return !separated_by(ps, qs) && !separated_by(qs, ps);
}

}  // namespace

RightTriangle triangle_of(const AboloCell& c) {
  const HalfPoint p00{2 * c.x, 2 * c.y};
  const HalfPoint p10{2 * c.x + 2, 2 * c.y};
  const HalfPoint p01{2 * c.x, 2 * c.y + 2};
  const HalfPoint p11{2 * c.x + 2, 2 * c.y + 2};
  if (c.diagonal == Diagonal::NE) {
    return c.half == Half::First ? oriented(p10, p00, p11) : oriented(p01, p00, p11);
  }
  return c.half == Half::First ? oriented(p00, p10, p01) : oriented(p11, p10, p01);
}

PolyaboloReport validate_polyabolo(const Polyabolo& p, size_t expected_cells) {
  PolyaboloReport rep;
  rep.cell_count = p.cells.size();
  rep.expected_cells = expected_cells;
  rep.count_ok = rep.cell_count == expected_cells;
  rep.area = p.area();

  const std::set<AboloCell> unique(p.cells.begin(), p.cells.end());
  rep.distinct = unique.size() == p.cells.size();

  std::map<std::pair<int, int>, std::set<Diagonal>> diagonals;
  for (const auto& c : unique) diagonals[{c.x, c.y}].insert(c.diagonal);
  rep.overlap_free = std::all_of(diagonals.begin(), diagonals.end(),
                                 [](const auto& kv) { return kv.second.size() == 1; });

  const std::vector<AboloCell> cells(unique.begin(), unique.end());
  UnionFind uf(cells.size());
  std::map<EdgeKey, int> owner;
  for (size_t i = 0; i < cells.size(); ++i) {
    for (const auto& e : edges_of(triangle_of(cells[i]))) {
      auto [it, inserted] = owner.try_emplace(e, static_cast<int>(i));
      if (!inserted) uf.unite(static_cast<int>(i), it->second);
    }
  }
  int components = 0;
  for (size_t i = 0; i < cells.size(); ++i) components += uf.find(static_cast<int>(i)) == static_cast<int>(i);
  rep.connected = components == 1;
  return rep;
}

RefinedShape refine(const Polyabolo& p) {
  const PolyaboloReport rep = validate_polyabolo(p, p.cells.size());
  if (p.cells.empty() || !rep.distinct || !rep.overlap_free || !rep.connected) {
    throw Error(ErrorCode::InvalidPolyabolo, "polyabolo must be non-empty, overlap-free and edge-connected");
  }
  std::vector<AboloCell> cells = p.cells;
  std::sort(cells.begin(), cells.end());

  RefinedShape shape;
  for (size_t i = 0; i < cells.size(); ++i) {
    const auto subs = subdivide(triangle_of(cells[i]));
    for (int k = 0; k < 4; ++k) shape.slots.push_back({static_cast<int>(i), k, subs[k]});
  }
  const size_t n = shape.slots.size();
  std::map<EdgeKey, std::vector<int>> by_edge;
  std::map<HalfPoint, std::vector<int>> by_vertex;
  for (size_t s = 0; s < n; ++s) {
    const auto& t = shape.slots[s].tri;
    for (const auto& e : edges_of(t)) by_edge[e].push_back(static_cast<int>(s));
    for (const auto& v : {t.r, t.a, t.b}) by_vertex[v].push_back(static_cast<int>(s));
  }
  std::vector<std::set<int>> edge_adj(n), vertex_adj(n);
  for (const auto& [e, list] : by_edge) {
    for (int u : list) for (int v : list) if (u != v) edge_adj[u].insert(v);
  }
  for (const auto& [pt, list] : by_vertex) {
    for (int u : list) for (int v : list) if (u != v) vertex_adj[u].insert(v);
  }
  for (size_t s = 0; s < n; ++s) {
    shape.edge_adjacent.emplace_back(edge_adj[s].begin(), edge_adj[s].end());
    shape.vertex_adjacent.emplace_back(vertex_adj[s].begin(), vertex_adj[s].end());
  }
  return shape;
}

HingedChain HingedChain::standard(size_t pieces) {
  HingedChain chain;
  chain.pieces = pieces;
  chain.hinges.assign(pieces > 0 ? pieces - 1 : 0, Hinge{Corner::B, Corner::A});
  return chain;
}

HalfPoint corner_position(const RefinedShape& shape, const Placement& pl, Corner c) {
  const RightTriangle& t = shape.slots.at(pl.slot).tri;
  switch (c) {
    case Corner::Right: return t.r;
    case Corner::A: return pl.mirrored ? t.b : t.a;
    case Corner::B: return pl.mirrored ? t.a : t.b;
  }
  return t.r;
}

std::vector<int> FoldAssignment::slot_indices() const {
  std::vector<int> out;
  out.reserve(placements.size());
  for (const auto& pl : placements) out.push_back(pl.slot);
  return out;
}

namespace {

// Hamiltonian-path style search over placements. A placement (slot, mirror)
// is a node; hinge i links placement p to q when corner hinges[i].out of p
// coincides with corner hinges[i].in of q.
class FoldSearch {
 public:
  FoldSearch(const HingedChain& chain, const RefinedShape& shape, std::uint64_t budget)
      : chain_(chain), shape_(shape), budget_(budget), n_(shape.slots.size()) {
    std::map<HalfPoint, int> ids;
    auto id_of = [&](const HalfPoint& p) {
      auto [it, inserted] = ids.try_emplace(p, static_cast<int>(ids.size()));
      return it->second;
    };
    corner_ids_.resize(n_);
    for (size_t s = 0; s < n_; ++s) {
      const auto& t = shape.slots[s].tri;
      corner_ids_[s] = {id_of(t.r), id_of(t.a), id_of(t.b)};
    }
    point_slots_.resize(ids.size());
    for (size_t s = 0; s < n_; ++s) {
      for (int q : corner_ids_[s]) point_slots_[q].push_back(static_cast<int>(s));
    }
    std::vector<std::vector<int>> at_corner[3];
    for (auto& v : at_corner) v.resize(ids.size());
    for (int pl = 0; pl < static_cast<int>(2 * n_); ++pl) {
      for (int c = 0; c < 3; ++c) at_corner[c][point_of(pl, static_cast<Corner>(c))].push_back(pl);
    }

    // Distinct hinge kinds and, per kind, the placement successor lists.
    for (const Hinge& h : chain.hinges) {
      const int kind = 3 * static_cast<int>(h.out) + static_cast<int>(h.in);
      if (kind_index_[kind] < 0) {
        kind_index_[kind] = static_cast<int>(links_.size());
        links_.emplace_back(2 * n_);
        for (int pl = 0; pl < static_cast<int>(2 * n_); ++pl) {
          for (int q : at_corner[static_cast<int>(h.in)][point_of(pl, h.out)]) {
            if (q / 2 != pl / 2) links_.back()[pl].push_back(q);
          }
        }
      }
      hinge_kind_.push_back(kind_index_[kind]);
    }

    // Slot-level relaxation over all hinge kinds, used for pruning.
    std::vector<std::set<int>> succ(n_), pred(n_);
    for (const auto& link : links_) {
      for (int pl = 0; pl < static_cast<int>(2 * n_); ++pl) {
        for (int q : link[pl]) {
          succ[pl / 2].insert(q / 2);
          pred[q / 2].insert(pl / 2);
        }
      }
    }
    for (size_t s = 0; s < n_; ++s) {
      succ_.emplace_back(succ[s].begin(), succ[s].end());
      pred_.emplace_back(pred[s].begin(), pred[s].end());
      succ_count_.push_back(static_cast<int>(succ_[s].size()));
      pred_count_.push_back(static_cast<int>(pred_[s].size()));
    }
    for (size_t s = 0; s < n_; ++s) dead_ends_ += succ_count_[s] == 0;
    used_.assign(n_, false);
  }

  std::optional<FoldAssignment> run() {
    if (chain_.pieces != n_) return std::nullopt;
    if (n_ == 1) return FoldAssignment{{Placement{0, false}}};
    // Slots nothing can precede have to start the chain, so try them first.
    std::vector<int> roots(2 * n_);
    std::iota(roots.begin(), roots.end(), 0);
    std::stable_sort(roots.begin(), roots.end(),
                     [&](int l, int r) { return pred_count_[l / 2] < pred_count_[r / 2]; });
    for (int pl : roots) {
      if (extend(pl, 0)) return to_assignment();
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  int point_of(int pl, Corner c) const {
    const auto& ids = corner_ids_[pl / 2];
    const bool mirrored = pl % 2 == 1;
    switch (c) {
      case Corner::Right: return ids[0];
      case Corner::A: return mirrored ? ids[2] : ids[1];
      case Corner::B: return mirrored ? ids[1] : ids[2];
    }
    return ids[0];
  }

  FoldAssignment to_assignment() const {
    FoldAssignment fa;
    for (int pl : path_) fa.placements.push_back(Placement{pl / 2, pl % 2 == 1});
    return fa;
  }

  void use(int s) {
    used_[s] = true;
    if (succ_count_[s] == 0) --dead_ends_;
    for (int t : succ_[s]) --pred_count_[t];
    for (int t : pred_[s]) {
      if (--succ_count_[t] == 0 && !used_[t]) ++dead_ends_;
    }
  }

  void release(int s) {
    for (int t : pred_[s]) {
      if (succ_count_[t]++ == 0 && !used_[t]) --dead_ends_;
    }
    for (int t : succ_[s]) ++pred_count_[t];
    used_[s] = false;
    if (succ_count_[s] == 0) ++dead_ends_;
  }

  // Unused slots that only the current piece could precede must come next;
  // more than one of them, or more than one slot without a successor, is fatal.
  bool prunable(int last, size_t piece) const {
    if (dead_ends_ > 1) return true;
    const auto& after_last = succ_[last / 2];
    int forced = 0;
    for (int t : after_last) forced += !used_[t] && pred_count_[t] == 0;
    if (forced > 1) return true;
    if (piece > 0) {
      for (int t : succ_[path_[piece - 1] / 2]) {
        if (!used_[t] && pred_count_[t] == 0 &&
            !std::binary_search(after_last.begin(), after_last.end(), t)) {
          return true;
        }
      }
    }
    return !reachable_from(point_of(last, chain_.hinges[piece].out));
  }

  // Every unused slot must still touch the hinge point through a run of
  // unused slots sharing corners.
  bool reachable_from(int start) const {
    std::vector<char> seen_point(point_slots_.size(), 0);
    std::vector<char> seen_slot(n_, 0);
    std::vector<int> stack{start};
    seen_point[start] = 1;
    size_t reached = 0;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      for (int s : point_slots_[p]) {
        if (used_[s] || seen_slot[s]) continue;
        seen_slot[s] = 1;
        ++reached;
        for (int q : corner_ids_[s]) {
          if (!seen_point[q]) {
            seen_point[q] = 1;
            stack.push_back(q);
          }
        }
      }
    }
    return reached == n_ - path_.size();
  }

  int onward(int pl, size_t piece) const {
    if (piece + 1 >= chain_.hinges.size()) return 0;
    int count = 0;
    for (int q : links_[hinge_kind_[piece + 1]][pl]) count += !used_[q / 2];
    return count;
  }

  bool extend(int pl, size_t piece) {
    if (++nodes_ > budget_) throw Error(ErrorCode::BudgetExceeded, "fold search exceeded its node budget");
    use(pl / 2);
    path_.push_back(pl);
    if (piece + 1 == chain_.pieces) return true;
    if (!prunable(pl, piece)) {
      std::vector<std::pair<int, int>> next;
      for (int q : links_[hinge_kind_[piece]][pl]) {
        if (!used_[q / 2]) next.emplace_back(onward(q, piece), q);
      }
      // Fewest onward continuations first; ties by slot, direct before mirrored.
      std::sort(next.begin(), next.end());
      for (const auto& [score, q] : next) {
        if (extend(q, piece + 1)) return true;
      }
    }
    path_.pop_back();
    release(pl / 2);
    return false;
  }

  const HingedChain& chain_;
  const RefinedShape& shape_;
  std::uint64_t budget_;
  size_t n_;
  std::uint64_t nodes_ = 0;
  std::vector<std::array<int, 3>> corner_ids_;
  std::vector<std::vector<int>> point_slots_;
  std::array<int, 9> kind_index_ = {-1, -1, -1, -1, -1, -1, -1, -1, -1};
  std::vector<std::vector<std::vector<int>>> links_;  // [kind][placement] -> placements
  std::vector<int> hinge_kind_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  std::vector<int> succ_count_;  // unused slot successors
  std::vector<int> pred_count_;  // unused slot predecessors
  int dead_ends_ = 0;            // unused slots with no unused successor
  std::vector<bool> used_;
  std::vector<int> path_;
};

}  // namespace

std::optional<FoldAssignment> fold_chain(const HingedChain& chain, const Polyabolo& p, std::uint64_t budget,
                                         FoldSearchStats* stats) {
  if (!chain.valid()) throw Error(ErrorCode::InvalidArgument, "hinged chain is malformed");
  const RefinedShape shape = refine(p);
  FoldSearch search(chain, shape, budget);
  std::optional<FoldAssignment> result;
  try {
    result = search.run();
  } catch (const Error&) {
    if (stats) stats->nodes = search.nodes();
    throw;
  }
  if (stats) stats->nodes = search.nodes();
  return result;
}

bool verify_fold(const HingedChain& chain, const Polyabolo& p, const FoldAssignment& assignment) {
  if (!chain.valid()) return false;
  RefinedShape shape;
  try {
    shape = refine(p);
  } catch (const Error&) {
    return false;
  }
  const size_t n = shape.slots.size();
  const auto& pls = assignment.placements;
  if (pls.size() != chain.pieces || pls.size() != n) return false;

  std::vector<char> hit(n, 0);
  for (const auto& pl : pls) {
    if (pl.slot < 0 || static_cast<size_t>(pl.slot) >= n || hit[pl.slot]) return false;
    hit[pl.slot] = 1;
  }
  // Each slot must be congruent to a piece: legs of length 1/2 meeting at a right angle.
  for (const auto& pl : pls) {
    const RightTriangle& t = shape.slots[pl.slot].tri;
    const long long ax = t.a.x2 - t.r.x2, ay = t.a.y2 - t.r.y2;
    const long long bx = t.b.x2 - t.r.x2, by = t.b.y2 - t.r.y2;
    if (ax * ax + ay * ay != 1 || bx * bx + by * by != 1 || ax * bx + ay * by != 0) return false;
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (interiors_overlap(shape.slots[pls[i].slot].tri, shape.slots[pls[j].slot].tri)) return false;
    }
  }
  for (size_t i = 0; i + 1 < n; ++i) {
    const Hinge& h = chain.hinges[i];
    if (corner_position(shape, pls[i], h.out) != corner_position(shape, pls[i + 1], h.in)) return false;
  }
  return true;
}

Polyabolo square_polyabolo(int side) {
  Polyabolo p;
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      p.cells.push_back({x, y, Diagonal::NE, Half::First});
      p.cells.push_back({x, y, Diagonal::NE, Half::Second});
    }
  }
  return p;
}

VectorScene render_polyabolo(const Polyabolo& p) {
  VectorScene scene;
  for (const auto& c : p.cells) {
    const auto k = triangle_of(c).corners();
    scene.add(PolygonPrim{{k.begin(), k.end()}, StyleClass::Piece});
  }
  return scene;
}

VectorScene render_fold(const HingedChain& chain, const Polyabolo& p, const FoldAssignment& assignment) {
  VectorScene scene;
  const RefinedShape shape = refine(p);
  for (const auto& pl : assignment.placements) {
    const auto k = shape.slots.at(pl.slot).tri.corners();
    scene.add(PolygonPrim{{k.begin(), k.end()}, StyleClass::Piece});
  }
  const size_t hinges = std::min(chain.hinges.size(), assignment.placements.size() - 1);
  for (size_t i = 0; i < hinges && assignment.placements.size() > 1; ++i) {
    const HalfPoint h = corner_position(shape, assignment.placements[i], chain.hinges[i].out);
    scene.add_circle(h.to_point(), 0.04, StyleClass::Hinge);
  }
  return scene;
}

VectorScene render_chain(const HingedChain& chain, size_t per_row) {
  if (per_row == 0) throw Error(ErrorCode::InvalidArgument, "chain rows need at least one piece");
  VectorScene scene;
  const double leg = 0.5;
  const double pitch = 1.25;
  for (size_t i = 0; i < chain.pieces; ++i) {
    const size_t row = i / per_row;
    const size_t col = i % per_row;
    const double y = -static_cast<double>(row) * pitch;
    const double up = i % 2 == 0 ? leg : -leg;
    Point2 r, a;
    if (row % 2 == 0) {
      r = Point2(col * leg, y);
      a = Point2((col + 1) * leg, y);
    } else {
      r = Point2((per_row - col) * leg, y);
      a = Point2((per_row - col - 1) * leg, y);
    }
    scene.add(PolygonPrim{{r, a, Point2(r.x(), y + up)}, StyleClass::Piece});
    if (i + 1 < chain.pieces) {
      if (col + 1 < per_row) {
        scene.add_circle(a, 0.04, StyleClass::Hinge);
      } else {
        scene.add(PolylinePrim{{a, Point2(a.x(), y - pitch)}, false, StyleClass::Hinge});
      }
    }
  }
  return scene;
}

}  // namespace pfont
