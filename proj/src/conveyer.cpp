#include "pfont/conveyer.hpp"

#include "pfont/error.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace pfont {

DiskSet::DiskSet(std::vector<Point2> centers) : centers_(std::move(centers)) {
  for (size_t i = 0; i < centers_.size(); ++i) {
    if (!is_finite(centers_[i])) {
      throw Error(ErrorCode::InvalidArgument, "disk " + std::to_string(i) + " is not finite");
    }
    for (size_t j = 0; j < i; ++j) {
      if ((centers_[i] - centers_[j]).norm() < 2.0 + kTol) {
        throw Error(ErrorCode::InvalidArgument,
                    "disks " + std::to_string(j) + " and " + std::to_string(i) + " are not disjoint");
      }
    }
  }
}

BeltSpec BeltSpec::canonical() const {
  const size_t n = winding.size();
  if (n == 0) return *this;
  std::vector<WindingEntry> mirror(winding.rbegin(), winding.rend());
  for (auto& e : mirror) e.orientation = flipped(e.orientation);

  std::vector<WindingEntry> best;
  const std::vector<WindingEntry>* sources[] = {&winding, &mirror};
  for (const auto* src : sources) {
    for (size_t r = 0; r < n; ++r) {
      std::vector<WindingEntry> rot(n);
      for (size_t k = 0; k < n; ++k) rot[k] = (*src)[(r + k) % n];
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return BeltSpec{std::move(best)};
}

std::string BeltSpec::to_string() const {
  std::string out;
  for (size_t i = 0; i < winding.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(winding[i].disk);
    out += winding[i].orientation == Orientation::CCW ? '+' : '-';
  }
  return out;
}

BeltSpec BeltSpec::parse(const std::string& text) {
  BeltSpec spec;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const char last = tok.back();
    if (tok.size() < 2 || (last != '+' && last != '-')) {
      throw Error(ErrorCode::InvalidSpec, "bad winding entry '" + tok + "'");
    }
    const std::string digits = tok.substr(0, tok.size() - 1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::InvalidSpec, "bad disk index in '" + tok + "'");
    }
    spec.winding.push_back({std::stoi(digits), last == '+' ? Orientation::CCW : Orientation::CW});
  }
  return spec;
}

namespace {

void check_spec(const DiskSet& disks, const BeltSpec& spec) {
  const auto& w = spec.winding;
  if (w.empty()) throw Error(ErrorCode::InvalidSpec, "empty winding");
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].disk < 0 || static_cast<size_t>(w[i].disk) >= disks.size()) {
      throw Error(ErrorCode::InvalidSpec, "disk index " + std::to_string(w[i].disk) + " out of range");
    }
    if (w.size() > 1 && w[i].disk == w[(i + 1) % w.size()].disk) {
      throw Error(ErrorCode::InvalidSpec, "disk " + std::to_string(w[i].disk) + " repeats consecutively");
    }
  }
}

// Tangent segment leaving `from` and arriving at `to`.
Segment belt_segment(const DiskSet& disks, const WindingEntry& from, const WindingEntry& to) {
  const Point2& c1 = disks[from.disk];
  const Point2& c2 = disks[to.disk];
  const Side side = from.orientation == Orientation::CCW ? Side::Right : Side::Left;
  const TangentKind kind =
      from.orientation == to.orientation ? TangentKind::External : TangentKind::Internal;
  if (kind == TangentKind::Internal && (c2 - c1).norm() <= 2.0 + kTol) {
    throw Error(ErrorCode::InternalTangentInfeasible,
                "disks " + std::to_string(from.disk) + " and " + std::to_string(to.disk) +
                    " are too close for a crossing tangent");
  }
  auto [p, q] = tangent_points(c1, c2, kind, side);
  return Segment{p, q};
}

Arc belt_arc(const Point2& center, const Point2& in, const Point2& out, Orientation o) {
  Arc arc;
  arc.center = center;
  arc.radius = 1.0;
  arc.orientation = o;
  arc.start_angle = heading_of(in - center);
  const double end = heading_of(out - center);
  arc.sweep = o == Orientation::CCW ? normalize_degrees(end - arc.start_angle)
                                    : normalize_degrees(arc.start_angle - end);
  // Snap float noise near a full turn back to the zero-extent pass-through.
  if (arc.sweep > 360.0 - 1e-9) arc.sweep = 0.0;
  return arc;
}

double distance_to_arc(const Point2& p, const Arc& arc) {
  const Point2 d = p - arc.center;
  if (d.norm() > kTol && arc.contains_angle(heading_of(d), 0.0)) {
    return std::abs(d.norm() - arc.radius);
  }
  return std::min((p - arc.start_point()).norm(), (p - arc.end_point()).norm());
}

}  // namespace

BeltPath compute_belt(const DiskSet& disks, const BeltSpec& spec) {
  check_spec(disks, spec);
  const auto& w = spec.winding;
  const size_t n = w.size();
  BeltPath path;
  if (n == 1) {
    Arc full{disks[w[0].disk], 1.0, 0.0, 360.0, w[0].orientation};
    path.elements.emplace_back(full);
    path.element_disk.push_back(w[0].disk);
    path.total_length = full.length();
    return path;
  }
  std::vector<Segment> segs;
  segs.reserve(n);
  for (size_t i = 0; i < n; ++i) segs.push_back(belt_segment(disks, w[i], w[(i + 1) % n]));
  for (size_t i = 0; i < n; ++i) {
    const size_t next = (i + 1) % n;
    path.elements.emplace_back(segs[i]);
    path.element_disk.push_back(-1);
    path.elements.emplace_back(belt_arc(disks[w[next].disk], segs[i].b, segs[next].a, w[next].orientation));
    path.element_disk.push_back(w[next].disk);
  }
  path.total_length = path_length(path.elements);
  return path;
}

BeltReport validate_belt(const DiskSet& disks, const BeltPath& path) {
  BeltReport report;
  const auto& elems = path.elements;
  if (elems.empty()) return report;

  report.simple = path_is_simple(elems, OverlapPolicy::Forbid);

  report.avoids_interiors = true;
  for (const auto& e : elems) {
    for (const auto& c : disks.centers()) {
      const double clearance = std::holds_alternative<Segment>(e)
                                   ? distance_to_segment(c, std::get<Segment>(e))
                                   : distance_to_arc(c, std::get<Arc>(e));
      if (clearance < 1.0 - kTol) report.avoids_interiors = false;
    }
  }

  report.visits_all = true;
  for (size_t d = 0; d < disks.size(); ++d) {
    if (std::find(path.element_disk.begin(), path.element_disk.end(), static_cast<int>(d)) ==
        path.element_disk.end()) {
      report.visits_all = false;
    }
  }

  report.taut = true;
  const size_t n = elems.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& e = elems[i];
    if (const auto* arc = std::get_if<Arc>(&e)) {
      if (arc->sweep < 0 || (arc->sweep >= 360.0 && n > 1)) report.taut = false;
    }
    if (n == 1) break;
    const auto& f = elems[(i + 1) % n];
    const Point2 a = end_direction(e);
    const Point2 b = start_direction(f);
    if ((end_point(e) - start_point(f)).norm() > 1e-9 || (a - b).norm() > 1e-9) report.taut = false;
  }
  return report;
}

namespace {

class BeltSearch {
 public:
  BeltSearch(const DiskSet& disks, std::uint64_t budget) : disks_(disks), budget_(budget) {}

  BeltSolveResult run() {
    const size_t n = disks_.size();
    used_.assign(n, false);
    for (Orientation o : {Orientation::CCW, Orientation::CW}) {
      order_ = {{0, o}};
      used_[0] = true;
      extend();
      used_[0] = false;
      if (!result_.complete) break;
    }
    std::sort(result_.solutions.begin(), result_.solutions.end());
    result_.solutions.erase(std::unique(result_.solutions.begin(), result_.solutions.end()),
                            result_.solutions.end());
    return std::move(result_);
  }

 private:
  bool segment_clear(const Segment& s) const {
    for (const auto& c : disks_.centers()) {
      if (distance_to_segment(c, s) < 1.0 - kTol) return false;
    }
    for (const auto& t : segments_) {
      if (intersect(s, t).kind == ContactKind::Cross) return false;
    }
    return true;
  }

  void finish() {
    BeltSpec spec{order_};
    if (order_.size() > 1 && spec.canonical() != spec) return;
    try {
      const BeltPath path = compute_belt(disks_, spec);
      if (validate_belt(disks_, path).ok()) result_.solutions.push_back(spec.canonical());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InternalTangentInfeasible) throw;
    }
  }

  void extend() {
    if (++result_.nodes > budget_) {
      result_.complete = false;
      return;
    }
    const size_t n = disks_.size();
    if (order_.size() == n) {
      if (n > 1) {
        // The closing segment must pass the same pruning tests.
        try {
          if (!segment_clear(belt_segment(disks_, order_.back(), order_.front()))) return;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::InternalTangentInfeasible) throw;
          return;
        }
      }
      finish();
      return;
    }
    for (size_t j = 0; j < n && result_.complete; ++j) {
      if (used_[j]) continue;
      for (Orientation o : {Orientation::CCW, Orientation::CW}) {
        const WindingEntry next{static_cast<int>(j), o};
        Segment s;
        try {
          s = belt_segment(disks_, order_.back(), next);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::InternalTangentInfeasible) throw;
          continue;
        }
        if (!segment_clear(s)) continue;
        used_[j] = true;
        order_.push_back(next);
        segments_.push_back(s);
        extend();
        segments_.pop_back();
        order_.pop_back();
        used_[j] = false;
        if (!result_.complete) return;
      }
    }
  }

  const DiskSet& disks_;
  std::uint64_t budget_;
  std::vector<bool> used_;
  std::vector<WindingEntry> order_;
  std::vector<Segment> segments_;
  BeltSolveResult result_;
};

}  // namespace

BeltSolveResult solve_belt(const DiskSet& disks, std::uint64_t budget) {
  if (disks.size() == 0) return {};
  if (disks.size() > kMaxSolverDisks) {
    throw Error(ErrorCode::InvalidArgument,
                "solver is limited to " + std::to_string(kMaxSolverDisks) + " disks");
  }
  return BeltSearch(disks, budget).run();
}

std::string fingerprint(const DiskSet& disks) {
  const size_t n = disks.size();
  Point2 centroid = Point2::Zero();
  for (const auto& c : disks.centers()) centroid += c;
  if (n) centroid /= static_cast<double>(n);
  std::vector<std::pair<long long, long long>> q;
  q.reserve(n);
  for (const auto& c : disks.centers()) {
    const Point2 d = (c - centroid) * 1e6;
    q.emplace_back(std::llround(d.x()), std::llround(d.y()));
  }
  std::sort(q.begin(), q.end());
  std::string key = std::to_string(n) + ":";
  for (const auto& [x, y] : q) key += std::to_string(x) + "," + std::to_string(y) + ";";
  return key;
}

const ConveyerLetter& ConveyerFont::at(char c) const {
  auto it = letters_.find(c);
  if (it == letters_.end()) {
    throw Error(ErrorCode::UnknownLetter, std::string("no conveyer glyph for '") + c + "'");
  }
  return it->second;
}

std::vector<char> ConveyerFont::match(const DiskSet& disks) const {
  const std::string key = fingerprint(disks);
  std::vector<char> out;
  for (const auto& [c, letter] : letters_) {
    if (fingerprint(letter.disks) == key) out.push_back(c);
  }
  return out;
}

VectorScene render_disks(const DiskSet& disks) {
  VectorScene scene;
  for (const auto& c : disks.centers()) scene.add_circle(c, 1.0, StyleClass::Disk);
  return scene;
}

VectorScene render_belt(const DiskSet& disks, const BeltPath& path) {
  VectorScene scene = render_disks(disks);
  for (const auto& e : path.elements) {
    if (const auto* s = std::get_if<Segment>(&e)) {
      scene.add_segment(s->a, s->b, StyleClass::Belt);
    } else {
      scene.add(ArcPrim{std::get<Arc>(e), StyleClass::Belt});
    }
  }
  return scene;
}

}  // namespace pfont
