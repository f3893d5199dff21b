#include "pfont/geometry.hpp"

#include "pfont/error.hpp"

#include <algorithm>

namespace pfont {

namespace {

constexpr double kJointRadius = 1e-6;

struct Visitor {
  template <typename F>
  static auto on(const PathElement& e, F&& f) {
    return std::visit(std::forward<F>(f), e);
  }
};

bool near(const Point2& a, const Point2& b, double eps) { return (a - b).norm() <= eps; }

void push_unique(std::vector<Point2>& pts, const Point2& p) {
  for (const auto& q : pts) {
    if (near(p, q, kJointRadius)) return;
  }
  pts.push_back(p);
}

Contact segment_segment(const Segment& s1, const Segment& s2) {
  Contact out;
  const Point2 d1 = s1.b - s1.a;
  const Point2 d2 = s2.b - s2.a;
  const double l1 = d1.norm();
  const double l2 = d2.norm();
  const double denom = cross2(d1, d2);
  const Point2 w = s2.a - s1.a;

  if (std::abs(denom) <= kTol * l1 * l2) {
    // Parallel: only collinear pairs can meet.
    if (std::abs(cross2(d1, w)) / l1 > kTol) return out;
    const double t0 = w.dot(d1) / (l1 * l1);
    const double t1 = (s2.b - s1.a).dot(d1) / (l1 * l1);
    const double lo = std::max(0.0, std::min(t0, t1));
    const double hi = std::min(1.0, std::max(t0, t1));
    const double overlap = (hi - lo) * l1;
    if (overlap > kTol) {
      out.kind = ContactKind::Overlap;
      out.points = {s1.a + lo * d1, s1.a + hi * d1};
    } else if (overlap >= -kTol) {
      out.kind = ContactKind::Touch;
      out.points = {s1.a + std::clamp(lo, 0.0, 1.0) * d1};
    }
    return out;
  }

  const double t = cross2(w, d2) / denom;
  const double u = cross2(w, d1) / denom;
  const double e1 = kTol / l1;
  const double e2 = kTol / l2;
  if (t < -e1 || t > 1 + e1 || u < -e2 || u > 1 + e2) return out;
  const bool interior = t > e1 && t < 1 - e1 && u > e2 && u < 1 - e2;
  out.kind = interior ? ContactKind::Cross : ContactKind::Touch;
  out.points = {s1.a + std::clamp(t, 0.0, 1.0) * d1};
  return out;
}

Contact segment_arc(const Segment& s, const Arc& arc) {
  Contact out;
  const Point2 d = s.b - s.a;
  const Point2 f = s.a - arc.center;
  const double a = d.squaredNorm();
  const double b = 2.0 * f.dot(d);
  const double c = f.squaredNorm() - arc.radius * arc.radius;
  double disc = b * b - 4 * a * c;
  // Relative tangency threshold: distance from center to line within kTol of r.
  const double dist = std::abs(cross2(d, f)) / std::sqrt(a);
  const bool tangent = std::abs(dist - arc.radius) <= kTol;
  if (disc < 0 && !tangent) return out;
  if (tangent) disc = 0;
  const double root = std::sqrt(disc);
  const double e = kTol / std::sqrt(a);
  bool crossed = false;
  for (double t : {(-b - root) / (2 * a), (-b + root) / (2 * a)}) {
    if (t < -e || t > 1 + e) continue;
    const Point2 p = s.a + std::clamp(t, 0.0, 1.0) * d;
    if (!arc.contains_angle(heading_of(p - arc.center))) continue;
    push_unique(out.points, p);
    const bool seg_interior = t > e && t < 1 - e;
    const double off = arc.orientation == Orientation::CCW
                           ? normalize_degrees(heading_of(p - arc.center) - arc.start_angle)
                           : normalize_degrees(arc.start_angle - heading_of(p - arc.center));
    const bool arc_interior = arc.sweep >= 360.0 || (off > 1e-7 && off < arc.sweep - 1e-7);
    if (!tangent && seg_interior && arc_interior) crossed = true;
  }
  if (!out.points.empty()) out.kind = crossed ? ContactKind::Cross : ContactKind::Touch;
  return out;
}

Contact arc_arc(const Arc& p, const Arc& q) {
  Contact out;
  const Point2 dc = q.center - p.center;
  const double d = dc.norm();
  if (d <= kTol && std::abs(p.radius - q.radius) <= kTol) {
    // Co-circular: compare angular ranges by sampling the endpoints of each.
    std::vector<Point2> shared;
    for (const Arc* a : {&p, &q}) {
      const Arc* other = a == &p ? &q : &p;
      for (double ang : {a->start_angle, a->end_angle()}) {
        if (other->contains_angle(ang)) push_unique(shared, a->point_at(ang));
      }
    }
    if (shared.empty()) return out;
    // Positive-length overlap iff a midpoint of one arc lies on the other, or ranges share two points.
    const double pm = p.orientation == Orientation::CCW ? p.start_angle + p.sweep / 2
                                                        : p.start_angle - p.sweep / 2;
    const double qm = q.orientation == Orientation::CCW ? q.start_angle + q.sweep / 2
                                                        : q.start_angle - q.sweep / 2;
    const bool overlap = (p.sweep > 1e-7 && q.contains_angle(normalize_degrees(pm))) ||
                         (q.sweep > 1e-7 && p.contains_angle(normalize_degrees(qm))) ||
                         shared.size() > 1;
    out.kind = overlap ? ContactKind::Overlap : ContactKind::Touch;
    out.points = std::move(shared);
    return out;
  }
  if (d <= kTol) return out;
  if (d > p.radius + q.radius + kTol || d < std::abs(p.radius - q.radius) - kTol) return out;
  const double a = (d * d + p.radius * p.radius - q.radius * q.radius) / (2 * d);
  const double h2 = p.radius * p.radius - a * a;
  const double h = h2 > 0 ? std::sqrt(h2) : 0.0;
  const Point2 u = dc / d;
  const Point2 base = p.center + a * u;
  const bool tangent = h <= kTol;
  for (double sgn : {1.0, -1.0}) {
    const Point2 x = base + sgn * h * left_normal(u);
    if (p.contains_angle(heading_of(x - p.center)) && q.contains_angle(heading_of(x - q.center))) {
      push_unique(out.points, x);
    }
    if (tangent) break;
  }
  if (!out.points.empty()) out.kind = tangent ? ContactKind::Touch : ContactKind::Cross;
  return out;
}

bool is_degenerate(const PathElement& e) {
  if (const auto* arc = std::get_if<Arc>(&e)) return arc->length() <= kTol;
  return std::get<Segment>(e).length() <= kTol;
}

}  // namespace

double heading_of(const Point2& v) { return normalize_degrees(rad_to_deg(std::atan2(v.y(), v.x()))); }

double normalize_degrees(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0) r += 360.0;
  if (r >= 360.0) r -= 360.0;
  return r;
}

double Arc::end_angle() const {
  return normalize_degrees(orientation == Orientation::CCW ? start_angle + sweep
                                                           : start_angle - sweep);
}

bool Arc::contains_angle(double degrees, double tol_deg) const {
  if (sweep >= 360.0 - tol_deg) return true;
  const double off = orientation == Orientation::CCW ? normalize_degrees(degrees - start_angle)
                                                     : normalize_degrees(start_angle - degrees);
  return off <= sweep + tol_deg || off >= 360.0 - tol_deg;
}

Point2 start_point(const PathElement& e) {
  return Visitor::on(e, [](const auto& x) -> Point2 {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Segment>) return x.a;
    else return x.start_point();
  });
}

Point2 end_point(const PathElement& e) {
  return Visitor::on(e, [](const auto& x) -> Point2 {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Segment>) return x.b;
    else return x.end_point();
  });
}

namespace {
Point2 arc_direction(const Arc& arc, double angle) {
  const Point2 radial = unit_direction(angle);
  return arc.orientation == Orientation::CCW ? left_normal(radial) : Point2(-left_normal(radial));
}
}  // namespace

Point2 start_direction(const PathElement& e) {
  if (const auto* s = std::get_if<Segment>(&e)) return (s->b - s->a).normalized();
  const auto& arc = std::get<Arc>(e);
  return arc_direction(arc, arc.start_angle);
}

Point2 end_direction(const PathElement& e) {
  if (const auto* s = std::get_if<Segment>(&e)) return (s->b - s->a).normalized();
  const auto& arc = std::get<Arc>(e);
  return arc_direction(arc, arc.end_angle());
}

double length(const PathElement& e) {
  return Visitor::on(e, [](const auto& x) { return x.length(); });
}

double path_length(std::span<const PathElement> path) {
  double total = 0;
  for (const auto& e : path) total += length(e);
  return total;
}

std::pair<Point2, Point2> tangent_points(const Point2& c1, const Point2& c2, TangentKind kind,
                                         Side side) {
  const Point2 delta = c2 - c1;
  const double d = delta.norm();
  if (kind == TangentKind::External && d <= 2 * kTol) {
    throw Error(ErrorCode::DegenerateDisks, "coincident centers have no external tangent");
  }
  if (kind == TangentKind::Internal && d <= 2 + kTol) {
    throw Error(ErrorCode::DegenerateDisks, "overlapping unit disks have no internal tangent");
  }
  const Point2 u = delta / d;
  const Point2 n = side == Side::Left ? left_normal(u) : Point2(-left_normal(u));
  if (kind == TangentKind::External) return {c1 + n, c2 + n};
  // Touch direction makes angle acos(2/d) with the center line.
  const double cos_t = 2.0 / d;
  const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
  const Point2 r = cos_t * u + sin_t * n;
  return {c1 + r, c2 - r};
}

Contact intersect(const PathElement& lhs, const PathElement& rhs) {
  if (const auto* s = std::get_if<Segment>(&lhs)) {
    if (const auto* t = std::get_if<Segment>(&rhs)) return segment_segment(*s, *t);
    return segment_arc(*s, std::get<Arc>(rhs));
  }
  const auto& a = std::get<Arc>(lhs);
  if (const auto* t = std::get_if<Segment>(&rhs)) return segment_arc(*t, a);
  return arc_arc(a, std::get<Arc>(rhs));
}

double distance_to_segment(const Point2& p, const Segment& s) {
  const Point2 d = s.b - s.a;
  const double len2 = d.squaredNorm();
  if (len2 == 0) return (p - s.a).norm();
  const double t = std::clamp((p - s.a).dot(d) / len2, 0.0, 1.0);
  return (p - (s.a + t * d)).norm();
}

bool path_is_simple(std::span<const PathElement> path, OverlapPolicy policy) {
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!near(end_point(path[i]), start_point(path[i + 1]), 1e-7)) {
      throw Error(ErrorCode::DisconnectedPath,
                  "element " + std::to_string(i) + " does not meet element " + std::to_string(i + 1));
    }
  }
  std::vector<PathElement> elems;
  elems.reserve(path.size());
  for (const auto& e : path) {
    if (!is_degenerate(e)) elems.push_back(e);
  }
  const size_t n = elems.size();
  if (n < 2) return true;
  const bool closed = near(end_point(elems.back()), start_point(elems.front()), 1e-7);

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      std::vector<Point2> joints;
      if (j == i + 1) joints.push_back(end_point(elems[i]));
      if (closed && i == 0 && j == n - 1) joints.push_back(end_point(elems[j]));

      Contact c = intersect(elems[i], elems[j]);
      if (c.kind == ContactKind::None) continue;
      const bool both_segments =
          std::holds_alternative<Segment>(elems[i]) && std::holds_alternative<Segment>(elems[j]);
      if (c.kind == ContactKind::Overlap) {
        if (policy == OverlapPolicy::AllowCollinear && both_segments) continue;
        return false;
      }
      std::erase_if(c.points, [&](const Point2& p) {
        return std::any_of(joints.begin(), joints.end(),
                           [&](const Point2& q) { return near(p, q, kJointRadius); });
      });
      if (c.points.empty()) continue;
      if (policy == OverlapPolicy::AllowCollinear && c.kind == ContactKind::Touch) continue;
      return false;
    }
  }
  return true;
}

}  // namespace pfont
