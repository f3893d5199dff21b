#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace pfont {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

using Point2 = Vec2<double>;

/// Incidence/equality tolerance in abstract units. Font coordinates stay below 100.
inline constexpr double kTol = 1e-9;

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cross2(const Eigen::MatrixBase<DerivedA>& a,
                                 const Eigen::MatrixBase<DerivedB>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Counter-clockwise perpendicular.
template <typename Derived>
Vec2<typename Derived::Scalar> left_normal(const Eigen::MatrixBase<Derived>& v) {
  return {-v.y(), v.x()};
}

template <typename Scalar>
Scalar deg_to_rad(Scalar deg) {
  return deg * std::numbers::pi_v<Scalar> / Scalar(180);
}

template <typename Scalar>
Scalar rad_to_deg(Scalar rad) {
  return rad * Scalar(180) / std::numbers::pi_v<Scalar>;
}

template <typename Scalar>
Vec2<Scalar> unit_direction(Scalar degrees) {
  const Scalar r = deg_to_rad(degrees);
  return {std::cos(r), std::sin(r)};
}

/// Direction of v in degrees, normalized to [0, 360).
double heading_of(const Point2& v);

/// Folds any finite angle into [0, 360).
double normalize_degrees(double deg);

inline bool is_finite(const Point2& p) { return std::isfinite(p.x()) && std::isfinite(p.y()); }

enum class Orientation { CCW, CW };
enum class Side { Left, Right };
enum class TangentKind { External, Internal };

inline Orientation flipped(Orientation o) {
  return o == Orientation::CCW ? Orientation::CW : Orientation::CCW;
}

struct Segment {
  Point2 a;
  Point2 b;

  double length() const { return (b - a).norm(); }
};

/// Circular arc swept from start_angle by sweep degrees in the given orientation.
/// A sweep of 360 is a full turn; a sweep of 0 is a single point.
struct Arc {
  Point2 center;
  double radius = 1.0;
  double start_angle = 0.0;
  double sweep = 0.0;
  Orientation orientation = Orientation::CCW;

  double end_angle() const;
  Point2 point_at(double degrees) const { return center + radius * unit_direction(degrees); }
  Point2 start_point() const { return point_at(start_angle); }
  Point2 end_point() const { return point_at(end_angle()); }
  double length() const { return radius * deg_to_rad(sweep); }
  /// True when the direction `degrees` lies on the swept range (tolerance in degrees).
  bool contains_angle(double degrees, double tol_deg = 1e-7) const;
};

using PathElement = std::variant<Segment, Arc>;

Point2 start_point(const PathElement& e);
Point2 end_point(const PathElement& e);
/// Unit tangent in travel direction at the start / end of the element.
Point2 start_direction(const PathElement& e);
Point2 end_direction(const PathElement& e);
double length(const PathElement& e);
double path_length(std::span<const PathElement> path);

/// Tangent between two unit circles. `side` names the side of the directed
/// center line c1->c2 on which the first touch point lies; internal tangents
/// put the second touch point on the opposite side.
std::pair<Point2, Point2> tangent_points(const Point2& c1, const Point2& c2, TangentKind kind,
                                         Side side);

enum class ContactKind {
  None,
  Touch,    // meet without crossing (endpoint contact or tangency)
  Cross,    // transversal crossing through both interiors
  Overlap,  // collinear or co-circular overlap of positive length
};

struct Contact {
  ContactKind kind = ContactKind::None;
  std::vector<Point2> points;
};

Contact intersect(const PathElement& lhs, const PathElement& rhs);

double distance_to_segment(const Point2& p, const Segment& s);

enum class OverlapPolicy { Forbid, AllowCollinear };

/// Self-intersection test for a connected path. A path whose last end point
/// meets its first start point is treated as closed.
bool path_is_simple(std::span<const PathElement> path, OverlapPolicy policy = OverlapPolicy::Forbid);

}  // namespace pfont
