#include "pfont/svg.hpp"

#include "pfont/error.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace pfont {

std::string_view to_string(StyleClass cls) {
  switch (cls) {
    case StyleClass::Boundary: return "boundary";
    case StyleClass::Mountain: return "mountain";
    case StyleClass::Valley: return "valley";
    case StyleClass::Belt: return "belt";
    case StyleClass::Disk: return "disk";
    case StyleClass::Wall: return "wall";
    case StyleClass::Floor: return "floor";
    case StyleClass::Linkage: return "linkage";
    case StyleClass::Joint: return "joint";
    case StyleClass::Strand: return "strand";
    case StyleClass::Envelope: return "envelope";
    case StyleClass::Piece: return "piece";
    case StyleClass::Hinge: return "hinge";
    case StyleClass::Extrusion: return "extrusion";
  }
  return "unknown";
}

StyleClass style_of(const Primitive& p) {
  return std::visit([](const auto& x) { return x.cls; }, p);
}

std::string fixed6(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void VectorScene::append(const VectorScene& other, const Point2& offset, double scale) {
  auto map = [&](const Point2& p) -> Point2 { return offset + scale * p; };
  for (const auto& item : other.items_) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          T y = x;
          if constexpr (std::is_same_v<T, PolylinePrim> || std::is_same_v<T, PolygonPrim>) {
            for (auto& p : y.points) p = map(p);
          } else if constexpr (std::is_same_v<T, CirclePrim>) {
            y.center = map(y.center);
            y.radius *= scale;
          } else {
            y.arc.center = map(y.arc.center);
            y.arc.radius *= scale;
          }
          items_.push_back(std::move(y));
        },
        item);
  }
}

std::pair<Point2, Point2> VectorScene::bounds() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Point2 lo(inf, inf), hi(-inf, -inf);
  auto grow = [&](const Point2& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  };
  for (const auto& item : items_) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PolylinePrim> || std::is_same_v<T, PolygonPrim>) {
            for (const auto& p : x.points) grow(p);
          } else if constexpr (std::is_same_v<T, CirclePrim>) {
            grow(x.center - Point2::Constant(x.radius));
            grow(x.center + Point2::Constant(x.radius));
          } else {
            // Conservative: the full circle of the arc.
            grow(x.arc.center - Point2::Constant(x.arc.radius));
            grow(x.arc.center + Point2::Constant(x.arc.radius));
          }
        },
        item);
  }
  if (items_.empty()) return {Point2::Zero(), Point2::Zero()};
  return {lo, hi};
}

bool VectorScene::has_class(StyleClass cls) const {
  return std::any_of(items_.begin(), items_.end(),
                     [cls](const Primitive& p) { return style_of(p) == cls; });
}

std::array<ClassStyle, kAllStyleClasses.size()> StyleConfig::default_classes() {
  std::array<ClassStyle, kAllStyleClasses.size()> c{};
  auto set = [&](StyleClass k, ClassStyle s) { c[static_cast<size_t>(k)] = std::move(s); };
  set(StyleClass::Boundary, {"#000000", "none", 2.5});
  set(StyleClass::Mountain, {"#202020", "none", 1.2});
  set(StyleClass::Valley, {"#9a9a9a", "none", 1.2});
  set(StyleClass::Belt, {"#c0392b", "none", 2.0});
  set(StyleClass::Disk, {"#000000", "#dddddd", 1.0});
  set(StyleClass::Wall, {"#000000", "none", 6.0});
  set(StyleClass::Floor, {"#555555", "#f4f4f4", 1.0});
  set(StyleClass::Linkage, {"#000000", "none", 3.0});
  set(StyleClass::Joint, {"#000000", "#ffffff", 1.0});
  set(StyleClass::Strand, {"#1f4e9c", "#6a9be0", 0.8});
  set(StyleClass::Envelope, {"#444444", "none", 1.5});
  set(StyleClass::Piece, {"#333333", "#e8c872", 0.6});
  set(StyleClass::Hinge, {"#b00000", "#b00000", 0.5});
  set(StyleClass::Extrusion, {"#222222", "#bcbcbc", 1.0});
  return c;
}

std::string emit_svg(const VectorScene& scene, const StyleConfig& style) {
  if (scene.empty() && !style.allow_empty) {
    throw Error(ErrorCode::InvalidArgument, "cannot emit an empty scene");
  }
  auto [lo, hi] = scene.bounds();
  lo -= Point2::Constant(style.margin);
  hi += Point2::Constant(style.margin);
  const double s = style.scale;
  const double width = (hi.x() - lo.x()) * s;
  const double height = (hi.y() - lo.y()) * s;
  // y axis flipped so geometry reads with +y up.
  auto X = [&](double x) { return fixed6((x - lo.x()) * s); };
  auto Y = [&](double y) { return fixed6((hi.y() - y) * s); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed6(width) +
         "\" height=\"" + fixed6(height) + "\" viewBox=\"0 0 " + fixed6(width) + " " +
         fixed6(height) + "\">\n";
  out += "<style>\n";
  for (StyleClass cls : kAllStyleClasses) {
    const auto& cs = style[cls];
    out += "." + std::string(to_string(cls)) + "{stroke:" + cs.stroke + ";fill:" + cs.fill +
           ";stroke-width:" + fixed6(cs.width) + ";stroke-linecap:round;stroke-linejoin:round}\n";
  }
  out += "</style>\n";

  for (const auto& item : scene.items()) {
    const std::string cls(to_string(style_of(item)));
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PolylinePrim>) {
            out += x.closed ? "<polygon class=\"" : "<polyline class=\"";
            out += cls + "\" points=\"";
            for (size_t i = 0; i < x.points.size(); ++i) {
              if (i) out += ' ';
              out += X(x.points[i].x()) + "," + Y(x.points[i].y());
            }
            out += "\" style=\"fill:none\"/>\n";
          } else if constexpr (std::is_same_v<T, PolygonPrim>) {
            out += "<polygon class=\"" + cls + "\" points=\"";
            for (size_t i = 0; i < x.points.size(); ++i) {
              if (i) out += ' ';
              out += X(x.points[i].x()) + "," + Y(x.points[i].y());
            }
            out += "\"/>\n";
          } else if constexpr (std::is_same_v<T, CirclePrim>) {
            out += "<circle class=\"" + cls + "\" cx=\"" + X(x.center.x()) + "\" cy=\"" +
                   Y(x.center.y()) + "\" r=\"" + fixed6(x.radius * s) + "\"/>\n";
          } else {
            const Arc& a = x.arc;
            if (a.length() <= kTol) return;
            const std::string r = fixed6(a.radius * s);
            // Screen y points down, so a math-CCW sweep is SVG sweep-flag 0.
            const char* sweep = a.orientation == Orientation::CCW ? "0" : "1";
            const Point2 p0 = a.start_point();
            out += "<path class=\"" + cls + "\" d=\"M " + X(p0.x()) + " " + Y(p0.y());
            // Full turns are split in two halves; SVG cannot draw a closed arc in one command.
            const int pieces = a.sweep > 180.0 ? 2 : 1;
            for (int k = 1; k <= pieces; ++k) {
              const double frac = static_cast<double>(k) / pieces;
              const double ang = a.orientation == Orientation::CCW ? a.start_angle + a.sweep * frac
                                                                   : a.start_angle - a.sweep * frac;
              const Point2 p = a.point_at(ang);
              out += " A " + r + " " + r + " 0 0 " + sweep + " " + X(p.x()) + " " + Y(p.y());
            }
            out += "\" style=\"fill:none\"/>\n";
          }
        },
        item);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pfont
