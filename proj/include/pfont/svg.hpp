#pragma once

#include "pfont/geometry.hpp"

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pfont {

enum class StyleClass {
  Boundary,
  Mountain,
  Valley,
  Belt,
  Disk,
  Wall,
  Floor,
  Linkage,
  Joint,
  Strand,
  Envelope,
  Piece,
  Hinge,
  Extrusion,
};

inline constexpr std::array<StyleClass, 14> kAllStyleClasses = {
    StyleClass::Boundary, StyleClass::Mountain, StyleClass::Valley,   StyleClass::Belt,
    StyleClass::Disk,     StyleClass::Wall,     StyleClass::Floor,    StyleClass::Linkage,
    StyleClass::Joint,    StyleClass::Strand,   StyleClass::Envelope, StyleClass::Piece,
    StyleClass::Hinge,    StyleClass::Extrusion,
};

std::string_view to_string(StyleClass cls);

struct PolylinePrim {
  std::vector<Point2> points;
  bool closed = false;
  StyleClass cls;
};

struct CirclePrim {
  Point2 center;
  double radius;
  StyleClass cls;
};

struct ArcPrim {
  Arc arc;
  StyleClass cls;
};

struct PolygonPrim {
  std::vector<Point2> points;
  StyleClass cls;
};

using Primitive = std::variant<PolylinePrim, CirclePrim, ArcPrim, PolygonPrim>;

StyleClass style_of(const Primitive& p);

/// Ordered list of styled primitives; insertion order is paint order.
class VectorScene {
 public:
  void add(Primitive p) { items_.push_back(std::move(p)); }
  void add_segment(const Point2& a, const Point2& b, StyleClass cls) {
    items_.push_back(PolylinePrim{{a, b}, false, cls});
  }
  void add_circle(const Point2& c, double r, StyleClass cls) {
    items_.push_back(CirclePrim{c, r, cls});
  }
  void append(const VectorScene& other, const Point2& offset = Point2::Zero(), double scale = 1.0);

  const std::vector<Primitive>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  size_t size() const { return items_.size(); }

  /// Axis-aligned bounds {min, max}; zero box for an empty scene.
  std::pair<Point2, Point2> bounds() const;

  bool has_class(StyleClass cls) const;

 private:
  std::vector<Primitive> items_;
};

struct ClassStyle {
  std::string stroke = "#000000";
  std::string fill = "none";
  double width = 1.0;
};

struct StyleConfig {
  double scale = 40.0;   // output units per abstract unit
  double margin = 0.5;   // abstract units around the content
  bool allow_empty = false;
  std::array<ClassStyle, kAllStyleClasses.size()> classes = default_classes();

  static std::array<ClassStyle, kAllStyleClasses.size()> default_classes();
  ClassStyle& operator[](StyleClass cls) { return classes[static_cast<size_t>(cls)]; }
  const ClassStyle& operator[](StyleClass cls) const { return classes[static_cast<size_t>(cls)]; }
};

/// SVG 1.1 document with 6-decimal fixed coordinates. Throws InvalidArgument
/// for an empty scene unless style.allow_empty is set.
std::string emit_svg(const VectorScene& scene, const StyleConfig& style = {});

/// Fixed 6-decimal formatting shared by every text writer in the library.
std::string fixed6(double v);

}  // namespace pfont
