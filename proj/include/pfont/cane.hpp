#pragma once

// Glass-cane font: a cross-section of sub-canes inside a unit envelope, seen
// from the top or twisted and seen from the side.

#include "pfont/geometry.hpp"
#include "pfont/svg.hpp"

#include <string>
#include <vector>

namespace pfont {

struct Subcane {
  double rho = 0.0;    // offset from the cane axis, in [0, 1)
  double phi = 0.0;    // phase angle in degrees
  double radius = 0.1;
  std::string color = "clear";

  Point2 top_position() const { return rho * unit_direction(phi); }
};

class CaneCrossSection {
 public:
  CaneCrossSection() = default;
  /// Throws InvalidArgument unless 0 <= rho < 1, radius > 0 and rho + radius <= 1.
  explicit CaneCrossSection(std::vector<Subcane> subcanes);

  const std::vector<Subcane>& subcanes() const { return subcanes_; }
  bool empty() const { return subcanes_.empty(); }

 private:
  std::vector<Subcane> subcanes_;
};

struct TwistParams {
  double omega = 0.5;  // turns per unit length, >= 0
  double length = 4.0;

  void validate() const;
};

inline constexpr int kDefaultSamplesPerUnit = 64;

/// Side-view x of a strand centerline at height t: rho cos(2 pi omega t + phi).
double strand_x(const Subcane& s, const TwistParams& twist, double t);
/// Depth toward the viewer: rho sin(2 pi omega t + phi).
double strand_depth(const Subcane& s, const TwistParams& twist, double t);

VectorScene render_top(const CaneCrossSection& cs);

/// Strands are drawn as one quad per sample interval, painted far to near.
VectorScene render_side(const CaneCrossSection& cs, const TwistParams& twist,
                        int samples_per_unit = kDefaultSamplesPerUnit);

}  // namespace pfont
