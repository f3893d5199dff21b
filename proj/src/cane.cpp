#include "pfont/cane.hpp"

#include "pfont/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pfont {

CaneCrossSection::CaneCrossSection(std::vector<Subcane> subcanes) : subcanes_(std::move(subcanes)) {
  for (const auto& s : subcanes_) {
    if (!std::isfinite(s.rho) || !std::isfinite(s.phi) || !std::isfinite(s.radius)) {
      throw Error(ErrorCode::InvalidArgument, "sub-cane parameters must be finite");
    }
    if (s.rho < 0.0 || s.rho >= 1.0) throw Error(ErrorCode::InvalidArgument, "sub-cane offset must lie in [0, 1)");
    if (s.radius <= 0.0) throw Error(ErrorCode::InvalidArgument, "sub-cane radius must be positive");
    if (s.rho + s.radius > 1.0 + kTol) {
      throw Error(ErrorCode::InvalidArgument, "sub-cane leaves the envelope");
    }
  }
}

void TwistParams::validate() const {
  if (!std::isfinite(omega) || omega < 0.0) throw Error(ErrorCode::InvalidArgument, "twist rate must be >= 0");
  if (!std::isfinite(length) || length <= 0.0) throw Error(ErrorCode::InvalidArgument, "cane length must be > 0");
}

namespace {

double phase_at(const Subcane& s, const TwistParams& twist, double t) {
  return 2.0 * std::numbers::pi * twist.omega * t + deg_to_rad(s.phi);
}

}  // namespace

double strand_x(const Subcane& s, const TwistParams& twist, double t) {
  return s.rho * std::cos(phase_at(s, twist, t));
}

double strand_depth(const Subcane& s, const TwistParams& twist, double t) {
  return s.rho * std::sin(phase_at(s, twist, t));
}

VectorScene render_top(const CaneCrossSection& cs) {
  VectorScene scene;
  scene.add_circle(Point2::Zero(), 1.0, StyleClass::Envelope);
  for (const auto& s : cs.subcanes()) scene.add_circle(s.top_position(), s.radius, StyleClass::Strand);
  return scene;
}

VectorScene render_side(const CaneCrossSection& cs, const TwistParams& twist, int samples_per_unit) {
  twist.validate();
  if (samples_per_unit < 8) throw Error(ErrorCode::InvalidArgument, "need at least 8 samples per unit length");
  const int samples = std::max(1, static_cast<int>(std::ceil(twist.length * samples_per_unit - 1e-9)));

  struct Quad {
    double depth;
    PolygonPrim poly;
  };
  std::vector<Quad> quads;
  const auto& subs = cs.subcanes();
  for (size_t i = 0; i < subs.size(); ++i) {
    const Subcane& s = subs[i];
    for (int k = 0; k < samples; ++k) {
      const double t0 = twist.length * k / samples;
      const double t1 = twist.length * (k + 1) / samples;
      const double x0 = strand_x(s, twist, t0);
      const double x1 = strand_x(s, twist, t1);
      const double depth = strand_depth(s, twist, 0.5 * (t0 + t1));
      quads.push_back({depth,
                       PolygonPrim{{Point2(x0 - s.radius, t0), Point2(x1 - s.radius, t1),
                                    Point2(x1 + s.radius, t1), Point2(x0 + s.radius, t0)},
                                   StyleClass::Strand}});
    }
  }
  std::stable_sort(quads.begin(), quads.end(), [](const Quad& a, const Quad& b) { return a.depth < b.depth; });

  VectorScene scene;
  for (auto& q : quads) scene.add(std::move(q.poly));
  scene.add_segment(Point2(-1, 0), Point2(-1, twist.length), StyleClass::Envelope);
  scene.add_segment(Point2(1, 0), Point2(1, twist.length), StyleClass::Envelope);
  return scene;
}

}  // namespace pfont
