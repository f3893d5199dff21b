#include "oracles.hpp"
#include "pfont/error.hpp"
#include "pfont/geometry.hpp"

#include <doctest.h>

#include <random>

using namespace pfont;

namespace {

Point2 P(double x, double y) { return {x, y}; }

std::vector<PathElement> polyline(const std::vector<Point2>& pts) {
  std::vector<PathElement> out;
  for (size_t i = 0; i + 1 < pts.size(); ++i) out.emplace_back(Segment{pts[i], pts[i + 1]});
  return out;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("angle helpers") {
    CHECK(normalize_degrees(-90.0) == doctest::Approx(270.0));
    CHECK(normalize_degrees(720.0) == doctest::Approx(0.0));
    CHECK(normalize_degrees(359.5) == doctest::Approx(359.5));
    CHECK(heading_of(P(0, -1)) == doctest::Approx(270.0));
    CHECK(heading_of(P(-1, 0)) == doctest::Approx(180.0));
    CHECK((unit_direction(90.0) - P(0, 1)).norm() < 1e-15);
    CHECK(cross2(P(1, 0), P(0, 1)) == 1.0);
    CHECK(left_normal(P(1, 0)) == P(0, 1));
  }

  TEST_CASE("arc end points and containment") {
    Arc ccw{P(0, 0), 1.0, 0.0, 90.0, Orientation::CCW};
    CHECK((ccw.end_point() - P(0, 1)).norm() < 1e-12);
    CHECK(ccw.contains_angle(45.0));
    CHECK_FALSE(ccw.contains_angle(180.0));
    CHECK(ccw.length() == doctest::Approx(std::numbers::pi / 2));

    Arc cw{P(0, 0), 1.0, 0.0, 90.0, Orientation::CW};
    CHECK((cw.end_point() - P(0, -1)).norm() < 1e-12);
    CHECK(cw.contains_angle(315.0));
    CHECK_FALSE(cw.contains_angle(45.0));

    Arc full{P(0, 0), 1.0, 30.0, 360.0, Orientation::CCW};
    CHECK(full.contains_angle(200.0));
  }

  TEST_CASE("element directions follow travel") {
    const PathElement s = Segment{P(0, 0), P(2, 0)};
    CHECK((start_direction(s) - P(1, 0)).norm() < 1e-12);
    const PathElement a = Arc{P(0, 0), 1.0, 270.0, 180.0, Orientation::CCW};
    CHECK((start_direction(a) - P(1, 0)).norm() < 1e-12);
    CHECK((end_direction(a) - P(-1, 0)).norm() < 1e-12);
    const PathElement c = Arc{P(0, 0), 1.0, 90.0, 90.0, Orientation::CW};
    CHECK((start_direction(c) - P(1, 0)).norm() < 1e-12);
    CHECK((end_point(c) - P(1, 0)).norm() < 1e-12);
  }

  TEST_CASE("external tangents are parallel to the center line") {
    auto [p, q] = tangent_points(P(0, 0), P(4, 0), TangentKind::External, Side::Left);
    CHECK((p - P(0, 1)).norm() < 1e-12);
    CHECK((q - P(4, 1)).norm() < 1e-12);
    auto [r, s] = tangent_points(P(0, 0), P(4, 0), TangentKind::External, Side::Right);
    CHECK((r - P(0, -1)).norm() < 1e-12);
    CHECK((s - P(4, -1)).norm() < 1e-12);
  }

  TEST_CASE("internal tangents cross the center line at the midpoint") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int trial = 0; trial < 200; ++trial) {
      const Point2 c1(u(gen), u(gen)), c2(u(gen), u(gen));
      if ((c2 - c1).norm() < 2.2) continue;
      for (Side side : {Side::Left, Side::Right}) {
        auto [p, q] = tangent_points(c1, c2, TangentKind::Internal, side);
        CHECK((p - c1).norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((q - c2).norm() == doctest::Approx(1.0).epsilon(1e-12));
        const Point2 d = (q - p).normalized();
        CHECK(std::abs(d.dot(p - c1)) < 1e-9);  // tangent at p
        CHECK(std::abs(d.dot(q - c2)) < 1e-9);  // tangent at q
        CHECK(((p + q) / 2 - (c1 + c2) / 2).norm() < 1e-9);
        const double sp = cross2(c2 - c1, p - c1);
        CHECK((side == Side::Left ? sp > 0 : sp < 0));
      }
    }
  }

  TEST_CASE("tangent preconditions") {
    CHECK_THROWS_AS(tangent_points(P(0, 0), P(0, 0), TangentKind::External, Side::Left), Error);
    try {
      tangent_points(P(0, 0), P(2, 0), TangentKind::Internal, Side::Left);
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateDisks);
    }
  }

  TEST_CASE("segment contacts") {
    auto kind = [](Segment a, Segment b) { return intersect(a, b).kind; };
    CHECK(kind({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)}) == ContactKind::Cross);
    CHECK(kind({P(0, 0), P(1, 0)}, {P(2, 0), P(3, 0)}) == ContactKind::None);
    CHECK(kind({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)}) == ContactKind::Overlap);
    CHECK(kind({P(0, 0), P(1, 0)}, {P(1, 0), P(1, 1)}) == ContactKind::Touch);
    CHECK(kind({P(0, 0), P(2, 0)}, {P(1, 0), P(1, 1)}) == ContactKind::Touch);
    const Contact c = intersect(Segment{P(0, 0), P(2, 2)}, Segment{P(0, 2), P(2, 0)});
    REQUIRE(c.points.size() == 1);
    CHECK((c.points[0] - P(1, 1)).norm() < 1e-12);
  }

  TEST_CASE("segment and arc contacts") {
    const Arc top{P(0, 0), 1.0, 0.0, 180.0, Orientation::CCW};
    CHECK(intersect(Segment{P(-2, 0.5), P(2, 0.5)}, top).kind == ContactKind::Cross);
    CHECK(intersect(Segment{P(-2, 0.5), P(2, 0.5)}, top).points.size() == 2);
    CHECK(intersect(Segment{P(-2, 1), P(2, 1)}, top).kind == ContactKind::Touch);
    CHECK(intersect(Segment{P(-2, -1), P(2, -1)}, top).kind == ContactKind::None);
    CHECK(intersect(Segment{P(-2, -0.5), P(2, -0.5)}, top).kind == ContactKind::None);
  }

  TEST_CASE("arc and arc contacts") {
    const Arc a{P(0, 0), 1.0, 0.0, 360.0, Orientation::CCW};
    CHECK(intersect(a, Arc{P(1, 0), 1.0, 0.0, 360.0, Orientation::CCW}).kind == ContactKind::Cross);
    CHECK(intersect(a, Arc{P(2, 0), 1.0, 0.0, 360.0, Orientation::CCW}).kind == ContactKind::Touch);
    CHECK(intersect(a, Arc{P(3, 0), 1.0, 0.0, 360.0, Orientation::CCW}).kind == ContactKind::None);
    CHECK(intersect(Arc{P(0, 0), 1.0, 0.0, 90.0, Orientation::CCW}, Arc{P(0, 0), 1.0, 45.0, 90.0, Orientation::CCW})
              .kind == ContactKind::Overlap);
  }

  TEST_CASE("distance to segment") {
    const Segment s{P(0, 0), P(4, 0)};
    CHECK(distance_to_segment(P(2, 3), s) == doctest::Approx(3.0));
    CHECK(distance_to_segment(P(-3, 4), s) == doctest::Approx(5.0));
    CHECK(distance_to_segment(P(1, 1), Segment{P(1, 1), P(1, 1)}) == 0.0);
  }

  TEST_CASE("path simplicity on fixed shapes") {
    CHECK(path_is_simple(polyline({P(0, 0), P(1, 0), P(1, 1), P(0, 1), P(0, 0)})));
    CHECK_FALSE(path_is_simple(polyline({P(0, 0), P(2, 2), P(2, 0), P(0, 2)})));
    CHECK_FALSE(path_is_simple(polyline({P(0, 0), P(2, 0), P(1, 0)})));  // folds back
    CHECK(path_is_simple(polyline({P(0, 0), P(2, 0), P(1, 0)}), OverlapPolicy::AllowCollinear));
    CHECK(path_is_simple(polyline({P(0, 0), P(1, 0), P(2, 0)})));  // straight joint
    CHECK_FALSE(path_is_simple(polyline({P(0, 0), P(2, 0), P(2, 1), P(1, 1), P(1, 0)})));
    CHECK(path_is_simple(polyline({P(0, 0), P(2, 0), P(2, 1), P(1, 1), P(1, 0)}), OverlapPolicy::AllowCollinear));
  }

  TEST_CASE("path simplicity ignores zero-length elements") {
    std::vector<PathElement> p = polyline({P(0, 0), P(1, 0), P(1, 0), P(1, 1)});
    p.insert(p.begin() + 1, Arc{P(1, 1), 1.0, 270.0, 0.0, Orientation::CCW});
    CHECK(path_is_simple(p));
  }

  TEST_CASE("disconnected paths are rejected") {
    std::vector<PathElement> p{Segment{P(0, 0), P(1, 0)}, Segment{P(2, 0), P(3, 0)}};
    try {
      path_is_simple(p);
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DisconnectedPath);
    }
  }

  TEST_CASE("path simplicity agrees with an exact lattice check") {
    std::mt19937_64 gen(20261015);
    std::uniform_int_distribution<int> coord(0, 4), len(1, 6), coin(0, 1);
    int simple = 0, not_simple = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      std::vector<oracle::IPoint> pts{{coord(gen), coord(gen)}};
      const int m = len(gen);
      while (static_cast<int>(pts.size()) <= m) {
        oracle::IPoint q{coord(gen), coord(gen)};
        if (q != pts.back()) pts.push_back(q);
      }
      if (m >= 2 && coin(gen) && pts.back() != pts.front()) pts.push_back(pts.front());
      std::vector<Point2> fp;
      for (const auto& q : pts) fp.emplace_back(static_cast<double>(q[0]), static_cast<double>(q[1]));
      const bool expect = oracle::lattice_path_simple(pts);
      INFO("trial " << trial);
      CHECK(path_is_simple(polyline(fp)) == expect);
      (expect ? simple : not_simple)++;
    }
    CHECK(simple > 200);
    CHECK(not_simple > 200);
  }

  TEST_CASE("path length sums elements") {
    std::vector<PathElement> p{Segment{P(0, -1), P(3, -1)}, Arc{P(3, 0), 1.0, 270.0, 180.0, Orientation::CCW}};
    CHECK(path_length(p) == doctest::Approx(3.0 + std::numbers::pi));
  }
}
