#include "oracles.hpp"
#include "pfont/cane.hpp"
#include "pfont/error.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace pfont;

namespace {

const FontData& shipped() {
  static const FontData fd = oracle::load_shipped(FontId::Cane);
  return fd;
}

CaneCrossSection random_section(std::mt19937_64& gen, int n) {
  std::uniform_real_distribution<double> u(0, 1), ang(-720, 720);
  std::vector<Subcane> subs;
  for (int i = 0; i < n; ++i) {
    const double radius = 0.02 + 0.3 * u(gen);
    const double rho = (1.0 - radius) * u(gen) * 0.999;
    subs.push_back({rho, ang(gen), radius, "red"});
  }
  return CaneCrossSection(subs);
}

std::vector<const PolygonPrim*> polygons(const VectorScene& s) {
  std::vector<const PolygonPrim*> out;
  for (const auto& item : s.items()) {
    if (const auto* p = std::get_if<PolygonPrim>(&item)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_SUITE("cane") {
  TEST_CASE("cross-section limits") {
    CHECK_NOTHROW(CaneCrossSection({{0.0, 0.0, 1.0, "white"}}));
    CHECK_NOTHROW(CaneCrossSection({{0.5, 30.0, 0.5, "white"}}));
    CHECK_THROWS_AS(CaneCrossSection({{1.0, 0.0, 0.1, "white"}}), Error);
    CHECK_THROWS_AS(CaneCrossSection({{-0.1, 0.0, 0.1, "white"}}), Error);
    CHECK_THROWS_AS(CaneCrossSection({{0.5, 0.0, 0.0, "white"}}), Error);
    CHECK_THROWS_AS(CaneCrossSection({{0.8, 0.0, 0.3, "white"}}), Error);
    CHECK_THROWS_AS(CaneCrossSection({{0.5, std::nan(""), 0.1, "white"}}), Error);
    CHECK_THROWS_AS((TwistParams{-0.5, 4}.validate()), Error);
    CHECK_THROWS_AS((TwistParams{0.5, 0}.validate()), Error);
    CHECK_NOTHROW((TwistParams{0, 1}.validate()));
  }

  TEST_CASE("strand positions") {
    const Subcane s{0.5, 60.0, 0.1, "blue"};
    CHECK((s.top_position() - Point2(0.25, std::sqrt(3.0) / 4)).norm() < 1e-12);
    const TwistParams tw{0.25, 4};
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> t(0, 4);
    for (int i = 0; i < 100; ++i) {
      const double h = t(gen);
      const double phase = 2 * std::numbers::pi * 0.25 * h + std::numbers::pi / 3;
      CHECK(strand_x(s, tw, h) == doctest::Approx(0.5 * std::cos(phase)).epsilon(1e-12));
      CHECK(strand_depth(s, tw, h) == doctest::Approx(0.5 * std::sin(phase)).epsilon(1e-12));
    }
  }

  TEST_CASE("untwisted canes show straight strands") {
    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 20; ++trial) {
      const auto cs = random_section(gen, 1 + trial % 6);
      const auto scene = render_side(cs, {0.0, 3.0});
      const auto polys = polygons(scene);
      REQUIRE(polys.size() == cs.subcanes().size() * 3 * kDefaultSamplesPerUnit);
      for (const auto* p : polys) {
        REQUIRE(p->points.size() == 4);
        CHECK(p->points[0].x() == doctest::Approx(p->points[1].x()).epsilon(1e-12));
        CHECK(p->points[2].x() == doctest::Approx(p->points[3].x()).epsilon(1e-12));
      }
      for (const auto& s : cs.subcanes()) {
        for (double h = 0; h <= 3.0; h += 0.1) {
          CHECK(strand_x(s, {0.0, 3.0}, h) == doctest::Approx(strand_x(s, {0.0, 3.0}, 0.0)).epsilon(1e-15));
        }
      }
    }
  }

  TEST_CASE("twisted strands repeat every 1/omega") {
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> t(0, 10);
    for (double omega : {0.25, 0.5, 1.0}) {
      const TwistParams tw{omega, 12};
      const auto cs = random_section(gen, 8);
      for (const auto& s : cs.subcanes()) {
        for (int i = 0; i < 50; ++i) {
          const double h = t(gen);
          CHECK(std::abs(strand_x(s, tw, h + 1.0 / omega) - strand_x(s, tw, h)) < 1e-9);
          CHECK(std::abs(strand_depth(s, tw, h + 1.0 / omega) - strand_depth(s, tw, h)) < 1e-9);
        }
      }
      // Half a period mirrors the strand through the axis.
      const Subcane s{0.4, 10, 0.1, "x"};
      CHECK(strand_x(s, tw, 0.5 / omega) == doctest::Approx(-strand_x(s, tw, 0.0)).epsilon(1e-12));
    }
  }

  TEST_CASE("silhouettes stay inside the envelope") {
    std::mt19937_64 gen(10);
    std::vector<std::pair<CaneCrossSection, TwistParams>> cases;
    for (const auto& [c, payload] : shipped().glyphs) cases.emplace_back(shipped().cane(c).section, shipped().cane(c).twist);
    for (int i = 0; i < 20; ++i) cases.emplace_back(random_section(gen, 6), TwistParams{0.3 * i, 2.0});
    for (const auto& [cs, tw] : cases) {
      const auto scene = render_side(cs, tw);
      for (const auto* p : polygons(scene)) {
        for (const auto& q : p->points) {
          CHECK(q.x() >= -1.0 - 1e-12);
          CHECK(q.x() <= 1.0 + 1e-12);
        }
      }
      const auto [lo, hi] = scene.bounds();
      CHECK(lo.x() >= -1.0 - 1e-9);
      CHECK(hi.x() <= 1.0 + 1e-9);
      CHECK(hi.y() == doctest::Approx(tw.length));
    }
  }

  TEST_CASE("strands are painted far to near") {
    // Untwisted, the strand at 225 degrees sits behind the axis on the left.
    const CaneCrossSection split({{0.5, 45.0, 0.1, "near"}, {0.5, 225.0, 0.1, "far"}});
    const auto scene = render_side(split, {0.0, 1.0}, 8);
    const auto p2 = polygons(scene);
    REQUIRE(p2.size() == 16);
    for (size_t i = 0; i < 8; ++i) CHECK(p2[i]->points[0].x() < 0);
    for (size_t i = 8; i < 16; ++i) CHECK(p2[i]->points[0].x() > 0);
  }

  TEST_CASE("top view") {
    const auto& g = shipped().cane('O');
    const auto scene = render_top(g.section);
    CHECK(scene.size() == g.section.subcanes().size() + 1);
    CHECK(scene.has_class(StyleClass::Envelope));
    const auto [lo, hi] = scene.bounds();
    CHECK(lo.x() == doctest::Approx(-1.0));
    CHECK(hi.y() == doctest::Approx(1.0));
    CHECK_THROWS_AS(render_side(g.section, g.twist, 4), Error);
  }

  TEST_CASE("shipped glyphs") {
    CHECK(shipped().glyphs.size() == 26);
    for (const auto& [c, payload] : shipped().glyphs) {
      const auto& g = shipped().cane(c);
      INFO("glyph " << c);
      CHECK_FALSE(g.section.empty());
      CHECK_NOTHROW(g.twist.validate());
      for (const auto& s : g.section.subcanes()) CHECK(s.rho + s.radius <= 1.0 + kTol);
    }
  }
}
