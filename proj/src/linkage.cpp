#include "pfont/linkage.hpp"

#include "pfont/error.hpp"

#include <cstdio>

namespace pfont {

AngleSequence AngleSequence::from(const std::array<double, kLinkageJoints>& values) {
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0 || v > 360.0) {
      throw Error(ErrorCode::InvalidArgument, "joint angle outside [0, 360]: " + format_angle(v));
    }
  }
  return AngleSequence{values};
}

AngleSequence AngleSequence::reversed() const {
  AngleSequence r;
  for (int i = 0; i < kLinkageJoints; ++i) r.degrees[i] = degrees[kLinkageJoints - 1 - i];
  return r;
}

std::array<double, kLinkageJoints> AngleSequence::unsigned_angles() const {
  std::array<double, kLinkageJoints> out{};
  for (int i = 0; i < kLinkageJoints; ++i) {
    const double a = normalize_degrees(degrees[i]);
    out[i] = a > 180.0 ? 360.0 - a : a;
  }
  return out;
}

SideChoices SideChoices::from_bits(unsigned bits) {
  SideChoices c;
  for (int i = 0; i < kLinkageJoints; ++i) c.sides[i] = (bits >> i) & 1u ? Turn::Right : Turn::Left;
  return c;
}

unsigned SideChoices::bits() const {
  unsigned b = 0;
  for (int i = 0; i < kLinkageJoints; ++i) {
    if (sides[i] == Turn::Right) b |= 1u << i;
  }
  return b;
}

SideChoices SideChoices::flipped() const { return from_bits(~bits() & 31u); }

std::vector<PathElement> LinkageGlyph::as_path() const {
  std::vector<PathElement> path;
  for (int i = 0; i + 1 < kLinkageVertices; ++i) path.emplace_back(Segment{vertices[i], vertices[i + 1]});
  return path;
}

LinkageGlyph realize(const AngleSequence& seq, const SideChoices& choices, const Pose& pose) {
  LinkageGlyph g;
  double heading = pose.heading;
  g.vertices[0] = pose.origin;
  g.vertices[1] = pose.origin + unit_direction(heading);
  for (int i = 0; i < kLinkageJoints; ++i) {
    const double turn = 180.0 - seq.degrees[i];
    heading += choices.sides[i] == Turn::Left ? turn : -turn;
    g.vertices[i + 2] = g.vertices[i + 1] + unit_direction(heading);
  }
  g.choices = choices;
  return g;
}

std::array<double, kLinkageJoints> measure_angles(const LinkageGlyph& glyph) {
  std::array<double, kLinkageJoints> out{};
  for (int k = 1; k <= kLinkageJoints; ++k) {
    const Point2 u = glyph.vertices[k - 1] - glyph.vertices[k];
    const Point2 w = glyph.vertices[k + 1] - glyph.vertices[k];
    out[k - 1] = rad_to_deg(std::atan2(std::abs(cross2(u, w)), u.dot(w)));
  }
  return out;
}

std::array<Point2, kLinkageVertices> canonical_vertices(const std::array<Point2, kLinkageVertices>& v) {
  const Point2 d = (v[1] - v[0]).normalized();
  std::array<Point2, kLinkageVertices> out;
  for (int i = 0; i < kLinkageVertices; ++i) {
    const Point2 p = v[i] - v[0];
    out[i] = Point2(d.x() * p.x() + d.y() * p.y(), -d.y() * p.x() + d.x() * p.y());
  }
  return out;
}

namespace {

bool same_vertices(const std::array<Point2, kLinkageVertices>& a,
                   const std::array<Point2, kLinkageVertices>& b, double tol) {
  for (int i = 0; i < kLinkageVertices; ++i) {
    if ((a[i] - b[i]).norm() > tol) return false;
  }
  return true;
}

std::array<Point2, kLinkageVertices> reversed(std::array<Point2, kLinkageVertices> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

bool angles_match(const std::array<double, kLinkageJoints>& a,
                  const std::array<double, kLinkageJoints>& b, double tol) {
  for (int i = 0; i < kLinkageJoints; ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

std::array<double, kLinkageJoints> reversed(std::array<double, kLinkageJoints> a) {
  std::reverse(a.begin(), a.end());
  return a;
}

}  // namespace

bool same_glyph(const LinkageGlyph& a, const LinkageGlyph& b, double tol) {
  const auto ca = canonical_vertices(a.vertices);
  return same_vertices(ca, canonical_vertices(b.vertices), tol) ||
         same_vertices(ca, canonical_vertices(reversed(b.vertices)), tol);
}

std::vector<LinkageGlyph> enumerate_glyphs(const AngleSequence& seq) {
  std::vector<LinkageGlyph> distinct;
  for (unsigned bits = 0; bits < (1u << kLinkageJoints); ++bits) {
    LinkageGlyph g = realize(seq, SideChoices::from_bits(bits));
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const LinkageGlyph& d) { return same_glyph(d, g); });
    if (!seen) distinct.push_back(std::move(g));
  }
  return distinct;
}

std::string format_angle(double deg) {
  char buf[32];
  if (deg == std::floor(deg) && std::abs(deg) < 1e9) {
    std::snprintf(buf, sizeof buf, "%.0f", deg);
  } else {
    std::snprintf(buf, sizeof buf, "%.10g", deg);
  }
  return buf;
}

const LinkageLetter& LinkageFont::lookup(char letter) const {
  auto it = letters_.find(letter);
  if (it == letters_.end()) {
    throw Error(ErrorCode::UnknownLetter, std::string("no linkage glyph for '") + letter + "'");
  }
  return it->second;
}

AngleSequence LinkageFont::encode(char letter) const { return lookup(letter).angles; }

std::string LinkageFont::angle_text(char letter) const {
  const auto& seq = lookup(letter).angles;
  std::string out;
  for (int i = 0; i < kLinkageJoints; ++i) {
    if (i) out += '-';
    out += format_angle(seq.degrees[i]);
  }
  return out;
}

char LinkageFont::decode(const LinkageGlyph& glyph, double angle_tol_deg) const {
  for (int i = 0; i + 1 < kLinkageVertices; ++i) {
    const double len = (glyph.vertices[i + 1] - glyph.vertices[i]).norm();
    if (!std::isfinite(len) || std::abs(len - 1.0) > 1e-7) {
      throw Error(ErrorCode::NotAChain, "bar " + std::to_string(i) + " has length " + std::to_string(len));
    }
  }
  const auto measured = measure_angles(glyph);
  std::vector<char> hits;
  for (const auto& [c, letter] : letters_) {
    const auto want = letter.angles.unsigned_angles();
    if (angles_match(measured, want, angle_tol_deg) ||
        angles_match(measured, reversed(want), angle_tol_deg)) {
      hits.push_back(c);
    }
  }
  if (hits.empty()) throw Error(ErrorCode::NoMatch, "chain matches no letter");
  if (hits.size() > 1) {
    throw Error(ErrorCode::AmbiguousMatch,
                std::string("chain matches both '") + hits[0] + "' and '" + hits[1] + "'");
  }
  return hits.front();
}

LinkageGlyph LinkageFont::readable_glyph(char letter) const {
  const auto& l = lookup(letter);
  LinkageGlyph g = realize(l.angles, l.readable.value_or(SideChoices{}), Pose{Point2::Zero(), l.heading});
  g.source_letter = letter;
  return g;
}

SideChoices LinkageFont::draw_choices(std::mt19937_64& gen) {
  return SideChoices::from_bits(static_cast<unsigned>(gen() & 31u));
}

LinkageGlyph LinkageFont::random_puzzle_glyph(char letter, std::uint64_t seed) const {
  const auto& l = lookup(letter);
  std::mt19937_64 gen(seed);
  LinkageGlyph g = realize(l.angles, draw_choices(gen), Pose{Point2::Zero(), l.heading});
  g.source_letter = letter;
  return g;
}

std::vector<std::pair<char, char>> LinkageFont::ambiguous_pairs() const {
  std::vector<std::pair<char, char>> out;
  for (auto i = letters_.begin(); i != letters_.end(); ++i) {
    const auto a = i->second.angles.unsigned_angles();
    for (auto j = std::next(i); j != letters_.end(); ++j) {
      const auto b = j->second.angles.unsigned_angles();
      if (angles_match(a, b, 1e-9) || angles_match(a, reversed(b), 1e-9)) {
        out.emplace_back(i->first, j->first);
      }
    }
  }
  return out;
}

VectorScene render_linkage(const LinkageGlyph& glyph, double spread) {
  VectorScene scene;
  std::vector<Segment> drawn;
  for (int i = 0; i + 1 < kLinkageVertices; ++i) {
    Segment bar{glyph.vertices[i], glyph.vertices[i + 1]};
    int copies = 0;
    for (const auto& d : drawn) {
      const bool same = ((d.a - bar.a).norm() < 1e-7 && (d.b - bar.b).norm() < 1e-7) ||
                        ((d.a - bar.b).norm() < 1e-7 && (d.b - bar.a).norm() < 1e-7);
      if (same) ++copies;
    }
    drawn.push_back(bar);
    // Stable direction-independent normal so doubled bars separate consistently.
    Point2 dir = (bar.b - bar.a).normalized();
    if (dir.x() < -1e-12 || (std::abs(dir.x()) <= 1e-12 && dir.y() < 0)) dir = -dir;
    const double k = copies == 0 ? 0.0 : ((copies + 1) / 2) * (copies % 2 ? 1.0 : -1.0);
    const Point2 off = k * spread * left_normal(dir);
    scene.add_segment(bar.a + off, bar.b + off, StyleClass::Linkage);
  }
  for (const auto& v : glyph.vertices) scene.add_circle(v, 0.06, StyleClass::Joint);
  return scene;
}

}  // namespace pfont
