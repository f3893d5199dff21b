#pragma once

// Fixed-angle chain font: six unit bars per glyph, five joint angles per letter.

#include "pfont/geometry.hpp"
#include "pfont/svg.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pfont {

inline constexpr int kLinkageJoints = 5;
inline constexpr int kLinkageVertices = kLinkageJoints + 2;

/// Interior joint angles in degrees, 180 = straight, 0 = bar folded back.
/// Values in [0, 360] are stored exactly as written.
struct AngleSequence {
  std::array<double, kLinkageJoints> degrees{};

  /// Throws InvalidArgument when any angle is outside [0, 360] or not finite.
  static AngleSequence from(const std::array<double, kLinkageJoints>& values);
  /// The same chain read from the other end.
  AngleSequence reversed() const;
  /// Geometric interior angle in [0, 180]; 360 folds to 0, 270 to 90.
  std::array<double, kLinkageJoints> unsigned_angles() const;

  bool operator==(const AngleSequence&) const = default;
};

/// Turn direction at a joint: Left means the chain turns counter-clockwise.
enum class Turn { Left, Right };

struct SideChoices {
  std::array<Turn, kLinkageJoints> sides{};

  /// Bit i set means joint i turns Right.
  static SideChoices from_bits(unsigned bits);
  unsigned bits() const;
  SideChoices flipped() const;

  bool operator==(const SideChoices&) const = default;
};

struct Pose {
  Point2 origin = Point2::Zero();
  double heading = 0.0;  // degrees, direction of the first bar
};

struct LinkageGlyph {
  std::array<Point2, kLinkageVertices> vertices;
  std::optional<char> source_letter;
  std::optional<SideChoices> choices;

  std::vector<PathElement> as_path() const;
};

LinkageGlyph realize(const AngleSequence& seq, const SideChoices& choices, const Pose& pose = {});

/// Unsigned interior angles recomputed from geometry, each in [0, 180].
std::array<double, kLinkageJoints> measure_angles(const LinkageGlyph& glyph);

/// Moves the chain so vertex 0 sits at the origin and the first bar points along +x.
std::array<Point2, kLinkageVertices> canonical_vertices(const std::array<Point2, kLinkageVertices>& v);

/// Same shape up to rigid motion, reading the chain from either end.
bool same_glyph(const LinkageGlyph& a, const LinkageGlyph& b, double tol = 1e-7);

/// All geometrically distinct flat states of the sequence (at most 32).
std::vector<LinkageGlyph> enumerate_glyphs(const AngleSequence& seq);

struct LinkageLetter {
  AngleSequence angles;
  std::optional<SideChoices> readable;  // the choices that draw the recognizable glyph
  double heading = 90.0;
};

class LinkageFont {
 public:
  LinkageFont() = default;
  explicit LinkageFont(std::map<char, LinkageLetter> letters) : letters_(std::move(letters)) {}

  const std::map<char, LinkageLetter>& letters() const { return letters_; }
  bool contains(char c) const { return letters_.count(c) != 0; }

  AngleSequence encode(char letter) const;
  /// Hyphen-joined angle list, e.g. "90-0-90-90-0".
  std::string angle_text(char letter) const;
  char decode(const LinkageGlyph& glyph, double angle_tol_deg = 1e-6) const;
  LinkageGlyph readable_glyph(char letter) const;
  LinkageGlyph random_puzzle_glyph(char letter, std::uint64_t seed) const;
  /// Draws the five turn bits for one glyph from a seeded stream.
  static SideChoices draw_choices(std::mt19937_64& gen);

  /// Pairs of letters whose sequences coincide forward or reversed.
  std::vector<std::pair<char, char>> ambiguous_pairs() const;

 private:
  const LinkageLetter& lookup(char letter) const;

  std::map<char, LinkageLetter> letters_;
};

std::string format_angle(double deg);

/// Chain drawing; coincident bars are spread apart by `spread` for legibility.
VectorScene render_linkage(const LinkageGlyph& glyph, double spread = 0.06);

}  // namespace pfont
