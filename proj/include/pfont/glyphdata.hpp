#pragma once

// Plain-text font data (.pft): one file per font, line-oriented glyph records.

#include "pfont/cane.hpp"
#include "pfont/conveyer.hpp"
#include "pfont/hinged.hpp"
#include "pfont/linkage.hpp"
#include "pfont/maze.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pfont {

enum class FontId { Linkage, Conveyer, Maze, Hinged, Cane };

std::string_view to_string(FontId id);
std::optional<FontId> font_id_from(std::string_view name);

struct CaneGlyph {
  CaneCrossSection section;
  TwistParams twist;
};

using GlyphPayload = std::variant<LinkageLetter, ConveyerLetter, GridMaze, Polyabolo, CaneGlyph>;

inline constexpr int kFormatVersion = 1;

struct FontData {
  FontId font = FontId::Linkage;
  int version = kFormatVersion;
  std::map<char, GlyphPayload> glyphs;

  bool contains(char c) const { return glyphs.count(c) != 0; }

  /// Typed views; throw InvalidArgument when the font id does not match.
  LinkageFont linkage() const;
  ConveyerFont conveyer() const;
  const GridMaze& maze(char c) const;
  const Polyabolo& hinged(char c) const;
  const CaneGlyph& cane(char c) const;
};

/// Field-by-field equality; cell and wall order do not matter.
bool structurally_equal(const FontData& a, const FontData& b);

enum class Severity { Error, Warning };

struct ParseDiagnostic {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
  Severity severity = Severity::Error;
};

struct ParseResult {
  std::optional<FontData> font;  // empty when any error was reported
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return font.has_value(); }
};

/// Never throws on bad input; every problem becomes a diagnostic and parsing
/// continues with the next line.
ParseResult parse_font(std::string_view text);

struct ValidationIssue {
  std::string check;  // short id such as "reversal-distinct"
  std::string glyphs; // offending characters, e.g. "MW"
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  size_t glyphs_checked = 0;

  bool ok() const { return issues.empty(); }
};

ValidationReport validate_font(const FontData& fd);

/// Canonical text: glyphs sorted by character, numbers in shortest round-trip form.
std::string write_font(const FontData& fd);

/// Reads and parses a file; throws MissingFontFile when it cannot be opened.
ParseResult load_font_file(const std::string& path);

}  // namespace pfont
