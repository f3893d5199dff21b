#pragma once

// Text layout for every font plus the puzzle file format used by `solve`.

#include "pfont/glyphdata.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pfont {

enum class Variant { Solved, Puzzle };

struct RenderRequest {
  std::string text;
  FontId font = FontId::Linkage;
  Variant variant = Variant::Solved;
  std::optional<std::uint64_t> seed;  // linkage puzzles only
  double spacing = 0.5;               // gap between glyphs, in mean glyph widths
  double scale = 40.0;                // SVG units per geometry unit
};

/// Lays glyphs out left to right with bottoms aligned; spaces leave a gap of
/// one mean glyph width. Throws UnknownCharacter naming every missing character.
VectorScene typeset_scene(const RenderRequest& req, const FontData& fd);
std::string cmd_typeset(const RenderRequest& req, const FontData& fd);

/// Maze text as one crease pattern: glyph patterns glued edge to edge with
/// spacers that carry the pleats across the gaps.
CreasePattern maze_sheet(const RenderRequest& req, const FontData& fd);

/// Machine-readable puzzle for the solvable fonts (linkage, conveyer). Throws
/// Unsupported for the other fonts.
std::string write_puzzle(const RenderRequest& req, const FontData& fd);

struct PuzzleGlyph {
  std::vector<Point2> points;  // linkage: 7 chain vertices; conveyer: disk centers
  bool space = false;
};

struct Puzzle {
  FontId font = FontId::Linkage;
  std::vector<PuzzleGlyph> glyphs;
};

/// Throws ParseError with a line number on malformed input.
Puzzle parse_puzzle(const std::string& text);

struct SolveOutput {
  std::string text;
  std::string svg;  // solved rendering of the decoded glyphs
};

/// Linkage: decode each chain. Conveyer: solve the belts, match the disk
/// configuration against the font and check the letter's belt is a solution.
/// Errors name the 0-based glyph index.
SolveOutput cmd_solve(const Puzzle& puzzle, const FontData& fd, double scale = 40.0);

/// Fonts whose puzzles can be solved by machine.
bool machine_solvable(FontId font);

}  // namespace pfont
