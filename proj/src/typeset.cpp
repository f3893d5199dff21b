#include "pfont/typeset.hpp"

#include "pfont/error.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

namespace pfont {

namespace {

// A space is a missing scene.
VectorScene lay_out(const std::vector<std::optional<VectorScene>>& glyphs, double spacing) {
  double total = 0.0;
  int counted = 0;
  for (const auto& g : glyphs) {
    if (!g || g->empty()) continue;
    const auto [lo, hi] = g->bounds();
    total += hi.x() - lo.x();
    ++counted;
  }
  const double mean = counted ? total / counted : 1.0;
  const double gap = spacing * mean;

  VectorScene page;
  double cursor = 0.0;
  for (const auto& g : glyphs) {
    if (!g) {
      cursor += mean + gap;
      continue;
    }
    const auto [lo, hi] = g->bounds();
    page.append(*g, Point2(cursor - lo.x(), -lo.y()));
    cursor += (hi.x() - lo.x()) + gap;
  }
  return page;
}

void check_alphabet(const std::string& text, const FontData& fd) {
  std::string missing;
  for (char c : text) {
    if (c == ' ' || fd.contains(c) || missing.find(c) != std::string::npos) continue;
    missing += c;
  }
  if (missing.empty()) return;
  std::string msg = "font '" + std::string(to_string(fd.font)) + "' has no glyph for ";
  for (size_t i = 0; i < missing.size(); ++i) {
    if (i) msg += ", ";
    msg += '\'';
    msg += missing[i];
    msg += '\'';
  }
  throw Error(ErrorCode::UnknownCharacter, msg);
}

void check_request(const RenderRequest& req, const FontData& fd) {
  if (req.font != fd.font) {
    throw Error(ErrorCode::InvalidArgument, "request is for font '" + std::string(to_string(req.font)) +
                                                "' but the data is '" + std::string(to_string(fd.font)) + "'");
  }
  if (!(req.spacing >= 0.0) || !(req.scale > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "spacing must be >= 0 and scale > 0");
  }
  if (req.text.find_first_not_of(' ') == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "nothing to typeset");
  }
  check_alphabet(req.text, fd);
}

std::uint64_t linkage_seed(const RenderRequest& req) {
  if (!req.seed) throw Error(ErrorCode::InvalidArgument, "linkage puzzles need --seed");
  return *req.seed;
}

VectorScene glyph_scene(char c, const RenderRequest& req, const FontData& fd, std::mt19937_64& gen) {
  const bool puzzle = req.variant == Variant::Puzzle;
  switch (fd.font) {
    case FontId::Linkage: {
      const auto& letter = std::get<LinkageLetter>(fd.glyphs.at(c));
      if (!puzzle) return render_linkage(fd.linkage().readable_glyph(c));
      return render_linkage(realize(letter.angles, LinkageFont::draw_choices(gen), Pose{Point2::Zero(), letter.heading}));
    }
    case FontId::Conveyer: {
      const auto& letter = std::get<ConveyerLetter>(fd.glyphs.at(c));
      VectorScene s = render_disks(letter.disks);
      if (!puzzle) s.append(render_belt(letter.disks, compute_belt(letter.disks, letter.belt)));
      return s;
    }
    case FontId::Maze: {
      const GridMaze& maze = fd.maze(c);
      if (!puzzle) return render_maze_2d(maze);
      return render_crease_pattern(generate_crease_pattern(maze));
    }
    case FontId::Hinged:
      if (!puzzle) return render_polyabolo(fd.hinged(c));
      return render_chain(HingedChain::standard(kChainPieces));
    case FontId::Cane: {
      const CaneGlyph& g = fd.cane(c);
      return puzzle ? render_side(g.section, g.twist) : render_top(g.section);
    }
  }
  return {};
}

CreasePattern maze_sheet_unchecked(const RenderRequest& req, const FontData& fd) {
  std::vector<std::optional<CreasePattern>> parts;
  double total = 0.0;
  int counted = 0;
  for (char c : req.text) {
    if (c == ' ') {
      parts.emplace_back();
      continue;
    }
    parts.push_back(generate_crease_pattern(fd.maze(c)));
    total += parts.back()->width;
    ++counted;
  }
  const double mean = total / counted;
  const double gap = req.spacing * mean;
  std::optional<CreasePattern> sheet;
  double pending = 0.0;  // blank width waiting to be glued before the next glyph
  for (const auto& p : parts) {
    if (!p) {
      pending += mean + gap;
      continue;
    }
    if (!sheet) {
      sheet = *p;
      pending = 0.0;
      continue;
    }
    const double blank = pending + gap;
    if (blank > 0.0) sheet = compose(*sheet, spacer_for(*sheet, blank), ComposeSide::Right);
    sheet = compose(*sheet, *p, ComposeSide::Right);
    pending = 0.0;
  }
  return *sheet;
}

std::string fmt17(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

VectorScene typeset_scene(const RenderRequest& req, const FontData& fd) {
  check_request(req, fd);
  if (fd.font == FontId::Maze && req.variant == Variant::Puzzle) {
    return render_crease_pattern(maze_sheet_unchecked(req, fd));
  }

  std::mt19937_64 gen(fd.font == FontId::Linkage && req.variant == Variant::Puzzle ? linkage_seed(req) : 0);
  std::vector<std::optional<VectorScene>> glyphs;
  for (char c : req.text) {
    if (c == ' ') glyphs.emplace_back();
    else glyphs.push_back(glyph_scene(c, req, fd, gen));
  }
  return lay_out(glyphs, req.spacing);
}

CreasePattern maze_sheet(const RenderRequest& req, const FontData& fd) {
  check_request(req, fd);
  if (fd.font != FontId::Maze) throw Error(ErrorCode::InvalidArgument, "crease sheets need the maze font");
  return maze_sheet_unchecked(req, fd);
}

std::string cmd_typeset(const RenderRequest& req, const FontData& fd) {
  StyleConfig style;
  style.scale = req.scale;
  style.allow_empty = true;  // e.g. a maze glyph with no walls
  return emit_svg(typeset_scene(req, fd), style);
}

bool machine_solvable(FontId font) { return font == FontId::Linkage || font == FontId::Conveyer; }

std::string write_puzzle(const RenderRequest& req, const FontData& fd) {
  check_request(req, fd);
  if (!machine_solvable(fd.font)) {
    throw Error(ErrorCode::Unsupported,
                "puzzle files exist only for the linkage and conveyer fonts, not '" + std::string(to_string(fd.font)) +
                    "'");
  }
  std::string out = "puzzle " + std::string(to_string(fd.font)) + " " + std::to_string(kFormatVersion) + "\n";
  std::mt19937_64 gen(fd.font == FontId::Linkage ? linkage_seed(req) : 0);
  for (char c : req.text) {
    if (c == ' ') {
      out += "space\n";
      continue;
    }
    out += "glyph\n";
    if (fd.font == FontId::Linkage) {
      const auto& letter = std::get<LinkageLetter>(fd.glyphs.at(c));
      const LinkageGlyph g =
          realize(letter.angles, LinkageFont::draw_choices(gen), Pose{Point2::Zero(), letter.heading});
      for (const auto& v : g.vertices) out += "vertex " + fmt17(v.x()) + " " + fmt17(v.y()) + "\n";
    } else {
      for (const auto& d : std::get<ConveyerLetter>(fd.glyphs.at(c)).disks.centers()) {
        out += "disk " + fmt17(d.x()) + " " + fmt17(d.y()) + "\n";
      }
    }
  }
  return out;
}

Puzzle parse_puzzle(const std::string& text) {
  Puzzle pz;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header = false;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::ParseError, "puzzle line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (!header) {
      std::string font;
      int version = 0;
      if (kw != "puzzle" || !(ls >> font >> version)) fail("expected 'puzzle <font> <version>'");
      auto id = font_id_from(font);
      if (!id || !machine_solvable(*id)) fail("no puzzle format for font '" + font + "'");
      if (version != kFormatVersion) fail("unsupported version " + std::to_string(version));
      pz.font = *id;
      header = true;
      continue;
    }
    if (kw == "glyph" || kw == "space") {
      std::string extra;
      if (ls >> extra) fail("'" + kw + "' takes no arguments");
      pz.glyphs.emplace_back();
      pz.glyphs.back().space = kw == "space";
      continue;
    }
    const char* want = pz.font == FontId::Linkage ? "vertex" : "disk";
    if (kw != want) fail("unexpected '" + kw + "', expected 'glyph' or '" + want + "'");
    if (pz.glyphs.empty() || pz.glyphs.back().space) fail("'" + kw + "' outside a 'glyph' record");
    double x = 0, y = 0;
    std::string extra;
    if (!(ls >> x >> y) || (ls >> extra)) fail("'" + kw + "' takes two numbers");
    pz.glyphs.back().points.emplace_back(x, y);
  }
  if (!header) fail("empty puzzle");
  return pz;
}

namespace {

[[noreturn]] void rethrow_for_glyph(const Error& e, size_t index) {
  throw Error(e.code(), "glyph " + std::to_string(index) + ": " + e.what());
}

// The letter's belt with disk indices translated into the puzzle's disk order.
BeltSpec remap_belt(const ConveyerLetter& letter, const DiskSet& puzzle) {
  Point2 cf = Point2::Zero(), cp = Point2::Zero();
  for (const auto& c : letter.disks.centers()) cf += c;
  for (const auto& c : puzzle.centers()) cp += c;
  const Point2 shift = (cp - cf) / static_cast<double>(puzzle.size());
  std::vector<int> to_puzzle(letter.disks.size(), -1);
  for (size_t j = 0; j < letter.disks.size(); ++j) {
    for (size_t k = 0; k < puzzle.size(); ++k) {
      if ((puzzle[k] - (letter.disks[j] + shift)).norm() < 1e-5) to_puzzle[j] = static_cast<int>(k);
    }
    if (to_puzzle[j] < 0) throw Error(ErrorCode::NoSolution, "disk configuration does not line up with the letter");
  }
  BeltSpec spec = letter.belt;
  for (auto& w : spec.winding) w.disk = to_puzzle[w.disk];
  return spec;
}

}  // namespace

SolveOutput cmd_solve(const Puzzle& puzzle, const FontData& fd, double scale) {
  if (!machine_solvable(fd.font)) {
    throw Error(ErrorCode::Unsupported, "font '" + std::string(to_string(fd.font)) +
                                            "' is not machine-solvable; only linkage and conveyer are");
  }
  if (puzzle.font != fd.font) throw Error(ErrorCode::InvalidArgument, "puzzle and font data disagree on the font");

  SolveOutput out;
  std::vector<std::optional<VectorScene>> scenes;
  if (fd.font == FontId::Linkage) {
    const LinkageFont font = fd.linkage();
    for (size_t i = 0; i < puzzle.glyphs.size(); ++i) {
      if (puzzle.glyphs[i].space) {
        out.text += ' ';
        scenes.emplace_back();
        continue;
      }
      try {
        const auto& pts = puzzle.glyphs[i].points;
        if (pts.size() != kLinkageVertices) {
          throw Error(ErrorCode::NotAChain, "needs " + std::to_string(kLinkageVertices) + " vertices, found " +
                                                std::to_string(pts.size()));
        }
        LinkageGlyph g;
        std::copy(pts.begin(), pts.end(), g.vertices.begin());
        const char c = font.decode(g);
        out.text += c;
        scenes.push_back(render_linkage(font.readable_glyph(c)));
      } catch (const Error& e) {
        rethrow_for_glyph(e, i);
      }
    }
  } else {
    const ConveyerFont font = fd.conveyer();
    for (size_t i = 0; i < puzzle.glyphs.size(); ++i) {
      if (puzzle.glyphs[i].space) {
        out.text += ' ';
        scenes.emplace_back();
        continue;
      }
      try {
        const DiskSet disks(puzzle.glyphs[i].points);
        const std::vector<char> hits = font.match(disks);
        if (hits.empty()) throw Error(ErrorCode::NoSolution, "disk configuration matches no letter");
        if (hits.size() > 1) {
          throw Error(ErrorCode::AmbiguousSolution, std::string("disk configuration matches both '") + hits[0] +
                                                        "' and '" + hits[1] + "'");
        }
        const BeltSpec belt = remap_belt(font.at(hits[0]), disks).canonical();
        const BeltSolveResult solved = solve_belt(disks);
        const bool found = std::find(solved.solutions.begin(), solved.solutions.end(), belt) != solved.solutions.end();
        if (!found && !solved.complete) throw Error(ErrorCode::BudgetExceeded, "belt search ran out of budget");
        if (!found) throw Error(ErrorCode::NoSolution, "the letter's belt is not a valid belt for these disks");
        out.text += hits[0];
        VectorScene s = render_disks(disks);
        s.append(render_belt(disks, compute_belt(disks, belt)));
        scenes.push_back(std::move(s));
      } catch (const Error& e) {
        rethrow_for_glyph(e, i);
      }
    }
  }
  if (std::none_of(scenes.begin(), scenes.end(), [](const auto& s) { return s.has_value(); })) {
    throw Error(ErrorCode::NoSolution, "puzzle has no glyphs");
  }
  StyleConfig style;
  style.scale = scale;
  out.svg = emit_svg(lay_out(scenes, 0.5), style);
  return out;
}

}  // namespace pfont
