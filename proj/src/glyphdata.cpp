#include "pfont/glyphdata.hpp"

#include "pfont/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace pfont {

std::string_view to_string(FontId id) {
  switch (id) {
    case FontId::Linkage: return "linkage";
    case FontId::Conveyer: return "conveyer";
    case FontId::Maze: return "maze";
    case FontId::Hinged: return "hinged";
    case FontId::Cane: return "cane";
  }
  return "unknown";
}

std::optional<FontId> font_id_from(std::string_view name) {
  for (FontId id : {FontId::Linkage, FontId::Conveyer, FontId::Maze, FontId::Hinged, FontId::Cane}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

namespace {

template <typename T>
const T& payload_as(const FontData& fd, FontId want, char c) {
  if (fd.font != want) {
    throw Error(ErrorCode::InvalidArgument,
                "font is '" + std::string(to_string(fd.font)) + "', not '" + std::string(to_string(want)) + "'");
  }
  auto it = fd.glyphs.find(c);
  if (it == fd.glyphs.end()) throw Error(ErrorCode::UnknownCharacter, std::string("no glyph for '") + c + "'");
  return std::get<T>(it->second);
}

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

LinkageFont FontData::linkage() const {
  std::map<char, LinkageLetter> letters;
  for (const auto& [c, p] : glyphs) letters.emplace(c, payload_as<LinkageLetter>(*this, FontId::Linkage, c));
  return LinkageFont(std::move(letters));
}

ConveyerFont FontData::conveyer() const {
  std::map<char, ConveyerLetter> letters;
  for (const auto& [c, p] : glyphs) letters.emplace(c, payload_as<ConveyerLetter>(*this, FontId::Conveyer, c));
  return ConveyerFont(std::move(letters));
}

const GridMaze& FontData::maze(char c) const { return payload_as<GridMaze>(*this, FontId::Maze, c); }
const Polyabolo& FontData::hinged(char c) const { return payload_as<Polyabolo>(*this, FontId::Hinged, c); }
const CaneGlyph& FontData::cane(char c) const { return payload_as<CaneGlyph>(*this, FontId::Cane, c); }

namespace {

bool same_payload(const LinkageLetter& a, const LinkageLetter& b) {
  return a.angles == b.angles && a.readable == b.readable && a.heading == b.heading;
}

bool same_payload(const ConveyerLetter& a, const ConveyerLetter& b) {
  return a.disks.centers() == b.disks.centers() && a.belt == b.belt;
}

bool same_payload(const GridMaze& a, const GridMaze& b) { return a == b; }

bool same_payload(const Polyabolo& a, const Polyabolo& b) {
  std::vector<AboloCell> x = a.cells, y = b.cells;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool same_subcane(const Subcane& a, const Subcane& b) {
  return a.rho == b.rho && a.phi == b.phi && a.radius == b.radius && a.color == b.color;
}

bool same_payload(const CaneGlyph& a, const CaneGlyph& b) {
  const auto& x = a.section.subcanes();
  const auto& y = b.section.subcanes();
  return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin(), same_subcane) &&
         a.twist.omega == b.twist.omega && a.twist.length == b.twist.length;
}

}  // namespace

bool structurally_equal(const FontData& a, const FontData& b) {
  if (a.font != b.font || a.version != b.version || a.glyphs.size() != b.glyphs.size()) return false;
  for (const auto& [c, pa] : a.glyphs) {
    auto it = b.glyphs.find(c);
    if (it == b.glyphs.end() || pa.index() != it->second.index()) return false;
    const bool same = std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          return same_payload(x, std::get<T>(it->second));
        },
        pa);
    if (!same) return false;
  }
  return true;
}

// --- parser -----------------------------------------------------------------

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

// Payload collected for one glyph before it is turned into a typed record.
struct PendingGlyph {
  char key = 0;
  int line = 0;
  std::optional<std::array<double, kLinkageJoints>> angles;
  std::optional<std::string> sides;
  int sides_line = 0;
  std::optional<double> heading;
  std::vector<Point2> disks;
  std::optional<std::string> belt;
  std::optional<std::pair<int, int>> grid;
  std::vector<std::array<int, 4>> walls;
  std::vector<int> wall_lines;
  std::vector<AboloCell> cells;
  std::vector<Subcane> subcanes;
  std::optional<TwistParams> twist;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run() {
    size_t pos = 0;
    int line_no = 0;
    while (pos <= text_.size()) {
      const size_t end = std::min(text_.find('\n', pos), text_.size());
      ++line_no;
      handle_line(text_.substr(pos, end - pos), line_no);
      if (end >= text_.size()) break;
      pos = end + 1;
    }
    finish_glyph();
    if (!have_header_) error(1, 1, "missing 'font <id> <version>' header");

    ParseResult result;
    result.diagnostics = std::move(diags_);
    std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                     [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
                       return std::tie(a.line, a.column) < std::tie(b.line, b.column);
                     });
    const bool failed = std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                                    [](const ParseDiagnostic& d) { return d.severity == Severity::Error; });
    if (!failed) result.font = std::move(fd_);
    return result;
  }

 private:
  void error(int line, int col, std::string msg) { diags_.push_back({line, col, std::move(msg), Severity::Error}); }

  bool number(const Token& t, int line, double& out) {
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (first != last && *first == '+') ++first;
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(out)) {
      error(line, t.column, "expected a number, found '" + std::string(t.text) + "'");
      return false;
    }
    return true;
  }

  bool integer(const Token& t, int line, int& out) {
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last) {
      error(line, t.column, "expected an integer, found '" + std::string(t.text) + "'");
      return false;
    }
    return true;
  }

  bool arity(const std::vector<Token>& toks, int line, size_t want) {
    if (toks.size() != want + 1) {
      error(line, toks.front().column,
            "'" + std::string(toks.front().text) + "' takes " + std::to_string(want) + " value" +
                (want == 1 ? "" : "s") + ", found " + std::to_string(toks.size() - 1));
      return false;
    }
    return true;
  }

  void handle_line(std::string_view raw, int line) {
    const std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) return;
    const std::string_view kw = toks[0].text;

    if (kw == "font") {
      if (have_header_) {
        error(line, toks[0].column, "duplicate 'font' header");
        return;
      }
      have_header_ = true;
      if (!arity(toks, line, 2)) return;
      auto id = font_id_from(toks[1].text);
      if (!id) {
        error(line, toks[1].column, "unknown font id '" + std::string(toks[1].text) + "'");
        header_ok_ = false;
      } else {
        fd_.font = *id;
      }
      int version = 0;
      if (integer(toks[2], line, version)) {
        if (version != kFormatVersion) {
          error(line, toks[2].column, "unsupported format version " + std::to_string(version));
        }
        fd_.version = version;
      }
      return;
    }
    if (!have_header_) {
      error(line, toks[0].column, "expected 'font <id> <version>' before any other record");
      have_header_ = true;  // report once, keep checking the rest
      header_ok_ = false;
    }
    if (kw == "glyph") {
      finish_glyph();
      if (!arity(toks, line, 1)) return;
      if (toks[1].text.size() != 1 || static_cast<unsigned char>(toks[1].text[0]) < 0x21 ||
          static_cast<unsigned char>(toks[1].text[0]) > 0x7e) {
        error(line, toks[1].column, "glyph key must be a single printable ASCII character");
        return;
      }
      const char key = toks[1].text[0];
      if (auto it = first_line_.find(key); it != first_line_.end()) {
        error(line, toks[1].column,
              std::string("duplicate glyph '") + key + "' (first defined on line " + std::to_string(it->second) +
                  ")");
        return;
      }
      first_line_[key] = line;
      current_ = PendingGlyph{};
      current_->key = key;
      current_->line = line;
      return;
    }
    if (!current_) {
      error(line, toks[0].column, "'" + std::string(kw) + "' outside a glyph record");
      return;
    }
    if (!allowed(kw)) {
      if (known_keyword(kw)) {
        error(line, toks[0].column,
              "'" + std::string(kw) + "' is not valid in a " + std::string(to_string(fd_.font)) + " font");
      } else {
        error(line, toks[0].column, "unknown keyword '" + std::string(kw) + "'");
      }
      return;
    }
    payload_line(toks, line);
  }

  static bool known_keyword(std::string_view kw) {
    for (const char* k : {"angles", "sides", "heading", "disk", "belt", "grid", "wall", "cell", "subcane", "twist"}) {
      if (kw == k) return true;
    }
    return false;
  }

  bool allowed(std::string_view kw) const {
    if (!header_ok_) return known_keyword(kw);
    switch (fd_.font) {
      case FontId::Linkage: return kw == "angles" || kw == "sides" || kw == "heading";
      case FontId::Conveyer: return kw == "disk" || kw == "belt";
      case FontId::Maze: return kw == "grid" || kw == "wall";
      case FontId::Hinged: return kw == "cell";
      case FontId::Cane: return kw == "subcane" || kw == "twist";
    }
    return false;
  }

  void payload_line(const std::vector<Token>& toks, int line) {
    PendingGlyph& g = *current_;
    const std::string_view kw = toks[0].text;
    auto once = [&](bool already) {
      if (already) error(line, toks[0].column, "'" + std::string(kw) + "' given twice in one glyph");
      return !already;
    };

    if (kw == "angles") {
      if (!once(g.angles.has_value()) || !arity(toks, line, kLinkageJoints)) return;
      std::array<double, kLinkageJoints> a{};
      bool ok = true;
      for (int i = 0; i < kLinkageJoints; ++i) {
        if (!number(toks[i + 1], line, a[i])) {
          ok = false;
        } else if (a[i] < 0.0 || a[i] > 360.0) {
          error(line, toks[i + 1].column, "angle must lie in [0, 360]");
          ok = false;
        }
      }
      if (ok) g.angles = a;
    } else if (kw == "sides") {
      if (!once(g.sides.has_value()) || !arity(toks, line, kLinkageJoints)) return;
      std::string s;
      for (int i = 0; i < kLinkageJoints; ++i) {
        const auto t = toks[i + 1].text;
        if (t != "L" && t != "R" && t != "*") {
          error(line, toks[i + 1].column, "side must be L, R or *");
          return;
        }
        s += t[0];
      }
      g.sides = s;
      g.sides_line = line;
    } else if (kw == "heading") {
      double h = 0;
      if (once(g.heading.has_value()) && arity(toks, line, 1) && number(toks[1], line, h)) g.heading = h;
    } else if (kw == "disk") {
      double x = 0, y = 0;
      if (arity(toks, line, 2) && number(toks[1], line, x) && number(toks[2], line, y)) g.disks.emplace_back(x, y);
    } else if (kw == "belt") {
      if (!once(g.belt.has_value())) return;
      if (toks.size() < 2) {
        error(line, toks[0].column, "'belt' needs at least one winding entry");
        return;
      }
      std::string spec;
      for (size_t i = 1; i < toks.size(); ++i) {
        const auto t = toks[i].text;
        const bool shape_ok = t.size() >= 2 && (t.back() == '+' || t.back() == '-') &&
                              std::all_of(t.begin(), t.end() - 1, [](char c) { return c >= '0' && c <= '9'; });
        if (!shape_ok) {
          error(line, toks[i].column, "winding entry must look like 3+ or 0-");
          return;
        }
        if (i > 1) spec += ' ';
        spec += t;
      }
      g.belt = spec;
    } else if (kw == "grid") {
      int w = 0, h = 0;
      if (!once(g.grid.has_value()) || !arity(toks, line, 2)) return;
      if (integer(toks[1], line, w) && integer(toks[2], line, h)) {
        if (w < 1 || h < 1) error(line, toks[1].column, "grid dimensions must be positive");
        else g.grid = std::pair(w, h);
      }
    } else if (kw == "wall") {
      if (!arity(toks, line, 4)) return;
      std::array<int, 4> v{};
      for (int i = 0; i < 4; ++i) {
        if (!integer(toks[i + 1], line, v[i])) return;
      }
      if ((v[0] != v[2]) == (v[1] != v[3])) {
        error(line, toks[1].column, "wall must be a non-empty horizontal or vertical run");
        return;
      }
      g.walls.push_back(v);
      g.wall_lines.push_back(line);
    } else if (kw == "cell") {
      if (!arity(toks, line, 4)) return;
      AboloCell c;
      if (!integer(toks[1], line, c.x) || !integer(toks[2], line, c.y)) return;
      if (toks[3].text == "NE") c.diagonal = Diagonal::NE;
      else if (toks[3].text == "NW") c.diagonal = Diagonal::NW;
      else {
        error(line, toks[3].column, "diagonal must be NE or NW");
        return;
      }
      if (toks[4].text == "first") c.half = Half::First;
      else if (toks[4].text == "second") c.half = Half::Second;
      else {
        error(line, toks[4].column, "half must be first or second");
        return;
      }
      if (std::find(g.cells.begin(), g.cells.end(), c) != g.cells.end()) {
        error(line, toks[1].column, "duplicate cell");
        return;
      }
      g.cells.push_back(c);
    } else if (kw == "subcane") {
      if (!arity(toks, line, 4)) return;
      Subcane s;
      if (!number(toks[1], line, s.rho) || !number(toks[2], line, s.phi) || !number(toks[3], line, s.radius)) return;
      s.color = std::string(toks[4].text);
      if (s.rho < 0.0 || s.rho >= 1.0) {
        error(line, toks[1].column, "offset must lie in [0, 1)");
      } else if (s.radius <= 0.0) {
        error(line, toks[3].column, "radius must be positive");
      } else if (s.rho + s.radius > 1.0 + kTol) {
        error(line, toks[3].column, "sub-cane leaves the envelope (offset + radius > 1)");
      } else {
        g.subcanes.push_back(s);
      }
    } else if (kw == "twist") {
      if (!once(g.twist.has_value()) || !arity(toks, line, 2)) return;
      TwistParams t;
      if (!number(toks[1], line, t.omega) || !number(toks[2], line, t.length)) return;
      if (t.omega < 0.0) error(line, toks[1].column, "twist rate must be >= 0");
      else if (t.length <= 0.0) error(line, toks[2].column, "length must be > 0");
      else g.twist = t;
    }
  }

  void finish_glyph() {
    if (!current_) return;
    PendingGlyph g = std::move(*current_);
    current_.reset();
    if (!header_ok_) return;
    auto fail = [&](const std::string& msg) { error(g.line, 1, std::string("glyph '") + g.key + "': " + msg); };
    try {
      switch (fd_.font) {
        case FontId::Linkage: {
          if (!g.angles) return fail("missing 'angles'");
          LinkageLetter letter;
          letter.angles = AngleSequence::from(*g.angles);
          if (g.heading) letter.heading = *g.heading;
          if (g.sides) {
            unsigned bits = 0;
            const auto u = letter.angles.unsigned_angles();
            for (int i = 0; i < kLinkageJoints; ++i) {
              const bool straight_or_folded = u[i] <= kTol || u[i] >= 180.0 - kTol;
              const char s = (*g.sides)[i];
              if (s == '*' && !straight_or_folded) {
                error(g.sides_line, 1, "joint " + std::to_string(i + 1) + " bends, so its side must be L or R");
              }
              if (s == 'R' && !straight_or_folded) bits |= 1u << i;
            }
            letter.readable = SideChoices::from_bits(bits);
          }
          fd_.glyphs.emplace(g.key, letter);
          break;
        }
        case FontId::Conveyer: {
          if (g.disks.empty()) return fail("no 'disk' lines");
          if (!g.belt) return fail("missing 'belt'");
          ConveyerLetter letter{DiskSet(g.disks), BeltSpec::parse(*g.belt)};
          for (const auto& w : letter.belt.winding) {
            if (static_cast<size_t>(w.disk) >= letter.disks.size()) {
              return fail("belt refers to disk " + std::to_string(w.disk) + ", only " +
                          std::to_string(letter.disks.size()) + " defined");
            }
          }
          fd_.glyphs.emplace(g.key, letter);
          break;
        }
        case FontId::Maze: {
          if (!g.grid) return fail("missing 'grid'");
          GridMaze maze(g.grid->first, g.grid->second);
          for (size_t i = 0; i < g.walls.size(); ++i) {
            const auto& w = g.walls[i];
            try {
              maze.add_wall_run(w[0], w[1], w[2], w[3]);
            } catch (const Error&) {
              error(g.wall_lines[i], 1, "wall outside the " + std::to_string(g.grid->first) + "x" +
                                            std::to_string(g.grid->second) + " grid");
            }
          }
          fd_.glyphs.emplace(g.key, maze);
          break;
        }
        case FontId::Hinged: {
          if (g.cells.empty()) return fail("no 'cell' lines");
          fd_.glyphs.emplace(g.key, Polyabolo{g.cells});
          break;
        }
        case FontId::Cane: {
          if (!g.twist) return fail("missing 'twist'");
          fd_.glyphs.emplace(g.key, CaneGlyph{CaneCrossSection(g.subcanes), *g.twist});
          break;
        }
      }
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  std::string_view text_;
  std::vector<ParseDiagnostic> diags_;
  FontData fd_;
  bool have_header_ = false;
  bool header_ok_ = true;
  std::map<char, int> first_line_;
  std::optional<PendingGlyph> current_;
};

}  // namespace

ParseResult parse_font(std::string_view text) { return Parser(text).run(); }

ParseResult load_font_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFontFile, "cannot open font file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_font(buf.str());
}

// --- validation ---------------------------------------------------------------

namespace {

void validate_linkage(const FontData& fd, ValidationReport& rep) {
  const LinkageFont font = fd.linkage();
  for (const auto& [a, b] : font.ambiguous_pairs()) {
    rep.issues.push_back({"reversal-distinct", std::string{a, b},
                          std::string("letters '") + a + "' and '" + b +
                              "' share an angle sequence up to reversal"});
  }
  for (const auto& [c, letter] : font.letters()) {
    const auto u = letter.angles.unsigned_angles();
    if (std::all_of(u.begin(), u.end(), [](double x) { return x >= 180.0 - kTol; })) {
      rep.issues.push_back({"not-straight", std::string(1, c), "straight chain carries no information"});
    }
    if (!letter.readable) {
      rep.issues.push_back({"readable-sides", std::string(1, c), "no 'sides' given for the readable glyph"});
    }
  }
}

void validate_conveyer(const FontData& fd, ValidationReport& rep) {
  std::map<std::string, char> seen;
  for (const auto& [c, payload] : fd.glyphs) {
    const auto& letter = std::get<ConveyerLetter>(payload);
    try {
      const BeltPath path = compute_belt(letter.disks, letter.belt);
      const BeltReport r = validate_belt(letter.disks, path);
      if (!r.ok()) {
        rep.issues.push_back({"belt-valid", std::string(1, c),
                              std::string("belt fails:") + (r.simple ? "" : " not simple") +
                                  (r.avoids_interiors ? "" : " crosses a disk") +
                                  (r.visits_all ? "" : " misses a disk") + (r.taut ? "" : " not taut")});
      }
    } catch (const Error& e) {
      rep.issues.push_back({"belt-valid", std::string(1, c), e.what()});
    }
    const std::string fp = fingerprint(letter.disks);
    if (auto [it, inserted] = seen.emplace(fp, c); !inserted) {
      rep.issues.push_back({"fingerprint-distinct", std::string{it->second, c},
                            std::string("letters '") + it->second + "' and '" + c +
                                "' have the same disk configuration"});
    }
  }
}

void validate_maze(const FontData& fd, ValidationReport& rep) {
  for (const auto& [c, payload] : fd.glyphs) {
    const auto& maze = std::get<GridMaze>(payload);
    try {
      const CreasePattern cp = generate_crease_pattern(maze);
      const FoldabilityReport fr = check_flat_foldability_local(cp);
      if (!fr.all_pass()) {
        rep.issues.push_back({"flat-foldable", std::string(1, c),
                              std::to_string(fr.failures()) + " interior vertices fail Maekawa/Kawasaki"});
      }
    } catch (const Error& e) {
      rep.issues.push_back({"crease-pattern", std::string(1, c), e.what()});
    }
  }
}

void validate_hinged(const FontData& fd, ValidationReport& rep) {
  for (const auto& [c, payload] : fd.glyphs) {
    const PolyaboloReport r = validate_polyabolo(std::get<Polyabolo>(payload));
    const std::string g(1, c);
    if (!r.count_ok) {
      rep.issues.push_back({"cell-count", g,
                            "has " + std::to_string(r.cell_count) + " cells, expected " +
                                std::to_string(r.expected_cells)});
    }
    if (std::abs(r.area - 0.5 * static_cast<double>(kGlyphCells)) > kTol) {
      rep.issues.push_back({"area", g, "area " + num(r.area) + " differs from " + num(0.5 * kGlyphCells)});
    }
    if (!r.distinct || !r.overlap_free) rep.issues.push_back({"overlap", g, "cells overlap"});
    if (!r.connected) rep.issues.push_back({"connected", g, "cells are not edge-connected"});
  }
}

void validate_cane(const FontData& fd, ValidationReport& rep) {
  std::vector<std::pair<char, const CaneGlyph*>> seen;
  for (const auto& [c, payload] : fd.glyphs) {
    const auto& g = std::get<CaneGlyph>(payload);
    try {
      g.twist.validate();
    } catch (const Error& e) {
      rep.issues.push_back({"twist", std::string(1, c), e.what()});
    }
    for (const auto& [other, og] : seen) {
      if (same_payload(*og, g)) {
        rep.issues.push_back({"distinct", std::string{other, c},
                              std::string("letters '") + other + "' and '" + c + "' have identical canes"});
      }
    }
    seen.emplace_back(c, &g);
  }
}

}  // namespace

ValidationReport validate_font(const FontData& fd) {
  ValidationReport rep;
  rep.glyphs_checked = fd.glyphs.size();
  switch (fd.font) {
    case FontId::Linkage: validate_linkage(fd, rep); break;
    case FontId::Conveyer: validate_conveyer(fd, rep); break;
    case FontId::Maze: validate_maze(fd, rep); break;
    case FontId::Hinged: validate_hinged(fd, rep); break;
    case FontId::Cane: validate_cane(fd, rep); break;
  }
  return rep;
}

// --- writer -------------------------------------------------------------------

namespace {

void write_payload(std::string& out, const LinkageLetter& l) {
  out += "angles";
  for (double a : l.angles.degrees) out += " " + num(a);
  out += "\n";
  if (l.readable) {
    const auto u = l.angles.unsigned_angles();
    out += "sides";
    for (int i = 0; i < kLinkageJoints; ++i) {
      const bool free_joint = u[i] <= kTol || u[i] >= 180.0 - kTol;
      out += free_joint ? " *" : (l.readable->sides[i] == Turn::Right ? " R" : " L");
    }
    out += "\n";
  }
  if (l.heading != 90.0) out += "heading " + num(l.heading) + "\n";
}

void write_payload(std::string& out, const ConveyerLetter& l) {
  for (const auto& c : l.disks.centers()) out += "disk " + num(c.x()) + " " + num(c.y()) + "\n";
  out += "belt " + l.belt.to_string() + "\n";
}

void write_payload(std::string& out, const GridMaze& m) {
  out += "grid " + std::to_string(m.width()) + " " + std::to_string(m.height()) + "\n";
  // Maximal runs: horizontal by row, then vertical by column.
  std::map<int, std::vector<int>> rows, cols;
  for (const auto& e : m.walls()) {
    if (e.horizontal()) rows[e.y1].push_back(e.x1);
    else cols[e.x1].push_back(e.y1);
  }
  auto emit = [&](std::map<int, std::vector<int>>& groups, bool horizontal) {
    for (auto& [fixed, starts] : groups) {
      std::sort(starts.begin(), starts.end());
      size_t i = 0;
      while (i < starts.size()) {
        size_t j = i;
        while (j + 1 < starts.size() && starts[j + 1] == starts[j] + 1) ++j;
        const int lo = starts[i], hi = starts[j] + 1;
        const std::string f = std::to_string(fixed);
        out += horizontal ? "wall " + std::to_string(lo) + " " + f + " " + std::to_string(hi) + " " + f + "\n"
                          : "wall " + f + " " + std::to_string(lo) + " " + f + " " + std::to_string(hi) + "\n";
        i = j + 1;
      }
    }
  };
  emit(rows, true);
  emit(cols, false);
}

void write_payload(std::string& out, const Polyabolo& p) {
  std::vector<AboloCell> cells = p.cells;
  std::sort(cells.begin(), cells.end(), [](const AboloCell& a, const AboloCell& b) {
    return std::tie(a.y, a.x, a.diagonal, a.half) < std::tie(b.y, b.x, b.diagonal, b.half);
  });
  for (const auto& c : cells) {
    out += "cell " + std::to_string(c.x) + " " + std::to_string(c.y) +
           (c.diagonal == Diagonal::NE ? " NE" : " NW") + (c.half == Half::First ? " first" : " second") + "\n";
  }
}

void write_payload(std::string& out, const CaneGlyph& g) {
  for (const auto& s : g.section.subcanes()) {
    out += "subcane " + num(s.rho) + " " + num(s.phi) + " " + num(s.radius) + " " + s.color + "\n";
  }
  out += "twist " + num(g.twist.omega) + " " + num(g.twist.length) + "\n";
}

}  // namespace

std::string write_font(const FontData& fd) {
  std::string out = "font " + std::string(to_string(fd.font)) + " " + std::to_string(fd.version) + "\n";
  for (const auto& [c, payload] : fd.glyphs) {
    out += "\nglyph ";
    out += c;
    out += "\n";
    std::visit([&](const auto& p) { write_payload(out, p); }, payload);
  }
  return out;
}

}  // namespace pfont
