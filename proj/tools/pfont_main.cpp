// pfont: typeset text in the puzzle fonts, solve puzzle files, validate font data.

#include "pfont/error.hpp"
#include "pfont/glyphdata.hpp"
#include "pfont/typeset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pfont;

constexpr int kExitFailure = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << data)) throw IoError("cannot write '" + path + "'");
}

void print_diagnostics(const std::string& file, const std::vector<ParseDiagnostic>& diags) {
  for (const auto& d : diags) {
    std::cerr << file << ":" << d.line << ":" << d.column << ": "
              << (d.severity == Severity::Error ? "error" : "warning") << ": " << d.message << "\n";
  }
}

FontData load_font(const std::string& dir, FontId id) {
  const std::string path = dir + "/" + std::string(to_string(id)) + ".pft";
  ParseResult r = load_font_file(path);
  if (!r.ok()) {
    print_diagnostics(path, r.diagnostics);
    throw Error(ErrorCode::ParseError, "font file '" + path + "' has errors");
  }
  return std::move(*r.font);
}

FontId parse_font_name(const std::string& name) {
  auto id = font_id_from(name);
  if (!id) throw Error(ErrorCode::InvalidArgument, "unknown font '" + name + "'");
  return *id;
}

int run_validate(const std::vector<std::string>& paths, const std::string& format) {
  const bool json = format == "json-lines";
  bool failed = false;
  bool io_error = false;
  for (const auto& path : paths) {
    ParseResult r;
    try {
      r = load_font_file(path);
    } catch (const Error& e) {
      io_error = true;
      if (json) std::cout << nlohmann::json{{"file", path}, {"kind", "io-error"}, {"message", e.what()}}.dump() << "\n";
      else std::cout << path << ": I/O error: " << e.what() << "\n";
      continue;
    }
    ValidationReport rep;
    if (r.ok()) rep = validate_font(*r.font);
    const bool ok = r.ok() && rep.ok();
    failed = failed || !ok;
    if (json) {
      for (const auto& d : r.diagnostics) {
        std::cout << nlohmann::json{{"file", path}, {"kind", "diagnostic"}, {"line", d.line},
                                    {"column", d.column}, {"message", d.message}}
                         .dump()
                  << "\n";
      }
      for (const auto& i : rep.issues) {
        std::cout << nlohmann::json{{"file", path}, {"kind", "issue"}, {"check", i.check}, {"glyphs", i.glyphs},
                                    {"message", i.message}}
                         .dump()
                  << "\n";
      }
      std::cout << nlohmann::json{{"file", path}, {"kind", "summary"}, {"ok", ok}, {"glyphs", rep.glyphs_checked}}
                       .dump()
                << "\n";
    } else {
      for (const auto& d : r.diagnostics) {
        std::cout << path << ":" << d.line << ":" << d.column << ": " << d.message << "\n";
      }
      for (const auto& i : rep.issues) {
        std::cout << path << ": [" << i.check << "] " << i.glyphs << ": " << i.message << "\n";
      }
      std::cout << path << ": " << (ok ? "ok" : "FAILED") << " (" << rep.glyphs_checked << " glyphs)\n";
    }
  }
  if (io_error) return kExitIo;
  return failed ? kExitFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typeset text in puzzle fonts, solve puzzles, validate font data"};
  app.require_subcommand(1);
  std::string font_dir = "fonts";
  app.add_option("--font-dir", font_dir, "Directory holding <font>.pft files")->capture_default_str();

  // typeset
  auto* typeset = app.add_subcommand("typeset", "Render text as SVG or write a puzzle file");
  std::string text, font_name, variant = "solved", out_path, format = "svg";
  std::uint64_t seed = 0;
  double spacing = 0.5, scale = 40.0;
  typeset->add_option("text", text, "Text to set")->required();
  typeset->add_option("--font", font_name, "linkage|conveyer|maze|hinged|cane")->required();
  typeset->add_option("--variant", variant, "solved|puzzle")
      ->check(CLI::IsMember({"solved", "puzzle"}))
      ->capture_default_str();
  auto* seed_opt = typeset->add_option("--seed", seed, "Seed for random linkage states");
  typeset->add_option("--out", out_path, "Output file (default stdout)");
  typeset->add_option("--spacing", spacing, "Gap between glyphs in mean glyph widths")->capture_default_str();
  typeset->add_option("--scale", scale, "SVG units per geometry unit")->capture_default_str();
  typeset->add_option("--format", format, "svg|puzzle")->check(CLI::IsMember({"svg", "puzzle"}))->capture_default_str();

  // solve
  auto* solve = app.add_subcommand("solve", "Decode a puzzle file");
  std::string solve_font, puzzle_path, solve_out;
  solve->add_option("--font", solve_font, "linkage|conveyer (others are not machine-solvable)")->required();
  solve->add_option("puzzle", puzzle_path, "Puzzle file")->required();
  solve->add_option("--out", solve_out, "Write the solved SVG here");

  // validate
  auto* validate = app.add_subcommand("validate", "Check font data files");
  std::vector<std::string> paths;
  std::string report_format = "plain";
  validate->add_option("paths", paths, "Font files")->required();
  validate->add_option("--format", report_format, "plain|json-lines")
      ->check(CLI::IsMember({"plain", "json-lines"}))
      ->capture_default_str();

  // creases
  auto* creases = app.add_subcommand("creases", "Glue maze crease patterns for a text into one sheet");
  std::string crease_text, crease_out, crease_format = "svg";
  double crease_spacing = 0.5;
  creases->add_option("text", crease_text, "Text to fold")->required();
  creases->add_option("--out", crease_out, "Output file (default stdout)");
  creases->add_option("--spacing", crease_spacing, "Gap between glyphs in mean glyph widths")->capture_default_str();
  creases->add_option("--format", crease_format, "svg|list")->check(CLI::IsMember({"svg", "list"}))->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*typeset) {
      RenderRequest req;
      req.text = text;
      req.font = parse_font_name(font_name);
      req.variant = variant == "puzzle" ? Variant::Puzzle : Variant::Solved;
      if (*seed_opt) req.seed = seed;
      req.spacing = spacing;
      req.scale = scale;
      const FontData fd = load_font(font_dir, req.font);
      write_output(out_path, format == "puzzle" ? write_puzzle(req, fd) : cmd_typeset(req, fd));
      return 0;
    }
    if (*solve) {
      const FontId id = parse_font_name(solve_font);
      if (!machine_solvable(id)) {
        throw Error(ErrorCode::Unsupported, "font '" + solve_font +
                                                "' is not machine-solvable; solvable fonts: linkage, conveyer");
      }
      const Puzzle pz = parse_puzzle(read_file(puzzle_path));
      const SolveOutput res = cmd_solve(pz, load_font(font_dir, id));
      std::cout << res.text << "\n";
      if (!solve_out.empty()) write_output(solve_out, res.svg);
      return 0;
    }
    if (*validate) return run_validate(paths, report_format);
    if (*creases) {
      RenderRequest req;
      req.text = crease_text;
      req.font = FontId::Maze;
      req.variant = Variant::Puzzle;
      req.spacing = crease_spacing;
      const FontData fd = load_font(font_dir, FontId::Maze);
      if (crease_format == "svg") {
        write_output(crease_out, cmd_typeset(req, fd));
        return 0;
      }
      const CreasePattern sheet = maze_sheet(req, fd);
      const FoldabilityReport fr = check_flat_foldability_local(sheet);
      write_output(crease_out, write_crease_list(sheet));
      if (!fr.all_pass()) {
        std::cerr << "warning: " << fr.failures() << " vertices fail the local flat-foldability checks\n";
        return kExitFailure;
      }
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::MissingFontFile ? kExitIo : kExitFailure;
  }
  return 0;
}
