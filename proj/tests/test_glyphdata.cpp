#include "oracles.hpp"
#include "pfont/error.hpp"
#include "pfont/glyphdata.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace pfont;

namespace {

constexpr FontId kAllFonts[] = {FontId::Linkage, FontId::Conveyer, FontId::Maze, FontId::Hinged, FontId::Cane};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FontData parsed(const std::string& text) {
  auto r = parse_font(text);
  if (!r.ok()) {
    std::string all;
    for (const auto& d : r.diagnostics) all += std::to_string(d.line) + ":" + d.message + "\n";
    FAIL_CHECK(all);
    return {};
  }
  return *r.font;
}

bool has_issue(const ValidationReport& rep, const std::string& check, const std::string& glyphs) {
  return std::any_of(rep.issues.begin(), rep.issues.end(),
                     [&](const ValidationIssue& i) { return i.check == check && i.glyphs == glyphs; });
}

}  // namespace

TEST_SUITE("glyphdata") {
  TEST_CASE("font ids") {
    for (FontId id : kAllFonts) CHECK(font_id_from(to_string(id)) == id);
    CHECK_FALSE(font_id_from("comic").has_value());
    CHECK(to_string(FontId::Conveyer) == "conveyer");
  }

  TEST_CASE("shipped fonts parse, validate and round-trip") {
    const size_t expected[] = {36, 36, 26, 36, 26};
    for (size_t k = 0; k < 5; ++k) {
      const FontId id = kAllFonts[k];
      INFO(to_string(id));
      const std::string text = slurp(oracle::font_path(id));
      const auto r = parse_font(text);
      REQUIRE(r.ok());
      CHECK(r.diagnostics.empty());
      CHECK(r.font->font == id);
      CHECK(r.font->glyphs.size() == expected[k]);
      const auto rep = validate_font(*r.font);
      CHECK(rep.ok());
      CHECK(rep.glyphs_checked == expected[k]);
      const std::string canon = write_font(*r.font);
      const FontData again = parsed(canon);
      CHECK(structurally_equal(*r.font, again));
      CHECK(write_font(again) == canon);
    }
  }

  TEST_CASE("linkage records") {
    const auto fd = parsed(
        "# comment line\n"
        "font linkage 1\n"
        "\n"
        "glyph F   # trailing comment\n"
        "angles 90 0 90 90 0\r\n"
        "sides R * R R *\n"
        "glyph Z\n"
        "angles 45 180 45 180 180\n"
        "sides L * R * *\n"
        "heading 0\n");
    const auto font = fd.linkage();
    CHECK(font.encode('F').degrees == std::array<double, 5>{90, 0, 90, 90, 0});
    CHECK(font.letters().at('F').readable->bits() == 0b01101u);
    CHECK(font.letters().at('F').heading == 90.0);
    CHECK(font.letters().at('Z').heading == 0.0);
    const std::string out = write_font(fd);
    CHECK(out.find("heading 0") != std::string::npos);
    CHECK(out.find("heading 90") == std::string::npos);
    CHECK(out.rfind("font linkage 1\n", 0) == 0);
  }

  TEST_CASE("conveyer records") {
    const auto fd = parsed("font conveyer 1\nglyph O\ndisk 0 0\ndisk 4 0\ndisk 2 3\nbelt 0+ 1+ 2+\n");
    const auto font = fd.conveyer();
    CHECK(font.at('O').disks.size() == 3);
    CHECK(font.at('O').belt.to_string() == "0+ 1+ 2+");
    CHECK(validate_font(fd).ok());
  }

  TEST_CASE("maze walls merge into runs") {
    const auto fd = parsed("font maze 1\nglyph L\ngrid 3 3\nwall 1 1 1 2\nwall 1 2 1 3\nwall 1 1 2 1\n");
    CHECK(fd.maze('L').walls().size() == 3);
    const std::string out = write_font(fd);
    CHECK(out.find("wall 1 1 1 3") != std::string::npos);
    CHECK(out.find("wall 1 1 2 1") != std::string::npos);
    CHECK(structurally_equal(parsed(out), fd));
  }

  TEST_CASE("hinged cells are written sorted") {
    const auto fd = parsed("font hinged 1\nglyph x\ncell 1 0 NE first\ncell 0 0 NE second\ncell 0 0 NE first\n");
    const std::string out = write_font(fd);
    const auto a = out.find("cell 0 0 NE first"), b = out.find("cell 0 0 NE second"), c = out.find("cell 1 0 NE first");
    REQUIRE(a != std::string::npos);
    CHECK(a < b);
    CHECK(b < c);
    // Cell order is not part of the identity.
    CHECK(structurally_equal(fd, parsed("font hinged 1\nglyph x\ncell 0 0 NE first\ncell 1 0 NE first\ncell 0 0 NE second\n")));
  }

  TEST_CASE("cane records") {
    const auto fd = parsed("font cane 1\nglyph o\nsubcane 0.5 90 0.1 red\nsubcane 0 0 0.2 white\ntwist 0.5 4\n");
    const auto& g = fd.cane('o');
    CHECK(g.section.subcanes().size() == 2);
    CHECK(g.section.subcanes()[0].color == "red");
    CHECK(g.twist.omega == 0.5);
    CHECK(structurally_equal(parsed(write_font(fd)), fd));
  }

  TEST_CASE("numbers round-trip exactly") {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> ang(0, 360);
    FontData fd;
    fd.font = FontId::Linkage;
    for (char c = 'a'; c <= 'z'; ++c) {
      LinkageLetter l;
      l.angles = AngleSequence::from({ang(gen), ang(gen), ang(gen), ang(gen), ang(gen)});
      l.readable = SideChoices::from_bits(gen() & 31u);
      l.heading = ang(gen);
      fd.glyphs.emplace(c, l);
    }
    const auto back = parsed(write_font(fd));
    REQUIRE(back.glyphs.size() == 26);
    for (const auto& [c, payload] : fd.glyphs) {
      CHECK(std::get<LinkageLetter>(back.glyphs.at(c)).angles == std::get<LinkageLetter>(payload).angles);
      CHECK(std::get<LinkageLetter>(back.glyphs.at(c)).heading == std::get<LinkageLetter>(payload).heading);
    }
    CHECK(write_font(parsed("font cane 1\nglyph o\nsubcane 0.1 0 0.2 w\ntwist 0.5 4\n")).find("subcane 0.1 0 0.2 w") !=
          std::string::npos);
  }

  TEST_CASE("diagnostics carry line and column and do not stop at the first error") {
    const auto r = parse_font(
        "font linkage 1\n"
        "glyph A\n"
        "angles 10 20 x 40 50\n"
        "belt 0+\n"
        "glyph B\n"
        "  bogus 1\n"
        "glyph C\n"
        "angles 10 20 30 40 400\n");
    CHECK_FALSE(r.ok());
    auto at = [&](int line, int column) {
      return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                         [&](const ParseDiagnostic& d) { return d.line == line && d.column == column; });
    };
    CHECK(at(3, 14));  // the 'x'
    CHECK(at(4, 1));   // keyword from another font
    CHECK(at(6, 3));   // indented unknown keyword
    CHECK(at(8, 20));  // angle out of range
    CHECK(at(2, 1));   // glyph A ends up without angles
    CHECK(std::is_sorted(r.diagnostics.begin(), r.diagnostics.end(), [](const auto& a, const auto& b) {
      return std::tie(a.line, a.column) < std::tie(b.line, b.column);
    }));
  }

  TEST_CASE("header problems") {
    CHECK_FALSE(parse_font("").ok());
    CHECK_FALSE(parse_font("glyph A\nangles 1 2 3 4 5\n").ok());
    CHECK_FALSE(parse_font("font comic 1\n").ok());
    CHECK_FALSE(parse_font("font linkage 2\n").ok());
    CHECK_FALSE(parse_font("font linkage 1\nfont linkage 1\n").ok());
    const auto r = parse_font("font linkage 1\nglyph AB\nangles 1 2 3 4 5\n");
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics[0].column == 7);
    CHECK(parse_font("font maze 1\n").ok());  // an empty font is still a font
  }

  TEST_CASE("payload problems") {
    CHECK_FALSE(parse_font("font linkage 1\nglyph A\nsides L L L L L\n").ok());                  // no angles
    CHECK_FALSE(parse_font("font linkage 1\nglyph A\nangles 90 90 90 90 90\nsides L * L L L\n").ok());
    CHECK_FALSE(parse_font("font linkage 1\nglyph A\nangles 1 2 3 4 5\nangles 1 2 3 4 5\n").ok());
    CHECK_FALSE(parse_font("font conveyer 1\nglyph A\ndisk 0 0\ndisk 1 0\nbelt 0+ 1+\n").ok());    // overlap
    CHECK_FALSE(parse_font("font conveyer 1\nglyph A\ndisk 0 0\nbelt 0+ 1+\n").ok());             // bad index
    CHECK_FALSE(parse_font("font conveyer 1\nglyph A\ndisk 0 0\nbelt 0*\n").ok());
    CHECK_FALSE(parse_font("font maze 1\nglyph A\ngrid 2 2\nwall 0 0 3 0\n").ok());
    CHECK_FALSE(parse_font("font maze 1\nglyph A\ngrid 2 2\nwall 0 0 1 1\n").ok());
    CHECK_FALSE(parse_font("font maze 1\nglyph A\nwall 0 0 1 0\n").ok());                         // no grid
    CHECK_FALSE(parse_font("font hinged 1\nglyph A\ncell 0 0 NE first\ncell 0 0 NE first\n").ok());
    CHECK_FALSE(parse_font("font hinged 1\nglyph A\ncell 0 0 SE first\n").ok());
    CHECK_FALSE(parse_font("font cane 1\nglyph A\nsubcane 0.9 0 0.2 red\ntwist 1 1\n").ok());
    CHECK_FALSE(parse_font("font cane 1\nglyph A\nsubcane 0.5 0 0.2 red\n").ok());                // no twist
    CHECK_FALSE(parse_font("font cane 1\nglyph A\nsubcane 0.5 0 0.2 red\ntwist -1 1\n").ok());
    CHECK_FALSE(parse_font("font maze 1\nglyph A\ngrid 2 2\nangles 1 2 3 4 5\n").ok());            // wrong font
    CHECK_FALSE(parse_font("font maze 1\ngrid 2 2\n").ok());                                      // outside glyph
  }

  TEST_CASE("validation issues") {
    const auto link = validate_font(parsed(
        "font linkage 1\n"
        "glyph a\nangles 10 20 30 40 50\nsides L L L L L\n"
        "glyph b\nangles 50 40 30 20 10\nsides L L L L L\n"
        "glyph c\nangles 180 180 180 180 180\nsides * * * * *\n"
        "glyph d\nangles 90 90 90 90 100\n"));
    CHECK(has_issue(link, "reversal-distinct", "ab"));
    CHECK(has_issue(link, "not-straight", "c"));
    CHECK(has_issue(link, "readable-sides", "d"));
    CHECK(link.glyphs_checked == 4);

    const auto conv = validate_font(parsed(
        "font conveyer 1\n"
        "glyph a\ndisk 0 0\ndisk 4 0\nbelt 0+ 1+\n"
        "glyph b\ndisk 10 10\ndisk 14 10\nbelt 0+ 1-\n"));
    CHECK(has_issue(conv, "belt-valid", "b"));
    CHECK(has_issue(conv, "fingerprint-distinct", "ab"));

    const auto hing = validate_font(parsed("font hinged 1\nglyph a\ncell 0 0 NE first\ncell 3 3 NE first\n"));
    CHECK(has_issue(hing, "cell-count", "a"));
    CHECK(has_issue(hing, "area", "a"));
    CHECK(has_issue(hing, "connected", "a"));

    const auto cane = validate_font(parsed(
        "font cane 1\nglyph a\nsubcane 0.5 0 0.1 r\ntwist 1 1\nglyph b\nsubcane 0.5 0 0.1 r\ntwist 1 1\n"));
    CHECK(has_issue(cane, "distinct", "ab"));
  }

  TEST_CASE("typed views and files") {
    const auto fd = oracle::load_shipped(FontId::Maze);
    CHECK_THROWS_AS(fd.linkage(), Error);
    CHECK_THROWS_AS(fd.hinged('A'), Error);
    CHECK_THROWS_AS(fd.maze('~'), Error);
    try {
      load_font_file("/nonexistent/font.pft");
      FAIL("expected MissingFontFile");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MissingFontFile);
    }
  }
}
