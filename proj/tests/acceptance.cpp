// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"
#include "pfont/cane.hpp"
#include "pfont/conveyer.hpp"
#include "pfont/error.hpp"
#include "pfont/glyphdata.hpp"
#include "pfont/hinged.hpp"
#include "pfont/linkage.hpp"
#include "pfont/maze.hpp"
#include "pfont/typeset.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

using namespace pfont;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

const FontData& shipped(FontId id) {
  static std::map<FontId, FontData> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, oracle::load_shipped(id)).first;
  return it->second;
}

std::string random_text(std::mt19937_64& gen, const FontData& fd) {
  std::string alphabet;
  for (const auto& [c, payload] : fd.glyphs) alphabet += c;
  std::string s;
  const size_t len = 1 + gen() % 8;
  while (s.size() < len) {
    if (!s.empty() && s.size() + 1 < len && gen() % 6 == 0) s += ' ';
    else s += alphabet[gen() % alphabet.size()];
  }
  return s;
}

Outcome linkage_encoding() {
  Outcome o;
  const auto font = shipped(FontId::Linkage).linkage();
  o.require(font.encode('F').degrees == std::array<double, 5>{90, 0, 90, 90, 0}, "F");
  o.require(font.encode('U').degrees == std::array<double, 5>{0, 180, 90, 90, 180}, "U");
  o.require(font.encode('N').degrees == std::array<double, 5>{180, 30, 180, 30, 180}, "N");
  return o;
}

Outcome linkage_enumeration() {
  Outcome o;
  const auto t0 = Clock::now();
  o.require(enumerate_glyphs(AngleSequence::from({100, 45, 140, 80, 120})).size() == 32, "generic sequence");
  o.require(enumerate_glyphs(AngleSequence::from({180, 180, 180, 180, 180})).size() == 1, "straight sequence");
  const auto font = shipped(FontId::Linkage).linkage();
  size_t decoded = 0;
  for (const auto& [c, letter] : font.letters()) {
    for (const auto& g : enumerate_glyphs(letter.angles)) {
      o.require(font.decode(g) == c, std::string("realization of '") + c + "'");
      ++decoded;
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(decoded) + " realizations decoded";
  return o;
}

Outcome linkage_reversal() {
  Outcome o;
  const auto font = shipped(FontId::Linkage).linkage();
  const auto& letters = font.letters();
  for (const auto& [a, la] : letters) {
    for (const auto& [b, lb] : letters) {
      if (a >= b) continue;
      o.require(la.angles != lb.angles && la.angles != lb.angles.reversed(), std::string(1, a) + b);
    }
  }
  return o;
}

Outcome belt_lengths() {
  Outcome o;
  const DiskSet two({{0, 0}, {4, 0}});
  const DiskSet tri({{0, 0}, {3, 0}, {0, 4}});
  const double l2 = compute_belt(two, BeltSpec::parse("0+ 1+")).total_length;
  const double l3 = compute_belt(tri, BeltSpec::parse("0+ 1+ 2+")).total_length;
  o.require(std::abs(l2 - (8 + 2 * std::numbers::pi)) < 1e-9, "stadium length");
  o.require(std::abs(l3 - (12 + 2 * std::numbers::pi)) < 1e-9, "triangle length");
  for (const DiskSet* d : {&two, &tri}) {
    for (const auto& s : solve_belt(*d).solutions) o.require(validate_belt(*d, compute_belt(*d, s)).ok(), s.to_string());
  }
  return o;
}

Outcome belt_solver() {
  Outcome o;
  std::mt19937_64 gen(2026);
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = oracle::random_disks(gen, 1 + trial % 5, 8.0, 2.5);
    const auto res = solve_belt(DiskSet(c));
    std::set<oracle::Winding> got;
    for (const auto& s : res.solutions) got.insert(oracle::from_spec(s));
    o.require(res.complete && got == oracle::naive_belts(c), "set " + std::to_string(trial));
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "took " + std::to_string(t) + " s");
  return o;
}

Outcome conveyer_glyphs() {
  Outcome o;
  const auto font = shipped(FontId::Conveyer).conveyer();
  std::set<std::string> prints;
  for (const auto& [c, letter] : font.letters()) {
    const auto res = solve_belt(letter.disks);
    const auto n = std::count(res.solutions.begin(), res.solutions.end(), letter.belt.canonical());
    o.require(res.complete && n == 1, std::string("belt of '") + c + "'");
    o.require(prints.insert(fingerprint(letter.disks)).second, std::string("fingerprint of '") + c + "'");
  }
  return o;
}

Outcome maze_scale() {
  Outcome o;
  o.require(scale_factor({1}) == 3, "scale_factor(1)");
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> side(1, 7);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    GridMaze m(side(gen), side(gen));
    for (int x = 0; x < m.width(); ++x) {
      for (int y = 0; y < m.height(); ++y) {
        if (u(gen) < 0.3) m.add_wall_run(x, y, x + 1, y);
        if (u(gen) < 0.3) m.add_wall_run(x, y, x, y + 1);
      }
    }
    const auto cp = generate_crease_pattern(m);
    o.require(std::abs(cp.width - 3.0 * m.width()) < 1e-9 && std::abs(cp.height - 3.0 * m.height()) < 1e-9,
              "maze " + std::to_string(trial));
  }
  return o;
}

Outcome maze_foldability() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto& fd = shipped(FontId::Maze);
  std::map<char, CreasePattern> cps;
  size_t vertices = 0;
  for (const auto& [c, payload] : fd.glyphs) {
    const auto rep = check_flat_foldability_local(cps.emplace(c, generate_crease_pattern(fd.maze(c))).first->second);
    o.require(rep.all_pass(), std::string("glyph ") + c);
    vertices += rep.vertices.size();
  }
  for (const auto& [a, ca] : cps) {
    for (const auto& [b, cb] : cps) {
      const auto rep = check_flat_foldability_local(compose(ca, cb, ComposeSide::Right));
      o.require(rep.all_pass(), std::string("pair ") + a + b);
      vertices += rep.vertices.size();
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 30.0, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(vertices) + " vertices, " + std::to_string(cps.size() * cps.size()) + " pairs";
  return o;
}

Outcome hinged_folds() {
  Outcome o;
  const auto chain = HingedChain::standard(kChainPieces);
  o.require(chain.valid() && chain.area() == 16.0, "chain");
  std::vector<std::pair<std::string, Polyabolo>> targets{{"square", square_polyabolo(4)}};
  for (const auto& [c, payload] : shipped(FontId::Hinged).glyphs) {
    targets.emplace_back(std::string(1, c), shipped(FontId::Hinged).hinged(c));
  }
  double slowest = 0;
  for (const auto& [name, p] : targets) {
    o.require(p.cells.size() == kGlyphCells && p.area() == 16.0 && refine(p).slots.size() == 128, name + " shape");
    const auto t0 = Clock::now();
    FoldSearchStats stats;
    std::optional<FoldAssignment> fold;
    try {
      fold = fold_chain(chain, p, kDefaultFoldBudget, &stats);
    } catch (const Error& e) {
      o.require(false, name + ": " + e.what());
      continue;
    }
    const double t = seconds_since(t0);
    slowest = std::max(slowest, t);
    o.require(fold && stats.nodes <= kDefaultFoldBudget && verify_fold(chain, p, *fold), name + " fold");
    o.require(t < 120.0, name + " took " + std::to_string(t) + " s");
  }
  if (o.pass) o.detail = std::to_string(targets.size()) + " shapes, slowest " + std::to_string(slowest) + " s";
  return o;
}

Outcome cane_strands() {
  Outcome o;
  const auto& fd = shipped(FontId::Cane);
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> t(0, 10);
  for (const auto& [c, payload] : fd.glyphs) {
    const auto& g = fd.cane(c);
    const std::string name(1, c);
    for (const auto& s : g.section.subcanes()) {
      for (double h = 0; h <= 3.0; h += 0.25) {
        o.require(strand_x(s, {0.0, 3.0}, h) == strand_x(s, {0.0, 3.0}, 0.0), name + " straight");
      }
      for (double omega : {0.25, 0.5, 1.0}) {
        for (int i = 0; i < 20; ++i) {
          const double h = t(gen);
          o.require(std::abs(strand_x(s, {omega, 12}, h + 1 / omega) - strand_x(s, {omega, 12}, h)) < 1e-9,
                    name + " period");
        }
      }
    }
    for (const TwistParams tw : {g.twist, TwistParams{0.0, 2.0}, TwistParams{1.0, 2.0}}) {
      const auto scene = render_side(g.section, tw);
      for (const auto& item : scene.items()) {
        if (const auto* p = std::get_if<PolygonPrim>(&item)) {
          for (const auto& q : p->points) o.require(q.x() >= -1 - 1e-12 && q.x() <= 1 + 1e-12, name + " envelope");
        }
      }
    }
  }
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::mt19937_64 gen(11);
  for (FontId id : {FontId::Linkage, FontId::Conveyer}) {
    for (int trial = 0; trial < 20; ++trial) {
      RenderRequest req;
      req.text = random_text(gen, shipped(id));
      req.font = id;
      req.variant = Variant::Puzzle;
      req.seed = gen();
      const auto out = cmd_solve(parse_puzzle(write_puzzle(req, shipped(id))), shipped(id));
      o.require(out.text == req.text, std::string(to_string(id)) + " '" + req.text + "'");
    }
  }
  for (FontId id : {FontId::Linkage, FontId::Conveyer, FontId::Maze, FontId::Hinged, FontId::Cane}) {
    std::ifstream in(oracle::font_path(id));
    std::stringstream text;
    text << in.rdbuf();
    const auto first = parse_font(text.str());
    const std::string written = first.font ? write_font(*first.font) : std::string();
    const auto second = parse_font(written);
    o.require(first.ok() && second.ok() && structurally_equal(*first.font, *second.font) &&
                  write_font(*second.font) == written,
              std::string(to_string(id)) + ".pft");

    RenderRequest req;
    req.text = random_text(gen, shipped(id));
    req.font = id;
    req.seed = 5;
    for (Variant v : {Variant::Solved, Variant::Puzzle}) {
      req.variant = v;
      const std::string svg = cmd_typeset(req, shipped(id));
      o.require(oracle::xml_well_formed(svg) && svg == cmd_typeset(req, shipped(id)),
                std::string(to_string(id)) + " svg");
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"linkage letters F, U, N encode to their published angles", linkage_encoding},
      {"chain enumeration gives 32 and 1 shapes; every realization decodes in under 1 s", linkage_enumeration},
      {"linkage angle sequences are distinct up to reversal", linkage_reversal},
      {"belt lengths 8+2pi and 12+2pi; solver belts validate", belt_lengths},
      {"belt solver matches naive enumeration on 50 sets in under 60 s", belt_solver},
      {"each conveyer glyph has one letter belt; fingerprints distinct", conveyer_glyphs},
      {"maze scale factor 3 and 3x pattern dimensions", maze_scale},
      {"maze glyphs and all ordered pairs pass Maekawa and Kawasaki in under 30 s", maze_foldability},
      {"128-piece chain folds the square and every hinged glyph", hinged_folds},
      {"cane strands: straight, periodic, inside the envelope", cane_strands},
      {"typeset/solve round-trips, font round-trips, deterministic SVG", round_trips},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
    failed += !o.pass;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
