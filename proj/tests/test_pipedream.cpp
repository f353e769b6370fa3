#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "schublas/bases.hpp"
#include "schublas/composition.hpp"
#include "schublas/errors.hpp"
#include "schublas/permutation.hpp"
#include "schublas/pipedream.hpp"

using namespace schublas;

namespace {

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(word);
  while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<WeakComposition> snowy_box(int cap, int len) {
  std::vector<WeakComposition> out;
  std::vector<int> entries(len, 0);
  while (true) {
    WeakComposition a(entries);
    if (a.is_snowy() && std::find(out.begin(), out.end(), a) == out.end())
      out.push_back(a);
    int i = 0;
    while (i < len && entries[i] == cap) entries[i++] = 0;
    if (i == len) break;
    ++entries[i];
  }
  return out;
}

PipeGrid identity_grid(int n) {
  PipeGrid g(n, n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      g.set(r, c, r == c ? Tile::ElbowSE : (r > c ? Tile::Vertical : Tile::Horizontal));
  return g;
}

}  // namespace

TEST_CASE("tile characters") {
  const Tile tiles[] = {Tile::Blank,      Tile::Cross,    Tile::ElbowSE,
                        Tile::ElbowNW,    Tile::Horizontal, Tile::Vertical};
  const char chars[] = {'.', '+', 'r', 'j', '-', '|'};
  for (int i = 0; i < 6; ++i) {
    CHECK(tile_char(tiles[i]) == chars[i]);
    CHECK(tile_from_char(chars[i]) == tiles[i]);
  }
  CHECK_THROWS_AS(tile_from_char('x'), SchubError);
  CHECK(tile_has_north(Tile::Vertical));
  CHECK_FALSE(tile_has_north(Tile::ElbowSE));
  CHECK(tile_has_east(Tile::ElbowSE));
  CHECK(tile_has_west(Tile::ElbowNW));
  CHECK_FALSE(tile_has_south(Tile::Horizontal));
}

TEST_CASE("grid parse render json round trips") {
  std::vector<std::string> rows = {".r-", "r+-", "||."};
  PipeGrid g = PipeGrid::parse(rows);
  CHECK(g.rows() == 3);
  CHECK(g.cols() == 3);
  CHECK(g.at(1, 2) == Tile::ElbowSE);
  CHECK(g.render_ascii() == rows);
  CHECK(PipeGrid::from_json(g.to_json()) == g);
  g.set(1, 1, Tile::Cross);
  CHECK(g.at(1, 1) == Tile::Cross);
  CHECK_THROWS_AS(PipeGrid::parse({"ab"}), SchubError);
  CHECK_THROWS_AS(PipeGrid::parse({"..", "."}), SchubError);
  CHECK_THROWS_AS(g.at(4, 1), SchubError);
}

TEST_CASE("square grids of a fixed permutation") {
  std::vector<PipeGrid> grids = bpd_list(Permutation{2, 1, 4, 3});
  REQUIRE(grids.size() == 3);
  std::vector<PipeGrid> expected = {
      PipeGrid::parse({"..r-", "r-+-", "|rjr", "||r+"}),
      PipeGrid::parse({".r--", ".|r-", "r+jr", "||r+"}),
      PipeGrid::parse({".r--", "r+--", "||.r", "||r+"}),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(grids == expected);
  Polynomial sum;
  for (const PipeGrid& g : grids) {
    CHECK(is_bpd_of(g, Permutation{2, 1, 4, 3}));
    sum += Polynomial::monomial(bpd_weight(g));
  }
  CHECK(sum == schubert_polynomial(Permutation{2, 1, 4, 3}));
  CHECK(bpd_list(Permutation{2, 4, 1, 5, 3}).size() == 5);
}

TEST_CASE("square grid enumeration matches the recursion") {
  for (const Permutation& w : symmetric_group(4)) {
    std::vector<PipeGrid> grids = bpd_list(w);
    CHECK(std::is_sorted(grids.begin(), grids.end()));
    CHECK(std::adjacent_find(grids.begin(), grids.end()) == grids.end());
    for (const PipeGrid& g : grids) CHECK(is_bpd_of(g, w));
    CHECK(bpd_polynomial(w) == schubert_polynomial(w));
  }
}

TEST_CASE("identity grid is the unique zero-weight grid") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<PipeGrid> grids = bpd_list(Permutation{}, n);
    REQUIRE(grids.size() == 1);
    CHECK(grids[0] == identity_grid(n));
    CHECK(bpd_weight(grids[0]).is_zero());
  }
}

TEST_CASE("left-to-top grids of a fixed composition") {
  std::vector<PipeGrid> grids = ltbpd_list(WeakComposition{0, 3, 0, 2});
  REQUIRE(grids.size() == 5);
  for (const PipeGrid& g : grids) {
    CHECK(g.rows() == 4);
    CHECK(g.cols() == 3);
    CHECK(is_ltbpd_of(g, WeakComposition{0, 3, 0, 2}));
  }
  PipeGrid sample = PipeGrid::parse({".||", "-+j", ".|.", "-j."});
  CHECK(std::find(grids.begin(), grids.end(), sample) != grids.end());
  CHECK(ltbpd_polynomial(WeakComposition{0, 3, 0, 2}) ==
        top_lascoux_polynomial(WeakComposition{0, 3, 0, 2}));
}

TEST_CASE("left-to-top enumeration matches the recursion") {
  for (const WeakComposition& a : snowy_box(3, 3)) {
    std::vector<PipeGrid> grids = ltbpd_list(a);
    CHECK(std::is_sorted(grids.begin(), grids.end()));
    for (const PipeGrid& g : grids) {
      if (!a.is_zero()) {
        CHECK(g.rows() == a.size());
        CHECK(g.cols() == a.max_entry());
      }
      CHECK(is_ltbpd_of(g, a));
    }
    CHECK(ltbpd_polynomial(a) == top_lascoux_polynomial(a));
  }
}

TEST_CASE("membership checks reject tampered grids") {
  PipeGrid good = bpd_list(Permutation{2, 1, 4, 3}).front();
  CHECK_FALSE(is_bpd_of(good, Permutation{1, 3, 2}));
  PipeGrid bad = good;
  bad.set(1, 1, Tile::Cross);
  CHECK_FALSE(is_bpd_of(bad, Permutation{2, 1, 4, 3}));
  PipeGrid lt = ltbpd_list(WeakComposition{0, 3, 0, 2}).front();
  CHECK_FALSE(is_ltbpd_of(lt, WeakComposition{0, 2}));
}

TEST_CASE("pipes trace to matching boundary pairs") {
  auto pairs = trace_pipes(identity_grid(3));
  REQUIRE(pairs.size() == 3);
  for (const auto& [entry, exit] : pairs) {
    CHECK(entry.side == 'B');
    CHECK(exit.side == 'R');
    CHECK(entry.index == exit.index);
  }
  CHECK(trace_pipes(PipeGrid(2, 2)).empty());
  // Edge mismatch: .| has a north edge with nothing above it is fine, but a
  // dangling west edge inside the grid is not.
  CHECK_THROWS_AS(trace_pipes(PipeGrid::parse({".-"})), SchubError);
}

TEST_CASE("subgrid rotation carries square grids to left-to-top grids") {
  std::vector<PipeGrid> squares = bpd_list(Permutation{2, 4, 1, 5, 3});
  REQUIRE(squares.size() == 5);
  std::set<PipeGrid> rotated;
  for (const PipeGrid& g : squares) {
    PipeGrid r = rotate_subgrid(g, 3, 4);
    CHECK(r.rows() == 4);
    CHECK(r.cols() == 3);
    // Row weights transfer: m minus the blank count of the mirrored full row.
    WeakComposition wt = ltbpd_weight(r);
    for (int i = 1; i <= 4; ++i) {
      int blanks = 0;
      for (int c = 1; c <= g.cols(); ++c)
        if (g.at(4 + 1 - i, c) == Tile::Blank) ++blanks;
      CHECK(wt.at(i) == 3 - blanks);
    }
    rotated.insert(r);
  }
  std::vector<PipeGrid> lt = ltbpd_list(WeakComposition{0, 3, 0, 2});
  CHECK(rotated == std::set<PipeGrid>(lt.begin(), lt.end()));
}

TEST_CASE("subgrid rotation edge cases") {
  // Pipes may cross the cut: boundary edges of the subgrid turn into left and
  // top entries of the rotated grid.
  PipeGrid r = rotate_subgrid(identity_grid(3), 2, 2);
  CHECK(r == PipeGrid::parse({"j|", "-j"}));
  CHECK(is_ltbpd_of(r, WeakComposition{1, 2}));
  // A north edge on the subgrid's top row rotates into a dangling south edge.
  CHECK_THROWS_AS(rotate_subgrid(PipeGrid::parse({"|.", "j."}), 2, 2), SchubError);
  CHECK_THROWS_AS(rotate_subgrid(identity_grid(2), 3, 2), SchubError);
}

TEST_CASE("subgrid rotation bijection across a snowy box") {
  for (const WeakComposition& a : snowy_box(3, 3)) {
    if (a.is_zero()) continue;
    int n = a.size();
    int m = a.max_entry();
    Permutation w = standardize(a, m, n);
    int square = std::max({w.size(), n, m});
    std::set<PipeGrid> rotated;
    for (const PipeGrid& g : bpd_list(w, square))
      rotated.insert(rotate_subgrid(g, m, n));
    std::vector<PipeGrid> lt = ltbpd_list(a);
    CHECK(rotated == std::set<PipeGrid>(lt.begin(), lt.end()));
  }
}
