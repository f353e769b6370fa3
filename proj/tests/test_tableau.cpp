#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "schublas/composition.hpp"
#include "schublas/diagram.hpp"
#include "schublas/errors.hpp"
#include "schublas/permutation.hpp"
#include "schublas/tableau.hpp"

using namespace schublas;

namespace {

// Reference enumerator: assign every cell a value in [1..row] directly and
// keep the fillings whose columns strictly increase downward. Exponential,
// fine at this scale, and shares no code with the column-product recursion.
std::vector<std::vector<int>> brute_fills(const Diagram& d) {
  const auto& cells = d.cells();
  std::vector<std::vector<int>> out;
  std::vector<int> values(cells.size(), 0);
  auto column_ok = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j)
      if (cells[j].col == cells[k].col && cells[j].row < cells[k].row &&
          values[j] >= values[k])
        return false;
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.push_back(values);
      return;
    }
    for (int v = 1; v <= cells[k].row; ++v) {
      values[k] = v;
      if (column_ok(k)) rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("tableau basics") {
  Diagram shape = rothe_diagram(Permutation{3, 1, 5, 2, 4});
  Tableau t(shape, {1, 1, 2, 3});
  CHECK(t.entry(1, 1) == 1);
  CHECK(t.entry(3, 4) == 3);
  CHECK_THROWS_AS(t.entry(2, 2), SchubError);
  CHECK(t.weight() == WeakComposition{2, 1, 1});
  CHECK(t.str() == "1: 1=1 2=1\n3: 2=2 4=3");
  CHECK_THROWS_AS(Tableau(shape, {1, 1}), SchubError);
}

TEST_CASE("perfect tableaux match the reference enumerator") {
  const std::vector<Diagram> shapes = {
      rothe_diagram(Permutation{3, 1, 5, 2, 4}),
      rothe_diagram(Permutation{4, 1, 5, 3, 2}),
      snow_diagram(WeakComposition{0, 4, 2}).unlabeled(),
      snow_diagram(WeakComposition{2, 0, 4, 0, 1}).unlabeled(),
      Diagram::of_composition(WeakComposition{2, 0, 3}),
      Diagram({{1, 1}, {2, 1}, {2, 3}, {3, 3}}),
  };
  for (const Diagram& d : shapes) {
    std::vector<Tableau> enumerated = perfect_tableaux(d);
    std::vector<std::vector<int>> reference = brute_fills(d);
    REQUIRE(enumerated.size() == reference.size());
    std::set<std::vector<int>> seen;
    for (const Tableau& t : enumerated) {
      CHECK(t.shape() == d);
      CHECK(seen.insert(t.values()).second);
    }
    std::set<std::vector<int>> expected(reference.begin(), reference.end());
    CHECK(seen == expected);
  }
}

TEST_CASE("perfect tableaux fixed instances") {
  CHECK(perfect_tableaux(rothe_diagram(Permutation{3, 1, 5, 2, 4})).size() == 6);
  CHECK(perfect_tableaux(snow_diagram(WeakComposition{0, 4, 2}).unlabeled()).size() ==
        6);
  CHECK(perfect_tableaux(Diagram{}).size() == 1);
  // A cell in row 1 of column c below another cell forces failure only if the
  // order contradicts; an impossible column kills every fill.
  Diagram impossible({{1, 1}, {1, 2}, {2, 2}, {2, 1}, {3, 1}});
  // Column 1 holds rows 1,2,3 with caps 1,2,3: one chain 1<2<3 survives.
  CHECK(perfect_tableaux(impossible).size() == 1);
}

TEST_CASE("supports from tableaux") {
  std::vector<WeakComposition> s = schubert_support(Permutation{3, 1, 5, 2, 4});
  std::set<WeakComposition, TailLexGreater> sset(s.begin(), s.end());
  std::set<WeakComposition, TailLexGreater> expected = {
      {3, 1}, {2, 2}, {2, 1, 1}, {3, 0, 1}, {2, 0, 2}};
  CHECK(sset == expected);
  CHECK(std::is_sorted(s.begin(), s.end(), TailLexGreater{}));

  std::vector<WeakComposition> l = top_lascoux_support(WeakComposition{0, 4, 2});
  std::set<WeakComposition, TailLexGreater> lset(l.begin(), l.end());
  std::set<WeakComposition, TailLexGreater> lexpected = {
      {4, 3, 1}, {4, 2, 2}, {3, 3, 2}, {3, 4, 1}, {2, 4, 2}};
  CHECK(lset == lexpected);
}

TEST_CASE("rotating fills carries source tableaux onto image tableaux") {
  Diagram source_shape = rothe_diagram(Permutation{3, 1, 5, 2, 4});
  Tableau third(source_shape, {1, 1, 2, 3});
  Tableau image = rotate_complement_fill(third, 4, 3);
  CHECK(image.shape() == snow_diagram(WeakComposition{0, 4, 2}).unlabeled());
  CHECK(image.values() == std::vector<int>{1, 1, 2, 2, 1, 2, 3, 3});
  CHECK(image.weight() == reverse_complement(third.weight(), 4, 3));
}

TEST_CASE("rotating fills is a weight-transferring bijection") {
  struct Pair {
    Permutation w;
    WeakComposition alpha;
    int m, n;
  };
  const Pair pairs[] = {
      {Permutation{3, 1, 5, 2, 4}, WeakComposition{0, 4, 2}, 4, 3},
      {Permutation{4, 5, 1, 6, 3, 2}, WeakComposition{2, 0, 4, 0, 1}, 4, 5},
      {Permutation{2, 4, 1, 5, 3}, WeakComposition{0, 3, 0, 2}, 3, 4},
  };
  for (const Pair& p : pairs) {
    REQUIRE(standardize(p.alpha, p.m, p.n) == p.w);
    std::vector<Tableau> source = perfect_tableaux(rothe_diagram(p.w));
    std::vector<Tableau> target =
        perfect_tableaux(snow_diagram(p.alpha).unlabeled());
    REQUIRE(source.size() == target.size());
    std::set<std::vector<int>> target_values;
    for (const Tableau& t : target) target_values.insert(t.values());
    std::set<std::vector<int>> image_values;
    for (const Tableau& t : source) {
      Tableau image = rotate_complement_fill(t, p.m, p.n);
      CHECK(image.weight() == reverse_complement(t.weight(), p.m, p.n));
      CHECK(image_values.insert(image.values()).second);
    }
    CHECK(image_values == target_values);
  }
}

TEST_CASE("tableau json") {
  Tableau t(Diagram({{1, 1}, {2, 1}}), {1, 2});
  std::string j = t.to_json();
  CHECK(j == "{\"cells\":[[1,1,1],[2,1,2]]}");
}
