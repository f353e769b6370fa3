#include "schublas/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "schublas/bases.hpp"
#include "schublas/composition.hpp"
#include "schublas/diagram.hpp"
#include "schublas/errors.hpp"
#include "schublas/expansion.hpp"
#include "schublas/hilbert.hpp"
#include "schublas/parallel.hpp"
#include "schublas/permutation.hpp"
#include "schublas/pipedream.hpp"
#include "schublas/polynomial.hpp"
#include "schublas/rational.hpp"
#include "schublas/snp.hpp"
#include "schublas/tableau.hpp"

namespace schublas {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.passed; });
}

std::string VerifyReport::to_text() const {
  std::string out;
  std::size_t passed = 0;
  for (const VerifyCheck& c : checks) {
    out += c.passed ? "ok   " : "FAIL ";
    out += c.name + ": " + c.detail + "\n";
    if (c.passed) ++passed;
  }
  out += "suite " + suite + ": " + std::to_string(passed) + "/" +
         std::to_string(checks.size()) + " checks passed\n";
  return out;
}

std::string VerifyReport::to_json() const {
  nlohmann::json root;
  root["suite"] = suite;
  root["all_passed"] = all_passed();
  nlohmann::json list = nlohmann::json::array();
  for (const VerifyCheck& c : checks)
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  root["checks"] = std::move(list);
  return root.dump(2);
}

namespace {

using CheckResult = std::pair<bool, std::string>;

void checked(std::vector<VerifyCheck>& out, const std::string& name,
             const std::function<CheckResult()>& body) {
  VerifyCheck c;
  c.name = name;
  try {
    auto [ok, detail] = body();
    c.passed = ok;
    c.detail = std::move(detail);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(c));
}

// Aggregates a sweep into one check: instance count, failure count, and the
// label of the first failing instance.
struct Sweep {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first;
  void note(bool ok, const std::string& label) {
    ++total;
    if (!ok && failed++ == 0) first = label;
  }
  CheckResult result(const std::string& what) const {
    if (failed == 0) return {true, std::to_string(total) + " " + what};
    return {false, std::to_string(failed) + " of " + std::to_string(total) + " " +
                       what + " failed, first: " + first};
  }
};

// Runs fn over items on worker threads; fn returns a failure label or
// nullopt. Slots keep the merge order deterministic.
template <typename Item, typename Fn>
CheckResult parallel_sweep(const std::vector<Item>& items, const std::string& what,
                           Fn&& fn) {
  std::vector<std::optional<std::string>> slots(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    try {
      slots[i] = fn(items[i]);
    } catch (const std::exception& e) {
      slots[i] = std::string("exception: ") + e.what();
    }
  });
  Sweep s;
  for (const auto& r : slots) s.note(!r.has_value(), r.value_or(""));
  return s.result(what);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// Snowy compositions with support in [len] and entries at most cap, sorted
// tail-lex descending. Normalization makes distinct vectors collide, so the
// set dedupes.
std::vector<WeakComposition> snowy_in_box(int cap, int len) {
  std::set<WeakComposition, TailLexGreater> seen;
  std::vector<int> entries(static_cast<std::size_t>(len), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      WeakComposition c(entries);
      if (c.is_snowy()) seen.insert(std::move(c));
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      entries[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return {seen.begin(), seen.end()};
}

std::vector<WeakComposition> all_in_box(int cap, int len) {
  std::set<WeakComposition, TailLexGreater> seen;
  std::vector<int> entries(static_cast<std::size_t>(len), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      seen.insert(WeakComposition(entries));
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      entries[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return {seen.begin(), seen.end()};
}

Polynomial monomials(std::vector<std::pair<WeakComposition, int>> terms) {
  Polynomial f;
  for (auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

// The square grid of the identity: elbow on the diagonal, verticals below,
// horizontals to the right.
PipeGrid identity_grid(int n) {
  PipeGrid g(n, n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      g.set(r, c, r == c ? Tile::ElbowSE : (r > c ? Tile::Vertical : Tile::Horizontal));
  return g;
}

// Non-blank count of row r across the full grid.
int nonblank_count(const PipeGrid& g, int r) {
  int k = 0;
  for (int c = 1; c <= g.cols(); ++c)
    if (g.at(r, c) != Tile::Blank) ++k;
  return k;
}

// ltbpd_weight(rotated)_i must equal m minus the blank count of full row
// n+1-i of the square grid.
bool strong_row_weights(const PipeGrid& square, const PipeGrid& rotated, int m, int n) {
  WeakComposition wt = ltbpd_weight(rotated);
  for (int i = 1; i <= n; ++i) {
    int blanks = square.cols() - nonblank_count(square, n + 1 - i);
    if (wt.at(i) != m - blanks) return false;
  }
  return true;
}

std::vector<std::vector<int>> sorted_values(const std::vector<Tableau>& ts) {
  std::vector<std::vector<int>> out;
  out.reserve(ts.size());
  for (const Tableau& t : ts) out.push_back(t.values());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// examples: fixed worked instances.

void suite_examples(std::vector<VerifyCheck>& out) {
  checked(out, "schubert-monomials-fixed", []() -> CheckResult {
    Polynomial s2143 = monomials({{WeakComposition{2}, 1},
                                  {WeakComposition{1, 1}, 1},
                                  {WeakComposition{1, 0, 1}, 1}});
    if (schubert_polynomial(Permutation{2, 1, 4, 3}) != s2143)
      return {false, "schubert of [2,1,4,3] differs"};
    if (schubert_polynomial(Permutation{1, 3, 2}) !=
        Polynomial::variable(1) + Polynomial::variable(2))
      return {false, "schubert of [1,3,2] differs"};
    if (schubert_polynomial(Permutation::identity()) != Polynomial::one())
      return {false, "schubert of the identity differs"};
    if (schubert_polynomial(Permutation{3, 1, 2}) !=
        Polynomial::monomial(WeakComposition{2}))
      return {false, "schubert of dominant [3,1,2] differs"};
    return {true, "4 fixed polynomials"};
  });

  checked(out, "bpd-grids-fixed", []() -> CheckResult {
    Permutation w{2, 1, 4, 3};
    std::vector<PipeGrid> expected = {
        PipeGrid::parse({"..r-", "r-+-", "|rjr", "||r+"}),
        PipeGrid::parse({".r--", ".|r-", "r+jr", "||r+"}),
        PipeGrid::parse({".r--", "r+--", "||.r", "||r+"}),
    };
    std::sort(expected.begin(), expected.end());
    std::vector<PipeGrid> got = bpd_list(w);
    if (got != expected) return {false, "grid list of [2,1,4,3] differs"};
    for (const PipeGrid& g : got)
      if (!is_bpd_of(g, w)) return {false, "frozen grid fails validation"};
    if (bpd_polynomial(w) != schubert_polynomial(w))
      return {false, "grid sum differs from recursion"};
    return {true, "3 grids"};
  });

  checked(out, "bpd-count-fixed", []() -> CheckResult {
    std::size_t n = bpd_list(Permutation{2, 4, 1, 5, 3}).size();
    if (n != 5) return {false, "expected 5 grids, got " + std::to_string(n)};
    return {true, "5 grids for [2,4,1,5,3]"};
  });

  checked(out, "ltbpd-grids-fixed", []() -> CheckResult {
    WeakComposition alpha{0, 3, 0, 2};
    std::vector<PipeGrid> got = ltbpd_list(alpha);
    if (got.size() != 5)
      return {false, "expected 5 grids, got " + std::to_string(got.size())};
    PipeGrid frozen = PipeGrid::parse({".||", "-+j", ".|.", "-j."});
    if (std::find(got.begin(), got.end(), frozen) == got.end())
      return {false, "frozen grid missing from the list"};
    for (const PipeGrid& g : got) {
      if (g.rows() != 4 || g.cols() != 3) return {false, "grid dimensions differ"};
      if (!is_ltbpd_of(g, alpha)) return {false, "listed grid fails validation"};
    }
    return {true, "5 grids for (0,3,0,2)"};
  });

  checked(out, "toplascoux-routes-fixed", []() -> CheckResult {
    WeakComposition alpha{0, 3, 0, 2};
    Polynomial frozen = monomials({{WeakComposition{2, 3, 1, 2}, 1},
                                   {WeakComposition{2, 3, 2, 1}, 1},
                                   {WeakComposition{3, 3, 1, 1}, 1},
                                   {WeakComposition{3, 2, 1, 2}, 1},
                                   {WeakComposition{3, 2, 2, 1}, 1}});
    Polynomial rec = top_lascoux_polynomial(alpha);
    if (rec != frozen) return {false, "recursion differs from the frozen value"};
    if (ltbpd_polynomial(alpha) != frozen)
      return {false, "grid sum differs from the frozen value"};
    if (top_lascoux_via_reverse(alpha, 3, 4) != frozen)
      return {false, "reverse-complement route differs from the frozen value"};
    if (rec.leading_exponent() != rajcode(alpha))
      return {false, "leading exponent is not the rajcode"};
    return {true, "3 routes, 5 terms"};
  });

  checked(out, "rotate-grids-fixed", []() -> CheckResult {
    WeakComposition alpha{0, 3, 0, 2};
    std::vector<PipeGrid> squares = bpd_list(Permutation{2, 4, 1, 5, 3});
    std::set<PipeGrid> rotated;
    for (const PipeGrid& g : squares) {
      PipeGrid r = rotate_subgrid(g, 3, 4);
      if (!strong_row_weights(g, r, 3, 4))
        return {false, "row weights do not transfer"};
      rotated.insert(std::move(r));
    }
    std::vector<PipeGrid> lt = ltbpd_list(alpha);
    if (rotated != std::set<PipeGrid>(lt.begin(), lt.end()))
      return {false, "rotated grids differ from the left-to-top list"};
    return {true, "5 grids matched"};
  });

  checked(out, "standardize-fixed", []() -> CheckResult {
    const std::vector<std::tuple<WeakComposition, int, int, Permutation>> cases = {
        {WeakComposition{2, 4, 0, 6, 0, 0, 1}, 6, 7,
         Permutation{6, 7, 8, 1, 9, 3, 5, 2, 4}},
        {WeakComposition{0, 4, 2}, 4, 3, Permutation{3, 1, 5, 2, 4}},
        {WeakComposition{2, 3, 1, 4}, 4, 4, Permutation{1, 4, 2, 3}},
        {WeakComposition{2, 1, 4, 3}, 4, 4, Permutation{2, 1, 4, 3}},
        {WeakComposition{2, 0, 4, 0, 1}, 4, 5, Permutation{4, 5, 1, 6, 3, 2}},
        {WeakComposition{0, 3, 0, 2}, 3, 4, Permutation{2, 4, 1, 5, 3}},
        {WeakComposition{8, 6, 5, 7}, 8, 4, Permutation{2, 4, 3, 1}},
    };
    for (const auto& [alpha, m, n, w] : cases) {
      if (standardize(alpha, m, n) != w)
        return {false, "standardize of " + alpha.str() + " differs"};
      auto back = standardize_inverse(w, m, n);
      if (!back || *back != alpha)
        return {false, "inverse fails for " + w.str()};
    }
    return {true, "7 instances with round trips"};
  });

  checked(out, "transfer-fixed", []() -> CheckResult {
    Polynomial lhs =
        reverse_complement(top_lascoux_polynomial(WeakComposition{2, 0, 4, 0, 1}), 4, 5);
    if (lhs != schubert_polynomial(Permutation{4, 5, 1, 6, 3, 2}))
      return {false, "reverse complement differs from the Schubert polynomial"};
    return {true, "1 instance"};
  });

  checked(out, "operator-chain-fixed", []() -> CheckResult {
    // One ladder of the reverse-complement intertwining: divided differences
    // on the Schubert side, hatted Demazure operators on the other.
    const std::vector<WeakComposition> comps = {
        WeakComposition{2, 0, 4, 0, 1}, WeakComposition{2, 0, 0, 4, 1},
        WeakComposition{2, 0, 0, 1, 4}, WeakComposition{0, 2, 0, 1, 4},
        WeakComposition{0, 0, 2, 1, 4}};
    const std::vector<Permutation> perms = {
        Permutation{4, 5, 1, 6, 3, 2}, Permutation{4, 1, 5, 6, 3, 2},
        Permutation{1, 4, 5, 6, 3, 2}, Permutation{1, 4, 5, 3, 6, 2},
        Permutation{1, 4, 3, 5, 6, 2}};
    const std::vector<int> dd_index = {2, 1, 4, 3};  // pi_hat index is 5 - i
    for (std::size_t k = 0; k < comps.size(); ++k) {
      Polynomial g = top_lascoux_polynomial(comps[k]);
      Polynomial f = schubert_polynomial(perms[k]);
      if (reverse_complement(g, 4, 5) != f)
        return {false, "rung " + std::to_string(k) + " does not commute"};
      if (standardize(comps[k], 4, 5) != perms[k])
        return {false, "rung " + std::to_string(k) + " standardizes wrong"};
      if (k + 1 < comps.size()) {
        int i = dd_index[k];
        if (divided_difference(f, i) != schubert_polynomial(perms[k + 1]))
          return {false, "divided difference step " + std::to_string(k) + " differs"};
        if (pi_hat(g, 5 - i) != top_lascoux_polynomial(comps[k + 1]))
          return {false, "hatted step " + std::to_string(k) + " differs"};
      }
    }
    return {true, "5 rungs, 4 steps"};
  });

  checked(out, "structure-products-fixed", []() -> CheckResult {
    WeakComposition alpha{2, 3, 1, 4};
    WeakComposition gamma{2, 1, 4, 3};
    CompositionExpansion d = top_lascoux_product_expansion(alpha, gamma);
    CompositionExpansion d_expected;
    for (const auto& delta :
         {WeakComposition{8, 6, 5, 7}, WeakComposition{6, 8, 4, 7},
          WeakComposition{7, 8, 5, 6}, WeakComposition{7, 6, 8, 5},
          WeakComposition{6, 7, 8, 4}})
      d_expected[delta] = 1;
    if (d != d_expected) return {false, "top Lascoux product differs"};
    SchubertExpansion c =
        schubert_product_expansion(Permutation{1, 4, 2, 3}, Permutation{2, 1, 4, 3});
    SchubertExpansion c_expected;
    for (const auto& w :
         {Permutation{2, 4, 3, 1}, Permutation{2, 5, 1, 3, 4}, Permutation{3, 4, 1, 2},
          Permutation{4, 1, 3, 2}, Permutation{5, 1, 2, 3, 4}})
      c_expected[w] = 1;
    if (c != c_expected) return {false, "Schubert product differs"};
    return {true, "2 products, 5 unit terms each"};
  });

  checked(out, "structure-constant-fixed", []() -> CheckResult {
    WeakComposition alpha{2, 3, 1, 4};
    WeakComposition gamma{2, 1, 4, 3};
    if (top_lascoux_structure_constant(alpha, gamma, WeakComposition{8, 6, 5, 7}, 4, 4,
                                       4) != Rational(1))
      return {false, "constant at (8,6,5,7) is not 1"};
    StructureReport rep = top_lascoux_structure_report(alpha, gamma, 4, 4, 4);
    if (rep.u != Permutation{1, 4, 2, 3} || rep.v != Permutation{2, 1, 4, 3})
      return {false, "standardized factors differ"};
    if (!rep.all_equal) return {false, "report finds unequal constants"};
    if (rep.rows.size() != 5)
      return {false, "expected 5 rows, got " + std::to_string(rep.rows.size())};
    for (const StructureRow& row : rep.rows)
      if (row.d != Rational(1) || row.c != Rational(1))
        return {false, "row " + row.delta.str() + " is not a unit"};
    return {true, "5 rows, all equal"};
  });

  checked(out, "rothe-fixed", []() -> CheckResult {
    Permutation a{4, 1, 5, 3, 2};
    if (invcode(a) != WeakComposition{3, 0, 2, 1})
      return {false, "inversion code of [4,1,5,3,2] differs"};
    Diagram da = rothe_diagram(a);
    std::vector<Cell> cells_a = {{1, 1}, {1, 2}, {1, 3}, {3, 2}, {3, 3}, {4, 2}};
    if (da.cells() != cells_a) return {false, "cells of [4,1,5,3,2] differ"};
    if (da.weight() != invcode(a)) return {false, "row weights differ from the code"};
    Permutation b{3, 1, 5, 2, 4};
    Diagram db = rothe_diagram(b);
    std::vector<Cell> cells_b = {{1, 1}, {1, 2}, {3, 2}, {3, 4}};
    if (db.cells() != cells_b) return {false, "cells of [3,1,5,2,4] differ"};
    if (db.weight() != invcode(b)) return {false, "row weights differ from the code"};
    return {true, "2 diagrams"};
  });

  checked(out, "snow-fixed", []() -> CheckResult {
    struct Expected {
      WeakComposition alpha;
      std::vector<Cell> bullets;
      std::vector<Cell> asterisks;
      std::size_t cells;
    };
    const std::vector<Expected> cases = {
        {WeakComposition{2, 0, 4, 0, 1},
         {{1, 2}, {3, 4}, {5, 1}},
         {{1, 4}, {2, 1}, {2, 4}, {4, 1}},
         11},
        {WeakComposition{0, 4, 2}, {{2, 4}, {3, 2}}, {{1, 2}, {1, 4}}, 8},
    };
    for (const auto& e : cases) {
      Diagram d = snow_diagram(e.alpha);
      if (d.cell_count() != e.cells)
        return {false, e.alpha.str() + " has wrong cell count"};
      if (d.weight() != rajcode(e.alpha))
        return {false, e.alpha.str() + " weight differs from rajcode"};
      std::vector<Cell> bullets, asterisks;
      for (std::size_t i = 0; i < d.cells().size(); ++i) {
        if (d.labels()[i] == CellLabel::Bullet) bullets.push_back(d.cells()[i]);
        if (d.labels()[i] == CellLabel::Asterisk) asterisks.push_back(d.cells()[i]);
      }
      if (bullets != e.bullets) return {false, e.alpha.str() + " bullets differ"};
      if (asterisks != e.asterisks)
        return {false, e.alpha.str() + " asterisks differ"};
    }
    return {true, "2 decorated diagrams"};
  });

  checked(out, "rotate-diagram-fixed", []() -> CheckResult {
    Diagram lhs = rotate_complement(rothe_diagram(Permutation{3, 1, 5, 2, 4}), 4, 3);
    if (lhs != snow_diagram(WeakComposition{0, 4, 2}).unlabeled())
      return {false, "rotated Rothe diagram differs from the decorated one"};
    return {true, "1 instance"};
  });

  checked(out, "support-fixed", []() -> CheckResult {
    Permutation w{3, 1, 5, 2, 4};
    WeakComposition alpha{0, 4, 2};
    std::set<WeakComposition, TailLexGreater> s_expected = {
        WeakComposition{3, 1}, WeakComposition{2, 2}, WeakComposition{2, 1, 1},
        WeakComposition{3, 0, 1}, WeakComposition{2, 0, 2}};
    std::set<WeakComposition, TailLexGreater> l_expected = {
        WeakComposition{4, 3, 1}, WeakComposition{4, 2, 2}, WeakComposition{3, 3, 2},
        WeakComposition{3, 4, 1}, WeakComposition{2, 4, 2}};
    std::vector<WeakComposition> s = schubert_support(w);
    std::vector<WeakComposition> l = top_lascoux_support(alpha);
    if (std::set<WeakComposition, TailLexGreater>(s.begin(), s.end()) != s_expected)
      return {false, "Schubert support differs"};
    if (std::set<WeakComposition, TailLexGreater>(l.begin(), l.end()) != l_expected)
      return {false, "top Lascoux support differs"};
    if (perfect_tableaux(rothe_diagram(w)).size() != 6)
      return {false, "expected 6 fills of the Rothe diagram"};
    if (perfect_tableaux(snow_diagram(alpha).unlabeled()).size() != 6)
      return {false, "expected 6 fills of the decorated diagram"};
    if (s != schubert_polynomial(w).support())
      return {false, "Schubert support differs from the polynomial"};
    if (l != top_lascoux_polynomial(alpha).support())
      return {false, "top Lascoux support differs from the polynomial"};
    return {true, "2 supports of 5 weights via 6 fills"};
  });

  checked(out, "tableau-bijection-fixed", []() -> CheckResult {
    Diagram source_shape = rothe_diagram(Permutation{3, 1, 5, 2, 4});
    Tableau source(source_shape, {1, 1, 2, 3});
    Tableau image = rotate_complement_fill(source, 4, 3);
    Tableau expected(snow_diagram(WeakComposition{0, 4, 2}).unlabeled(),
                     {1, 1, 2, 2, 1, 2, 3, 3});
    if (!(image == expected)) return {false, "image fill differs"};
    if (source.weight() != WeakComposition{2, 1, 1})
      return {false, "source weight differs"};
    if (image.weight() != WeakComposition{3, 3, 2})
      return {false, "image weight differs"};
    if (image.weight() != reverse_complement(source.weight(), 4, 3))
      return {false, "weights do not reverse-complement"};
    return {true, "1 matched pair"};
  });

  checked(out, "key-toplascoux-small-fixed", []() -> CheckResult {
    if (key_polynomial(WeakComposition{0, 2}) !=
        monomials({{WeakComposition{2}, 1},
                   {WeakComposition{1, 1}, 1},
                   {WeakComposition{0, 2}, 1}}))
      return {false, "key of (0,2) differs"};
    if (key_polynomial(WeakComposition{2, 1}) !=
        Polynomial::monomial(WeakComposition{2, 1}))
      return {false, "key of the partition (2,1) differs"};
    if (top_lascoux_polynomial(WeakComposition{0, 1}) !=
        Polynomial::monomial(WeakComposition{1, 1}))
      return {false, "top polynomial of (0,1) differs"};
    if (top_lascoux_polynomial(WeakComposition{2}) !=
        Polynomial::monomial(WeakComposition{2}))
      return {false, "top polynomial of (2) differs"};
    if (rajcode(WeakComposition{3, 0, 1, 4, 6, 0, 2}) !=
        WeakComposition{5, 4, 4, 5, 6, 1, 2})
      return {false, "rajcode of (3,0,1,4,6,0,2) differs"};
    if (rajcode(WeakComposition{2, 0, 4, 0, 1}) != WeakComposition{3, 2, 4, 1, 1})
      return {false, "rajcode of (2,0,4,0,1) differs"};
    return {true, "6 fixed values"};
  });
}

// ---------------------------------------------------------------------------
// operators: identities on sampled polynomials plus an exhaustive box check.

Polynomial random_polynomial(std::mt19937& gen) {
  std::uniform_int_distribution<int> term_count(1, 4);
  std::uniform_int_distribution<int> exponent(0, 3);
  std::uniform_int_distribution<int> magnitude(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  Polynomial f;
  int terms = term_count(gen);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exp(4);
    for (int& e : exp) e = exponent(gen);
    int c = magnitude(gen) * (sign(gen) ? 1 : -1);
    f.add_term(WeakComposition(std::move(exp)), c);
  }
  return f;
}

void suite_operators(std::vector<VerifyCheck>& out, int max_n) {
  const int cases = 250 * max_n;
  std::mt19937 gen(987654321u);
  std::uniform_int_distribution<int> index(1, 3);
  std::vector<std::pair<Polynomial, int>> samples;
  samples.reserve(static_cast<std::size_t>(cases));
  for (int k = 0; k < cases; ++k) samples.emplace_back(random_polynomial(gen), index(gen));
  const std::string what = "sampled cases";  // Sweep::result prefixes the count

  checked(out, "dd-squares-zero", [&]() -> CheckResult {
    Sweep s;
    for (const auto& [f, i] : samples)
      s.note(divided_difference(divided_difference(f, i), i).is_zero(),
             "i=" + std::to_string(i));
    return s.result(what);
  });

  checked(out, "dd-multiply-back", [&]() -> CheckResult {
    Sweep s;
    for (const auto& [f, i] : samples) {
      Polynomial gap = Polynomial::variable(i) - Polynomial::variable(i + 1);
      s.note(gap * divided_difference(f, i) == f - swap_variables(f, i),
             "i=" + std::to_string(i));
    }
    return s.result(what);
  });

  checked(out, "dd-braid", [&]() -> CheckResult {
    Sweep s;
    for (const auto& [f, i] : samples) {
      Polynomial lhs =
          divided_difference(divided_difference(divided_difference(f, i), i + 1), i);
      Polynomial rhs =
          divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1);
      s.note(lhs == rhs, "i=" + std::to_string(i));
    }
    return s.result(what);
  });

  checked(out, "dd-distant-commute", [&]() -> CheckResult {
    Sweep s;
    for (const auto& [f, i] : samples) {
      int j = i + 2;
      s.note(divided_difference(divided_difference(f, i), j) ==
                 divided_difference(divided_difference(f, j), i),
             "i=" + std::to_string(i));
    }
    return s.result(what);
  });

  checked(out, "pi-idempotent", [&]() -> CheckResult {
    Sweep s;
    for (const auto& [f, i] : samples) {
      Polynomial once = demazure_pi(f, i);
      s.note(demazure_pi(once, i) == once, "i=" + std::to_string(i));
    }
    return s.result(what);
  });

  checked(out, "pi-fixes-symmetric", [&]() -> CheckResult {
    Sweep s;
    for (const auto& [f, i] : samples) {
      Polynomial sym = f + swap_variables(f, i);
      s.note(demazure_pi(sym, i) == sym, "i=" + std::to_string(i));
    }
    return s.result(what);
  });

  checked(out, "pi-braid", [&]() -> CheckResult {
    Sweep s;
    for (const auto& [f, i] : samples) {
      Polynomial lhs = demazure_pi(demazure_pi(demazure_pi(f, i), i + 1), i);
      Polynomial rhs = demazure_pi(demazure_pi(demazure_pi(f, i + 1), i), i + 1);
      s.note(lhs == rhs, "i=" + std::to_string(i));
    }
    return s.result(what);
  });

  checked(out, "pihat-matches-pi-form", [&]() -> CheckResult {
    Sweep s;
    for (const auto& [f, i] : samples)
      s.note(pi_hat(f, i) == demazure_pi(Polynomial::variable(i + 1) * f, i),
             "i=" + std::to_string(i));
    return s.result(what);
  });

  checked(out, "pihat-nilpotent", [&]() -> CheckResult {
    Sweep s;
    for (const auto& [f, i] : samples)
      s.note(pi_hat(pi_hat(f, i), i).is_zero(), "i=" + std::to_string(i));
    return s.result(what);
  });

  checked(out, "reverse-involution", [&]() -> CheckResult {
    Sweep s;
    for (const auto& [f, i] : samples) {
      (void)i;
      s.note(reverse_complement(reverse_complement(f, 3, 4), 3, 4) == f, "sample");
    }
    return s.result(what);
  });

  // Exhaustive on the 3-variable box with entries at most 3: the operators
  // keep exponents inside the box, so linearity reduces the intertwining
  // identities to monomials.
  checked(out, "reverse-commute-box", []() -> CheckResult {
    Sweep s;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 3; ++c)
          for (int i = 1; i <= 2; ++i) {
            Polynomial f = Polynomial::monomial(WeakComposition{a, b, c});
            std::string label = "exponent (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) +
                                ") i=" + std::to_string(i);
            Polynomial rf = reverse_complement(f, 3, 3);
            s.note(reverse_complement(divided_difference(f, i), 3, 3) ==
                       pi_hat(rf, 3 - i),
                   label + " dd");
            s.note(reverse_complement(demazure_pi(f, i), 3, 3) ==
                       demazure_pi(rf, 3 - i),
                   label + " pi");
            s.note(reverse_complement(pi_hat(f, i), 3, 3) ==
                       divided_difference(rf, 3 - i),
                   label + " pihat");
          }
    return s.result("box identities");
  });
}

// ---------------------------------------------------------------------------
// bpd: enumeration matches the recursions; rotation is a bijection.

void suite_bpd(std::vector<VerifyCheck>& out, int max_n) {
  checked(out, "square-grids-match-recursion", [&]() -> CheckResult {
    return parallel_sweep(
        all_permutations(max_n), "permutations",
        [](const Permutation& w) -> std::optional<std::string> {
          std::vector<PipeGrid> grids = bpd_list(w);
          for (std::size_t i = 0; i + 1 < grids.size(); ++i)
            if (!(grids[i] < grids[i + 1])) return w.str() + " list not sorted";
          Polynomial sum;
          for (const PipeGrid& g : grids) {
            if (!is_bpd_of(g, w)) return w.str() + " grid fails validation";
            sum.add_term(bpd_weight(g), 1);
          }
          if (sum != schubert_polynomial(w)) return w.str() + " sums differ";
          return std::nullopt;
        });
  });

  checked(out, "square-grids-sample", []() -> CheckResult {
    Sweep s;
    for (const Permutation& w :
         {Permutation{2, 4, 1, 5, 3}, Permutation{3, 1, 5, 2, 4},
          Permutation{1, 5, 4, 3, 2}}) {
      Polynomial sum;
      bool ok = true;
      for (const PipeGrid& g : bpd_list(w)) {
        ok = ok && is_bpd_of(g, w);
        sum.add_term(bpd_weight(g), 1);
      }
      s.note(ok && sum == schubert_polynomial(w), w.str());
    }
    return s.result("fixed larger permutations");
  });

  checked(out, "ltbpd-grids-match-recursion", []() -> CheckResult {
    return parallel_sweep(
        snowy_in_box(3, 3), "snowy compositions",
        [](const WeakComposition& alpha) -> std::optional<std::string> {
          std::vector<PipeGrid> grids = ltbpd_list(alpha);
          for (std::size_t i = 0; i + 1 < grids.size(); ++i)
            if (!(grids[i] < grids[i + 1])) return alpha.str() + " list not sorted";
          Polynomial sum;
          for (const PipeGrid& g : grids) {
            if (g.rows() != alpha.size() || g.cols() != alpha.max_entry())
              return alpha.str() + " grid dimensions differ";
            if (!is_ltbpd_of(g, alpha)) return alpha.str() + " grid fails validation";
            sum.add_term(ltbpd_weight(g), 1);
          }
          if (sum != top_lascoux_polynomial(alpha)) return alpha.str() + " sums differ";
          return std::nullopt;
        });
  });

  checked(out, "transfer-box-sweep", []() -> CheckResult {
    std::vector<std::tuple<WeakComposition, int, int>> items;
    for (int m = 3; m <= 5; ++m)
      for (int n = 3; n <= 5; ++n)
        for (const WeakComposition& alpha : snowy_in_box(3, 3))
          items.emplace_back(alpha, m, n);
    return parallel_sweep(
        items, "box instances",
        [](const std::tuple<WeakComposition, int, int>& item)
            -> std::optional<std::string> {
          const auto& [alpha, m, n] = item;
          Polynomial lhs = reverse_complement(top_lascoux_polynomial(alpha), m, n);
          if (lhs != schubert_polynomial(standardize(alpha, m, n)))
            return alpha.str() + " m=" + std::to_string(m) + " n=" + std::to_string(n);
          return std::nullopt;
        });
  });

  checked(out, "rotate-bijection-sweep", []() -> CheckResult {
    return parallel_sweep(
        snowy_in_box(3, 3), "snowy compositions",
        [](const WeakComposition& alpha) -> std::optional<std::string> {
          int n = alpha.size();
          int m = alpha.max_entry();
          Permutation w = standardize(alpha, m, n);
          int square = std::max({w.size(), n, m, 1});
          std::vector<PipeGrid> squares = bpd_list(w, square);
          std::vector<PipeGrid> lt = ltbpd_list(alpha);
          if (squares.size() != lt.size()) return alpha.str() + " counts differ";
          std::set<PipeGrid> rotated;
          for (const PipeGrid& g : squares) {
            PipeGrid r = rotate_subgrid(g, m, n);
            if (!strong_row_weights(g, r, m, n))
              return alpha.str() + " row weights do not transfer";
            rotated.insert(std::move(r));
          }
          if (rotated != std::set<PipeGrid>(lt.begin(), lt.end()))
            return alpha.str() + " rotated grids differ";
          return std::nullopt;
        });
  });

  checked(out, "singleton-grids", [&]() -> CheckResult {
    Sweep s;
    for (int n = 1; n <= max_n; ++n) {
      std::vector<PipeGrid> grids = bpd_list(Permutation::identity(), n);
      s.note(grids.size() == 1 && grids[0] == identity_grid(n),
             "identity in " + std::to_string(n));
    }
    for (const WeakComposition& alpha : snowy_in_box(3, 3)) {
      if (!alpha.is_partition()) continue;
      std::vector<PipeGrid> grids = ltbpd_list(alpha);
      s.note(grids.size() == 1 && ltbpd_weight(grids[0]) == alpha,
             "partition " + alpha.str());
    }
    return s.result("forced singletons");
  });
}

// ---------------------------------------------------------------------------
// support: tableau formulas, the fill bijection, and saturation.

void suite_support(std::vector<VerifyCheck>& out, int max_n) {
  const int perm_n = std::min(max_n, 4);

  checked(out, "schubert-support-tableaux", [&]() -> CheckResult {
    return parallel_sweep(all_permutations(perm_n), "permutations",
                          [](const Permutation& w) -> std::optional<std::string> {
                            if (schubert_support(w) !=
                                schubert_polynomial(w).support())
                              return w.str();
                            return std::nullopt;
                          });
  });

  checked(out, "toplascoux-support-tableaux", []() -> CheckResult {
    return parallel_sweep(snowy_in_box(3, 3), "snowy compositions",
                          [](const WeakComposition& alpha) -> std::optional<std::string> {
                            if (top_lascoux_support(alpha) !=
                                top_lascoux_polynomial(alpha).support())
                              return alpha.str();
                            return std::nullopt;
                          });
  });

  checked(out, "tableau-rotation-bijection", []() -> CheckResult {
    return parallel_sweep(
        snowy_in_box(3, 3), "snowy compositions",
        [](const WeakComposition& alpha) -> std::optional<std::string> {
          int n = alpha.size();
          int m = alpha.max_entry();
          std::vector<Tableau> source =
              perfect_tableaux(rothe_diagram(standardize(alpha, m, n)));
          std::vector<Tableau> image =
              perfect_tableaux(snow_diagram(alpha).unlabeled());
          if (source.size() != image.size()) return alpha.str() + " counts differ";
          std::vector<Tableau> mapped;
          mapped.reserve(source.size());
          for (const Tableau& t : source) {
            Tableau r = rotate_complement_fill(t, m, n);
            if (r.weight() != reverse_complement(t.weight(), m, n))
              return alpha.str() + " weight does not transfer";
            mapped.push_back(std::move(r));
          }
          if (sorted_values(mapped) != sorted_values(image))
            return alpha.str() + " images differ";
          return std::nullopt;
        });
  });

  checked(out, "snp-schubert", [&]() -> CheckResult {
    return parallel_sweep(all_permutations(perm_n), "permutations",
                          [](const Permutation& w) -> std::optional<std::string> {
                            if (!check_snp(schubert_polynomial(w)).saturated)
                              return w.str();
                            return std::nullopt;
                          });
  });

  checked(out, "snp-toplascoux", []() -> CheckResult {
    std::vector<WeakComposition> items;
    for (const WeakComposition& alpha : snowy_in_box(3, 3))
      if (!alpha.is_zero()) items.push_back(alpha);
    return parallel_sweep(items, "snowy compositions",
                          [](const WeakComposition& alpha) -> std::optional<std::string> {
                            if (!check_snp(top_lascoux_polynomial(alpha)).saturated)
                              return alpha.str();
                            return std::nullopt;
                          });
  });

  checked(out, "snp-witness-fixed", []() -> CheckResult {
    Polynomial f = monomials({{WeakComposition{2}, 1}, {WeakComposition{0, 2}, 1}});
    SnpReport rep = check_snp(f);
    if (rep.saturated) return {false, "x1^2 + x2^2 reported saturated"};
    if (!rep.witness || *rep.witness != WeakComposition{1, 1})
      return {false, "witness is not (1,1)"};
    return {true, "missing point (1,1) found"};
  });
}

// ---------------------------------------------------------------------------
// structure: products match standardized constants; expansions are exact.

void suite_structure(std::vector<VerifyCheck>& out, int /*max_n*/) {
  const std::vector<WeakComposition> small = snowy_in_box(2, 2);

  checked(out, "product-constants-box", [&]() -> CheckResult {
    std::vector<std::pair<WeakComposition, WeakComposition>> pairs;
    for (const WeakComposition& a : small)
      for (const WeakComposition& g : small) pairs.emplace_back(a, g);
    return parallel_sweep(
        pairs, "composition pairs",
        [](const std::pair<WeakComposition, WeakComposition>& item)
            -> std::optional<std::string> {
          const auto& [alpha, gamma] = item;
          int m1 = alpha.max_entry();
          int m2 = gamma.max_entry();
          int n = std::max(alpha.size(), gamma.size());
          std::string label = alpha.str() + " * " + gamma.str();
          CompositionExpansion d = top_lascoux_product_expansion(alpha, gamma);
          for (const auto& [delta, coeff] : d)
            if (delta.size() > n || delta.max_entry() > m1 + m2)
              return label + ": index outside the bound";
          SchubertExpansion c = schubert_product_expansion(
              standardize(alpha, m1, n), standardize(gamma, m2, n));
          for (const auto& [w, coeff] : c)
            if (!standardize_inverse(w, m1 + m2, n))
              return label + ": " + w.str() + " has no preimage";
          for (const WeakComposition& delta : snowy_in_box(m1 + m2, n)) {
            auto dit = d.find(delta);
            Rational dval = dit == d.end() ? Rational(0) : dit->second;
            auto cit = c.find(standardize(delta, m1 + m2, n));
            Rational cval = cit == c.end() ? Rational(0) : cit->second;
            if (dval != cval) return label + ": mismatch at " + delta.str();
          }
          return std::nullopt;
        });
  });

  checked(out, "product-positivity", [&]() -> CheckResult {
    Sweep s;
    for (const WeakComposition& a : small)
      for (const WeakComposition& g : small) {
        bool ok = true;
        for (const auto& [delta, coeff] : top_lascoux_product_expansion(a, g))
          ok = ok && is_integral(coeff) && coeff > 0;
        s.note(ok, a.str() + " * " + g.str());
      }
    return s.result("products with positive integer constants");
  });

  checked(out, "schubert-product-symmetry", []() -> CheckResult {
    Sweep s;
    std::vector<Permutation> s3 = all_permutations(3);
    for (const Permutation& u : s3)
      for (const Permutation& v : s3)
        s.note(schubert_product_expansion(u, v) == schubert_product_expansion(v, u),
               u.str() + " * " + v.str());
    return s.result("ordered pairs");
  });

  checked(out, "product-reverse-codes", []() -> CheckResult {
    Sweep s;
    std::vector<Permutation> s3 = all_permutations(3);
    auto reversed_code = [](const Permutation& u) {
      std::vector<int> entries(3);
      for (int i = 1; i <= 3; ++i) entries[static_cast<std::size_t>(i - 1)] = 4 - u(4 - i);
      return WeakComposition(std::move(entries));
    };
    for (const Permutation& u : s3)
      for (const Permutation& v : s3) {
        WeakComposition alpha = reversed_code(u);
        WeakComposition gamma = reversed_code(v);
        bool ok = standardize(alpha, 3, 3) == u && standardize(gamma, 3, 3) == v;
        CompositionExpansion d = top_lascoux_product_expansion(alpha, gamma);
        SchubertExpansion c = schubert_product_expansion(u, v);
        for (const auto& [w, coeff] : c) {
          auto delta = standardize_inverse(w, 6, 3);
          ok = ok && delta.has_value();
          if (delta) {
            auto it = d.find(*delta);
            ok = ok && it != d.end() && it->second == coeff;
          }
        }
        for (const auto& [delta, coeff] : d) {
          auto it = c.find(standardize(delta, 6, 3));
          ok = ok && it != c.end() && it->second == coeff;
        }
        s.note(ok, u.str() + " * " + v.str());
      }
    return s.result("ordered pairs");
  });

  checked(out, "key-expansion-routes", []() -> CheckResult {
    return parallel_sweep(
        snowy_in_box(3, 3), "snowy compositions",
        [](const WeakComposition& alpha) -> std::optional<std::string> {
          for (const auto& [m, n] :
               {std::pair<int, int>{3, 3},
                std::pair<int, int>{alpha.max_entry(), alpha.size()}}) {
            CompositionExpansion e = key_expand_top_lascoux(alpha, m, n);
            for (const auto& [gamma, coeff] : e)
              if (!is_integral(coeff) || coeff < 0)
                return alpha.str() + ": coefficient of " + gamma.str() +
                       " is not a nonnegative integer";
            if (combine_key(e) != top_lascoux_polynomial(alpha))
              return alpha.str() + ": recombination differs";
          }
          return std::nullopt;
        });
  });

  checked(out, "key-reverse-complement", []() -> CheckResult {
    Sweep s;
    for (const WeakComposition& alpha : all_in_box(3, 3))
      s.note(reverse_complement(key_polynomial(alpha), 3, 3) ==
                 key_polynomial(reverse_complement(alpha, 3, 3)),
             alpha.str());
    return s.result("compositions in the box");
  });

  checked(out, "expansion-round-trips", [&]() -> CheckResult {
    Sweep s;
    for (const Permutation& w : all_permutations(3)) {
      SchubertExpansion e = expand_in_schubert(schubert_polynomial(w));
      s.note(e.size() == 1 && e.begin()->first == w && e.begin()->second == 1,
             "schubert " + w.str());
    }
    for (const WeakComposition& alpha : all_in_box(2, 2)) {
      CompositionExpansion e = expand_in_key(key_polynomial(alpha));
      s.note(e.size() == 1 && e.begin()->first == alpha && e.begin()->second == 1,
             "key " + alpha.str());
    }
    for (const WeakComposition& alpha : small) {
      CompositionExpansion e = expand_in_top_lascoux(top_lascoux_polynomial(alpha));
      s.note(e.size() == 1 && e.begin()->first == alpha && e.begin()->second == 1,
             "top " + alpha.str());
    }
    Polynomial combo = schubert_polynomial(Permutation{3, 1, 2}).scaled(2) +
                       schubert_polynomial(Permutation{2, 3, 1}) -
                       schubert_polynomial(Permutation{1, 3, 2}).scaled(Rational(1, 2));
    SchubertExpansion e = expand_in_schubert(combo);
    SchubertExpansion expected;
    expected[Permutation{3, 1, 2}] = 2;
    expected[Permutation{2, 3, 1}] = 1;
    expected[Permutation{1, 3, 2}] = Rational(-1, 2);
    s.note(e == expected && combine_schubert(e) == combo, "rational combination");
    return s.result("round trips");
  });
}

// ---------------------------------------------------------------------------
// hilbert: series coefficients count snowy compositions by degree.

void suite_hilbert(std::vector<VerifyCheck>& out, int max_n) {
  checked(out, "series-prefix", []() -> CheckResult {
    std::vector<Integer> series = snowy_degree_series(4);
    std::vector<Integer> expected = {1, 1, 2, 4, 7};
    if (series != expected) return {false, "first five coefficients differ"};
    return {true, "1, 1, 2, 4, 7"};
  });

  checked(out, "series-matches-enumeration", [&]() -> CheckResult {
    const int top = std::min(10, 6 + max_n);
    std::vector<Integer> series = snowy_degree_series(top);
    Sweep s;
    for (int d = 0; d <= top; ++d) {
      std::vector<WeakComposition> list = snowy_by_degree(d);
      bool ok = Integer(list.size()) == series[static_cast<std::size_t>(d)];
      std::set<WeakComposition, TailLexGreater> distinct;
      for (const WeakComposition& alpha : list) {
        ok = ok && alpha.is_snowy() && rajcode(alpha).total() == d;
        distinct.insert(alpha);
      }
      ok = ok && distinct.size() == list.size();
      ok = ok && std::is_sorted(list.begin(), list.end(), TailLexGreater{});
      s.note(ok, "degree " + std::to_string(d));
    }
    return s.result("degrees against the series");
  });

  checked(out, "degree-lists-fixed", []() -> CheckResult {
    std::vector<WeakComposition> two = {WeakComposition{0, 1}, WeakComposition{2}};
    if (snowy_by_degree(2) != two) return {false, "degree 2 list differs"};
    std::vector<WeakComposition> three = {WeakComposition{0, 0, 1}, WeakComposition{0, 2},
                                          WeakComposition{2, 1}, WeakComposition{3}};
    if (snowy_by_degree(3) != three) return {false, "degree 3 list differs"};
    return {true, "degrees 2 and 3"};
  });

  checked(out, "rajcode-bijective-box", []() -> CheckResult {
    Sweep s;
    std::set<WeakComposition, TailLexGreater> codes;
    for (const WeakComposition& alpha : snowy_in_box(3, 3)) {
      WeakComposition code = rajcode(alpha);
      bool ok = codes.insert(code).second;
      ok = ok && rajcode_inverse(code) == alpha;
      if (alpha.is_partition()) ok = ok && code == alpha;
      s.note(ok, alpha.str());
    }
    return s.result("snowy compositions");
  });

  checked(out, "toplascoux-degree-box", []() -> CheckResult {
    return parallel_sweep(
        snowy_in_box(3, 3), "snowy compositions",
        [](const WeakComposition& alpha) -> std::optional<std::string> {
          Polynomial f = top_lascoux_polynomial(alpha);
          WeakComposition code = rajcode(alpha);
          long long degree = 0;
          if (!f.is_homogeneous(&degree) || degree != code.total())
            return alpha.str() + " degree differs";
          if (f.leading_exponent() != code || f.leading_coeff() != 1)
            return alpha.str() + " leading term differs";
          return std::nullopt;
        });
  });
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, int max_n) {
  if (max_n < 1) fail(ErrorKind::InvalidInput, "max_n must be positive");
  VerifyReport report;
  report.suite = suite;
  auto dispatch = [&](const std::string& name) {
    if (name == "examples") suite_examples(report.checks);
    else if (name == "operators") suite_operators(report.checks, max_n);
    else if (name == "bpd") suite_bpd(report.checks, max_n);
    else if (name == "support") suite_support(report.checks, max_n);
    else if (name == "structure") suite_structure(report.checks, max_n);
    else if (name == "hilbert") suite_hilbert(report.checks, max_n);
    else fail(ErrorKind::InvalidInput, "unknown verify suite " + name);
  };
  if (suite == "all") {
    for (const std::string& name : verify_suite_names()) dispatch(name);
  } else {
    dispatch(suite);
  }
  return report;
}

std::vector<std::string> verify_suite_names() {
  return {"examples", "operators", "bpd", "support", "structure", "hilbert"};
}

}  // namespace schublas
