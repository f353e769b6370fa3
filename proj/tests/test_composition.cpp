#include <doctest.h>

#include <set>
#include <vector>

#include "schublas/composition.hpp"
#include "schublas/errors.hpp"

using namespace schublas;

namespace {

// Every composition with entries in [0, cap] and length <= len, normalized.
std::vector<WeakComposition> box(int cap, int len) {
  std::vector<WeakComposition> out{WeakComposition{}};
  std::vector<int> entries(len, 0);
  while (true) {
    int i = 0;
    while (i < len && entries[i] == cap) entries[i++] = 0;
    if (i == len) break;
    ++entries[i];
    out.emplace_back(entries);
  }
  std::set<WeakComposition, TailLexGreater> dedup(out.begin(), out.end());
  return {dedup.begin(), dedup.end()};
}

}  // namespace

TEST_CASE("composition normalization and accessors") {
  WeakComposition a{0, 4, 2, 0, 0};
  CHECK(a.size() == 3);
  CHECK(a.entries() == std::vector<int>{0, 4, 2});
  CHECK(a.at(1) == 0);
  CHECK(a.at(2) == 4);
  CHECK(a.at(17) == 0);
  CHECK(a.total() == 6);
  CHECK(a.max_entry() == 4);
  CHECK_FALSE(a.is_zero());
  CHECK(WeakComposition{}.is_zero());
  CHECK(WeakComposition{0, 0}.is_zero());
  CHECK(a.str() == "(0,4,2)");
  CHECK(WeakComposition{}.str() == "()");
  CHECK_THROWS_AS(WeakComposition({-1}), SchubError);
}

TEST_CASE("composition parsing") {
  CHECK(WeakComposition::parse("0,4,2") == WeakComposition{0, 4, 2});
  CHECK(WeakComposition::parse("0") == WeakComposition{});
  CHECK(WeakComposition::parse("") == WeakComposition{});
  CHECK(WeakComposition::parse("3") == WeakComposition{3});
  CHECK_THROWS_AS(WeakComposition::parse("1,,2"), SchubError);
  CHECK_THROWS_AS(WeakComposition::parse("a"), SchubError);
}

TEST_CASE("snowy and partition predicates") {
  CHECK(WeakComposition{2, 0, 4, 0, 1}.is_snowy());
  CHECK(WeakComposition{}.is_snowy());
  CHECK(WeakComposition{0, 0, 3}.is_snowy());
  CHECK_FALSE(WeakComposition{1, 0, 1}.is_snowy());
  CHECK(WeakComposition{4, 2, 2}.is_partition());
  CHECK_FALSE(WeakComposition{2, 4}.is_partition());
  CHECK(WeakComposition{}.is_partition());
}

TEST_CASE("with swapped sorted") {
  WeakComposition a{0, 4, 2};
  CHECK(a.with(1, 5) == WeakComposition{5, 4, 2});
  CHECK(a.with(4, 1) == WeakComposition{0, 4, 2, 1});
  CHECK(a.with(2, 0) == WeakComposition{0, 0, 2});
  CHECK(a.swapped(1) == WeakComposition{4, 0, 2});
  CHECK(a.swapped(3) == WeakComposition{0, 4, 0, 2});
  CHECK(a.sorted_descending() == WeakComposition{4, 2});
}

TEST_CASE("tail-lex order compares at the largest differing index") {
  CHECK(tail_lex_compare(WeakComposition{2}, WeakComposition{0, 2}) < 0);
  CHECK(tail_lex_compare(WeakComposition{1, 1}, WeakComposition{0, 2}) < 0);
  CHECK(tail_lex_compare(WeakComposition{5, 1}, WeakComposition{0, 2}) < 0);
  CHECK(tail_lex_compare(WeakComposition{2, 1}, WeakComposition{1, 1}) > 0);
  CHECK(tail_lex_compare(WeakComposition{0, 2}, WeakComposition{0, 2}) == 0);

  // Strict total order on a box: irreflexive, antisymmetric, transitive
  // spot-check through std::set round trip.
  std::vector<WeakComposition> all = box(2, 3);
  std::set<WeakComposition, TailLexGreater> sorted(all.begin(), all.end());
  CHECK(sorted.size() == all.size());
}

TEST_CASE("rajcode fixed values") {
  // rajcode(alpha)_i = alpha_i + #{j > i : alpha_j > alpha_i}.
  CHECK(rajcode(WeakComposition{3, 0, 1, 4, 6, 0, 2}) ==
        WeakComposition{5, 4, 4, 5, 6, 1, 2});
  CHECK(rajcode(WeakComposition{2, 0, 4, 0, 1}) == WeakComposition{3, 2, 4, 1, 1});
  CHECK(rajcode(WeakComposition{0, 4, 2}) == WeakComposition{2, 4, 2});
  CHECK(rajcode(WeakComposition{}) == WeakComposition{});
  CHECK_THROWS_AS(rajcode(WeakComposition{1, 1}), SchubError);
}

TEST_CASE("rajcode fixes partitions and is injective on a snowy box") {
  std::set<WeakComposition, TailLexGreater> images;
  int snowy_count = 0;
  for (const WeakComposition& a : box(3, 3)) {
    if (!a.is_snowy()) continue;
    ++snowy_count;
    WeakComposition r = rajcode(a);
    if (a.is_partition()) CHECK(r == a);
    CHECK(r.total() >= a.total());
    CHECK(images.insert(r).second);
    CHECK(rajcode_inverse(r) == a);
  }
  CHECK(snowy_count == 34);
  CHECK_THROWS_AS(rajcode_inverse(WeakComposition{0, 1}), SchubError);
}

TEST_CASE("reverse complement") {
  CHECK(reverse_complement(WeakComposition{0, 4, 2}, 4, 3) ==
        WeakComposition{2, 0, 4});
  CHECK(reverse_complement(WeakComposition{}, 2, 3) == WeakComposition{2, 2, 2});
  CHECK(reverse_complement(WeakComposition{2, 2, 2}, 2, 3) == WeakComposition{});
  for (const WeakComposition& a : box(3, 4))
    CHECK(reverse_complement(reverse_complement(a, 3, 4), 3, 4) == a);
  // max(alpha) must fit below m and supp(alpha) within [n].
  CHECK_THROWS_AS(reverse_complement(WeakComposition{4}, 3, 1), SchubError);
  CHECK_THROWS_AS(reverse_complement(WeakComposition{1, 1}, 3, 1), SchubError);
}
