#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "schublas/composition.hpp"
#include "schublas/errors.hpp"
#include "schublas/permutation.hpp"

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

// Inversion count straight from the definition, on an explicit window.
long long count_inversions(const Permutation& w, int window) {
  long long count = 0;
  for (int i = 1; i <= window; ++i)
    for (int j = i + 1; j <= window; ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

WeakComposition brute_invcode(const Permutation& w, int window) {
  std::vector<int> code(window, 0);
  for (int i = 1; i <= window; ++i)
    for (int j = i + 1; j <= window; ++j)
      if (w(j) < w(i)) ++code[i - 1];
  return WeakComposition(code);
}

}  // namespace

TEST_CASE("permutation normalization and evaluation") {
  Permutation w{2, 1, 3, 4};
  CHECK(w.size() == 2);
  CHECK(w.one_line() == std::vector<int>{2, 1});
  CHECK(w(1) == 2);
  CHECK(w(2) == 1);
  CHECK(w(3) == 3);
  CHECK(w(100) == 100);
  CHECK(Permutation{}.is_identity());
  CHECK(Permutation{1, 2, 3}.is_identity());
  CHECK(w.str() == "[2,1]");
  CHECK(Permutation{}.str() == "[]");
  CHECK_THROWS_AS(Permutation({1, 3}), SchubError);
  CHECK_THROWS_AS(Permutation({2, 2}), SchubError);
  CHECK_THROWS_AS(Permutation({0, 1}), SchubError);
}

TEST_CASE("permutation parsing") {
  CHECK(Permutation::parse("2,1,4,3") == Permutation{2, 1, 4, 3});
  CHECK(Permutation::parse(" 2 , 1 ") == Permutation{2, 1});
  CHECK(Permutation::parse("1") == Permutation{});
  CHECK(Permutation::parse("") == Permutation{});
  CHECK_THROWS_AS(Permutation::parse("2,5,1"), SchubError);
  CHECK_THROWS_AS(Permutation::parse("x"), SchubError);
}

TEST_CASE("group operations") {
  Permutation w{3, 1, 4, 2};
  CHECK(w.right_multiplied(1) == Permutation{1, 3, 4, 2});
  CHECK(w.right_multiplied(3) == Permutation{3, 1, 2, 4});
  CHECK(w.inverse() == Permutation{2, 4, 1, 3});
  for (const Permutation& u : symmetric_group(4)) {
    const Permutation v = u.inverse();
    for (int i = 1; i <= 4; ++i) CHECK(v(u(i)) == i);
    CHECK(u.inversions() == count_inversions(u, 4));
    CHECK(v.inversions() == u.inversions());
  }
}

TEST_CASE("inversion code") {
  CHECK(invcode(Permutation{4, 1, 5, 3, 2}) == WeakComposition{3, 0, 2, 1});
  CHECK(invcode(Permutation{2, 1, 4, 3}) == WeakComposition{1, 0, 1});
  CHECK(invcode(Permutation{}) == WeakComposition{});
  for (const Permutation& w : symmetric_group(4)) {
    WeakComposition code = invcode(w);
    CHECK(code == brute_invcode(w, 4));
    CHECK(code.total() == w.inversions());
    CHECK(code_to_perm(code) == w);
  }
}

TEST_CASE("code_to_perm is total on weak compositions") {
  CHECK(code_to_perm(WeakComposition{}) == Permutation{});
  CHECK(code_to_perm(WeakComposition{0, 2}) == Permutation{1, 4, 2, 3});
  CHECK(code_to_perm(WeakComposition{3, 0, 2, 1}) == Permutation{4, 1, 5, 3, 2});
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        WeakComposition code{a, b, c};
        CHECK(invcode(code_to_perm(code)) == code);
      }
}

TEST_CASE("dominant means the code is a partition") {
  CHECK(is_dominant(Permutation{}));
  CHECK(is_dominant(Permutation{3, 1, 2}));       // code (2)
  CHECK(is_dominant(Permutation{4, 2, 1, 3}));    // code (3,1)
  CHECK_FALSE(is_dominant(Permutation{1, 3, 2}));  // code (0,1)
  for (const Permutation& w : symmetric_group(4))
    CHECK(is_dominant(w) == invcode(w).is_partition());
}

TEST_CASE("standardization fixed values") {
  CHECK(standardize(WeakComposition{2, 4, 0, 6, 0, 0, 1}, 6, 7) ==
        Permutation{6, 7, 8, 1, 9, 3, 5, 2, 4});
  CHECK(standardize(WeakComposition{0, 4, 2}, 4, 3) == Permutation{3, 1, 5, 2, 4});
  CHECK(standardize(WeakComposition{2, 3, 1, 4}, 4, 4) == Permutation{1, 4, 2, 3});
  CHECK(standardize(WeakComposition{2, 1, 4, 3}, 4, 4) == Permutation{2, 1, 4, 3});
  CHECK(standardize(WeakComposition{2, 0, 4, 0, 1}, 4, 5) ==
        Permutation{4, 5, 1, 6, 3, 2});
  CHECK(standardize(WeakComposition{0, 3, 0, 2}, 3, 4) == Permutation{2, 4, 1, 5, 3});
  CHECK(standardize(WeakComposition{8, 6, 5, 7}, 8, 4) == Permutation{2, 4, 3, 1});
  CHECK(standardize(WeakComposition{1, 2, 3}, 3, 3) == Permutation{});
  CHECK_THROWS_AS(standardize(WeakComposition{1, 1}, 2, 2), SchubError);
  CHECK_THROWS_AS(standardize(WeakComposition{3}, 2, 1), SchubError);
}

TEST_CASE("standardize_inverse round trips") {
  struct Case {
    WeakComposition alpha;
    int m, n;
  };
  const Case cases[] = {
      {{2, 4, 0, 6, 0, 0, 1}, 6, 7}, {{0, 4, 2}, 4, 3},    {{2, 3, 1, 4}, 4, 4},
      {{2, 0, 4, 0, 1}, 4, 5},       {{0, 3, 0, 2}, 3, 4}, {{8, 6, 5, 7}, 8, 4},
      {{1, 2, 3}, 3, 3},             {{}, 2, 2},
  };
  for (const Case& c : cases) {
    Permutation w = standardize(c.alpha, c.m, c.n);
    auto back = standardize_inverse(w, c.m, c.n);
    REQUIRE(back.has_value());
    CHECK(*back == c.alpha);
  }
  // Tail values of the image increase, so a descent past position n rules a
  // permutation out.
  CHECK_FALSE(standardize_inverse(Permutation{1, 3, 2}, 1, 1).has_value());
  CHECK(standardize_inverse(Permutation{3, 1, 2}, 2, 1).has_value());
}
