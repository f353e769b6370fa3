#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace schublas {

/// Weak composition: an infinite sequence of non-negative integers with
/// finite support, stored as the normalized prefix (no trailing zeros).
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> entries);
  WeakComposition(std::initializer_list<int> entries);

  /// Parse "0,4,2". "" and "0" both denote the zero composition.
  static WeakComposition parse(std::string_view text);

  /// 1-based entry; 0 beyond the stored prefix.
  int at(int i) const;
  /// Normalized prefix length, i.e. the largest index with a positive entry.
  int size() const;
  const std::vector<int>& entries() const { return entries_; }

  long long total() const;  // sum of entries
  int max_entry() const;
  bool is_zero() const { return entries_.empty(); }
  /// Positive entries pairwise distinct.
  bool is_snowy() const;
  /// Weakly decreasing.
  bool is_partition() const;

  /// Copy with the 1-based entry i replaced by value.
  WeakComposition with(int i, int value) const;
  /// Copy with entries i and i+1 exchanged.
  WeakComposition swapped(int i) const;
  WeakComposition sorted_descending() const;

  std::string str() const;

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;

 private:
  std::vector<int> entries_;
};

/// Tail-lexicographic comparison: a > b iff at the largest index where they
/// differ, a has the larger entry. Returns <0, 0, >0 like strcmp.
int tail_lex_compare(const WeakComposition& a, const WeakComposition& b);

/// Strict "greater" functor; std::map with this iterates tail-lex descending.
struct TailLexGreater {
  bool operator()(const WeakComposition& a, const WeakComposition& b) const {
    return tail_lex_compare(a, b) > 0;
  }
};

struct WeakCompositionHash {
  std::size_t operator()(const WeakComposition& c) const;
};

/// alpha_i + #{j > i : alpha_j > alpha_i}. Requires snowy input; injective on
/// snowy compositions, fixes partitions, and equals the row weights of the
/// decorated diagram built by snow_diagram().
WeakComposition rajcode(const WeakComposition& alpha);

/// Inverse of rajcode on its image; NotInImage if rho has no snowy preimage.
WeakComposition rajcode_inverse(const WeakComposition& rho);

/// (m - alpha_n, ..., m - alpha_1). Requires supp(alpha) within [n] and
/// max(alpha) <= m; an involution on that box.
WeakComposition reverse_complement(const WeakComposition& alpha, int m, int n);

}  // namespace schublas
