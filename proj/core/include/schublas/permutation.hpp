#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schublas/composition.hpp"

namespace schublas {

/// Permutation of the positive integers fixing all but finitely many points,
/// stored as the normalized one-line prefix (trailing fixed points trimmed).
class Permutation {
 public:
  Permutation() = default;  // identity
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line);

  static Permutation parse(std::string_view text);
  static Permutation identity() { return Permutation(); }

  /// w(i), 1-based; i beyond the stored prefix is fixed.
  int operator()(int i) const;
  /// Normalized one-line length.
  int size() const;
  const std::vector<int>& one_line() const { return one_line_; }
  bool is_identity() const { return one_line_.empty(); }

  /// w * s_i: exchanges the values in positions i, i+1.
  Permutation right_multiplied(int i) const;
  Permutation inverse() const;
  long long inversions() const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const;
};

/// Inversion code: c_i = #{j > i : w(j) < w(i)}.
WeakComposition invcode(const Permutation& w);

/// Inversion code is a partition.
bool is_dominant(const Permutation& w);

/// Decode an inversion code: w(i) is the (c_i + 1)-th smallest unused value.
/// Total on weak compositions; invcode(code_to_perm(c)) == c.
Permutation code_to_perm(const WeakComposition& code);

/// The unique permutation w with w(n+1) < w(n+2) < ... whose first n values
/// are determined by the reverse complement of alpha in the (m+1) x n box:
/// positions with a positive reverse-complement entry <= m copy it, and the
/// remaining positions take m+1, m+2, ... in order. Requires alpha snowy,
/// supp(alpha) within [n], max(alpha) <= m.
Permutation standardize(const WeakComposition& alpha, int m, int n);

/// The alpha with standardize(alpha, m, n) == w, or nullopt when w is not in
/// the image. Inverts the construction above: clamp the first n values of w
/// at m+1, reverse-complement back, and validate by a round trip.
std::optional<WeakComposition> standardize_inverse(const Permutation& w, int m,
                                                   int n);

}  // namespace schublas
