#pragma once

#include "schublas/composition.hpp"
#include "schublas/permutation.hpp"
#include "schublas/polynomial.hpp"

namespace schublas {

/// The three polynomial families, each computed by its defining operator
/// recursion with a bounded memo cache shared across calls.
///
///   schubert_polynomial(w):  x^invcode(w) when w is dominant, else
///       divided_difference applied along the smallest ascent of w.
///   key_polynomial(alpha):   x^alpha when alpha is a partition, else
///       demazure_pi applied along the smallest strict descent of alpha.
///   top_lascoux_polynomial(alpha): snowy alpha only (NotSnowy otherwise);
///       x^alpha when alpha is a partition, else pi_hat along the smallest
///       strict descent. Homogeneous of degree |rajcode(alpha)| with leading
///       term x^rajcode(alpha), coefficient 1.
Polynomial schubert_polynomial(const Permutation& w);
Polynomial key_polynomial(const WeakComposition& alpha);
Polynomial top_lascoux_polynomial(const WeakComposition& alpha);

/// The same polynomials through the reverse-complement transfer, used as an
/// independent route in tests, verification sweeps, and the CLI.
///   top_lascoux_via_reverse: reverse_complement of
///       schubert_polynomial(standardize(alpha, m, n)) in the m x n box;
///       needs alpha snowy, supp(alpha) within [n], max(alpha) <= m.
///   schubert_via_top_lascoux: with alpha = (n+1-w(n), ..., n+1-w(1)),
///       reverse_complement of top_lascoux_polynomial(alpha) in the n x n
///       box; needs w to move nothing beyond n.
Polynomial top_lascoux_via_reverse(const WeakComposition& alpha, int m, int n);
Polynomial schubert_via_top_lascoux(const Permutation& w, int n);

/// Drop all memoized polynomials (used by benchmarks to time cold runs).
void clear_basis_caches();

/// Number of polynomials currently memoized, per family (diagnostics).
struct BasisCacheSizes {
  std::size_t schubert = 0;
  std::size_t key = 0;
  std::size_t top_lascoux = 0;
};
BasisCacheSizes basis_cache_sizes();

}  // namespace schublas
