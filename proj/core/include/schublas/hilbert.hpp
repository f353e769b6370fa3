#pragma once

#include <vector>

#include "schublas/composition.hpp"
#include "schublas/rational.hpp"

namespace schublas {

/// Coefficients 0..max_degree of the generating function counting snowy
/// compositions by degree of their top polynomial, i.e. coefficient d equals
/// #{snowy alpha : |rajcode(alpha)| = d}. Computed from the product formula
///   prod_{m >= 1} (1 + q^m / (1 - q))
/// truncated at max_degree. Starts 1, 1, 2, 4, ...
std::vector<Integer> snowy_degree_series(int max_degree);

/// The same coefficient counted directly: enumerates every snowy alpha with
/// |rajcode(alpha)| = d (support inside [d], entries at most d suffice) by a
/// pruned right-to-left search. Sorted tail-lex descending.
std::vector<WeakComposition> snowy_by_degree(int d);

}  // namespace schublas
