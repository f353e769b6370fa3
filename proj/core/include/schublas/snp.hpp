#pragma once

#include <optional>
#include <vector>

#include "schublas/composition.hpp"
#include "schublas/polynomial.hpp"

namespace schublas {

/// Exact rational linear feasibility: is `point` a convex combination of
/// `points`? Solved by a phase-1 simplex with Bland's rule, so it always
/// terminates and there is no floating-point tolerance anywhere.
bool in_convex_hull(const std::vector<WeakComposition>& points,
                    const WeakComposition& point);

/// Result of a saturated-support check: a polynomial's support is saturated
/// when every lattice point of its Newton polytope carries a term.
struct SnpReport {
  bool saturated = true;
  /// First missing lattice point in ascending lexicographic order, present
  /// only when saturated is false.
  std::optional<WeakComposition> witness;
  /// Lattice points examined (candidates inside bounding box and, for
  /// homogeneous input, on the degree hyperplane).
  long long candidates_checked = 0;
};

/// Checks f's support for saturation. ZeroPolynomial when f = 0.
/// Candidate lattice points run through the support's bounding box
/// (restricted to the total-degree hyperplane when f is homogeneous) in
/// ascending lexicographic order; each candidate outside the support is
/// tested for hull membership exactly. ResourceLimit when the candidate box
/// exceeds limits::term_limit().
SnpReport check_snp(const Polynomial& f);

}  // namespace schublas
