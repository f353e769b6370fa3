#pragma once

#include <map>
#include <string>
#include <string_view>

#include "schublas/composition.hpp"
#include "schublas/permutation.hpp"
#include "schublas/polynomial.hpp"
#include "schublas/rational.hpp"

namespace schublas {

/// Orders permutations tail-lex descending by inversion code.
struct InvcodeGreater {
  bool operator()(const Permutation& a, const Permutation& b) const;
};

/// Expansions are sparse maps with zero coefficients dropped; keys iterate
/// tail-lex descending on the leading exponents.
using SchubertExpansion = std::map<Permutation, Rational, InvcodeGreater>;
using CompositionExpansion = std::map<WeakComposition, Rational, TailLexGreater>;

/// Greedy peeling by leading monomials: each step subtracts
/// (leading coeff) * (basis element with the same leading exponent), which
/// strictly decreases the remainder's leading exponent in tail-lex order.
/// Leading exponents are the inversion code (Schubert), the composition
/// itself (key), and the rajcode (top Lascoux), so the first two expansions
/// are total; expand_in_top_lascoux raises NotInSpan when a remainder's
/// leading exponent has no snowy preimage under rajcode.
SchubertExpansion expand_in_schubert(const Polynomial& f);
CompositionExpansion expand_in_key(const Polynomial& f);
CompositionExpansion expand_in_top_lascoux(const Polynomial& f);

/// Recombines an expansion; used to verify round trips.
Polynomial combine_schubert(const SchubertExpansion& e);
Polynomial combine_key(const CompositionExpansion& e);
Polynomial combine_top_lascoux(const CompositionExpansion& e);

/// Expansion of schubert(u) * schubert(v) in the Schubert family.
SchubertExpansion schubert_product_expansion(const Permutation& u, const Permutation& v);

/// Coefficient of schubert(w) in schubert(u) * schubert(v).
Rational littlewood_richardson_coeff(const Permutation& u, const Permutation& v,
                                     const Permutation& w);

/// Expansion of top_lascoux(alpha) * top_lascoux(gamma) in the top Lascoux
/// family (defined whenever both inputs are snowy).
CompositionExpansion top_lascoux_product_expansion(const WeakComposition& alpha,
                                                   const WeakComposition& gamma);

/// Structure constant at delta of the product above, computed WITHOUT
/// expanding the product: for alpha, gamma, delta snowy and inside the boxes
/// m1 x n, m2 x n, (m1+m2) x n, it equals
///   littlewood_richardson_coeff(standardize(alpha, m1, n),
///                               standardize(gamma, m2, n),
///                               standardize(delta, m1+m2, n)).
Rational top_lascoux_structure_constant(const WeakComposition& alpha,
                                        const WeakComposition& gamma,
                                        const WeakComposition& delta, int m1, int m2,
                                        int n);

/// One row of a structure-constant report: the constant of top_lascoux(delta)
/// in top_lascoux(alpha) * top_lascoux(gamma) next to the Schubert constant
/// of schubert(standardize(delta, m1+m2, n)) it must equal.
struct StructureRow {
  WeakComposition delta;
  Permutation w;
  Rational d;
  Rational c;
  bool equal = false;
};

struct StructureReport {
  Permutation u;
  Permutation v;
  std::vector<StructureRow> rows;
  bool all_equal = true;
};

/// Compares the two constants at every delta appearing on either side of the
/// correspondence (indices of the top Lascoux product plus the compositions
/// recovered from the Schubert product via standardize_inverse).
StructureReport top_lascoux_structure_report(const WeakComposition& alpha,
                                             const WeakComposition& gamma, int m1,
                                             int m2, int n);

/// Key expansion of top_lascoux(alpha). Cross-checked against the second
/// route the reverse complement provides: the key expansion of
/// schubert(standardize(alpha, m, n)) with every index gamma replaced by
/// reverse_complement(gamma, m, n). Internal on disagreement.
CompositionExpansion key_expand_top_lascoux(const WeakComposition& alpha, int m,
                                            int n);

/// {"basis":"...","terms":[{"index":[...],"coeff":"..."}]}; index is the
/// one-line word or the composition entries.
std::string expansion_to_json(const SchubertExpansion& e);
std::string expansion_to_json(const CompositionExpansion& e, std::string_view basis);
/// "2*S[2,1,4,3] + S[1,3,2]" style; the label names the family symbol.
std::string expansion_to_text(const SchubertExpansion& e, std::string_view label = "S");
std::string expansion_to_text(const CompositionExpansion& e, std::string_view label);

}  // namespace schublas
