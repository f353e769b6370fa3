#pragma once

#include <string>
#include <vector>

#include "schublas/composition.hpp"
#include "schublas/diagram.hpp"
#include "schublas/permutation.hpp"

namespace schublas {

/// A filling of a diagram with positive integers, stored parallel to the
/// diagram's cell list. Value of cell (r,c) is entry(r,c).
class Tableau {
 public:
  Tableau(Diagram shape, std::vector<int> values);

  const Diagram& shape() const { return shape_; }
  const std::vector<int>& values() const { return values_; }
  int entry(int row, int col) const;  // OutOfRange when absent

  /// weight()_i = number of cells holding value i.
  WeakComposition weight() const;

  /// Rows "r: c=v c=v ..." for printing and goldens.
  std::string str() const;
  std::string to_json() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Diagram shape_;
  std::vector<int> values_;
};

/// All flagged column-strict fills of the diagram: entries strictly increase
/// down each column and entry(r,c) <= r. Columns are independent, so the
/// list is the Cartesian product over columns; output is sorted with the
/// leftmost column most significant and each column's fills ascending
/// lexicographically top to bottom.
std::vector<Tableau> perfect_tableaux(const Diagram& d);

/// Exponent sets {weight(T)} over perfect tableaux, deduplicated, tail-lex
/// descending. These coincide with the supports of the corresponding
/// polynomials:
///   schubert_support(w)    uses rothe_diagram(w),
///   top_lascoux_support(a) uses snow_diagram(a) without labels.
std::vector<WeakComposition> tableau_support(const Diagram& d);
std::vector<WeakComposition> schubert_support(const Permutation& w);
std::vector<WeakComposition> top_lascoux_support(const WeakComposition& alpha);

/// Bijection between fills of a diagram and fills of its box complement:
/// the image shape is rotate_complement(shape, m, n); each image column c
/// holds the values of [n] not of the form n+1-v for v in source column
/// m+1-c, assigned ascending down the column. The image weight equals
/// reverse_complement(weight(t), m, n). Internal if the image violates the
/// entry <= row flag (cannot happen for the diagram pairs above).
Tableau rotate_complement_fill(const Tableau& t, int m, int n);

}  // namespace schublas
