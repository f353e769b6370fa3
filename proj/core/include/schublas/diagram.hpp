#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "schublas/composition.hpp"
#include "schublas/permutation.hpp"

namespace schublas {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;  // row-major order
};

enum class CellLabel { Plain, Bullet, Asterisk };

/// Finite set of labeled cells in the positive quadrant (1-based rows grow
/// downward). Cells are kept sorted row-major.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Cell> cells);
  Diagram(std::vector<Cell> cells, std::vector<CellLabel> labels);

  /// Left-justified diagram of a composition: row r holds cells 1..alpha_r.
  static Diagram of_composition(const WeakComposition& alpha);

  bool contains(Cell cell) const;
  CellLabel label(Cell cell) const;  // Plain if absent
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<CellLabel>& labels() const { return labels_; }
  std::size_t cell_count() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  int max_row() const;
  int max_col() const;

  /// Cells per row, as a weak composition.
  WeakComposition weight() const;
  Diagram unlabeled() const;

  /// JSON array of [row, col] / [row, col, "bullet"|"asterisk"]; the reader
  /// also accepts "dot" for plain cells.
  std::string to_json() const;
  static Diagram from_json(std::string_view text);

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Cell> cells_;          // sorted row-major
  std::vector<CellLabel> labels_;    // parallel to cells_
};

/// Rothe diagram: {(r, c) : w(r) > c and w(i) != c for all i <= r}. Its row
/// weights equal invcode(w).
Diagram rothe_diagram(const Permutation& w);

/// Decorated diagram of a snowy composition: the rightmost cell of each
/// nonempty row of the left-justified diagram gets a bullet, and every empty
/// position directly above a bullet gets an asterisk cell. Cell set equals
/// {(r, c) : alpha_r >= c or alpha_i = c for some i > r}; row weights equal
/// rajcode(alpha).
Diagram snow_diagram(const WeakComposition& alpha);

/// Rotate by 180 degrees inside the n x m box and complement: cells of the
/// result are the box positions whose rotation image is NOT in d. Labels are
/// dropped (the result is unlabeled). Requires d within the box; empty input
/// yields the full box; an involution on unlabeled diagrams in the box.
Diagram rotate_complement(const Diagram& d, int m, int n);

}  // namespace schublas
