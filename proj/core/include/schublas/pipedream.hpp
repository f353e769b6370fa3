#pragma once

#include <string>
#include <vector>

#include "schublas/composition.hpp"
#include "schublas/permutation.hpp"
#include "schublas/polynomial.hpp"

namespace schublas {

/// Tiles of a pipe grid, named by their drawn shape. Edge sets:
///   Blank {}, Cross {N,S,W,E}, ElbowSE {S,E}, ElbowNW {N,W},
///   Horizontal {W,E}, Vertical {N,S}.
/// Enum order is the canonical tile order used when enumerating, which makes
/// depth-first output sorted by row-major grid comparison.
enum class Tile : unsigned char { Blank, Cross, ElbowSE, ElbowNW, Horizontal, Vertical };

char tile_char(Tile t);         // '.', '+', 'r', 'j', '-', '|'
Tile tile_from_char(char c);    // InvalidInput on anything else
bool tile_has_north(Tile t);
bool tile_has_south(Tile t);
bool tile_has_west(Tile t);
bool tile_has_east(Tile t);

/// Rectangular grid of tiles, row-major, rows and cols 1-based in the API.
class PipeGrid {
 public:
  PipeGrid(int rows, int cols, Tile fill = Tile::Blank);
  /// One string per row using tile_char letters; rows must be equal length.
  static PipeGrid parse(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Tile at(int r, int c) const;
  void set(int r, int c, Tile t);

  std::vector<std::string> render_ascii() const;
  /// {"rows":2,"cols":3,"tiles":[".||","-+j"]} plus, when the pipes trace
  /// consistently, "boundary":{"pipes":[{"entry":["L",2],"exit":["T",3]}]}.
  std::string to_json() const;
  /// Reads rows/cols/tiles; a boundary member is ignored.
  static PipeGrid from_json(std::string_view text);

  friend auto operator<=>(const PipeGrid& a, const PipeGrid& b) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Tile> tiles_;
};

/// Grids for a permutation w in the n x n square: pipe i enters at the bottom
/// of column i and exits at the right of row w(i); every pair of pipes
/// crosses at most once. Sorted by row-major tile order.
std::vector<PipeGrid> bpd_list(const Permutation& w, int n);
/// Same with n = max(w.size(), 1).
std::vector<PipeGrid> bpd_list(const Permutation& w);

/// Grids for a snowy composition alpha in the n x m rectangle, where
/// m = max(alpha) and n covers supp(alpha): pipe i enters at the left of row
/// i (when alpha_i > 0) and exits at the top of column alpha_i; nothing
/// touches the bottom or right boundary; pairs cross at most once.
std::vector<PipeGrid> ltbpd_list(const WeakComposition& alpha);

/// Row weights: blanks per row for square grids, non-blanks per row for
/// left-to-top grids.
WeakComposition bpd_weight(const PipeGrid& g);
WeakComposition ltbpd_weight(const PipeGrid& g);

/// Sum of x^weight over the listed grids.
Polynomial bpd_polynomial(const Permutation& w);
Polynomial ltbpd_polynomial(const WeakComposition& alpha);

/// Rotates the top-left n x m subgrid by 180 degrees, exchanging the two
/// elbow tiles, and returns that subgrid. InvalidSubgrid unless the result
/// is a consistent left-to-top grid on its own (edges match, every pipe runs
/// from the left edge to the top edge, no pair crosses twice). Applied to a
/// square grid of standardize(alpha, m, n) with n = |supp(alpha)| and
/// m = max(alpha) it yields a left-to-top grid of alpha, and this is a
/// bijection matching ltbpd_weight(result)_i = m - blank count of row
/// n+1-i of g.
PipeGrid rotate_subgrid(const PipeGrid& g, int m, int n);

/// True when g is a valid square grid of w (checks pipe routing and the
/// crossing condition). Used to cross-check the enumerator.
bool is_bpd_of(const PipeGrid& g, const Permutation& w);
bool is_ltbpd_of(const PipeGrid& g, const WeakComposition& alpha);

/// Traces every pipe and reports (entry, exit) boundary pairs; Internal if
/// edges do not match up. Entries/exits are encoded as (side, index) with
/// side in {'T','B','L','R'}.
struct BoundaryPoint {
  char side;
  int index;
  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
};
std::vector<std::pair<BoundaryPoint, BoundaryPoint>> trace_pipes(const PipeGrid& g);

}  // namespace schublas
