#include "schublas/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "schublas/errors.hpp"

namespace schublas {

namespace {

void sort_cells(std::vector<Cell>& cells, std::vector<CellLabel>& labels) {
  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cells[a] < cells[b]; });
  std::vector<Cell> sorted_cells(cells.size());
  std::vector<CellLabel> sorted_labels(cells.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    sorted_cells[k] = cells[order[k]];
    sorted_labels[k] = labels[order[k]];
  }
  cells = std::move(sorted_cells);
  labels = std::move(sorted_labels);
}

}  // namespace

Diagram::Diagram(std::vector<Cell> cells)
    : Diagram(std::move(cells), std::vector<CellLabel>()) {}

Diagram::Diagram(std::vector<Cell> cells, std::vector<CellLabel> labels)
    : cells_(std::move(cells)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_.resize(cells_.size(), CellLabel::Plain);
  if (labels_.size() != cells_.size())
    fail(ErrorKind::InvalidInput, "labels do not match cells");
  for (const Cell& c : cells_)
    if (c.row < 1 || c.col < 1)
      fail(ErrorKind::InvalidInput, "cell outside the positive quadrant");
  sort_cells(cells_, labels_);
  for (std::size_t i = 1; i < cells_.size(); ++i)
    if (cells_[i] == cells_[i - 1]) fail(ErrorKind::InvalidInput, "duplicate cell");
}

Diagram Diagram::of_composition(const WeakComposition& alpha) {
  std::vector<Cell> cells;
  for (int r = 1; r <= alpha.size(); ++r)
    for (int c = 1; c <= alpha.at(r); ++c) cells.push_back({r, c});
  return Diagram(std::move(cells));
}

bool Diagram::contains(Cell cell) const {
  return std::binary_search(cells_.begin(), cells_.end(), cell);
}

CellLabel Diagram::label(Cell cell) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), cell);
  if (it == cells_.end() || !(*it == cell)) return CellLabel::Plain;
  return labels_[static_cast<std::size_t>(it - cells_.begin())];
}

int Diagram::max_row() const {
  int best = 0;
  for (const Cell& c : cells_) best = std::max(best, c.row);
  return best;
}

int Diagram::max_col() const {
  int best = 0;
  for (const Cell& c : cells_) best = std::max(best, c.col);
  return best;
}

WeakComposition Diagram::weight() const {
  std::vector<int> counts(max_row(), 0);
  for (const Cell& c : cells_) ++counts[c.row - 1];
  return WeakComposition(std::move(counts));
}

Diagram Diagram::unlabeled() const { return Diagram(cells_); }

std::string Diagram::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    nlohmann::json cell = {cells_[i].row, cells_[i].col};
    if (labels_[i] == CellLabel::Bullet) cell.push_back("bullet");
    if (labels_[i] == CellLabel::Asterisk) cell.push_back("asterisk");
    out.push_back(std::move(cell));
  }
  return out.dump();
}

Diagram Diagram::from_json(std::string_view text) {
  nlohmann::json in = nlohmann::json::parse(text, nullptr, false);
  if (in.is_discarded() || !in.is_array())
    fail(ErrorKind::InvalidInput, "diagram JSON must be an array of cells");
  std::vector<Cell> cells;
  std::vector<CellLabel> labels;
  for (const auto& item : in) {
    if (!item.is_array() || item.size() < 2 || item.size() > 3 ||
        !item[0].is_number_integer() || !item[1].is_number_integer())
      fail(ErrorKind::InvalidInput, "diagram cell must be [row, col] or [row, col, label]");
    cells.push_back({item[0].get<int>(), item[1].get<int>()});
    CellLabel label = CellLabel::Plain;
    if (item.size() == 3) {
      std::string name = item[2].is_string() ? item[2].get<std::string>() : "";
      if (name == "bullet")
        label = CellLabel::Bullet;
      else if (name == "asterisk")
        label = CellLabel::Asterisk;
      else if (name != "dot")
        fail(ErrorKind::InvalidInput, "unknown cell label '" + name + "'");
    }
    labels.push_back(label);
  }
  return Diagram(std::move(cells), std::move(labels));
}

Diagram rothe_diagram(const Permutation& w) {
  std::vector<Cell> cells;
  Permutation inv = w.inverse();
  for (int r = 1; r <= w.size(); ++r)
    for (int c = 1; c < w(r); ++c)
      if (inv(c) > r) cells.push_back({r, c});
  return Diagram(std::move(cells));
}

Diagram snow_diagram(const WeakComposition& alpha) {
  if (!alpha.is_snowy()) fail(ErrorKind::NotSnowy, "snow diagram of " + alpha.str());
  std::vector<Cell> cells;
  std::vector<CellLabel> labels;
  int n = alpha.size();
  int m = alpha.max_entry();
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= m; ++c) {
      bool later = false;
      for (int i = r + 1; i <= n; ++i)
        if (alpha.at(i) == c) later = true;
      if (alpha.at(r) >= c || later) {
        cells.push_back({r, c});
        if (c == alpha.at(r))
          labels.push_back(CellLabel::Bullet);
        else if (c > alpha.at(r))
          labels.push_back(CellLabel::Asterisk);
        else
          labels.push_back(CellLabel::Plain);
      }
    }
  }
  return Diagram(std::move(cells), std::move(labels));
}

Diagram rotate_complement(const Diagram& d, int m, int n) {
  if (m < 0 || n < 0)
    fail(ErrorKind::OutOfRange, "box " + std::to_string(m) + "x" + std::to_string(n));
  if (d.max_row() > n || d.max_col() > m)
    fail(ErrorKind::OutOfRange, "diagram outside box m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
  std::vector<Cell> cells;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= m; ++c)
      if (!d.contains({n + 1 - r, m + 1 - c})) cells.push_back({r, c});
  return Diagram(std::move(cells));
}

}  // namespace schublas
