#include "schublas/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "schublas/errors.hpp"
#include "schublas/limits.hpp"

namespace schublas {

Tableau::Tableau(Diagram shape, std::vector<int> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
  if (values_.size() != shape_.cell_count())
    fail(ErrorKind::InvalidInput, "values do not match diagram cells");
  for (int v : values_)
    if (v < 1) fail(ErrorKind::InvalidInput, "tableau entries must be positive");
}

int Tableau::entry(int row, int col) const {
  const auto& cells = shape_.cells();
  auto it = std::lower_bound(cells.begin(), cells.end(), Cell{row, col});
  if (it == cells.end() || !(*it == Cell{row, col}))
    fail(ErrorKind::OutOfRange, "no cell at (" + std::to_string(row) + "," +
                                    std::to_string(col) + ")");
  return values_[static_cast<std::size_t>(it - cells.begin())];
}

WeakComposition Tableau::weight() const {
  int top = 0;
  for (int v : values_) top = std::max(top, v);
  std::vector<int> counts(top, 0);
  for (int v : values_) ++counts[v - 1];
  return WeakComposition(std::move(counts));
}

std::string Tableau::str() const {
  std::string out;
  int row = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Cell& c = shape_.cells()[i];
    if (c.row != row) {
      if (row != 0) out += "\n";
      row = c.row;
      out += std::to_string(row) + ":";
    }
    out += " " + std::to_string(c.col) + "=" + std::to_string(values_[i]);
  }
  return out;
}

std::string Tableau::to_json() const {
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t i = 0; i < values_.size(); ++i)
    cells.push_back({shape_.cells()[i].row, shape_.cells()[i].col, values_[i]});
  nlohmann::json out;
  out["cells"] = std::move(cells);
  return out.dump();
}

std::vector<Tableau> perfect_tableaux(const Diagram& d) {
  // Columns are independent: entries strictly increase downward and each is
  // bounded by its row, so a column's fills depend on that column alone.
  std::map<int, std::vector<std::size_t>> columns;  // col -> cell indices, top down
  for (std::size_t i = 0; i < d.cells().size(); ++i)
    columns[d.cells()[i].col].push_back(i);
  for (auto& [col, idx] : columns)
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return d.cells()[a].row < d.cells()[b].row; });

  // All fills of one column, ascending lexicographically top to bottom.
  auto column_fills = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<int>> fills;
    std::vector<int> current(idx.size());
    auto rec = [&](auto&& self, std::size_t k, int lower) -> void {
      if (k == idx.size()) {
        fills.push_back(current);
        return;
      }
      int bound = d.cells()[idx[k]].row;
      for (int v = lower; v <= bound; ++v) {
        current[k] = v;
        self(self, k + 1, v + 1);
      }
    };
    rec(rec, 0, 1);
    return fills;
  };

  std::vector<std::vector<std::size_t>> col_cells;
  std::vector<std::vector<std::vector<int>>> col_options;
  std::size_t count = 1;
  for (const auto& [col, idx] : columns) {
    col_cells.push_back(idx);
    col_options.push_back(column_fills(idx));
    count *= col_options.back().size();
    limits::check_term_count(count, "tableau enumeration");
    if (col_options.back().empty()) return {};
  }

  // Cartesian product with the leftmost column most significant.
  std::vector<Tableau> out;
  std::vector<std::size_t> pick(col_cells.size(), 0);
  while (true) {
    std::vector<int> values(d.cell_count());
    for (std::size_t k = 0; k < col_cells.size(); ++k)
      for (std::size_t j = 0; j < col_cells[k].size(); ++j)
        values[col_cells[k][j]] = col_options[k][pick[k]][j];
    out.emplace_back(d, std::move(values));
    std::size_t k = col_cells.size();
    while (k > 0) {
      --k;
      if (++pick[k] < col_options[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
    if (col_cells.empty()) return out;
  }
}

std::vector<WeakComposition> tableau_support(const Diagram& d) {
  std::set<WeakComposition, TailLexGreater> weights;
  for (const Tableau& t : perfect_tableaux(d)) weights.insert(t.weight());
  return {weights.begin(), weights.end()};
}

std::vector<WeakComposition> schubert_support(const Permutation& w) {
  return tableau_support(rothe_diagram(w));
}

std::vector<WeakComposition> top_lascoux_support(const WeakComposition& alpha) {
  return tableau_support(snow_diagram(alpha).unlabeled());
}

Tableau rotate_complement_fill(const Tableau& t, int m, int n) {
  const Diagram& shape = t.shape();
  Diagram image = rotate_complement(shape, m, n);
  // Source column m+1-c fills image column c with the values of [n] whose
  // reflections n+1-v it does not use, assigned ascending downward.
  std::map<int, std::vector<std::size_t>> image_columns;
  for (std::size_t i = 0; i < image.cells().size(); ++i)
    image_columns[image.cells()[i].col].push_back(i);
  std::vector<int> values(image.cell_count(), 0);
  for (auto& [col, idx] : image_columns) {
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return image.cells()[a].row < image.cells()[b].row;
    });
    std::vector<bool> taken(n, false);
    const auto& cells = t.shape().cells();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].col == m + 1 - col) {
        int v = t.values()[i];
        if (v > n) fail(ErrorKind::OutOfRange, "entry " + std::to_string(v) + " above n");
        if (taken[n - v]) fail(ErrorKind::InvalidInput, "column repeats an entry");
        taken[n - v] = true;
      }
    std::vector<int> fill;
    for (int v = 1; v <= n; ++v)
      if (!taken[v - 1]) fill.push_back(v);
    if (fill.size() != idx.size())
      fail(ErrorKind::Internal, "complement fill size mismatch");
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (fill[j] > image.cells()[idx[j]].row)
        fail(ErrorKind::Internal, "complement fill breaks the row bound");
      values[idx[j]] = fill[j];
    }
  }
  return Tableau(std::move(image), std::move(values));
}

}  // namespace schublas
