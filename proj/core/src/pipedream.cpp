#include "schublas/pipedream.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "schublas/diagram.hpp"
#include "schublas/errors.hpp"
#include "schublas/limits.hpp"

namespace schublas {

namespace {

struct Edges {
  bool n, s, w, e;
};

constexpr Edges kEdges[] = {
    {false, false, false, false},  // Blank
    {true, true, true, true},      // Cross
    {false, true, false, true},    // ElbowSE
    {true, false, true, false},    // ElbowNW
    {false, false, true, true},    // Horizontal
    {true, true, false, false},    // Vertical
};

Edges edges(Tile t) { return kEdges[static_cast<int>(t)]; }

constexpr Tile kAllTiles[] = {Tile::Blank,   Tile::Cross,      Tile::ElbowSE,
                              Tile::ElbowNW, Tile::Horizontal, Tile::Vertical};

int encode_endpoint(char side, int index) {
  int s = side == 'T' ? 0 : side == 'B' ? 1 : side == 'L' ? 2 : 3;
  return s * 1000000 + index;
}

// Which boundary edges exist and which endpoint pairs the pipes must realize.
struct BoundarySpec {
  int rows = 0;
  int cols = 0;
  std::vector<bool> top, bottom;  // per column
  std::vector<bool> left, right;  // per row
  std::map<int, int> pairing;     // endpoint code -> partner code

  void pair(int a, int b) {
    pairing[a] = b;
    pairing[b] = a;
  }
};

// Union-find over pipe strands with boundary labels and crossing records.
struct StrandState {
  std::vector<int> parent;
  std::vector<std::vector<int>> crossed;  // strand ids (resolve with find)
  std::vector<std::vector<int>> labels;   // endpoint codes, kept at roots
  std::vector<int> col_strand;            // strand dangling south per column
  int west_strand = -1;

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  int make_strand() {
    int id = static_cast<int>(parent.size());
    parent.push_back(id);
    crossed.emplace_back();
    labels.emplace_back();
    return id;
  }

  bool attach_label(int strand, int endpoint, const BoundarySpec& spec) {
    int r = find(strand);
    labels[r].push_back(endpoint);
    if (labels[r].size() > 2) return false;
    if (labels[r].size() == 2) {
      auto it = spec.pairing.find(labels[r][0]);
      if (it == spec.pairing.end() || it->second != labels[r][1]) return false;
    }
    return true;
  }

  bool has_crossed(int root_a, int root_b) {
    for (int x : crossed[root_a])
      if (find(x) == root_b) return true;
    return false;
  }

  bool cross(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;  // a pipe may not cross itself
    if (has_crossed(ra, rb)) return false;
    crossed[ra].push_back(rb);
    crossed[rb].push_back(ra);
    return true;
  }

  bool merge(int a, int b, const BoundarySpec& spec) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;  // would close a loop
    if (has_crossed(ra, rb)) return false;
    for (int x : crossed[ra])
      for (int y : crossed[rb])
        if (find(x) == find(y)) return false;  // would cross a pipe twice
    parent[rb] = ra;
    crossed[ra].insert(crossed[ra].end(), crossed[rb].begin(), crossed[rb].end());
    for (int label : labels[rb]) {
      labels[ra].push_back(label);
      if (labels[ra].size() > 2) return false;
    }
    if (labels[ra].size() == 2) {
      auto it = spec.pairing.find(labels[ra][0]);
      if (it == spec.pairing.end() || it->second != labels[ra][1]) return false;
    }
    return true;
  }
};

// Places tile t at (r, c), threading strands through it. Returns false when
// the placement closes a loop, repeats a crossing, or pairs endpoints wrong.
bool place_tile(StrandState& st, Tile t, int r, int c, const BoundarySpec& spec) {
  bool last_row = (r == spec.rows);
  bool last_col = (c == spec.cols);
  int north = st.col_strand[c - 1];
  int west = st.west_strand;
  Edges ed = edges(t);
  int south_out = -1;
  int east_out = -1;
  switch (t) {
    case Tile::Blank:
      break;
    case Tile::Vertical:
      south_out = north;
      break;
    case Tile::Horizontal:
      east_out = west;
      break;
    case Tile::ElbowSE: {
      int id = st.make_strand();
      south_out = id;
      east_out = id;
      break;
    }
    case Tile::ElbowNW:
      if (!st.merge(north, west, spec)) return false;
      break;
    case Tile::Cross:
      if (!st.cross(north, west)) return false;
      south_out = north;
      east_out = west;
      break;
  }
  if (ed.s && last_row) {
    if (!st.attach_label(south_out, encode_endpoint('B', c), spec)) return false;
    south_out = -1;
  }
  if (ed.e && last_col) {
    if (!st.attach_label(east_out, encode_endpoint('R', r), spec)) return false;
    east_out = -1;
  }
  st.col_strand[c - 1] = south_out;
  st.west_strand = east_out;
  return true;
}

std::vector<PipeGrid> enumerate_grids(const BoundarySpec& spec) {
  std::vector<PipeGrid> results;
  if (spec.rows == 0 || spec.cols == 0) {
    bool any_edge = false;
    for (bool b : spec.top) any_edge |= b;
    for (bool b : spec.bottom) any_edge |= b;
    for (bool b : spec.left) any_edge |= b;
    for (bool b : spec.right) any_edge |= b;
    if (!any_edge) results.emplace_back(spec.rows, spec.cols);
    return results;
  }

  StrandState initial;
  initial.col_strand.assign(spec.cols, -1);
  std::vector<int> left_seed(spec.rows, -1);
  for (int c = 1; c <= spec.cols; ++c)
    if (spec.top[c - 1]) {
      int id = initial.make_strand();
      initial.labels[id].push_back(encode_endpoint('T', c));
      initial.col_strand[c - 1] = id;
    }
  for (int r = 1; r <= spec.rows; ++r)
    if (spec.left[r - 1]) {
      int id = initial.make_strand();
      initial.labels[id].push_back(encode_endpoint('L', r));
      left_seed[r - 1] = id;
    }

  PipeGrid grid(spec.rows, spec.cols);
  std::size_t nodes = 0;
  auto dfs = [&](auto&& self, int pos, const StrandState& state) -> void {
    if (pos == spec.rows * spec.cols) {
      results.push_back(grid);
      limits::check_term_count(results.size(), "grid enumeration");
      return;
    }
    int r = pos / spec.cols + 1;
    int c = pos % spec.cols + 1;
    bool need_n = (r == 1) ? spec.top[c - 1] : tile_has_south(grid.at(r - 1, c));
    bool need_w;
    if (c == 1) {
      need_w = spec.left[r - 1];
    } else {
      need_w = tile_has_east(grid.at(r, c - 1));
    }
    for (Tile t : kAllTiles) {
      Edges ed = edges(t);
      if (ed.n != need_n || ed.w != need_w) continue;
      if (r == spec.rows && ed.s != spec.bottom[c - 1]) continue;
      if (c == spec.cols && ed.e != spec.right[r - 1]) continue;
      limits::check_term_count(++nodes, "grid search");
      StrandState next = state;
      if (c == 1) next.west_strand = left_seed[r - 1];
      if (!place_tile(next, t, r, c, spec)) continue;
      grid.set(r, c, t);
      self(self, pos + 1, next);
    }
  };
  dfs(dfs, 0, initial);
  return results;
}

BoundarySpec square_spec(const Permutation& w, int n) {
  if (n < w.size())
    fail(ErrorKind::InvalidInput,
         "grid size " + std::to_string(n) + " below permutation size " + w.str());
  BoundarySpec spec;
  spec.rows = spec.cols = n;
  spec.top.assign(n, false);
  spec.left.assign(n, false);
  spec.bottom.assign(n, true);
  spec.right.assign(n, true);
  for (int r = 1; r <= n; ++r)
    spec.pair(encode_endpoint('B', w(r)), encode_endpoint('R', r));
  return spec;
}

BoundarySpec left_to_top_spec(const WeakComposition& alpha) {
  if (!alpha.is_snowy()) fail(ErrorKind::NotSnowy, "grids of " + alpha.str());
  BoundarySpec spec;
  spec.rows = alpha.size();
  spec.cols = alpha.max_entry();
  spec.top.assign(spec.cols, false);
  spec.left.assign(spec.rows, false);
  spec.bottom.assign(spec.cols, false);
  spec.right.assign(spec.rows, false);
  for (int r = 1; r <= spec.rows; ++r)
    if (alpha.at(r) > 0) {
      spec.top[alpha.at(r) - 1] = true;
      spec.left[r - 1] = true;
      spec.pair(encode_endpoint('L', r), encode_endpoint('T', alpha.at(r)));
    }
  return spec;
}

}  // namespace

char tile_char(Tile t) {
  static const char kChars[] = {'.', '+', 'r', 'j', '-', '|'};
  return kChars[static_cast<int>(t)];
}

Tile tile_from_char(char c) {
  switch (c) {
    case '.': return Tile::Blank;
    case '+': return Tile::Cross;
    case 'r': return Tile::ElbowSE;
    case 'j': return Tile::ElbowNW;
    case '-': return Tile::Horizontal;
    case '|': return Tile::Vertical;
  }
  fail(ErrorKind::InvalidInput, std::string("tile character '") + c + "'");
}

bool tile_has_north(Tile t) { return edges(t).n; }
bool tile_has_south(Tile t) { return edges(t).s; }
bool tile_has_west(Tile t) { return edges(t).w; }
bool tile_has_east(Tile t) { return edges(t).e; }

PipeGrid::PipeGrid(int rows, int cols, Tile fill) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0 || (rows == 0) != (cols == 0))
    fail(ErrorKind::InvalidInput, "grid dimensions " + std::to_string(rows) + "x" +
                                      std::to_string(cols));
  tiles_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

PipeGrid PipeGrid::parse(const std::vector<std::string>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  PipeGrid g(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(ErrorKind::InvalidInput, "grid rows differ in length");
    for (int j = 0; j < c; ++j) g.set(i + 1, j + 1, tile_from_char(rows[i][j]));
  }
  return g;
}

Tile PipeGrid::at(int r, int c) const {
  if (r < 1 || r > rows_ || c < 1 || c > cols_)
    fail(ErrorKind::OutOfRange, "grid position (" + std::to_string(r) + "," +
                                    std::to_string(c) + ")");
  return tiles_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)];
}

void PipeGrid::set(int r, int c, Tile t) {
  if (r < 1 || r > rows_ || c < 1 || c > cols_)
    fail(ErrorKind::OutOfRange, "grid position (" + std::to_string(r) + "," +
                                    std::to_string(c) + ")");
  tiles_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)] = t;
}

std::vector<std::string> PipeGrid::render_ascii() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (int r = 1; r <= rows_; ++r) {
    std::string line;
    for (int c = 1; c <= cols_; ++c) line += tile_char(at(r, c));
    out.push_back(std::move(line));
  }
  return out;
}

std::string PipeGrid::to_json() const {
  nlohmann::json out;
  out["rows"] = rows_;
  out["cols"] = cols_;
  out["tiles"] = render_ascii();
  try {
    nlohmann::json pipes = nlohmann::json::array();
    for (const auto& [entry, exit] : trace_pipes(*this)) {
      nlohmann::json pipe;
      pipe["entry"] = {std::string(1, entry.side), entry.index};
      pipe["exit"] = {std::string(1, exit.side), exit.index};
      pipes.push_back(std::move(pipe));
    }
    out["boundary"] = {{"pipes", std::move(pipes)}};
  } catch (const SchubError&) {
    // Untraceable grids serialize without a boundary.
  }
  return out.dump();
}

PipeGrid PipeGrid::from_json(std::string_view text) {
  nlohmann::json in = nlohmann::json::parse(text, nullptr, false);
  if (in.is_discarded() || !in.is_object() || !in.contains("tiles") ||
      !in["tiles"].is_array())
    fail(ErrorKind::InvalidInput, "grid JSON must carry a \"tiles\" array");
  std::vector<std::string> rows;
  for (const auto& row : in["tiles"]) {
    if (!row.is_string()) fail(ErrorKind::InvalidInput, "grid row must be a string");
    rows.push_back(row.get<std::string>());
  }
  PipeGrid g = parse(rows);
  if (in.contains("rows") && in["rows"].is_number_integer() &&
      in["rows"].get<int>() != g.rows())
    fail(ErrorKind::InvalidInput, "grid JSON row count does not match tiles");
  if (in.contains("cols") && in["cols"].is_number_integer() &&
      in["cols"].get<int>() != g.cols())
    fail(ErrorKind::InvalidInput, "grid JSON column count does not match tiles");
  return g;
}

std::vector<PipeGrid> bpd_list(const Permutation& w, int n) {
  return enumerate_grids(square_spec(w, n));
}

std::vector<PipeGrid> bpd_list(const Permutation& w) {
  return bpd_list(w, std::max(w.size(), 1));
}

std::vector<PipeGrid> ltbpd_list(const WeakComposition& alpha) {
  return enumerate_grids(left_to_top_spec(alpha));
}

WeakComposition bpd_weight(const PipeGrid& g) {
  std::vector<int> counts(g.rows(), 0);
  for (int r = 1; r <= g.rows(); ++r)
    for (int c = 1; c <= g.cols(); ++c)
      if (g.at(r, c) == Tile::Blank) ++counts[r - 1];
  return WeakComposition(std::move(counts));
}

WeakComposition ltbpd_weight(const PipeGrid& g) {
  std::vector<int> counts(g.rows(), 0);
  for (int r = 1; r <= g.rows(); ++r)
    for (int c = 1; c <= g.cols(); ++c)
      if (g.at(r, c) != Tile::Blank) ++counts[r - 1];
  return WeakComposition(std::move(counts));
}

Polynomial bpd_polynomial(const Permutation& w) {
  Polynomial out;
  for (const PipeGrid& g : bpd_list(w)) out.add_term(bpd_weight(g), 1);
  return out;
}

Polynomial ltbpd_polynomial(const WeakComposition& alpha) {
  Polynomial out;
  for (const PipeGrid& g : ltbpd_list(alpha)) out.add_term(ltbpd_weight(g), 1);
  return out;
}

namespace {

bool edges_consistent(const PipeGrid& g) {
  for (int r = 1; r <= g.rows(); ++r)
    for (int c = 1; c <= g.cols(); ++c) {
      if (r < g.rows() && tile_has_south(g.at(r, c)) != tile_has_north(g.at(r + 1, c)))
        return false;
      if (c < g.cols() && tile_has_east(g.at(r, c)) != tile_has_west(g.at(r, c + 1)))
        return false;
    }
  return true;
}

struct TraceResult {
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> pairs;
  bool crossings_ok = true;  // every pair of pipes crosses at most once
};

// Follows every pipe from its boundary entry. Requires consistent edges.
TraceResult trace_consistent(const PipeGrid& g) {
  TraceResult result;
  // Boundary entries, deterministic order: top, left, bottom, right.
  std::vector<std::pair<BoundaryPoint, std::pair<Cell, char>>> starts;
  for (int c = 1; c <= g.cols(); ++c)
    if (g.rows() > 0 && tile_has_north(g.at(1, c)))
      starts.push_back({{'T', c}, {{1, c}, 'N'}});
  for (int r = 1; r <= g.rows(); ++r)
    if (g.cols() > 0 && tile_has_west(g.at(r, 1)))
      starts.push_back({{'L', r}, {{r, 1}, 'W'}});
  for (int c = 1; c <= g.cols(); ++c)
    if (g.rows() > 0 && tile_has_south(g.at(g.rows(), c)))
      starts.push_back({{'B', c}, {{g.rows(), c}, 'S'}});
  for (int r = 1; r <= g.rows(); ++r)
    if (g.cols() > 0 && tile_has_east(g.at(r, g.cols())))
      starts.push_back({{'R', r}, {{r, g.cols()}, 'E'}});

  std::map<BoundaryPoint, bool> visited;
  // Pipe index per directed pass through a cell, split by orientation.
  std::map<std::pair<Cell, char>, int> pass;  // char: 'V' or 'H'
  int pipe_index = 0;
  for (const auto& [entry, start] : starts) {
    if (visited[entry]) continue;
    visited[entry] = true;
    Cell cell = start.first;
    char enter = start.second;
    BoundaryPoint exit_point{};
    while (true) {
      Tile t = g.at(cell.row, cell.col);
      char leave = 0;
      switch (t) {
        case Tile::Vertical: leave = (enter == 'N') ? 'S' : 'N'; break;
        case Tile::Horizontal: leave = (enter == 'W') ? 'E' : 'W'; break;
        case Tile::ElbowSE: leave = (enter == 'S') ? 'E' : 'S'; break;
        case Tile::ElbowNW: leave = (enter == 'N') ? 'W' : 'N'; break;
        case Tile::Cross: leave = (enter == 'N') ? 'S' : (enter == 'S') ? 'N'
                                  : (enter == 'W') ? 'E' : 'W'; break;
        default: fail(ErrorKind::Internal, "pipe entered a blank tile");
      }
      char orientation = (leave == 'N' || leave == 'S') ? 'V' : 'H';
      pass[{cell, orientation}] = pipe_index;
      bool out_of_grid = false;
      Cell next = cell;
      char next_enter = 0;
      switch (leave) {
        case 'N': next.row -= 1; next_enter = 'S'; out_of_grid = next.row < 1; break;
        case 'S': next.row += 1; next_enter = 'N'; out_of_grid = next.row > g.rows(); break;
        case 'W': next.col -= 1; next_enter = 'E'; out_of_grid = next.col < 1; break;
        case 'E': next.col += 1; next_enter = 'W'; out_of_grid = next.col > g.cols(); break;
      }
      if (out_of_grid) {
        switch (leave) {
          case 'N': exit_point = {'T', cell.col}; break;
          case 'S': exit_point = {'B', cell.col}; break;
          case 'W': exit_point = {'L', cell.row}; break;
          case 'E': exit_point = {'R', cell.row}; break;
        }
        break;
      }
      cell = next;
      enter = next_enter;
    }
    visited[exit_point] = true;
    result.pairs.push_back({entry, exit_point});
    ++pipe_index;
  }

  std::map<std::pair<int, int>, int> pair_crossings;
  for (int r = 1; r <= g.rows(); ++r)
    for (int c = 1; c <= g.cols(); ++c)
      if (g.at(r, c) == Tile::Cross) {
        int v = pass[{{r, c}, 'V'}];
        int h = pass[{{r, c}, 'H'}];
        auto key = std::minmax(v, h);
        if (v == h || ++pair_crossings[{key.first, key.second}] > 1)
          result.crossings_ok = false;
      }
  return result;
}

}  // namespace

std::vector<std::pair<BoundaryPoint, BoundaryPoint>> trace_pipes(const PipeGrid& g) {
  if (!edges_consistent(g)) fail(ErrorKind::InvalidInput, "grid edges do not match up");
  return trace_consistent(g).pairs;
}

bool is_bpd_of(const PipeGrid& g, const Permutation& w) {
  int n = g.rows();
  if (g.cols() != n || n < w.size()) return false;
  if (!edges_consistent(g)) return false;
  for (int c = 1; c <= n; ++c)
    if (tile_has_north(g.at(1, c)) || !tile_has_south(g.at(n, c))) return false;
  for (int r = 1; r <= n; ++r)
    if (tile_has_west(g.at(r, 1)) || !tile_has_east(g.at(r, n))) return false;
  TraceResult trace = trace_consistent(g);
  if (!trace.crossings_ok) return false;
  for (const auto& [entry, exit] : trace.pairs) {
    // Entries are enumerated bottom side first among B/R pairs, so entry is
    // the bottom endpoint here.
    if (entry.side != 'B' || exit.side != 'R') return false;
    if (w(exit.index) != entry.index) return false;
  }
  return static_cast<int>(trace.pairs.size()) == n;
}

bool is_ltbpd_of(const PipeGrid& g, const WeakComposition& alpha) {
  if (!alpha.is_snowy()) return false;
  if (g.rows() != alpha.size() || g.cols() != alpha.max_entry()) return false;
  if (!edges_consistent(g)) return false;
  for (int c = 1; c <= g.cols(); ++c) {
    bool wanted = false;
    for (int r = 1; r <= g.rows(); ++r) wanted |= (alpha.at(r) == c);
    if (g.rows() > 0 && tile_has_north(g.at(1, c)) != wanted) return false;
    if (g.rows() > 0 && tile_has_south(g.at(g.rows(), c))) return false;
  }
  for (int r = 1; r <= g.rows(); ++r) {
    if (g.cols() > 0 && tile_has_west(g.at(r, 1)) != (alpha.at(r) > 0)) return false;
    if (g.cols() > 0 && tile_has_east(g.at(r, g.cols()))) return false;
  }
  TraceResult trace = trace_consistent(g);
  if (!trace.crossings_ok) return false;
  int pipes = 0;
  for (const auto& [entry, exit] : trace.pairs) {
    char a = entry.side, b = exit.side;
    int ltrow = (a == 'L') ? entry.index : (b == 'L') ? exit.index : 0;
    int topcol = (a == 'T') ? entry.index : (b == 'T') ? exit.index : 0;
    if (ltrow == 0 || topcol == 0) return false;
    if (alpha.at(ltrow) != topcol) return false;
    ++pipes;
  }
  int expected = 0;
  for (int r = 1; r <= alpha.size(); ++r)
    if (alpha.at(r) > 0) ++expected;
  return pipes == expected;
}

PipeGrid rotate_subgrid(const PipeGrid& g, int m, int n) {
  if (n < 0 || n > g.rows() || m < 0 || m > g.cols())
    fail(ErrorKind::OutOfRange, "subgrid " + std::to_string(n) + "x" + std::to_string(m));
  if ((n == 0) != (m == 0)) fail(ErrorKind::OutOfRange, "degenerate subgrid");
  PipeGrid out(n, m);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= m; ++c) {
      Tile t = g.at(n + 1 - r, m + 1 - c);
      if (t == Tile::ElbowSE) t = Tile::ElbowNW;
      else if (t == Tile::ElbowNW) t = Tile::ElbowSE;
      out.set(r, c, t);
    }
  if (!edges_consistent(out))
    fail(ErrorKind::InvalidSubgrid, "rotated subgrid has mismatched edges");
  // The rotation must be a left-to-top grid of the composition its pipes
  // trace, in the exact dimensions used for that composition's grids.
  std::vector<int> alpha(n, 0);
  TraceResult trace = trace_consistent(out);
  if (!trace.crossings_ok)
    fail(ErrorKind::InvalidSubgrid, "rotated subgrid crosses a pair of pipes twice");
  for (const auto& [entry, exit] : trace.pairs) {
    char a = entry.side, b = exit.side;
    int ltrow = (a == 'L') ? entry.index : (b == 'L') ? exit.index : 0;
    int topcol = (a == 'T') ? entry.index : (b == 'T') ? exit.index : 0;
    if (ltrow == 0 || topcol == 0)
      fail(ErrorKind::InvalidSubgrid, "rotated subgrid pipe does not run left to top");
    if (alpha[ltrow - 1] != 0)
      fail(ErrorKind::InvalidSubgrid, "rotated subgrid reuses a row");
    alpha[ltrow - 1] = topcol;
  }
  WeakComposition traced(std::move(alpha));
  if (!is_ltbpd_of(out, traced))
    fail(ErrorKind::InvalidSubgrid, "rotated subgrid is not a grid of " + traced.str());
  return out;
}

}  // namespace schublas
