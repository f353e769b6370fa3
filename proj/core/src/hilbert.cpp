#include "schublas/hilbert.hpp"

#include <algorithm>

#include "schublas/errors.hpp"
#include "schublas/limits.hpp"

namespace schublas {

std::vector<Integer> snowy_degree_series(int max_degree) {
  if (max_degree < 0) fail(ErrorKind::OutOfRange, "max degree must be nonnegative");
  std::size_t n = static_cast<std::size_t>(max_degree) + 1;
  std::vector<Integer> series(n, 0);
  series[0] = 1;
  // Factor for value m contributes 1 + q^m + q^(m+1) + ...; values above the
  // truncation degree only contribute their constant term.
  for (int m = 1; m <= max_degree; ++m) {
    std::vector<Integer> next(n, 0);
    for (std::size_t d = 0; d < n; ++d) {
      if (series[d] == 0) continue;
      next[d] += series[d];
      for (std::size_t k = d + static_cast<std::size_t>(m); k < n; ++k)
        next[k] += series[d];
    }
    series.swap(next);
  }
  return series;
}

std::vector<WeakComposition> snowy_by_degree(int degree) {
  if (degree < 0) fail(ErrorKind::OutOfRange, "degree must be nonnegative");
  std::vector<WeakComposition> out;
  if (degree == 0) {
    out.emplace_back(std::vector<int>{});
    return out;
  }

  // rajcode_i = alpha_i + #{j > i : alpha_j > alpha_i} depends only on the
  // entries to the right, so building right to left lets each placement pay
  // its exact rajcode contribution.  The first placement is the (positive)
  // last entry; after that every zero still sees a larger entry to its
  // right, so every step costs at least 1 and depth is bounded by degree.
  std::vector<int> suffix;  // reversed: suffix[0] is the last entry
  long long nodes = 0;
  auto extend = [&](auto&& self, int remaining) -> void {
    limits::check_step_count(static_cast<std::size_t>(++nodes), "snowy enumeration");
    if (remaining == 0) {
      std::vector<int> entries(suffix.rbegin(), suffix.rend());
      out.emplace_back(std::move(entries));
      limits::check_term_count(out.size(), "snowy enumeration");
      return;
    }
    int lo = suffix.empty() ? 1 : 0;  // trailing entry must be positive
    for (int v = remaining; v >= lo; --v) {
      if (v > 0) {
        bool used = false;
        for (int s : suffix)
          if (s == v) {
            used = true;
            break;
          }
        if (used) continue;
      }
      int cost = v;
      for (int s : suffix)
        if (s > v) ++cost;
      if (cost > remaining || cost == 0) continue;
      suffix.push_back(v);
      self(self, remaining - cost);
      suffix.pop_back();
    }
  };
  extend(extend, degree);

  std::sort(out.begin(), out.end(), TailLexGreater{});
  return out;
}

}  // namespace schublas
