#include "schublas/snp.hpp"

#include <set>
#include <vector>

#include "schublas/errors.hpp"
#include "schublas/limits.hpp"

namespace schublas {

namespace {

// Phase-1 simplex with Bland's rule over exact rationals.  Decides whether
// sum(lambda_j * q_j) = p, sum(lambda_j) = 1, lambda >= 0 is feasible.
bool hull_feasible(const std::vector<std::vector<long long>>& pts,
                   const std::vector<long long>& p) {
  if (pts.empty()) return false;
  const std::size_t dim = p.size();
  const std::size_t rows = dim + 1;          // coordinates plus the sum-to-one row
  const std::size_t vars = pts.size();
  const std::size_t cols = vars + rows + 1;  // lambdas, artificials, rhs

  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    Rational b = (i < dim) ? Rational(p[i]) : Rational(1);
    for (std::size_t j = 0; j < vars; ++j)
      t[i][j] = (i < dim) ? Rational(pts[j][i]) : Rational(1);
    if (b < 0) {
      b = -b;
      for (std::size_t j = 0; j < vars; ++j) t[i][j] = -t[i][j];
    }
    t[i][vars + i] = 1;
    t[i][cols - 1] = b;
  }

  // Reduced-cost row for minimizing the artificial sum, canonicalized
  // against the all-artificial starting basis.
  std::vector<Rational> obj(cols, Rational(0));
  for (std::size_t j = 0; j < rows; ++j) obj[vars + j] = 1;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= t[i][j];

  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = vars + i;

  long long steps = 0;
  for (;;) {
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (obj[j] < 0) {
        enter = j;  // Bland: smallest eligible index
        break;
      }
    }
    if (enter == cols - 1) break;

    std::size_t leave = rows;
    Rational best(0);
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) fail(ErrorKind::Internal, "phase-1 objective unbounded");

    Rational pivot = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    limits::check_step_count(static_cast<std::size_t>(++steps), "simplex pivots");
  }

  return -obj[cols - 1] == 0;  // optimum artificial sum
}

}  // namespace

bool in_convex_hull(const std::vector<WeakComposition>& points,
                    const WeakComposition& point) {
  int dim = static_cast<int>(point.size());
  for (const auto& q : points) dim = std::max(dim, static_cast<int>(q.size()));

  std::vector<std::vector<long long>> pts;
  pts.reserve(points.size());
  for (const auto& q : points) {
    std::vector<long long> row(static_cast<std::size_t>(dim));
    for (int i = 1; i <= dim; ++i) row[static_cast<std::size_t>(i - 1)] = q.at(i);
    pts.push_back(std::move(row));
  }
  std::vector<long long> p(static_cast<std::size_t>(dim));
  for (int i = 1; i <= dim; ++i) p[static_cast<std::size_t>(i - 1)] = point.at(i);
  return hull_feasible(pts, p);
}

SnpReport check_snp(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "snp check needs a nonzero input");
  SnpReport report;
  report.saturated = true;
  report.candidates_checked = 0;

  std::vector<WeakComposition> support = f.support();
  std::set<WeakComposition, TailLexGreater> in_support(support.begin(), support.end());

  long long degree = 0;
  bool homogeneous = f.is_homogeneous(&degree);
  int dim = f.max_variable();

  std::vector<long long> lo(static_cast<std::size_t>(dim), 0);
  std::vector<long long> hi(static_cast<std::size_t>(dim), 0);
  for (int i = 1; i <= dim; ++i) {
    long long mn = support.front().at(i);
    long long mx = mn;
    for (const auto& e : support) {
      mn = std::min(mn, static_cast<long long>(e.at(i)));
      mx = std::max(mx, static_cast<long long>(e.at(i)));
    }
    lo[static_cast<std::size_t>(i - 1)] = mn;
    hi[static_cast<std::size_t>(i - 1)] = mx;
  }

  Integer box_size = 1;
  for (int i = 1; i <= dim; ++i)
    box_size *= Integer(hi[static_cast<std::size_t>(i - 1)] -
                        lo[static_cast<std::size_t>(i - 1)] + 1);
  if (box_size > Integer(limits::term_limit()))
    fail(ErrorKind::ResourceLimit,
         "lattice candidate box holds " + box_size.str() + " points, limit " +
             std::to_string(limits::term_limit()));

  // Suffix degree bounds prune the homogeneous enumeration.
  std::vector<long long> suf_lo(static_cast<std::size_t>(dim) + 1, 0);
  std::vector<long long> suf_hi(static_cast<std::size_t>(dim) + 1, 0);
  for (int i = dim; i >= 1; --i) {
    suf_lo[static_cast<std::size_t>(i - 1)] =
        suf_lo[static_cast<std::size_t>(i)] + lo[static_cast<std::size_t>(i - 1)];
    suf_hi[static_cast<std::size_t>(i - 1)] =
        suf_hi[static_cast<std::size_t>(i)] + hi[static_cast<std::size_t>(i - 1)];
  }

  // Candidates ascend in plain lex order (coordinate 1 most significant), so
  // the reported witness is the lex-least missing lattice point.
  std::vector<int> current(static_cast<std::size_t>(dim), 0);
  bool done = false;
  auto walk = [&](auto&& self, int coord, long long used) -> void {
    if (done) return;
    if (coord > dim) {
      if (homogeneous && used != degree) return;
      limits::check_term_count(static_cast<std::size_t>(++report.candidates_checked),
                               "lattice candidates");
      WeakComposition cand(current);
      if (in_support.count(cand)) return;
      if (in_convex_hull(support, cand)) {
        report.saturated = false;
        report.witness = cand;
        done = true;
      }
      return;
    }
    std::size_t k = static_cast<std::size_t>(coord - 1);
    for (long long v = lo[k]; v <= hi[k] && !done; ++v) {
      if (homogeneous) {
        long long rest = degree - used - v;
        if (rest < suf_lo[k + 1] || rest > suf_hi[k + 1]) continue;
      }
      current[k] = static_cast<int>(v);
      self(self, coord + 1, used + v);
    }
  };
  walk(walk, 1, 0);
  return report;
}

}  // namespace schublas
