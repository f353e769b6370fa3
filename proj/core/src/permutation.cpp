#include "schublas/permutation.hpp"

#include <algorithm>
#include <charconv>

#include "schublas/errors.hpp"

namespace schublas {

namespace {

void validate_one_line(const std::vector<int>& v) {
  std::vector<bool> seen(v.size(), false);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[x - 1])
      fail(ErrorKind::InvalidCode, "not a permutation one-line word");
    seen[x - 1] = true;
  }
}

void trim_fixed_points(std::vector<int>& v) {
  while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  validate_one_line(one_line_);
  trim_fixed_points(one_line_);
}

Permutation::Permutation(std::initializer_list<int> one_line)
    : Permutation(std::vector<int>(one_line)) {}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t stop = end;
    while (stop > pos && text[stop - 1] == ' ') --stop;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + stop, value);
    if (ec != std::errc() || ptr != text.data() + stop)
      fail(ErrorKind::InvalidInput, "permutation '" + std::string(text) + "'");
    values.push_back(value);
    pos = end + 1;
  }
  return Permutation(std::move(values));
}

int Permutation::operator()(int i) const {
  if (i < 1) fail(ErrorKind::OutOfRange, "permutation argument " + std::to_string(i));
  return i <= size() ? one_line_[i - 1] : i;
}

int Permutation::size() const { return static_cast<int>(one_line_.size()); }

Permutation Permutation::right_multiplied(int i) const {
  if (i < 1) fail(ErrorKind::OutOfRange, "transposition index " + std::to_string(i));
  int n = std::max(size(), i + 1);
  std::vector<int> v(n);
  for (int k = 1; k <= n; ++k) v[k - 1] = (*this)(k);
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(one_line_.size());
  for (int i = 1; i <= size(); ++i) v[one_line_[i - 1] - 1] = i;
  return Permutation(std::move(v));
}

long long Permutation::inversions() const {
  long long count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (one_line_[i] > one_line_[j]) ++count;
  return count;
}

std::string Permutation::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(one_line_[i]);
  }
  out += "]";
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& w) const {
  std::size_t h = 0xc2b2ae3d27d4eb4full;
  for (int e : w.one_line()) h = h * 1099511628211ull + static_cast<std::size_t>(e);
  return h;
}

WeakComposition invcode(const Permutation& w) {
  const auto& v = w.one_line();
  std::vector<int> code(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] < v[i]) ++code[i];
  return WeakComposition(std::move(code));
}

bool is_dominant(const Permutation& w) { return invcode(w).is_partition(); }

Permutation code_to_perm(const WeakComposition& code) {
  int n = code.size();
  // Values beyond n + max(code) can never be selected.
  int pool = n + code.max_entry() + 1;
  std::vector<bool> used(pool, false);
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    int want = code.entries()[i];  // skip this many unused values
    int value = 0;
    for (int x = 1; x <= pool; ++x) {
      if (used[x - 1]) continue;
      if (want == 0) {
        value = x;
        break;
      }
      --want;
    }
    used[value - 1] = true;
    v[i] = value;
  }
  // Fill the tail with the remaining values ascending; they add no
  // inversions, so the code is preserved.
  int top = 0;
  for (int i = 0; i < n; ++i) top = std::max(top, v[i]);
  std::vector<int> tail;
  for (int x = 1; x <= top; ++x)
    if (!used[x - 1]) tail.push_back(x);
  v.insert(v.end(), tail.begin(), tail.end());
  return Permutation(std::move(v));
}

Permutation standardize(const WeakComposition& alpha, int m, int n) {
  if (!alpha.is_snowy()) fail(ErrorKind::NotSnowy, "standardize of " + alpha.str());
  if (alpha.max_entry() > m || alpha.size() > n)
    fail(ErrorKind::OutOfRange, "composition " + alpha.str() + " exceeds the " +
                                    std::to_string(m) + "x" + std::to_string(n) +
                                    " box");
  WeakComposition rho = reverse_complement(alpha, m + 1, n);  // entries in [1, m+1]
  std::vector<int> v(n);
  int next_big = m;
  for (int i = 1; i <= n; ++i) {
    int r = rho.at(i);
    v[i - 1] = (r <= m) ? r : ++next_big;
  }
  // Remaining values ascending after position n.
  std::vector<bool> used(next_big, false);
  for (int x : v) used[x - 1] = true;
  for (int x = 1; x <= next_big; ++x)
    if (!used[x - 1]) v.push_back(x);
  return Permutation(std::move(v));
}

std::optional<WeakComposition> standardize_inverse(const Permutation& w, int m,
                                                   int n) {
  if (m < 0 || n < 0) return std::nullopt;
  std::vector<int> rho(n);
  for (int i = 1; i <= n; ++i) rho[i - 1] = std::min(w(i), m + 1);
  WeakComposition alpha;
  try {
    alpha = reverse_complement(WeakComposition(std::move(rho)), m + 1, n);
  } catch (const SchubError&) {
    return std::nullopt;
  }
  if (!alpha.is_snowy()) return std::nullopt;
  if (!(standardize(alpha, m, n) == w)) return std::nullopt;
  return alpha;
}

}  // namespace schublas
