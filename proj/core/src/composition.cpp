#include "schublas/composition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "schublas/errors.hpp"

namespace schublas {

namespace {

void normalize(std::vector<int>& entries) {
  while (!entries.empty() && entries.back() == 0) entries.pop_back();
}

}  // namespace

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) fail(ErrorKind::InvalidInput, "negative composition entry " + std::to_string(e));
  normalize(entries_);
}

WeakComposition::WeakComposition(std::initializer_list<int> entries)
    : WeakComposition(std::vector<int>(entries)) {}

WeakComposition WeakComposition::parse(std::string_view text) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t stop = end;
    while (stop > pos && text[stop - 1] == ' ') --stop;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + stop, value);
    if (ec != std::errc() || ptr != text.data() + stop || value < 0)
      fail(ErrorKind::InvalidInput, "composition '" + std::string(text) + "'");
    entries.push_back(value);
    pos = end + 1;
  }
  return WeakComposition(std::move(entries));
}

int WeakComposition::at(int i) const {
  if (i < 1) fail(ErrorKind::OutOfRange, "composition index " + std::to_string(i));
  return i <= size() ? entries_[i - 1] : 0;
}

int WeakComposition::size() const { return static_cast<int>(entries_.size()); }

long long WeakComposition::total() const {
  long long sum = 0;
  for (int e : entries_) sum += e;
  return sum;
}

int WeakComposition::max_entry() const {
  int best = 0;
  for (int e : entries_) best = std::max(best, e);
  return best;
}

bool WeakComposition::is_snowy() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i] > 0 && entries_[i] == entries_[j]) return false;
  return true;
}

bool WeakComposition::is_partition() const {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1] < entries_[i]) return false;
  return true;
}

WeakComposition WeakComposition::with(int i, int value) const {
  if (i < 1) fail(ErrorKind::OutOfRange, "composition index " + std::to_string(i));
  std::vector<int> entries = entries_;
  if (static_cast<std::size_t>(i) > entries.size()) entries.resize(i, 0);
  entries[i - 1] = value;
  return WeakComposition(std::move(entries));
}

WeakComposition WeakComposition::swapped(int i) const {
  return with(i, at(i + 1)).with(i + 1, at(i));
}

WeakComposition WeakComposition::sorted_descending() const {
  std::vector<int> entries = entries_;
  std::sort(entries.begin(), entries.end(), std::greater<int>());
  return WeakComposition(std::move(entries));
}

std::string WeakComposition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  out += ")";
  return out;
}

int tail_lex_compare(const WeakComposition& a, const WeakComposition& b) {
  int n = std::max(a.size(), b.size());
  for (int i = n; i >= 1; --i) {
    int da = a.at(i), db = b.at(i);
    if (da != db) return da < db ? -1 : 1;
  }
  return 0;
}

std::size_t WeakCompositionHash::operator()(const WeakComposition& c) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int e : c.entries()) h = h * 1099511628211ull + static_cast<std::size_t>(e) + 1;
  return h;
}

WeakComposition rajcode(const WeakComposition& alpha) {
  if (!alpha.is_snowy()) fail(ErrorKind::NotSnowy, "rajcode of " + alpha.str());
  const auto& a = alpha.entries();
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int bigger = 0;
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[j] > a[i]) ++bigger;
    out[i] = a[i] + bigger;
  }
  return WeakComposition(std::move(out));
}

WeakComposition rajcode_inverse(const WeakComposition& rho) {
  const auto& r = rho.entries();
  std::vector<int> alpha(r.size(), 0);
  std::vector<bool> used;  // positive suffix values, 1-based
  for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) {
    // f(v) = v + #{suffix entries > v} is strictly increasing over candidate
    // values (0 or unused positives), so the preimage entry is unique.
    bool found = false;
    for (int v = 0; v <= r[i]; ++v) {
      if (v > 0 && static_cast<std::size_t>(v) <= used.size() && used[v - 1]) continue;
      int bigger = 0;
      for (int j = i + 1; j < static_cast<int>(r.size()); ++j)
        if (alpha[j] > v) ++bigger;
      if (v + bigger == r[i]) {
        alpha[i] = v;
        if (v > 0) {
          if (static_cast<std::size_t>(v) > used.size()) used.resize(v, false);
          used[v - 1] = true;
        }
        found = true;
        break;
      }
    }
    if (!found) fail(ErrorKind::NotInImage, "no snowy preimage of " + rho.str());
  }
  WeakComposition result(std::move(alpha));
  if (rajcode(result) != rho) fail(ErrorKind::NotInImage, "no snowy preimage of " + rho.str());
  return result;
}

WeakComposition reverse_complement(const WeakComposition& alpha, int m, int n) {
  if (m < 0 || n < 0) fail(ErrorKind::OutOfRange, "box " + std::to_string(m) + "x" + std::to_string(n));
  if (alpha.size() > n || alpha.max_entry() > m)
    fail(ErrorKind::OutOfRange,
         alpha.str() + " outside box m=" + std::to_string(m) + " n=" + std::to_string(n));
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = m - alpha.at(n + 1 - i);
  return WeakComposition(std::move(out));
}

}  // namespace schublas
