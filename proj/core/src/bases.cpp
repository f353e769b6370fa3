#include "schublas/bases.hpp"

#include <list>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "schublas/errors.hpp"
#include "schublas/limits.hpp"

namespace schublas {

namespace {

// Mutex-protected LRU cache. Lookups and inserts lock; computation happens
// outside the lock, so concurrent recomputation is possible but harmless.
template <typename Key, typename Hash>
class LruCache {
 public:
  bool get(const Key& key, Polynomial& out) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = index_.find(key);
    if (it == index_.end()) return false;
    order_.splice(order_.begin(), order_, it->second);
    out = it->second->second;
    return true;
  }

  void put(const Key& key, const Polynomial& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = index_.find(key);
    if (it != index_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(key, value);
    index_[key] = order_.begin();
    while (index_.size() > limits::cache_entries()) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    order_.clear();
    index_.clear();
  }

  std::size_t size() {
    std::lock_guard<std::mutex> lock(mutex_);
    return index_.size();
  }

 private:
  std::mutex mutex_;
  std::list<std::pair<Key, Polynomial>> order_;
  std::unordered_map<Key, typename std::list<std::pair<Key, Polynomial>>::iterator, Hash>
      index_;
};

LruCache<Permutation, PermutationHash>& schubert_cache() {
  static LruCache<Permutation, PermutationHash> cache;
  return cache;
}

LruCache<WeakComposition, WeakCompositionHash>& key_cache() {
  static LruCache<WeakComposition, WeakCompositionHash> cache;
  return cache;
}

LruCache<WeakComposition, WeakCompositionHash>& top_lascoux_cache() {
  static LruCache<WeakComposition, WeakCompositionHash> cache;
  return cache;
}

int smallest_ascent(const Permutation& w) {
  for (int i = 1; i < w.size(); ++i)
    if (w(i) < w(i + 1)) return i;
  return 0;
}

int smallest_ascent(const WeakComposition& alpha) {
  for (int i = 1; i < alpha.size(); ++i)
    if (alpha.at(i) < alpha.at(i + 1)) return i;
  return 0;
}

}  // namespace

Polynomial schubert_polynomial(const Permutation& w) {
  Polynomial cached;
  if (schubert_cache().get(w, cached)) return cached;
  Polynomial result;
  if (is_dominant(w)) {
    result = Polynomial::monomial(invcode(w));
  } else {
    // w has an ascent below its size, and the swap there adds an inversion.
    int i = smallest_ascent(w);
    result = divided_difference(schubert_polynomial(w.right_multiplied(i)), i);
  }
  schubert_cache().put(w, result);
  return result;
}

Polynomial key_polynomial(const WeakComposition& alpha) {
  Polynomial cached;
  if (key_cache().get(alpha, cached)) return cached;
  Polynomial result;
  if (alpha.is_partition()) {
    result = Polynomial::monomial(alpha);
  } else {
    int i = smallest_ascent(alpha);
    result = demazure_pi(key_polynomial(alpha.swapped(i)), i);
  }
  key_cache().put(alpha, result);
  return result;
}

Polynomial top_lascoux_polynomial(const WeakComposition& alpha) {
  if (!alpha.is_snowy()) fail(ErrorKind::NotSnowy, "top polynomial of " + alpha.str());
  Polynomial cached;
  if (top_lascoux_cache().get(alpha, cached)) return cached;
  Polynomial result;
  if (alpha.is_partition()) {
    result = Polynomial::monomial(alpha);
  } else {
    int i = smallest_ascent(alpha);
    result = pi_hat(top_lascoux_polynomial(alpha.swapped(i)), i);
  }
  top_lascoux_cache().put(alpha, result);
  return result;
}

Polynomial top_lascoux_via_reverse(const WeakComposition& alpha, int m, int n) {
  return reverse_complement(schubert_polynomial(standardize(alpha, m, n)), m, n);
}

Polynomial schubert_via_top_lascoux(const Permutation& w, int n) {
  if (w.size() > n)
    fail(ErrorKind::OutOfRange,
         w.str() + " moves a point beyond " + std::to_string(n));
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) entries[static_cast<std::size_t>(n - i)] = n + 1 - w(i);
  return reverse_complement(top_lascoux_polynomial(WeakComposition(std::move(entries))),
                            n, n);
}

void clear_basis_caches() {
  schubert_cache().clear();
  key_cache().clear();
  top_lascoux_cache().clear();
}

BasisCacheSizes basis_cache_sizes() {
  return {schubert_cache().size(), key_cache().size(), top_lascoux_cache().size()};
}

}  // namespace schublas
