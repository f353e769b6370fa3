#include "schublas/limits.hpp"

#include <atomic>
#include <string>

#include "schublas/errors.hpp"

namespace schublas::limits {

namespace {

std::atomic<std::size_t> g_term_limit{1000000};
std::atomic<std::size_t> g_step_limit{100000};
std::atomic<std::size_t> g_cache_entries{100000};
std::atomic<int> g_threads{0};

void require_positive(std::size_t value, const char* name) {
  if (value == 0) fail(ErrorKind::InvalidInput, std::string(name) + " must be positive");
}

}  // namespace

std::size_t term_limit() { return g_term_limit.load(); }
void set_term_limit(std::size_t value) {
  require_positive(value, "term_limit");
  g_term_limit.store(value);
}

std::size_t step_limit() { return g_step_limit.load(); }
void set_step_limit(std::size_t value) {
  require_positive(value, "step_limit");
  g_step_limit.store(value);
}

std::size_t cache_entries() { return g_cache_entries.load(); }
void set_cache_entries(std::size_t value) {
  require_positive(value, "cache_entries");
  g_cache_entries.store(value);
}

int threads() { return g_threads.load(); }
void set_threads(int value) {
  if (value < 0) fail(ErrorKind::InvalidInput, "threads must be >= 0");
  g_threads.store(value);
}

void check_term_count(std::size_t count, const char* where) {
  if (count > term_limit())
    fail(ErrorKind::ResourceLimit,
         std::string(where) + " exceeds term_limit " + std::to_string(term_limit()));
}

void check_step_count(std::size_t count, const char* where) {
  if (count > step_limit())
    fail(ErrorKind::ResourceLimit,
         std::string(where) + " exceeds step_limit " + std::to_string(step_limit()));
}

}  // namespace schublas::limits
