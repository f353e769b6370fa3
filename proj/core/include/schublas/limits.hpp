#pragma once

#include <cstddef>

namespace schublas::limits {

// Process-wide resource ceilings. All setters require positive values
// (threads may be 0 = auto). Defaults: term_limit 1e6, step_limit 1e5,
// cache_entries 1e5, threads auto.
std::size_t term_limit();
void set_term_limit(std::size_t value);

std::size_t step_limit();
void set_step_limit(std::size_t value);

std::size_t cache_entries();
void set_cache_entries(std::size_t value);

int threads();
void set_threads(int value);

// Throw ResourceLimit naming the exceeded ceiling.
void check_term_count(std::size_t count, const char* where);
void check_step_count(std::size_t count, const char* where);

}  // namespace schublas::limits
