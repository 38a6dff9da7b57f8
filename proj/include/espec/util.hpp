#ifndef ESPEC_UTIL_HPP
#define ESPEC_UTIL_HPP

#include <cstddef>
#include <functional>
#include <string>

namespace espec {

inline constexpr const char* kToolVersion = "espec 0.1.0";

// Worker count for parallel sections: ESPEC_THREADS caps it, otherwise the
// hardware default is used. Always at least 1.
int worker_count();

// Splits [0, n) into contiguous chunks, one per worker, and runs
// body(begin, end) on each from its own thread. The partition depends only
// on n and the worker count, and chunks never share output elements, so
// results are identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

// Writes content to path atomically (temp file in the same directory,
// then rename).
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace espec

#endif
