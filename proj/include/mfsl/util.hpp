#ifndef MFSL_UTIL_HPP
#define MFSL_UTIL_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfsl {

// Thread cap: MFSL_THREADS if set, else hardware_concurrency.
int max_threads();

// Runs fn(i) for i in [0, n); blocks assigned contiguously so results are
// independent of the actual thread count.
void parallel_for(int n, const std::function<void(int)>& fn);

// splitmix64; used to derive independent per-trajectory seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

std::uint64_t fnv1a64(const void* data, std::size_t n);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Least-squares slope of log(error) against log(h).
double observed_order(const std::vector<double>& hs,
                      const std::vector<double>& errors);

}  // namespace mfsl

#endif
