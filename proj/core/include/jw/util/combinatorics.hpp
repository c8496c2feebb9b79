#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "jw/exactlin/number.hpp"

namespace jw::util {

std::vector<int> divisors(int k);
int mobius(int k);
int euler_phi(int k);

Integer factorial(int k);
Integer binomial(int n, int k);
/// k! / prod(parts_i!) for parts summing to k.
Integer multinomial(const std::vector<int>& parts);

/// Converts to a machine count, throwing std::overflow_error if it does not fit.
std::uint64_t to_count(const Integer& value);

/// All vectors of length n with nonnegative entries summing to k, in
/// lexicographically decreasing order (k,0,...) first.
std::vector<std::vector<int>> compositions(int k, int n);

/// Partitions of k into at most max_parts positive parts, each non-increasing,
/// ordered by number of parts then reverse lexicographically.
std::vector<std::vector<int>> partitions(int k, int max_parts);

/// Number of distinct rearrangements of a length-n vector whose nonzero
/// entries are `parts` (the S_n-orbit size of a padded partition).
Integer orbit_size(const std::vector<int>& parts, int n);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Thread count used when a caller passes 0.
unsigned default_threads();
void set_default_threads(unsigned threads);

}  // namespace jw::util
