#pragma once

#include <cstdint>
#include <vector>

namespace jw::freelie {

/// Rank of the degree-k part of the free Lie algebra on n generators:
/// (1/k) sum_{d|k} mu(d) n^{k/d}.
std::uint64_t witt_rank(int n, int k);

/// Rank of the multidegree-alpha component (alpha = letter counts):
/// (1/k) sum_{d | gcd(alpha)} mu(d) (k/d)! / prod (alpha_i/d)!.
std::uint64_t multidegree_rank(const std::vector<int>& alpha);

}  // namespace jw::freelie
