#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "jw/exactlin/sparse.hpp"

namespace jw::exactlin {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

/// Rank of m reduced modulo the prime p (p < 2^32). Returns nullopt when some
/// denominator vanishes mod p. Stops early once the rank reaches ncols.
std::optional<std::size_t> rank_mod_p(const SparseMatrix& m, std::uint64_t p = kDefaultPrime);

/// Rank over Q. A mod-p rank equal to min(rows, cols) is exact because a
/// nonzero minor mod p is nonzero over Q; anything else falls back to exact
/// elimination.
std::size_t certified_rank(const SparseMatrix& m);

}  // namespace jw::exactlin
