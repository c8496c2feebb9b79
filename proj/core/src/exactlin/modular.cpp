#include "jw/exactlin/modular.hpp"

#include <algorithm>

#include "jw/exactlin/span.hpp"

namespace jw::exactlin {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const Integer& z, std::uint64_t p) {
  Integer r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

std::optional<std::size_t> rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  const std::size_t ncols = m.ncols();
  std::vector<std::vector<std::uint64_t>> pivots;
  std::vector<std::size_t> pivot_col;
  std::vector<std::uint64_t> row(ncols);
  for (const auto& r : m.rows()) {
    if (pivots.size() == ncols) break;
    std::fill(row.begin(), row.end(), 0);
    bool any = false;
    for (const auto& e : r.entries()) {
      const std::uint64_t den = residue(e.value.get_den(), p);
      if (den == 0) return std::nullopt;
      row[e.col] = residue(e.value.get_num(), p) * pow_mod(den, p - 2, p) % p;
      any = any || row[e.col] != 0;
    }
    if (!any) continue;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const std::uint64_t f = row[pivot_col[k]];
      if (f == 0) continue;
      const std::uint64_t g = p - f;
      const auto& pr = pivots[k];
      for (std::size_t c = pivot_col[k]; c < ncols; ++c) {
        if (pr[c] != 0) row[c] = (row[c] + g * pr[c]) % p;
      }
    }
    auto lead = std::find_if(row.begin(), row.end(), [](std::uint64_t x) { return x != 0; });
    if (lead == row.end()) continue;
    const std::uint64_t inv = pow_mod(*lead, p - 2, p);
    for (auto it = lead; it != row.end(); ++it) *it = *it * inv % p;
    pivot_col.push_back(static_cast<std::size_t>(lead - row.begin()));
    pivots.push_back(row);
  }
  return pivots.size();
}

std::size_t certified_rank(const SparseMatrix& m) {
  const std::size_t bound = std::min(m.nrows(), m.ncols());
  if (bound == 0) return 0;
  const auto r = rank_mod_p(m);
  if (r && *r == bound) return *r;
  return rank(m);
}

}  // namespace jw::exactlin
