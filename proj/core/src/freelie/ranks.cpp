#include "jw/freelie/ranks.hpp"

#include <numeric>
#include <stdexcept>

#include "jw/util/combinatorics.hpp"

namespace jw::freelie {

std::uint64_t witt_rank(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("witt_rank needs n >= 1 and k >= 1");
  Integer sum = 0;
  Integer power;
  for (int d : util::divisors(k)) {
    const int mu = util::mobius(d);
    if (mu == 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k / d));
    sum += mu * power;
  }
  return util::to_count(sum / k);
}

std::uint64_t multidegree_rank(const std::vector<int>& alpha) {
  int k = 0;
  int g = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("negative multidegree entry");
    k += a;
    g = std::gcd(g, a);
  }
  if (k == 0) return 0;
  Integer sum = 0;
  for (int d : util::divisors(g)) {
    const int mu = util::mobius(d);
    if (mu == 0) continue;
    std::vector<int> parts;
    for (int a : alpha) parts.push_back(a / d);
    sum += mu * util::multinomial(parts);
  }
  return util::to_count(sum / k);
}

}  // namespace jw::freelie
