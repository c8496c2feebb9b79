#include "jw/util/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace jw::util {

std::vector<int> divisors(int k) {
  std::vector<int> out;
  for (int d = 1; d <= k; ++d) {
    if (k % d == 0) out.push_back(d);
  }
  return out;
}

int mobius(int k) {
  int result = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    result = -result;
  }
  if (k > 1) result = -result;
  return result;
}

int euler_phi(int k) {
  int result = k;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

Integer factorial(int k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer multinomial(const std::vector<int>& parts) {
  int total = 0;
  for (int p : parts) total += p;
  Integer out = factorial(total);
  for (int p : parts) out /= factorial(p);
  return out;
}

std::uint64_t to_count(const Integer& value) {
  if (value < 0 || !mpz_fits_ulong_p(value.get_mpz_t())) {
    throw std::overflow_error("value " + value.get_str() + " does not fit a 64-bit count");
  }
  return value.get_ui();
}

namespace {

void compositions_rec(int remaining, std::size_t pos, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    compositions_rec(remaining - v, pos + 1, cur, out);
  }
}

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    cur.push_back(v);
    partitions_rec(remaining - v, v, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> compositions(int k, int n) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  compositions_rec(k, 0, cur, out);
  return out;
}

std::vector<std::vector<int>> partitions(int k, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(k, k, max_parts, cur, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

Integer orbit_size(const std::vector<int>& parts, int n) {
  if (static_cast<int>(parts.size()) > n) return 0;
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  mult[0] += n - static_cast<int>(parts.size());
  Integer out = factorial(n);
  for (const auto& [value, count] : mult) out /= factorial(count);
  return out;
}

namespace {
std::atomic<unsigned> g_default_threads{1};
}

unsigned default_threads() { return g_default_threads.load(); }

void set_default_threads(unsigned threads) { g_default_threads.store(threads == 0 ? 1 : threads); }

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = default_threads();
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(threads, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace jw::util
