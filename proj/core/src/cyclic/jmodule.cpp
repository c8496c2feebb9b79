#include "jw/cyclic/jmodule.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace jw::cyclic {

using exactlin::SparseEntry;
using exactlin::SparseVector;

JModule::JModule(int n)
    : n_(n),
      pairs_(static_cast<std::size_t>(n * (n - 1) / 2)),
      relations_(pairs_ * pairs_),
      relation_matrix_(0, pairs_ * pairs_) {
  if (n < 2) throw std::invalid_argument("J module needs n >= 2");
  auto record = [&](SparseVector v) {
    if (v.empty()) return;
    std::vector<Integer> row(spanning_size());
    for (const auto& e : v.entries()) row[e.col] = e.value.get_num();
    relation_matrix_.append_row(row);
    relations_.insert(v);
  };
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          SparseVector v = product(a, b, c, d);
          v.axpy(Rational(-1), product(c, d, a, b));
          record(std::move(v));
        }
      }
    }
  }
  // (v^w)(x^y) - (x^w)(v^y) - (v^x)(w^y)
  for (int v = 1; v <= n; ++v) {
    for (int w = 1; w <= n; ++w) {
      for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) {
          SparseVector r = product(v, w, x, y);
          r.axpy(Rational(-1), product(x, w, v, y));
          r.axpy(Rational(-1), product(v, x, w, y));
          record(std::move(r));
        }
      }
    }
  }
}

std::shared_ptr<const JModule> JModule::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const JModule>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto module = std::make_shared<const JModule>(n);
  cache.emplace(n, module);
  return module;
}

std::size_t JModule::pair_index(int a, int b) const {
  if (a < 1 || b > n_ || a >= b) throw std::invalid_argument("wedge pair must satisfy 1 <= a < b <= n");
  // Pairs ordered (1,2),(1,3),...,(1,n),(2,3),...
  const auto ua = static_cast<std::size_t>(a - 1);
  const auto un = static_cast<std::size_t>(n_);
  return ua * un - ua * (ua + 1) / 2 + static_cast<std::size_t>(b - a - 1);
}

SparseVector JModule::product(int a, int b, int c, int d) const {
  if (a == b || c == d) return {};
  int sign = 1;
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  if (c > d) {
    std::swap(c, d);
    sign = -sign;
  }
  const std::size_t col = pair_index(a, b) * pairs_ + pair_index(c, d);
  return SparseVector::from_entries({SparseEntry{col, Rational(sign)}});
}

JElement JModule::reduce(const SparseVector& coords) const { return JElement{n_, relations_.reduce(coords)}; }

exactlin::QuotientStructure JModule::integer_structure() const {
  return exactlin::quotient_structure(spanning_size(), relation_matrix_);
}

std::string JElement::to_string() const {
  if (coords.empty()) return "0";
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  }
  const std::size_t p = pairs.size();
  std::string out;
  bool first = true;
  for (const auto& e : coords.entries()) {
    const auto& [a, b] = pairs[e.col / p];
    const auto& [c, d] = pairs[e.col % p];
    Rational mag = abs(e.value);
    if (first) {
      if (e.value < 0) out += "-";
    } else {
      out += e.value < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "(" + std::to_string(a) + "^" + std::to_string(b) + ").(" + std::to_string(c) + "^" + std::to_string(d) + ")";
    first = false;
  }
  return out;
}

std::uint64_t j_rank(int n) { return JModule::get(n)->rank(); }

JElement j_project(int n, int a, int b, int c, int d) {
  const auto module = JModule::get(n);
  if (a < 1 || b < 1 || c < 1 || d < 1 || a > n || b > n || c > n || d > n) {
    throw std::invalid_argument("generator index outside 1..n");
  }
  return module->reduce(module->product(a, b, c, d));
}

}  // namespace jw::cyclic
