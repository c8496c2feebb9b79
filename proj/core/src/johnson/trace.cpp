#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "jw/exactlin/modular.hpp"
#include "jw/freelie/ranks.hpp"
#include "jw/johnson/johnson.hpp"
#include "jw/util/combinatorics.hpp"

namespace jw::johnson {

using exactlin::SparseEntry;
using exactlin::SparseVector;

TraceBlock trace_block(const Content& content, cyclic::QuotientMode mode) {
  TraceBlock out;
  out.content = content;
  const int n = static_cast<int>(content.size());
  int k = 0;
  for (int c : content) k += c;

  std::unordered_map<Word, std::size_t> column;
  for (auto& w : cyclic::necklaces_with_content(content)) {
    if (!cyclic::survives(w, mode)) continue;
    column.emplace(w, out.columns.size());
    out.columns.push_back(std::move(w));
  }
  out.matrix = exactlin::SparseMatrix(out.columns.size());

  const auto block = freelie::lyndon_block(content);
  const std::size_t size = block->words.size();
  std::vector<std::vector<SparseEntry>> rows(static_cast<std::size_t>(n) * size);
  for (std::size_t j = 0; j < size; ++j) {
    const auto expansion = freelie::lyndon_expansion(block->words[j]);
    for (const auto& [w, c] : expansion->terms()) {
      // Contracting x_i^* against [U, x_i] = U x_i - x_i U leaves, up to
      // rotation, the words of U that start with x_i, minus U itself. The
      // cyclic image of U vanishes unless k = 1.
      auto it = column.find(cyclic::necklace_canonicalize(w));
      if (it == column.end()) continue;
      const auto first = static_cast<std::size_t>(w[0] - 1);
      rows[first * size + j].push_back({it->second, Rational(c)});
      if (k == 1) {
        for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i) * size + j].push_back({it->second, Rational(-c)});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (k == 1 && block->words[j][0] == static_cast<char>(i)) continue;
      out.rows.push_back({i, block->words[j]});
      out.matrix.add_row(SparseVector::from_entries(std::move(rows[static_cast<std::size_t>(i - 1) * size + j])));
    }
  }
  return out;
}

std::uint64_t trace_rank(int n, int k, cyclic::QuotientMode mode, unsigned threads) {
  if (n < 1 || k < 1) throw std::invalid_argument("trace_rank needs n >= 1 and k >= 1");
  const auto blocks = util::compositions(k, n);
  std::vector<std::uint64_t> ranks(blocks.size());
  util::parallel_for(blocks.size(), threads, [&](std::size_t t) {
    ranks[t] = exactlin::certified_rank(trace_block(blocks[t], mode).matrix);
  });
  std::uint64_t total = 0;
  for (auto r : ranks) total += r;
  return total;
}

std::string AlphaReport::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
  os << ") c=" << c_alpha << " r=" << r_alpha;
  return os.str();
}

AlphaReport c_alpha(const std::vector<int>& alpha) {
  static std::mutex mutex;
  static std::map<std::vector<int>, AlphaReport> cache;
  if (alpha.empty()) throw std::invalid_argument("c_alpha needs a nonempty partition");
  for (int a : alpha) {
    if (a < 1) throw std::invalid_argument("c_alpha needs positive parts");
  }
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;
  }
  AlphaReport report;
  report.alpha = alpha;
  report.c_alpha = exactlin::certified_rank(trace_block(alpha, cyclic::QuotientMode::bar).matrix);
  report.r_alpha = static_cast<std::int64_t>(report.c_alpha) - static_cast<std::int64_t>(freelie::multidegree_rank(alpha));
  std::lock_guard lock(mutex);
  cache.emplace(alpha, report);
  return report;
}

std::uint64_t trace_image_dim(int n, int k, ImageMethod method, unsigned threads) {
  if (n < 1 || k < 1) throw std::invalid_argument("trace_image_dim needs n >= 1 and k >= 1");
  if (method == ImageMethod::direct) return trace_rank(n, k, cyclic::QuotientMode::bar, threads);
  const auto parts = util::partitions(k, n);
  std::vector<std::uint64_t> c(parts.size());
  util::parallel_for(parts.size(), threads, [&](std::size_t t) { c[t] = c_alpha(parts[t]).c_alpha; });
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < parts.size(); ++t) total += util::to_count(util::orbit_size(parts[t], n)) * c[t];
  return total;
}

std::uint64_t trace_kernel_dim(int n, int k, ImageMethod method, unsigned threads) {
  return tangent::p_basis(n, k).size() - trace_image_dim(n, k, method, threads);
}

exactlin::QuotientStructure coker_structure(int n, int k, unsigned threads) {
  if (n < 1 || k < 1) throw std::invalid_argument("coker_structure needs n >= 1 and k >= 1");
  const auto blocks = util::compositions(k, n);
  std::vector<exactlin::QuotientStructure> parts(blocks.size());
  util::parallel_for(blocks.size(), threads, [&](std::size_t t) {
    const auto tb = trace_block(blocks[t], cyclic::QuotientMode::bar);
    const std::size_t cols = tb.columns.size();
    if (cols == 0) return;
    exactlin::IntMatrix m(0, cols);
    for (const auto& row : tb.matrix.rows()) {
      if (row.empty()) continue;
      std::vector<Integer> dense(cols);
      for (const auto& e : row.entries()) dense[e.col] = e.value.get_num();
      m.append_row(dense);
    }
    parts[t] = exactlin::quotient_structure(cols, m);
  });
  return exactlin::direct_sum(parts);
}

}  // namespace jw::johnson
