#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jw/cyclic/necklace.hpp"
#include "jw/johnson/johnson.hpp"
#include "jw/util/combinatorics.hpp"

namespace jw::johnson {

using exactlin::SparseEntry;
using exactlin::SparseVector;

T0530Report check_T0530(int n, int k, unsigned threads) {
  if (n < 3) throw std::invalid_argument("check_T0530 needs n >= 3");
  const auto image = johnson_image(n, k, threads);
  T0530Report report;
  report.n = n;
  report.k = k;
  std::vector<Content> todo;
  for (auto& alpha : util::compositions(k, n)) {
    if (std::find(alpha.begin(), alpha.end(), 1) == alpha.end()) {
      report.skipped.push_back(std::move(alpha));
    } else {
      todo.push_back(std::move(alpha));
    }
  }
  std::vector<char> bad(todo.size(), 0);
  util::parallel_for(todo.size(), threads, [&](std::size_t t) {
    const auto tb = trace_block(todo[t], cyclic::QuotientMode::bar);
    const auto lyndon = freelie::lyndon_block(todo[t]);
    const std::size_t size = lyndon->words.size();
    // Left kernel of the trace matrix, via the transpose.
    exactlin::SparseMatrix transpose(tb.rows.size());
    std::vector<std::vector<SparseEntry>> cols(tb.columns.size());
    for (std::size_t r = 0; r < tb.rows.size(); ++r) {
      for (const auto& e : tb.matrix.row(r).entries()) cols[e.col].push_back({r, e.value});
    }
    for (auto& c : cols) transpose.add_row(SparseVector::from_entries(std::move(c)));
    const auto kernel = exactlin::kernel_basis(transpose);

    auto it = image.blocks.find(todo[t]);
    exactlin::IncrementalSpan empty(static_cast<std::size_t>(n) * size);
    const auto& span = it == image.blocks.end() ? empty : it->second.span;
    for (const auto& v : kernel) {
      std::vector<SparseEntry> mapped;
      for (const auto& e : v.entries()) {
        const auto& idx = tb.rows[e.col];
        mapped.push_back({static_cast<std::size_t>(idx.i - 1) * size + lyndon->index.at(idx.u), e.value});
      }
      if (!span.contains(SparseVector::from_entries(std::move(mapped)))) {
        bad[t] = 1;
        break;
      }
    }
  });
  for (std::size_t t = 0; t < todo.size(); ++t) {
    if (bad[t]) report.violations.push_back(todo[t]);
    report.checked.push_back(std::move(todo[t]));
  }
  return report;
}

std::string EGenerator::to_string() const {
  auto k = [](const std::pair<int, int>& p) { return "K" + std::to_string(p.first) + std::to_string(p.second); };
  return family + " [" + k(k1) + "," + k(k2) + "," + k(k3) + "]";
}

std::vector<EGenerator> e_generators(int n) {
  std::vector<EGenerator> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int l = 1; l <= n; ++l) {
        if (i == j || i == l || j == l) continue;
        for (int m = 1; m <= n; ++m) {
          if (m == i || m == j || m == l) continue;
          if (j > l && l < m) out.push_back({"E1", {i, j}, {i, l}, {i, m}});
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int l = 1; l <= n; ++l) {
        if (i == j || i == l || j == l) continue;
        out.push_back({"E2", {i, j}, {i, l}, {i, j}});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int l = 1; l <= n; ++l) {
        if (i == j || i == l || j == l) continue;
        if (i > j && i > l) continue;
        out.push_back({"E3", {i, j}, {i, l}, {j, i}});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) out.push_back({"E4", {i, j}, {j, i}, {i, j}});
    }
  }
  return out;
}

EReport verify_E_generators(int n, unsigned threads) {
  if (n < 3) throw std::invalid_argument("verify_E_generators needs n >= 3");
  EReport report;
  report.n = n;
  const auto gens = e_generators(n);
  report.count = gens.size();
  report.expected = util::to_count(Integer(n) * (n - 1) * (n - 1) * (n + 1) / 3);

  const auto basis = tangent::p_basis(n, 3);
  std::map<tangent::PBasisIndex, std::size_t> column;
  for (std::size_t c = 0; c < basis.size(); ++c) column.emplace(basis[c], c);
  std::vector<tangent::Derivation> values(gens.size(), tangent::Derivation(n, 3));
  util::parallel_for(gens.size(), threads, [&](std::size_t t) {
    const auto& g = gens[t];
    const auto a = tangent::tau1_generator(n, g.k1.first, g.k1.second);
    const auto b = tangent::tau1_generator(n, g.k2.first, g.k2.second);
    const auto c = tangent::tau1_generator(n, g.k3.first, g.k3.second);
    values[t] = tangent::der_bracket(tangent::der_bracket(a, b), c);
  });
  exactlin::IncrementalSpan span(basis.size());
  for (const auto& v : values) {
    std::vector<SparseEntry> entries;
    for (const auto& [idx, c] : tangent::p_coordinates(v)) entries.push_back({column.at(idx), Rational(c)});
    span.insert(SparseVector::from_entries(std::move(entries)));
  }
  report.span_dim = span.dim();
  const auto image = johnson_image(n, 3, threads);
  report.image_dim = image.dim;
  for (const auto& v : values) {
    if (!image.contains(v)) throw std::logic_error("E generator outside the degree 3 image");
  }
  return report;
}

}  // namespace jw::johnson
