#include <algorithm>

#include "jw/cyclic/necklace.hpp"
#include "jw/johnson/johnson.hpp"
#include "jw/util/combinatorics.hpp"

namespace jw::johnson {

namespace {

std::string format_parts(const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

}  // namespace

Table section7_table(int n, unsigned threads) {
  Table t;
  t.header = {"row", "k=1", "k=2", "k=3", "k=4"};
  const auto images = johnson_images(n, 4, threads);
  std::vector<std::string> gr{"gr"}, p{"p"}, cbar{"Cbar"}, coker{"Coker"};
  for (int k = 1; k <= 4; ++k) {
    gr.push_back(std::to_string(images[static_cast<std::size_t>(k - 1)].dim));
    p.push_back(std::to_string(tangent::p_basis(n, k).size()));
    cbar.push_back(std::to_string(cyclic::cyclic_rank(n, k, cyclic::QuotientMode::bar)));
    const auto q = coker_structure(n, k, threads);
    coker.push_back(q.is_free() ? std::to_string(q.free_rank) : q.to_string());
  }
  t.rows = {gr, p, cbar, coker};
  return t;
}

Table section8_table(int k) {
  Table t;
  t.header = {"alpha", "c_alpha", "r_alpha"};
  for (const auto& alpha : util::partitions(k, k)) {
    if (alpha.size() < 2 || alpha.back() < 2) continue;
    const auto r = c_alpha(alpha);
    t.rows.push_back({format_parts(alpha), std::to_string(r.c_alpha), std::to_string(r.r_alpha)});
  }
  return t;
}

Table n3gap_table(int max_k, unsigned threads) {
  Table t;
  t.header = {"k", "image", "trace_kernel", "gap"};
  const auto images = johnson_images(3, max_k, threads);
  for (int k = 1; k <= max_k; ++k) {
    const auto im = images[static_cast<std::size_t>(k - 1)].dim;
    const auto ker = k == 1 ? tangent::p_basis(3, 1).size() : trace_kernel_dim(3, k, ImageMethod::direct, threads);
    t.rows.push_back({std::to_string(k), std::to_string(im), std::to_string(ker), std::to_string(ker - im)});
  }
  return t;
}

}  // namespace jw::johnson
