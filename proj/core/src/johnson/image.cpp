#include <optional>
#include <stdexcept>

#include "jw/johnson/johnson.hpp"
#include "jw/util/combinatorics.hpp"

namespace jw::johnson {

using exactlin::SparseEntry;
using exactlin::SparseVector;

namespace {

TensorElement substitute(const TensorElement& u, char a, char b) {
  // Derivation x_a -> x_b x_a - x_a x_b applied letter by letter.
  TensorElement out;
  for (const auto& [w, c] : u.terms()) {
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] != a) continue;
      Word ba = w.substr(0, p);
      Word ab = ba;
      ba.push_back(b);
      ba.push_back(a);
      ab.push_back(a);
      ab.push_back(b);
      ba += w.substr(p + 1);
      ab += w.substr(p + 1);
      out.add(ba, c);
      out.add(ab, -c);
    }
  }
  return out;
}

TensorElement append(const TensorElement& u, char b) {
  TensorElement out;
  for (const auto& [w, c] : u.terms()) out.add(w + b, c);
  return out;
}

TensorElement prepend(const TensorElement& u, char b) {
  TensorElement out;
  for (const auto& [w, c] : u.terms()) out.add(b + w, c);
  return out;
}

Content add_letter(Content c, int b) {
  ++c[static_cast<std::size_t>(b - 1)];
  return c;
}

ImageBlock make_block(const Content& content, int n) {
  auto lyndon = freelie::lyndon_block(content);
  const std::size_t cols = static_cast<std::size_t>(n) * lyndon->words.size();
  return ImageBlock{content, lyndon, exactlin::IncrementalSpan(cols), {}};
}

}  // namespace

TangentialTensors bracket_with_generator(const TangentialTensors& u, int a, int b) {
  const auto n = u.size();
  if (a < 1 || b < 1 || a == b || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n) {
    throw std::invalid_argument("bracket_with_generator needs distinct a, b in 1..n");
  }
  const char ca = static_cast<char>(a), cb = static_cast<char>(b);
  // With g = K_ab: [f,g] sends x_i to [-g(U_i), x_i] for i != a, and
  // U_a picks up [U_b, x_b] + [x_b, U_a] on top.
  TangentialTensors out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = substitute(u[i], ca, cb) * Integer(-1);
  auto& ua = out[static_cast<std::size_t>(a - 1)];
  const auto& ub_old = u[static_cast<std::size_t>(b - 1)];
  const auto& ua_old = u[static_cast<std::size_t>(a - 1)];
  ua += append(ub_old, cb);
  ua -= prepend(ub_old, cb);
  ua += prepend(ua_old, cb);
  ua -= append(ua_old, cb);
  return out;
}

SparseVector block_vector(const freelie::LyndonBlock& block, const TangentialTensors& u) {
  const std::size_t size = block.words.size();
  std::vector<SparseEntry> entries;
  std::vector<Integer> values(size);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < size; ++j) values[j] = u[i].coefficient(block.words[j]);
    const auto coords = freelie::block_coordinates(block, values);
    for (std::size_t j = 0; j < size; ++j) {
      if (coords[j] != 0) entries.push_back({i * size + j, Rational(coords[j])});
    }
  }
  return SparseVector::from_entries(std::move(entries));
}

SparseVector block_vector(const freelie::LyndonBlock& block, const tangent::Derivation& f) {
  const std::size_t size = block.words.size();
  std::vector<SparseEntry> entries;
  for (const auto& [idx, c] : tangent::p_coordinates(f)) {
    auto it = block.index.find(idx.u);
    if (it == block.index.end()) continue;
    entries.push_back({static_cast<std::size_t>(idx.i - 1) * size + it->second, Rational(c)});
  }
  return SparseVector::from_entries(std::move(entries));
}

bool ImageBasis::contains(const tangent::Derivation& f) const {
  if (f.n() != n || f.degree() != k) throw std::invalid_argument("derivation does not match the image's n and k");
  std::map<Content, bool> contents;
  for (const auto& [idx, c] : tangent::p_coordinates(f)) contents[freelie::content(idx.u, n)] = true;
  for (const auto& [content, unused] : contents) {
    auto it = blocks.find(content);
    if (it == blocks.end()) return false;
    if (!it->second.span.contains(block_vector(*it->second.lyndon, f))) return false;
  }
  return true;
}

std::vector<ImageBasis> johnson_images(int n, int k, unsigned threads) {
  if (n < 2 || k < 1) throw std::invalid_argument("johnson_image needs n >= 2 and k >= 1");
  std::vector<ImageBasis> out;
  ImageBasis cur{n, 1, {}, 0};
  for (int b = 1; b <= n; ++b) {
    Content content(static_cast<std::size_t>(n), 0);
    content[static_cast<std::size_t>(b - 1)] = 1;
    auto block = make_block(content, n);
    for (int a = 1; a <= n; ++a) {
      if (a == b) continue;
      TangentialTensors u(static_cast<std::size_t>(n));
      u[static_cast<std::size_t>(a - 1)] = TensorElement::of_word(Word(1, static_cast<char>(b)));
      if (block.span.insert(block_vector(*block.lyndon, u))) block.basis.push_back(std::move(u));
    }
    cur.dim += block.span.dim();
    cur.blocks.emplace(content, std::move(block));
  }
  out.push_back(cur);

  for (int m = 2; m <= k; ++m) {
    std::map<Content, bool> seen;
    for (const auto& [content, block] : out.back().blocks) {
      for (int b = 1; b <= n; ++b) seen[add_letter(content, b)] = true;
    }
    std::vector<Content> targets;
    for (const auto& [c, unused] : seen) targets.push_back(c);
    std::vector<std::optional<ImageBlock>> built(targets.size());
    const auto& prev = out.back();
    util::parallel_for(targets.size(), threads, [&](std::size_t t) {
      const Content& target = targets[t];
      auto block = make_block(target, n);
      for (int b = 1; b <= n; ++b) {
        if (target[static_cast<std::size_t>(b - 1)] == 0) continue;
        Content source = target;
        --source[static_cast<std::size_t>(b - 1)];
        auto it = prev.blocks.find(source);
        if (it == prev.blocks.end()) continue;
        for (const auto& v : it->second.basis) {
          for (int a = 1; a <= n; ++a) {
            if (a == b) continue;
            auto cand = bracket_with_generator(v, a, b);
            if (block.span.insert(block_vector(*block.lyndon, cand))) block.basis.push_back(std::move(cand));
          }
        }
      }
      built[t] = std::move(block);
    });
    ImageBasis next{n, m, {}, 0};
    for (auto& b : built) {
      if (b->span.dim() == 0) continue;
      next.dim += b->span.dim();
      Content key = b->content;
      next.blocks.emplace(std::move(key), std::move(*b));
    }
    out.push_back(std::move(next));
  }
  return out;
}

ImageBasis johnson_image(int n, int k, unsigned threads) { return std::move(johnson_images(n, k, threads).back()); }

}  // namespace jw::johnson
