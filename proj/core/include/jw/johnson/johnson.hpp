#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jw/cyclic/necklace.hpp"
#include "jw/exactlin/integer.hpp"
#include "jw/exactlin/span.hpp"
#include "jw/tangent/derivation.hpp"

namespace jw::johnson {

using freelie::TensorElement;
using freelie::Word;
using Content = std::vector<int>;

/// Tangential element x_1^*(x)[U_1,x_1] + ... + x_n^*(x)[U_n,x_n] with all
/// U_i of one content, kept as tensors.
using TangentialTensors = std::vector<TensorElement>;

/// The part of the degree-k image with U-content `content`. Columns follow
/// p_basis order restricted to the block: i-major, then Lyndon order.
struct ImageBlock {
  Content content;
  std::shared_ptr<const freelie::LyndonBlock> lyndon;
  exactlin::IncrementalSpan span;
  /// Tensors of the vectors that enlarged the span, in insertion order.
  std::vector<TangentialTensors> basis;
};

struct ImageBasis {
  int n = 0;
  int k = 0;
  std::map<Content, ImageBlock> blocks;
  std::uint64_t dim = 0;

  /// Throws std::invalid_argument unless f is tangential of degree k on n generators.
  bool contains(const tangent::Derivation& f) const;
};

/// [v, K_ab] for the degree one generator K_ab = x_a^*(x)[x_b,x_a].
TangentialTensors bracket_with_generator(const TangentialTensors& u, int a, int b);

/// Block coordinates (p_basis order) of a tangential element of the given content.
exactlin::SparseVector block_vector(const freelie::LyndonBlock& block, const TangentialTensors& u);
exactlin::SparseVector block_vector(const freelie::LyndonBlock& block, const tangent::Derivation& f);

/// Degree-k part of the Lie subalgebra generated by the tau1 generators.
/// threads = 0 uses util::default_threads().
ImageBasis johnson_image(int n, int k, unsigned threads = 0);
/// All degrees 1..k; element m-1 is degree m.
std::vector<ImageBasis> johnson_images(int n, int k, unsigned threads = 0);

/// Trace matrix on one content block: rows are p_basis pairs (i, u) with u
/// Lyndon of that content, columns the surviving necklaces of that content.
struct TraceBlock {
  Content content;
  std::vector<tangent::PBasisIndex> rows;
  std::vector<Word> columns;
  exactlin::SparseMatrix matrix{0};
};
TraceBlock trace_block(const Content& content, cyclic::QuotientMode mode);

/// Rank of the trace over p_basis(n, k), summed block by block.
std::uint64_t trace_rank(int n, int k, cyclic::QuotientMode mode, unsigned threads = 0);

enum class ImageMethod { orbit, direct };
/// dim Im of the bar trace. `orbit` sums |S_n alpha| c_alpha over partitions.
std::uint64_t trace_image_dim(int n, int k, ImageMethod method = ImageMethod::orbit, unsigned threads = 0);
/// |p_basis(n, k)| - trace_image_dim(n, k).
std::uint64_t trace_kernel_dim(int n, int k, ImageMethod method = ImageMethod::orbit, unsigned threads = 0);

struct AlphaReport {
  std::vector<int> alpha;
  std::uint64_t c_alpha = 0;
  std::int64_t r_alpha = 0;
  std::string to_string() const;
};
/// Rank of the bar traces of x_i^*(x)[u,x_i] with u of content alpha, using
/// n = number of parts. Cached.
AlphaReport c_alpha(const std::vector<int>& alpha);

/// C-bar_n(k) modulo the integral image of the bar trace.
exactlin::QuotientStructure coker_structure(int n, int k, unsigned threads = 0);

struct T0530Report {
  int n = 0;
  int k = 0;
  std::vector<Content> checked;
  /// Compositions with no part equal to one.
  std::vector<Content> skipped;
  /// Contents where some trace-kernel vector is outside the image.
  std::vector<Content> violations;
  bool ok() const { return violations.empty(); }
};
T0530Report check_T0530(int n, int k, unsigned threads = 0);

/// Ordered triple of degree one generators, read as [[K_1, K_2], K_3].
struct EGenerator {
  std::string family;
  std::pair<int, int> k1, k2, k3;
  std::string to_string() const;
};
std::vector<EGenerator> e_generators(int n);

struct EReport {
  int n = 0;
  std::size_t count = 0;
  std::uint64_t expected = 0;
  std::uint64_t span_dim = 0;
  std::uint64_t image_dim = 0;
  bool ok() const { return count == expected && span_dim == expected && image_dim == expected; }
};
EReport verify_E_generators(int n, unsigned threads = 0);

// Tables. Each row is a list of cells; the first row of `header` names them.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
/// Rows gr, p, C-bar, Coker for k = 1..4.
Table section7_table(int n, unsigned threads = 0);
/// alpha, c_alpha, r_alpha for partitions of k with at least two parts, all >= 2.
Table section8_table(int k);
/// k, image dim, trace kernel dim, gap for k = 1..max_k with n = 3.
Table n3gap_table(int max_k, unsigned threads = 0);

}  // namespace jw::johnson
