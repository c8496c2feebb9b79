#include "jw/freelie/lie.hpp"

#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "jw/freelie/ranks.hpp"

namespace jw::freelie {

// ---------------------------------------------------------------- BracketTree

BracketTree BracketTree::leaf(int generator) {
  if (generator < 1) throw std::invalid_argument("generator index must be >= 1");
  BracketTree t;
  t.letter_ = generator;
  return t;
}

BracketTree BracketTree::node(BracketTree left, BracketTree right) {
  BracketTree t;
  t.left_ = std::make_shared<const BracketTree>(std::move(left));
  t.right_ = std::make_shared<const BracketTree>(std::move(right));
  return t;
}

BracketTree BracketTree::left_normed(const std::vector<int>& generators) {
  if (generators.empty()) throw std::invalid_argument("empty bracket");
  BracketTree t = leaf(generators.front());
  for (std::size_t i = 1; i < generators.size(); ++i) t = node(std::move(t), leaf(generators[i]));
  return t;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(const std::string& text) : text_(text) {}

  BracketTree parse_all() {
    BracketTree t = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse bracket '" + text_ + "': " + what + " at offset " +
                                std::to_string(pos_));
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  BracketTree parse_expr() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (text_[pos_] == '[') {
      ++pos_;
      std::vector<BracketTree> items;
      items.push_back(parse_expr());
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) fail("unclosed bracket");
        if (text_[pos_] == ']') {
          ++pos_;
          break;
        }
        if (text_[pos_] != ',') fail("expected ','");
        ++pos_;
        items.push_back(parse_expr());
      }
      if (items.size() < 2) fail("a bracket needs two entries");
      BracketTree t = std::move(items.front());
      for (std::size_t i = 1; i < items.size(); ++i) t = BracketTree::node(std::move(t), std::move(items[i]));
      return t;
    }
    if (text_[pos_] == 'x' || text_[pos_] == 'X') ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a generator");
    return BracketTree::leaf(std::stoi(text_.substr(start, pos_ - start)));
  }
};

}  // namespace

BracketTree BracketTree::parse(const std::string& text) { return TreeParser(text).parse_all(); }

std::size_t BracketTree::degree() const { return is_leaf() ? 1 : left_->degree() + right_->degree(); }

std::string BracketTree::to_string() const {
  if (is_leaf()) return "x" + std::to_string(letter_);
  return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

// ---------------------------------------------------------------- HallMonomial

BracketTree HallMonomial::tree() const {
  if (word.size() == 1) return BracketTree::leaf(static_cast<int>(word[0]));
  auto [u, v] = standard_factorization(word);
  return BracketTree::node(HallMonomial{u}.tree(), HallMonomial{v}.tree());
}

std::string HallMonomial::to_string() const { return tree().to_string(); }

// ---------------------------------------------------------------- LieElement

LieElement LieElement::generator(int i) { return basis(make_word({i})); }

LieElement LieElement::basis(const Word& w, const Integer& coef) {
  if (!is_lyndon(w)) throw std::invalid_argument("(" + format_word(w) + ") is not a Lyndon word");
  LieElement a;
  a.add(w, coef);
  return a;
}

Integer LieElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LieElement::add(const Word& w, const Integer& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Integer& factor) {
  if (factor == 0) {
    terms_.clear();
  } else {
    for (auto& [w, c] : terms_) c *= factor;
  }
  return *this;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += HallMonomial{w}.to_string();
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- caches

namespace {

struct ExpansionCache {
  std::shared_mutex mutex;
  std::unordered_map<Word, std::shared_ptr<const TensorElement>> map;
};

ExpansionCache& expansion_cache() {
  static ExpansionCache cache;
  return cache;
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ULL;
    return h;
  }
};

struct BlockCache {
  std::shared_mutex mutex;
  std::unordered_map<std::vector<int>, std::shared_ptr<const LyndonBlock>, VectorHash> map;
};

BlockCache& block_cache() {
  static BlockCache cache;
  return cache;
}

struct BasisCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, int>, std::shared_ptr<const std::vector<Word>>> map;
};

BasisCache& basis_cache() {
  static BasisCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const TensorElement> lyndon_expansion(const Word& w) {
  auto& cache = expansion_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.map.find(w);
    if (it != cache.map.end()) return it->second;
  }
  std::shared_ptr<const TensorElement> value;
  if (w.size() == 1) {
    value = std::make_shared<const TensorElement>(TensorElement::of_word(w));
  } else {
    auto [u, v] = standard_factorization(w);
    value = std::make_shared<const TensorElement>(commutator(*lyndon_expansion(u), *lyndon_expansion(v)));
  }
  std::unique_lock lock(cache.mutex);
  return cache.map.try_emplace(w, std::move(value)).first->second;
}

std::shared_ptr<const LyndonBlock> lyndon_block(const std::vector<int>& raw_content) {
  const auto key = trim_content(raw_content);
  auto& cache = block_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return it->second;
  }
  auto block = std::make_shared<LyndonBlock>();
  block->content = key;
  block->words = lyndon_words_with_content(key);
  block->lower.resize(block->words.size());
  for (std::size_t i = 0; i < block->words.size(); ++i) block->index.emplace(block->words[i], i);
  for (std::size_t i = 0; i < block->words.size(); ++i) {
    const auto expansion = lyndon_expansion(block->words[i]);
    for (const auto& [w, c] : expansion->terms()) {
      auto it = block->index.find(w);
      if (it == block->index.end() || it->second == i) continue;
      if (it->second < i) throw std::logic_error("Lyndon expansion is not triangular");
      block->lower[it->second].emplace_back(i, c);
    }
  }
  std::unique_lock lock(cache.mutex);
  return cache.map.try_emplace(key, std::move(block)).first->second;
}

std::vector<Integer> block_coordinates(const LyndonBlock& block, const std::vector<Integer>& values) {
  std::vector<Integer> coords(block.words.size());
  Integer acc;
  for (std::size_t j = 0; j < block.words.size(); ++j) {
    acc = values[j];
    for (const auto& [i, m] : block.lower[j]) {
      if (coords[i] != 0) acc -= m * coords[i];
    }
    coords[j] = acc;
  }
  return coords;
}

// ---------------------------------------------------------------- conversions

TensorElement expand(const BracketTree& tree) {
  if (tree.is_leaf()) return TensorElement::of_word(make_word({tree.letter()}));
  return commutator(expand(tree.left()), expand(tree.right()));
}

TensorElement embed_tensor(const LieElement& a) {
  TensorElement out;
  for (const auto& [w, c] : a.terms()) out.add_scaled(*lyndon_expansion(w), c);
  return out;
}

LieElement normalize(const TensorElement& t) {
  struct Slot {
    std::shared_ptr<const LyndonBlock> block;
    std::vector<Integer> values;
  };
  std::map<std::vector<int>, Slot> slots;
  for (const auto& [w, c] : t.terms()) {
    auto key = content_key(w);
    auto it = slots.find(key);
    if (it == slots.end()) {
      auto block = lyndon_block(key);
      const auto size = block->words.size();
      it = slots.emplace(std::move(key), Slot{std::move(block), std::vector<Integer>(size)}).first;
    }
    auto idx = it->second.block->index.find(w);
    if (idx != it->second.block->index.end()) it->second.values[idx->second] = c;
  }
  LieElement out;
  for (const auto& [key, slot] : slots) {
    const auto coords = block_coordinates(*slot.block, slot.values);
    for (std::size_t j = 0; j < coords.size(); ++j) out.add(slot.block->words[j], coords[j]);
  }
  return out;
}

LieElement normalize(const BracketTree& tree) { return normalize(expand(tree)); }

LieElement normalize(const std::vector<std::pair<Integer, BracketTree>>& combination) {
  TensorElement t;
  for (const auto& [c, tree] : combination) t.add_scaled(expand(tree), c);
  return normalize(t);
}

bool is_lie(const TensorElement& t) { return embed_tensor(normalize(t)) == t; }

LieElement bracket(const LieElement& a, const LieElement& b) {
  return normalize(commutator(embed_tensor(a), embed_tensor(b)));
}

// ---------------------------------------------------------------- bases

std::shared_ptr<const std::vector<Word>> hall_words(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("hall basis needs n >= 1 and k >= 1");
  auto& cache = basis_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.map.find({n, k});
    if (it != cache.map.end()) return it->second;
  }
  auto words = std::make_shared<const std::vector<Word>>(lyndon_words(n, k));
  std::unique_lock lock(cache.mutex);
  return cache.map.try_emplace({n, k}, std::move(words)).first->second;
}

std::vector<HallMonomial> hall_basis(int n, int k) {
  const auto words = hall_words(n, k);
  std::vector<HallMonomial> out;
  out.reserve(words->size());
  for (const auto& w : *words) out.push_back(HallMonomial{w});
  return out;
}

void install_hall_basis(int n, int k, std::vector<Word> words) {
  if (words.size() != witt_rank(n, k)) {
    throw std::invalid_argument("stored basis for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                " has " + std::to_string(words.size()) + " words, expected " +
                                std::to_string(witt_rank(n, k)));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    if (static_cast<int>(w.size()) != k || max_letter(w) > n || !is_lyndon(w) || (i > 0 && !(words[i - 1] < w))) {
      throw std::invalid_argument("stored basis entry (" + format_word(w) + ") is not valid");
    }
  }
  auto& cache = basis_cache();
  std::unique_lock lock(cache.mutex);
  cache.map[{n, k}] = std::make_shared<const std::vector<Word>>(std::move(words));
}

}  // namespace jw::freelie
