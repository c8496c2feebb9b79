#include "jw/tangent/derivation.hpp"

#include <stdexcept>

namespace jw::tangent {

Derivation::Derivation(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1) throw std::invalid_argument("derivation needs n >= 1");
  if (degree < 0) throw std::invalid_argument("derivation degree must be >= 0");
}

const LieElement& Derivation::value(int i) const {
  static const LieElement zero;
  auto it = values_.find(i);
  return it == values_.end() ? zero : it->second;
}

void Derivation::set(int i, LieElement value) {
  if (i < 1 || i > n_) throw std::invalid_argument("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  if (value.is_zero()) {
    values_.erase(i);
    return;
  }
  if (value.degree() != static_cast<std::size_t>(degree_ + 1)) {
    throw std::invalid_argument("derivation of degree " + std::to_string(degree_) + " needs values of degree " +
                                std::to_string(degree_ + 1));
  }
  for (const auto& [w, c] : value.terms()) {
    if (freelie::max_letter(w) > n_) throw std::invalid_argument("value uses a generator beyond n");
  }
  values_[i] = std::move(value);
}

void Derivation::add(int i, const LieElement& value) { set(i, this->value(i) + value); }

void Derivation::check_compatible(const Derivation& other) const {
  if (n_ != other.n_ || degree_ != other.degree_) {
    throw std::invalid_argument("derivations differ in n or degree");
  }
}

Derivation& Derivation::operator+=(const Derivation& other) {
  check_compatible(other);
  for (const auto& [i, v] : other.values_) add(i, v);
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
  check_compatible(other);
  for (const auto& [i, v] : other.values_) add(i, -v);
  return *this;
}

Derivation& Derivation::operator*=(const Integer& factor) {
  if (factor == 0) {
    values_.clear();
  } else {
    for (auto& [i, v] : values_) v *= factor;
  }
  return *this;
}

std::string Derivation::to_string() const {
  if (values_.empty()) return "0";
  std::string out;
  for (const auto& [i, v] : values_) {
    if (!out.empty()) out += " + ";
    out += "x" + std::to_string(i) + "* (x) (" + v.to_string() + ")";
  }
  return out;
}

std::string PBasisIndex::to_string() const {
  return "x" + std::to_string(i) + "* (x) [" + freelie::HallMonomial{u}.to_string() + ",x" + std::to_string(i) + "]";
}

namespace {

// Leibniz rule on tensor words: each letter l is replaced in turn by F(l).
TensorElement apply_tensor(const std::map<int, TensorElement>& images, const TensorElement& t) {
  TensorElement out;
  Integer coef;
  for (const auto& [w, c] : t.terms()) {
    for (std::size_t p = 0; p < w.size(); ++p) {
      auto it = images.find(static_cast<int>(w[p]));
      if (it == images.end()) continue;
      const Word prefix = w.substr(0, p);
      const Word suffix = w.substr(p + 1);
      for (const auto& [v, d] : it->second.terms()) {
        coef = c * d;
        out.add(prefix + v + suffix, coef);
      }
    }
  }
  return out;
}

std::map<int, TensorElement> tensor_images(const Derivation& f) {
  std::map<int, TensorElement> images;
  for (const auto& [i, v] : f.values()) images.emplace(i, freelie::embed_tensor(v));
  return images;
}

}  // namespace

LieElement apply(const Derivation& f, const LieElement& a) {
  if (a.is_zero()) return {};
  return freelie::normalize(apply_tensor(tensor_images(f), freelie::embed_tensor(a)));
}

Derivation der_bracket(const Derivation& f, const Derivation& g) {
  if (f.n() != g.n()) throw std::invalid_argument("der_bracket needs equal n");
  Derivation out(f.n(), f.degree() + g.degree());
  const auto fi = tensor_images(f);
  const auto gi = tensor_images(g);
  for (int i = 1; i <= f.n(); ++i) {
    TensorElement t;
    auto git = gi.find(i);
    if (git != gi.end()) t += apply_tensor(fi, git->second);
    auto fit = fi.find(i);
    if (fit != fi.end()) t -= apply_tensor(gi, fit->second);
    out.set(i, freelie::normalize(t));
  }
  return out;
}

TensorElement contract(const Derivation& f) {
  TensorElement out;
  for (const auto& [i, v] : f.values()) {
    const char letter = static_cast<char>(i);
    const auto t = freelie::embed_tensor(v);
    for (const auto& [w, c] : t.terms()) {
      if (!w.empty() && w[0] == letter) out.add(w.substr(1), c);
    }
  }
  return out;
}

cyclic::CyclicElement trace(const Derivation& f, cyclic::QuotientMode mode) {
  return cyclic::reduce(cyclic::project_cyclic(contract(f)), mode);
}

cyclic::JElement trace_J(const Derivation& f) {
  if (f.degree() != 4) {
    throw std::invalid_argument("trace_J needs a derivation of degree 4, got degree " + std::to_string(f.degree()));
  }
  const auto module = cyclic::JModule::get(f.n());
  exactlin::SparseVector acc;
  const auto phi = contract(f);
  for (const auto& [w, c] : phi.terms()) {
    const int v = w[0], x = w[2];
    const int ww = w[1], y = w[3];
    acc.axpy(Rational(c), module->product(v, x, ww, y));
    acc.axpy(Rational(-2 * c), module->product(v, y, ww, x));
  }
  return module->reduce(acc);
}

std::vector<PBasisIndex> p_basis(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("p_basis needs n >= 1 and k >= 1");
  const auto words = freelie::hall_words(n, k);
  std::vector<PBasisIndex> out;
  for (int i = 1; i <= n; ++i) {
    for (const auto& u : *words) {
      if (k == 1 && u[0] == static_cast<char>(i)) continue;
      out.push_back({i, u});
    }
  }
  return out;
}

Derivation tangential(int n, int i, const LieElement& u) {
  const int k = static_cast<int>(u.degree());
  Derivation out(n, k == 0 ? 1 : k);
  if (u.is_zero()) return out;
  out.set(i, freelie::bracket(u, LieElement::generator(i)));
  return out;
}

Derivation tangential(int n, const TangentialGenerator& g) {
  if (g.word.empty()) throw std::invalid_argument("tangential generator needs a nonempty word");
  std::vector<int> letters = g.word;
  letters.push_back(g.i);
  Derivation out(n, static_cast<int>(g.word.size()));
  out.set(g.i, freelie::normalize(freelie::BracketTree::left_normed(letters)));
  return out;
}

Derivation tangential(int n, const PBasisIndex& index) { return tangential(n, index.i, LieElement::basis(index.u)); }

Derivation tau1_generator(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("tau1_generator needs i != j");
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("tau1_generator index outside 1..n");
  return tangential(n, TangentialGenerator{i, {j}});
}

LieElement tangential_part(const LieElement& value, int i) {
  if (value.is_zero()) return {};
  const char letter = static_cast<char>(i);
  // value = U x_i - x_i U. Stripping a trailing x_i gives A = U - x_i Q(U),
  // where Q strips a trailing x_i, so U = sum_m x_i^m Q^m(A).
  auto strip_last = [letter](const TensorElement& t) {
    TensorElement out;
    for (const auto& [w, c] : t.terms()) {
      if (!w.empty() && w.back() == letter) out.add(w.substr(0, w.size() - 1), c);
    }
    return out;
  };
  TensorElement cur = strip_last(freelie::embed_tensor(value));
  TensorElement u;
  Word prefix;
  while (!cur.is_zero()) {
    for (const auto& [w, c] : cur.terms()) u.add(prefix + w, c);
    cur = strip_last(cur);
    prefix.push_back(letter);
  }
  // Words of u of length zero can only come from a malformed value.
  if (u.terms().count(Word{}) > 0) throw std::invalid_argument("value is not of the form [u, x_i]");
  LieElement result = freelie::normalize(u);
  if (value.degree() == 2) result.add(Word(1, letter), -result.coefficient(Word(1, letter)));
  if (freelie::bracket(result, LieElement::generator(i)) != value) {
    throw std::invalid_argument("value is not of the form [u, x" + std::to_string(i) + "]");
  }
  return result;
}

std::map<PBasisIndex, Integer> p_coordinates(const Derivation& f) {
  std::map<PBasisIndex, Integer> out;
  for (const auto& [i, v] : f.values()) {
    const auto u = tangential_part(v, i);
    for (const auto& [w, c] : u.terms()) out.emplace(PBasisIndex{i, w}, c);
  }
  return out;
}

Derivation from_p_coordinates(int n, int k, const std::map<PBasisIndex, Integer>& coords) {
  Derivation out(n, k);
  std::map<int, LieElement> us;
  for (const auto& [idx, c] : coords) us[idx.i].add(idx.u, c);
  for (const auto& [i, u] : us) {
    if (!u.is_zero()) out.set(i, freelie::bracket(u, LieElement::generator(i)));
  }
  return out;
}

}  // namespace jw::tangent
