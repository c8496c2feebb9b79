#include "jw/freelie/tensor.hpp"

namespace jw::freelie {

TensorElement TensorElement::of_word(const Word& w, const Integer& coef) {
  TensorElement t;
  t.add(w, coef);
  return t;
}

Integer TensorElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TensorElement::add(const Word& w, const Integer& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

void TensorElement::add_scaled(const TensorElement& other, const Integer& factor) {
  if (factor == 0) return;
  Integer tmp;
  for (const auto& [w, c] : other.terms_) {
    tmp = c * factor;
    add(w, tmp);
  }
}

TensorElement& TensorElement::operator*=(const Integer& factor) {
  if (factor == 0) {
    terms_.clear();
  } else {
    for (auto& [w, c] : terms_) c *= factor;
  }
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  Integer tmp;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      tmp = cu * cv;
      out.add(u + v, tmp);
    }
  }
  return out;
}

std::string TensorElement::to_string() const {
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
    out += "(" + format_word(w) + ")";
    first = false;
  }
  return out;
}

TensorElement commutator(const TensorElement& a, const TensorElement& b) {
  TensorElement out = a * b;
  out -= b * a;
  return out;
}

}  // namespace jw::freelie
