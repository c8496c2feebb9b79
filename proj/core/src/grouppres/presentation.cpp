#include "jw/grouppres/presentation.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace jw::grouppres {

GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::mccool:
      return "mccool";
    case GroupKind::bp:
      return "bp";
    case GroupKind::braid:
      return "braid";
    case GroupKind::symmetric:
      return "sym";
    case GroupKind::file:
      return "file";
  }
  return "file";
}

GroupKind parse_group_kind(const std::string& text) {
  if (text == "mccool") return GroupKind::mccool;
  if (text == "bp") return GroupKind::bp;
  if (text == "braid") return GroupKind::braid;
  if (text == "sym" || text == "symmetric") return GroupKind::symmetric;
  if (text == "file") return GroupKind::file;
  throw std::invalid_argument("unknown group '" + text + "' (expected mccool, bp, braid, sym or file)");
}

Presentation::Presentation(GroupKind kind, int n, std::vector<std::string> generators)
    : kind_(kind), n_(n), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.empty() || g.find_first_of(" \t^#") != std::string::npos) {
      throw std::invalid_argument("bad generator name '" + g + "'");
    }
    if (std::find(generators_.begin(), generators_.begin() + static_cast<std::ptrdiff_t>(i), g) !=
        generators_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw std::invalid_argument("duplicate generator '" + g + "'");
    }
  }
}

void Presentation::add_relator(std::string family, GroupWord word) {
  for (const auto& l : word) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= generators_.size()) {
      throw std::invalid_argument("relator uses an undeclared generator");
    }
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("relator letters must have exponent +1 or -1");
  }
  relators_.push_back({std::move(family), std::move(word)});
}

void Presentation::add_relation(std::string family, const GroupWord& lhs, const GroupWord& rhs) {
  add_relator(std::move(family), concat(lhs, inverse(rhs)));
}

int Presentation::generator_index(const std::string& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw std::invalid_argument("unknown generator '" + name + "'");
  return static_cast<int>(it - generators_.begin());
}

std::size_t Presentation::count(const std::string& family) const {
  return static_cast<std::size_t>(
      std::count_if(relators_.begin(), relators_.end(), [&](const Relator& r) { return r.family == family; }));
}

std::string Presentation::format_word(const GroupWord& w) const {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += generators_.at(static_cast<std::size_t>(l.gen));
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

GroupWord Presentation::parse_word(const std::string& text) const {
  GroupWord out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    int exp = 1;
    const auto caret = token.find('^');
    std::string name = token.substr(0, caret);
    if (caret != std::string::npos) {
      const std::string e = token.substr(caret + 1);
      std::size_t used = 0;
      try {
        exp = std::stoi(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != e.size()) throw std::invalid_argument("bad exponent in '" + token + "'");
    }
    const int g = generator_index(name);
    for (int t = 0; t < std::abs(exp); ++t) out.push_back({g, exp > 0 ? 1 : -1});
  }
  return out;
}

std::string Presentation::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < generators_.size(); ++i) out += (i ? " " : "") + generators_[i];
  out += '\n';
  for (const auto& r : relators_) out += format_word(r.word) + '\n';
  return out;
}

Presentation Presentation::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Presentation> p;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!p) {
      std::istringstream names(line);
      std::vector<std::string> gens;
      std::string g;
      while (names >> g) gens.push_back(g);
      p.emplace(GroupKind::file, 0, std::move(gens));
      continue;
    }
    p->add_relator("", p->parse_word(line));
  }
  if (!p) throw std::invalid_argument("presentation text has no generator line");
  return std::move(*p);
}

namespace {

GroupWord g(int gen) { return {{gen, 1}}; }

Presentation mccool(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> id(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), -1));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      id[i][j] = static_cast<int>(names.size());
      names.push_back("K" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  Presentation p(GroupKind::mccool, n, names);
  auto K = [&](int i, int j) { return g(id[i][j]); };
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      for (int k = i + 1; k <= n; ++k) {
        if (i != j && k != j) p.add_relator("P1", commutator(K(i, j), K(k, j)));
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          if (std::pair(i, j) < std::pair(k, l)) p.add_relator("P2", commutator(K(i, j), K(k, l)));
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      for (int j = 1; j <= n; ++j) {
        if (i == j || i == k || j == k) continue;
        p.add_relator("P3", commutator(K(i, k), concat(K(i, j), K(k, j))));
      }
    }
  }
  return p;
}

void braid_relations(Presentation& p, int offset, int n, const std::string& b1, const std::string& b2) {
  for (int i = 0; i + 1 < n - 1; ++i) {
    const auto a = g(offset + i), b = g(offset + i + 1);
    p.add_relation(b1, concat(concat(a, b), a), concat(concat(b, a), b));
  }
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 2; j < n - 1; ++j) p.add_relator(b2, commutator(g(offset + i), g(offset + j)));
  }
}

}  // namespace

Presentation builtin(GroupKind kind, int n) {
  if (n < 2) throw std::invalid_argument("builtin presentations need n >= 2");
  std::vector<std::string> sigma, s;
  for (int i = 1; i < n; ++i) {
    sigma.push_back("sigma" + std::to_string(i));
    s.push_back("s" + std::to_string(i));
  }
  switch (kind) {
    case GroupKind::mccool:
      return mccool(n);
    case GroupKind::braid: {
      Presentation p(kind, n, sigma);
      // Artin's form: sigma_{i+1} sigma_i sigma_{i+1} sigma_i^-1 sigma_{i+1}^-1 sigma_i^-1.
      for (int i = 0; i + 1 < n - 1; ++i) {
        const auto a = g(i), b = g(i + 1);
        p.add_relator("B1", concat(concat(concat(b, a), b), inverse(concat(concat(a, b), a))));
      }
      for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 2; j < n - 1; ++j) p.add_relator("B2", commutator(g(i), g(j)));
      }
      return p;
    }
    case GroupKind::symmetric: {
      Presentation p(kind, n, s);
      for (int i = 0; i < n - 1; ++i) p.add_relator("SY1", concat(g(i), g(i)));
      braid_relations(p, 0, n, "SY2", "SY3");
      return p;
    }
    case GroupKind::bp: {
      std::vector<std::string> names = sigma;
      names.insert(names.end(), s.begin(), s.end());
      Presentation p(kind, n, names);
      const int m = n - 1;
      braid_relations(p, 0, n, "B1", "B2");
      for (int i = 0; i < m; ++i) p.add_relator("SY1", concat(g(m + i), g(m + i)));
      braid_relations(p, m, n, "SY2", "SY3");
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if (std::abs(i - j) >= 2) p.add_relation("BP1", concat(g(i), g(m + j)), concat(g(m + j), g(i)));
        }
      }
      for (int i = 0; i + 1 < m; ++i) {
        const auto si = g(m + i), si1 = g(m + i + 1), ti = g(i), ti1 = g(i + 1);
        p.add_relation("BP2", concat(concat(si, si1), ti), concat(concat(ti1, si), si1));
      }
      for (int i = 0; i + 1 < m; ++i) {
        const auto si1 = g(m + i + 1), ti = g(i), ti1 = g(i + 1);
        p.add_relation("BP3", concat(concat(ti, ti1), g(m + i)), concat(concat(si1, ti), ti1));
      }
      return p;
    }
    case GroupKind::file:
      break;
  }
  throw std::invalid_argument("no builtin presentation for kind file");
}

}  // namespace jw::grouppres
