#include <doctest.h>

#include <random>

#include "jw/cyclic/jmodule.hpp"
#include "jw/cyclic/necklace.hpp"
#include "jw/freelie/lie.hpp"

using namespace jw;
using namespace jw::cyclic;
using freelie::make_word;

TEST_CASE("necklace canonical form") {
  CHECK(necklace_canonicalize(make_word({2, 1})) == make_word({1, 2}));
  CHECK(necklace_canonicalize(make_word({1, 2, 1, 2})) == make_word({1, 2, 1, 2}));
  CHECK(necklace_canonicalize(make_word({2, 1, 1, 2, 1})) == make_word({1, 1, 2, 1, 2}));

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> w(static_cast<std::size_t>(1 + trial % 9));
    for (auto& x : w) x = letter(rng);
    const auto word = make_word(w);
    const auto canon = necklace_canonicalize(word);
    CHECK(necklace_canonicalize(canon) == canon);
    for (std::size_t r = 0; r < word.size(); ++r) {
      const auto rotated = word.substr(r) + word.substr(0, r);
      CHECK(necklace_canonicalize(rotated) == canon);
      CHECK(canon <= rotated);
    }
  }
}

TEST_CASE("projection") {
  auto e = project_cyclic(freelie::expand(freelie::BracketTree::parse("[x1,x2]")));
  CHECK(e.is_zero());
  CyclicElement w;
  w.add(make_word({2, 1}), 1);
  CHECK(w.coefficient(make_word({1, 2})) == 1);
  CHECK(w.terms().begin()->first == make_word({1, 2}));

  for (int n = 2; n <= 3; ++n) {
    for (int k = 1; k <= 6; ++k) {
      for (const auto& m : freelie::hall_basis(n, k)) {
        if (k == 1) continue;  // degree one Lie elements are single letters
        CHECK(project_cyclic(*freelie::lyndon_expansion(m.word)).is_zero());
      }
    }
  }
}

TEST_CASE("cyclic ranks") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(cyclic_rank(n, 2, QuotientMode::full) == static_cast<std::uint64_t>(n * (n + 1) / 2));
    CHECK(cyclic_rank(n, 3, QuotientMode::bar) == static_cast<std::uint64_t>(n * (n * n - 1) / 3));
  }
  CHECK(cyclic_rank(2, 4, QuotientMode::tilde) == 2);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 8; ++k) {
      const auto all = necklaces(n, k);
      CHECK(all.size() == cyclic_rank(n, k, QuotientMode::full));
      std::uint64_t bar = 0, tilde = 0;
      for (const auto& w : all) {
        bar += survives(w, QuotientMode::bar);
        tilde += survives(w, QuotientMode::tilde);
      }
      CHECK(bar == cyclic_rank(n, k, QuotientMode::bar));
      CHECK(tilde == cyclic_rank(n, k, QuotientMode::tilde));
    }
  }
  CHECK(necklaces_with_content({2, 2}).size() == necklace_count({2, 2}));
  CHECK(necklace_count({2, 2}) == 2);
}

TEST_CASE("quotient reductions") {
  CyclicElement e;
  e.add(make_word({1, 1, 1}), 4);
  CHECK(reduce(e, QuotientMode::bar).is_zero());

  CyclicElement f;
  f.add(make_word({1, 2, 1, 2}), 1);
  f.add(make_word({1, 1, 2, 2}), 1);
  CHECK(reduce(f, QuotientMode::tilde).is_zero());
  CHECK(reduce(f, QuotientMode::bar) == f);

  CyclicElement g;
  g.add(make_word({1, 2, 3}), 1);
  CHECK(reduce(g, QuotientMode::tilde) == g);
  CHECK(parse_mode("tilde") == QuotientMode::tilde);
  CHECK_THROWS_AS(parse_mode("hat"), std::invalid_argument);
}

TEST_CASE("J module") {
  CHECK(j_rank(2) == 1);
  for (int n = 2; n <= 5; ++n) {
    const auto module = JModule::get(n);
    CHECK(module->spanning_size() == static_cast<std::size_t>(n * n * (n - 1) * (n - 1) / 4));
    CHECK(j_rank(n) == static_cast<std::uint64_t>(n * n * (n * n - 1) / 12));
    const auto z = module->integer_structure();
    CHECK(z.free_rank == j_rank(n));
    CHECK(z.torsion.empty());
  }
  CHECK(j_project(3, 1, 1, 2, 3).is_zero());
  CHECK(j_project(3, 2, 1, 1, 3) == JElement{3, [] {
          auto v = JModule::get(3)->product(1, 2, 1, 3);
          v.scale(Rational(-1));
          return JModule::get(3)->reduce(v).coords;
        }()});

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> letter(1, 4);
  const auto module = JModule::get(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int v = letter(rng), w = letter(rng), x = letter(rng), y = letter(rng);
    auto r = module->product(v, w, x, y);
    r.axpy(Rational(-1), module->product(x, w, v, y));
    r.axpy(Rational(-1), module->product(v, x, w, y));
    CHECK(module->reduce(r).is_zero());
    auto s = module->product(v, w, x, y);
    s.axpy(Rational(-1), module->product(x, y, v, w));
    CHECK(module->reduce(s).is_zero());
  }
}
