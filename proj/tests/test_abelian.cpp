#include <doctest.h>

#include <random>

#include "frs/abelian.hpp"
#include "frs/error.hpp"
#include "frs/intmatrix.hpp"

using namespace frs;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Int bound) {
  std::uniform_int_distribution<Int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form reconstructs its input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    IntMatrix a = random_matrix(rng, r, c, 9);
    SmithForm s = smith_normal_form(a);
    CHECK(s.left * a * s.right == s.diagonal);
    CHECK(s.left * s.left_inverse == IntMatrix::identity(r));
    std::size_t k = std::min(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.diagonal(i, j) == 0);
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(s.diagonal(i, i) >= 0);
      if (i + 1 < k && s.diagonal(i, i) != 0) CHECK(s.diagonal(i + 1, i + 1) % s.diagonal(i, i) == 0);
      if (s.diagonal(i, i) == 0 && i + 1 < k) CHECK(s.diagonal(i + 1, i + 1) == 0);
    }
  }
}

TEST_CASE("invariant factors") {
  CHECK(FiniteAbelianGroup({2, 3}).invariant_factors() == std::vector<Int>{6});
  CHECK(FiniteAbelianGroup({4, 6}).invariant_factors() == std::vector<Int>{2, 12});
  CHECK(FiniteAbelianGroup({2, 2, 2}).invariant_factors() == std::vector<Int>{2, 2, 2});
  CHECK(FiniteAbelianGroup({1, 5}).invariant_factors() == std::vector<Int>{5});
}

TEST_CASE("element arithmetic and indexing") {
  FiniteAbelianGroup g({3, 4});
  CHECK(g.order() == 12);
  CHECK(g.exponent() == 12);
  auto a = g.element({2, 3});
  auto b = g.element({2, 3});
  CHECK(g.add(a, b) == g.element({1, 2}));
  CHECK(g.neg(a) == g.element({1, 1}));
  CHECK(element_order(g, a) == 12);
  CHECK(element_order(g, g.element({0, 2})) == 2);
  for (std::size_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.at(i)) == i);
  auto els = g.elements();
  CHECK(std::is_sorted(els.begin(), els.end()));
  CHECK_THROWS_AS(g.add(a, GroupElement{{1}}), InvalidElement);
  CHECK_THROWS_AS(FiniteAbelianGroup({0}), InvalidElement);
}

TEST_CASE("subgroups and quotients") {
  FiniteAbelianGroup g({4, 6});
  std::vector<GroupElement> gens{g.element({2, 3})};
  auto h = subgroup_generated(g, gens);
  CHECK(h.size() == 2);
  CHECK(is_subgroup(g, h));
  std::vector<GroupElement> bad{g.zero(), g.element({1, 0})};
  CHECK_FALSE(is_subgroup(g, bad));
  CHECK_THROWS_AS(quotient(g, bad), NotASubgroup);

  Quotient q = quotient(g, h);
  CHECK(q.target.order() == 12);
  // kernel of the projection is exactly H
  std::size_t kernel = 0;
  for (const auto& x : g.elements()) {
    bool in_h = std::binary_search(h.begin(), h.end(), x);
    bool zero = q.project(x) == q.target.zero();
    CHECK(in_h == zero);
    kernel += zero;
  }
  CHECK(kernel == h.size());
  for (const auto& y : q.target.elements()) CHECK(q.project(q.lift(y)) == y);
}

TEST_CASE("quotients by random subgroups") {
  std::mt19937_64 rng(11);
  FiniteAbelianGroup g({2, 4, 6});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<GroupElement> gens{g.at(rng() % g.order()), g.at(rng() % g.order())};
    auto h = subgroup_generated(g, gens);
    Quotient q = quotient(g, h);
    CHECK(q.target.order() * h.size() == g.order());
    for (const auto& x : g.elements()) {
      CHECK(std::binary_search(h.begin(), h.end(), x) == (q.project(x) == q.target.zero()));
    }
    for (const auto& y : q.target.elements()) CHECK(q.project(q.lift(y)) == y);
  }
}

TEST_CASE("homomorphisms") {
  FiniteAbelianGroup z4({4}), z2({2});
  CHECK_THROWS_AS(GroupHomomorphism(z2, z4, IntMatrix{{1}}), InvalidHomomorphism);
  GroupHomomorphism f(z2, z4, IntMatrix{{2}});
  CHECK(f.is_injective());
  CHECK_FALSE(f.is_bijective());
  FiniteAbelianGroup g({2, 2});
  GroupHomomorphism swap(g, IntMatrix{{0, 1}, {1, 0}});
  CHECK(swap.is_bijective());
  CHECK(swap.compose(swap) == GroupHomomorphism::identity(g));
  CHECK(swap.apply(g.element({1, 0})) == g.element({0, 1}));
}
