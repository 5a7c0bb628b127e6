#include <doctest.h>

#include <set>

#include "frs/catalog.hpp"
#include "frs/error.hpp"
#include "frs/rootsystem.hpp"

using namespace frs;

namespace {

RootSystem full_system(const FiniteAbelianGroup& g, const IntMatrix& b) {
  auto all = g.elements();
  all.erase(all.begin());
  return RootSystem(Bicharacter(g, b), all);
}

// Naive closure with full matrix composition; independent of the arena BFS.
std::set<std::vector<Int>> naive_weyl(const RootSystem& sys) {
  std::vector<GroupEndomorphism> gens;
  for (const auto& a : sys.roots()) gens.push_back(transvection(sys.beta(), a));
  std::set<std::vector<Int>> seen;
  std::vector<GroupEndomorphism> todo{GroupEndomorphism::identity(sys.group())};
  seen.insert(todo.front().matrix().data());
  while (!todo.empty()) {
    auto w = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      auto x = s.compose(w);
      if (seen.insert(x.matrix().data()).second) todo.push_back(x);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("transvections") {
  FiniteAbelianGroup g({2, 2});
  Bicharacter beta(g, IntMatrix{{0, 1}, {1, 0}});
  auto s = transvection(beta, g.element({1, 0}));
  CHECK(s.apply(g.element({0, 1})) == g.element({1, 1}));
  CHECK(s.apply(g.element({1, 0})) == g.element({1, 0}));
  CHECK_THROWS_AS(transvection(beta, g.zero()), ZeroElement);

  for (const char* t : {"I:3", "I:4", "I:2,4", "II:2", "III:2", "Iprime:2"}) {
    auto sys = make(CatalogTag::parse(t));
    const auto& grp = sys.group();
    for (const auto& a : sys.roots()) {
      auto sa = transvection(sys.beta(), a);
      CHECK(sa.apply(a) == a);
      CHECK(is_isometry(sa, sys.beta()));
      auto p = GroupEndomorphism::identity(grp);
      for (Int i = 0; i < element_order(grp, a); ++i) p = sa.compose(p);
      CHECK(p == GroupEndomorphism::identity(grp));
      for (const auto& r : sys.roots()) {
        CHECK(sys.contains(sa.apply(r)));
        if (sys.beta().commutes(a, r)) CHECK(sa.apply(r) == r);
      }
    }
  }
}

TEST_CASE("verify accepts catalog systems and quadratic-form systems") {
  FiniteAbelianGroup g({2, 2});
  CHECK(verify(full_system(g, IntMatrix{{0, 1}, {1, 0}})).passed());
  for (const char* t : {"I:2", "I:5", "I:2,2", "II:3", "III:3", "V:3", "IVprime:3", "IV:3", "Iprime:2"}) {
    CAPTURE(t);
    CHECK(verify(make(CatalogTag::parse(t))).passed());
  }
}

TEST_CASE("verify reports witnesses") {
  auto sys = make(CatalogTag::parse("V:3"));
  auto roots = sys.roots();
  auto removed = roots[5];
  roots.erase(roots.begin() + 5);
  RootSystem broken(sys.beta(), roots);
  auto report = verify(broken);
  REQUIRE_FALSE(report.passed());
  const auto* f = report.failure();
  CHECK(f->axiom == "FRS2_closure");
  REQUIRE(f->witness.size() == 2);
  CHECK(sys.group().add(f->witness[0], f->witness[1]) == removed);

  // non-root with g = 0 added
  auto more = sys.roots();
  more.push_back(sys.group().element({1, 0, 0, 0, 0, 0}));
  CHECK_FALSE(verify(RootSystem(sys.beta(), more)).passed());

  // Z_4 x Z_4, drop a root of order 4 without its negative
  FiniteAbelianGroup z4({4, 4});
  auto full = full_system(z4, IntMatrix{{0, 3}, {1, 0}});
  auto r = full.roots();
  r.erase(std::find(r.begin(), r.end(), z4.element({1, 0})));
  auto rep = verify(RootSystem(full.beta(), r));
  CHECK_FALSE(rep.passed());

  // radical element as root
  FiniteAbelianGroup z3({2, 2, 2});
  IntMatrix b(3, 3);
  b(0, 1) = b(1, 0) = 1;
  auto sing = full_system(z3, b);
  auto rep2 = verify(sing);
  CHECK(rep2.failure()->axiom == "FRS0_radical");
  CHECK(rep2.failure()->witness.front() == z3.element({0, 0, 1}));
}

TEST_CASE("weyl groups agree with naive closure") {
  for (const char* t : {"I:2", "I:3", "I:4", "II:2", "III:2", "IV:3"}) {
    CAPTURE(t);
    auto sys = make(CatalogTag::parse(t));
    auto w = weyl_group(sys);
    REQUIRE(w.complete);
    auto oracle = naive_weyl(sys);
    CHECK(w.order == oracle.size());
    std::set<std::vector<Int>> mine;
    for (const auto& e : w.elements) {
      mine.insert(e.matrix().data());
      CHECK(is_isometry(e, sys.beta()));
    }
    CHECK(mine == oracle);
    for (std::size_t i = 1; i < w.elements.size(); ++i) {
      CHECK(w.elements[i - 1].matrix().transpose().data() < w.elements[i].matrix().transpose().data());
    }
  }
  CHECK(weyl_group(make(CatalogTag::parse("I:2"))).order == 6);
  CHECK(weyl_group(make(CatalogTag::parse("I:3"))).order == 24);
  CHECK(weyl_group(make(CatalogTag::parse("II:2"))).order == 120);
  CHECK(weyl_group(make(CatalogTag::parse("I:2,2"))).order == 720);
}

TEST_CASE("weyl enumeration resumes past a cap") {
  auto sys = make(CatalogTag::parse("II:2"));
  WeylEnumerator e(sys);
  CHECK(e.run(50) == EnumerationStatus::CapExceeded);
  CHECK_FALSE(e.complete());
  CHECK(e.size() == 51);
  CHECK(e.run(100) == EnumerationStatus::CapExceeded);
  CHECK(e.run() == EnumerationStatus::Complete);
  CHECK(e.size() == 120);
  auto partial = weyl_group(sys, 10);
  CHECK_FALSE(partial.complete);
}

TEST_CASE("reduction") {
  auto iprime = make(CatalogTag::parse("Iprime:2"));
  CHECK_FALSE(iprime.is_reduced());
  auto red = reduce(iprime);
  CHECK(red.system.is_reduced());
  CHECK(red.system.group().order() == 16);
  CHECK(red.system.size() == 15);
  CHECK(verify(red.system).passed());
  auto i22 = make(CatalogTag::parse("I:2,2"));
  CHECK(find_isomorphism(red.system, i22).status == IsomorphismStatus::Found);

  std::vector<GroupElement> trivial{iprime.group().zero()};
  auto same = reduce(iprime, trivial);
  CHECK(same.system.size() == iprime.size());

  const auto& g = iprime.group();
  std::vector<GroupElement> bad{g.zero(), g.basis(0)};
  CHECK_THROWS_AS(reduce(iprime, bad), NotInRadical);

  FiniteAbelianGroup z4({4});
  RootSystem cyc(Bicharacter::trivial(z4), {});
  std::vector<GroupElement> h{z4.zero(), z4.element({2})};
  auto q = reduce(cyc, h);
  CHECK(q.system.group().orders() == std::vector<Int>{2});
}

TEST_CASE("irreducibility") {
  FiniteAbelianGroup g({2, 2, 2, 2});
  IntMatrix b(4, 4);
  b(0, 1) = b(1, 0) = b(2, 3) = b(3, 2) = 1;
  std::vector<GroupElement> roots;
  for (const auto& x : std::vector<std::vector<Int>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
                                                      {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}}) {
    roots.push_back(g.element(x));
  }
  RootSystem sum(Bicharacter(g, b), roots);
  CHECK(verify(sum).passed());
  CHECK(root_components(sum).size() == 2);
  CHECK_FALSE(is_irreducible(sum));
  CHECK(is_irreducible(make(CatalogTag::parse("I:2"))));
  for (const char* t : {"I:3", "II:2", "III:2", "IVprime:3", "Iprime:2"}) {
    CHECK(is_irreducible(make(CatalogTag::parse(t))));
  }
}

TEST_CASE("isomorphism search") {
  for (const char* l : {"II:1", "III:1", "III:2", "IV:3"}) {
    CAPTURE(l);
    auto left = make(CatalogTag::parse(l));
    auto right = make(CatalogTag::parse(std::string(l) == "IV:3" ? "I:2,2" : std::string(l) == "III:2" ? "II:2" : "I:2"));
    auto r = find_isomorphism(left, right);
    REQUIRE(r.status == IsomorphismStatus::Found);
    CHECK(right.beta().pullback(*r.map) == left.beta());
  }
  auto a = make(CatalogTag::parse("IV:4"));
  auto b = make(CatalogTag::parse("V:3"));
  // Both are {q = 1} for a plus-type quadratic form on Z_2^6.
  auto iv_v = find_isomorphism(a, b);
  REQUIRE(iv_v.status == IsomorphismStatus::Found);
  CHECK(b.beta().pullback(*iv_v.map) == a.beta());
  for (const auto& r : a.roots()) CHECK(quadratic_g(iv_v.map->apply(r)) == 1);

  // a genuinely different pair of the same size: III(3) vs II(4) share |R| = 36
  auto c = make(CatalogTag::parse("III:3"));
  auto d = make(CatalogTag::parse("II:4"));
  auto no = find_isomorphism(c, d);
  CHECK(no.status == IsomorphismStatus::NotIsomorphic);

  // same invariants, but one set is independent and the other is not
  FiniteAbelianGroup z({2, 2, 2, 2});
  RootSystem independent(Bicharacter::trivial(z), {z.basis(0), z.basis(1), z.basis(2)});
  RootSystem dependent(Bicharacter::trivial(z), {z.basis(0), z.basis(1), z.element({1, 1, 0, 0})});
  auto exhausted = find_isomorphism(independent, dependent);
  CHECK(exhausted.status == IsomorphismStatus::NotIsomorphic);
  CHECK(exhausted.reason == "search exhausted");
  CHECK(exhausted.nodes > 0);
  CHECK(find_isomorphism(a, b, 3).status == IsomorphismStatus::BudgetExceeded);
  CHECK(find_isomorphism(make(CatalogTag::parse("I:3")), make(CatalogTag::parse("I:2"))).reason ==
        "groups are not isomorphic");
  // isomorphism with self
  CHECK(find_isomorphism(b, b).status == IsomorphismStatus::Found);
}
