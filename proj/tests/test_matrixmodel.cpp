#include <doctest.h>

#include "frs/error.hpp"
#include "frs/matrixmodel.hpp"

using namespace frs;

namespace {

CyclotomicNumber num(Int m, Int v) { return CyclotomicNumber::integer(m, v); }

// rank of the basis matrices flattened into rows
std::size_t span_dimension(const MatrixGrading& g) {
  const std::size_t n = g.matrix_size();
  ExactMatrix flat(g.size(), n * n, g.modulus());
  for (std::size_t k = 0; k < g.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat(k, i * n + j) = g.matrices()[k](i, j);
  return flat.rank();
}

}  // namespace

TEST_CASE("exact matrices") {
  auto a = ExactMatrix::from_integers({{1, 2}, {3, 4}}, 1);
  auto inv = a.inverse();
  CHECK(a * inv == ExactMatrix::identity(2, 1));
  CHECK(a.trace() == num(1, 5));
  CHECK(a.transpose()(0, 1) == num(1, 3));
  CHECK(a.pow(-1) == inv);
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.rank() == 2);
  CHECK(ExactMatrix::from_integers({{1, 2}, {2, 4}}, 1).rank() == 1);
  CHECK_THROWS_AS(ExactMatrix::from_integers({{1, 2}, {2, 4}}, 1).inverse(), DivisionByZero);
  auto k = kron(ExactMatrix::identity(2, 1), a);
  CHECK(k.rows() == 4);
  CHECK(k(3, 2) == num(1, 3));
  CHECK(k(0, 2).is_zero());
  auto p = proportion(num(3, -2) * a.lift(3), a);
  REQUIRE(p);
  CHECK(*p == num(3, -2));
  CHECK_FALSE(proportion(a, ExactMatrix::identity(2, 1)));
  CHECK(commutator(a, a).is_zero());
  CHECK_THROWS_AS(a * ExactMatrix::identity(2, 3), ModulusMismatch);
}

TEST_CASE("generalized pauli") {
  auto [x2, y2] = generalized_pauli(2);
  CHECK(x2 == ExactMatrix::from_integers({{-1, 0}, {0, 1}}, 2));
  CHECK(y2 == ExactMatrix::from_integers({{0, 1}, {1, 0}}, 2));
  for (Int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto [x, y] = generalized_pauli(n);
    auto id = ExactMatrix::identity(static_cast<std::size_t>(n), n);
    CHECK(x.pow(n) == id);
    CHECK(y.pow(n) == id);
    CHECK(x * y == CyclotomicNumber::root(n, 1) * (y * x));
    for (Int i = 0; i < n; ++i)
      for (Int j = 0; j < n; ++j) CHECK((x.pow(i) * y.pow(-j)).trace().is_zero() == (i != 0 || j != 0));
  }
  CHECK_THROWS_AS(generalized_pauli(1), BadParameters);
}

TEST_CASE("epsilon gradings") {
  auto g2 = epsilon_grading(2);
  auto [x2, y2] = generalized_pauli(2);
  CHECK(g2.matrix(g2.group().element({1, 1})) == x2 * y2);
  CHECK(g2.matrix(g2.group().element({0, 1})) == y2);

  for (Int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    auto g = epsilon_grading(n);
    CHECK(g.size() == static_cast<std::size_t>(n * n));
    CHECK(span_dimension(g) == g.size());
    CHECK(check_product_law(g).holds);
    for (const auto& a : g.support())
      for (const auto& b : g.support()) {
        bool opposite = g.group().add(a, b) == g.group().zero();
        CHECK((g.matrix(a) * g.matrix(b)).trace().is_zero() != opposite);
      }
  }

  auto g3 = epsilon_grading(3);
  const auto& G = g3.group();
  auto u = g3.matrix(G.element({1, 0})), v = g3.matrix(G.element({0, 1}));
  auto q = proportion(u * v, v * u);
  REQUIRE(q);
  // M_{(1,0)} M_{(0,1)} = X Y^{-1}, M_{(0,1)} M_{(1,0)} = Y^{-1} X = eps X Y^{-1}
  CHECK(*q == CyclotomicNumber::root(3, 2));

  auto broken = MatrixGrading(g3.group(), g3.support(), g3.matrices(), Cocycle::trivial(g3.group()));
  auto report = check_product_law(broken);
  CHECK_FALSE(report.holds);
  CHECK(report.witness.size() == 2);
}

TEST_CASE("involution splitting") {
  auto g2 = epsilon_grading(2);
  const auto& G = g2.group();
  Involution skew(ExactMatrix::from_integers({{0, 1}, {-1, 0}}, 2), false);
  Involution sym(ExactMatrix::identity(2, 2), true);
  auto ks = split_by_involution(g2, skew);
  CHECK(ks.skew == std::vector<GroupElement>{G.element({0, 1}), G.element({1, 0}), G.element({1, 1})});
  CHECK(ks.symmetric == std::vector<GroupElement>{G.zero()});
  auto kt = split_by_involution(g2, sym);
  CHECK(kt.skew == std::vector<GroupElement>{G.element({1, 1})});

  auto x = g2.matrix(G.element({1, 1}));
  CHECK(skew.apply(skew.apply(x)) == x);

  CHECK_THROWS_AS(Involution(ExactMatrix::from_integers({{0, 1}, {-1, 0}}, 2), true), NotCompatible);
  CHECK_THROWS_AS(Involution(ExactMatrix::from_integers({{1, 1}, {1, 1}}, 2), true), NotCompatible);
  auto g3 = epsilon_grading(3);
  CHECK_THROWS_AS(split_by_involution(g3, Involution(ExactMatrix::identity(3, 3), true)), NotCompatible);

  for (std::size_t k = 1; k <= 4; ++k) {
    CAPTURE(k);
    for (bool one_skew : {false, true}) {
      std::vector<std::pair<MatrixGrading, Involution>> factors;
      for (std::size_t t = 0; t < k; ++t) factors.emplace_back(g2, one_skew && t == 0 ? skew : sym);
      auto [full, inv] = tensor_grading(factors);
      CHECK(inv.symmetric() == !one_skew);
      auto split = split_by_involution(full, inv);
      std::size_t expected = (std::size_t{1} << (2 * k - 1));
      expected = one_skew ? expected + (std::size_t{1} << (k - 1)) : expected - (std::size_t{1} << (k - 1));
      CHECK(split.skew.size() == expected);
      CHECK(split.skew.size() + split.symmetric.size() == full.size());
      for (const auto& a : split.skew) CHECK((one_skew ? quadratic_f(a) : quadratic_g(a)) == 1);
      for (const auto& a : split.symmetric) CHECK((one_skew ? quadratic_f(a) : quadratic_g(a)) == 0);
    }
  }
}

TEST_CASE("tensor of epsilon gradings") {
  auto t = tensor_grading({epsilon_grading(2), epsilon_grading(4)});
  CHECK(t.group().orders() == std::vector<Int>{2, 2, 4, 4});
  CHECK(t.size() == 64);
  CHECK(t.matrix_size() == 8);
  CHECK(t.modulus() == 4);
  CHECK(check_product_law(t).holds);
  CHECK(span_dimension(t) == 64);
}

TEST_CASE("catalog models intertwine") {
  for (const char* name : {"I:2", "I:3", "I:4", "I:2,2", "I:2,4", "Iprime:2", "II:1", "II:2", "II:3", "IVprime:3",
                           "IVprime:4", "IV:3", "IV:4", "III:1", "III:2", "III:3", "V:3"}) {
    CAPTURE(name);
    auto m = matrix_model(CatalogTag::parse(name));
    auto iso = verify_iso(m.algebra, m.grading, m.images, m.scalars);
    CHECK(iso.holds);
    CHECK(iso.pairs == m.algebra.dimension() * (m.algebra.dimension() - 1) / 2);
    auto dual = verify_dual_action(m.grading, m.generators);
    CHECK(dual.holds);
    CHECK(dual.separates);
  }
}

TEST_CASE("epsilon model uses X^i Y^-j") {
  for (Int n = 2; n <= 4; ++n) {
    auto m = matrix_model(CatalogTag{Family::I, {n}});
    for (const auto& s : m.scalars) CHECK(s == CyclotomicNumber::integer(s.modulus(), 1));
    auto [x, y] = generalized_pauli(n);
    for (const auto& a : m.algebra.support())
      CHECK(m.grading.matrix(a) == x.pow(a.coords[0]) * y.pow(-a.coords[1]));
  }
}

TEST_CASE("orthogonal model bracket table") {
  auto m = matrix_model(CatalogTag::parse("II:3"));
  const auto& L = m.algebra;
  for (const auto& s : m.scalars) CHECK(s == CyclotomicNumber::integer(s.modulus(), 1));
  // e_i + e_j with i < j has ones in coordinates i..j-1
  auto root = [&](std::size_t i, std::size_t j) {
    std::vector<Int> c(6, 0);
    for (std::size_t t = i; t < j; ++t) c[t] = 1;
    return L.position(L.group().element(c));
  };
  CHECK(L.coefficient(root(0, 2), root(2, 5)) == num(2, 2));
  CHECK(L.coefficient(root(1, 3), root(1, 4)) == num(2, -2));
  CHECK(L.bracket_is_zero(root(0, 1), root(2, 3)));
  auto a = m.grading.matrix(L.support()[root(0, 2)]);
  CHECK(a == ExactMatrix::from_integers({{0, 0, 2, 0, 0, 0, 0},
                                         {0, 0, 0, 0, 0, 0, 0},
                                         {-2, 0, 0, 0, 0, 0, 0},
                                         {0, 0, 0, 0, 0, 0, 0},
                                         {0, 0, 0, 0, 0, 0, 0},
                                         {0, 0, 0, 0, 0, 0, 0},
                                         {0, 0, 0, 0, 0, 0, 0}},
                                        2));

  // a different cocycle needs rescaling
  auto split_algebra = build_root(make(m.tag));
  auto ones = std::vector<CyclotomicNumber>(split_algebra.dimension(), num(2, 1));
  CHECK_FALSE(verify_iso(split_algebra, m.grading, m.images, ones).holds);
  auto scalars = coboundary_scalars(split_algebra, model_cocycle(m.tag));
  CHECK(verify_iso(split_algebra, m.grading, m.images, scalars).holds);
}

TEST_CASE("verify_iso failures carry witnesses") {
  auto m = matrix_model(CatalogTag::parse("V:3"));
  auto bad = m.scalars;
  bad[5] = bad[5] * num(bad[5].modulus(), -1);
  auto r = verify_iso(m.algebra, m.grading, m.images, bad);
  CHECK_FALSE(r.holds);
  CHECK(r.witness.size() == 2);
  auto dup = m.images;
  dup[1] = dup[0];
  CHECK_FALSE(verify_iso(m.algebra, m.grading, dup, m.scalars).holds);
}

TEST_CASE("dual action") {
  for (Int n = 2; n <= 4; ++n) {
    auto g = epsilon_grading(n);
    auto [x, y] = generalized_pauli(n);
    auto r = verify_dual_action(g, {x, y});
    CHECK(r.holds);
    CHECK(r.separates);
    CHECK(verify_dual_action(g, {x}).separates == false);
  }
  auto g = epsilon_grading(3);
  auto bad = ExactMatrix::identity(3, 3) + ExactMatrix::unit(3, 0, 1, 3);
  auto r = verify_dual_action(g, {bad});
  CHECK_FALSE(r.holds);
  REQUIRE(r.generator);
  CHECK(*r.generator == 0);
  CHECK(r.witness.size() == 1);
}

TEST_CASE("transpose signs on I'") {
  for (Int k : {2, 3}) {
    auto m = matrix_model(CatalogTag{Family::Iprime, {k}});
    REQUIRE(m.transpose_signs);
    const auto& signs = *m.transpose_signs;
    for (std::size_t i = 0; i < m.algebra.dimension(); ++i) {
      Int last = m.algebra.support()[i].coords.back();
      CHECK(signs[i] == (last == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("model size limit") {
  CHECK_THROWS_AS(matrix_model(CatalogTag::parse("V:7")), BadParameters);
  CHECK_NOTHROW(matrix_model(CatalogTag::parse("I:8")));
}
