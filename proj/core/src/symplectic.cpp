#include "frs/symplectic.hpp"

#include <algorithm>

#include "frs/error.hpp"

namespace frs {

Int rescale_exponent(Int exponent, Int from, Int to) {
  exponent = mod(exponent, from);
  // zeta_from^e = zeta_to^f  <=>  e * to = f * from
  Int num = checked_mul(exponent, to);
  if (num % from != 0) {
    throw ModulusMismatch("zeta_" + std::to_string(from) + "^" + std::to_string(exponent) +
                          " is not a " + std::to_string(to) + "-th root of unity");
  }
  return mod(num / from, to);
}

BilinearForm::BilinearForm(FiniteAbelianGroup group, IntMatrix matrix)
    : group_(std::move(group)), matrix_(std::move(matrix)) {
  const std::size_t m = group_.rank();
  if (matrix_.rows() != m || matrix_.cols() != m) {
    throw InputError("form matrix must be " + std::to_string(m) + "x" + std::to_string(m));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) matrix_(i, j) = mod(matrix_(i, j), modulus());
}

bool BilinearForm::compatible_with_orders() const {
  const Int n = modulus();
  for (std::size_t i = 0; i < group_.rank(); ++i) {
    for (std::size_t j = 0; j < group_.rank(); ++j) {
      Int e = matrix_(i, j);
      if (mod(checked_mul(group_.orders()[i], e), n) != 0 ||
          mod(checked_mul(group_.orders()[j], e), n) != 0) {
        return false;
      }
    }
  }
  return true;
}

Int BilinearForm::exponent(const GroupElement& a, const GroupElement& b) const {
  const std::size_t m = group_.rank();
  if (a.coords.size() != m || b.coords.size() != m) {
    throw InvalidElement("element rank does not match the form");
  }
  const Int n = modulus();
  Int acc = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (a.coords[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (b.coords[j] != 0) row = mod(row + checked_mul(matrix_(i, j), b.coords[j]), n);
    }
    acc = mod(acc + checked_mul(a.coords[i], row), n);
  }
  return acc;
}

Bicharacter::Bicharacter(FiniteAbelianGroup group, IntMatrix matrix)
    : BilinearForm(std::move(group), std::move(matrix)) {
  if (!compatible_with_orders()) throw InvalidBicharacter("entries are not compatible with the element orders");
  const std::size_t m = group_.rank();
  for (std::size_t i = 0; i < m; ++i) {
    if (matrix_(i, i) != 0) {
      throw InvalidBicharacter("diagonal entry " + std::to_string(i) + " is nonzero");
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      if (mod(matrix_(i, j) + matrix_(j, i), modulus()) != 0) {
        throw InvalidBicharacter("matrix is not skew at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
      }
    }
  }
}

Bicharacter Bicharacter::trivial(const FiniteAbelianGroup& group) {
  return Bicharacter(group, IntMatrix(group.rank(), group.rank()));
}

namespace {

IntMatrix pulled_matrix(const BilinearForm& form, const GroupHomomorphism& phi) {
  if (!(phi.target() == form.group())) throw InvalidHomomorphism("target does not match the form");
  const auto& src = phi.source();
  IntMatrix out(src.rank(), src.rank());
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < src.rank(); ++i) images.push_back(phi.apply(src.basis(i)));
  for (std::size_t i = 0; i < src.rank(); ++i) {
    for (std::size_t j = 0; j < src.rank(); ++j) {
      out(i, j) = rescale_exponent(form.exponent(images[i], images[j]), form.modulus(),
                                   src.exponent());
    }
  }
  return out;
}

}  // namespace

Bicharacter Bicharacter::pullback(const GroupHomomorphism& phi) const {
  return Bicharacter(phi.source(), pulled_matrix(*this, phi));
}

Cocycle::Cocycle(FiniteAbelianGroup group, IntMatrix matrix)
    : BilinearForm(std::move(group), std::move(matrix)) {
  if (!compatible_with_orders()) throw InvalidCocycle("entries are not compatible with the element orders");
}

Cocycle Cocycle::trivial(const FiniteAbelianGroup& group) {
  return Cocycle(group, IntMatrix(group.rank(), group.rank()));
}

Cocycle Cocycle::pullback(const GroupHomomorphism& phi) const {
  return Cocycle(phi.source(), pulled_matrix(*this, phi));
}

Bicharacter polarize(const Cocycle& xi) {
  const std::size_t m = xi.group().rank();
  IntMatrix b(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b(i, j) = xi.matrix()(i, j) - xi.matrix()(j, i);
  return Bicharacter(xi.group(), std::move(b));
}

Cocycle split(const Bicharacter& beta) {
  const std::size_t m = beta.group().rank();
  IntMatrix c(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) c(i, j) = beta.matrix()(i, j);
  return Cocycle(beta.group(), std::move(c));
}

std::vector<GroupElement> radical(const Bicharacter& beta) {
  const auto& g = beta.group();
  const std::size_t m = g.rank();
  const Int n = beta.modulus();
  // a in Rad  <=>  sum_i a_i B_ij = 0 mod N for every j  <=>  B^t a = 0 mod N.
  SmithForm snf = smith_normal_form(beta.matrix().transpose());
  std::vector<GroupElement> gens;
  for (std::size_t k = 0; k < m; ++k) {
    Int s = snf.diagonal(k, k);
    Int scale = s == 0 ? 1 : n / gcd(s, n);
    std::vector<Int> coords(m);
    for (std::size_t i = 0; i < m; ++i) coords[i] = checked_mul(snf.right(i, k), scale);
    gens.push_back(g.element(std::move(coords)));
  }
  return subgroup_generated(g, gens);
}

std::vector<GroupElement> radical_by_enumeration(const Bicharacter& beta) {
  const auto& g = beta.group();
  std::vector<GroupElement> out;
  for (const auto& a : g.elements()) {
    bool central = true;
    for (std::size_t j = 0; j < g.rank() && central; ++j) central = beta.commutes(a, g.basis(j));
    if (central) out.push_back(a);
  }
  return out;
}

bool is_nonsingular(const Bicharacter& beta) { return radical(beta).size() == 1; }

bool is_isometry(const GroupHomomorphism& phi, const Bicharacter& beta) {
  const auto& g = beta.group();
  if (!(phi.source() == g) || !(phi.target() == g)) return false;
  if (!phi.is_bijective()) return false;
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(phi.apply(g.basis(i)));
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j)
      if (beta.exponent(images[i], images[j]) != beta.matrix()(i, j)) return false;
  return true;
}

std::vector<RootOfUnity> coboundary_potential(const Cocycle& sigma) {
  const auto& g = sigma.group();
  const std::size_t m = g.rank();
  const Int n = sigma.modulus();
  const IntMatrix& s = sigma.matrix();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (s(i, j) != s(j, i)) throw InvalidCocycle("cocycle is not symmetric");

  // q(x) = -x^t S x + sum_i n_i S_ii x_i (mod 2N) is well defined on G and
  // q(a) + q(b) - q(a+b) = 2 a^t S b.
  const Int two_n = 2 * n;
  std::vector<RootOfUnity> out;
  out.reserve(g.order());
  for (const auto& x : g.elements()) {
    Int q = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        q = mod(q - checked_mul(checked_mul(x.coords[i], x.coords[j]), s(i, j)), two_n);
      }
      q = mod(q + checked_mul(checked_mul(g.orders()[i], s(i, i)), x.coords[i]), two_n);
    }
    out.emplace_back(two_n, q);
  }
  return out;
}

}  // namespace frs
