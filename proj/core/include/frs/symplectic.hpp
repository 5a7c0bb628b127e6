#pragma once

// Alternating bicharacters and bimultiplicative 2-cocycles on a finite abelian
// group, stored as exponent matrices relative to zeta_N with N = exp(G).

#include <span>
#include <vector>

#include "frs/abelian.hpp"
#include "frs/cyclotomic.hpp"
#include "frs/intmatrix.hpp"

namespace frs {

/// Converts a zeta_from exponent into a zeta_to exponent. Throws
/// ModulusMismatch when the root does not lie in mu_to.
Int rescale_exponent(Int exponent, Int from, Int to);

/// Bimultiplicative form (a, b) -> zeta_N^{sum a_i b_j M_ij}. Shared storage
/// for Bicharacter and Cocycle.
class BilinearForm {
 public:
  const FiniteAbelianGroup& group() const noexcept { return group_; }
  Int modulus() const noexcept { return group_.exponent(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  /// Exponent in [0, N).
  Int exponent(const GroupElement& a, const GroupElement& b) const;
  RootOfUnity value(const GroupElement& a, const GroupElement& b) const {
    return RootOfUnity(modulus(), exponent(a, b));
  }
  CyclotomicNumber number(const GroupElement& a, const GroupElement& b) const {
    return CyclotomicNumber::root(modulus(), exponent(a, b));
  }

 protected:
  BilinearForm() = default;
  /// Reduces entries mod N.
  BilinearForm(FiniteAbelianGroup group, IntMatrix matrix);
  /// n_i M_ij = n_j M_ij = 0 mod N for all i, j.
  bool compatible_with_orders() const;

  FiniteAbelianGroup group_;
  IntMatrix matrix_;
};

class Bicharacter : public BilinearForm {
 public:
  Bicharacter() = default;
  /// Throws InvalidBicharacter unless the matrix is alternating and
  /// compatible with the orders.
  Bicharacter(FiniteAbelianGroup group, IntMatrix matrix);

  static Bicharacter trivial(const FiniteAbelianGroup& group);

  bool commutes(const GroupElement& a, const GroupElement& b) const { return exponent(a, b) == 0; }

  /// (a, b) -> beta(phi a, phi b) on the source of phi.
  Bicharacter pullback(const GroupHomomorphism& phi) const;

  friend bool operator==(const Bicharacter& a, const Bicharacter& b) {
    return a.group_ == b.group_ && a.matrix_ == b.matrix_;
  }
};

class Cocycle : public BilinearForm {
 public:
  Cocycle() = default;
  /// Throws InvalidCocycle on order incompatibility.
  Cocycle(FiniteAbelianGroup group, IntMatrix matrix);

  static Cocycle trivial(const FiniteAbelianGroup& group);

  Cocycle pullback(const GroupHomomorphism& phi) const;

  friend bool operator==(const Cocycle& a, const Cocycle& b) {
    return a.group_ == b.group_ && a.matrix_ == b.matrix_;
  }
};

/// beta(a, b) = xi(a, b) / xi(b, a)
Bicharacter polarize(const Cocycle& xi);

/// Lower-triangular cocycle with polarize(split(beta)) == beta.
Cocycle split(const Bicharacter& beta);

/// Rad(beta), sorted. Solved with Smith normal form.
std::vector<GroupElement> radical(const Bicharacter& beta);
/// Same subgroup by testing every element against the generators.
std::vector<GroupElement> radical_by_enumeration(const Bicharacter& beta);

bool is_nonsingular(const Bicharacter& beta);

/// phi bijective and beta(phi e_i, phi e_j) = beta(e_i, e_j) for all generators.
bool is_isometry(const GroupHomomorphism& phi, const Bicharacter& beta);

/// For a symmetric cocycle sigma (polarize(sigma) trivial) returns eta with
/// sigma(a, b) = eta(a) eta(b) / eta(a + b), as zeta_{2N} exponents indexed
/// like group().elements(). Throws InvalidCocycle if sigma is not symmetric.
std::vector<RootOfUnity> coboundary_potential(const Cocycle& sigma);

}  // namespace frs
