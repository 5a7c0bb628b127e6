#pragma once

// Graded Lie algebras with one-dimensional components u_a and brackets
// [u_a, u_b] = c(a, b) u_{a+b}, c(a, b) in Q(zeta_N).

#include <optional>
#include <vector>

#include "frs/cyclotomic.hpp"
#include "frs/rootsystem.hpp"
#include "frs/symplectic.hpp"

namespace frs {

struct BracketTerm {
  GroupElement left;
  GroupElement right;
  CyclotomicNumber value;
};

class GradedLieAlgebra {
 public:
  /// c(a, b) = xi(a, b) - xi(b, a) on `support`. Throws NotClosed if a
  /// nonzero bracket leaves the support.
  GradedLieAlgebra(const Cocycle& xi, std::vector<GroupElement> support);

  /// Explicit structure constants; each term fixes c(left, right) and
  /// c(right, left) = -value. Throws NotClosed, ModulusMismatch, InvalidElement.
  static GradedLieAlgebra from_table(FiniteAbelianGroup group, Int modulus,
                                     std::vector<GroupElement> support,
                                     const std::vector<BracketTerm>& terms);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  Int modulus() const noexcept { return modulus_; }
  const std::vector<GroupElement>& support() const noexcept { return support_; }
  std::size_t dimension() const noexcept { return support_.size(); }
  const std::optional<Cocycle>& cocycle() const noexcept { return cocycle_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position(const GroupElement& a) const;
  /// Position of support[i] + support[j], or npos.
  std::size_t sum_position(std::size_t i, std::size_t j) const { return sum_[i * dimension() + j]; }

  bool bracket_is_zero(std::size_t i, std::size_t j) const { return slot_[i * dimension() + j] < 0; }
  /// c(support[i], support[j])
  CyclotomicNumber coefficient(std::size_t i, std::size_t j) const;
  /// Nonzero constants with left < right in support order.
  std::vector<BracketTerm> bracket_table() const;

  /// Copy with c(i, j) = value and c(j, i) = -value. The cocycle is dropped.
  GradedLieAlgebra with_coefficient(std::size_t i, std::size_t j, const CyclotomicNumber& value) const;
  /// Structure constants in the basis scale[a] u_a:
  /// c'(a, b) = c(a, b) scale[a] scale[b] / scale[a+b].
  GradedLieAlgebra rescaled(const std::vector<CyclotomicNumber>& scale) const;

 private:
  GradedLieAlgebra(FiniteAbelianGroup group, Int modulus, std::vector<GroupElement> support);
  void set(std::size_t i, std::size_t j, const CyclotomicNumber& value);
  const CyclotomicNumber& value_at(std::size_t i, std::size_t j) const { return values_[slot_[i * dimension() + j]]; }

  FiniteAbelianGroup group_;
  Int modulus_ = 1;
  std::vector<GroupElement> support_;
  std::optional<Cocycle> cocycle_;
  std::vector<std::uint32_t> position_;  // group index -> support position + 1
  std::vector<std::size_t> sum_;
  std::vector<std::int32_t> slot_;
  std::vector<CyclotomicNumber> values_;
};

/// L(xi): every element of G.
GradedLieAlgebra build_full(const Cocycle& xi);
/// L(R) with the lower-triangular splitting of beta. Throws InvalidRootSystem.
GradedLieAlgebra build_root(const RootSystem& system);
/// L(R) with an explicit cocycle; throws InvalidCocycle unless it polarizes to beta.
GradedLieAlgebra build_root(const RootSystem& system, const Cocycle& xi);

struct JacobiReport {
  bool holds = true;
  std::size_t triples = 0;
  std::vector<GroupElement> witness;
  std::optional<CyclotomicNumber> residual;
};

JacobiReport check_jacobi(const GradedLieAlgebra& algebra);

/// Support of the center, computed from the brackets.
std::vector<GroupElement> center(const GradedLieAlgebra& algebra);
/// Support of [L, L].
std::vector<GroupElement> derived(const GradedLieAlgebra& algebra);

/// tr(ad u_b o ad u_a)
CyclotomicNumber killing_pairing(const GradedLieAlgebra& algebra, std::size_t a, std::size_t b);

struct KillingEntry {
  GroupElement root;
  /// tr(ad u_{-a} o ad u_a)
  CyclotomicNumber trace;
  /// sum_b (2 - xi(a,b) xi(b,-a) - xi(b,a) xi(-a,b)), when a cocycle is known
  std::optional<CyclotomicNumber> sum_formula;
  /// sum_b (2 - beta(a,b) - beta(b,a))
  std::optional<CyclotomicNumber> beta_sum;
  /// xi(-a, a)
  std::optional<CyclotomicNumber> twist;
  bool formula_equals_trace = false;
  bool formula_positive = false;
  bool trace_positive = false;
};

struct KillingReport {
  std::vector<KillingEntry> entries;
  /// every u_a pairs nontrivially with u_{-a}
  bool nondegenerate = true;
  /// sum formula equals the trace at every element
  bool formula_equals_trace = true;
  bool formula_positive = true;
  bool trace_positive = true;
};

/// Diagonal Killing values. Throws OracleMismatch if the trace differs from
/// xi(-a, a) * beta_sum.
KillingReport killing(const GradedLieAlgebra& algebra);

}  // namespace frs
