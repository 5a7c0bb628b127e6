#pragma once

// Finite abelian groups G = Z_{n_1} x ... x Z_{n_m} in an explicit (not
// necessarily canonical) presentation, their elements, subgroups, quotients
// and homomorphisms.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "frs/intmatrix.hpp"

namespace frs {

/// Residue vector; coordinate i always lies in [0, n_i).
struct GroupElement {
  std::vector<Int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

std::string to_string(const GroupElement& g);

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Throws InvalidElement if some order is < 1.
  explicit FiniteAbelianGroup(std::vector<Int> orders);

  const std::vector<Int>& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  /// lcm of the orders.
  Int exponent() const noexcept { return exponent_; }
  /// |G|
  std::size_t order() const noexcept { return order_; }

  GroupElement zero() const;
  /// i-th standard generator e_i.
  GroupElement basis(std::size_t i) const;
  /// Reduces arbitrary integer coordinates into normal form.
  GroupElement element(std::vector<Int> coords) const;
  /// True iff g has the right rank and is already normalized.
  bool contains(const GroupElement& g) const noexcept;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement multiple(Int k, const GroupElement& a) const;

  /// Mixed-radix index; increasing index is lexicographic order of coords.
  std::size_t index_of(const GroupElement& g) const;
  GroupElement at(std::size_t index) const;
  /// All elements in lexicographic order.
  std::vector<GroupElement> elements() const;

  /// Invariant factors d_1 | d_2 | ... (all > 1) of the canonical form.
  std::vector<Int> invariant_factors() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  void require(const GroupElement& g) const;

  std::vector<Int> orders_;
  Int exponent_ = 1;
  std::size_t order_ = 1;
};

/// Least t >= 1 with t*g = 0.
Int element_order(const FiniteAbelianGroup& group, const GroupElement& g);

/// Closure of S u {0} under + and -, sorted lexicographically.
std::vector<GroupElement> subgroup_generated(const FiniteAbelianGroup& group,
                                             std::span<const GroupElement> gens);

/// True iff `elements` (any order, no duplicates required) is closed under
/// subtraction and contains 0.
bool is_subgroup(const FiniteAbelianGroup& group, std::span<const GroupElement> elements);

/// Homomorphism between two presented groups. Column j of the matrix holds
/// the image of the j-th generator of the source.
class GroupHomomorphism {
 public:
  GroupHomomorphism() = default;
  /// Throws InvalidHomomorphism unless n_j * column_j = 0 in the target.
  GroupHomomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target, IntMatrix matrix);
  /// Endomorphism constructor.
  GroupHomomorphism(const FiniteAbelianGroup& group, IntMatrix matrix);

  static GroupHomomorphism identity(const FiniteAbelianGroup& group);
  /// Homomorphism sending generator j to images[j].
  static GroupHomomorphism from_images(const FiniteAbelianGroup& source,
                                       const FiniteAbelianGroup& target,
                                       std::span<const GroupElement> images);

  const FiniteAbelianGroup& source() const noexcept { return source_; }
  const FiniteAbelianGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  GroupElement apply(const GroupElement& g) const;
  /// (*this) o inner
  GroupHomomorphism compose(const GroupHomomorphism& inner) const;
  bool is_injective() const;
  bool is_bijective() const;

  friend bool operator==(const GroupHomomorphism& a, const GroupHomomorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }

 private:
  FiniteAbelianGroup source_;
  FiniteAbelianGroup target_;
  IntMatrix matrix_;
};

using GroupEndomorphism = GroupHomomorphism;

/// G -> G/H together with a section on generators.
struct Quotient {
  FiniteAbelianGroup source;
  FiniteAbelianGroup target;  // invariant-factor form
  GroupHomomorphism projection;
  /// lifts[i] is a preimage of the i-th generator of the target.
  std::vector<GroupElement> lifts;

  GroupElement project(const GroupElement& g) const { return projection.apply(g); }
  GroupElement lift(const GroupElement& g) const;
};

/// Throws NotASubgroup if H is not closed.
Quotient quotient(const FiniteAbelianGroup& group, std::span<const GroupElement> subgroup);

}  // namespace frs
