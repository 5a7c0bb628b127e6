#pragma once

// Finite root systems (G, beta, R): axioms, transvections, Weyl groups,
// reduction modulo a radical subgroup, reducibility and isomorphism search.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "frs/abelian.hpp"
#include "frs/symplectic.hpp"

namespace frs {

class RootSystem {
 public:
  RootSystem() = default;
  /// Roots are sorted and deduplicated. Throws InvalidElement if a root is
  /// not an element of the group. Axioms are not checked here.
  RootSystem(Bicharacter beta, std::vector<GroupElement> roots);

  const FiniteAbelianGroup& group() const noexcept { return beta_.group(); }
  const Bicharacter& beta() const noexcept { return beta_; }
  const std::vector<GroupElement>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  bool contains(const GroupElement& g) const;
  /// Position of g in roots(), or npos.
  std::size_t position(const GroupElement& g) const;
  bool is_reduced() const { return is_nonsingular(beta_); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Bicharacter beta_;
  std::vector<GroupElement> roots_;
  std::vector<std::uint32_t> slot_;  // group index -> root position + 1
};

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::string message;
  std::vector<GroupElement> witness;
};

struct VerifyReport {
  std::vector<AxiomResult> axioms;
  bool passed() const;
  /// First failing axiom, if any.
  const AxiomResult* failure() const;
};

/// FRS0 (avoids the radical, generates G), FRS1 (-R = R), FRS2.
VerifyReport verify(const RootSystem& system);

/// s_a(b) = b - i a with beta(a, b) = eps^i, eps = exp(2 pi i / ord a).
/// Throws ZeroElement.
GroupEndomorphism transvection(const Bicharacter& beta, const GroupElement& a);

inline constexpr std::size_t default_weyl_cap = 10'000'000;

enum class EnumerationStatus { Complete, CapExceeded };

/// Breadth-first closure of the transvections {s_a : a in R}. Elements are
/// packed matrices in an arena; enumeration can be resumed with a larger cap.
class WeylEnumerator {
 public:
  explicit WeylEnumerator(const RootSystem& system);

  /// Continues until the group is closed or more than `cap` elements are known.
  EnumerationStatus run(std::size_t cap = default_weyl_cap);

  bool complete() const noexcept { return complete_; }
  std::size_t size() const noexcept { return count_; }
  const std::vector<GroupEndomorphism>& generators() const noexcept { return generators_; }
  /// Element in discovery order.
  GroupEndomorphism element(std::size_t index) const;
  /// Every known element, lexicographic in the column-major matrix entries.
  std::vector<GroupEndomorphism> sorted_elements() const;

 private:
  struct Hash {
    const WeylEnumerator* owner;
    std::size_t operator()(std::uint32_t index) const;
  };
  struct Equal {
    const WeylEnumerator* owner;
    bool operator()(std::uint32_t a, std::uint32_t b) const;
  };

  const std::uint16_t* record(std::size_t index) const { return arena_.data() + index * stride_; }
  bool insert_scratch();

  FiniteAbelianGroup group_;
  std::size_t rank_ = 0;
  std::size_t stride_ = 0;
  std::vector<GroupEndomorphism> generators_;
  // transvection data: root a and i_j with s_a(e_j) = e_j - i_j a
  std::vector<std::vector<Int>> gen_root_;
  std::vector<std::vector<Int>> gen_shift_;
  std::vector<std::uint16_t> arena_;
  std::unordered_set<std::uint32_t, Hash, Equal> index_;
  std::size_t count_ = 0;
  std::size_t cursor_ = 0;
  std::size_t gen_cursor_ = 0;
  bool complete_ = false;
};

struct WeylGroup {
  std::vector<GroupEndomorphism> generators;
  /// Sorted lexicographically; only the discovered part when not complete.
  std::vector<GroupEndomorphism> elements;
  std::size_t order = 0;
  bool complete = false;
};

WeylGroup weyl_group(const RootSystem& system, std::size_t cap = default_weyl_cap);

struct Reduction {
  RootSystem system;
  Quotient quotient;
};

/// Quotient root system over G/H. Throws NotASubgroup, NotInRadical.
Reduction reduce(const RootSystem& system, std::span<const GroupElement> subgroup);
/// Reduction modulo the full radical.
Reduction reduce(const RootSystem& system);

/// Connected components of the graph on R with edges beta(a, b) != 1.
std::vector<std::vector<GroupElement>> root_components(const RootSystem& system);

/// False iff R splits into nonempty orthogonal parts whose generated
/// subgroups form a direct decomposition of G.
bool is_irreducible(const RootSystem& system);

inline constexpr std::uint64_t default_isomorphism_budget = 100'000'000;

enum class IsomorphismStatus { Found, NotIsomorphic, BudgetExceeded };

struct IsomorphismResult {
  IsomorphismStatus status = IsomorphismStatus::NotIsomorphic;
  /// Certified map G1 -> G2 when status is Found.
  std::optional<GroupHomomorphism> map;
  std::uint64_t nodes = 0;
  /// Invariant that differs, or "search exhausted".
  std::string reason;
};

/// Backtracking over images of the coordinate generators of G1. Returns
/// NotIsomorphic only on a differing invariant or a fully exhausted tree.
IsomorphismResult find_isomorphism(const RootSystem& left, const RootSystem& right,
                                   std::uint64_t budget = default_isomorphism_budget);

std::string to_string(IsomorphismStatus status);

}  // namespace frs
