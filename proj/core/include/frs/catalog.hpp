#pragma once

// Named finite root systems of the classification: I(n_1,...,n_k), I'(k),
// II(k), III(k), IV(k), IV'(k), V(k).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frs/rootsystem.hpp"
#include "frs/symplectic.hpp"

namespace frs {

enum class Family { I, Iprime, II, III, IV, IVprime, V };

struct CatalogTag {
  Family family = Family::I;
  std::vector<Int> params;

  /// Parses "I:2,2", "Iprime:3", "II:2", "III:3", "IV:4", "IVprime:4", "V:3".
  /// Throws BadParameters.
  static CatalogTag parse(const std::string& text);
  /// Inverse of parse.
  std::string to_string() const;
  /// "I(2,2)", "I'(3)", ...
  std::string display() const;
  /// Throws BadParameters if the parameters are outside the family's range.
  void validate() const;

  friend bool operator==(const CatalogTag&, const CatalogTag&) = default;
};

struct CatalogEntry {
  CatalogTag tag;
  std::vector<Int> group_orders;
  std::size_t root_count = 0;
  std::size_t dimension = 0;
  std::string lie_type;
  bool reduced = true;
  bool irreducible = true;
  std::string weyl_label;
  /// Order from the classical formula; empty when no closed form is used.
  std::optional<std::uint64_t> weyl_order;
};

RootSystem make(const CatalogTag& tag);
CatalogEntry expected(const CatalogTag& tag);

/// Cocycle with the explicit sign conventions used for the matrix models
/// (II, IV', III differ from the lower-triangular splitting).
Cocycle model_cocycle(const CatalogTag& tag);

struct Coincidence {
  CatalogTag left;
  CatalogTag right;
  bool isomorphic = false;
};

std::vector<Coincidence> coincidences();

/// Every entry with dim L(R) <= max_dim in a fixed order.
std::vector<CatalogTag> enumerate(std::size_t max_dim);

struct GeneratingCertificate {
  std::vector<GroupElement> elements;
  bool inside_roots = false;
  bool generates = false;
};

/// The explicit generating subsets for V, III and I'. Empty for other families.
std::optional<GeneratingCertificate> generating_certificate(const CatalogTag& tag);

/// Quadratic forms on F_2^{2k}: g(a) = sum a_{2i} a_{2i+1} and
/// f(a) = a_0 + a_1 + g(a) (0-based coordinates).
int quadratic_g(const GroupElement& a);
int quadratic_f(const GroupElement& a);

/// Classical orders.
std::uint64_t factorial(unsigned n);
std::uint64_t order_sl2(Int n);
/// |Sp(2k, Z_n)|
std::uint64_t order_sp(unsigned k, Int n);
/// |O^{+-}(2k, 2)|, sign = +1 or -1
std::uint64_t order_orthogonal(unsigned k, int sign);

}  // namespace frs
