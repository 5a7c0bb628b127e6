#include "frs/abelian.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "frs/error.hpp"

namespace frs {

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i) os << ',';
    os << g.coords[i];
  }
  os << ')';
  return os.str();
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> orders) : orders_(std::move(orders)) {
  for (Int n : orders_) {
    if (n < 1) throw InvalidElement("group orders must be >= 1");
    exponent_ = lcm(exponent_, n);
    order_ = static_cast<std::size_t>(checked_mul(static_cast<Int>(order_), n));
  }
}

GroupElement FiniteAbelianGroup::zero() const { return GroupElement{std::vector<Int>(rank(), 0)}; }

GroupElement FiniteAbelianGroup::basis(std::size_t i) const {
  if (i >= rank()) throw InvalidElement("basis index out of range");
  GroupElement e = zero();
  e.coords[i] = orders_[i] == 1 ? 0 : 1;
  return e;
}

GroupElement FiniteAbelianGroup::element(std::vector<Int> coords) const {
  if (coords.size() != rank()) {
    throw InvalidElement("element has rank " + std::to_string(coords.size()) +
                         ", group has rank " + std::to_string(rank()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod(coords[i], orders_[i]);
  return GroupElement{std::move(coords)};
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const noexcept {
  if (g.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (g.coords[i] < 0 || g.coords[i] >= orders_[i]) return false;
  }
  return true;
}

void FiniteAbelianGroup::require(const GroupElement& g) const {
  if (!contains(g)) throw InvalidElement("element " + to_string(g) + " is not in the group");
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  GroupElement out = a;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.coords[i] += b.coords[i];
    if (out.coords[i] >= orders_[i]) out.coords[i] -= orders_[i];
  }
  return out;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  require(a);
  GroupElement out = a;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.coords[i] = out.coords[i] == 0 ? 0 : orders_[i] - out.coords[i];
  }
  return out;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

GroupElement FiniteAbelianGroup::multiple(Int k, const GroupElement& a) const {
  require(a);
  GroupElement out = a;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.coords[i] = mod(checked_mul(mod(k, orders_[i]), a.coords[i]), orders_[i]);
  }
  return out;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
  require(g);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(g.coords[i]);
  }
  return idx;
}

GroupElement FiniteAbelianGroup::at(std::size_t index) const {
  if (index >= order_) throw InvalidElement("element index out of range");
  GroupElement g = zero();
  for (std::size_t i = rank(); i-- > 0;) {
    auto n = static_cast<std::size_t>(orders_[i]);
    g.coords[i] = static_cast<Int>(index % n);
    index /= n;
  }
  return g;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(at(i));
  return out;
}

std::vector<Int> FiniteAbelianGroup::invariant_factors() const {
  IntMatrix d(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i) d(i, i) = orders_[i];
  SmithForm snf = smith_normal_form(d);
  std::vector<Int> out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (snf.diagonal(i, i) > 1) out.push_back(snf.diagonal(i, i));
  }
  return out;
}

Int element_order(const FiniteAbelianGroup& group, const GroupElement& g) {
  if (!group.contains(g)) throw InvalidElement("element " + to_string(g) + " is not in the group");
  Int order = 1;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    Int n = group.orders()[i];
    order = lcm(order, n / gcd(n, g.coords[i]));
  }
  return order;
}

std::vector<GroupElement> subgroup_generated(const FiniteAbelianGroup& group,
                                             std::span<const GroupElement> gens) {
  // Breadth-first closure under adding generators; finite order makes this
  // closed under negation as well.
  std::vector<char> seen(group.order(), 0);
  std::vector<GroupElement> frontier{group.zero()};
  seen[group.index_of(frontier.front())] = 1;
  std::vector<GroupElement> all = frontier;
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        GroupElement y = group.add(x, s);
        auto idx = group.index_of(y);
        if (!seen[idx]) {
          seen[idx] = 1;
          next.push_back(y);
          all.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool is_subgroup(const FiniteAbelianGroup& group, std::span<const GroupElement> elements) {
  std::vector<char> member(group.order(), 0);
  for (const auto& e : elements) {
    if (!group.contains(e)) return false;
    member[group.index_of(e)] = 1;
  }
  if (!member[group.index_of(group.zero())]) return false;
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (!member[group.index_of(group.sub(a, b))]) return false;
    }
  }
  return true;
}

GroupHomomorphism::GroupHomomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                                     IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank()) {
    throw InvalidHomomorphism("matrix shape does not match source/target ranks");
  }
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      matrix_(i, j) = mod(matrix_(i, j), target_.orders()[i]);
    }
  }
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
      if (mod(checked_mul(source_.orders()[j], matrix_(i, j)), target_.orders()[i]) != 0) {
        throw InvalidHomomorphism("image of generator " + std::to_string(j) +
                                  " has order not dividing " +
                                  std::to_string(source_.orders()[j]));
      }
    }
  }
}

GroupHomomorphism::GroupHomomorphism(const FiniteAbelianGroup& group, IntMatrix matrix)
    : GroupHomomorphism(group, group, std::move(matrix)) {}

GroupHomomorphism GroupHomomorphism::identity(const FiniteAbelianGroup& group) {
  return GroupHomomorphism(group, IntMatrix::identity(group.rank()));
}

GroupHomomorphism GroupHomomorphism::from_images(const FiniteAbelianGroup& source,
                                                 const FiniteAbelianGroup& target,
                                                 std::span<const GroupElement> images) {
  if (images.size() != source.rank()) {
    throw InvalidHomomorphism("need one image per source generator");
  }
  IntMatrix m(target.rank(), source.rank());
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (!target.contains(images[j])) throw InvalidElement("image is not in the target group");
    for (std::size_t i = 0; i < target.rank(); ++i) m(i, j) = images[j].coords[i];
  }
  return GroupHomomorphism(source, target, std::move(m));
}

GroupElement GroupHomomorphism::apply(const GroupElement& g) const {
  if (!source_.contains(g)) throw InvalidElement("element " + to_string(g) + " is not in the source");
  GroupElement out = target_.zero();
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    Int n = target_.orders()[i];
    Int acc = 0;
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      acc = mod(acc + checked_mul(matrix_(i, j), g.coords[j]), n);
    }
    out.coords[i] = acc;
  }
  return out;
}

GroupHomomorphism GroupHomomorphism::compose(const GroupHomomorphism& inner) const {
  if (!(inner.target_ == source_)) throw InvalidHomomorphism("composition of incompatible maps");
  std::vector<GroupElement> images;
  images.reserve(inner.source_.rank());
  for (std::size_t j = 0; j < inner.source_.rank(); ++j) {
    images.push_back(apply(inner.apply(inner.source_.basis(j))));
  }
  return from_images(inner.source_, target_, images);
}

bool GroupHomomorphism::is_injective() const {
  for (std::size_t i = 1; i < source_.order(); ++i) {
    if (apply(source_.at(i)) == target_.zero()) return false;
  }
  return true;
}

bool GroupHomomorphism::is_bijective() const {
  return source_.order() == target_.order() && is_injective();
}

GroupElement Quotient::lift(const GroupElement& g) const {
  if (!target.contains(g)) throw InvalidElement("element is not in the quotient");
  GroupElement out = source.zero();
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    out = source.add(out, source.multiple(g.coords[i], lifts[i]));
  }
  return out;
}

Quotient quotient(const FiniteAbelianGroup& group, std::span<const GroupElement> subgroup) {
  if (!is_subgroup(group, subgroup)) throw NotASubgroup("subset is not a subgroup");

  // Relations of G/H: the columns of [diag(n) | H].
  const std::size_t m = group.rank();
  IntMatrix relations(m, m + subgroup.size());
  for (std::size_t i = 0; i < m; ++i) relations(i, i) = group.orders()[i];
  for (std::size_t j = 0; j < subgroup.size(); ++j) {
    for (std::size_t i = 0; i < m; ++i) relations(i, m + j) = subgroup[j].coords[i];
  }
  SmithForm snf = smith_normal_form(relations);

  std::vector<Int> orders;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m; ++i) {
    Int d = snf.diagonal(i, i);
    if (d > 1) {
      orders.push_back(d);
      kept.push_back(i);
    }
  }
  FiniteAbelianGroup target(orders);
  IntMatrix proj(kept.size(), m);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    for (std::size_t c = 0; c < m; ++c) proj(r, c) = snf.left(kept[r], c);
  }
  GroupHomomorphism projection(group, target, std::move(proj));

  std::vector<GroupElement> lifts;
  for (std::size_t r = 0; r < kept.size(); ++r) {
    std::vector<Int> coords(m);
    for (std::size_t c = 0; c < m; ++c) coords[c] = snf.left_inverse(c, kept[r]);
    lifts.push_back(group.element(std::move(coords)));
  }
  return Quotient{group, std::move(target), std::move(projection), std::move(lifts)};
}

}  // namespace frs
