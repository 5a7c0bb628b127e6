#include "frs/rootsystem.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "frs/error.hpp"

namespace frs {

namespace {

constexpr std::size_t max_indexed_order = std::size_t{1} << 26;

std::string pair_text(const GroupElement& a, const GroupElement& b) {
  return to_string(a) + ", " + to_string(b);
}

}  // namespace

RootSystem::RootSystem(Bicharacter beta, std::vector<GroupElement> roots)
    : beta_(std::move(beta)), roots_(std::move(roots)) {
  const auto& g = beta_.group();
  if (g.order() > max_indexed_order) {
    throw InputError("group of order " + std::to_string(g.order()) + " is too large");
  }
  for (const auto& r : roots_) {
    if (!g.contains(r)) throw InvalidElement("root " + to_string(r) + " is not a group element");
  }
  std::sort(roots_.begin(), roots_.end());
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  slot_.assign(g.order(), 0);
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    slot_[g.index_of(roots_[i])] = static_cast<std::uint32_t>(i + 1);
  }
}

bool RootSystem::contains(const GroupElement& g) const { return position(g) != npos; }

std::size_t RootSystem::position(const GroupElement& g) const {
  if (!group().contains(g)) return npos;
  std::uint32_t s = slot_[group().index_of(g)];
  return s == 0 ? npos : s - 1;
}

bool VerifyReport::passed() const { return failure() == nullptr; }

const AxiomResult* VerifyReport::failure() const {
  for (const auto& a : axioms)
    if (!a.passed) return &a;
  return nullptr;
}

VerifyReport verify(const RootSystem& system) {
  const auto& g = system.group();
  const auto& beta = system.beta();
  const auto& roots = system.roots();
  VerifyReport report;

  AxiomResult radical_check{"FRS0_radical", true, "no root lies in the radical", {}};
  for (const auto& r : radical(beta)) {
    if (system.contains(r)) {
      radical_check = {"FRS0_radical", false, "root " + to_string(r) + " lies in the radical", {r}};
      break;
    }
  }
  report.axioms.push_back(radical_check);

  AxiomResult span_check{"FRS0_generation", true, "roots generate the group", {}};
  auto span = subgroup_generated(g, roots);
  if (span.size() != g.order()) {
    GroupElement missing = g.zero();
    for (const auto& x : g.elements()) {
      if (!std::binary_search(span.begin(), span.end(), x)) {
        missing = x;
        break;
      }
    }
    span_check = {"FRS0_generation", false,
                  "roots generate a subgroup of order " + std::to_string(span.size()) + " missing " +
                      to_string(missing),
                  {missing}};
  }
  report.axioms.push_back(span_check);

  AxiomResult neg_check{"FRS1_negation", true, "R = -R", {}};
  for (const auto& a : roots) {
    if (!system.contains(g.neg(a))) {
      neg_check = {"FRS1_negation", false, "-" + to_string(a) + " is not a root", {a}};
      break;
    }
  }
  report.axioms.push_back(neg_check);

  AxiomResult sum_check{"FRS2_closure", true, "a + b is a root whenever beta(a, b) != 1", {}};
  for (std::size_t i = 0; i < roots.size() && sum_check.passed; ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const auto& a = roots[i];
      const auto& b = roots[j];
      if (!beta.commutes(a, b) && !system.contains(g.add(a, b))) {
        sum_check = {"FRS2_closure", false,
                     "beta(" + pair_text(a, b) + ") != 1 but the sum is not a root", {a, b}};
        break;
      }
    }
  }
  report.axioms.push_back(sum_check);
  return report;
}

GroupEndomorphism transvection(const Bicharacter& beta, const GroupElement& a) {
  const auto& g = beta.group();
  if (!g.contains(a)) throw InvalidElement("element " + to_string(a) + " is not in the group");
  if (a == g.zero()) throw ZeroElement("transvection along the zero element");
  const Int unit = beta.modulus() / element_order(g, a);
  std::vector<GroupElement> images;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    auto e = g.basis(j);
    Int i = beta.exponent(a, e) / unit;
    images.push_back(g.sub(e, g.multiple(i, a)));
  }
  return GroupHomomorphism::from_images(g, g, images);
}

// ---------------------------------------------------------------------------

std::size_t WeylEnumerator::Hash::operator()(std::uint32_t index) const {
  const std::uint16_t* r = owner->record(index);
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t k = 0; k < owner->stride_; ++k) {
    h ^= r[k];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool WeylEnumerator::Equal::operator()(std::uint32_t a, std::uint32_t b) const {
  return std::equal(owner->record(a), owner->record(a) + owner->stride_, owner->record(b));
}

WeylEnumerator::WeylEnumerator(const RootSystem& system)
    : group_(system.group()),
      rank_(system.group().rank()),
      stride_(rank_ * rank_),
      index_(1024, Hash{this}, Equal{this}) {
  for (Int n : group_.orders()) {
    if (n > 65535) throw UnsupportedModulus("element orders above 65535 are not supported");
  }
  std::vector<std::pair<GroupEndomorphism, GroupElement>> by_root;
  for (const auto& a : system.roots()) {
    if (a == group_.zero()) continue;
    by_root.emplace_back(transvection(system.beta(), a), a);
  }
  std::stable_sort(by_root.begin(), by_root.end(), [](const auto& x, const auto& y) {
    return x.first.matrix().data() < y.first.matrix().data();
  });
  const Int n = system.beta().modulus();
  for (const auto& [s, a] : by_root) {
    if (!generators_.empty() && generators_.back() == s) continue;
    generators_.push_back(s);
    const Int unit = n / element_order(group_, a);
    gen_root_.push_back(a.coords);
    std::vector<Int> shift(rank_);
    for (std::size_t j = 0; j < rank_; ++j) {
      shift[j] = system.beta().exponent(a, group_.basis(j)) / unit;
    }
    gen_shift_.push_back(std::move(shift));
  }

  arena_.assign(stride_, 0);
  for (std::size_t j = 0; j < rank_; ++j) arena_[j * rank_ + j] = group_.orders()[j] == 1 ? 0 : 1;
  index_.insert(0);
  count_ = 1;
  if (generators_.empty()) complete_ = true;
}

bool WeylEnumerator::insert_scratch() {
  auto idx = static_cast<std::uint32_t>(count_);
  if (index_.insert(idx).second) {
    ++count_;
    return true;
  }
  arena_.resize(count_ * stride_);
  return false;
}

EnumerationStatus WeylEnumerator::run(std::size_t cap) {
  if (count_ > cap && !complete_) return EnumerationStatus::CapExceeded;
  const auto& orders = group_.orders();
  std::vector<Int> wa(rank_);
  while (!complete_) {
    for (; gen_cursor_ < generators_.size(); ++gen_cursor_) {
      arena_.resize((count_ + 1) * stride_);
      const std::uint16_t* w = arena_.data() + cursor_ * stride_;
      std::uint16_t* out = arena_.data() + count_ * stride_;
      const auto& a = gen_root_[gen_cursor_];
      const auto& shift = gen_shift_[gen_cursor_];
      // (w o s_a)(e_j) = w(e_j) - i_j w(a)
      for (std::size_t r = 0; r < rank_; ++r) {
        Int acc = 0;
        for (std::size_t k = 0; k < rank_; ++k) acc += a[k] * w[k * rank_ + r];
        wa[r] = acc % orders[r];
      }
      for (std::size_t j = 0; j < rank_; ++j) {
        for (std::size_t r = 0; r < rank_; ++r) {
          Int v = (static_cast<Int>(w[j * rank_ + r]) - shift[j] * wa[r]) % orders[r];
          if (v < 0) v += orders[r];
          out[j * rank_ + r] = static_cast<std::uint16_t>(v);
        }
      }
      if (insert_scratch() && count_ > cap) {
        ++gen_cursor_;
        return EnumerationStatus::CapExceeded;
      }
    }
    gen_cursor_ = 0;
    ++cursor_;
    if (cursor_ == count_) complete_ = true;
  }
  return EnumerationStatus::Complete;
}

GroupEndomorphism WeylEnumerator::element(std::size_t index) const {
  if (index >= count_) throw std::out_of_range("Weyl element index out of range");
  const std::uint16_t* r = record(index);
  IntMatrix m(rank_, rank_);
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t i = 0; i < rank_; ++i) m(i, j) = r[j * rank_ + i];
  return GroupEndomorphism(group_, std::move(m));
}

std::vector<GroupEndomorphism> WeylEnumerator::sorted_elements() const {
  std::vector<std::uint32_t> order(count_);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(record(a), record(a) + stride_, record(b), record(b) + stride_);
  });
  std::vector<GroupEndomorphism> out;
  out.reserve(count_);
  for (auto i : order) out.push_back(element(i));
  return out;
}

WeylGroup weyl_group(const RootSystem& system, std::size_t cap) {
  WeylEnumerator e(system);
  e.run(cap);
  return WeylGroup{e.generators(), e.sorted_elements(), e.size(), e.complete()};
}

// ---------------------------------------------------------------------------

Reduction reduce(const RootSystem& system, std::span<const GroupElement> subgroup) {
  const auto& g = system.group();
  const auto& beta = system.beta();
  for (const auto& h : subgroup) {
    if (!g.contains(h)) throw InvalidElement("element " + to_string(h) + " is not in the group");
    for (std::size_t j = 0; j < g.rank(); ++j) {
      if (!beta.commutes(h, g.basis(j))) {
        throw NotInRadical("element " + to_string(h) + " is not in the radical");
      }
    }
  }
  Quotient q = quotient(g, subgroup);
  const std::size_t r = q.target.rank();
  IntMatrix b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      b(i, j) = rescale_exponent(beta.exponent(q.lifts[i], q.lifts[j]), beta.modulus(),
                                 q.target.exponent());
  Bicharacter reduced(q.target, std::move(b));
  std::vector<GroupElement> roots;
  roots.reserve(system.size());
  for (const auto& a : system.roots()) roots.push_back(q.project(a));
  return Reduction{RootSystem(std::move(reduced), std::move(roots)), std::move(q)};
}

Reduction reduce(const RootSystem& system) {
  auto rad = radical(system.beta());
  return reduce(system, rad);
}

std::vector<std::vector<GroupElement>> root_components(const RootSystem& system) {
  const auto& roots = system.roots();
  std::vector<std::size_t> parent(roots.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (!system.beta().commutes(roots[i], roots[j])) {
        std::size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::map<std::size_t, std::vector<GroupElement>> comps;
  for (std::size_t i = 0; i < roots.size(); ++i) comps[find(i)].push_back(roots[i]);
  std::vector<std::vector<GroupElement>> out;
  for (auto& [k, v] : comps) out.push_back(std::move(v));
  return out;
}

bool is_irreducible(const RootSystem& system) {
  auto comps = root_components(system);
  if (comps.size() <= 1) return true;
  const auto& g = system.group();

  auto splits = [&](const std::vector<bool>& side) {
    std::vector<GroupElement> left, right;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      auto& dst = side[c] ? left : right;
      dst.insert(dst.end(), comps[c].begin(), comps[c].end());
    }
    auto h1 = subgroup_generated(g, left);
    auto h2 = subgroup_generated(g, right);
    if (h1.size() * h2.size() != g.order()) return false;
    std::vector<GroupElement> both;
    std::set_intersection(h1.begin(), h1.end(), h2.begin(), h2.end(), std::back_inserter(both));
    return both.size() == 1;
  };

  const std::size_t c = comps.size();
  if (c <= 16) {
    for (std::uint32_t mask = 1; mask < (1u << (c - 1)); ++mask) {
      std::vector<bool> side(c, false);
      side[0] = true;
      for (std::size_t k = 1; k < c; ++k) side[k] = (mask >> (k - 1)) & 1u;
      if (splits(side)) return false;
    }
    std::vector<bool> side(c, false);
    side[0] = true;
    return !splits(side);
  }
  // Many components: test each component against the rest.
  for (std::size_t k = 0; k < c; ++k) {
    std::vector<bool> side(c, false);
    side[k] = true;
    if (splits(side)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string to_string(IsomorphismStatus status) {
  switch (status) {
    case IsomorphismStatus::Found: return "isomorphic";
    case IsomorphismStatus::NotIsomorphic: return "not_isomorphic";
    case IsomorphismStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

namespace {

struct Invariants {
  std::vector<Int> factors;
  std::size_t roots = 0;
  std::size_t radical = 0;
  std::map<Int, std::size_t> root_orders;
  std::map<std::size_t, std::size_t> root_degrees;
};

Invariants invariants_of(const RootSystem& s) {
  Invariants inv;
  inv.factors = s.group().invariant_factors();
  inv.roots = s.size();
  inv.radical = radical(s.beta()).size();
  for (const auto& a : s.roots()) {
    ++inv.root_orders[element_order(s.group(), a)];
    std::size_t deg = 0;
    for (const auto& b : s.roots()) deg += !s.beta().commutes(a, b);
    ++inv.root_degrees[deg];
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const RootSystem& left, const RootSystem& right, std::uint64_t budget)
      : left_(left), right_(right), g1_(left.group()), g2_(right.group()), budget_(budget) {
    used_.assign(g2_.order(), 0);
    used_[g2_.index_of(g2_.zero())] = 1;
    for (std::size_t i = 0; i < g2_.order(); ++i) {
      auto x = g2_.at(i);
      by_order_[element_order(g2_, x)].push_back(x);
    }
    span_.push_back({g1_.zero(), g2_.zero()});
  }

  IsomorphismStatus run() {
    exceeded_ = false;
    bool found = search(0);
    if (found) return IsomorphismStatus::Found;
    return exceeded_ ? IsomorphismStatus::BudgetExceeded : IsomorphismStatus::NotIsomorphic;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<GroupElement>& images() const { return images_; }

 private:
  bool search(std::size_t i) {
    if (i == g1_.rank()) return true;
    const Int order = g1_.orders()[i];
    const auto gen = g1_.basis(i);
    const auto& candidates = by_order_[order];
    for (const auto& c : candidates) {
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return false;
      }
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = right_.beta().exponent(c, images_[j]) == left_.beta().exponent(gen, g1_.basis(j));
      }
      if (!ok) continue;

      const std::size_t before = span_.size();
      for (Int t = 1; t < order && ok; ++t) {
        auto tg = g1_.multiple(t, gen);
        auto tc = g2_.multiple(t, c);
        for (std::size_t k = 0; k < before; ++k) {
          auto x = g1_.add(span_[k].first, tg);
          auto y = g2_.add(span_[k].second, tc);
          auto yi = g2_.index_of(y);
          if (used_[yi] || left_.contains(x) != right_.contains(y)) {
            ok = false;
            break;
          }
          used_[yi] = 1;
          span_.push_back({std::move(x), std::move(y)});
        }
      }
      if (ok) {
        images_.push_back(c);
        if (search(i + 1)) return true;
        images_.pop_back();
      }
      for (std::size_t k = before; k < span_.size(); ++k) used_[g2_.index_of(span_[k].second)] = 0;
      span_.resize(before);
      if (exceeded_) return false;
    }
    return false;
  }

  const RootSystem& left_;
  const RootSystem& right_;
  const FiniteAbelianGroup& g1_;
  const FiniteAbelianGroup& g2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  std::map<Int, std::vector<GroupElement>> by_order_;
  std::vector<char> used_;
  std::vector<std::pair<GroupElement, GroupElement>> span_;
  std::vector<GroupElement> images_;
};

}  // namespace

IsomorphismResult find_isomorphism(const RootSystem& left, const RootSystem& right,
                                   std::uint64_t budget) {
  IsomorphismResult result;
  Invariants a = invariants_of(left), b = invariants_of(right);
  if (a.factors != b.factors) {
    result.reason = "groups are not isomorphic";
    return result;
  }
  if (a.roots != b.roots) {
    result.reason = "root counts differ";
    return result;
  }
  if (a.radical != b.radical) {
    result.reason = "radical orders differ";
    return result;
  }
  if (a.root_orders != b.root_orders) {
    result.reason = "root order distributions differ";
    return result;
  }
  if (a.root_degrees != b.root_degrees) {
    result.reason = "non-commuting degree distributions differ";
    return result;
  }

  IsoSearch search(left, right, budget);
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == IsomorphismStatus::BudgetExceeded) {
    result.reason = "node budget exhausted";
    return result;
  }
  if (result.status == IsomorphismStatus::NotIsomorphic) {
    result.reason = "search exhausted";
    return result;
  }

  GroupHomomorphism phi = GroupHomomorphism::from_images(left.group(), right.group(), search.images());
  bool certified = phi.is_bijective() && right.beta().pullback(phi) == left.beta();
  for (const auto& r : left.roots()) certified = certified && right.contains(phi.apply(r));
  if (!certified) throw OracleMismatch("isomorphism search produced an uncertified map");
  result.map = std::move(phi);
  result.reason = "certified map";
  return result;
}

}  // namespace frs
