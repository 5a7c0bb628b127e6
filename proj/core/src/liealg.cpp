#include "frs/liealg.hpp"

#include <algorithm>

#include "frs/error.hpp"

namespace frs {

namespace {

std::vector<CyclotomicNumber> root_table(Int modulus) {
  std::vector<CyclotomicNumber> out;
  out.reserve(static_cast<std::size_t>(modulus));
  for (Int e = 0; e < modulus; ++e) out.push_back(CyclotomicNumber::root(modulus, e));
  return out;
}

}  // namespace

GradedLieAlgebra::GradedLieAlgebra(FiniteAbelianGroup group, Int modulus, std::vector<GroupElement> support)
    : group_(std::move(group)), modulus_(modulus), support_(std::move(support)) {
  for (const auto& a : support_) {
    if (!group_.contains(a)) throw InvalidElement("support element " + to_string(a) + " not in group");
  }
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  const std::size_t d = support_.size();
  position_.assign(group_.order(), 0);
  for (std::size_t i = 0; i < d; ++i) position_[group_.index_of(support_[i])] = static_cast<std::uint32_t>(i + 1);
  sum_.assign(d * d, npos);
  slot_.assign(d * d, -1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) sum_[i * d + j] = position(group_.add(support_[i], support_[j]));
}

std::size_t GradedLieAlgebra::position(const GroupElement& a) const {
  if (!group_.contains(a)) return npos;
  std::uint32_t p = position_[group_.index_of(a)];
  return p == 0 ? npos : p - 1;
}

void GradedLieAlgebra::set(std::size_t i, std::size_t j, const CyclotomicNumber& value) {
  const std::size_t d = dimension();
  if (value.is_zero()) {
    slot_[i * d + j] = -1;
    slot_[j * d + i] = -1;
    return;
  }
  if (i == j) throw NotClosed("nonzero self-bracket at " + to_string(support_[i]));
  if (sum_[i * d + j] == npos)
    throw NotClosed("[u_" + to_string(support_[i]) + ", u_" + to_string(support_[j]) + "] leaves the support");
  values_.push_back(value);
  slot_[i * d + j] = static_cast<std::int32_t>(values_.size() - 1);
  values_.push_back(-value);
  slot_[j * d + i] = static_cast<std::int32_t>(values_.size() - 1);
}

GradedLieAlgebra::GradedLieAlgebra(const Cocycle& xi, std::vector<GroupElement> support)
    : GradedLieAlgebra(xi.group(), xi.modulus(), std::move(support)) {
  cocycle_ = xi;
  const std::size_t d = dimension();
  const Int n = modulus_;
  auto roots = root_table(n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Int e1 = xi.exponent(support_[i], support_[j]);
      Int e2 = xi.exponent(support_[j], support_[i]);
      if (e1 == e2) continue;
      set(i, j, roots[static_cast<std::size_t>(e1)] - roots[static_cast<std::size_t>(e2)]);
    }
  }
}

GradedLieAlgebra GradedLieAlgebra::from_table(FiniteAbelianGroup group, Int modulus,
                                              std::vector<GroupElement> support,
                                              const std::vector<BracketTerm>& terms) {
  GradedLieAlgebra out(std::move(group), modulus, std::move(support));
  for (const auto& t : terms) {
    if (t.value.modulus() != modulus) throw ModulusMismatch("bracket coefficient in the wrong field");
    std::size_t i = out.position(t.left), j = out.position(t.right);
    if (i == npos || j == npos) throw InvalidElement("bracket term outside the support");
    out.set(i, j, t.value);
  }
  return out;
}

CyclotomicNumber GradedLieAlgebra::coefficient(std::size_t i, std::size_t j) const {
  if (bracket_is_zero(i, j)) return CyclotomicNumber::zero(modulus_);
  return value_at(i, j);
}

std::vector<BracketTerm> GradedLieAlgebra::bracket_table() const {
  std::vector<BracketTerm> out;
  const std::size_t d = dimension();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!bracket_is_zero(i, j)) out.push_back({support_[i], support_[j], value_at(i, j)});
  return out;
}

GradedLieAlgebra GradedLieAlgebra::with_coefficient(std::size_t i, std::size_t j,
                                                    const CyclotomicNumber& value) const {
  if (i >= dimension() || j >= dimension()) throw InvalidElement("bracket position out of range");
  if (value.modulus() != modulus_) throw ModulusMismatch("bracket coefficient in the wrong field");
  GradedLieAlgebra out = *this;
  out.cocycle_.reset();
  out.set(i, j, value);
  return out;
}

GradedLieAlgebra GradedLieAlgebra::rescaled(const std::vector<CyclotomicNumber>& scale) const {
  const std::size_t d = dimension();
  if (scale.size() != d) throw InvalidElement("scale vector has the wrong length");
  GradedLieAlgebra out(group_, modulus_, support_);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (bracket_is_zero(i, j)) continue;
      out.set(i, j, value_at(i, j) * scale[i] * scale[j] / scale[sum_[i * d + j]]);
    }
  }
  return out;
}

GradedLieAlgebra build_full(const Cocycle& xi) { return GradedLieAlgebra(xi, xi.group().elements()); }

GradedLieAlgebra build_root(const RootSystem& system) {
  auto report = verify(system);
  if (!report.passed()) throw InvalidRootSystem(report.failure()->message);
  return GradedLieAlgebra(split(system.beta()), system.roots());
}

GradedLieAlgebra build_root(const RootSystem& system, const Cocycle& xi) {
  if (!(polarize(xi) == system.beta())) throw InvalidCocycle("cocycle does not polarize to beta");
  auto report = verify(system);
  if (!report.passed()) throw InvalidRootSystem(report.failure()->message);
  return GradedLieAlgebra(xi, system.roots());
}

JacobiReport check_jacobi(const GradedLieAlgebra& L) {
  JacobiReport out;
  const std::size_t d = L.dimension();
  auto term = [&](std::size_t x, std::size_t y, std::size_t z, CyclotomicNumber& acc) {
    // [[u_x, u_y], u_z]
    if (L.bracket_is_zero(x, y)) return;
    std::size_t s = L.sum_position(x, y);
    if (L.bracket_is_zero(s, z)) return;
    acc += L.coefficient(x, y) * L.coefficient(s, z);
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        ++out.triples;
        auto acc = CyclotomicNumber::zero(L.modulus());
        term(i, j, k, acc);
        term(j, k, i, acc);
        term(k, i, j, acc);
        if (!acc.is_zero()) {
          out.holds = false;
          out.witness = {L.support()[i], L.support()[j], L.support()[k]};
          out.residual = acc;
          return out;
        }
      }
    }
  }
  return out;
}

std::vector<GroupElement> center(const GradedLieAlgebra& L) {
  std::vector<GroupElement> out;
  const std::size_t d = L.dimension();
  for (std::size_t i = 0; i < d; ++i) {
    bool central = true;
    for (std::size_t j = 0; j < d && central; ++j) central = L.bracket_is_zero(i, j);
    if (central) out.push_back(L.support()[i]);
  }
  return out;
}

std::vector<GroupElement> derived(const GradedLieAlgebra& L) {
  const std::size_t d = L.dimension();
  std::vector<char> hit(d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!L.bracket_is_zero(i, j)) hit[L.sum_position(i, j)] = 1;
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < d; ++i)
    if (hit[i]) out.push_back(L.support()[i]);
  return out;
}

CyclotomicNumber killing_pairing(const GradedLieAlgebra& L, std::size_t a, std::size_t b) {
  const std::size_t d = L.dimension();
  if (a >= d || b >= d) throw InvalidElement("pairing position out of range");
  auto acc = CyclotomicNumber::zero(L.modulus());
  for (std::size_t c = 0; c < d; ++c) {
    // ad u_b ad u_a u_c = c(a,c) c(b, a+c) u_{a+b+c}; only u_c contributes to the trace
    if (L.bracket_is_zero(a, c)) continue;
    std::size_t ac = L.sum_position(a, c);
    if (L.bracket_is_zero(b, ac) || L.sum_position(b, ac) != c) continue;
    acc += L.coefficient(a, c) * L.coefficient(b, ac);
  }
  return acc;
}

KillingReport killing(const GradedLieAlgebra& L) {
  KillingReport out;
  const auto& G = L.group();
  const auto& support = L.support();
  const Int n = L.modulus();
  auto roots = root_table(n);
  auto root = [&](Int e) -> const CyclotomicNumber& { return roots[static_cast<std::size_t>(e)]; };

  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto& a = support[i];
    GroupElement minus = G.neg(a);
    std::size_t j = L.position(minus);
    if (j == GradedLieAlgebra::npos) {
      out.nondegenerate = false;
      continue;
    }
    KillingEntry e{a, killing_pairing(L, i, j), {}, {}, {}, false, false, false};
    if (e.trace.is_zero()) out.nondegenerate = false;
    e.trace_positive = e.trace.is_real() && real_sign(e.trace) > 0;

    if (L.cocycle()) {
      const Cocycle& xi = *L.cocycle();
      auto literal = CyclotomicNumber::zero(n);
      auto bsum = CyclotomicNumber::zero(n);
      auto two = CyclotomicNumber::integer(n, 2);
      for (const auto& b : support) {
        literal += two - root((xi.exponent(a, b) + xi.exponent(b, minus)) % n) -
                   root((xi.exponent(b, a) + xi.exponent(minus, b)) % n);
        Int ab = xi.exponent(a, b) - xi.exponent(b, a);
        bsum += two - root(((ab % n) + n) % n) - root(((-ab % n) + n) % n);
      }
      e.twist = root(xi.exponent(minus, a));
      if (!(e.trace == *e.twist * bsum))
        throw OracleMismatch("trace of ad at " + to_string(a) + " is " + e.trace.to_string() +
                             ", expected " + (*e.twist * bsum).to_string());
      e.formula_equals_trace = literal == e.trace;
      e.formula_positive = literal.is_real() && real_sign(literal) > 0;
      e.sum_formula = std::move(literal);
      e.beta_sum = std::move(bsum);
      out.formula_equals_trace = out.formula_equals_trace && e.formula_equals_trace;
      out.formula_positive = out.formula_positive && e.formula_positive;
    }
    out.trace_positive = out.trace_positive && e.trace_positive;
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace frs
