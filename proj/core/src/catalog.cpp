#include "frs/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "frs/error.hpp"

namespace frs {

namespace {

struct FamilyName {
  Family family;
  const char* tag;
  const char* display;
};

constexpr FamilyName family_names[] = {
    {Family::I, "I", "I"},          {Family::Iprime, "Iprime", "I'"}, {Family::II, "II", "II"},
    {Family::III, "III", "III"},    {Family::IV, "IV", "IV"},         {Family::IVprime, "IVprime", "IV'"},
    {Family::V, "V", "V"},
};

const FamilyName& name_of(Family f) {
  for (const auto& n : family_names)
    if (n.family == f) return n;
  throw BadParameters("unknown family");
}

std::string join(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::uint64_t mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("order does not fit in 64 bits");
  return out;
}

std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) out = mul_u64(out, base);
  return out;
}

Int single(const CatalogTag& tag) { return tag.params.front(); }

FiniteAbelianGroup elementary(std::size_t rank) { return FiniteAbelianGroup(std::vector<Int>(rank, 2)); }

// beta on Z_2^{2k} (+ optional trailing radical coordinate): pairs (2i, 2i+1).
IntMatrix hyperbolic_pairs(std::size_t k, std::size_t rank) {
  IntMatrix b(rank, rank);
  for (std::size_t i = 0; i < k; ++i) b(2 * i, 2 * i + 1) = b(2 * i + 1, 2 * i) = 1;
  return b;
}

// Even-weight subgroup of Z_2^n in the basis f_i = e_i + e_{i+1}.
RootSystem even_weight_system(std::size_t n) {
  auto g = elementary(n - 1);
  IntMatrix b(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n - 1; ++i) b(i, i + 1) = b(i + 1, i) = 1;
  std::vector<GroupElement> roots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Int> c(n - 1, 0);
      for (std::size_t t = i; t < j; ++t) c[t] = 1;
      roots.push_back(g.element(std::move(c)));
    }
  }
  return RootSystem(Bicharacter(g, std::move(b)), std::move(roots));
}

}  // namespace

CatalogTag CatalogTag::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw BadParameters("tag '" + text + "' has no ':'");
  std::string name = text.substr(0, colon);
  CatalogTag tag;
  bool known = false;
  for (const auto& n : family_names) {
    if (name == n.tag) {
      tag.family = n.family;
      known = true;
    }
  }
  if (!known) throw BadParameters("unknown family '" + name + "'");
  std::string rest = text.substr(colon + 1);
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw BadParameters("bad parameter '" + item + "' in tag '" + text + "'");
    }
    tag.params.push_back(v);
  }
  tag.validate();
  return tag;
}

std::string CatalogTag::to_string() const { return std::string(name_of(family).tag) + ":" + join(params); }

std::string CatalogTag::display() const {
  return std::string(name_of(family).display) + "(" + join(params) + ")";
}

void CatalogTag::validate() const {
  if (params.empty()) throw BadParameters(display() + ": missing parameters");
  if (family != Family::I && params.size() != 1) {
    throw BadParameters(display() + ": expected exactly one parameter");
  }
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw BadParameters(display() + ": " + what);
  };
  switch (family) {
    case Family::I:
      for (std::size_t i = 0; i < params.size(); ++i) {
        need(params[i] > 1, "orders must exceed 1");
        if (i + 1 < params.size()) need(params[i + 1] % params[i] == 0, "each order must divide the next");
      }
      break;
    case Family::Iprime: need(single(*this) >= 2, "k >= 2 required"); break;
    case Family::II:
    case Family::III: need(single(*this) >= 1, "k >= 1 required"); break;
    case Family::IV:
    case Family::IVprime:
    case Family::V: need(single(*this) >= 3, "k >= 3 required"); break;
  }
  need(single(*this) <= 64, "parameter too large");
}

int quadratic_g(const GroupElement& a) {
  int v = 0;
  for (std::size_t i = 0; i + 1 < a.coords.size(); i += 2) v ^= static_cast<int>(a.coords[i] & a.coords[i + 1] & 1);
  return v;
}

int quadratic_f(const GroupElement& a) {
  return quadratic_g(a) ^ static_cast<int>(a.coords[0] & 1) ^ static_cast<int>(a.coords[1] & 1);
}

RootSystem make(const CatalogTag& tag) {
  tag.validate();
  switch (tag.family) {
    case Family::I: {
      std::vector<Int> orders;
      for (Int n : tag.params) orders.insert(orders.end(), {n, n});
      FiniteAbelianGroup g(orders);
      const Int big = g.exponent();
      IntMatrix b(g.rank(), g.rank());
      for (std::size_t t = 0; t < tag.params.size(); ++t) {
        // beta((i,j),(s,u)) = eps^{js - iu} in block t
        b(2 * t + 1, 2 * t) = big / tag.params[t];
        b(2 * t, 2 * t + 1) = -big / tag.params[t];
      }
      auto all = g.elements();
      all.erase(all.begin());
      return RootSystem(Bicharacter(g, std::move(b)), std::move(all));
    }
    case Family::Iprime: {
      const auto k = static_cast<std::size_t>(single(tag));
      auto g = elementary(2 * k + 1);
      Bicharacter beta(g, hyperbolic_pairs(k, 2 * k + 1));
      auto rad = radical(beta);
      std::vector<GroupElement> roots;
      for (const auto& a : g.elements()) {
        int h = quadratic_g(a) ^ static_cast<int>(a.coords[2 * k]);
        if (h == 1 && !std::binary_search(rad.begin(), rad.end(), a)) roots.push_back(a);
      }
      return RootSystem(std::move(beta), std::move(roots));
    }
    case Family::II: return even_weight_system(static_cast<std::size_t>(2 * single(tag) + 1));
    case Family::IVprime: return even_weight_system(static_cast<std::size_t>(2 * single(tag)));
    case Family::IV: return reduce(even_weight_system(static_cast<std::size_t>(2 * single(tag)))).system;
    case Family::III:
    case Family::V: {
      const auto k = static_cast<std::size_t>(single(tag));
      auto g = elementary(2 * k);
      std::vector<GroupElement> roots;
      for (const auto& a : g.elements()) {
        int q = tag.family == Family::III ? quadratic_f(a) : quadratic_g(a);
        if (q == 1) roots.push_back(a);
      }
      return RootSystem(Bicharacter(g, hyperbolic_pairs(k, 2 * k)), std::move(roots));
    }
  }
  throw BadParameters("unknown family");
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t out = 1;
  for (unsigned i = 2; i <= n; ++i) out = mul_u64(out, i);
  return out;
}

std::uint64_t order_sp(unsigned k, Int n) {
  std::uint64_t out = 1;
  Int rest = n;
  for (Int p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    const auto up = static_cast<std::uint64_t>(p);
    out = mul_u64(out, pow_u64(up, (e - 1) * k * (2 * k + 1)));
    out = mul_u64(out, pow_u64(up, k * k));
    for (unsigned i = 1; i <= k; ++i) out = mul_u64(out, pow_u64(up, 2 * i) - 1);
  }
  return out;
}

std::uint64_t order_sl2(Int n) { return order_sp(1, n); }

std::uint64_t order_orthogonal(unsigned k, int sign) {
  std::uint64_t out = mul_u64(2, pow_u64(2, k * (k - 1)));
  std::uint64_t twok = pow_u64(2, k);
  out = mul_u64(out, sign > 0 ? twok - 1 : twok + 1);
  for (unsigned i = 1; i < k; ++i) out = mul_u64(out, pow_u64(4, i) - 1);
  return out;
}

CatalogEntry expected(const CatalogTag& tag) {
  tag.validate();
  CatalogEntry e;
  e.tag = tag;
  const auto k = static_cast<unsigned>(single(tag));
  auto pow2 = [](unsigned x) { return std::size_t{1} << x; };
  switch (tag.family) {
    case Family::I: {
      std::size_t n = 1;
      for (Int p : tag.params) {
        e.group_orders.insert(e.group_orders.end(), {p, p});
        n *= static_cast<std::size_t>(p);
      }
      e.dimension = n * n - 1;
      e.lie_type = "sl(" + std::to_string(n) + ")";
      if (tag.params.size() == 1) {
        e.weyl_label = "SL(2,Z_" + std::to_string(tag.params[0]) + ")";
        e.weyl_order = order_sl2(tag.params[0]);
      } else {
        e.weyl_label = "Sp(G,beta)";
        bool equal = std::all_of(tag.params.begin(), tag.params.end(),
                                 [&](Int p) { return p == tag.params.front(); });
        if (equal) e.weyl_order = order_sp(static_cast<unsigned>(tag.params.size()), tag.params.front());
      }
      break;
    }
    case Family::Iprime:
      e.group_orders.assign(2 * k + 1, 2);
      e.dimension = pow2(2 * k) - 1;
      e.lie_type = "sl(" + std::to_string(pow2(k)) + ")";
      e.reduced = false;
      e.weyl_label = "Sp(" + std::to_string(2 * k) + ",2)";
      e.weyl_order = order_sp(k, 2);
      break;
    case Family::II:
      e.group_orders.assign(2 * k, 2);
      e.dimension = k * (2 * k + 1);
      e.lie_type = "so(" + std::to_string(2 * k + 1) + ")";
      e.weyl_label = "S_" + std::to_string(2 * k + 1);
      e.weyl_order = factorial(2 * k + 1);
      break;
    case Family::IV:
    case Family::IVprime:
      e.group_orders.assign(tag.family == Family::IV ? 2 * k - 2 : 2 * k - 1, 2);
      e.dimension = k * (2 * k - 1);
      e.lie_type = "so(" + std::to_string(2 * k) + ")";
      e.reduced = tag.family == Family::IV;
      e.weyl_label = "S_" + std::to_string(2 * k);
      e.weyl_order = factorial(2 * k);
      break;
    case Family::III:
      e.group_orders.assign(2 * k, 2);
      e.dimension = pow2(2 * k - 1) + pow2(k - 1);
      e.lie_type = "sp(" + std::to_string(pow2(k)) + ")";
      e.weyl_label = "O-(" + std::to_string(2 * k) + ",2)";
      e.weyl_order = order_orthogonal(k, -1);
      break;
    case Family::V:
      e.group_orders.assign(2 * k, 2);
      e.dimension = pow2(2 * k - 1) - pow2(k - 1);
      e.lie_type = "so(" + std::to_string(pow2(k)) + ")";
      e.weyl_label = "O+(" + std::to_string(2 * k) + ",2)";
      e.weyl_order = order_orthogonal(k, 1);
      break;
  }
  e.root_count = e.dimension;
  return e;
}

Cocycle model_cocycle(const CatalogTag& tag) {
  RootSystem sys = make(tag);
  const auto& g = sys.group();
  switch (tag.family) {
    case Family::II:
    case Family::IVprime: {
      // (-1)^{sum_{j<i} a_i b_j} on Z_2^n, pulled back along f_p -> e_p + e_{p+1}
      const std::size_t n = g.rank() + 1;
      auto ambient = elementary(n);
      IntMatrix lower(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) lower(i, j) = 1;
      IntMatrix embed(n, n - 1);
      for (std::size_t p = 0; p + 1 < n; ++p) embed(p, p) = embed(p + 1, p) = 1;
      return Cocycle(ambient, lower).pullback(GroupHomomorphism(g, ambient, embed));
    }
    case Family::III: {
      IntMatrix c = split(sys.beta()).matrix();
      c(0, 0) = c(1, 1) = 1;
      return Cocycle(g, c);
    }
    default: return split(sys.beta());
  }
}

std::vector<Coincidence> coincidences() {
  auto t = [](const char* s) { return CatalogTag::parse(s); };
  return {
      {t("II:1"), t("I:2"), true},   {t("III:1"), t("I:2"), true}, {t("III:2"), t("II:2"), true},
      {t("IV:3"), t("I:2,2"), true}, {t("IV:4"), t("V:3"), false},
  };
}

std::vector<CatalogTag> enumerate(std::size_t max_dim) {
  std::vector<CatalogTag> out;
  auto fits = [&](const CatalogTag& t) { return expected(t).dimension <= max_dim; };
  auto sweep = [&](Family f, Int start) {
    for (Int k = start;; ++k) {
      CatalogTag t{f, {k}};
      if (!fits(t)) break;
      out.push_back(t);
    }
  };
  sweep(Family::I, 2);
  // chains n_1 | n_2 | ... with at least two factors
  std::vector<CatalogTag> chains;
  std::function<void(std::vector<Int>, std::size_t)> grow = [&](std::vector<Int> chain, std::size_t product) {
    if (chain.size() >= 2) chains.push_back(CatalogTag{Family::I, chain});
    for (Int m = chain.back();; m += chain.back()) {
      std::size_t p = product * static_cast<std::size_t>(m);
      if (p * p - 1 > max_dim) break;
      auto next = chain;
      next.push_back(m);
      grow(next, p);
    }
  };
  for (Int n = 2; static_cast<std::size_t>(n * n) * static_cast<std::size_t>(n * n) - 1 <= max_dim; ++n) {
    grow({n}, static_cast<std::size_t>(n));
  }
  std::sort(chains.begin(), chains.end(), [](const CatalogTag& a, const CatalogTag& b) {
    if (a.params.size() != b.params.size()) return a.params.size() < b.params.size();
    return a.params < b.params;
  });
  out.insert(out.end(), chains.begin(), chains.end());
  sweep(Family::Iprime, 2);
  sweep(Family::II, 1);
  sweep(Family::III, 1);
  sweep(Family::IVprime, 3);
  sweep(Family::IV, 3);
  sweep(Family::V, 3);
  return out;
}

std::optional<GeneratingCertificate> generating_certificate(const CatalogTag& tag) {
  tag.validate();
  if (tag.family != Family::V && tag.family != Family::III && tag.family != Family::Iprime) {
    return std::nullopt;
  }
  RootSystem sys = make(tag);
  const auto& g = sys.group();
  const auto k = static_cast<std::size_t>(single(tag));
  auto e = [&](std::initializer_list<std::size_t> idx) {
    std::vector<Int> c(g.rank(), 0);
    for (auto i : idx) c[i] ^= 1;
    return g.element(std::move(c));
  };
  GeneratingCertificate cert;
  auto& b = cert.elements;
  switch (tag.family) {
    case Family::V:
      for (std::size_t i = 0; i < k; ++i) {
        b.push_back(e({2 * i, 2 * i + 1}));
        b.push_back(e({2 * i, 2 * i + 1, (2 * i + 2) % (2 * k)}));
      }
      break;
    case Family::III:
      b.push_back(e({0}));
      if (k == 1) {
        b.push_back(e({0, 1}));
      } else {
        for (std::size_t i = 0; i < k; ++i) b.push_back(e({2 * i, 2 * i + 1}));
        for (std::size_t i = 0; i + 1 < k; ++i) b.push_back(e({2 * i, 2 * i + 1, 2 * i + 2}));
      }
      break;
    default:
      for (std::size_t i = 0; i < k; ++i) {
        b.push_back(e({2 * i, 2 * i + 1}));
        b.push_back(e({2 * i + 1, 2 * k}));
      }
      b.push_back(e({2 * k - 4, 2 * k - 3, 2 * k - 2, 2 * k - 1, 2 * k}));
      break;
  }
  cert.inside_roots = std::all_of(b.begin(), b.end(), [&](const GroupElement& x) { return sys.contains(x); });
  cert.generates = subgroup_generated(g, b).size() == g.order();
  return cert;
}

}  // namespace frs
