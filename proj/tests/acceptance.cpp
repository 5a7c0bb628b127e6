// Acceptance criteria 1..11. `acceptance N` runs one criterion, no argument runs all.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "frs/catalog.hpp"
#include "frs/error.hpp"
#include "frs/liealg.hpp"
#include "frs/matrixmodel.hpp"
#include "frs_tools/cli.hpp"
#include "frs_tools/io.hpp"

using namespace frs;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fixed(double x, int digits = 2) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << x;
  return s.str();
}

CatalogTag tag(const char* text) { return CatalogTag::parse(text); }

// the entries of the dimension table with their target dimensions
std::vector<std::pair<CatalogTag, std::size_t>> dimension_table() {
  std::vector<std::pair<CatalogTag, std::size_t>> out;
  for (Int n = 2; n <= 8; ++n) out.push_back({CatalogTag{Family::I, {n}}, static_cast<std::size_t>(n * n - 1)});
  out.push_back({tag("I:2,2"), 15});
  out.push_back({tag("I:2,2,2"), 63});
  for (Int k = 1; k <= 4; ++k) out.push_back({CatalogTag{Family::II, {k}}, static_cast<std::size_t>(k * (2 * k + 1))});
  for (Int k = 1; k <= 3; ++k)
    out.push_back({CatalogTag{Family::III, {k}}, (std::size_t{1} << (2 * k - 1)) + (std::size_t{1} << (k - 1))});
  out.push_back({tag("V:3"), 28});
  for (Int k = 3; k <= 5; ++k) {
    out.push_back({CatalogTag{Family::IVprime, {k}}, static_cast<std::size_t>(k * (2 * k - 1))});
    out.push_back({CatalogTag{Family::IV, {k}}, static_cast<std::size_t>(k * (2 * k - 1))});
  }
  return out;
}

Outcome dimensions() {
  auto start = Clock::now();
  Outcome o;
  for (const auto& [t, dim] : dimension_table()) {
    auto sys = make(t);
    auto L = build_root(sys);
    if (sys.size() != dim || L.dimension() != dim) {
      o.pass = false;
      o.detail = t.display() + ": |R| = " + std::to_string(sys.size()) + ", expected " + std::to_string(dim);
      return o;
    }
  }
  double s = seconds_since(start);
  o.pass = s < 10;
  o.detail = std::to_string(dimension_table().size()) + " entries exact in " + fixed(s) + " s";
  return o;
}

Outcome axioms() {
  Outcome o;
  for (const auto& [t, dim] : dimension_table()) {
    auto report = verify(make(t));
    if (!report.passed()) {
      o.pass = false;
      o.detail = t.display() + " fails " + report.failure()->axiom;
      return o;
    }
  }
  std::size_t mutations = 0;
  // one root removed
  for (const char* name : {"I:2", "I:3", "I:4", "I:2,2", "II:2", "II:3", "III:2", "III:3", "IV:4", "V:3"}) {
    auto sys = make(tag(name));
    auto roots = sys.roots();
    roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(roots.size() / 2));
    auto report = verify(RootSystem(sys.beta(), roots));
    const auto* f = report.failure();
    if (!f || f->witness.empty()) {
      o.pass = false;
      o.detail = std::string(name) + " minus one root still verifies";
      return o;
    }
    ++mutations;
  }
  // one element added, breaking closure
  for (const char* name : {"II:2", "II:3", "II:4", "III:2", "III:3", "IVprime:4", "IV:4", "IV:5", "V:3", "Iprime:2"}) {
    auto sys = make(tag(name));
    auto rad = radical(sys.beta());
    std::optional<GroupElement> extra;
    for (const auto& g : sys.group().elements()) {
      if (sys.contains(g) || std::binary_search(rad.begin(), rad.end(), g)) continue;
      extra = g;
      break;
    }
    auto roots = sys.roots();
    roots.push_back(*extra);
    auto report = verify(RootSystem(sys.beta(), roots));
    const auto* f = report.failure();
    if (!f || f->axiom != "FRS2_closure" || f->witness.empty()) {
      o.pass = false;
      o.detail = std::string(name) + " plus " + to_string(*extra) + " does not break FRS2";
      return o;
    }
    ++mutations;
  }
  o.detail = std::to_string(dimension_table().size()) + " entries verify, " + std::to_string(mutations) +
             " mutations rejected with witnesses";
  return o;
}

Outcome jacobi() {
  auto start = Clock::now();
  Outcome o;
  std::size_t triples = 0, entries = 0;
  for (const auto& t : enumerate(63)) {
    auto L = build_root(make(t));
    auto r = check_jacobi(L);
    triples += r.triples;
    ++entries;
    if (!r.holds) {
      o.pass = false;
      o.detail = t.display() + " violates Jacobi at (" + to_string(r.witness[0]) + ", " + to_string(r.witness[1]) +
                 ", " + to_string(r.witness[2]) + ")";
      return o;
    }
  }
  double s = seconds_since(start);
  o.pass = s < 60;
  o.detail = std::to_string(entries) + " entries, " + std::to_string(triples) + " triples exact in " + fixed(s) + " s";
  return o;
}

Outcome killing_consistency() {
  Outcome o;
  std::vector<std::string> problems;
  std::size_t literal_bad = 0, sign_bad = 0, degenerate = 0, values = 0;
  std::string first_literal, first_sign;
  try {
    for (const auto& [t, dim] : dimension_table()) {
      auto report = killing(build_root(make(t)));
      if (!report.nondegenerate) {
        ++degenerate;
        problems.push_back(t.display() + " degenerate");
      }
      for (const auto& e : report.entries) {
        ++values;
        if (!e.formula_equals_trace) {
          ++literal_bad;
          if (first_literal.empty())
            first_literal = t.display() + " at " + to_string(e.root) + ": trace " + e.trace.to_string() +
                            ", sum formula " + e.sum_formula->to_string();
        }
        if (!e.trace_positive) {
          ++sign_bad;
          if (first_sign.empty()) first_sign = t.display() + " at " + to_string(e.root) + ": " + e.trace.to_string();
        }
      }
    }
  } catch (const OracleMismatch& e) {
    o.pass = false;
    o.detail = std::string("oracle mismatch: ") + e.what();
    return o;
  }
  auto sl2 = killing(build_root(make(tag("I:2"))));
  bool spot = sl2.entries.size() == 3;
  for (const auto& e : sl2.entries) spot = spot && e.trace == CyclotomicNumber::integer(e.trace.modulus(), 8);

  o.pass = literal_bad == 0 && sign_bad == 0 && degenerate == 0 && spot;
  std::ostringstream d;
  d << values << " diagonal values";
  if (literal_bad) d << "; sum formula differs from the trace at " << literal_bad << " (first: " << first_literal << ")";
  if (sign_bad) d << "; not positive at " << sign_bad << " (first: " << first_sign << ")";
  if (!spot) {
    d << "; I(2) values";
    for (const auto& e : sl2.entries) d << " " << e.trace.to_string();
  }
  d << "; nondegenerate " << (degenerate ? "no" : "yes");
  o.detail = d.str();
  return o;
}

Outcome center_law() {
  Outcome o;
  std::mt19937_64 rng(20261018);
  const std::vector<Int> orders_pool = {2, 3, 4, 5, 6, 8, 9};
  int trials = 0;
  std::string log;
  while (trials < 10) {
    std::vector<Int> orders;
    std::size_t size = 1;
    std::size_t rank = 1 + rng() % 4;
    for (std::size_t i = 0; i < rank; ++i) {
      Int n = orders_pool[rng() % orders_pool.size()];
      if (size * static_cast<std::size_t>(n) > 256) break;
      size *= static_cast<std::size_t>(n);
      orders.push_back(n);
    }
    if (orders.size() < 2) continue;
    FiniteAbelianGroup g(orders);
    const Int n = g.exponent();
    if (n > 64) continue;
    IntMatrix m(g.rank(), g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
      for (std::size_t j = 0; j < g.rank(); ++j) {
        Int unit = n / gcd(g.orders()[i], g.orders()[j]);
        m(i, j) = unit * static_cast<Int>(rng() % static_cast<std::uint64_t>(n / unit));
      }
    Cocycle xi(g, m);
    auto rad = radical(polarize(xi));
    auto L = build_full(xi);
    std::size_t z = center(L).size();
    std::size_t ratio = g.order() / rad.size();
    auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(ratio))));
    bool square = root * root == ratio && g.order() % rad.size() == 0;
    ++trials;
    log += " |G|=" + std::to_string(g.order()) + ",|Z|=" + std::to_string(z);
    if (z != rad.size() || !square) {
      o.pass = false;
      o.detail = "group " + to_string(GroupElement{orders}) + ": dim Z = " + std::to_string(z) + ", |Rad| = " +
                 std::to_string(rad.size());
      return o;
    }
  }
  o.detail = "10 random twisted algebras:" + log;
  return o;
}

Outcome intertwining() {
  Outcome o;
  std::vector<std::string> names = {"I:2", "I:3", "I:4", "II:1", "II:2", "II:3", "V:3", "III:1", "III:2", "III:3"};
  for (const auto& name : names) {
    auto m = matrix_model(tag(name.c_str()));
    auto r = verify_iso(m.algebra, m.grading, m.images, m.scalars);
    if (!r.holds) {
      o.pass = false;
      o.detail = name + ": " + r.message;
      return o;
    }
    if (m.tag.family == Family::I) {
      auto [x, y] = generalized_pauli(m.tag.params[0]);
      for (std::size_t i = 0; i < m.algebra.dimension(); ++i) {
        const auto& a = m.algebra.support()[i];
        if (!(m.scalars[i] == CyclotomicNumber::integer(m.scalars[i].modulus(), 1)) ||
            !(m.grading.matrix(a) == x.pow(a.coords[0]) * y.pow(-a.coords[1]))) {
          o.pass = false;
          o.detail = name + ": phi(u_" + to_string(a) + ") is not X^i Y^-j";
          return o;
        }
      }
    }
    if (m.tag.family == Family::II) {
      for (std::size_t i = 0; i < m.algebra.dimension(); ++i) {
        if (!(m.scalars[i] == CyclotomicNumber::integer(m.scalars[i].modulus(), 1))) {
          o.pass = false;
          o.detail = name + ": nontrivial scalar";
          return o;
        }
      }
      for (const auto& t : m.algebra.bracket_table()) {
        if (!(t.value == CyclotomicNumber::integer(t.value.modulus(), 2)) &&
            !(t.value == CyclotomicNumber::integer(t.value.modulus(), -2))) {
          o.pass = false;
          o.detail = name + ": bracket constant " + t.value.to_string();
          return o;
        }
      }
    }
  }
  auto g2 = epsilon_grading(2);
  Involution skew(ExactMatrix::from_integers({{0, 1}, {-1, 0}}, 2), false);
  Involution sym(ExactMatrix::identity(2, 2), true);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (bool one_skew : {false, true}) {
      std::vector<std::pair<MatrixGrading, Involution>> factors;
      for (std::size_t t = 0; t < k; ++t) factors.emplace_back(g2, one_skew && t == 0 ? skew : sym);
      auto [full, inv] = tensor_grading(factors);
      auto split = split_by_involution(full, inv);
      std::vector<GroupElement> level;
      for (const auto& a : full.group().elements())
        if ((one_skew ? quadratic_f(a) : quadratic_g(a)) == 1) level.push_back(a);
      if (split.skew != level) {
        o.pass = false;
        o.detail = std::string("K-support differs from {") + (one_skew ? "f" : "g") + "=1} at k = " + std::to_string(k);
        return o;
      }
    }
  }
  o.detail = std::to_string(names.size()) + " models intertwine on all pairs; {g=1} and {f=1} supports exact for k = 1..4";
  return o;
}

Outcome duality() {
  Outcome o;
  for (Int n = 2; n <= 4; ++n) {
    auto [x, y] = generalized_pauli(n);
    auto r = verify_dual_action(epsilon_grading(n), {x, y});
    if (!r.holds || !r.separates) {
      o.pass = false;
      o.detail = "epsilon-grading n = " + std::to_string(n) + ": " + r.message;
      return o;
    }
  }
  for (const char* name : {"V:3", "III:2"}) {
    auto m = matrix_model(tag(name));
    auto r = verify_dual_action(m.grading, m.generators);
    if (!r.holds || !r.separates) {
      o.pass = false;
      o.detail = std::string(name) + ": " + r.message;
      return o;
    }
  }
  o.detail = "Ad(X_n), Ad(Y_n) for n = 2..4 and P_2 tensor powers on V(3), III(2) separate the supports";
  return o;
}

Outcome weyl_orders() {
  Outcome o;
  const std::vector<std::pair<const char*, std::uint64_t>> table = {
      {"I:2", 6},       {"I:3", 24},      {"I:4", 48},      {"I:2,2", 720},   {"II:2", 120},   {"II:3", 5040},
      {"III:2", 120},   {"IV:3", 720},    {"IV:4", 40320},  {"V:3", 40320},   {"III:3", 51840}};
  std::string log;
  for (const auto& [name, order] : table) {
    auto start = Clock::now();
    auto t = tag(name);
    auto formula = expected(t).weyl_order;
    WeylEnumerator e(make(t));
    auto status = e.run();
    double s = seconds_since(start);
    if (status != EnumerationStatus::Complete || e.size() != order || !formula || *formula != order || s >= 120) {
      o.pass = false;
      o.detail = t.display() + ": BFS " + std::to_string(e.size()) + ", expected " + std::to_string(order) + " (" +
                 fixed(s) + " s)";
      return o;
    }
    log += " " + t.display() + "=" + std::to_string(order);
  }
  o.detail = "BFS orders match:" + log;
  return o;
}

Outcome coincidence_suite() {
  auto start = Clock::now();
  Outcome o;
  std::ostringstream d;
  for (const auto& c : coincidences()) {
    auto r = find_isomorphism(make(c.left), make(c.right), default_isomorphism_budget);
    bool ok = c.isomorphic ? r.status == IsomorphismStatus::Found : r.status == IsomorphismStatus::NotIsomorphic;
    d << c.left.display() << " vs " << c.right.display() << ": " << to_string(r.status) << " (" << r.nodes
      << " nodes)";
    if (!ok) {
      o.pass = false;
      d << " expected " << (c.isomorphic ? "isomorphic" : "not_isomorphic");
      if (r.map) d << ", certified map " << io::to_json(r.map->matrix()).dump();
    }
    d << "; ";
  }
  double s = seconds_since(start);
  if (s >= 300) o.pass = false;
  d << fixed(s) << " s";
  o.detail = d.str();
  return o;
}

// c(a, b) in L(R, xi-bar o pi) equals c(pi a, pi b) in L(R-bar, xi-bar)
bool brackets_match(const RootSystem& sys, const Reduction& red) {
  Cocycle bar = split(red.system.beta());
  Cocycle pulled = bar.pullback(red.quotient.projection);
  auto L = build_root(sys, pulled);
  auto M = build_root(red.system, bar);
  if (L.dimension() != M.dimension()) return false;
  std::vector<std::size_t> to(L.dimension());
  for (std::size_t i = 0; i < L.dimension(); ++i) {
    to[i] = M.position(red.quotient.project(L.support()[i]));
    if (to[i] == GradedLieAlgebra::npos) return false;
  }
  const Int m = lcm(L.modulus(), M.modulus());
  for (std::size_t i = 0; i < L.dimension(); ++i) {
    for (std::size_t j = 0; j < L.dimension(); ++j) {
      if (L.bracket_is_zero(i, j) != M.bracket_is_zero(to[i], to[j])) return false;
      if (L.bracket_is_zero(i, j)) continue;
      if (to[L.sum_position(i, j)] != M.sum_position(to[i], to[j])) return false;
      if (!(L.coefficient(i, j).lift(m) == M.coefficient(to[i], to[j]).lift(m))) return false;
    }
  }
  return true;
}

Outcome reduction_suite() {
  Outcome o;
  const std::vector<std::pair<CatalogTag, CatalogTag>> pairs = {
      {tag("Iprime:2"), tag("I:2,2")},
      {tag("Iprime:3"), tag("I:2,2,2")},
      {tag("IVprime:3"), tag("IV:3")},
      {tag("IVprime:4"), tag("IV:4")}};
  std::string log;
  for (const auto& [big, small] : pairs) {
    auto sys = make(big);
    auto red = reduce(sys);
    auto r = find_isomorphism(red.system, make(small));
    if (r.status != IsomorphismStatus::Found) {
      o.pass = false;
      o.detail = "reduce(" + big.display() + ") vs " + small.display() + ": " + to_string(r.status) + ", " + r.reason;
      return o;
    }
    if (!brackets_match(sys, red)) {
      o.pass = false;
      o.detail = big.display() + ": bracket tables differ after reduction";
      return o;
    }
    log += " reduce(" + big.display() + ")=" + small.display();
  }
  o.detail = "certified:" + log + "; bracket tables match";
  return o;
}

std::string results_block(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  if (args.front() == "dump") return std::to_string(code) + out.str();
  auto j = io::json::parse(out.str());
  return std::to_string(code) + j["command"].dump() + j["inputs"].dump() + j["results"].dump();
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "--type", "II:2"},
      {"verify", "--type", "Iprime:3"},
      {"build", "--type", "V:3", "--check", "jacobi,killing,center"},
      {"weyl", "--type", "III:2"},
      {"iso", "--left", "III:2", "--right", "II:2"},
      {"iso", "--left", "IV:4", "--right", "V:3"},
      {"catalog", "--max-dim", "63"},
      {"matrix", "--type", "III:3"},
      {"dump", "--type", "IV:4"},
      {"dump", "--type", "I:3", "--what", "brackets"},
      {"dump", "--type", "V:3", "--what", "matrices"}};
  for (const auto& c : commands) {
    if (results_block(c) != results_block(c)) {
      o.pass = false;
      o.detail = "differs: " + c.front();
      return o;
    }
  }
  o.detail = std::to_string(commands.size()) + " commands byte-identical across two runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dimension table", dimensions},
      {"FRS axiom suite", axioms},
      {"Jacobi identity", jacobi},
      {"Killing consistency", killing_consistency},
      {"center and derived law", center_law},
      {"matrix-model intertwining", intertwining},
      {"duality action", duality},
      {"Weyl group orders", weyl_orders},
      {"coincidence suite", coincidence_suite},
      {"reduction suite", reduction_suite},
      {"determinism", determinism}};
  std::vector<std::size_t> which;
  if (argc > 1) {
    std::size_t k = std::strtoul(argv[1], nullptr, 10);
    if (k < 1 || k > criteria.size()) {
      std::cerr << "usage: acceptance [1.." << criteria.size() << "]\n";
      return 2;
    }
    which.push_back(k - 1);
  } else {
    for (std::size_t k = 0; k < criteria.size(); ++k) which.push_back(k);
  }
  int failed = 0;
  for (auto k : which) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << (k + 1) << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k].first << ": "
              << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
