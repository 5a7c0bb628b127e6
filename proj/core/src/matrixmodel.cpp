#include "frs/matrixmodel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "frs/error.hpp"

namespace frs {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Int modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, CyclotomicNumber::zero(modulus)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, Int modulus) {
  ExactMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CyclotomicNumber::integer(modulus, 1);
  return m;
}

ExactMatrix ExactMatrix::from_integers(const std::vector<std::vector<Int>>& rows, Int modulus) {
  const std::size_t r = rows.size(), c = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(r, c, modulus);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) m(i, j) = CyclotomicNumber::integer(modulus, rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t i, std::size_t j, Int modulus) {
  ExactMatrix m(n, n, modulus);
  m(i, j) = CyclotomicNumber::integer(modulus, 1);
  return m;
}

void ExactMatrix::require_shape(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix shapes differ");
  if (modulus_ != other.modulus_) throw ModulusMismatch("matrices over different fields");
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CyclotomicNumber& x) { return x.is_zero(); });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CyclotomicNumber ExactMatrix::trace() const {
  if (rows_ != cols_) throw InputError("trace of a non-square matrix");
  auto acc = CyclotomicNumber::zero(modulus_);
  for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
  return acc;
}

ExactMatrix ExactMatrix::lift(Int modulus) const {
  if (modulus == modulus_) return *this;
  ExactMatrix m(rows_, cols_, modulus);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!data_[k].is_zero()) m.data_[k] = data_[k].lift(modulus);
  return m;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ExactMatrix a = *this;
  ExactMatrix inv = identity(n, modulus_);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DivisionByZero("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    CyclotomicNumber s = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(col, j).is_zero()) a(col, j) *= s;
      if (!inv(col, j).is_zero()) inv(col, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      CyclotomicNumber f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

ExactMatrix ExactMatrix::pow(Int k) const {
  if (rows_ != cols_) throw InputError("power of a non-square matrix");
  ExactMatrix base = k < 0 ? inverse() : *this;
  ExactMatrix out = identity(rows_, modulus_);
  for (Int e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    if (e > 1) base = base * base;
  }
  return out;
}

std::size_t ExactMatrix::rank() const {
  ExactMatrix a = *this;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t pivot = r;
    while (pivot < rows_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(pivot, j), a(r, j));
    CyclotomicNumber s = a(r, col).inverse();
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a(i, col).is_zero()) continue;
      CyclotomicNumber f = a(i, col) * s;
      for (std::size_t j = col; j < cols_; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m = *this;
  for (auto& x : m.data_)
    if (!x.is_zero()) x = -x;
  return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  require_shape(rhs);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!rhs.data_[k].is_zero()) data_[k] += rhs.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  require_shape(rhs);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!rhs.data_[k].is_zero()) data_[k] -= rhs.data_[k];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix shapes do not compose");
  if (a.modulus_ != b.modulus_) throw ModulusMismatch("matrices over different fields");
  ExactMatrix out(a.rows_, b.cols_, a.modulus_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

ExactMatrix operator*(const CyclotomicNumber& s, const ExactMatrix& a) {
  if (s.modulus() != a.modulus_) throw ModulusMismatch("scalar and matrix over different fields");
  ExactMatrix out = a;
  for (auto& x : out.data_)
    if (!x.is_zero()) x *= s;
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.modulus_ != b.modulus_) {
    Int m = lcm(a.modulus_, b.modulus_);
    return a.lift(m) == b.lift(m);
  }
  return a.data_ == b.data_;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix kron(const ExactMatrix& a0, const ExactMatrix& b0) {
  Int m = lcm(a0.modulus(), b0.modulus());
  ExactMatrix a = a0.lift(m), b = b0.lift(m);
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), m);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero()) out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  }
  return out;
}

std::optional<CyclotomicNumber> proportion(const ExactMatrix& a0, const ExactMatrix& b0) {
  if (a0.rows() != b0.rows() || a0.cols() != b0.cols()) return std::nullopt;
  Int m = lcm(a0.modulus(), b0.modulus());
  ExactMatrix a = a0.lift(m), b = b0.lift(m);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(i, j).is_zero()) continue;
      CyclotomicNumber s = a(i, j) / b(i, j);
      if (s * b == a) return s;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::pair<ExactMatrix, ExactMatrix> generalized_pauli(Int n) {
  if (n < 2) throw BadParameters("generalized Pauli matrices need n >= 2");
  const auto size = static_cast<std::size_t>(n);
  ExactMatrix x(size, size, n), y(size, size, n);
  for (std::size_t k = 0; k < size; ++k) {
    x(k, k) = CyclotomicNumber::root(n, n - 1 - static_cast<Int>(k));
    y(k, (k + 1) % size) = CyclotomicNumber::integer(n, 1);
  }
  return {x, y};
}

MatrixGrading::MatrixGrading(FiniteAbelianGroup group, std::vector<GroupElement> support,
                             std::vector<ExactMatrix> matrices, std::optional<Cocycle> cocycle)
    : group_(std::move(group)), cocycle_(std::move(cocycle)) {
  if (support.size() != matrices.size()) throw InvalidElement("one matrix per support element is required");
  if (cocycle_ && !(cocycle_->group() == group_)) throw InvalidCocycle("cocycle lives on another group");
  std::size_t n = matrices.empty() ? 0 : matrices.front().rows();
  modulus_ = 1;
  for (const auto& m : matrices) {
    if (m.rows() != n || m.cols() != n) throw InvalidElement("basis matrices must share one square shape");
    modulus_ = lcm(modulus_, m.modulus());
  }
  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), 0);
  for (const auto& a : support)
    if (!group_.contains(a)) throw InvalidElement("label " + to_string(a) + " not in group");
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return support[i] < support[j]; });
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && support[order[k]] == support[order[k - 1]])
      throw InvalidElement("duplicate label " + to_string(support[order[k]]));
    support_.push_back(support[order[k]]);
    matrices_.push_back(matrices[order[k]].lift(modulus_));
  }
}

std::size_t MatrixGrading::position(const GroupElement& a) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), a);
  return it != support_.end() && *it == a ? static_cast<std::size_t>(it - support_.begin()) : npos;
}

const ExactMatrix& MatrixGrading::matrix(const GroupElement& a) const {
  std::size_t p = position(a);
  if (p == npos) throw InvalidElement(to_string(a) + " is not in the grading support");
  return matrices_[p];
}

MatrixGrading epsilon_grading(Int n) {
  auto [x, y] = generalized_pauli(n);
  FiniteAbelianGroup g({n, n});
  std::vector<GroupElement> support;
  std::vector<ExactMatrix> mats;
  std::vector<ExactMatrix> xp, yp;
  for (Int k = 0; k < n; ++k) {
    xp.push_back(x.pow(k));
    yp.push_back(y.pow(mod(-k, n)));
  }
  for (Int i = 0; i < n; ++i) {
    for (Int j = 0; j < n; ++j) {
      support.push_back(g.element({i, j}));
      mats.push_back(xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)]);
    }
  }
  IntMatrix c(2, 2);
  c(1, 0) = 1;
  return MatrixGrading(g, support, mats, Cocycle(g, c));
}

MatrixGrading restrict(const MatrixGrading& grading, std::span<const GroupElement> support) {
  std::vector<GroupElement> keep(support.begin(), support.end());
  std::vector<ExactMatrix> mats;
  for (const auto& a : keep) mats.push_back(grading.matrix(a));
  std::optional<Cocycle> xi;
  if (keep.size() == grading.size()) xi = grading.cocycle();
  return MatrixGrading(grading.group(), keep, mats, xi);
}

ProductLawReport check_product_law(const MatrixGrading& grading) {
  ProductLawReport out;
  if (!grading.cocycle()) {
    out.holds = false;
    out.message = "no cocycle attached";
    return out;
  }
  const auto& xi = *grading.cocycle();
  const auto& g = grading.group();
  const Int m = lcm(grading.modulus(), xi.modulus());
  for (const auto& a : grading.support()) {
    for (const auto& b : grading.support()) {
      GroupElement s = g.add(a, b);
      auto prod = (grading.matrix(a) * grading.matrix(b)).lift(m);
      bool ok;
      if (grading.position(s) == MatrixGrading::npos) {
        ok = prod.is_zero();
      } else {
        ok = prod == xi.number(a, b).lift(m) * grading.matrix(s).lift(m);
      }
      if (!ok) {
        out.holds = false;
        out.witness = {a, b};
        out.message = "M_a M_b != xi(a,b) M_{a+b} at " + to_string(a) + ", " + to_string(b);
        return out;
      }
    }
  }
  return out;
}

Involution::Involution(ExactMatrix form, bool symmetric) : form_(std::move(form)), symmetric_(symmetric) {
  if (form_.rows() != form_.cols()) throw NotCompatible("form matrix is not square");
  if (!(form_.transpose() == (symmetric_ ? form_ : -form_)))
    throw NotCompatible(symmetric_ ? "form is not symmetric" : "form is not skew-symmetric");
  try {
    form_inverse_ = form_.inverse();
  } catch (const DivisionByZero&) {
    throw NotCompatible("form is singular");
  }
}

ExactMatrix Involution::apply(const ExactMatrix& x) const {
  Int m = lcm(x.modulus(), form_.modulus());
  return form_inverse_.lift(m) * x.lift(m).transpose() * form_.lift(m);
}

Involution Involution::lift(Int modulus) const { return Involution(form_.lift(modulus), symmetric_); }

InvolutionSplit split_by_involution(const MatrixGrading& grading, const Involution& involution) {
  InvolutionSplit out;
  for (std::size_t i = 0; i < grading.size(); ++i) {
    const auto& m = grading.matrices()[i];
    auto s = involution.apply(m);
    if (s == -m) {
      out.skew.push_back(grading.support()[i]);
    } else if (s == m) {
      out.symmetric.push_back(grading.support()[i]);
    } else {
      throw NotCompatible("M_" + to_string(grading.support()[i]) + " is not an eigenvector of the involution");
    }
  }
  return out;
}

MatrixGrading tensor_grading(const std::vector<MatrixGrading>& factors) {
  if (factors.empty()) throw InputError("tensor product of no factors");
  std::vector<Int> orders;
  Int m = 1;
  bool cocycles = true;
  for (const auto& f : factors) {
    orders.insert(orders.end(), f.group().orders().begin(), f.group().orders().end());
    m = lcm(m, f.modulus());
    cocycles = cocycles && f.cocycle().has_value();
  }
  FiniteAbelianGroup g(orders);
  std::vector<GroupElement> support{GroupElement{}};
  std::vector<ExactMatrix> mats{ExactMatrix::identity(1, m)};
  for (const auto& f : factors) {
    std::vector<GroupElement> next_support;
    std::vector<ExactMatrix> next_mats;
    for (std::size_t i = 0; i < support.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        GroupElement e = support[i];
        e.coords.insert(e.coords.end(), f.support()[j].coords.begin(), f.support()[j].coords.end());
        next_support.push_back(std::move(e));
        next_mats.push_back(kron(mats[i], f.matrices()[j]));
      }
    }
    support = std::move(next_support);
    mats = std::move(next_mats);
  }
  std::optional<Cocycle> xi;
  if (cocycles) {
    IntMatrix c(g.rank(), g.rank());
    std::size_t off = 0;
    for (const auto& f : factors) {
      const auto& fc = *f.cocycle();
      for (std::size_t i = 0; i < f.group().rank(); ++i)
        for (std::size_t j = 0; j < f.group().rank(); ++j)
          c(off + i, off + j) = rescale_exponent(fc.matrix()(i, j), fc.modulus(), g.exponent());
      off += f.group().rank();
    }
    xi = Cocycle(g, c);
  }
  return MatrixGrading(g, support, mats, xi);
}

std::pair<MatrixGrading, Involution> tensor_grading(
    const std::vector<std::pair<MatrixGrading, Involution>>& factors) {
  if (factors.empty()) throw InputError("tensor product of no factors");
  std::vector<MatrixGrading> gradings;
  ExactMatrix form = ExactMatrix::identity(1, 1);
  std::size_t skew = 0;
  for (const auto& [grading, inv] : factors) {
    gradings.push_back(grading);
    form = kron(form, inv.form());
    if (!inv.symmetric()) ++skew;
  }
  auto g = tensor_grading(gradings);
  return {g, Involution(form.lift(lcm(form.modulus(), g.modulus())), skew % 2 == 0)};
}

IsoReport verify_iso(const GradedLieAlgebra& L, const MatrixGrading& model, const std::vector<GroupElement>& images,
                     const std::vector<CyclotomicNumber>& scalars) {
  IsoReport out;
  const std::size_t d = L.dimension();
  if (images.size() != d || scalars.size() != d) {
    out.holds = false;
    out.message = "one image and one scalar per basis element are required";
    return out;
  }
  Int m = lcm(L.modulus(), model.modulus());
  for (const auto& s : scalars) m = lcm(m, s.modulus());
  std::vector<ExactMatrix> phi;
  std::vector<GroupElement> seen;
  for (std::size_t i = 0; i < d; ++i) {
    if (model.position(images[i]) == MatrixGrading::npos) {
      out.holds = false;
      out.witness = {L.support()[i]};
      out.message = "image " + to_string(images[i]) + " is not in the model support";
      return out;
    }
    if (scalars[i].is_zero()) {
      out.holds = false;
      out.witness = {L.support()[i]};
      out.message = "zero scalar";
      return out;
    }
    seen.push_back(images[i]);
    phi.push_back(scalars[i].lift(m) * model.matrix(images[i]).lift(m));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    out.holds = false;
    out.message = "images are not distinct";
    return out;
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      ++out.pairs;
      auto lhs = commutator(phi[i], phi[j]);
      bool ok = L.bracket_is_zero(i, j) ? lhs.is_zero()
                                        : lhs == L.coefficient(i, j).lift(m) * phi[L.sum_position(i, j)];
      if (!ok) {
        out.holds = false;
        out.witness = {L.support()[i], L.support()[j]};
        out.message = "bracket not intertwined at " + to_string(L.support()[i]) + ", " + to_string(L.support()[j]);
        return out;
      }
    }
  }
  return out;
}

std::vector<CyclotomicNumber> coboundary_scalars(const Cocycle& algebra, const Cocycle& model,
                                                 const std::vector<GroupElement>& labels) {
  if (!(algebra.group() == model.group())) throw InvalidCocycle("cocycles live on different groups");
  const Int n = algebra.modulus();
  IntMatrix diff = model.matrix();
  for (std::size_t i = 0; i < diff.rows(); ++i)
    for (std::size_t j = 0; j < diff.cols(); ++j) diff(i, j) = mod(diff(i, j) - algebra.matrix()(i, j), n);
  auto eta = coboundary_potential(Cocycle(algebra.group(), diff));
  std::vector<CyclotomicNumber> out;
  for (const auto& a : labels) out.push_back(CyclotomicNumber::embed(eta[algebra.group().index_of(a)].inverse()));
  return out;
}

std::vector<CyclotomicNumber> coboundary_scalars(const GradedLieAlgebra& L, const Cocycle& model) {
  if (!L.cocycle()) throw InvalidCocycle("algebra has no cocycle");
  return coboundary_scalars(*L.cocycle(), model, L.support());
}

DualActionReport verify_dual_action(const MatrixGrading& grading, const std::vector<ExactMatrix>& generators) {
  DualActionReport out;
  Int m = grading.modulus();
  for (const auto& g : generators) m = lcm(m, g.modulus());
  out.characters.assign(grading.size(), {});
  for (std::size_t k = 0; k < generators.size(); ++k) {
    ExactMatrix g = generators[k].lift(m);
    ExactMatrix inv;
    try {
      inv = g.inverse();
    } catch (const DivisionByZero&) {
      out.holds = false;
      out.generator = k;
      out.message = "generator " + std::to_string(k) + " is singular";
      return out;
    }
    for (std::size_t i = 0; i < grading.size(); ++i) {
      ExactMatrix mi = grading.matrices()[i].lift(m);
      auto chi = proportion(g * mi * inv, mi);
      if (!chi) {
        out.holds = false;
        out.generator = k;
        out.witness = {grading.support()[i]};
        out.message = "generator " + std::to_string(k) + " does not preserve M_" + to_string(grading.support()[i]);
        out.characters.clear();
        return out;
      }
      out.characters[i].push_back(*chi);
    }
  }
  std::map<std::vector<std::vector<std::string>>, std::size_t> seen;
  for (std::size_t i = 0; i < grading.size(); ++i) {
    std::vector<std::vector<std::string>> key;
    for (const auto& c : out.characters[i]) key.push_back(c.coefficient_strings());
    auto [it, fresh] = seen.emplace(key, i);
    if (!fresh && out.separates) {
      out.separates = false;
      out.witness = {grading.support()[it->second], grading.support()[i]};
      out.message = "characters do not separate " + to_string(grading.support()[it->second]) + " and " +
                    to_string(grading.support()[i]);
    }
  }
  return out;
}

std::vector<int> transpose_signs(const MatrixGrading& grading) {
  std::vector<int> out;
  for (std::size_t i = 0; i < grading.size(); ++i) {
    const auto& a = grading.matrices()[i];
    auto t = -a.transpose();
    if (t == a) {
      out.push_back(1);
    } else if (t == -a) {
      out.push_back(-1);
    } else {
      throw NotCompatible("A -> -A^t does not preserve M_" + to_string(grading.support()[i]));
    }
  }
  return out;
}

namespace {

constexpr std::size_t max_model_size = 64;

// generator placed in slot t of a tensor product of the given sizes
ExactMatrix in_slot(const std::vector<std::size_t>& sizes, std::size_t slot, const ExactMatrix& g, Int modulus) {
  ExactMatrix out = ExactMatrix::identity(1, modulus);
  for (std::size_t t = 0; t < sizes.size(); ++t)
    out = kron(out, t == slot ? g : ExactMatrix::identity(sizes[t], modulus));
  return out.lift(lcm(out.modulus(), modulus));
}

std::vector<ExactMatrix> pauli_generators(const std::vector<Int>& ns, Int modulus) {
  std::vector<std::size_t> sizes(ns.begin(), ns.end());
  std::vector<ExactMatrix> out;
  for (std::size_t t = 0; t < ns.size(); ++t) {
    auto [x, y] = generalized_pauli(ns[t]);
    out.push_back(in_slot(sizes, t, x.lift(modulus), modulus));
    out.push_back(in_slot(sizes, t, y.lift(modulus), modulus));
  }
  return out;
}

void check_size(std::size_t n) {
  if (n > max_model_size) throw BadParameters("matrix model would be " + std::to_string(n) + " x " + std::to_string(n));
}

std::vector<GroupElement> nonzero(const FiniteAbelianGroup& g) {
  auto all = g.elements();
  all.erase(std::remove(all.begin(), all.end(), g.zero()), all.end());
  return all;
}

// e_i + e_j in the f-basis has ones in coordinates i..j-1
std::pair<std::size_t, std::size_t> root_pair(const GroupElement& r) {
  std::size_t i = 0;
  while (i < r.coords.size() && r.coords[i] == 0) ++i;
  std::size_t j = r.coords.size();
  while (j > 0 && r.coords[j - 1] == 0) --j;
  return {i, j};
}

MatrixGrading orthogonal_grading(const RootSystem& sys, std::size_t n, Int modulus) {
  std::vector<ExactMatrix> mats;
  for (const auto& r : sys.roots()) {
    auto [i, j] = root_pair(r);
    mats.push_back(CyclotomicNumber::integer(modulus, 2) *
                   (ExactMatrix::unit(n, i, j, modulus) - ExactMatrix::unit(n, j, i, modulus)));
  }
  return MatrixGrading(sys.group(), sys.roots(), mats);
}

ExactMatrix sign_diagonal(std::size_t n, const std::vector<std::size_t>& flips, Int modulus) {
  ExactMatrix d = ExactMatrix::identity(n, modulus);
  for (auto f : flips) d(f, f) = CyclotomicNumber::integer(modulus, -1);
  return d;
}

}  // namespace

MatrixModel matrix_model(const CatalogTag& tag) {
  tag.validate();
  const auto& p = tag.params;
  RootSystem sys = make(tag);
  switch (tag.family) {
    case Family::I: {
      std::size_t size = 1;
      for (Int n : p) check_size(size *= static_cast<std::size_t>(n));
      std::vector<MatrixGrading> factors;
      for (Int n : p) factors.push_back(epsilon_grading(n));
      auto full = tensor_grading(factors);
      auto L = build_root(sys, model_cocycle(tag));
      auto scalars = coboundary_scalars(L, *full.cocycle());
      auto support = nonzero(full.group());
      return MatrixModel{tag, L, restrict(full, support), L.support(), scalars,
                         pauli_generators(p, full.modulus()), std::nullopt, std::nullopt,
                         "sl(" + std::to_string(size) + ")"};
    }
    case Family::Iprime: {
      const auto k = static_cast<std::size_t>(p[0]);
      check_size(std::size_t{1} << std::min<std::size_t>(k, 30));
      std::vector<MatrixGrading> factors(k, epsilon_grading(2));
      auto full = tensor_grading(factors);
      IntMatrix proj(2 * k, 2 * k + 1);
      for (std::size_t i = 0; i < 2 * k; ++i) proj(i, i) = 1;
      GroupHomomorphism pr(sys.group(), full.group(), proj);
      auto L = build_root(sys, model_cocycle(tag));
      std::vector<GroupElement> images;
      for (const auto& a : L.support()) images.push_back(pr.apply(a));
      auto scalars = coboundary_scalars(L, full.cocycle()->pullback(pr));
      auto grading = restrict(full, nonzero(full.group()));
      std::vector<int> signs;
      auto all = transpose_signs(grading);
      for (const auto& im : images) signs.push_back(all[grading.position(im)]);
      return MatrixModel{tag, L, grading, images, scalars,
                         pauli_generators(std::vector<Int>(k, 2), full.modulus()), std::nullopt, signs,
                         "sl(" + std::to_string(std::size_t{1} << k) + ")"};
    }
    case Family::II:
    case Family::IVprime: {
      const std::size_t n = tag.family == Family::II ? static_cast<std::size_t>(2 * p[0] + 1)
                                                     : static_cast<std::size_t>(2 * p[0]);
      check_size(n);
      auto L = build_root(sys, model_cocycle(tag));
      auto grading = orthogonal_grading(sys, n, L.modulus());
      auto scalars = coboundary_scalars(L, model_cocycle(tag));
      std::vector<ExactMatrix> gens;
      for (std::size_t m = 0; m < n; ++m) gens.push_back(sign_diagonal(n, {m}, L.modulus()));
      return MatrixModel{tag, L, grading, L.support(), scalars, gens, std::nullopt, std::nullopt,
                         "so(" + std::to_string(n) + ")"};
    }
    case Family::IV: {
      const std::size_t n = static_cast<std::size_t>(2 * p[0]);
      check_size(n);
      CatalogTag parent{Family::IVprime, p};
      RootSystem big = make(parent);
      auto red = reduce(big);
      if (!(red.system.group() == sys.group()) || red.system.roots() != sys.roots())
        throw OracleMismatch("IV does not match the reduction of IV'");
      auto rad = radical(big.beta());
      auto L = build_root(sys, model_cocycle(tag));
      std::vector<GroupElement> images;
      for (const auto& r : L.support()) {
        GroupElement base = red.quotient.lift(r);
        std::optional<GroupElement> hit;
        for (const auto& h : rad) {
          GroupElement c = big.group().add(base, h);
          if (big.contains(c)) hit = c;
        }
        if (!hit) throw OracleMismatch("no root of IV' over " + to_string(r));
        images.push_back(*hit);
      }
      auto grading = orthogonal_grading(big, n, L.modulus());
      auto pulled = L.cocycle()->pullback(red.quotient.projection);
      auto scalars = coboundary_scalars(pulled, model_cocycle(parent), images);
      std::vector<ExactMatrix> gens;
      for (std::size_t m = 1; m < n; ++m) gens.push_back(sign_diagonal(n, {0, m}, L.modulus()));
      return MatrixModel{tag, L, grading, images, scalars, gens, std::nullopt, std::nullopt,
                         "so(" + std::to_string(n) + ")"};
    }
    case Family::III:
    case Family::V: {
      const auto k = static_cast<std::size_t>(p[0]);
      check_size(std::size_t{1} << std::min<std::size_t>(k, 30));
      std::vector<std::pair<MatrixGrading, Involution>> factors;
      for (std::size_t t = 0; t < k; ++t) {
        bool skew = tag.family == Family::III && t == 0;
        ExactMatrix form = skew ? ExactMatrix::from_integers({{0, 1}, {-1, 0}}, 2) : ExactMatrix::identity(2, 2);
        factors.emplace_back(epsilon_grading(2), Involution(form, !skew));
      }
      auto [full, inv] = tensor_grading(factors);
      auto split = split_by_involution(full, inv);
      if (split.skew != sys.roots()) throw OracleMismatch("K(M,*) support differs from the root set");
      auto L = build_root(sys, model_cocycle(tag));
      auto scalars = coboundary_scalars(L, *full.cocycle());
      return MatrixModel{tag, L, restrict(full, split.skew), L.support(), scalars,
                         pauli_generators(std::vector<Int>(k, 2), full.modulus()), inv, std::nullopt,
                         (tag.family == Family::III ? "sp(" : "so(") + std::to_string(std::size_t{1} << k) + ")"};
    }
  }
  throw BadParameters("unknown family");
}

}  // namespace frs
