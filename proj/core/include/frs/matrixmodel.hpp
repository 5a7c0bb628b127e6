#pragma once

// Matrix realizations: generalized Pauli matrices, epsilon-gradings of M(n),
// involutions X* = Phi^-1 X^t Phi, tensor gradings, and checks that a
// labelled family of matrices realizes L(R).

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frs/catalog.hpp"
#include "frs/cyclotomic.hpp"
#include "frs/liealg.hpp"

namespace frs {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// Zero matrix over Q(zeta_modulus).
  ExactMatrix(std::size_t rows, std::size_t cols, Int modulus);

  static ExactMatrix identity(std::size_t n, Int modulus);
  static ExactMatrix from_integers(const std::vector<std::vector<Int>>& rows, Int modulus);
  /// E_{ij}
  static ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j, Int modulus);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int modulus() const noexcept { return modulus_; }

  const CyclotomicNumber& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  CyclotomicNumber& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const;
  ExactMatrix transpose() const;
  CyclotomicNumber trace() const;
  /// Re-expresses entries in Q(zeta_M); requires modulus() | M.
  ExactMatrix lift(Int modulus) const;
  /// Gauss-Jordan. Throws DivisionByZero if singular.
  ExactMatrix inverse() const;
  /// Negative powers use the inverse.
  ExactMatrix pow(Int k) const;
  std::size_t rank() const;

  ExactMatrix operator-() const;
  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const CyclotomicNumber& s, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  void require_shape(const ExactMatrix& other) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Int modulus_ = 1;
  std::vector<CyclotomicNumber> data_;
};

/// AB - BA
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
/// Kronecker product; factors are lifted to a common field.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
/// lambda with a = lambda * b, if one exists (b nonzero).
std::optional<CyclotomicNumber> proportion(const ExactMatrix& a, const ExactMatrix& b);

/// X = diag(eps^{n-1}, ..., eps, 1), Y the cyclic shift, XY = eps YX.
/// Throws BadParameters for n < 2.
std::pair<ExactMatrix, ExactMatrix> generalized_pauli(Int n);

/// Labelled basis matrices M_a, a in support (sorted).
class MatrixGrading {
 public:
  MatrixGrading() = default;
  /// Throws InvalidElement on bad labels or shapes, ModulusMismatch on mixed fields.
  MatrixGrading(FiniteAbelianGroup group, std::vector<GroupElement> support, std::vector<ExactMatrix> matrices,
                std::optional<Cocycle> cocycle = std::nullopt);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const std::vector<GroupElement>& support() const noexcept { return support_; }
  const std::vector<ExactMatrix>& matrices() const noexcept { return matrices_; }
  /// M_a M_b = xi(a, b) M_{a+b}, when the grading is a twisted group algebra.
  const std::optional<Cocycle>& cocycle() const noexcept { return cocycle_; }
  Int modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return support_.size(); }
  std::size_t matrix_size() const { return matrices_.empty() ? 0 : matrices_.front().rows(); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position(const GroupElement& a) const;
  /// Throws InvalidElement if a is not in the support.
  const ExactMatrix& matrix(const GroupElement& a) const;

 private:
  FiniteAbelianGroup group_;
  std::vector<GroupElement> support_;
  std::vector<ExactMatrix> matrices_;
  std::optional<Cocycle> cocycle_;
  Int modulus_ = 1;
};

/// G = Z_n^2, M_{(i,j)} = X^i Y^{-j}, xi((i,j),(s,t)) = eps^{js}.
MatrixGrading epsilon_grading(Int n);

/// Subset of the support; the cocycle is dropped unless the subset is everything.
MatrixGrading restrict(const MatrixGrading& grading, std::span<const GroupElement> support);

struct ProductLawReport {
  bool holds = true;
  std::vector<GroupElement> witness;
  std::string message;
};

/// Checks M_a M_b = xi(a, b) M_{a+b} over all pairs against the attached cocycle.
ProductLawReport check_product_law(const MatrixGrading& grading);

class Involution {
 public:
  /// Throws NotCompatible unless Phi^t = Phi (symmetric) or -Phi, and Phi is invertible.
  Involution(ExactMatrix form, bool symmetric);

  const ExactMatrix& form() const noexcept { return form_; }
  bool symmetric() const noexcept { return symmetric_; }
  /// Phi^-1 X^t Phi
  ExactMatrix apply(const ExactMatrix& x) const;
  Involution lift(Int modulus) const;

 private:
  ExactMatrix form_;
  ExactMatrix form_inverse_;
  bool symmetric_ = true;
};

struct InvolutionSplit {
  /// K(M,*): M_a* = -M_a
  std::vector<GroupElement> skew;
  /// H(M,*): M_a* = M_a
  std::vector<GroupElement> symmetric;
};

/// Throws NotCompatible if some M_a* is not +-M_a.
InvolutionSplit split_by_involution(const MatrixGrading& grading, const Involution& involution);

/// Kronecker product of gradings over the direct product of the groups.
MatrixGrading tensor_grading(const std::vector<MatrixGrading>& factors);
/// Same, with the tensor involution; symmetric iff the number of skew factors is even.
std::pair<MatrixGrading, Involution> tensor_grading(const std::vector<std::pair<MatrixGrading, Involution>>& factors);

struct IsoReport {
  bool holds = true;
  std::size_t pairs = 0;
  std::vector<GroupElement> witness;
  std::string message;
};

/// Checks [phi(u_a), phi(u_b)] = c(a, b) phi(u_{a+b}) for every pair, where
/// phi(u_a) = scalars[i] * M_{images[i]} and i is the position of a in L.
IsoReport verify_iso(const GradedLieAlgebra& algebra, const MatrixGrading& model,
                     const std::vector<GroupElement>& images, const std::vector<CyclotomicNumber>& scalars);

/// Scalars 1/eta(label) where eta is the coboundary potential of the symmetric
/// difference model - algebra on their common group. Throws InvalidCocycle if
/// the groups differ or the difference is not symmetric.
std::vector<CyclotomicNumber> coboundary_scalars(const Cocycle& algebra, const Cocycle& model,
                                                 const std::vector<GroupElement>& labels);
/// Same, labelled by the algebra's own support.
std::vector<CyclotomicNumber> coboundary_scalars(const GradedLieAlgebra& algebra, const Cocycle& model);

struct DualActionReport {
  bool holds = true;
  bool separates = true;
  /// characters[i][g]: g M_i g^-1 = characters[i][g] M_i
  std::vector<std::vector<CyclotomicNumber>> characters;
  std::optional<std::size_t> generator;
  std::vector<GroupElement> witness;
  std::string message;
};

DualActionReport verify_dual_action(const MatrixGrading& grading, const std::vector<ExactMatrix>& generators);

/// s with -M_a^t = s M_a, one entry per support element. Throws NotCompatible.
std::vector<int> transpose_signs(const MatrixGrading& grading);

/// Realization of a catalog entry.
struct MatrixModel {
  CatalogTag tag;
  GradedLieAlgebra algebra;
  MatrixGrading grading;
  /// aligned with algebra.support()
  std::vector<GroupElement> images;
  std::vector<CyclotomicNumber> scalars;
  std::vector<ExactMatrix> generators;
  std::optional<Involution> involution;
  /// I': sign of A -> -A^t on each algebra component
  std::optional<std::vector<int>> transpose_signs;
  std::string target;
};

/// Throws BadParameters when the matrices would exceed 64 x 64.
MatrixModel matrix_model(const CatalogTag& tag);

}  // namespace frs
