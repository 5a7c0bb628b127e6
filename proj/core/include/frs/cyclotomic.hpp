#pragma once

// Exact arithmetic in Q(zeta_N). Elements are coefficient vectors in the power
// basis 1, z, ..., z^{phi(N)-1} modulo the N-th cyclotomic polynomial, so
// equality is decided coefficientwise.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "frs/intmatrix.hpp"

namespace frs {

/// zeta_N^e with e reduced mod N.
struct RootOfUnity {
  Int modulus = 1;
  Int exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(Int modulus, Int exponent);

  RootOfUnity inverse() const { return RootOfUnity(modulus, -exponent); }
  RootOfUnity pow(Int k) const;
  bool is_one() const noexcept { return exponent == 0; }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Coefficients of Phi_n from the constant term upward.
std::vector<Int> cyclotomic_polynomial(Int n);
Int euler_phi(Int n);

/// Largest modulus accepted by CyclotomicNumber (default 64).
Int cyclotomic_modulus_bound();
void set_cyclotomic_modulus_bound(Int bound);

namespace detail {
struct CyclotomicField;
}

class CyclotomicNumber {
 public:
  /// Zero of Q = Q(zeta_1).
  CyclotomicNumber();

  static CyclotomicNumber zero(Int modulus);
  static CyclotomicNumber integer(Int modulus, Int value);
  static CyclotomicNumber rational(Int modulus, const mpq_class& value);
  /// zeta_N^e
  static CyclotomicNumber root(Int modulus, Int exponent);
  static CyclotomicNumber embed(const RootOfUnity& r) { return root(r.modulus, r.exponent); }
  /// From explicit power-basis coefficients (length phi(N)).
  static CyclotomicNumber from_coefficients(Int modulus, std::vector<mpq_class> coeffs);

  Int modulus() const noexcept;
  std::size_t degree() const noexcept { return coeffs_.size(); }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  /// Fixed by complex conjugation.
  bool is_real() const;
  /// Value if the number lies in Q.
  std::optional<mpq_class> as_rational() const;

  CyclotomicNumber conj() const;
  /// Throws DivisionByZero on zero.
  CyclotomicNumber inverse() const;
  /// Re-expresses the number in Q(zeta_M); requires N | M.
  CyclotomicNumber lift(Int modulus) const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Human-readable form in z = zeta_N, e.g. "2 - z^3".
  std::string to_string() const;
  /// Coefficients as canonical rational strings ("-1/2").
  std::vector<std::string> coefficient_strings() const;

 private:
  CyclotomicNumber(const detail::CyclotomicField* field, std::vector<mpq_class> coeffs);
  void require_same_field(const CyclotomicNumber& other) const;

  const detail::CyclotomicField* field_;
  std::vector<mpq_class> coeffs_;
};

/// Sign (-1, 0, +1) of a real cyclotomic number; exact zero is detected from
/// the coefficients, otherwise rational interval enclosures of the cosines are
/// refined until the sign is certified. Throws NotReal.
int real_sign(const CyclotomicNumber& x);

/// True iff x > 0. Throws NotReal if conj(x) != x.
bool certify_positive_real(const CyclotomicNumber& x);

}  // namespace frs
