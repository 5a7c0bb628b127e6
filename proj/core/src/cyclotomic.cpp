#include "frs/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "frs/error.hpp"

namespace frs {

namespace detail {

struct CyclotomicField {
  Int modulus = 1;
  std::size_t degree = 1;
  std::vector<Int> phi;  // monic, low to high
  // residues[k] = z^k mod Phi_N for 0 <= k < max(N, 2*degree - 1)
  std::vector<std::vector<Int>> residues;
};

}  // namespace detail

namespace {

std::atomic<Int> g_modulus_bound{64};

std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  // den is monic
  const std::ptrdiff_t dn = static_cast<std::ptrdiff_t>(den.size()) - 1;
  const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(num.size()) - 1;
  if (nn < dn) return {0};
  std::vector<Int> q(static_cast<std::size_t>(nn - dn + 1), 0);
  for (std::ptrdiff_t i = nn; i >= dn; --i) {
    const Int t = num[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - dn)] = t;
    if (t == 0) continue;
    for (std::ptrdiff_t j = 0; j <= dn; ++j) {
      auto& slot = num[static_cast<std::size_t>(i - dn + j)];
      slot = checked_add(slot, -checked_mul(t, den[static_cast<std::size_t>(j)]));
    }
  }
  return q;
}

const detail::CyclotomicField* field_for(Int modulus) {
  if (modulus < 1) throw UnsupportedModulus("cyclotomic modulus must be >= 1");
  if (modulus > g_modulus_bound.load()) {
    throw UnsupportedModulus("cyclotomic modulus " + std::to_string(modulus) +
                             " exceeds the configured bound " +
                             std::to_string(g_modulus_bound.load()));
  }
  static std::mutex mutex;
  static std::map<Int, std::unique_ptr<detail::CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(modulus);
  if (it != cache.end()) return it->second.get();

  auto f = std::make_unique<detail::CyclotomicField>();
  f->modulus = modulus;
  f->phi = cyclotomic_polynomial(modulus);
  f->degree = f->phi.size() - 1;
  const std::size_t d = f->degree;
  const std::size_t count = std::max<std::size_t>(static_cast<std::size_t>(modulus), 2 * d);
  f->residues.reserve(count);
  std::vector<Int> cur(d, 0);
  cur[0] = 1;
  f->residues.push_back(cur);
  for (std::size_t k = 1; k < count; ++k) {
    Int top = cur[d - 1];
    for (std::size_t j = d - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t j = 0; j < d; ++j) cur[j] = checked_add(cur[j], -checked_mul(top, f->phi[j]));
    }
    f->residues.push_back(cur);
  }
  auto* raw = f.get();
  cache.emplace(modulus, std::move(f));
  return raw;
}

}  // namespace

RootOfUnity::RootOfUnity(Int modulus_, Int exponent_) : modulus(modulus_), exponent(0) {
  if (modulus_ < 1) throw UnsupportedModulus("root of unity modulus must be >= 1");
  exponent = mod(exponent_, modulus_);
}

RootOfUnity RootOfUnity::pow(Int k) const {
  return RootOfUnity(modulus, checked_mul(mod(k, modulus), exponent));
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  if (a.modulus != b.modulus) throw ModulusMismatch("roots of unity of different moduli");
  return RootOfUnity(a.modulus, a.exponent + b.exponent);
}

std::vector<Int> cyclotomic_polynomial(Int n) {
  if (n < 1) throw UnsupportedModulus("cyclotomic polynomial index must be >= 1");
  static std::mutex mutex;
  static std::map<Int, std::vector<Int>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Int> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (Int d = 1; d < n; ++d) {
    if (n % d == 0) poly = poly_divide_exact(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(n, poly);
  return poly;
}

Int euler_phi(Int n) {
  Int result = n;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Int cyclotomic_modulus_bound() { return g_modulus_bound.load(); }
void set_cyclotomic_modulus_bound(Int bound) { g_modulus_bound.store(bound); }

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(field_for(1), {mpq_class(0)}) {}

CyclotomicNumber::CyclotomicNumber(const detail::CyclotomicField* field,
                                   std::vector<mpq_class> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

CyclotomicNumber CyclotomicNumber::zero(Int modulus) {
  const auto* f = field_for(modulus);
  return CyclotomicNumber(f, std::vector<mpq_class>(f->degree));
}

CyclotomicNumber CyclotomicNumber::integer(Int modulus, Int value) {
  return rational(modulus, mpq_class(static_cast<long>(value)));
}

CyclotomicNumber CyclotomicNumber::rational(Int modulus, const mpq_class& value) {
  CyclotomicNumber x = zero(modulus);
  x.coeffs_[0] = value;
  return x;
}

CyclotomicNumber CyclotomicNumber::root(Int modulus, Int exponent) {
  const auto* f = field_for(modulus);
  const auto& r = f->residues[static_cast<std::size_t>(mod(exponent, modulus))];
  std::vector<mpq_class> c(f->degree);
  for (std::size_t j = 0; j < f->degree; ++j) c[j] = static_cast<long>(r[j]);
  return CyclotomicNumber(f, std::move(c));
}

CyclotomicNumber CyclotomicNumber::from_coefficients(Int modulus, std::vector<mpq_class> coeffs) {
  const auto* f = field_for(modulus);
  if (coeffs.size() != f->degree) {
    throw InputError("expected " + std::to_string(f->degree) + " coefficients for modulus " +
                     std::to_string(modulus));
  }
  for (auto& c : coeffs) c.canonicalize();
  return CyclotomicNumber(f, std::move(coeffs));
}

Int CyclotomicNumber::modulus() const noexcept { return field_->modulus; }

bool CyclotomicNumber::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

bool CyclotomicNumber::is_real() const { return conj() == *this; }

std::optional<mpq_class> CyclotomicNumber::as_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) != 0) return std::nullopt;
  }
  return coeffs_[0];
}

void CyclotomicNumber::require_same_field(const CyclotomicNumber& other) const {
  if (field_ != other.field_) {
    throw ModulusMismatch("cyclotomic moduli differ: " + std::to_string(modulus()) + " vs " +
                          std::to_string(other.modulus()));
  }
}

CyclotomicNumber CyclotomicNumber::conj() const {
  const Int n = field_->modulus;
  std::vector<mpq_class> out(field_->degree);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const auto& r = field_->residues[static_cast<std::size_t>(mod(-static_cast<Int>(k), n))];
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (r[j] != 0) out[j] += coeffs_[k] * static_cast<long>(r[j]);
    }
  }
  return CyclotomicNumber(field_, std::move(out));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  require_same_field(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  require_same_field(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.require_same_field(b);
  const std::size_t d = a.coeffs_.size();
  std::vector<mpq_class> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<mpq_class> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& r = a.field_->residues[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (r[j] != 0) out[j] += prod[k] * static_cast<long>(r[j]);
    }
  }
  return CyclotomicNumber(a.field_, std::move(out));
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  *this = *this * rhs;
  return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  const std::size_t d = coeffs_.size();
  // Column j of the multiplication matrix holds x * z^j.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  for (std::size_t j = 0; j < d; ++j) {
    CyclotomicNumber col = *this * root(modulus(), static_cast<Int>(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && sgn(m[p][c]) == 0) ++p;
    if (p == d) throw DivisionByZero("singular multiplication matrix");
    std::swap(m[p], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (std::size_t k = c; k <= d; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<mpq_class> out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = m[i][d];
  return CyclotomicNumber(field_, std::move(out));
}

CyclotomicNumber CyclotomicNumber::lift(Int target) const {
  if (target % modulus() != 0) {
    throw ModulusMismatch("cannot lift modulus " + std::to_string(modulus()) + " to " +
                          std::to_string(target));
  }
  if (target == modulus()) return *this;
  const Int step = target / modulus();
  CyclotomicNumber out = zero(target);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    out += rational(target, coeffs_[k]) * root(target, static_cast<Int>(k) * step);
  }
  return out;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (k > 1) os << '^' << k;
  }
  if (first) return "0";
  return os.str();
}

std::vector<std::string> CyclotomicNumber::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

// ---------------------------------------------------------------------------
// Sign certification

namespace {

struct Interval {
  mpq_class lo;
  mpq_class hi;
};

// Partial sums of the alternating series for atan(1/x) bracket the limit.
Interval atan_inverse(long x, long terms) {
  mpq_class sum = 0;
  mpq_class prev = 0;
  mpz_class pow = x;
  const mpz_class x2 = mpz_class(x) * x;
  for (long k = 0; k <= terms; ++k) {
    prev = sum;
    mpq_class term(1, 1);
    term = mpq_class(mpz_class(1), mpz_class((2 * k + 1)) * pow);
    term.canonicalize();
    sum += (k % 2 == 0) ? term : mpq_class(-term);
    pow *= x2;
  }
  return prev < sum ? Interval{prev, sum} : Interval{sum, prev};
}

Interval pi_enclosure(long bits) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
  Interval a = atan_inverse(5, bits / 4 + 4);
  Interval b = atan_inverse(239, bits / 15 + 4);
  return Interval{16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

mpq_class dyadic_round(const mpq_class& x, long bits) {
  mpz_class scale = 1;
  scale <<= static_cast<mp_bitcnt_t>(bits);
  mpz_class n = x.get_num() * scale;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), x.get_den().get_mpz_t());
  mpq_class out(q, scale);
  out.canonicalize();
  return out;
}

// Enclosure of cos(theta) for theta in [lo, hi].
Interval cos_enclosure(const Interval& theta, long bits) {
  mpq_class mid = dyadic_round((theta.lo + theta.hi) / 2, bits);
  mpq_class radius = std::max(abs(theta.hi - mid), abs(theta.lo - mid));

  mpq_class tol(1, 1);
  {
    mpz_class den = 1;
    den <<= static_cast<mp_bitcnt_t>(bits + 8);
    tol = mpq_class(mpz_class(1), den);
  }
  const mpq_class m2 = mid * mid;
  mpq_class term = 1;
  mpq_class sum = 1;
  long j = 0;
  for (;;) {
    mpq_class next = -term * m2 / ((2 * j + 1) * (2 * j + 2));
    next.canonicalize();
    ++j;
    // Once terms shrink monotonically the first omitted term bounds the tail.
    bool decreasing = m2 < mpq_class((2 * j + 1) * (2 * j + 2));
    if (decreasing && abs(next) < tol) {
      mpq_class err = abs(next) + radius;
      return Interval{sum - err, sum + err};
    }
    sum += next;
    term = next;
  }
}

}  // namespace

int real_sign(const CyclotomicNumber& x) {
  if (!x.is_real()) throw NotReal("value " + x.to_string() + " is not real");
  if (x.is_zero()) return 0;
  if (auto q = x.as_rational()) return sgn(*q);

  const Int n = x.modulus();
  for (long bits = 64; bits <= 8192; bits *= 2) {
    Interval pi = pi_enclosure(bits);
    mpq_class lo = 0, hi = 0;
    const auto& c = x.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (sgn(c[k]) == 0) continue;
      mpq_class scale(2 * static_cast<long>(k), static_cast<long>(n));
      scale.canonicalize();
      Interval cs = cos_enclosure(Interval{pi.lo * scale, pi.hi * scale}, bits);
      mpq_class a = c[k] * cs.lo, b = c[k] * cs.hi;
      lo += std::min(a, b);
      hi += std::max(a, b);
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
  throw Error("could not certify the sign of " + x.to_string());
}

bool certify_positive_real(const CyclotomicNumber& x) { return real_sign(x) > 0; }

}  // namespace frs
