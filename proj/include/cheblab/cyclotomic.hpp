#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cheblab/rational.hpp"

namespace cheblab {

int euler_phi(int n);
/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// Element of the cyclotomic field Q(zeta_m), stored in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1) and reduced modulo Phi_m.
///
/// Arithmetic between elements of different conductors lifts both operands
/// to the lcm field. Two values compare equal iff their coefficient vectors
/// agree in a common field, so equality is exact.
class Cyclotomic {
 public:
  Cyclotomic() : m_(1), c_(1) {}
  Cyclotomic(Rational r) : m_(1), c_{r} {}          // NOLINT(implicit)
  Cyclotomic(std::int64_t n) : m_(1), c_{Rational(n)} {}  // NOLINT(implicit)
  Cyclotomic(int m, std::vector<Rational> coeffs);

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static Cyclotomic root_of_unity(int n, std::int64_t k = 1);

  int field() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Same value, expressed in Q(zeta_M); requires field() | M.
  Cyclotomic lifted(int M) const;
  /// Same value in the smallest cyclotomic field containing it.
  Cyclotomic minimized() const;
  /// Conductor of the smallest field containing the value (never 2 mod 4).
  int conductor() const { return minimized().m_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error if the value is not rational.
  Rational to_rational() const;
  std::complex<double> to_complex() const;

  Cyclotomic conj() const { return galois(-1); }
  /// Galois automorphism zeta_m -> zeta_m^a, gcd(a, m) = 1.
  Cyclotomic galois(std::int64_t a) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Rational& r);
  /// this += a * b, the hot loop of every class-function sum.
  void add_product(const Cyclotomic& a, const Cyclotomic& b);
  /// this += r * a.
  void add_scaled(const Rational& r, const Cyclotomic& a);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& r) { return a /= r; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string str() const;

 private:
  void reduce_exponents(const std::vector<Rational>& by_exponent);
  int m_;
  std::vector<Rational> c_;
};

/// Sign of a real cyclotomic number (-1, 0, +1) under the embedding
/// zeta_m = exp(2 pi i / m). Zero is decided exactly; nonzero signs use
/// floating evaluation with an error bound, escalating to 50 digits when
/// the double evaluation is inconclusive. Throws if the value is not real.
int real_sign(const Cyclotomic& x);

/// |x|^2 = x * conj(x), exact.
inline Cyclotomic norm_squared(const Cyclotomic& x) { return x * x.conj(); }

}  // namespace cheblab
