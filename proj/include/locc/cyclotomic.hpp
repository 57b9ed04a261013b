#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace locc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of the d-th cyclotomic polynomial, ascending degree, monic.
std::vector<long long> cyclotomic_polynomial(unsigned d);

unsigned euler_totient(unsigned d);

/// Exact element of Q(omega_d), omega_d = exp(2*pi*i/d), stored in the
/// canonical power basis omega^0 .. omega^{phi(d)-1} after reduction modulo
/// the d-th cyclotomic polynomial. Immutable value type; equality of
/// canonical coefficient vectors decides equality of the numbers.
class CycNumber {
 public:
  CycNumber() : order_(1), coeffs_(1, Rational(0)) {}
  explicit CycNumber(const Rational& c, unsigned order = 1);

  /// omega_d^k, k reduced mod d.
  static CycNumber root_power(unsigned d, long long k);

  /// Reduce an arbitrary polynomial in omega_d (ascending coefficients).
  static CycNumber from_poly(unsigned d, std::vector<Rational> poly);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  /// Embed into Q(omega_m) for any multiple m of the current order.
  CycNumber lifted(unsigned new_order) const;

  std::complex<double> to_complex() const;

  CycNumber operator+(const CycNumber& rhs) const;
  CycNumber operator-(const CycNumber& rhs) const;
  CycNumber operator*(const CycNumber& rhs) const;
  CycNumber operator-() const;
  CycNumber scaled(const Rational& c) const;

  bool operator==(const CycNumber& rhs) const;
  bool operator!=(const CycNumber& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;  // size euler_totient(order_)
};

}  // namespace locc
