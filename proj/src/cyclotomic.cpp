#include "locc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace locc {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<BigInt> divide_exact(const std::vector<BigInt>& num,
                                 const std::vector<BigInt>& den) {
  std::vector<BigInt> rem = num;
  const std::size_t dn = den.size() - 1;
  if (rem.size() < den.size()) throw std::logic_error("bad division");
  std::vector<BigInt> quot(rem.size() - dn, BigInt(0));
  for (std::size_t i = rem.size(); i-- > den.size() - 1;) {
    const std::size_t k = i - dn;
    if (k >= quot.size()) continue;
    BigInt c = rem[i] / den.back();
    if (c * den.back() != rem[i]) throw std::logic_error("inexact division");
    quot[k] = c;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("nonzero remainder");
  return quot;
}

}  // namespace

unsigned euler_totient(unsigned d) {
  unsigned result = d, n = d;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long long> cyclotomic_polynomial(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic_polynomial: d must be positive");
  // Phi_d = (x^d - 1) / prod_{k | d, k < d} Phi_k.
  std::vector<BigInt> num(d + 1, BigInt(0));
  num[0] = -1;
  num[d] = 1;
  for (unsigned k = 1; k < d; ++k) {
    if (d % k != 0) continue;
    auto phi_k = cyclotomic_polynomial(k);
    std::vector<BigInt> den(phi_k.begin(), phi_k.end());
    num = divide_exact(num, den);
  }
  std::vector<long long> out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) out[i] = num[i].convert_to<long long>();
  return out;
}

CycNumber::CycNumber(const Rational& c, unsigned order) : order_(order) {
  if (order == 0) throw std::invalid_argument("CycNumber: order must be positive");
  coeffs_.assign(euler_totient(order), Rational(0));
  coeffs_[0] = c;
}

CycNumber CycNumber::root_power(unsigned d, long long k) {
  if (d == 0) throw std::invalid_argument("root_power: d must be positive");
  long long r = k % static_cast<long long>(d);
  if (r < 0) r += d;
  std::vector<Rational> poly(static_cast<std::size_t>(r) + 1, Rational(0));
  poly.back() = 1;
  return from_poly(d, std::move(poly));
}

CycNumber CycNumber::from_poly(unsigned d, std::vector<Rational> poly) {
  if (d == 0) throw std::invalid_argument("from_poly: d must be positive");
  // First reduce exponents mod d (omega^d = 1), then take the remainder
  // modulo the monic Phi_d.
  if (poly.size() > d) {
    std::vector<Rational> folded(d, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) folded[i % d] += poly[i];
    poly = std::move(folded);
  }
  const auto phi = cyclotomic_polynomial(d);
  const std::size_t deg = phi.size() - 1;
  while (poly.size() > deg) {
    const Rational lead = poly.back();
    const std::size_t shift = poly.size() - phi.size();
    if (lead != 0)
      for (std::size_t j = 0; j < phi.size(); ++j)
        poly[shift + j] -= lead * phi[j];
    poly.pop_back();
  }
  poly.resize(deg, Rational(0));
  CycNumber out;
  out.order_ = d;
  out.coeffs_ = std::move(poly);
  return out;
}

bool CycNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

CycNumber CycNumber::lifted(unsigned new_order) const {
  if (new_order % order_ != 0)
    throw std::invalid_argument("lifted: new order must be a multiple of the current order");
  if (new_order == order_) return *this;
  const unsigned stride = new_order / order_;
  std::vector<Rational> poly(static_cast<std::size_t>(coeffs_.size() - 1) * stride + 1,
                             Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * stride] = coeffs_[i];
  return from_poly(new_order, std::move(poly));
}

std::complex<double> CycNumber::to_complex() const {
  const double theta = 2.0 * M_PI / static_cast<double>(order_);
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double c = coeffs_[i].convert_to<double>();
    const double ang = theta * static_cast<double>(i);
    acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

namespace {
unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }
}  // namespace

CycNumber CycNumber::operator+(const CycNumber& rhs) const {
  const unsigned m = lcm_u(order_, rhs.order_);
  const CycNumber a = lifted(m), b = rhs.lifted(m);
  std::vector<Rational> poly = a.coeffs_;
  for (std::size_t i = 0; i < poly.size(); ++i) poly[i] += b.coeffs_[i];
  return from_poly(m, std::move(poly));
}

CycNumber CycNumber::operator-(const CycNumber& rhs) const { return *this + (-rhs); }

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNumber CycNumber::operator*(const CycNumber& rhs) const {
  const unsigned m = lcm_u(order_, rhs.order_);
  const CycNumber a = lifted(m), b = rhs.lifted(m);
  std::vector<Rational> poly(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      poly[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return from_poly(m, std::move(poly));
}

CycNumber CycNumber::scaled(const Rational& c) const {
  CycNumber out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

bool CycNumber::operator==(const CycNumber& rhs) const {
  const unsigned m = lcm_u(order_, rhs.order_);
  return lifted(m).coeffs_ == rhs.lifted(m).coeffs_;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i];
    if (i > 0) os << "*w^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace locc
