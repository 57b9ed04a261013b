#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "locc/cyclotomic.hpp"

using namespace locc;

namespace {

// Independent oracle: Phi_d by recursive exact division of x^d - 1, done in
// plain double-free integer arithmetic over std::vector<long long>.
std::vector<long long> phi_oracle(unsigned d) {
  std::vector<long long> num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (unsigned k = 1; k < d; ++k) {
    if (d % k != 0) continue;
    const auto den = phi_oracle(k);
    std::vector<long long> rem = num;
    std::vector<long long> quot(rem.size() - den.size() + 1, 0);
    for (std::size_t i = rem.size(); i-- > den.size() - 1;) {
      const std::size_t kk = i - (den.size() - 1);
      if (kk >= quot.size()) continue;
      const long long c = rem[i] / den.back();
      quot[kk] = c;
      for (std::size_t j = 0; j < den.size(); ++j) rem[kk + j] -= c * den[j];
    }
    num = quot;
  }
  return num;
}

CycNumber random_cyc(std::mt19937_64& rng, unsigned d) {
  std::uniform_int_distribution<int> coeff(-10, 10);
  std::vector<Rational> poly(d);
  for (auto& c : poly) c = coeff(rng);
  return CycNumber::from_poly(d, std::move(poly));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);

  for (unsigned d : {2u, 3u, 5u, 8u, 12u, 24u}) CHECK(cyclotomic_polynomial(d) == phi_oracle(d));
}

TEST_CASE("cyclotomic product reconstructs x^d - 1") {
  for (unsigned d = 1; d <= 64; ++d) {
    std::vector<BigInt> prod = {1};
    for (unsigned k = 1; k <= d; ++k) {
      if (d % k != 0) continue;
      const auto phi = cyclotomic_polynomial(k);
      std::vector<BigInt> next(prod.size() + phi.size() - 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      prod = std::move(next);
    }
    REQUIRE(prod.size() == d + 1);
    CHECK(prod[0] == -1);
    CHECK(prod[d] == 1);
    for (unsigned i = 1; i < d; ++i) CHECK(prod[i] == 0);
  }
}

TEST_CASE("root powers") {
  CHECK(CycNumber::root_power(4, 2) == CycNumber(Rational(-1), 4));

  const auto sum3 = CycNumber::root_power(3, 0) + CycNumber::root_power(3, 1) +
                    CycNumber::root_power(3, 2);
  CHECK(sum3.is_zero());

  const auto w12 = CycNumber::root_power(12, 5);
  const auto expect = std::polar(1.0, 10.0 * M_PI / 12.0);
  CHECK(std::abs(w12.to_complex() - expect) < 1e-12);
}

TEST_CASE("ring operations") {
  const auto a = CycNumber::root_power(7, 3) + CycNumber(Rational(2), 7);
  CHECK(a + CycNumber() == a);

  CycNumber sum5;
  for (int k = 0; k < 5; ++k) sum5 = sum5 + CycNumber::root_power(5, k);
  CHECK(sum5.is_zero());

  const auto one = CycNumber(Rational(1), 4);
  const auto w = CycNumber::root_power(4, 1);
  CHECK((one + w) * (one - w) == CycNumber(Rational(2), 4));
}

TEST_CASE("zero testing") {
  CHECK(CycNumber().is_zero());
  CHECK((CycNumber(Rational(1), 4) + CycNumber::root_power(4, 2)).is_zero());
  CHECK_FALSE((CycNumber(Rational(1), 7) + CycNumber::root_power(7, 1)).is_zero());
}

TEST_CASE("complex embedding") {
  CHECK(std::abs(CycNumber().to_complex()) == 0.0);
  CHECK(std::abs(CycNumber::root_power(4, 1).to_complex() - std::complex<double>(0, 1)) <
        1e-15);
  const auto c = CycNumber::root_power(8, 1) + CycNumber::root_power(8, 7);
  CHECK(std::abs(c.to_complex() - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("embedding is a ring homomorphism (randomized)") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<unsigned> order(1, 24);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned d = order(rng);
    const auto a = random_cyc(rng, d), b = random_cyc(rng, d);
    CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
    CHECK(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9);
  }
}

TEST_CASE("zero iff embedding vanishes (randomized)") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<unsigned> order(1, 24);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned d = order(rng);
    const auto a = random_cyc(rng, d);
    if (a.is_zero())
      CHECK(std::abs(a.to_complex()) < 1e-9);
    else
      CHECK(std::abs(a.to_complex()) > 1e-9);
  }
}

TEST_CASE("mixed-order lifting") {
  const auto w3 = CycNumber::root_power(3, 1);
  const auto w4 = CycNumber::root_power(4, 1);
  const auto prod = w3 * w4;  // omega_12^7
  CHECK(prod == CycNumber::root_power(12, 7));
  CHECK(w3.lifted(12) == CycNumber::root_power(12, 4));
  CHECK_THROWS_AS(w3.lifted(8), std::invalid_argument);
}
