#include <doctest.h>

#include <random>

#include "locc/witness.hpp"

using namespace locc;

namespace {

Vector random_vec(std::mt19937_64& rng, unsigned n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (unsigned i = 0; i < n; ++i) v(i) = std::complex<double>(gauss(rng), gauss(rng));
  return v;
}

}  // namespace

TEST_CASE("build_witness invariants") {
  for (unsigned d = 2; d <= 6; ++d) {
    const auto w = build_witness(d);
    const unsigned p = w.params.p, q = w.params.q;

    CHECK(w.P_q.rows() == q * q);
    CHECK((w.P_q * w.P_q - w.P_q).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(w.P_q.trace().real() - q) < 1e-12);

    // A_2p = (I - V)/(2p): spectrum {0, 1/p}, trace (2p-1)
    const unsigned n = 2 * p;
    CHECK(w.A_2p.rows() == n * n);
    const auto eig = hermitian_eigen(w.A_2p);
    for (int i = 0; i < eig.values.size(); ++i) {
      const double v = eig.values(i);
      CHECK((std::abs(v) < 1e-12 || std::abs(v - 1.0 / p) < 1e-12));
    }
    CHECK(w.A_2p.trace().real() == doctest::Approx(n - 1.0).epsilon(1e-12));

    CHECK((w.V_2p * w.V_2p - Matrix::Identity(n * n, n * n)).cwiseAbs().maxCoeff() < 1e-12);

    CHECK(w.L_family.size() == 2 * p - 1 + w.params.sigma);
    for (const auto& L : w.L_family) {
      CHECK(is_unitary(L, 1e-12));
      CHECK((L.transpose() + L).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK(w.H_family.size() == w.L_family.size());

    CHECK(w.trace_H_2d == doctest::Approx(2.0 * d - q).epsilon(1e-12));
  }
  CHECK_THROWS_AS(build_witness(1), std::invalid_argument);
}

TEST_CASE("product_value") {
  std::mt19937_64 rng(4242);
  for (unsigned p : {2u, 3u}) {
    const auto w = build_witness(p);  // d = p, q = 1
    const Matrix& L = w.L_family[0];
    const unsigned n = 2 * p;

    SUBCASE("x = y gives zero") {
      for (int trial = 0; trial < 50; ++trial) {
        Vector x = random_vec(rng, n);
        x.normalize();
        const auto v = product_value(x, x, L);
        CHECK(std::abs(v.value()) < 1e-10);
        CHECK(v.disagreement() < 1e-10);
      }
    }

    SUBCASE("orthogonal pair with vanishing L-overlap gives one") {
      Vector x = Vector::Zero(n), y = Vector::Zero(n);
      // pick basis vectors with L x* orthogonal to y as well
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
          if (i == j) continue;
          x.setZero();
          y.setZero();
          x(i) = 1.0;
          y(j) = 1.0;
          const double lov = std::abs((x.adjoint() * L * y.conjugate())(0, 0));
          const auto v = product_value(x, y, L);
          CHECK(v.value() == doctest::Approx(1.0 - lov * lov).epsilon(1e-10));
        }
      }
    }

    SUBCASE("random samples are nonnegative and two-sided") {
      double min_val = 1e9;
      for (int trial = 0; trial < 10000; ++trial) {
        Vector x = random_vec(rng, n), y = random_vec(rng, n);
        x.normalize();
        y.normalize();
        const auto v = product_value(x, y, L);
        CHECK(v.disagreement() < 1e-10);
        min_val = std::min(min_val, v.value());
      }
      CHECK(min_val >= -1e-12);
    }

    SUBCASE("unnormalized bilinear scaling") {
      const Vector x = random_vec(rng, n), y = random_vec(rng, n);
      const auto base = product_value(x, y, L);
      const auto scaled = product_value(2.0 * x, 3.0 * y, L);
      CHECK(scaled.value() == doctest::Approx(36.0 * base.value()).epsilon(1e-8));
      CHECK(scaled.disagreement() < 1e-8);
    }
  }
}

TEST_CASE("block_product_value") {
  std::mt19937_64 rng(515);
  for (unsigned d : {4u, 6u}) {
    const auto w = build_witness(d);
    const unsigned p = w.params.p, q = w.params.q, n = 2 * p;
    const Matrix& L = w.L_family[0];

    SUBCASE("q = 1 reduces to product_value") {
      const auto w3 = build_witness(3);
      const Vector x = random_vec(rng, 6), y = random_vec(rng, 6);
      const auto a = product_value(x, y, w3.L_family[0]);
      const auto b = block_product_value(x, y, w3.L_family[0], 1);
      // the block form carries the 1/(2p) normalization of the identity
      CHECK(a.value() == doctest::Approx(6.0 * b.value()).epsilon(1e-9));
    }

    SUBCASE("cross-block pairs contribute zero") {
      // z lives in block 0, w in block 1: P_q kills the cross term
      Vector z = Vector::Zero(q * n), ww = Vector::Zero(q * n);
      const Vector x = random_vec(rng, n), y = random_vec(rng, n);
      z.segment(0, n) = x;
      ww.segment(n, n) = y;
      const auto v = block_product_value(z, ww, L, q);
      CHECK(std::abs(v.value()) < 1e-10);
      CHECK(v.disagreement() < 1e-10);
    }

    SUBCASE("randomized two-sided agreement and nonnegativity") {
      double min_val = 1e9;
      for (int trial = 0; trial < 2000; ++trial) {
        Vector z = random_vec(rng, q * n), ww = random_vec(rng, q * n);
        z.normalize();
        ww.normalize();
        const auto v = block_product_value(z, ww, L, q);
        CHECK(v.disagreement() < 1e-9);
        min_val = std::min(min_val, v.value());
      }
      CHECK(min_val >= -1e-12);
    }
  }
}

TEST_CASE("dominance") {
  for (unsigned d : {2u, 3u}) CHECK(dominance_check(d) >= -1e-10);
}

TEST_CASE("contradiction ledger") {
  for (unsigned d : {2u, 3u, 4u}) {
    const auto led = contradiction_ledger(d);
    CHECK(led.consistent);
    CHECK(led.trace_H_2d == doctest::Approx(2.0 * d - factorization_params(d).q));
    CHECK(led.xi_size == factorization_params(d).k_sigma);
    CHECK(led.xi_size_full - led.xi_size ==
          (factorization_params(d).q - 1) * factorization_params(d).sigma);
  }
}

TEST_CASE("rank obstruction") {
  const auto t3 = rank_obstruction(3);
  CHECK(t3.contradiction);
  CHECK(t3.contradiction_index == 2);

  const auto t5 = rank_obstruction(5);
  CHECK(t5.contradiction);
  CHECK(t5.contradiction_index == 6);

  CHECK(rank_obstruction(7).contradiction_index == 12);

  for (unsigned p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    const auto t = rank_obstruction(p);
    CHECK(t.contradiction);
    CHECK(t.contradiction_index == (static_cast<unsigned long long>(p) * p - 1) / 4);
    CHECK(t.first_collision_step <= t.contradiction_index);
    // 4*j_p = -1 (mod p)
    CHECK((4 * t.contradiction_index) % p == p - 1);
  }

  CHECK_THROWS_AS(rank_obstruction(2), std::invalid_argument);
  CHECK_THROWS_AS(rank_obstruction(9), std::invalid_argument);
}

TEST_CASE("rank-2 falsifier") {
  const auto rep = rank2_falsifier(3, 200, 20240901);
  CHECK(rep.samples == 200);
  CHECK_FALSE(rep.feasible_found);

  // reproducibility
  const auto rep2 = rank2_falsifier(3, 200, 20240901);
  CHECK(rep2.min_residual == rep.min_residual);
  CHECK(rep2.collapsed == rep.collapsed);

  const auto other = rank2_falsifier(3, 50, 7);
  CHECK_FALSE(other.feasible_found);
}
