#include "locc/witness.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace locc {

namespace {

Matrix swap_operator(unsigned n) {
  Matrix V = Matrix::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) V(j * n + i, i * n + j) = 1.0;
  return V;
}

Matrix mes_density(const Matrix& U) {
  const Vector psi = mes_vector(U);
  return psi * psi.adjoint();
}

}  // namespace

WitnessOperators build_witness(unsigned d) {
  if (d < 2) throw std::invalid_argument("build_witness: d must be >= 2");
  WitnessOperators wit;
  wit.d = d;
  wit.params = factorization_params(d);
  const unsigned p = wit.params.p, q = wit.params.q;

  wit.P_q = Matrix::Zero(static_cast<Eigen::Index>(q) * q, static_cast<Eigen::Index>(q) * q);
  for (unsigned n = 0; n < q; ++n) wit.P_q(n * q + n, n * q + n) = 1.0;

  const unsigned two_p = 2 * p;
  wit.V_2p = swap_operator(two_p);
  wit.A_2p = (Matrix::Identity(wit.V_2p.rows(), wit.V_2p.cols()) - wit.V_2p) /
             static_cast<double>(two_p);

  for (const auto& V : lp_sigma_family(p, wit.params.sigma)) {
    Matrix L = build_L_V(V);
    wit.H_family.push_back(wit.A_2p - mes_density(L));
    wit.L_family.push_back(std::move(L));
  }
  wit.trace_H_2d = wit.P_q.trace().real() * wit.A_2p.trace().real();

  // Build-time self checks.
  if ((wit.P_q * wit.P_q - wit.P_q).cwiseAbs().maxCoeff() > 1e-12)
    throw std::logic_error("build_witness: P_q is not a projector");
  const auto eig = hermitian_eigen(wit.A_2p);
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double v = eig.values(i);
    if (std::min(std::abs(v), std::abs(v - 1.0 / p)) > 1e-12)
      throw std::logic_error("build_witness: A_2p spectrum not {0, 1/p}");
  }
  if (std::abs(wit.trace_H_2d - (2.0 * d - q)) > 1e-9)
    throw std::logic_error("build_witness: Tr H_2d != 2d - q");
  for (const auto& L : wit.L_family)
    if ((L.transpose() + L).cwiseAbs().maxCoeff() > 1e-12)
      throw std::logic_error("build_witness: L_V not antisymmetric");
  return wit;
}

TwoSidedValue product_value(const Vector& x, const Vector& y, const Matrix& L_V) {
  const Eigen::Index two_p = L_V.rows();
  if (x.size() != two_p || y.size() != two_p)
    throw std::invalid_argument("product_value: dimension mismatch");
  const Matrix A = (Matrix::Identity(two_p * two_p, two_p * two_p) - swap_operator(two_p)) /
                   static_cast<double>(two_p);
  const Matrix H = A - mes_density(L_V);
  const Vector xy = tensor_vec(x, y);
  TwoSidedValue out;
  out.trace_side = static_cast<double>(two_p) * (xy.adjoint() * H * xy)(0, 0).real();
  const double nx = x.squaredNorm(), ny = y.squaredNorm();
  const std::complex<double> inner = x.dot(y);
  const std::complex<double> cross = (x.adjoint() * L_V * y.conjugate())(0, 0);
  out.formula_side = nx * ny - std::norm(inner) - std::norm(cross);
  return out;
}

TwoSidedValue block_product_value(const Vector& z, const Vector& w, const Matrix& L_V,
                                  unsigned q) {
  const Eigen::Index two_p = L_V.rows();
  if (z.size() != static_cast<Eigen::Index>(q) * two_p || w.size() != z.size())
    throw std::invalid_argument("block_product_value: dimension mismatch");
  const unsigned p = static_cast<unsigned>(two_p / 2);
  Matrix P_q = Matrix::Zero(static_cast<Eigen::Index>(q) * q, static_cast<Eigen::Index>(q) * q);
  for (unsigned n = 0; n < q; ++n) P_q(n * q + n, n * q + n) = 1.0;
  const Matrix A = (Matrix::Identity(two_p * two_p, two_p * two_p) - swap_operator(p * 2)) /
                   static_cast<double>(two_p);
  const Matrix H = A - mes_density(L_V);
  // P_q acts on the q factors of A and B, H on the 2p factors; reorder to the
  // local layout q (x) 2p on each side.
  const std::vector<unsigned> dims = {q, q, static_cast<unsigned>(two_p),
                                      static_cast<unsigned>(two_p)};
  const Matrix op = permute_systems(tensor(P_q, H), dims, {0, 2, 1, 3});
  const Vector zw = tensor_vec(z, w);
  TwoSidedValue out;
  out.trace_side = (zw.adjoint() * op * zw)(0, 0).real();
  double acc = 0.0;
  for (unsigned n = 0; n < q; ++n) {
    const Vector xn = z.segment(n * two_p, two_p);
    const Vector yn = w.segment(n * two_p, two_p);
    acc += product_value(xn, yn, L_V).formula_side / static_cast<double>(two_p);
  }
  out.formula_side = acc;
  return out;
}

double dominance_check(unsigned d) {
  const auto wit = build_witness(d);
  const unsigned p = wit.params.p, q = wit.params.q;
  const unsigned two_p = 2 * p;
  const Matrix Iq = Matrix::Identity(q, q);
  const std::vector<unsigned> dims = {two_p, two_p, q, q};

  // Same member enumeration as xi_set(d, ExtraOnce).
  std::vector<std::pair<Matrix, Matrix>> members;  // (L_V, Z_q^n)
  const auto base = lp_sigma_family(p, 0);
  for (unsigned n = 0; n < q; ++n) {
    const Matrix Zqn = q == 1 ? Iq : clock_matrix(q, n);
    for (const auto& V : base) members.emplace_back(build_L_V(V), Zqn);
  }
  if (wit.params.sigma == 1)
    members.emplace_back(build_L_V(clock_matrix(p, p - 1)), Iq);

  double min_eig = 0.0;
  for (const auto& [L, Zqn] : members) {
    const Matrix dom = permute_systems(tensor(mes_density(L), wit.P_q), dims, {0, 2, 1, 3});
    const Matrix psi = mes_density(tensor(L, Zqn));
    min_eig = std::min(min_eig, smallest_eigenvalue(dom - psi));
  }
  return min_eig;
}

ContradictionLedger contradiction_ledger(unsigned d) {
  ContradictionLedger led;
  led.d = d;
  const auto params = factorization_params(d);
  led.sigma = params.sigma;
  led.xi_size = static_cast<unsigned>(xi_set(d, XiVariant::ExtraOnce).members.size());
  led.xi_size_full = params.q * (2 * params.p - 1 + params.sigma);
  led.trace_H_2d = build_witness(d).trace_H_2d;
  led.consistent = led.xi_size == params.k_sigma &&
                   std::abs(led.trace_H_2d - (2.0 * d - params.q)) < 1e-9 &&
                   params.k_sigma - static_cast<unsigned>(std::lround(led.trace_H_2d)) ==
                       params.sigma;
  return led;
}

RankObstructionTrace rank_obstruction(unsigned p) {
  auto is_prime = [](unsigned n) {
    if (n < 2) return false;
    for (unsigned f = 2; f * f <= n; ++f)
      if (n % f == 0) return false;
    return true;
  };
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("rank_obstruction: p must be an odd prime >= 3");

  RankObstructionTrace trace;
  trace.p = p;
  trace.contradiction_index =
      (static_cast<unsigned long long>(p) * p - 1) / 4;

  // Hermiticity closes each fact under offset negation.
  std::set<unsigned> modulus = {0};                // |R_{a,a+o}|^2 = r
  std::set<unsigned> zero = {1 % p, (p - 1) % p};  // R_{a,a+o} = 0
  auto collide = [&] {
    for (unsigned o : modulus)
      if (zero.count(o)) return static_cast<int>(o);
    return -1;
  };
  for (unsigned j = 1; j <= p; ++j) {
    // Vanishing 3x3 minors {a, a+j, a+j+1} and {a, a+j+1, a+j+2} force the
    // next modulus and zero facts.
    const unsigned mod_off = (2 * p - (2 * j) % p) % p;  // -2j
    const unsigned zero_off = (2 * j + 1) % p;
    modulus.insert(mod_off);
    modulus.insert((p - mod_off) % p);
    zero.insert(zero_off);
    zero.insert((p - zero_off) % p);
    if (!trace.contradiction) {
      const int c = collide();
      if (c >= 0) {
        trace.contradiction = true;
        trace.first_collision_step = j;
        trace.colliding_offset = static_cast<unsigned>(c);
      }
    }
  }
  trace.modulus_offsets.assign(modulus.begin(), modulus.end());
  trace.zero_offsets.assign(zero.begin(), zero.end());
  if (!trace.contradiction)
    throw std::logic_error("rank_obstruction: induction failed to close");
  if ((4 * (trace.contradiction_index % p) + 1) % p != 0)
    throw std::logic_error("rank_obstruction: 4*j_p != -1 (mod p)");
  return trace;
}

FalsifierReport rank2_falsifier(unsigned p, unsigned samples, std::uint64_t seed) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("rank2_falsifier: p must be an odd prime");
  FalsifierReport rep;
  rep.p = p;
  rep.samples = samples;
  rep.seed = seed;
  rep.min_residual = std::numeric_limits<double>::infinity();

  // Constraint operators: L_p^0 \ {I}.
  std::vector<Matrix> ops;
  for (unsigned a = 1; a + 1 < p; ++a) ops.push_back(clock_matrix(p, a));
  const Matrix X = shift_matrix(p);
  for (unsigned a = 0; a < p; ++a) ops.push_back(X * clock_matrix(p, a));
  std::vector<Matrix> functionals;
  for (const auto& V : ops) {
    const Matrix re = (V + V.adjoint()) / 2.0;
    const Matrix im = (V - V.adjoint()) / std::complex<double>(0.0, 2.0);
    if (re.cwiseAbs().maxCoeff() > 1e-12) functionals.push_back(re);
    if (im.cwiseAbs().maxCoeff() > 1e-12) functionals.push_back(im);
  }
  // Projector onto the real solution subspace of the linear constraints.
  const auto null_basis = nullspace_real(functionals, p);
  Eigen::MatrixXd N(static_cast<Eigen::Index>(p) * p,
                    static_cast<Eigen::Index>(null_basis.size()));
  for (std::size_t i = 0; i < null_basis.size(); ++i)
    N.col(static_cast<Eigen::Index>(i)) = herm_to_vec(null_basis[i]);
  const Eigen::MatrixXd proj = N * N.transpose();

  auto residual_of = [&](const Matrix& R) {
    double worst = 0.0;
    for (const auto& V : ops) worst = std::max(worst, std::abs((R * V).trace()));
    return worst;
  };

  constexpr unsigned kIters = 200;
  for (unsigned s = 0; s < samples; ++s) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (s + 1));
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_vec = [&] {
      Vector v(p);
      for (unsigned i = 0; i < p; ++i) v(i) = std::complex<double>(gauss(rng), gauss(rng));
      return v;
    };
    const Vector x = random_vec(), y = random_vec();
    Matrix R = x * x.adjoint() + y * y.adjoint();
    R /= R.trace().real();

    bool collapsed = false;
    for (unsigned it = 0; it < kIters; ++it) {
      // Project onto the constraint subspace.
      R = vec_to_herm(proj * herm_to_vec(R), p);
      // Project onto rank-<=2 PSD, then renormalize the trace.
      const auto eig = hermitian_eigen(R, 1e-6);
      Matrix R2 = Matrix::Zero(p, p);
      double tr = 0.0;
      const Eigen::Index n = eig.values.size();
      for (Eigen::Index i = n - 1; i >= std::max<Eigen::Index>(0, n - 2); --i) {
        if (eig.values(i) <= 0) break;
        R2 += eig.values(i) * (eig.vectors.col(i) * eig.vectors.col(i).adjoint());
        tr += eig.values(i);
      }
      if (tr < 1e-3) {
        collapsed = true;
        break;
      }
      R = R2 / tr;
    }
    if (collapsed) {
      ++rep.collapsed;
      continue;
    }
    const double res = residual_of(R);
    rep.min_residual = std::min(rep.min_residual, res);
    if (res < 1e-6 && R.trace().real() > 1e-3) rep.feasible_found = true;
  }
  return rep;
}

}  // namespace locc
