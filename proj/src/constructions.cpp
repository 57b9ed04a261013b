#include "locc/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace locc {

namespace {

Vector basis_ket(unsigned d, unsigned n) {
  Vector v = Vector::Zero(d);
  v(n) = 1.0;
  return v;
}

// |delta_n> = (|n> - |0>)/sqrt(2)
Vector delta_ket(unsigned d, unsigned n) {
  Vector v = Vector::Zero(d);
  v(n) = 1.0 / std::sqrt(2.0);
  v(0) = -1.0 / std::sqrt(2.0);
  return v;
}

Vector theta0_ket(unsigned d) {
  return Vector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
}

unsigned wrap_plus(unsigned n, unsigned d) { return n == d - 1 ? 1 : n + 1; }

}  // namespace

ProductStateSet theorem1_product_set(unsigned d) {
  if (d < 3) throw std::invalid_argument("theorem1_product_set: d must be >= 3");
  ProductStateSet set;
  set.dim = d;
  for (unsigned n = 1; n < d; ++n)
    set.pairs.emplace_back(basis_ket(d, n), delta_ket(d, n));
  for (unsigned n = 1; n < d; ++n)
    set.pairs.emplace_back(delta_ket(d, n), basis_ket(d, wrap_plus(n, d)));
  set.pairs.emplace_back(theta0_ket(d), theta0_ket(d));
  if (d >= 4) {
    for (unsigned n = 1; n < d; ++n) {
      const unsigned np = wrap_plus(n, d);
      const unsigned npp = wrap_plus(np, d);
      Vector a = Vector::Zero(d);
      a(0) += 1.0;
      a(n) += 1.0;
      a(npp) += -2.0;
      a.normalize();
      set.extension.emplace_back(a, basis_ket(d, np));
    }
  }
  return set;
}

Theorem2Family theorem2_family(unsigned d) {
  if (d < 3) throw std::invalid_argument("theorem2_family: d must be >= 3");
  Theorem2Family fam;
  fam.d = d;
  fam.k = d / 2 + 1;
  for (unsigned r = 0; r < fam.k; ++r) fam.mes_members.push_back(qudit_label(0, r, d));
  fam.weight_product = Rational(d, 4 * fam.k - d);
  fam.weight_mes = (Rational(1) - fam.weight_product) / fam.k;
  return fam;
}

MesSet gamma_d_set(unsigned d) {
  if (d < 4) throw std::invalid_argument("gamma_d_set: d must be >= 4");
  MesSet set;
  set.structure = qudit_structure(d);
  set.name = "gamma_d(" + std::to_string(d) + ")";
  for (unsigned t = 0; t + 2 < d; ++t) set.labels.push_back(qudit_label(0, t, d));
  const long long h = d / 2;
  set.labels.push_back(qudit_label(h, 0, d));
  set.labels.push_back(qudit_label(-h, -1, d));
  return set;
}

MesSet gamma_e_set(unsigned d) {
  if (d < 4 || d % 2 != 0)
    throw std::invalid_argument("gamma_e_set: d must be even and >= 4");
  MesSet set;
  set.structure = qudit_structure(d);
  set.name = "gamma_e(" + std::to_string(d) + ")";
  for (unsigned t = 0; t + 1 < d; ++t) set.labels.push_back(qudit_label(0, t, d));
  set.labels.push_back(qudit_label(d / 2, 0, d));
  return set;
}

MesSet named_example(const std::string& name) {
  MesSet set;
  set.name = name;
  if (name == "quintuple5") {
    set.structure = qudit_structure(5);
    for (auto [s, t] : {std::pair{0, 0}, {1, 1}, {1, 2}, {3, 1}, {3, 2}})
      set.labels.push_back(qudit_label(s, t, 5));
  } else if (name == "quadrupleBGK") {
    set.structure = qudit_structure(4);
    for (auto [s, t] : {std::pair{0, 0}, {1, 1}, {1, 3}, {2, 3}})
      set.labels.push_back(qudit_label(s, t, 4));
  } else if (name == "pauliL4") {
    set.structure = qubits_structure(2);
    // {II, XX, YX, ZX}; Y is XZ up to phase.
    set.labels.push_back(make_label(set.structure, {{0, 0}, {0, 0}}));
    set.labels.push_back(make_label(set.structure, {{1, 0}, {1, 0}}));
    set.labels.push_back(make_label(set.structure, {{1, 1}, {1, 0}}));
    set.labels.push_back(make_label(set.structure, {{0, 1}, {1, 0}}));
  } else {
    throw std::invalid_argument("named_example: unknown name '" + name + "'");
  }
  return set;
}

FactorizationParams factorization_params(unsigned d) {
  if (d < 2) throw std::invalid_argument("factorization_params: d must be >= 2");
  unsigned p = d;
  for (unsigned f = 2; f * f <= d; ++f)
    if (d % f == 0) {
      p = f;
      break;
    }
  FactorizationParams out;
  out.p = p;
  out.q = d / p;
  out.sigma = d % 2 == 0 ? 1 : 0;
  out.k_sigma = 2 * d - out.q + out.sigma;
  return out;
}

Matrix build_L_V(const Matrix& V) {
  if (!is_unitary(V, 1e-10)) throw std::invalid_argument("build_L_V: V must be unitary");
  const Eigen::Index p = V.rows();
  Matrix L = Matrix::Zero(2 * p, 2 * p);
  L.block(0, p, p, p) = V;
  L.block(p, 0, p, p) = -V.transpose();
  return L;
}

std::vector<Matrix> lp_sigma_family(unsigned p, unsigned sigma) {
  std::vector<Matrix> fam;
  for (unsigned a = 0; a + 1 < p + sigma; ++a) fam.push_back(clock_matrix(p, a));
  const Matrix X = shift_matrix(p);
  for (unsigned a = 0; a < p; ++a) fam.push_back(X * clock_matrix(p, a));
  return fam;
}

XiConstruction xi_set(unsigned d, XiVariant variant) {
  if (d < 2) throw std::invalid_argument("xi_set: d must be >= 2");
  XiConstruction xi;
  xi.d = d;
  xi.params = factorization_params(d);
  xi.variant = variant;
  const unsigned p = xi.params.p, q = xi.params.q, sigma = xi.params.sigma;
  xi.members.structure = qudit_structure(2 * d);
  xi.members.name = "xi(" + std::to_string(2 * d) + ")";
  const unsigned base_sigma = variant == XiVariant::FullProduct ? sigma : 0;
  const auto family = lp_sigma_family(p, base_sigma);
  const Matrix Iq = Matrix::Identity(q, q);
  for (unsigned n = 0; n < q; ++n) {
    const Matrix Zqn = q == 1 ? Iq : clock_matrix(q, n);
    for (const auto& V : family)
      xi.members.matrices.push_back(tensor(build_L_V(V), Zqn));
  }
  if (variant == XiVariant::ExtraOnce && sigma == 1)
    xi.members.matrices.push_back(tensor(build_L_V(clock_matrix(p, p - 1)), Iq));
  return xi;
}

std::vector<KminRow> kmin_table(unsigned max_dim) {
  if (max_dim < 4) throw std::invalid_argument("kmin_table: max_dim must be >= 4");
  auto is_prime = [](unsigned n) {
    if (n < 2) return false;
    for (unsigned f = 2; f * f <= n; ++f)
      if (n % f == 0) return false;
    return true;
  };
  std::vector<KminRow> rows;
  for (unsigned D = 4; D <= max_dim; ++D) {
    KminRow row;
    row.dim = D;
    if (D == 4 || is_prime(D)) {
      row.kmin = D;
      row.rule = "4 or p>=5 (prime)";
      row.theorem = "Theorem 3";
    } else if (D % 2 != 0) {
      row.kmin = D;
      row.rule = "odd composite";
      row.theorem = "Theorem 3";
    } else {
      const auto f = factorization_params(D / 2);
      row.kmin = f.k_sigma;
      row.theorem = "Theorem 4";
      if (is_prime(D / 2)) {
        row.rule = "2p (p>=3 prime)";
        if (row.kmin != D - 1) throw std::logic_error("kmin_table: 2p row mismatch");
      } else if (D % 4 == 0) {
        row.rule = "4m (m>=2)";
        if (row.kmin != 3 * D / 4 + 1) throw std::logic_error("kmin_table: 4m row mismatch");
      } else if (D % 6 == 0 && (D / 6) % 2 == 1) {
        row.rule = "6m (m odd)";
        if (row.kmin != 5 * D / 6) throw std::logic_error("kmin_table: 6m row mismatch");
      } else {
        row.rule = "2pq (p>=5 prime, q>=p odd)";
        const unsigned pp = factorization_params(D / 2).p;
        if (row.kmin != (2 * pp - 1) * D / (2 * pp))
          throw std::logic_error("kmin_table: 2pq row mismatch");
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace locc
