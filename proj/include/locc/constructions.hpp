#pragma once

#include <string>
#include <vector>

#include "locc/cyclotomic.hpp"
#include "locc/linalg.hpp"
#include "locc/weyl.hpp"

namespace locc {

/// Orthogonal bipartite product states |a_r> (x) |b_r>.
struct ProductStateSet {
  unsigned dim = 0;
  std::vector<std::pair<Vector, Vector>> pairs;
  std::vector<std::pair<Vector, Vector>> extension;
};

/// The 2d-1 product states {|n>|delta_n>, |delta_n>|n_+>, |theta_0>|theta_0>},
/// plus the d-1 orthogonal extension states when d >= 4.
ProductStateSet theorem1_product_set(unsigned d);

/// floor(d/2)+1 powers of Z plus the product state |1>|0>, with the exact
/// weights a (each MES) and b (product state), k*a + b = 1, b = d/(4k-d).
struct Theorem2Family {
  unsigned d = 0;
  unsigned k = 0;
  std::vector<WeylLabel> mes_members;  // {I, Z, ..., Z^{floor(d/2)}}
  Rational weight_mes;                 // a
  Rational weight_product;             // b
};

Theorem2Family theorem2_family(unsigned d);

/// Gamma_d = {I, Z, ..., Z^{d-3}, X^{floor(d/2)}, X^{-floor(d/2)} Z^{-1}}, d >= 4.
MesSet gamma_d_set(unsigned d);
/// Gamma_e = {I, Z, ..., Z^{d-2}, X^{d/2}}, even d >= 4.
MesSet gamma_e_set(unsigned d);

/// Named sets: "quintuple5", "quadrupleBGK", "pauliL4".
MesSet named_example(const std::string& name);

struct FactorizationParams {
  unsigned p = 0;        // smallest prime factor of d
  unsigned q = 0;        // largest proper divisor, d = p*q
  unsigned sigma = 0;    // 1 if d even else 0
  unsigned k_sigma = 0;  // 2d - q + sigma
};

FactorizationParams factorization_params(unsigned d);

/// L_V = |0><1| (x) V - |1><0| (x) V^T; unitary and antisymmetric for unitary V.
Matrix build_L_V(const Matrix& V);

/// The generating qudit unitaries {Z_p^a}_{a=0..p-2+sigma} u {X_p Z_p^a}_{a in Z_p}.
std::vector<Matrix> lp_sigma_family(unsigned p, unsigned sigma);

enum class XiVariant { ExtraOnce, FullProduct };

struct XiConstruction {
  unsigned d = 0;
  FactorizationParams params;
  XiVariant variant = XiVariant::ExtraOnce;
  /// Matrix-backed members in local dimension 2d, subsystem order qubit (x) p (x) q.
  MesSet members;
};

XiConstruction xi_set(unsigned d, XiVariant variant = XiVariant::ExtraOnce);

struct KminRow {
  unsigned dim = 0;       // local dimension D
  unsigned kmin = 0;      // smallest certified set size
  std::string rule;       // which classification row applies
  std::string theorem;    // generating theorem
};

std::vector<KminRow> kmin_table(unsigned max_dim);

}  // namespace locc
