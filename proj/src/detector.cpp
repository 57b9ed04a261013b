#include "locc/detector.hpp"

#include <cmath>
#include <stdexcept>

namespace locc {

double DetectorState::lambda1() const { return largest_eigenvalue(t_matrix * t_matrix.adjoint()); }

double DetectorState::trace_norm_sq() const {
  return (t_matrix * t_matrix.adjoint()).trace().real();
}

DetectorState build_detector_theorem2(unsigned d) {
  if (d < 3) throw std::invalid_argument("build_detector_theorem2: d must be >= 3");
  const auto fam = theorem2_family(d);
  const double a = fam.weight_mes.convert_to<double>();
  const double b = fam.weight_product.convert_to<double>();
  DetectorState det;
  det.d = d;
  det.d_aux = d;
  Matrix T = Matrix::Zero(d * d, d * d);
  const double sqrt_a = std::sqrt(a);
  for (unsigned r = 0; r < fam.k; ++r) {
    T += (sqrt_a / d) * tensor(clock_matrix(d, r), clock_matrix(d, -static_cast<long long>(r)));
    det.weights.push_back(a);
  }
  Matrix e10 = Matrix::Zero(d, d);
  e10(1, 0) = 1.0;
  T += std::sqrt(b / d) * tensor(e10, shift_matrix(d));
  det.weights.push_back(b);
  det.t_matrix = std::move(T);
  return det;
}

double theorem2_analytic_bound(unsigned d) {
  const double k = static_cast<double>(d / 2 + 1);
  const double dd = static_cast<double>(d);
  return 1.0 / dd + (2 * k - dd) * (2 * k - dd) / (dd * dd * (4 * k - dd));
}

TildeMBlock tilde_m_2x2(unsigned d) {
  if (d < 3) throw std::invalid_argument("tilde_m_2x2: d must be >= 3");
  const auto fam = theorem2_family(d);
  const double a = fam.weight_mes.convert_to<double>();
  const double b = fam.weight_product.convert_to<double>();
  const double k = static_cast<double>(fam.k);
  const double dd = static_cast<double>(d);
  TildeMBlock out;
  out.block = Matrix::Zero(2, 2);
  out.block(0, 0) = a * k * k;
  out.block(0, 1) = out.block(1, 0) = k * std::sqrt(dd * a * b);
  out.block(1, 1) = a * k * k + dd * b;
  out.block /= dd * dd;
  // Closed-form largest eigenvalue of a 2x2 symmetric matrix.
  const double tr = out.block(0, 0).real() + out.block(1, 1).real();
  const double det =
      (out.block(0, 0) * out.block(1, 1) - out.block(0, 1) * out.block(1, 0)).real();
  out.lambda1 = tr / 2 + std::sqrt(tr * tr / 4 - det);
  return out;
}

bool nielsen_transfer_possible(double lambda1, unsigned d) {
  if (lambda1 <= 0.0 || lambda1 > 1.0 + 1e-12)
    throw std::invalid_argument("nielsen_transfer_possible: lambda1 out of range");
  return lambda1 <= 1.0 / static_cast<double>(d) + 1e-12;
}

double general_detector_lambda1(const MesSet& set, const std::vector<double>& weights,
                                const std::vector<WeylLabel>& aux_labels,
                                const WeylStructure& aux_structure) {
  const unsigned d = set.structure.total_dim();
  const unsigned d_aux = aux_structure.total_dim();
  if (set.size() != d)
    throw std::invalid_argument("general_detector_lambda1: need exactly d members");
  if (weights.size() != set.size() || aux_labels.size() != set.size())
    throw std::invalid_argument("general_detector_lambda1: weight/label count mismatch");
  double wsum = 0.0;
  for (double w : weights) {
    if (w < 0) throw std::invalid_argument("general_detector_lambda1: negative weight");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-9)
    throw std::invalid_argument("general_detector_lambda1: weights must sum to 1");
  if (!set.label_backed())
    throw std::invalid_argument("general_detector_lambda1: requires a label-backed set");
  Matrix T = Matrix::Zero(d * d_aux, d * d_aux);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d) * d_aux);
  for (std::size_t i = 0; i < set.labels.size(); ++i) {
    const Matrix L = build_unitary(set.structure, set.labels[i]);
    const Matrix Lp = build_unitary(aux_structure, aux_labels[i]);
    T += std::sqrt(weights[i]) * norm * tensor(L, Lp);
  }
  return largest_eigenvalue(T * T.adjoint());
}

Matrix twirl(const Matrix& M, const MesSet& set) {
  if (!set.label_backed()) throw std::invalid_argument("twirl: requires a label-backed set");
  const double tr = M.trace().real();
  if (!(tr > 0)) throw std::invalid_argument("twirl: M must be PSD and nonzero");
  const Matrix Mp = M / tr;
  Matrix out = Matrix::Zero(M.rows(), M.cols());
  for (const auto& label : set.labels) {
    const Matrix L = build_unitary(set.structure, label);
    out += L.adjoint() * Mp * L;
  }
  return out;
}

AsymmetricBoundResult asymmetric_bound(const Matrix& M, const MesSet& set) {
  if (!set.label_backed())
    throw std::invalid_argument("asymmetric_bound: requires a label-backed set");
  const unsigned d = set.structure.total_dim();
  if (set.size() != d) throw std::invalid_argument("asymmetric_bound: need exactly d members");
  const double tr = M.trace().real();
  if (!(tr > 0)) throw std::invalid_argument("asymmetric_bound: M must be PSD and nonzero");

  const Matrix M_set = twirl(M, set);
  const Matrix dev = M_set - Matrix::Identity(d, d);
  AsymmetricBoundResult out;
  out.twirl_deviation = (dev * dev).trace().real();
  out.bound = 1.0 / d + out.twirl_deviation / (static_cast<double>(d) * d);

  // Detector T_AC = sum_L (sqrt(M') L) (x) L^* / d with M' = M / Tr M.
  const Matrix sqrtMp = psd_sqrt(M / tr);
  Matrix T = Matrix::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
  for (const auto& label : set.labels) {
    const Matrix L = build_unitary(set.structure, label);
    T += tensor(sqrtMp * L, L.conjugate()) / static_cast<double>(d);
  }
  out.lambda1_numeric = largest_eigenvalue(T * T.adjoint());
  if (out.lambda1_numeric < out.bound - 1e-9)
    throw std::runtime_error("asymmetric_bound: internal consistency failure (lambda1 < bound)");
  return out;
}

}  // namespace locc
