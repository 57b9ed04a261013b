#pragma once

#include <vector>

#include "locc/constructions.hpp"
#include "locc/linalg.hpp"
#include "locc/weyl.hpp"

namespace locc {

/// Four-party detector state encoded by its T_AC operator; the largest
/// eigenvalue of T T^dag is the largest Schmidt coefficient across AC:BD.
struct DetectorState {
  Matrix t_matrix;            // d*d_aux square
  unsigned d = 0;             // primary dimension
  unsigned d_aux = 0;         // auxiliary dimension
  std::vector<double> weights;

  double lambda1() const;
  double trace_norm_sq() const;  // Tr(T T^dag), 1 for a normalized detector
};

/// Detector for the floor(d/2)+1 clock MES plus the product state |1>|0>.
DetectorState build_detector_theorem2(unsigned d);

/// 1/d + (2k-d)^2 / (d^2 (4k-d)) with k = floor(d/2)+1.
double theorem2_analytic_bound(unsigned d);

struct TildeMBlock {
  Matrix block;     // 2x2 restriction of M_AC to span{|0,0>, |1,1>}
  double lambda1 = 0.0;
};

TildeMBlock tilde_m_2x2(unsigned d);

/// Nielsen majorization threshold for transferring the detector into a MES.
bool nielsen_transfer_possible(double lambda1, unsigned d);

/// lambda1 of the most general detector T = sum_L sqrt(p_L) L (x) L' / sqrt(d d').
double general_detector_lambda1(const MesSet& set, const std::vector<double>& weights,
                                const std::vector<WeylLabel>& aux_labels,
                                const WeylStructure& aux_structure);

/// sum_L L^dag (M / Tr M) L over a label-backed set.
Matrix twirl(const Matrix& M, const MesSet& set);

struct AsymmetricBoundResult {
  double bound = 0.0;            // 1/d + Tr(M_set - I)^2 / d^2
  double lambda1_numeric = 0.0;  // from the explicit detector
  double twirl_deviation = 0.0;  // Tr(M_set - I)^2
};

/// Lower bound on the detector Schmidt coefficient induced by a first
/// measurement operator M against a label-backed MES set.
AsymmetricBoundResult asymmetric_bound(const Matrix& M, const MesSet& set);

}  // namespace locc
