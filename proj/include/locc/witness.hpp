#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "locc/constructions.hpp"
#include "locc/linalg.hpp"

namespace locc {

/// The operator family behind the separable-measurement obstruction:
/// P_q (diagonal projector on q (x) q), A_2p (scaled antisymmetric projector),
/// H_{L_V} = A_2p - psi_{L_V}, and H_2d = P_q (x) A_2p.
struct WitnessOperators {
  unsigned d = 0;
  FactorizationParams params;
  Matrix P_q;                    // q^2 x q^2 projector
  Matrix A_2p;                   // (2p)^2 x (2p)^2, eigenvalues in {0, 1/p}
  Matrix V_2p;                   // swap on 2p (x) 2p
  std::vector<Matrix> L_family;  // L_V for V in L_p^sigma
  std::vector<Matrix> H_family;  // H_{L_V} = A_2p - psi_{L_V}
  double trace_H_2d = 0.0;       // = 2d - q
};

WitnessOperators build_witness(unsigned d);

struct TwoSidedValue {
  double trace_side = 0.0;    // scaled operator trace
  double formula_side = 0.0;  // scalar identity
  double value() const { return formula_side; }
  double disagreement() const { return std::abs(trace_side - formula_side); }
};

/// 2p Tr[(x (x) y) H_{L_V}] against 1 - |<x|y>|^2 - |<x|L_V|y*>|^2,
/// for unnormalized x, y with the bilinear generalization of the identity.
TwoSidedValue product_value(const Vector& x, const Vector& y, const Matrix& L_V);

/// Tr[(z (x) w)(P_q (x) H_{L_V})] against the per-block sum of product_value,
/// for states on q (x) 2p.
TwoSidedValue block_product_value(const Vector& z, const Vector& w, const Matrix& L_V,
                                  unsigned q);

/// min over members U of the smallest eigenvalue of P_q (x) psi_{L_V} - psi_U.
double dominance_check(unsigned d);

struct ContradictionLedger {
  unsigned d = 0;
  unsigned xi_size = 0;        // |Xi| for the ExtraOnce reading
  unsigned xi_size_full = 0;   // cardinality of the full-product reading
  double trace_H_2d = 0.0;     // 2d - q
  unsigned sigma = 0;
  bool consistent = false;     // xi_size == k_sigma, Tr H = 2d-q, gap == sigma
};

ContradictionLedger contradiction_ledger(unsigned d);

/// Symbolic replay of the appendix induction on a hypothetical rank-<=2 PSD
/// operator orthogonal to L_p^0 \ {I}: offsets forced to modulus sqrt(r) and
/// offsets forced to zero collide, hence r = 0.
struct RankObstructionTrace {
  unsigned p = 0;
  unsigned long long contradiction_index = 0;  // j_p = (p^2-1)/4
  std::vector<unsigned> modulus_offsets;       // |R_{a,a+o}|^2 = r
  std::vector<unsigned> zero_offsets;          // R_{a,a+o} = 0
  unsigned colliding_offset = 0;
  unsigned first_collision_step = 0;
  bool contradiction = false;
};

RankObstructionTrace rank_obstruction(unsigned p);

/// Sampling complement of the symbolic proof: alternating projections from
/// random rank-<=2 PSD seeds; no sample should satisfy the constraints while
/// keeping its trace. Heuristic evidence, not a proof.
struct FalsifierReport {
  unsigned p = 0;
  unsigned samples = 0;
  std::uint64_t seed = 0;
  double min_residual = 0.0;   // over samples that kept their trace
  unsigned collapsed = 0;      // samples that fell toward the zero matrix
  bool feasible_found = false; // residual < 1e-6 with trace > 1e-3
};

FalsifierReport rank2_falsifier(unsigned p, unsigned samples, std::uint64_t seed);

}  // namespace locc
