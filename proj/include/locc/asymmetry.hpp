#pragma once

#include <optional>
#include <vector>

#include "locc/constructions.hpp"
#include "locc/linalg.hpp"
#include "locc/weyl.hpp"

namespace locc {

enum class Party { Alice, Bob };

/// Solution space of Hermitian first-measurement operators that preserve all
/// pairwise orthogonalities of the set.
struct FirstMoveReport {
  Party party = Party::Alice;
  unsigned solution_dim = 0;
  std::vector<Matrix> basis;
  bool nontrivial_exists = false;
  std::optional<Matrix> witness;  // I + eps*H, PSD, non-scalar
  double witness_epsilon = 0.0;
};

/// Real linear functionals (as Hermitian matrices F, constraint Tr(F M) = 0)
/// forcing the post-measurement states to stay mutually orthogonal.
std::vector<Matrix> orthogonality_constraints(const ProductStateSet& states, Party party);
std::vector<Matrix> orthogonality_constraints(const MesSet& set, Party party);

FirstMoveReport first_move_report(const ProductStateSet& states, Party party);
FirstMoveReport first_move_report(const MesSet& set, Party party);

/// Certified iff neither party can start with a nontrivial non-disturbing
/// measurement.
Verdict locally_indistinguishable_by_symmetry(const ProductStateSet& states);

}  // namespace locc
