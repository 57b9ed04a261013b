#include "locc/asymmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace locc {

namespace {

constexpr double kOrthTol = 1e-10;
constexpr double kInnerTol = 1e-12;

void append_complex_constraint(std::vector<Matrix>& out, const Matrix& A) {
  // Tr(A M) = 0 for Hermitian M splits into Tr(F_re M) = 0, Tr(F_im M) = 0.
  const Matrix re = (A + A.adjoint()) / 2.0;
  const Matrix im = (A - A.adjoint()) / std::complex<double>(0.0, 2.0);
  if (re.cwiseAbs().maxCoeff() > kInnerTol) out.push_back(re);
  if (im.cwiseAbs().maxCoeff() > kInnerTol) out.push_back(im);
}

}  // namespace

std::vector<Matrix> orthogonality_constraints(const ProductStateSet& states, Party party) {
  const auto& pairs = states.pairs;
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (std::size_t s = r + 1; s < pairs.size(); ++s) {
      const auto overlap = pairs[r].first.dot(pairs[s].first) *
                           pairs[r].second.dot(pairs[s].second);
      if (std::abs(overlap) > kOrthTol)
        throw std::invalid_argument("orthogonality_constraints: states not orthogonal");
    }
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (std::size_t s = 0; s < pairs.size(); ++s) {
      if (r == s) continue;
      const Vector& mr = party == Party::Alice ? pairs[r].first : pairs[r].second;
      const Vector& ms = party == Party::Alice ? pairs[s].first : pairs[s].second;
      const Vector& or_ = party == Party::Alice ? pairs[r].second : pairs[r].first;
      const Vector& os = party == Party::Alice ? pairs[s].second : pairs[s].first;
      if (std::abs(or_.dot(os)) <= kInnerTol) continue;  // other side already orthogonal
      // <m_r| M |m_s> = 0, i.e. Tr(M |m_s><m_r|) = 0.
      append_complex_constraint(out, ms * mr.adjoint());
    }
  return out;
}

std::vector<Matrix> orthogonality_constraints(const MesSet& set, Party party) {
  std::vector<Matrix> out;
  if (set.label_backed()) {
    const WeylLabel id = identity_label(set.structure);
    for (const auto& U : difference_set(set)) {
      if (U == id) continue;
      Matrix A = build_unitary(set.structure, U);
      if (party == Party::Bob) A = A.transpose().eval();
      append_complex_constraint(out, A);
    }
    return out;
  }
  for (std::size_t r = 0; r < set.matrices.size(); ++r)
    for (std::size_t s = 0; s < set.matrices.size(); ++s) {
      if (r == s) continue;
      Matrix A = set.matrices[s] * set.matrices[r].adjoint();
      if (party == Party::Bob) A = A.transpose().eval();
      append_complex_constraint(out, A);
    }
  return out;
}

namespace {

FirstMoveReport solve_first_move(std::vector<Matrix> functionals, unsigned d, Party party) {
  FirstMoveReport rep;
  rep.party = party;
  rep.basis = nullspace_real(functionals, d);
  rep.solution_dim = static_cast<unsigned>(rep.basis.size());
  rep.nontrivial_exists = rep.solution_dim > 1;
  if (rep.nontrivial_exists) {
    // Any non-scalar basis element gives a valid two-outcome measurement
    // I +- eps*H.
    for (const auto& H : rep.basis) {
      const Matrix traceless = H - (H.trace() / static_cast<double>(d)) *
                                       Matrix::Identity(d, d);
      if (traceless.cwiseAbs().maxCoeff() < 1e-9) continue;
      const auto eig = hermitian_eigen(traceless);
      const double spectral =
          std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
      rep.witness_epsilon = 1.0 / (2.0 * spectral);
      rep.witness = Matrix::Identity(d, d) + rep.witness_epsilon * traceless;
      break;
    }
  }
  return rep;
}

}  // namespace

FirstMoveReport first_move_report(const ProductStateSet& states, Party party) {
  auto rep = solve_first_move(orthogonality_constraints(states, party), states.dim, party);
  if (rep.witness) {
    // Post-measurement Gram matrix must stay diagonal.
    const Matrix root = psd_sqrt(*rep.witness);
    for (std::size_t r = 0; r < states.pairs.size(); ++r)
      for (std::size_t s = r + 1; s < states.pairs.size(); ++s) {
        const Vector& ar = states.pairs[r].first;
        const Vector& as = states.pairs[s].first;
        const auto inner = party == Party::Alice
                               ? (root * ar).dot(root * as) *
                                     states.pairs[r].second.dot(states.pairs[s].second)
                               : ar.dot(as) * (root * states.pairs[r].second)
                                                  .dot(root * states.pairs[s].second);
        if (std::abs(inner) > 1e-10)
          throw std::runtime_error("first_move_report: witness disturbs orthogonality");
      }
  }
  return rep;
}

FirstMoveReport first_move_report(const MesSet& set, Party party) {
  return solve_first_move(orthogonality_constraints(set, party),
                          set.structure.total_dim(), party);
}

Verdict locally_indistinguishable_by_symmetry(const ProductStateSet& states) {
  const auto alice = first_move_report(states, Party::Alice);
  const auto bob = first_move_report(states, Party::Bob);
  return (!alice.nontrivial_exists && !bob.nontrivial_exists)
             ? Verdict::CertifiedLoccIndistinguishable
             : Verdict::Inconclusive;
}

}  // namespace locc
