#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "locc/cyclotomic.hpp"

namespace locc {

/// Product of cyclic factors carrying a generalized-Pauli (Weyl) basis.
/// A single factor of order d gives the qudit basis {X^s Z^t}; m factors of
/// order 2 give the m-qubit Pauli basis.
struct WeylStructure {
  std::vector<unsigned> factors;

  unsigned total_dim() const;
  unsigned phase_order() const;  // lcm of the factors
  bool operator==(const WeylStructure&) const = default;
};

WeylStructure qudit_structure(unsigned d);
WeylStructure qubits_structure(unsigned m);

/// Phaseless basis label: one (s, t) exponent pair per factor, each reduced
/// to canonical residues. Labels form an abelian group under componentwise
/// addition.
struct WeylLabel {
  std::vector<std::pair<unsigned, unsigned>> exps;

  bool is_identity() const;
  auto operator<=>(const WeylLabel&) const = default;
};

WeylLabel identity_label(const WeylStructure& st);
WeylLabel qudit_label(long long s, long long t, unsigned d);
WeylLabel make_label(const WeylStructure& st,
                     const std::vector<std::pair<long long, long long>>& exps);
WeylLabel label_add(const WeylStructure& st, const WeylLabel& a, const WeylLabel& b);
WeylLabel label_sub(const WeylStructure& st, const WeylLabel& a, const WeylLabel& b);
WeylLabel label_neg(const WeylStructure& st, const WeylLabel& a);
std::string label_to_string(const WeylStructure& st, const WeylLabel& l);

/// Basis element with its accumulated phase, tracked exactly as an exponent
/// of omega_{phase_order}.
struct PhasedWeyl {
  WeylLabel label;
  unsigned phase_exp = 0;  // mod phase_order
};

PhasedWeyl weyl_mul(const WeylStructure& st, const PhasedWeyl& a, const PhasedWeyl& b);
PhasedWeyl weyl_dagger(const WeylStructure& st, const PhasedWeyl& a);

/// Exponent c with L.U = omega^c U.L, in the lcm phase order.
unsigned commutation_exponent(const WeylStructure& st, const WeylLabel& L,
                              const WeylLabel& U);

/// A finite set of MES identified with their unitaries: either phaseless
/// basis labels or explicit matrices.
struct MesSet {
  WeylStructure structure;
  std::vector<WeylLabel> labels;              // label-backed when nonempty
  std::vector<Eigen::MatrixXcd> matrices;     // matrix-backed otherwise
  std::string name;

  bool label_backed() const { return !labels.empty(); }
  std::size_t size() const { return label_backed() ? labels.size() : matrices.size(); }
};

struct OrthogonalityCheck {
  bool orthogonal = false;
  double max_violation = 0.0;
};

OrthogonalityCheck check_orthogonality(const MesSet& set, double tol = 1e-10);

/// Exact gamma_U = sum_{L in set} omega^{c(L,U)} for a label-backed set.
CycNumber gamma(const MesSet& set, const WeylLabel& U);

/// Closed form of gamma for the Gamma_d family, d >= 4.
CycNumber gamma_closed_form_gamma_d(unsigned d, long long s, long long t);

std::set<WeylLabel> all_labels(const WeylStructure& st);
std::set<WeylLabel> kernel_set(const MesSet& set);
std::set<WeylLabel> difference_set(const MesSet& set);

enum class Verdict { CertifiedLoccIndistinguishable, Inconclusive };

struct CriterionReport {
  std::size_t set_size = 0;
  unsigned dim = 0;
  std::set<WeylLabel> kernel;
  std::set<WeylLabel> difference;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<std::map<WeylLabel, CycNumber>> gamma_table;
};

/// One-sided LOCC-indistinguishability certificate: Certified iff the set
/// has exactly dim members and kernel(set) is contained in difference(set).
CriterionReport lemma_verdict(const MesSet& set, bool with_gamma_table = false);

std::string verdict_to_string(Verdict v);

}  // namespace locc
