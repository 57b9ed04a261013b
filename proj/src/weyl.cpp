#include "locc/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace locc {

unsigned WeylStructure::total_dim() const {
  unsigned n = 1;
  for (unsigned f : factors) n *= f;
  return n;
}

unsigned WeylStructure::phase_order() const {
  unsigned m = 1;
  for (unsigned f : factors) m = std::lcm(m, f);
  return m;
}

WeylStructure qudit_structure(unsigned d) {
  if (d < 2) throw std::invalid_argument("qudit_structure: d must be >= 2");
  return WeylStructure{{d}};
}

WeylStructure qubits_structure(unsigned m) {
  if (m == 0) throw std::invalid_argument("qubits_structure: m must be >= 1");
  return WeylStructure{std::vector<unsigned>(m, 2u)};
}

bool WeylLabel::is_identity() const {
  return std::all_of(exps.begin(), exps.end(),
                     [](const auto& p) { return p.first == 0 && p.second == 0; });
}

WeylLabel identity_label(const WeylStructure& st) {
  WeylLabel l;
  l.exps.assign(st.factors.size(), {0u, 0u});
  return l;
}

namespace {
unsigned mod_u(long long x, unsigned m) {
  long long r = x % static_cast<long long>(m);
  if (r < 0) r += m;
  return static_cast<unsigned>(r);
}

void check_structure(const WeylStructure& st, const WeylLabel& l) {
  if (l.exps.size() != st.factors.size())
    throw std::invalid_argument("label does not match structure");
}
}  // namespace

WeylLabel qudit_label(long long s, long long t, unsigned d) {
  return WeylLabel{{{mod_u(s, d), mod_u(t, d)}}};
}

WeylLabel make_label(const WeylStructure& st,
                     const std::vector<std::pair<long long, long long>>& exps) {
  if (exps.size() != st.factors.size())
    throw std::invalid_argument("make_label: wrong number of factors");
  WeylLabel l;
  l.exps.reserve(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i)
    l.exps.emplace_back(mod_u(exps[i].first, st.factors[i]),
                        mod_u(exps[i].second, st.factors[i]));
  return l;
}

WeylLabel label_add(const WeylStructure& st, const WeylLabel& a, const WeylLabel& b) {
  check_structure(st, a);
  check_structure(st, b);
  WeylLabel out;
  out.exps.reserve(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    out.exps.emplace_back((a.exps[i].first + b.exps[i].first) % st.factors[i],
                          (a.exps[i].second + b.exps[i].second) % st.factors[i]);
  return out;
}

WeylLabel label_neg(const WeylStructure& st, const WeylLabel& a) {
  check_structure(st, a);
  WeylLabel out;
  out.exps.reserve(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    out.exps.emplace_back((st.factors[i] - a.exps[i].first) % st.factors[i],
                          (st.factors[i] - a.exps[i].second) % st.factors[i]);
  return out;
}

WeylLabel label_sub(const WeylStructure& st, const WeylLabel& a, const WeylLabel& b) {
  return label_add(st, a, label_neg(st, b));
}

std::string label_to_string(const WeylStructure& st, const WeylLabel& l) {
  std::ostringstream os;
  for (std::size_t i = 0; i < l.exps.size(); ++i) {
    if (i) os << " | ";
    os << "X^" << l.exps[i].first << " Z^" << l.exps[i].second;
  }
  return os.str();
}

PhasedWeyl weyl_mul(const WeylStructure& st, const PhasedWeyl& a, const PhasedWeyl& b) {
  check_structure(st, a.label);
  check_structure(st, b.label);
  const unsigned m = st.phase_order();
  unsigned long long phase = (a.phase_exp + b.phase_exp) % m;
  // Per factor: X^s Z^t . X^s' Z^t' = omega^{t s'} X^{s+s'} Z^{t+t'}.
  for (std::size_t i = 0; i < st.factors.size(); ++i) {
    const unsigned d = st.factors[i];
    const unsigned long long e =
        static_cast<unsigned long long>(a.label.exps[i].second) * b.label.exps[i].first;
    phase = (phase + (m / d) * (e % d)) % m;
  }
  PhasedWeyl out;
  out.label = label_add(st, a.label, b.label);
  out.phase_exp = static_cast<unsigned>(phase);
  return out;
}

PhasedWeyl weyl_dagger(const WeylStructure& st, const PhasedWeyl& a) {
  check_structure(st, a.label);
  const unsigned m = st.phase_order();
  // (omega^phi X^s Z^t)^dagger = omega^{t s - phi} X^{-s} Z^{-t}.
  unsigned long long phase = (m - a.phase_exp) % m;
  for (std::size_t i = 0; i < st.factors.size(); ++i) {
    const unsigned d = st.factors[i];
    const unsigned long long e =
        static_cast<unsigned long long>(a.label.exps[i].second) * a.label.exps[i].first;
    phase = (phase + (m / d) * (e % d)) % m;
  }
  PhasedWeyl out;
  out.label = label_neg(st, a.label);
  out.phase_exp = static_cast<unsigned>(phase);
  return out;
}

unsigned commutation_exponent(const WeylStructure& st, const WeylLabel& L,
                              const WeylLabel& U) {
  check_structure(st, L);
  check_structure(st, U);
  const unsigned m = st.phase_order();
  // Per factor, L = X^a Z^b and U = X^s Z^t give L.U = omega^{b s - t a} U.L.
  long long c = 0;
  for (std::size_t i = 0; i < st.factors.size(); ++i) {
    const unsigned d = st.factors[i];
    const long long a = L.exps[i].first, b = L.exps[i].second;
    const long long s = U.exps[i].first, t = U.exps[i].second;
    const long long ci = ((b * s - t * a) % static_cast<long long>(d) + d) % d;
    c = (c + static_cast<long long>(m / d) * ci) % m;
  }
  return static_cast<unsigned>(c);
}

OrthogonalityCheck check_orthogonality(const MesSet& set, double tol) {
  OrthogonalityCheck out;
  if (set.label_backed()) {
    std::set<WeylLabel> distinct(set.labels.begin(), set.labels.end());
    out.orthogonal = distinct.size() == set.labels.size();
    out.max_violation = out.orthogonal ? 0.0 : 1.0;
    return out;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < set.matrices.size(); ++i)
    for (std::size_t j = i + 1; j < set.matrices.size(); ++j) {
      const double v = std::abs((set.matrices[i] * set.matrices[j].adjoint()).trace());
      worst = std::max(worst, v);
    }
  out.max_violation = worst;
  out.orthogonal = worst < tol;
  return out;
}

CycNumber gamma(const MesSet& set, const WeylLabel& U) {
  if (!set.label_backed())
    throw std::invalid_argument("gamma: requires a label-backed set (use gamma_numeric)");
  const unsigned m = set.structure.phase_order();
  CycNumber acc(Rational(0), m);
  for (const auto& L : set.labels)
    acc = acc + CycNumber::root_power(m, commutation_exponent(set.structure, L, U));
  return acc;
}

CycNumber gamma_closed_form_gamma_d(unsigned d, long long s, long long t) {
  if (d < 4) throw std::invalid_argument("gamma_closed_form_gamma_d: d must be >= 4");
  const long long h = d / 2;  // floor(d/2)
  CycNumber acc(Rational(mod_u(s, d) == 0 ? static_cast<long long>(d) : 0), d);
  acc = acc - CycNumber::root_power(d, -2 * s);
  acc = acc - CycNumber::root_power(d, -s);
  acc = acc + CycNumber::root_power(d, -h * t);
  acc = acc + CycNumber::root_power(d, h * t - s);
  return acc;
}

std::set<WeylLabel> all_labels(const WeylStructure& st) {
  std::set<WeylLabel> out;
  WeylLabel cur = identity_label(st);
  while (true) {
    out.insert(cur);
    // odometer over (s_i, t_i)
    std::size_t i = 0;
    for (; i < st.factors.size(); ++i) {
      auto& [s, t] = cur.exps[i];
      if (++t < st.factors[i]) break;
      t = 0;
      if (++s < st.factors[i]) break;
      s = 0;
    }
    if (i == st.factors.size()) break;
  }
  return out;
}

std::set<WeylLabel> kernel_set(const MesSet& set) {
  if (!set.label_backed())
    throw std::invalid_argument("kernel_set: requires a label-backed set");
  std::set<WeylLabel> out;
  for (const auto& U : all_labels(set.structure))
    if (gamma(set, U).is_zero()) out.insert(U);
  return out;
}

std::set<WeylLabel> difference_set(const MesSet& set) {
  if (!set.label_backed())
    throw std::invalid_argument("difference_set: requires a label-backed set");
  std::set<WeylLabel> out;
  for (const auto& a : set.labels)
    for (const auto& b : set.labels) out.insert(label_sub(set.structure, a, b));
  return out;
}

CriterionReport lemma_verdict(const MesSet& set, bool with_gamma_table) {
  if (!set.label_backed())
    throw std::invalid_argument("lemma_verdict: requires a label-backed set");
  if (!check_orthogonality(set).orthogonal)
    throw std::invalid_argument("lemma_verdict: duplicate labels (set not orthogonal)");
  CriterionReport rep;
  rep.set_size = set.labels.size();
  rep.dim = set.structure.total_dim();
  rep.kernel = kernel_set(set);
  rep.difference = difference_set(set);
  const bool size_ok = rep.set_size == rep.dim;
  const bool contained = std::includes(rep.difference.begin(), rep.difference.end(),
                                       rep.kernel.begin(), rep.kernel.end());
  rep.verdict = (size_ok && contained) ? Verdict::CertifiedLoccIndistinguishable
                                       : Verdict::Inconclusive;
  if (with_gamma_table) {
    std::map<WeylLabel, CycNumber> table;
    for (const auto& U : all_labels(set.structure)) table.emplace(U, gamma(set, U));
    rep.gamma_table = std::move(table);
  }
  return rep;
}

std::string verdict_to_string(Verdict v) {
  return v == Verdict::CertifiedLoccIndistinguishable ? "CertifiedLoccIndistinguishable"
                                                      : "Inconclusive";
}

}  // namespace locc
