// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "locc/asymmetry.hpp"
#include "locc/constructions.hpp"
#include "locc/detector.hpp"
#include "locc/setio.hpp"
#include "locc/weyl.hpp"
#include "locc/witness.hpp"

using namespace locc;

namespace {

struct Runner {
  int failures = 0;

  void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %-38s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
};

Matrix random_psd(std::mt19937_64& rng, unsigned n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix A(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) A(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  return A * A.adjoint();
}

bool criterion1(std::string& detail) {
  for (unsigned d = 4; d <= 12; ++d) {
    const auto set = gamma_d_set(d);
    for (const auto& U : all_labels(set.structure)) {
      const long long s = U.exps[0].first, t = U.exps[0].second;
      if (!(gamma(set, U) == gamma_closed_form_gamma_d(d, s, t))) {
        detail = "mismatch at d=" + std::to_string(d) + " label " +
                 label_to_string(set.structure, U);
        return false;
      }
    }
  }
  return true;
}

bool criterion2(std::string& detail) {
  for (unsigned d = 4; d <= 12; ++d)
    if (lemma_verdict(gamma_d_set(d)).verdict != Verdict::CertifiedLoccIndistinguishable) {
      detail = "Gamma_" + std::to_string(d) + " not certified";
      return false;
    }
  for (unsigned d = 4; d <= 12; d += 2) {
    const auto rep = lemma_verdict(gamma_e_set(d));
    if (rep.verdict != Verdict::CertifiedLoccIndistinguishable) {
      detail = "Gamma_e(" + std::to_string(d) + ") not certified";
      return false;
    }
    std::set<WeylLabel> expect_k, expect_d;
    // X^{dt/2} Z^t rows with gamma actually zero: odd t only (even t gives
    // gamma = d, confirmed by the trace oracle)
    for (unsigned t = 1; t < d; t += 2) expect_k.insert(qudit_label(d / 2, t, d));
    for (unsigned s = 0; s < 2; ++s)
      for (unsigned t = 0; t < d; ++t)
        expect_d.insert(qudit_label(static_cast<long long>(d) * s / 2, t, d));
    if (rep.kernel != expect_k || rep.difference != expect_d) {
      detail = "Gamma_e(" + std::to_string(d) + ") K/Delta mismatch";
      return false;
    }
  }

  const auto quint = lemma_verdict(named_example("quintuple5"));
  if (quint.verdict != Verdict::CertifiedLoccIndistinguishable || !quint.kernel.empty()) {
    detail = "quintuple5";
    return false;
  }
  const auto bgk = lemma_verdict(named_example("quadrupleBGK"));
  if (bgk.verdict != Verdict::CertifiedLoccIndistinguishable || bgk.kernel.size() != 1 ||
      *bgk.kernel.begin() != qudit_label(0, 2, 4)) {
    detail = "quadrupleBGK";
    return false;
  }
  const auto l4set = named_example("pauliL4");
  const auto l4 = lemma_verdict(l4set);
  std::set<WeylLabel> expect;  // {X,Y,Z} x {I,X}: 6 phaseless labels, 12 signed
  for (auto first : {std::pair{1, 0}, {1, 1}, {0, 1}})
    for (auto second : {std::pair{0, 0}, {1, 0}})
      expect.insert(make_label(l4set.structure, {first, second}));
  auto expect_diff = expect;
  expect_diff.insert(identity_label(l4set.structure));
  if (l4.verdict != Verdict::CertifiedLoccIndistinguishable || l4.kernel != expect ||
      l4.difference != expect_diff) {
    detail = "pauliL4";
    return false;
  }
  return true;
}

bool criterion3(std::string& detail) {
  for (unsigned d = 3; d <= 8; ++d) {
    const auto set = theorem1_product_set(d);
    for (Party party : {Party::Alice, Party::Bob}) {
      const auto rep = first_move_report(set, party);
      if (rep.solution_dim != 1) {
        detail = "d=" + std::to_string(d) + " dim=" + std::to_string(rep.solution_dim);
        return false;
      }
    }
    auto all = set.pairs;
    all.insert(all.end(), set.extension.begin(), set.extension.end());
    for (std::size_t r = 0; r < all.size(); ++r)
      for (std::size_t s = r + 1; s < all.size(); ++s) {
        const double ov = std::abs(all[r].first.dot(all[s].first) *
                                   all[r].second.dot(all[s].second));
        if (ov >= 1e-12) {
          detail = "d=" + std::to_string(d) + " overlap " + std::to_string(ov);
          return false;
        }
      }
  }
  return true;
}

bool criterion4(std::string& detail) {
  for (unsigned d = 3; d <= 10; ++d) {
    const double l1 = build_detector_theorem2(d).lambda1();
    const double bound = theorem2_analytic_bound(d);
    if (l1 < bound - 1e-9 || l1 <= 1.0 / d) {
      detail = "d=" + std::to_string(d) + " lambda1=" + std::to_string(l1);
      return false;
    }
    if (std::abs(tilde_m_2x2(d).lambda1 - bound) >= 1e-12) {
      detail = "d=" + std::to_string(d) + " 2x2 closed form";
      return false;
    }
  }
  return true;
}

bool criterion5(std::string& detail) {
  std::mt19937_64 rng(0xACC5);
  for (unsigned d : {4u, 5u, 6u}) {
    const auto st = qudit_structure(d);
    std::uniform_int_distribution<unsigned> u(0, d - 1);
    std::uniform_real_distribution<double> uw(0.05, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      MesSet set;
      set.structure = st;
      std::set<WeylLabel> pool;
      while (pool.size() < d) pool.insert(qudit_label(u(rng), u(rng), d));
      set.labels.assign(pool.begin(), pool.end());
      std::vector<WeylLabel> aux;
      for (unsigned i = 0; i < d; ++i) aux.push_back(qudit_label(u(rng), u(rng), d));
      std::vector<double> w(d);
      double sum = 0.0;
      for (auto& x : w) sum += (x = uw(rng));
      for (auto& x : w) x /= sum;
      const double l1 = general_detector_lambda1(set, w, aux, st);
      if (l1 > 1.0 / d + 1e-9) {
        detail = "d=" + std::to_string(d) + " trial " + std::to_string(trial) +
                 " lambda1=" + std::to_string(l1);
        return false;
      }
    }
  }
  return true;
}

bool criterion6(std::string& detail) {
  std::mt19937_64 rng(0xACC6);
  for (unsigned d : {4u, 5u, 6u}) {
    const auto set = gamma_d_set(d);
    const auto trivial = asymmetric_bound(Matrix::Identity(d, d), set);
    if (std::abs(trivial.bound - 1.0 / d) > 1e-12) {
      detail = "M=I bound != 1/d at d=" + std::to_string(d);
      return false;
    }
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = asymmetric_bound(random_psd(rng, d), set);
      if (r.lambda1_numeric < r.bound - 1e-9) {
        detail = "d=" + std::to_string(d) + " trial " + std::to_string(trial);
        return false;
      }
    }
  }
  return true;
}

bool criterion7(std::string& detail) {
  std::mt19937_64 rng(0xACC7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (unsigned d = 2; d <= 6; ++d) {
    const auto f = factorization_params(d);
    const auto xi = xi_set(d, XiVariant::ExtraOnce);
    if (xi.members.size() != 2 * d - f.q + f.sigma) {
      detail = "Xi size at d=" + std::to_string(d);
      return false;
    }
    const auto orth = check_orthogonality(xi.members);
    if (!orth.orthogonal || orth.max_violation >= 1e-12) {
      detail = "Xi orthogonality at d=" + std::to_string(d);
      return false;
    }
    for (const auto& m : xi.members.matrices)
      if (!is_unitary(m, 1e-10)) {
        detail = "Xi member not unitary at d=" + std::to_string(d);
        return false;
      }

    const auto wit = build_witness(d);
    if (std::abs(wit.trace_H_2d - (2.0 * d - f.q)) > 1e-12 ||
        f.k_sigma - std::lround(wit.trace_H_2d) != f.sigma) {
      detail = "trace ledger at d=" + std::to_string(d);
      return false;
    }
    if (dominance_check(d) < -1e-10) {
      detail = "dominance at d=" + std::to_string(d);
      return false;
    }

    // h1/h2 sampling
    const unsigned n = 2 * f.p;
    auto rand_vec = [&](unsigned len) {
      Vector v(len);
      for (unsigned i = 0; i < len; ++i) v(i) = std::complex<double>(gauss(rng), gauss(rng));
      v.normalize();
      return v;
    };
    double min_val = 0.0, max_dis = 0.0;
    for (int trial = 0; trial < 10000 / 2; ++trial) {
      const auto& L = wit.L_family[trial % wit.L_family.size()];
      const auto v1 = product_value(rand_vec(n), rand_vec(n), L);
      const auto v2 = block_product_value(rand_vec(f.q * n), rand_vec(f.q * n), L, f.q);
      min_val = std::min({min_val, v1.value(), v2.value()});
      max_dis = std::max({max_dis, v1.disagreement(), v2.disagreement()});
    }
    if (min_val < -1e-12 || max_dis >= 1e-10) {
      detail = "h1/h2 sampling at d=" + std::to_string(d) + " min=" +
               std::to_string(min_val) + " dis=" + std::to_string(max_dis);
      return false;
    }
  }
  return true;
}

bool criterion8(std::string& detail) {
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    const auto t = rank_obstruction(p);
    const unsigned long long jp = (static_cast<unsigned long long>(p) * p - 1) / 4;
    if (!t.contradiction || t.contradiction_index != jp || (4 * jp + 1) % p != 0) {
      detail = "p=" + std::to_string(p);
      return false;
    }
  }
  const auto rep = rank2_falsifier(3, 200, 0xACC8);
  if (rep.feasible_found) {
    detail = "falsifier found a feasible sample";
    return false;
  }
  return true;
}

bool criterion9(std::string& detail) {
  const auto rows = kmin_table(24);
  struct Expect {
    unsigned dim, kmin;
  };
  // small-D values stated directly; the rest via the classification rules
  const std::vector<Expect> pinned = {{4, 4},  {5, 5},  {6, 5},   {7, 7},  {8, 7},
                                      {9, 9},  {10, 9}, {12, 10}, {14, 13}, {16, 13},
                                      {18, 15}, {20, 16}, {22, 21}, {24, 19}};
  for (const auto& e : pinned) {
    bool found = false;
    for (const auto& r : rows)
      if (r.dim == e.dim) {
        found = true;
        if (r.kmin != e.kmin) {
          detail = "D=" + std::to_string(e.dim) + " kmin=" + std::to_string(r.kmin) +
                   " expected " + std::to_string(e.kmin);
          return false;
        }
      }
    if (!found) {
      detail = "missing row D=" + std::to_string(e.dim);
      return false;
    }
  }
  for (const auto& r : rows)
    if (r.dim % 2 == 0 && r.kmin != factorization_params(r.dim / 2).k_sigma) {
      detail = "even cross-check D=" + std::to_string(r.dim);
      return false;
    }
  return true;
}

}  // namespace

int main() {
  Runner run;
  run.run("1 closed-form gamma agreement", criterion1);
  run.run("2 kernel criterion verdicts", criterion2);
  run.run("3 product-set first-move rigidity", criterion3);
  run.run("4 detector eigenvalue bounds", criterion4);
  run.run("5 general detector cap", criterion5);
  run.run("6 asymmetric bound oracle", criterion6);
  run.run("7 witness family ingredients", criterion7);
  run.run("8 rank obstruction + falsifier", criterion8);
  run.run("9 kmin classification table", criterion9);
  if (run.failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", run.failures);
  return 1;
}
