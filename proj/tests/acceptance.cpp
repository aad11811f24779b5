// Acceptance run: one PASS/FAIL line per criterion, with its limits.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sbdo/source.hpp"

using namespace sbdo;

namespace {

struct Verdict {
  bool ok;
  std::string note;
  std::vector<std::string> extra;  // indented lines printed under the verdict
};

struct Criterion {
  int id;
  std::string title;
  std::string tolerance;
  double limit_seconds;
  std::function<Verdict()> run;
};

CPoly c(int n, long long v) { return CPoly(StandardRing::get(n).vars(), GaussianRational(v)); }

Verdict clifford_lemma() {
  long long blades = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto sig = Signature::euclidean(n);
    for (Blade J = 0; J < (Blade{1} << n); ++J, ++blades) {
      const int k = blade_grade(J);
      const QMultivector eJ = QMultivector::blade(sig, J);
      QMultivector acc(sig);
      for (int i = 1; i <= n; ++i) acc += QMultivector::generator(sig, i) * eJ * QMultivector::generator(sig, i);
      if (!(acc == eJ * Rational((k % 2 ? 1 : -1) * (n - 2 * k))))
        return {false, "n=" + std::to_string(n) + " blade " + std::to_string(J), {}};
    }
  }
  return {true, std::to_string(blades) + " blades, n=1..6", {}};
}

Verdict psi_l() {
  for (int n = 1; n <= 5; ++n) {
    const auto& S = clifford_module(n);
    const CMatrix L = S.operator_L();
    for (int k = 0; k <= n; ++k)
      if (!(S.psi(k) * L == S.psi(k) * GaussianRational((k % 2 ? -1 : 1) * (n - 2 * k))))
        return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k), {}};
  }
  return {true, "all 0<=k<=n, n=1..5", {}};
}

Verdict gn() {
  using namespace conformal;
  int points = 0, trips = 0;
  for (int n = 1; n <= 4; ++n) {
    std::mt19937_64 rng(7 * static_cast<unsigned>(n));
    for (int it = 0; it < 20; ++it, ++points) {
      const Rational len(static_cast<long long>(rng() % 11 + 1), static_cast<long long>(rng() % 7 + 1));
      std::vector<Rational> x = random_unit_vector(n, rng);
      for (auto& v : x) v *= len;
      const Rational len2 = len * len;
      std::vector<Rational> xp = x, xs = x;
      xp[0] = -xp[0];
      for (auto& v : xp) v /= len2;
      for (auto& v : xs) v /= len2;
      const QMultivector lhs = w<Rational>(n).alpha() * nbar(n, x);
      const QMultivector m = e<Rational>(n, 1) * point(n, x) * (-len.inverse());
      if (!(lhs == nbar(n, xp) * m * a_elem(n, len) * n_elem(n, xs)))
        return {false, "identity fails at n=" + std::to_string(n), {}};
      const auto f = gn_factorize(lhs, n);
      if (!(f.r == len && f.v == xp && f.u == xs && embed_euclidean(f.m, n) == m))
        return {false, "factorization differs at n=" + std::to_string(n), {}};
    }
    for (int it = 0; it < 200; ++it, ++trips) {
      const auto f = random_gn_factors(n, rng);
      const auto h = gn_factorize(gn_compose(f), n);
      if (!(h.v == f.v && h.u == f.u && h.r == f.r && h.m == f.m))
        return {false, "round trip fails at n=" + std::to_string(n), {}};
    }
  }
  return {true, std::to_string(points) + " points, " + std::to_string(trips) + " round trips, n=1..4", {}};
}

Verdict symb_f() {
  for (int n = 1; n <= 3; ++n)
    if (!(weyl_symbol(build_F(n)) == printed_f_symbol(n))) return {false, "n=" + std::to_string(n), {}};
  return {true, "n=1..3, formal s,t", {}};
}

Verdict main_identity() {
  // symb(R_s) = r_{-n-s} throughout, as the criterion states.
  Verdict v{true, "", {}};
  for (int n = 1; n <= 3; ++n) {
    const auto& R = StandardRing::get(n);
    const QRatFunc one(QPoly(R.vars(), Rational(1)));
    const bool with_c = main_identity_holds(n, c_st(n));
    const bool with_one = main_identity_holds(n, one);
    const bool kernel = kernel_conversion_factor(n) == c_st(n);
    v.ok = v.ok && with_c;
    v.extra.push_back("n=" + std::to_string(n) + ": constant c(s,t) " + (with_c ? "holds" : "fails") +
                      "; constant 1 " + (with_one ? "holds" : "fails") +
                      "; kernel-level constant (c_s c_t)/(c_{s+2} c_{t+2}) " + (kernel ? "equals" : "differs from") +
                      " c(s,t)");
  }
  v.note = v.ok ? "n=1..3" : "with normalized symbols the identity holds with constant 1; c(s,t) is the constant "
                             "for the unnormalized kernel convolutions (see README)";
  return v;
}

Verdict partial() {
  using Block = RieszSymbol::Block;
  for (int n = 1; n <= 4; ++n) {
    const auto& R = StandardRing::get(n);
    const CPoly s = R.var(R.s());
    const std::size_t d = clifford_module(n).dim();
    const RieszSymbol r = RieszSymbol::clifford_riesz(n, s, Block::Xi);
    const RieszSymbol r2 = RieszSymbol::clifford_riesz(n, s - c(n, 2), Block::Xi);
    const PolyMatrix rho = rho_of_variables(n, Block::Xi);
    for (int j = 1; j <= n; ++j) {
      const PolyMatrix f =
          scalar_matrix(d, (s - c(n, 1)) * R.var(R.xi(j))) - constant_matrix(n, clifford_module(n).gamma(j)) * rho;
      if (!(riesz_diff(r, Block::Xi, j) == f * r2)) return {false, "first derivative, n=" + std::to_string(n), {}};
    }
    if (!(riesz_laplacian(r, Block::Xi) == (s - c(n, 1)) * (s + c(n, n - 1)) * r2))
      return {false, "Laplacian, n=" + std::to_string(n), {}};
  }
  return {true, "n=1..4, formal s", {}};
}

Verdict gamma_constants() {
  double worst_ratio = 0, worst_cons = 0;
  std::size_t samples = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto pts = riesz_sample_points(n, 20);
    if (pts.size() != 20) return {false, "fewer than 20 sample points at n=" + std::to_string(n), {}};
    for (double s : pts) {
      const auto r = riesz_constant_check(s, n);
      worst_ratio = std::max(worst_ratio, r.ratio_residual);
      worst_cons = std::max(worst_cons, r.consistency_residual);
      ++samples;
    }
  }
  std::ostringstream os;
  os << samples << " samples, max ratio residual " << worst_ratio << ", max relative consistency residual "
     << worst_cons;
  return {worst_ratio < 1e-9 && worst_cons < 1e-9, os.str(), {}};
}

Verdict covariance_m_e() {
  for (int n = 1; n <= 3; ++n)
    for (const auto& X : lie_algebra_basis(n)) {
      if (!covariance_residual(build_M(n), X, -1, -1).is_zero()) return {false, "M, n=" + std::to_string(n), {}};
      if (!covariance_residual(build_E(n), X, 1, 1).is_zero()) return {false, "E, n=" + std::to_string(n), {}};
    }
  return {true, "M and E, every basis bivector, n=1..3", {}};
}

Verdict covariance_b() {
  int ops = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int m = 1; m <= 2; ++m, ++ops) {
        const WeylOperator B = build_B(n, k, m);
        for (const auto& X : lie_algebra_basis(n))
          if (!sbdo_covariance_residual(B, X, k, m).is_zero())
            return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m), {}};
      }
  return {true, std::to_string(ops) + " operators, target weight lambda+mu+2m", {}};
}

Verdict recurrence() {
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= n; ++k)
      for (int m = 2; m <= 3; ++m)
        if (!recurrence_holds(n, k, m))
          return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m), {}};
  return {true, "m=2,3, n=1,2, all k", {}};
}

Verdict rankin() {
  const auto kappa = proportionality(build_B(1, 0, 1), printed_rankin_cohen());
  if (!kappa || kappa->is_zero()) return {false, "not proportional", {}};
  return {true, "constant " + kappa->str(), {}};
}

Verdict rep_property() {
  int pairs = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto& R = StandardRing::get(n);
    const CPoly lambda = R.var(R.lambda());
    const auto basis = lie_algebra_basis(n);
    std::vector<MRep> reps{MRep::spinor(n), MRep::dual_spinor(n)};
    for (int k = 0; k <= n; ++k) reps.push_back(MRep::k_form(n, k));
    for (const auto& rep : reps) {
      std::vector<WeylOperator> ops;
      for (const auto& X : basis) ops.push_back(infinitesimal_action(X, rep, lambda));
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b, ++pairs)
          if (!(commutator(ops[a], ops[b]) == infinitesimal_action(bracket(basis[a], basis[b]), rep, lambda)))
            return {false, rep.name() + ", n=" + std::to_string(n), {}};
    }
  }
  return {true, std::to_string(pairs) + " pairs (spinor, dual spinor, k-forms), n=1..3", {}};
}

Verdict ledger() {
  Verdict v{true, "", {}};
  std::size_t rows = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto r = discrepancy_ledger(n);
    v.ok = v.ok && r.matches_expected();
    rows += r.rows.size();
    v.extra.push_back("n=" + std::to_string(n) + ": " + std::to_string(r.rows.size()) +
                      " differing entries; E diff is the fifth-term sign: " + (r.e_diff_is_fifth_term ? "yes" : "no") +
                      "; printed E covariant: " + (r.e_printed_fails_covariance ? "no" : "yes") +
                      "; derived E covariant: " + (r.e_derived_passes_covariance ? "yes" : "no") +
                      "; B0 equals the weighted-sum reading: " + (r.b0_corrected_matches ? "yes" : "no") +
                      "; literal B0 diff confined to that term group: " + (r.b0_literal_diff_is_typo ? "yes" : "no"));
    if (n == 1)
      for (const auto& row : r.rows)
        v.extra.push_back("  " + row.object + " " + row.term + ": derived " + row.derived + ", printed " + row.printed);
  }
  v.note = std::to_string(rows) + " entries over n=1..3, two typos, nothing else";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Clifford lemma sum_i e_i e_J e_i", "exact", 1, clifford_lemma},
      {2, "Psi^(k) L = (-1)^k (n-2k) Psi^(k)", "exact", 5, psi_l},
      {3, "w^-1 nbar_x factorization and GN round trip", "exact", 10, gn},
      {4, "symb(F_{s,t}) = f_{s,t}", "exact", 30, symb_f},
      {5, "main identity with c(s,t)", "exact", 120, main_identity},
      {6, "Clifford-Riesz derivative formulas", "exact", 1, partial},
      {7, "Gamma-constant ratio and consistency", "abs 1e-9, rel 1e-9", 1, gamma_constants},
      {8, "covariance of M (-1,-1) and E (+1,+1)", "exact", 300, covariance_m_e},
      {9, "covariance of B^(m)_k", "exact", 600, covariance_b},
      {10, "recurrence B^(m) = B^(m-1)_{+1,+1} o E", "exact", 300, recurrence},
      {11, "Rankin-Cohen reduction at n=1", "exact", 1, rankin},
      {12, "[dpi(X), dpi(Y)] = dpi([X,Y])", "exact", 60, rep_property},
      {13, "discrepancy ledger", "exact", 600, ledger},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what(), {}};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = v.ok && dt < c.limit_seconds;
    failed += !ok;
    std::printf("AC%02d %s  %s  [%s; %.3fs of %.0fs]  %s%s\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(),
                c.tolerance.c_str(), dt, c.limit_seconds, v.note.c_str(), dt < c.limit_seconds ? "" : " (time limit)");
    for (const auto& line : v.extra) std::printf("     %s\n", line.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
