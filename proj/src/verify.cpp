#include "sbdo/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sbdo/source.hpp"

namespace sbdo {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome pass(std::string note = {}) { return {true, std::move(note)}; }
Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string nonzero_terms(const WeylOperator& r) { return std::to_string(r.terms().size()) + " nonzero derivative terms"; }

Outcome clifford_lemma(int n) {
  const auto sig = Signature::euclidean(n);
  for (Blade J = 0; J < (Blade{1} << n); ++J) {
    const int k = blade_grade(J);
    const QMultivector eJ = QMultivector::blade(sig, J);
    QMultivector acc(sig);
    for (int i = 1; i <= n; ++i) acc += QMultivector::generator(sig, i) * eJ * QMultivector::generator(sig, i);
    if (!(acc == eJ * Rational((k % 2 ? 1 : -1) * (n - 2 * k)))) return fail("blade mask " + std::to_string(J));
  }
  return pass(std::to_string(1 << n) + " blades");
}

Outcome psi_l(int n) {
  const auto& S = clifford_module(n);
  const CMatrix L = S.operator_L();
  for (int k = 0; k <= n; ++k)
    if (!(S.psi(k) * L == S.psi(k) * GaussianRational((k % 2 ? -1 : 1) * (n - 2 * k))))
      return fail("k=" + std::to_string(k));
  return pass();
}

Outcome gn(int n) {
  using namespace conformal;
  std::mt19937_64 rng(1000 + static_cast<unsigned>(n));
  // w^{-1} nbar_x = nbar_{x'/|x|^2} (-e1 x/|x|) a(|x|) n_{x/|x|^2} on points with rational |x|.
  for (int it = 0; it < 20; ++it) {
    const Rational len(static_cast<long long>(rng() % 9 + 1), static_cast<long long>(rng() % 5 + 1));
    std::vector<Rational> x = random_unit_vector(n, rng);
    for (auto& c : x) c *= len;
    const Rational len2 = len * len;
    std::vector<Rational> xp = x, xi = x;
    xp[0] = -xp[0];
    for (auto& c : xp) c /= len2;
    for (auto& c : xi) c /= len2;
    const QMultivector lhs = w<Rational>(n).alpha() * nbar(n, x);
    const QMultivector m = e<Rational>(n, 1) * point(n, x) * (-len.inverse());
    if (!(lhs == nbar(n, xp) * m * a_elem(n, len) * n_elem(n, xi))) return fail("factorization of w^-1 nbar_x");
    const auto f = gn_factorize(lhs, n);
    if (!(f.r == len && f.v == xp && f.u == xi && embed_euclidean(f.m, n) == m)) return fail("gn_factorize on w^-1 nbar_x");
  }
  for (int it = 0; it < 200; ++it) {
    const auto f = random_gn_factors(n, rng);
    const auto h = gn_factorize(gn_compose(f), n);
    if (!(h.v == f.v && h.u == f.u && h.r == f.r && h.m == f.m)) return fail("round trip " + std::to_string(it));
  }
  return pass("20 points, 200 round trips");
}

Outcome symb_f(int n) {
  return weyl_symbol(build_F(n)) == printed_f_symbol(n) ? pass() : fail("symbol differs from f_{s,t}");
}

Outcome main_identity(int n) {
  const auto& R = StandardRing::get(n);
  const QRatFunc one(QPoly(R.vars(), Rational(1)));
  if (!main_identity_holds(n, one)) return fail("normalized symbols, constant 1");
  if (!(kernel_conversion_factor(n) == c_st(n))) return fail("kernel constant differs from c(s,t)");
  if (main_identity_holds(n, one * QRatFunc(Rational(2)))) return fail("perturbed constant accepted");
  return pass("normalized constant 1; kernel constant c(s,t)");
}

Outcome partial(int n) {
  using Block = RieszSymbol::Block;
  const auto& R = StandardRing::get(n);
  const CPoly s = R.var(R.s()), one(R.vars(), GaussianRational(1));
  const std::size_t d = clifford_module(n).dim();
  const RieszSymbol r = RieszSymbol::clifford_riesz(n, s, Block::Xi);
  const RieszSymbol r2 = RieszSymbol::clifford_riesz(n, s - one * GaussianRational(2), Block::Xi);
  const PolyMatrix rho = rho_of_variables(n, Block::Xi);
  for (int j = 1; j <= n; ++j) {
    const PolyMatrix f =
        scalar_matrix(d, (s - one) * R.var(R.xi(j))) - constant_matrix(n, clifford_module(n).gamma(j)) * rho;
    if (!(riesz_diff(r, Block::Xi, j) == f * r2)) return fail("first derivative, j=" + std::to_string(j));
  }
  if (!(riesz_laplacian(r, Block::Xi) == (s - one) * (s + one * GaussianRational(n - 1)) * r2))
    return fail("Laplacian");
  return pass();
}

Outcome riesz(int n) {
  const auto pts = riesz_sample_points(n, 20);
  if (pts.size() != 20) return fail("only " + std::to_string(pts.size()) + " sample points");
  double worst = 0;
  for (double s : pts) {
    const auto c = riesz_constant_check(s, n);
    worst = std::max({worst, c.ratio_residual, c.consistency_residual, c.scalar_residual});
  }
  std::ostringstream os;
  os << "max residual " << worst << " (tolerance 1e-9)";
  return worst < 1e-9 ? pass(os.str()) : fail(os.str());
}

Outcome covariance(const WeylOperator& op, int dl, int dm) {
  const auto basis = lie_algebra_basis(op.n());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const WeylOperator r = covariance_residual(op, basis[i], dl, dm);
    if (!r.is_zero()) return fail("basis element " + std::to_string(i) + ": " + nonzero_terms(r));
  }
  return pass(std::to_string(basis.size()) + " basis elements");
}

Outcome cov_b(int n, int k, int m) {
  const WeylOperator B = build_B(n, k, m);
  const auto basis = lie_algebra_basis(n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const WeylOperator r = sbdo_covariance_residual(B, basis[i], k, m);
    if (!r.is_zero()) return fail("basis element " + std::to_string(i) + ": " + nonzero_terms(r));
  }
  return pass(std::to_string(basis.size()) + " basis elements");
}

Outcome recurrence(int n, int k, int m) {
  if (!recurrence_holds(n, k, m)) return fail("B^(m) differs from B^(m-1)_{lambda+1,mu+1} o E");
  if (recurrence_holds(n, k, m, false)) return fail("unshifted right side also matches");
  return pass();
}

Outcome rankin() {
  const auto kappa = proportionality(build_B(1, 0, 1), printed_rankin_cohen());
  if (!kappa) return fail("not proportional");
  return pass("constant " + kappa->str());
}

Outcome rep(int n) {
  const auto& R = StandardRing::get(n);
  const CPoly lambda = R.var(R.lambda());
  const auto basis = lie_algebra_basis(n);
  for (const auto& rep : {MRep::spinor(n), MRep::dual_spinor(n)}) {
    std::vector<WeylOperator> ops;
    for (const auto& X : basis) ops.push_back(infinitesimal_action(X, rep, lambda));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b)
        if (!(commutator(ops[a], ops[b]) == infinitesimal_action(bracket(basis[a], basis[b]), rep, lambda)))
          return fail(rep.name() + " pair " + std::to_string(a) + "," + std::to_string(b));
  }
  return pass(std::to_string(basis.size() * (basis.size() - 1) / 2) + " pairs per representation");
}

Outcome ledger(int n) {
  const auto r = discrepancy_ledger(n);
  std::string flags;
  for (bool b : {r.e_diff_is_fifth_term, r.e_printed_fails_covariance, r.e_derived_passes_covariance,
                 r.b0_corrected_matches, r.b0_literal_diff_is_typo})
    flags += b ? '1' : '0';
  const std::string note = std::to_string(r.rows.size()) + " differing entries, flags " + flags;
  return r.matches_expected() ? pass(note) : fail(note);
}

struct Task {
  std::string check;
  std::string params;
  std::function<Outcome()> run;
};

std::string nkm(int n, int k = -1, int m = -1) {
  std::string s = "n=" + std::to_string(n);
  if (k >= 0) s += " k=" + std::to_string(k);
  if (m >= 0) s += " m=" + std::to_string(m);
  return s;
}

std::vector<Task> plan(const VerifyOptions& o, const std::vector<std::string>& selected) {
  std::vector<Task> tasks;
  for (const auto& name : selected) {
    if (name == "rankin") {
      tasks.push_back({name, "n=1", rankin});
      continue;
    }
    for (int n = 1; n <= o.n_max; ++n) {
      if (name == "covB") {
        for (int k = 0; k <= n; ++k)
          for (int m = 1; m <= o.m_max; ++m) tasks.push_back({name, nkm(n, k, m), [=] { return cov_b(n, k, m); }});
      } else if (name == "recurrence") {
        for (int k = 0; k <= n; ++k)
          for (int m = 2; m <= std::max(2, o.m_max); ++m)
            tasks.push_back({name, nkm(n, k, m), [=] { return recurrence(n, k, m); }});
      } else {
        static const std::map<std::string, std::function<Outcome(int)>> single = {
            {"lemma", clifford_lemma},
            {"psiL", psi_l},
            {"gn", gn},
            {"symbF", symb_f},
            {"main", main_identity},
            {"partial", partial},
            {"riesz", riesz},
            {"covM", [](int n) { return covariance(build_M(n), -1, -1); }},
            {"covE", [](int n) { return covariance(build_E(n), 1, 1); }},
            {"rep", rep},
            {"ledger", ledger},
        };
        const auto& f = single.at(name);
        tasks.push_back({name, nkm(n), [f, n] { return f(n); }});
      }
    }
  }
  return tasks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"lemma", "psiL",  "gn",    "symbF",      "main",   "partial", "riesz",
                                                 "covM",  "covE",  "covB",  "recurrence", "rankin", "rep",     "ledger"};
  return names;
}

bool VerifyReport::all_passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed; });
}

std::string VerifyReport::json(bool timings) const {
  nlohmann::ordered_json j;
  j["passed"] = all_passed();
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json e;
    e["check"] = r.check;
    e["params"] = r.params;
    e["verdict"] = r.passed ? "pass" : "fail";
    e["detail"] = r.detail;
    if (timings) e["seconds"] = r.seconds;
    j["records"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : records) {
    failed += !r.passed;
    os << (r.passed ? "pass " : "FAIL ") << r.check << " " << r.params;
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << "  " << static_cast<long long>(r.seconds * 1000) << " ms\n";
  }
  os << records.size() - failed << "/" << records.size() << " checks passed\n";
  return os.str();
}

VerifyReport run_verification(const VerifyOptions& o) {
  if (o.n_max < 1 || o.n_max > 4) throw DomainError("n-max must lie in 1..4");
  if (o.m_max < 1 || o.m_max > 3) throw DomainError("m-max must lie in 1..3");
  if (o.jobs < 1) throw DomainError("jobs must be at least 1");
  std::vector<std::string> selected;
  for (const auto& name : check_names())
    if (o.checks.empty() || std::find(o.checks.begin(), o.checks.end(), name) != o.checks.end())
      selected.push_back(name);
  for (const auto& name : o.checks)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw DomainError("unknown check '" + name + "'");

  const std::vector<Task> tasks = plan(o, selected);
  VerifyReport report;
  report.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      CheckRecord& r = report.records[i];
      r.check = tasks[i].check;
      r.params = tasks[i].params;
      try {
        const Outcome out = tasks[i].run();
        r.passed = out.passed;
        r.detail = out.detail;
      } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int threads = std::min<int>(o.jobs, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace sbdo
