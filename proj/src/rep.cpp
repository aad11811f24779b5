#include "sbdo/rep.hpp"

#include "sbdo/jet.hpp"

namespace sbdo {

namespace {

using QJet = Jet<QPoly>;

// Matrix of x -> Y x - x Y on R^n.
CMatrix adjoint_matrix(const QMultivector& Y, int n) {
  const auto sig = Signature::euclidean(n);
  CMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const QMultivector ei = QMultivector::generator(sig, i);
    const QMultivector img = Y * ei - ei * Y;
    for (int j = 1; j <= n; ++j)
      a(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = img.coefficient(Blade{1} << (j - 1));
  }
  return a;
}

// Slope of the k-form action of 1 + tY, whose inverse acts on vectors by I - t ad_Y.
CMatrix k_form_derivation(const QMultivector& Y, int n, int k) {
  using CJet = Jet<GaussianRational>;
  const CMatrix ad = adjoint_matrix(Y, n);
  Matrix<CJet> a_inv(ad.rows(), ad.cols());
  for (std::size_t r = 0; r < ad.rows(); ++r)
    for (std::size_t c = 0; c < ad.cols(); ++c)
      a_inv(r, c) = CJet(GaussianRational(r == c ? 1 : 0), -ad(r, c));
  return k_form_action(a_inv, k).map([](const CJet& j) { return j.slope(); });
}

// R(Y) for a Euclidean bivector with polynomial coefficients.
PolyMatrix rep_of_poly_bivector(const Multivector<QPoly>& Ym, const MRep& rep, const StandardRing& R) {
  PolyMatrix out(rep.dim(), rep.dim());
  for (const auto& [b, c] : Ym.terms()) {
    if (blade_grade(b) != 2) throw InvariantViolation("M-part is not a bivector");
    const CPoly cc = to_complex(c);
    out += constant_matrix(R.n(), rep.blade_action(b)) * cc;
  }
  return out;
}

std::vector<QPoly> x_point(const StandardRing& R) {
  std::vector<QPoly> x;
  for (int j = 1; j <= R.n(); ++j) x.push_back(R.var<Rational>(R.x(j)));
  return x;
}

WeylOperator assemble(int n, const MRep& rep, const CPoly& weight, const QPoly& eta, const PolyMatrix& rm,
                      const std::vector<QPoly>& drift) {
  const auto& R = StandardRing::get(n);
  WeylOperator op(n, rep.dim(), rep.dim());
  op.add_term(DerivIndex{}, scalar_matrix(rep.dim(), weight * to_complex(eta) * GaussianRational(2)) + rm);
  for (int j = 1; j <= n; ++j)
    op.add_term(DerivIndex::dx(j), scalar_matrix(rep.dim(), CPoly(R.vars(), GaussianRational(1)) *
                                                                to_complex(drift[static_cast<std::size_t>(j - 1)])));
  return op;
}

}  // namespace

MRep::MRep(Kind kind, int n, int k) : kind_(kind), n_(n), k_(k) {
  if (n < 1) throw DomainError("n must be positive");
  const auto sig = Signature::euclidean(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Blade b = (Blade{1} << (i - 1)) | (Blade{1} << (j - 1));
      CMatrix m;
      switch (kind) {
        case Kind::Trivial: m = CMatrix(1, 1); break;
        case Kind::Spinor: m = clifford_module(n).rho_blade(b); break;
        case Kind::DualSpinor: m = clifford_module(n).rho_dual_blade(b); break;
        case Kind::KForm: m = k_form_derivation(QMultivector::blade(sig, b), n, k); break;
      }
      blades_.emplace(b, std::move(m));
    }
}

MRep MRep::k_form(int n, int k) {
  if (k < 0 || k > n) throw DomainError("k must lie in 0..n");
  return MRep(Kind::KForm, n, k);
}

std::size_t MRep::dim() const {
  switch (kind_) {
    case Kind::Trivial: return 1;
    case Kind::Spinor:
    case Kind::DualSpinor: return clifford_module(n_).dim();
    case Kind::KForm: return binomial(n_, k_);
  }
  return 0;
}

std::string MRep::name() const {
  switch (kind_) {
    case Kind::Trivial: return "trivial";
    case Kind::Spinor: return "spinor";
    case Kind::DualSpinor: return "dual spinor";
    case Kind::KForm: return std::to_string(k_) + "-forms";
  }
  return "";
}

const CMatrix& MRep::blade_action(Blade b) const {
  auto it = blades_.find(b);
  if (it == blades_.end()) throw DomainError("not a Euclidean bivector blade");
  return it->second;
}

CMatrix MRep::action(const QMultivector& bivector) const {
  if (bivector.signature().dim() != n_ || !bivector.is_grade(2)) throw DomainError("expected a Euclidean bivector");
  CMatrix out(dim(), dim());
  for (const auto& [b, c] : bivector.terms()) out += blade_action(b) * GaussianRational(c);
  return out;
}

WeylOperator infinitesimal_action(const QMultivector& X, const MRep& rep, const CPoly& weight) {
  const int n = rep.n();
  if (!X.is_grade(2)) throw DomainError("infinitesimal action needs a bivector");
  const auto& R = StandardRing::get(n);
  const auto Xp = X.map_coefficients([&R](const Rational& c) { return QPoly(R.vars(), c); });
  const auto x = x_point(R);
  std::vector<QPoly> minus_x;
  for (const auto& c : x) minus_x.push_back(-c);
  const auto Y = conformal::nbar(n, minus_x) * Xp * conformal::nbar(n, x);
  const auto d = decompose_bivector(Y, n);
  std::vector<QPoly> drift;
  for (const auto& c : d.nbar) drift.push_back(c * Rational(-2));
  return assemble(n, rep, weight, d.a, rep_of_poly_bivector(d.m, rep, R), drift);
}

WeylOperator infinitesimal_action_jet(const QMultivector& X, const MRep& rep, const CPoly& weight) {
  const int n = rep.n();
  if (!X.is_grade(2)) throw DomainError("infinitesimal action needs a bivector");
  const auto& R = StandardRing::get(n);
  const QPoly one(R.vars(), Rational(1)), zero(R.vars(), Rational(0));
  const auto Xj = X.map_coefficients([&](const Rational& c) { return QJet(zero, QPoly(R.vars(), c)); });
  const auto g_inv = conformal::one<QJet>(n) - Xj;  // 1 - tX
  std::vector<QJet> x;
  for (const auto& c : x_point(R)) x.push_back(QJet(c));
  const auto f = gn_factorize(g_inv * conformal::nbar(n, x), n);
  // chi(a)^{-1} = r^{-2 weight} contributes -2 weight r1; rho(m)^{-1} gives -R(m1).
  const QPoly r1 = f.r.slope();
  Multivector<QPoly> m1(Signature::euclidean(n));
  for (const auto& [b, c] : f.m.terms()) {
    if (b == 0) {
      if (!(c.value() == one)) throw InvariantViolation("Spin(n) factor is not 1 at t = 0");
      if (!c.slope().is_zero()) throw InvariantViolation("Spin(n) factor has a scalar first-order part");
      continue;
    }
    if (!c.value().is_zero()) throw InvariantViolation("Spin(n) factor is not 1 at t = 0");
    m1.add_term(b, c.slope());
  }
  std::vector<QPoly> drift;
  for (const auto& c : f.v) drift.push_back(c.slope());
  return assemble(n, rep, weight, -r1, -rep_of_poly_bivector(m1, rep, R), drift);
}

std::vector<QMultivector> lie_algebra_basis(int n) {
  std::vector<QMultivector> basis;
  for (int i = 0; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) basis.push_back(conformal::e<Rational>(n, i) * conformal::e<Rational>(n, j));
  return basis;
}

}  // namespace sbdo
