#include "sbdo/source.hpp"

namespace sbdo {

namespace {

using Block = RieszSymbol::Block;

struct Ctx {
  int n;
  const StandardRing& R;
  const CliffordModule& S;
  std::size_t d;
  std::size_t D;

  explicit Ctx(int n_)
      : n(n_), R(StandardRing::get(n_)), S(clifford_module(n_)), d(S.dim()), D(S.dim() * S.dim()) {}

  CPoly c(long long v) const { return CPoly(R.vars(), GaussianRational(v)); }
  CPoly x(int j) const { return R.var(R.x(j)); }
  CPoly y(int j) const { return R.var(R.y(j)); }
  CPoly s() const { return R.var(R.s()); }
  CPoly t() const { return R.var(R.t()); }
  CPoly lambda() const { return R.var(R.lambda()); }
  CPoly mu() const { return R.var(R.mu()); }
  PolyMatrix id_half() const { return scalar_matrix(d, c(1)); }
  PolyMatrix id() const { return scalar_matrix(D, c(1)); }
  PolyMatrix E(int j) const { return constant_matrix(n, S.gamma(j)); }
  PolyMatrix Ed(int j) const { return constant_matrix(n, S.gamma_dual(j)); }
  PolyMatrix left(const PolyMatrix& a) const { return kron(a, id_half()); }
  PolyMatrix right(const PolyMatrix& b) const { return kron(id_half(), b); }
  // sum_k (x_k - y_k) E_k, or its dual version; sign flips to (y - x).
  PolyMatrix rho_diff(bool dual, bool y_minus_x) const {
    PolyMatrix m(d, d);
    for (int k = 1; k <= n; ++k) m += (dual ? Ed(k) : E(k)) * (y_minus_x ? y(k) - x(k) : x(k) - y(k));
    return m;
  }
  CPoly dist2() const {
    CPoly r = c(0);
    for (int k = 1; k <= n; ++k) r += (x(k) - y(k)) * (x(k) - y(k));
    return r;
  }
};

CPoly substitute(const CPoly& p, std::size_t var, const CPoly& value) { return p.substitute(var, value); }

std::string deriv_label(int n, const DerivIndex& d) {
  std::string out;
  for (int j = 1; j <= n; ++j)
    for (const auto& [slot, name] : {std::pair{DerivIndex::x_slot(j), "dx"}, std::pair{DerivIndex::y_slot(j), "dy"}}) {
      const unsigned e = d.e[slot];
      if (!e) continue;
      if (!out.empty()) out += " ";
      out += std::string(name) + std::to_string(j);
      if (e > 1) out += "^" + std::to_string(e);
    }
  return out.empty() ? "1" : out;
}

bool all_residuals_zero(const WeylOperator& op, int n, int dl, int dm) {
  for (const auto& X : lie_algebra_basis(n))
    if (!covariance_residual(op, X, dl, dm).is_zero()) return false;
  return true;
}

}  // namespace

WeylOperator source_term(int n, const SourceCoefficients& k, int term) {
  const Ctx C(n);
  WeylOperator op(n, C.D, C.D);
  const auto& c = k.c;
  auto each = [&](auto&& f) {
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l) f(j, l);
  };
  switch (term) {
    case 1:
      each([&](int j, int l) { op.add_term(DerivIndex::dx(j, 2) + DerivIndex::dy(l, 2), C.id() * (C.dist2() * c[1])); });
      break;
    case 2:
      each([&](int j, int l) {
        op.add_term(DerivIndex::dx(j) + DerivIndex::dy(l, 2), C.id() * ((C.x(j) - C.y(j)) * c[2]));
      });
      break;
    case 3:
      each([&](int j, int l) {
        op.add_term(DerivIndex::dx(l, 2) + DerivIndex::dy(j), C.id() * ((C.y(j) - C.x(j)) * c[3]));
      });
      break;
    case 4:
      each([&](int j, int l) {
        op.add_term(DerivIndex::dx(j) + DerivIndex::dy(l, 2), C.left(C.rho_diff(false, false) * C.E(j)) * c[4]);
      });
      break;
    case 5:
      each([&](int j, int l) {
        op.add_term(DerivIndex::dx(j, 2) + DerivIndex::dy(l),
                    C.right(C.rho_diff(true, !k.fifth_uses_x_minus_y) * C.Ed(l)) * c[5]);
      });
      break;
    case 6:
      for (int j = 1; j <= n; ++j) op.add_term(DerivIndex::dx(j, 2), C.id() * c[6]);
      break;
    case 7:
      for (int j = 1; j <= n; ++j) op.add_term(DerivIndex::dy(j, 2), C.id() * c[7]);
      break;
    case 8:
      for (int j = 1; j <= n; ++j) op.add_term(DerivIndex::dx(j) + DerivIndex::dy(j), C.id() * c[8]);
      break;
    case 9:
      each([&](int j, int l) { op.add_term(DerivIndex::dx(j) + DerivIndex::dy(l), C.right(C.Ed(j) * C.Ed(l)) * c[9]); });
      break;
    case 10:
      each([&](int j, int l) { op.add_term(DerivIndex::dx(l) + DerivIndex::dy(j), C.left(C.E(j) * C.E(l)) * c[10]); });
      break;
    case 11:
      for (int j = 1; j <= n; ++j)
        each([&](int a, int b) {
          op.add_term(DerivIndex::dx(a) + DerivIndex::dy(b), kron(C.E(j) * C.E(a), C.Ed(j) * C.Ed(b)) * c[11]);
        });
      break;
    default:
      throw DomainError("source operator terms are numbered 1..11");
  }
  return op;
}

WeylOperator assemble_source(int n, const SourceCoefficients& k) {
  if (k.c.size() != 12) throw ShapeMismatch("source coefficients need entries 1..11");
  const Ctx C(n);
  WeylOperator op(n, C.D, C.D);
  for (int term = 1; term <= 11; ++term) op += source_term(n, k, term);
  return op;
}

SourceCoefficients F_coefficients(int n) {
  const Ctx C(n);
  const CPoly sig = C.s() + C.c(n + 1), tau = C.t() + C.c(n + 1);
  SourceCoefficients k;
  k.c = {C.c(0),
         C.c(1),
         sig * GaussianRational(-2),
         tau * GaussianRational(-2),
         C.c(-2),
         C.c(-2),
         (C.t() + C.c(1)) * tau,
         (C.s() + C.c(1)) * sig,
         sig * tau * GaussianRational(-2),
         sig * GaussianRational(-2),
         tau * GaussianRational(-2),
         C.c(-2)};
  return k;
}

SourceCoefficients printed_E_coefficients(int n) {
  const Ctx C(n);
  const CPoly two_l = C.lambda() * GaussianRational(2), two_m = C.mu() * GaussianRational(2);
  const CPoly a = two_l - C.c(n - 1), b = two_m - C.c(n - 1);
  SourceCoefficients k;
  k.c = {C.c(0),
         C.c(1),
         a * GaussianRational(2),
         b * GaussianRational(2),
         C.c(-2),
         C.c(-2),
         b * (two_m + C.c(1)),
         a * (two_l + C.c(1)),
         a * b * GaussianRational(-2),
         a * GaussianRational(2),
         b * GaussianRational(2),
         C.c(-2)};
  k.fifth_uses_x_minus_y = true;
  return k;
}

WeylOperator build_F(int n) { return assemble_source(n, F_coefficients(n)); }

PolyMatrix printed_f_symbol(int n) {
  const Ctx C(n);
  const auto& R = C.R;
  const GaussianRational two_i(Rational(0), Rational(2));
  const CPoly sig = C.s() + C.c(n + 1), tau = C.t() + C.c(n + 1);
  CPoly xi2 = C.c(0), zeta2 = C.c(0), xz = C.c(0);
  for (int j = 1; j <= n; ++j) {
    xi2 += R.var(R.xi(j)) * R.var(R.xi(j));
    zeta2 += R.var(R.zeta(j)) * R.var(R.zeta(j));
    xz += R.var(R.xi(j)) * R.var(R.zeta(j));
  }
  const PolyMatrix rxi = rho_of_variables(n, Block::Xi), rzeta = rho_of_variables(n, Block::Zeta, true);
  PolyMatrix f = C.id() * (C.dist2() * xi2 * zeta2);
  for (int j = 1; j <= n; ++j) {
    const CPoly xij = R.var(R.xi(j)), zj = R.var(R.zeta(j));
    f += C.id() * ((C.x(j) - C.y(j)) * xij * zeta2 * sig * two_i);
    f += C.id() * ((C.y(j) - C.x(j)) * xi2 * zj * tau * two_i);
    f += C.right(C.Ed(j) * rzeta) * (xij * sig * GaussianRational(2));
    f += C.left(C.E(j) * rxi) * (zj * tau * GaussianRational(2));
    f += kron(C.E(j) * rxi, C.Ed(j) * rzeta) * C.c(2);
  }
  f += C.left(C.rho_diff(false, false) * rxi) * (zeta2 * two_i);
  f += C.right(C.rho_diff(true, true) * rzeta) * (xi2 * two_i);
  f -= C.id() * ((C.s() + C.c(1)) * sig * zeta2);
  f -= C.id() * ((C.t() + C.c(1)) * tau * xi2);
  f += C.id() * (sig * tau * xz * GaussianRational(2));
  return f;
}

WeylOperator build_M(int n) {
  const Ctx C(n);
  return WeylOperator::multiplication(n, C.id() * C.dist2());
}

WeylOperator build_E(int n) {
  const Ctx C(n);
  const CPoly s_val = C.lambda() * GaussianRational(-2) - C.c(2);
  const CPoly t_val = C.mu() * GaussianRational(-2) - C.c(2);
  const std::size_t s = C.R.s(), t = C.R.t();
  return build_F(n).map_coefficients([&](const CPoly& p) { return substitute(substitute(p, s, s_val), t, t_val); });
}

WeylOperator build_E_printed(int n) { return assemble_source(n, printed_E_coefficients(n)); }

WeylOperator shift_parameters(const WeylOperator& op, int dl, int dm) {
  if (!dl && !dm) return op;
  const Ctx C(op.n());
  const std::size_t l = C.R.lambda(), m = C.R.mu();
  const CPoly lv = C.lambda() + C.c(dl), mv = C.mu() + C.c(dm);
  return op.map_coefficients([&](const CPoly& p) { return substitute(substitute(p, l, lv), m, mv); });
}

WeylOperator specialize(const WeylOperator& op, const std::optional<Rational>& lambda,
                        const std::optional<Rational>& mu) {
  const Ctx C(op.n());
  return op.map_coefficients([&](const CPoly& p) {
    CPoly q = p;
    if (lambda) q = substitute(q, C.R.lambda(), CPoly(C.R.vars(), GaussianRational(*lambda)));
    if (mu) q = substitute(q, C.R.mu(), CPoly(C.R.vars(), GaussianRational(*mu)));
    return q;
  });
}

WeylOperator build_E_power(int n, int m) {
  if (m < 1) throw DomainError("m must be at least 1");
  const WeylOperator E = build_E(n);
  WeylOperator acc = E;
  for (int i = 1; i < m; ++i) acc = compose(shift_parameters(E, i, i), acc);
  return acc;
}

WeylOperator project_restricted(const WeylOperator& restricted, int k) {
  const int n = restricted.n();
  if (k < 0 || k > n) throw DomainError("k must lie in 0..n");
  if (!restricted.has_constant_coefficients())
    throw InvariantViolation("diagonal restriction of the iterated source operator is not constant");
  return constant_matrix(n, clifford_module(n).psi(k)) * restricted;
}

WeylOperator build_B(int n, int k, int m) {
  if (k < 0 || k > n) throw DomainError("k must lie in 0..n");
  if (m < 1) throw DomainError("m must be at least 1");
  const WeylOperator E = build_E(n);
  const WeylOperator restricted =
      m == 1 ? E.restrict_diagonal() : compose_restricted(shift_parameters(E, m - 1, m - 1), build_E_power(n, m - 1));
  return project_restricted(restricted, k);
}

bool depends_only_on_difference(const WeylOperator& op) {
  const Ctx C(op.n());
  for (const auto& [d, m] : op.terms())
    for (const auto& p : m.data())
      for (int j = 1; j <= op.n(); ++j)
        if (!(p.derivative(C.R.x(j)) + p.derivative(C.R.y(j))).is_zero()) return false;
  return true;
}

RieszSymbol main_identity_lhs(int n) {
  const Ctx C(n);
  const auto K = tensor(RieszSymbol::clifford_riesz(n, -C.s() - C.c(n), Block::Xi),
                        RieszSymbol::clifford_riesz(n, -C.t() - C.c(n), Block::Zeta, true));
  return symb_conv_then_mult(K, C.dist2());
}

RieszSymbol main_identity_rhs(int n) {
  const Ctx C(n);
  const auto K = tensor(RieszSymbol::clifford_riesz(n, -C.s() - C.c(n + 2), Block::Xi),
                        RieszSymbol::clifford_riesz(n, -C.t() - C.c(n + 2), Block::Zeta, true));
  return symb_conv_then_diff(build_F(n), K);
}

QRatFunc c_st(int n) {
  const auto& R = StandardRing::get(n);
  const QPoly s = R.var<Rational>(R.s()), t = R.var<Rational>(R.t()), one(R.vars(), Rational(1));
  return QRatFunc(one, (s + one) * (s + one * Rational(n + 1)) * (t + one) * (t + one * Rational(n + 1)));
}

bool main_identity_holds(int n, const QRatFunc& constant) {
  const RieszSymbol lhs = main_identity_lhs(n), rhs = main_identity_rhs(n);
  return to_complex(constant.denominator()) * lhs == to_complex(constant.numerator()) * rhs;
}

QRatFunc kernel_conversion_factor(int n) {
  const auto& R = StandardRing::get(n);
  const QRatFunc rs = clifford_riesz_constant(n).shift_ratio(R.s(), 2);
  const QPoly t = R.var<Rational>(R.t());
  const QRatFunc rt(rs.numerator().substitute(R.s(), t), rs.denominator().substitute(R.s(), t));
  return (rs * rt).inverse();
}

QRatFunc d_lambda_mu(int n) {
  const auto& R = StandardRing::get(n);
  const QPoly l = R.var<Rational>(R.lambda()) * Rational(2), m = R.var<Rational>(R.mu()) * Rational(2);
  const QPoly one(R.vars(), Rational(1)), shift(R.vars(), Rational(n - 1));
  return QRatFunc(one, (l - shift) * (l + one) * (m - shift) * (m + one));
}

WeylOperator tensor_action(const QMultivector& X, int n, const CPoly& lambda, const CPoly& mu) {
  const std::size_t d = clifford_module(n).dim();
  return lift_first(infinitesimal_action(X, MRep::spinor(n), lambda), d) +
         lift_second(infinitesimal_action(X, MRep::dual_spinor(n), mu), d);
}

WeylOperator covariance_residual(const WeylOperator& op, const QMultivector& X, int dl, int dm) {
  const Ctx C(op.n());
  return compose(op, tensor_action(X, op.n(), C.lambda(), C.mu())) -
         compose(tensor_action(X, op.n(), C.lambda() + C.c(dl), C.mu() + C.c(dm)), op);
}

WeylOperator sbdo_covariance_residual(const WeylOperator& B, const QMultivector& X, int k, int m) {
  const int n = B.n();
  const Ctx C(n);
  const CPoly nu = C.lambda() + C.mu() + C.c(2 * m);
  const WeylOperator target = lift_diagonal(infinitesimal_action(X, MRep::k_form(n, k), nu));
  return compose_restricted(B, tensor_action(X, n, C.lambda(), C.mu())) - compose_restricted(target, B);
}

bool recurrence_holds(int n, int k, int m, bool shifted) {
  if (m < 2) throw DomainError("the recurrence needs m >= 2");
  const WeylOperator lhs = build_B(n, k, m);
  const WeylOperator prev = build_B(n, k, m - 1);
  const WeylOperator rhs = compose_restricted(shifted ? shift_parameters(prev, 1, 1) : prev, build_E(n));
  return lhs == rhs;
}

WeylOperator printed_B0(int n, B0Reading reading) {
  const Ctx C(n);
  const PolyMatrix psi0 = constant_matrix(n, C.S.psi(0));
  const CPoly two_l = C.lambda() * GaussianRational(2), two_m = C.mu() * GaussianRational(2);
  const CPoly a = two_l - C.c(n - 1), b = two_m - C.c(n - 1);
  const CPoly pair = a * b * GaussianRational(-2);
  WeylOperator op(n, 1, C.D);
  for (int j = 1; j <= n; ++j) {
    op.add_term(DerivIndex::dx(j, 2), psi0 * (b * (two_m + C.c(1))));
    op.add_term(DerivIndex::dy(j, 2), psi0 * (a * (two_l + C.c(1))));
    op.add_term(DerivIndex::dx(j) + DerivIndex::dy(j), reading == B0Reading::Corrected ? psi0 * pair : psi0);
  }
  if (reading == B0Reading::Literal) op.add_term(DerivIndex{}, psi0 * pair);
  const CPoly dirac = (two_l + two_m - C.c(n - 2)) * GaussianRational(-2);
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l)
      op.add_term(DerivIndex::dx(j) + DerivIndex::dy(l), psi0 * kron(C.E(j), C.Ed(l)) * dirac);
  return op;
}

WeylOperator printed_rankin_cohen() {
  const Ctx C(1);
  const CPoly two_l = C.lambda() * GaussianRational(2), two_m = C.mu() * GaussianRational(2);
  WeylOperator op(1, 1, 1);
  op.add_term(DerivIndex::dx(1, 2), scalar_matrix(1, two_m * (two_m + C.c(1))));
  op.add_term(DerivIndex::dy(1, 2), scalar_matrix(1, two_l * (two_l + C.c(1))));
  op.add_term(DerivIndex::dx(1) + DerivIndex::dy(1),
              scalar_matrix(1, (two_l + C.c(1)) * (two_m + C.c(1)) * GaussianRational(-2)));
  return op;
}

std::optional<CRatFunc> proportionality(const WeylOperator& a, const WeylOperator& b) {
  if (a.n() != b.n() || a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const auto& [d, m] = *b.terms().begin();
  const PolyMatrix am = a.coefficient(d);
  for (std::size_t i = 0; i < m.data().size(); ++i) {
    if (m.data()[i].is_zero()) continue;
    const CPoly num = am.data()[i], den = m.data()[i];
    if (num.is_zero()) return std::nullopt;
    if (den * a == num * b) return CRatFunc(num, den);
    return std::nullopt;
  }
  return std::nullopt;
}

DiscrepancyReport discrepancy_ledger(int n) {
  DiscrepancyReport rep;
  auto record = [&](const std::string& object, const WeylOperator& derived, const WeylOperator& printed) {
    const WeylOperator diff = derived - printed;
    for (const auto& [d, m] : diff.terms()) {
      const PolyMatrix dm = derived.coefficient(d), pm = printed.coefficient(d);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (m(r, c).is_zero()) continue;
          rep.rows.push_back({object,
                              deriv_label(n, d) + " [" + std::to_string(r) + "," + std::to_string(c) + "]",
                              dm(r, c).str(), pm(r, c).str()});
        }
    }
    return diff;
  };

  const WeylOperator E = build_E(n), Ep = build_E_printed(n);
  const WeylOperator ediff = record("E", E, Ep);
  SourceCoefficients k = printed_E_coefficients(n);
  const WeylOperator printed_fifth = source_term(n, k, 5);
  k.fifth_uses_x_minus_y = false;
  const WeylOperator derived_fifth = source_term(n, k, 5);
  rep.e_diff_is_fifth_term = !ediff.is_zero() && ediff == derived_fifth - printed_fifth;
  rep.e_derived_passes_covariance = all_residuals_zero(E, n, 1, 1);
  rep.e_printed_fails_covariance = !all_residuals_zero(Ep, n, 1, 1);

  const WeylOperator B0 = build_B(n, 0, 1);
  rep.b0_corrected_matches = B0 == printed_B0(n, B0Reading::Corrected);
  const WeylOperator bdiff = record("B0", B0, printed_B0(n, B0Reading::Literal));
  bool confined = !bdiff.is_zero();
  for (const auto& [d, m] : bdiff.terms()) {
    bool third_group = d.order() == 0;
    for (int j = 1; j <= n; ++j) third_group |= d == DerivIndex::dx(j) + DerivIndex::dy(j);
    confined &= third_group;
  }
  rep.b0_literal_diff_is_typo = confined;
  return rep;
}

}  // namespace sbdo
