#include "sbdo/weyl.hpp"

#include <algorithm>
#include <cstring>

namespace sbdo {

namespace {

std::size_t slot_variable(const StandardRing& R, std::size_t slot) {
  const std::size_t k = StandardRing::kMaxDim;
  return slot < k ? R.x(static_cast<int>(slot) + 1) : R.y(static_cast<int>(slot - k) + 1);
}

PolyMatrix derive(const PolyMatrix& m, std::size_t var) {
  return m.map([var](const CPoly& p) { return p.derivative(var); });
}

PolyMatrix restrict_matrix(const PolyMatrix& m, const StandardRing& R) {
  return m.map([&R](const CPoly& p) {
    CPoly q = p;
    for (int j = 1; j <= R.n(); ++j) q = q.merge_variable(R.y(j), R.x(j));
    return q;
  });
}

GaussianRational binomial_coefficient(const DerivIndex& a, const DerivIndex& g) {
  long long c = 1;
  for (std::size_t i = 0; i < DerivIndex::kSlots; ++i) {
    const int n = a.e[i], k = g.e[i];
    for (int t = 1; t <= k; ++t) c = c * (n - k + t) / t;
  }
  return GaussianRational(c);
}

// All g <= a componentwise.
std::vector<DerivIndex> sub_indices(const DerivIndex& a) {
  std::vector<DerivIndex> out{DerivIndex{}};
  for (std::size_t i = 0; i < DerivIndex::kSlots; ++i) {
    if (!a.e[i]) continue;
    std::vector<DerivIndex> next;
    for (const auto& d : out)
      for (unsigned p = 0; p <= a.e[i]; ++p) {
        DerivIndex dd = d;
        dd.e[i] = static_cast<std::uint8_t>(p);
        next.push_back(dd);
      }
    out = std::move(next);
  }
  return out;
}

void check_compose(const WeylOperator& a, const WeylOperator& b) {
  if (a.n() != b.n()) throw ShapeMismatch("operators over different dimensions");
  if (a.cols() != b.rows()) throw ShapeMismatch("operator composition shape mismatch");
}

WeylOperator compose_impl(const WeylOperator& a, const WeylOperator& b, bool restricted) {
  check_compose(a, b);
  const auto& R = StandardRing::get(a.n());
  WeylOperator out(a.n(), a.rows(), b.cols());
  // Cache of d^g b_beta (restricted when requested) per term of b.
  std::vector<std::pair<DerivIndex, const PolyMatrix*>> bterms;
  for (const auto& [k, c] : b.terms()) bterms.emplace_back(k, &c);
  std::vector<std::map<DerivIndex, PolyMatrix, DerivOrder>> cache(bterms.size());
  auto derivative_of = [&](std::size_t bi, const DerivIndex& g) -> const PolyMatrix& {
    auto it = cache[bi].find(g);
    if (it != cache[bi].end()) return it->second;
    PolyMatrix m = *bterms[bi].second;
    for (std::size_t s = 0; s < DerivIndex::kSlots && !m.is_zero(); ++s)
      for (unsigned p = 0; p < g.e[s]; ++p) m = derive(m, slot_variable(R, s));
    if (restricted) m = restrict_matrix(m, R);
    return cache[bi].emplace(g, std::move(m)).first->second;
  };
  for (const auto& [ka, ca] : a.terms()) {
    const PolyMatrix left = restricted ? restrict_matrix(ca, R) : ca;
    const auto gammas = sub_indices(ka);
    for (const auto& g : gammas) {
      const GaussianRational binom = binomial_coefficient(ka, g);
      const DerivIndex rest = ka - g;
      for (std::size_t bi = 0; bi < bterms.size(); ++bi) {
        const PolyMatrix& d = derivative_of(bi, g);
        if (d.is_zero()) continue;
        PolyMatrix prod = left * d;
        if (!(binom == GaussianRational(1))) prod *= CPoly(binom);
        out.add_term(rest + bterms[bi].first, prod);
      }
    }
  }
  return out;
}

}  // namespace

unsigned DerivIndex::order() const { return order_x() + order_y(); }
unsigned DerivIndex::order_x() const {
  unsigned s = 0;
  for (std::size_t i = 0; i < StandardRing::kMaxDim; ++i) s += e[i];
  return s;
}
unsigned DerivIndex::order_y() const {
  unsigned s = 0;
  for (std::size_t i = StandardRing::kMaxDim; i < kSlots; ++i) s += e[i];
  return s;
}
bool DerivIndex::divides(const DerivIndex& o) const {
  for (std::size_t i = 0; i < kSlots; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}
DerivIndex operator+(const DerivIndex& a, const DerivIndex& b) {
  DerivIndex r;
  for (std::size_t i = 0; i < DerivIndex::kSlots; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
  return r;
}
DerivIndex operator-(const DerivIndex& a, const DerivIndex& b) {
  DerivIndex r;
  for (std::size_t i = 0; i < DerivIndex::kSlots; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  return r;
}

bool DerivOrder::operator()(const DerivIndex& a, const DerivIndex& b) const {
  const unsigned oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  // higher powers of earlier slots first
  return std::memcmp(a.e.data(), b.e.data(), DerivIndex::kSlots) > 0;
}

WeylOperator::WeylOperator(int n, std::size_t rows, std::size_t cols) : n_(n), rows_(rows), cols_(cols) {
  StandardRing::get(n);
}

WeylOperator WeylOperator::multiplication(int n, PolyMatrix coeff) {
  return monomial(n, DerivIndex{}, std::move(coeff));
}

WeylOperator WeylOperator::identity(int n, std::size_t dim) {
  return multiplication(n, scalar_matrix(dim, CPoly(StandardRing::get(n).vars(), GaussianRational(1))));
}

WeylOperator WeylOperator::monomial(int n, const DerivIndex& d, PolyMatrix coeff) {
  WeylOperator op(n, coeff.rows(), coeff.cols());
  op.add_term(d, coeff);
  return op;
}

WeylOperator WeylOperator::laplacian_x(int n, std::size_t dim) {
  const PolyMatrix id = scalar_matrix(dim, CPoly(StandardRing::get(n).vars(), GaussianRational(1)));
  WeylOperator op(n, dim, dim);
  for (int j = 1; j <= n; ++j) op.add_term(DerivIndex::dx(j, 2), id);
  return op;
}

WeylOperator WeylOperator::laplacian_y(int n, std::size_t dim) {
  const PolyMatrix id = scalar_matrix(dim, CPoly(StandardRing::get(n).vars(), GaussianRational(1)));
  WeylOperator op(n, dim, dim);
  for (int j = 1; j <= n; ++j) op.add_term(DerivIndex::dy(j, 2), id);
  return op;
}

WeylOperator WeylOperator::dirac_x(int n, bool dual) {
  const auto& S = clifford_module(n);
  WeylOperator op(n, S.dim(), S.dim());
  for (int j = 1; j <= n; ++j) op.add_term(DerivIndex::dx(j), constant_matrix(n, dual ? S.gamma_dual(j) : S.gamma(j)));
  return op;
}

PolyMatrix WeylOperator::coefficient(const DerivIndex& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? PolyMatrix(rows_, cols_) : it->second;
}

unsigned WeylOperator::order() const {
  unsigned o = 0;
  for (const auto& [k, c] : terms_) o = std::max(o, k.order());
  return o;
}
unsigned WeylOperator::order_x() const {
  unsigned o = 0;
  for (const auto& [k, c] : terms_) o = std::max(o, k.order_x());
  return o;
}
unsigned WeylOperator::order_y() const {
  unsigned o = 0;
  for (const auto& [k, c] : terms_) o = std::max(o, k.order_y());
  return o;
}

void WeylOperator::add_term(const DerivIndex& d, const PolyMatrix& coeff) {
  if (coeff.rows() != rows_ || coeff.cols() != cols_) throw ShapeMismatch("coefficient has the wrong shape");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator r(*this);
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  if (o.n_ != n_ || o.rows_ != rows_ || o.cols_ != cols_) throw ShapeMismatch("operator sum shape mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) { return *this += -o; }

WeylOperator operator*(const CPoly& c, const WeylOperator& op) {
  WeylOperator r(op.n_, op.rows_, op.cols_);
  for (const auto& [k, m] : op.terms_) r.add_term(k, m * c);
  return r;
}

WeylOperator operator*(const PolyMatrix& m, const WeylOperator& op) {
  if (m.cols() != op.rows_) throw ShapeMismatch("matrix times operator shape mismatch");
  WeylOperator r(op.n_, m.rows(), op.cols_);
  for (const auto& [k, c] : op.terms_) r.add_term(k, m * c);
  return r;
}

bool operator==(const WeylOperator& a, const WeylOperator& b) {
  return a.n_ == b.n_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.terms_ == b.terms_;
}

WeylOperator WeylOperator::map_coefficients(const std::function<CPoly(const CPoly&)>& f) const {
  WeylOperator r(n_, rows_, cols_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.map(f));
  return r;
}

WeylOperator WeylOperator::restrict_diagonal() const {
  const auto& R = StandardRing::get(n_);
  WeylOperator r(n_, rows_, cols_);
  for (const auto& [k, c] : terms_) r.add_term(k, restrict_matrix(c, R));
  return r;
}

bool WeylOperator::has_constant_coefficients() const {
  const auto& R = StandardRing::get(n_);
  for (const auto& [k, c] : terms_)
    for (const auto& p : c.data())
      for (int j = 1; j <= n_; ++j)
        if (p.degree_in(R.x(j)) || p.degree_in(R.y(j))) return false;
  return true;
}

PolyMatrix WeylOperator::apply(const PolyMatrix& f) const {
  if (f.rows() != cols_) throw ShapeMismatch("operator applied to a function of the wrong shape");
  const auto& R = StandardRing::get(n_);
  PolyMatrix out(rows_, f.cols());
  for (const auto& [k, c] : terms_) {
    PolyMatrix g = f;
    for (std::size_t s = 0; s < DerivIndex::kSlots; ++s)
      for (unsigned p = 0; p < k.e[s]; ++p) g = derive(g, slot_variable(R, s));
    if (!g.is_zero()) out += c * g;
  }
  return out;
}

std::string WeylOperator::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += "\n";
    std::string d;
    for (int j = 1; j <= n_; ++j) {
      if (auto p = k.e[DerivIndex::x_slot(j)]) d += " dx" + std::to_string(j) + (p > 1 ? "^" + std::to_string(p) : "");
      if (auto p = k.e[DerivIndex::y_slot(j)]) d += " dy" + std::to_string(j) + (p > 1 ? "^" + std::to_string(p) : "");
    }
    out += "[" + (d.empty() ? std::string(" 1") : d) + " ] ";
    for (std::size_t r = 0; r < c.rows(); ++r) {
      out += r ? "; " : "";
      for (std::size_t q = 0; q < c.cols(); ++q) out += (q ? ", " : "") + c(r, q).str();
    }
  }
  return out;
}

WeylOperator compose(const WeylOperator& a, const WeylOperator& b) { return compose_impl(a, b, false); }
WeylOperator compose_restricted(const WeylOperator& a, const WeylOperator& b) { return compose_impl(a, b, true); }
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) { return compose(a, b) - compose(b, a); }

WeylOperator lift_first(const WeylOperator& op, std::size_t other) {
  const auto& R = StandardRing::get(op.n());
  const PolyMatrix id = scalar_matrix(other, CPoly(R.vars(), GaussianRational(1)));
  WeylOperator r(op.n(), op.rows() * other, op.cols() * other);
  for (const auto& [k, c] : op.terms()) {
    if (k.order_y()) throw DomainError("lift_first expects an operator in x only");
    r.add_term(k, kron(c, id));
  }
  return r;
}

WeylOperator lift_second(const WeylOperator& op, std::size_t other) {
  const auto& R = StandardRing::get(op.n());
  const PolyMatrix id = scalar_matrix(other, CPoly(R.vars(), GaussianRational(1)));
  WeylOperator r(op.n(), op.rows() * other, op.cols() * other);
  for (const auto& [k, c] : op.terms()) {
    if (k.order_y()) throw DomainError("lift_second expects an operator in x only");
    DerivIndex ky;
    for (int j = 1; j <= op.n(); ++j) ky.e[DerivIndex::y_slot(j)] = k.e[DerivIndex::x_slot(j)];
    const PolyMatrix moved = c.map([&R](const CPoly& p) {
      for (int j = 1; j <= R.n(); ++j)
        if (p.degree_in(R.y(j))) throw DomainError("lift_second expects coefficients in x only");
      CPoly q = p;
      for (int j = 1; j <= R.n(); ++j) q = q.merge_variable(R.x(j), R.y(j));
      return q;
    });
    r.add_term(ky, kron(id, moved));
  }
  return r;
}

WeylOperator lift_diagonal(const WeylOperator& op) {
  WeylOperator r(op.n(), op.rows(), op.cols());
  for (const auto& [k, c] : op.terms()) {
    if (k.order_y()) throw DomainError("lift_diagonal expects an operator in x only");
    // prod_j (dx_j + dy_j)^{a_j}
    std::vector<std::pair<DerivIndex, long long>> expansion{{DerivIndex{}, 1}};
    for (int j = 1; j <= op.n(); ++j) {
      const unsigned a = k.e[DerivIndex::x_slot(j)];
      if (!a) continue;
      std::vector<std::pair<DerivIndex, long long>> next;
      long long binom = 1;
      for (unsigned p = 0; p <= a; ++p) {
        for (const auto& [d, coeff] : expansion) {
          DerivIndex dd = d;
          dd.e[DerivIndex::x_slot(j)] = static_cast<std::uint8_t>(a - p);
          dd.e[DerivIndex::y_slot(j)] = static_cast<std::uint8_t>(p);
          next.emplace_back(dd, coeff * binom);
        }
        binom = binom * (a - p) / (p + 1);
      }
      expansion = std::move(next);
    }
    for (const auto& [d, coeff] : expansion) r.add_term(d, c * CPoly(GaussianRational(coeff)));
  }
  return r;
}

PolyMatrix weyl_symbol(const WeylOperator& op) {
  const auto& R = StandardRing::get(op.n());
  PolyMatrix out(op.rows(), op.cols());
  const GaussianRational i = GaussianRational::i();
  for (const auto& [k, c] : op.terms()) {
    Monomial m;
    for (int j = 1; j <= op.n(); ++j) {
      m.exp[R.xi(j)] = k.e[DerivIndex::x_slot(j)];
      m.exp[R.zeta(j)] = k.e[DerivIndex::y_slot(j)];
    }
    GaussianRational ipow(1);
    for (unsigned p = 0; p < k.order(); ++p) ipow *= i;
    out += c * CPoly::monomial(R.vars(), m, ipow);
  }
  return out;
}

WeylOperator symbol_to_weyl(int n, const PolyMatrix& symbol) {
  const auto& R = StandardRing::get(n);
  WeylOperator op(n, symbol.rows(), symbol.cols());
  const GaussianRational minus_i = -GaussianRational::i();
  for (std::size_t r = 0; r < symbol.rows(); ++r)
    for (std::size_t q = 0; q < symbol.cols(); ++q)
      for (const auto& [m, c] : symbol(r, q).terms()) {
        DerivIndex d;
        Monomial rest = m;
        for (int j = 1; j <= n; ++j) {
          d.e[DerivIndex::x_slot(j)] = m.exp[R.xi(j)];
          d.e[DerivIndex::y_slot(j)] = m.exp[R.zeta(j)];
          rest.exp[R.xi(j)] = 0;
          rest.exp[R.zeta(j)] = 0;
        }
        GaussianRational ipow(1);
        for (unsigned p = 0; p < d.order(); ++p) ipow *= minus_i;
        PolyMatrix coeff(symbol.rows(), symbol.cols());
        coeff(r, q) = CPoly::monomial(R.vars(), rest, c * ipow);
        op.add_term(d, coeff);
      }
  return op;
}

PolyMatrix constant_matrix(int n, const CMatrix& m) {
  const auto& vars = StandardRing::get(n).vars();
  return m.map([&vars](const GaussianRational& c) { return CPoly(vars, c); });
}

PolyMatrix scalar_matrix(std::size_t dim, const CPoly& c) {
  PolyMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = c;
  return m;
}

}  // namespace sbdo
