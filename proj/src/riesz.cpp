#include "sbdo/riesz.hpp"

#include <functional>
#include <sstream>

namespace sbdo {

namespace {

using Block = RieszSymbol::Block;

CPoly base_or_zero(const std::optional<CPoly>& b, const StandardRing& R) {
  return b ? *b : CPoly(R.vars(), GaussianRational(0));
}

// Integer value of a constant polynomial, or nullopt.
std::optional<int> integer_constant(const CPoly& p) {
  if (!p.is_constant()) return std::nullopt;
  const GaussianRational c = p.constant_term();
  if (!c.is_real() || !c.re().is_integer()) return std::nullopt;
  return static_cast<int>(c.re().to_double());
}

std::size_t block_variable(const StandardRing& R, Block b, int j) { return b == Block::Xi ? R.xi(j) : R.zeta(j); }

// |v|^2 as a polynomial.
CPoly norm2(const StandardRing& R, Block b) {
  CPoly s(R.vars(), GaussianRational(0));
  for (int j = 1; j <= R.n(); ++j) {
    const CPoly v = R.var(block_variable(R, b, j));
    s += v * v;
  }
  return s;
}

CPoly power(const CPoly& p, unsigned k, const StandardRing& R) {
  CPoly r(R.vars(), GaussianRational(1));
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

PolyMatrix derive(const PolyMatrix& m, std::size_t var) {
  return m.map([var](const CPoly& p) { return p.derivative(var); });
}

// Rewrites r over the given base exponents. Base differences must be integers.
RieszSymbol rebased(const RieszSymbol& r, const std::optional<CPoly>& bx, const std::optional<CPoly>& bz) {
  const auto& R = StandardRing::get(r.n());
  auto delta = [&](Block b, const std::optional<CPoly>& target) {
    if (!r.base(b) && !target) return 0;
    auto d = integer_constant(base_or_zero(r.base(b), R) - base_or_zero(target, R));
    if (!d) throw DomainError("Riesz symbols with incommensurable exponents");
    return *d;
  };
  const int dx = delta(Block::Xi, bx), dz = delta(Block::Zeta, bz);
  RieszSymbol out(r.n(), r.rows(), r.cols(), bx, bz);
  for (const auto& [k, c] : r.terms()) out.add_term({k.first + dx, k.second + dz}, c);
  return out;
}

}  // namespace

RieszSymbol::RieszSymbol(int n, std::size_t rows, std::size_t cols, std::optional<CPoly> base_xi,
                         std::optional<CPoly> base_zeta)
    : n_(n), rows_(rows), cols_(cols), base_xi_(std::move(base_xi)), base_zeta_(std::move(base_zeta)) {}

RieszSymbol RieszSymbol::polynomial(int n, const PolyMatrix& p) {
  RieszSymbol r(n, p.rows(), p.cols(), std::nullopt, std::nullopt);
  r.add_term({0, 0}, p);
  return r;
}

RieszSymbol RieszSymbol::norm_power(int n, const CPoly& c, Block block) {
  const auto& R = StandardRing::get(n);
  RieszSymbol r(n, 1, 1, block == Block::Xi ? std::optional<CPoly>(c) : std::nullopt,
                block == Block::Zeta ? std::optional<CPoly>(c) : std::nullopt);
  r.add_term({0, 0}, scalar_matrix(1, CPoly(R.vars(), GaussianRational(1))));
  return r;
}

RieszSymbol RieszSymbol::clifford_riesz(int n, const CPoly& c, Block block, bool dual) {
  const auto& R = StandardRing::get(n);
  const CPoly base = c - CPoly(R.vars(), GaussianRational(1));
  const PolyMatrix rho = rho_of_variables(n, block, dual);
  RieszSymbol r(n, rho.rows(), rho.cols(), block == Block::Xi ? std::optional<CPoly>(base) : std::nullopt,
                block == Block::Zeta ? std::optional<CPoly>(base) : std::nullopt);
  r.add_term({0, 0}, rho);
  return r;
}

void RieszSymbol::add_term(const Key& k, const PolyMatrix& p) {
  if (p.rows() != rows_ || p.cols() != cols_) throw ShapeMismatch("Riesz symbol coefficient has the wrong shape");
  if ((!base_xi_ && k.first != 0) || (!base_zeta_ && k.second != 0))
    throw DomainError("offset on a block without a norm power");
  if (p.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

RieszSymbol RieszSymbol::operator-() const {
  RieszSymbol r(*this);
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

RieszSymbol aligned(const RieszSymbol& a, const RieszSymbol& b) {
  auto pick = [](const std::optional<CPoly>& x, const std::optional<CPoly>& y) { return x ? x : y; };
  return rebased(b, pick(a.base_xi_, b.base_xi_), pick(a.base_zeta_, b.base_zeta_));
}

RieszSymbol& RieszSymbol::operator+=(const RieszSymbol& o) {
  if (o.n_ != n_ || o.rows_ != rows_ || o.cols_ != cols_) throw ShapeMismatch("Riesz symbols of different shapes");
  if ((!base_xi_ && o.base_xi_) || (!base_zeta_ && o.base_zeta_)) {
    RieszSymbol self = aligned(o, *this);
    self += o;
    return *this = std::move(self);
  }
  const RieszSymbol b = aligned(*this, o);
  for (const auto& [k, c] : b.terms_) add_term(k, c);
  return *this;
}

RieszSymbol& RieszSymbol::operator-=(const RieszSymbol& o) { return *this += -o; }

RieszSymbol operator*(const PolyMatrix& p, const RieszSymbol& r) {
  if (p.cols() != r.rows_) throw ShapeMismatch("symbol product shape mismatch");
  RieszSymbol out(r.n_, p.rows(), r.cols_, r.base_xi_, r.base_zeta_);
  for (const auto& [k, c] : r.terms_) out.add_term(k, p * c);
  return out;
}

RieszSymbol operator*(const CPoly& c, const RieszSymbol& r) {
  RieszSymbol out(r.n_, r.rows_, r.cols_, r.base_xi_, r.base_zeta_);
  for (const auto& [k, m] : r.terms_) out.add_term(k, m * c);
  return out;
}

RieszSymbol RieszSymbol::collected() const {
  if (terms_.empty()) return *this;
  const auto& R = StandardRing::get(n_);
  int lo_x = terms_.begin()->first.first, lo_z = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) {
    lo_x = std::min(lo_x, k.first);
    lo_z = std::min(lo_z, k.second);
  }
  for (const auto& [k, c] : terms_)
    if ((k.first - lo_x) % 2 || (k.second - lo_z) % 2)
      throw DomainError("Riesz symbol mixes norm powers of different parity");
  const CPoly nx = norm2(R, Block::Xi), nz = norm2(R, Block::Zeta);
  RieszSymbol out(n_, rows_, cols_, base_xi_, base_zeta_);
  for (const auto& [k, c] : terms_) {
    const CPoly f = power(nx, static_cast<unsigned>((k.first - lo_x) / 2), R) *
                    power(nz, static_cast<unsigned>((k.second - lo_z) / 2), R);
    out.add_term({lo_x, lo_z}, c * f);
  }
  return out;
}

bool RieszSymbol::is_zero() const { return collected().terms_.empty(); }

std::string RieszSymbol::str() const {
  std::ostringstream os;
  auto exponent = [](const std::optional<CPoly>& b, int off) {
    std::string e = b->str();
    if (off) e = "(" + e + ")" + (off > 0 ? " + " : " - ") + std::to_string(off > 0 ? off : -off);
    return e;
  };
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << "\n+ ";
    first = false;
    os << "[";
    for (std::size_t r = 0; r < c.rows(); ++r) {
      if (r) os << "; ";
      for (std::size_t q = 0; q < c.cols(); ++q) os << (q ? ", " : "") << c(r, q).str();
    }
    os << "]";
    if (base_xi_) os << " |xi|^(" << exponent(base_xi_, k.first) << ")";
    if (base_zeta_) os << " |zeta|^(" << exponent(base_zeta_, k.second) << ")";
  }
  if (first) os << "0";
  return os.str();
}

RieszSymbol tensor(const RieszSymbol& a, const RieszSymbol& b) {
  if (a.n() != b.n()) throw ShapeMismatch("Riesz symbols over different dimensions");
  if (a.base(Block::Zeta) || b.base(Block::Xi))
    throw DomainError("tensor product expects a xi-symbol on the left and a zeta-symbol on the right");
  RieszSymbol out(a.n(), a.rows() * b.rows(), a.cols() * b.cols(), a.base(Block::Xi), b.base(Block::Zeta));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term({ka.first, kb.second}, kron(ca, cb));
  return out;
}

RieszSymbol riesz_diff(const RieszSymbol& r, Block block, int j) {
  const auto& R = StandardRing::get(r.n());
  if (j < 1 || j > r.n()) throw DomainError("derivative index out of range");
  const std::size_t var = block_variable(R, block, j);
  const CPoly vj = R.var(var);
  RieszSymbol out(r.n(), r.rows(), r.cols(), r.base(Block::Xi), r.base(Block::Zeta));
  const auto& base = r.base(block);
  for (const auto& [k, c] : r.terms()) {
    out.add_term(k, derive(c, var));
    if (!base) continue;
    const int off = block == Block::Xi ? k.first : k.second;
    const CPoly expo = *base + CPoly(R.vars(), GaussianRational(off));
    const RieszSymbol::Key lower = block == Block::Xi ? RieszSymbol::Key{k.first - 2, k.second}
                                                      : RieszSymbol::Key{k.first, k.second - 2};
    out.add_term(lower, c * (expo * vj));
  }
  return out;
}

RieszSymbol riesz_laplacian(const RieszSymbol& r, Block block) {
  RieszSymbol out(r.n(), r.rows(), r.cols(), r.base(Block::Xi), r.base(Block::Zeta));
  for (int j = 1; j <= r.n(); ++j) out += riesz_diff(riesz_diff(r, block, j), block, j);
  return out;
}

RieszSymbol symb_conv_then_diff(const WeylOperator& d, const RieszSymbol& k) {
  if (d.n() != k.n() || d.cols() != k.rows()) throw ShapeMismatch("operator and symbol do not compose");
  return weyl_symbol(d) * k;
}

RieszSymbol symb_conv_then_mult(const RieszSymbol& k, const CPoly& p) {
  const auto& R = StandardRing::get(k.n());
  const int n = k.n();
  // (x_j, xi_j) for j = 1..n, then (y_j, zeta_j).
  std::vector<std::pair<std::size_t, std::pair<Block, int>>> pairs;
  for (int j = 1; j <= n; ++j) pairs.push_back({R.x(j), {Block::Xi, j}});
  for (int j = 1; j <= n; ++j) pairs.push_back({R.y(j), {Block::Zeta, j}});
  for (int j = 1; j <= n; ++j)
    if (p.uses_variable(R.xi(j)) || p.uses_variable(R.zeta(j)))
      throw DomainError("multiplier may depend on x and y only");
  RieszSymbol out(n, k.rows(), k.cols(), k.base(Block::Xi), k.base(Block::Zeta));
  const GaussianRational minus_i = -GaussianRational::i();
  // Depth-first over multi-indices: at slot v, differentiate p and the symbol
  // `e` times, with weight (-i)^e / e!.
  std::function<void(std::size_t, const CPoly&, const RieszSymbol&, GaussianRational)> walk =
      [&](std::size_t v, const CPoly& dp, const RieszSymbol& dk, GaussianRational w) {
        if (dp.is_zero() || dk.terms().empty()) return;
        if (v == pairs.size()) {
          out += (dp * w) * dk;
          return;
        }
        const auto [var, target] = pairs[v];
        CPoly q = dp;
        RieszSymbol s = dk;
        GaussianRational weight = w;
        for (unsigned e = 0;; ++e) {
          walk(v + 1, q, s, weight);
          if (e >= dp.degree_in(var)) break;
          q = q.derivative(var);
          s = riesz_diff(s, target.first, target.second);
          weight = weight * minus_i * GaussianRational(Rational(1, static_cast<long long>(e) + 1));
        }
      };
  walk(0, p, k, GaussianRational(1));
  return out;
}

RieszSymbol symb_conv_then_mult(const RieszSymbol& k, const PolyMatrix& p) {
  if (p.rows() != 1 || p.cols() != 1) throw DomainError("multiplier must be scalar-valued");
  return symb_conv_then_mult(k, p(0, 0));
}

PolyMatrix rho_of_variables(int n, Block block, bool dual) {
  const auto& R = StandardRing::get(n);
  const auto& S = clifford_module(n);
  PolyMatrix out(S.dim(), S.dim());
  for (int j = 1; j <= n; ++j)
    out += constant_matrix(n, dual ? S.gamma_dual(j) : S.gamma(j)) * R.var(block_variable(R, block, j));
  return out;
}

}  // namespace sbdo
