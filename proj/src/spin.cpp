#include "sbdo/spin.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace sbdo {
namespace {

CMatrix pauli_x() { return CMatrix(2, 2, {0, 1, 1, 0}); }
CMatrix pauli_y() {
  const GaussianRational i = GaussianRational::i();
  return CMatrix(2, 2, {0, -i, i, 0});
}
CMatrix pauli_z() { return CMatrix(2, 2, {1, 0, 0, -1}); }

CMatrix kron_chain(const std::vector<CMatrix>& factors) {
  CMatrix r = CMatrix::identity(1);
  for (const auto& f : factors) r = kron(r, f);
  return r;
}

}  // namespace

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::vector<Blade> k_subsets(int n, int k) {
  if (k < 0 || k > n) throw DomainError("k out of range 0..n");
  std::vector<Blade> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Blade b = 0;
    for (int i : idx) b |= Blade{1} << i;
    out.push_back(b);
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - k + p) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

CliffordModule::CliffordModule(int n) : n_(n) {
  if (n < 1) throw DomainError("Clifford module needs n >= 1");
  const int m = n / 2;
  dim_ = std::size_t{1} << m;
  const GaussianRational i = GaussianRational::i();
  const CMatrix id2 = CMatrix::identity(2);
  for (int k = 1; k <= m; ++k) {
    for (const CMatrix& p : {pauli_x(), pauli_y()}) {
      std::vector<CMatrix> f;
      for (int q = 1; q < k; ++q) f.push_back(pauli_z());
      f.push_back(p);
      for (int q = k + 1; q <= m; ++q) f.push_back(id2);
      gamma_.push_back(kron_chain(f) * i);
    }
  }
  if (n % 2) gamma_.push_back(kron_chain(std::vector<CMatrix>(static_cast<std::size_t>(m), pauli_z())) * i);
  for (const auto& e : gamma_) gamma_dual_.push_back(-e.transpose());
}

CMatrix CliffordModule::rho_blade(Blade b) const {
  CMatrix r = CMatrix::identity(dim_);
  for (Blade bb = b; bb; bb &= bb - 1) r = r * gamma_.at(static_cast<std::size_t>(std::countr_zero(bb)));
  return r;
}

CMatrix CliffordModule::rho_dual_blade(Blade b) const {
  CMatrix r = CMatrix::identity(dim_);
  for (Blade bb = b; bb; bb &= bb - 1) r = r * gamma_dual_.at(static_cast<std::size_t>(std::countr_zero(bb)));
  return r;
}

CMatrix CliffordModule::rho(const QMultivector& a) const {
  if (!(a.signature() == Signature::euclidean(n_))) throw ShapeMismatch("multivector does not match module dimension");
  CMatrix r(dim_, dim_);
  for (const auto& [b, c] : a.terms()) r += rho_blade(b) * GaussianRational(c);
  return r;
}

CMatrix CliffordModule::rho_dual(const QMultivector& a) const {
  if (!(a.signature() == Signature::euclidean(n_))) throw ShapeMismatch("multivector does not match module dimension");
  CMatrix r(dim_, dim_);
  for (const auto& [b, c] : a.terms()) r += rho_dual_blade(b) * GaussianRational(c);
  return r;
}

GaussianRational CliffordModule::pairing(const std::vector<GaussianRational>& v,
                                         const std::vector<GaussianRational>& w) {
  if (v.size() != w.size()) throw ShapeMismatch("pairing of vectors of different length");
  GaussianRational acc;
  for (std::size_t a = 0; a < v.size(); ++a) acc += v[a] * w[a];
  return acc;
}

CMatrix CliffordModule::psi(int k) const {
  const auto subsets = k_subsets(n_, k);
  CMatrix out(subsets.size(), dim_ * dim_);
  for (std::size_t I = 0; I < subsets.size(); ++I) {
    const CMatrix e = rho_blade(subsets[I]);
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b) out(I, a * dim_ + b) = e(b, a);
  }
  return out;
}

CMatrix CliffordModule::operator_L() const {
  CMatrix l(dim_ * dim_, dim_ * dim_);
  for (int j = 1; j <= n_; ++j) l += kron(gamma(j), gamma_dual(j));
  return l;
}

const CliffordModule& clifford_module(int n) {
  constexpr int kCache = 8;
  if (n < 1 || n > kCache) throw DomainError("cached Clifford modules cover 1 <= n <= 8");
  static std::array<std::once_flag, kCache + 1> flags;
  static std::array<std::unique_ptr<CliffordModule>, kCache + 1> mods;
  std::call_once(flags[n], [n] { mods[n] = std::make_unique<CliffordModule>(n); });
  return *mods[n];
}

}  // namespace sbdo
