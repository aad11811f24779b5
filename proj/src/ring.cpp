#include "sbdo/ring.hpp"

#include <array>
#include <mutex>
#include <string>
#include <vector>

namespace sbdo {

StandardRing::StandardRing(int n) : n_(n) {
  std::vector<std::string> names;
  for (const char* prefix : {"x", "y", "xi", "zeta"})
    for (int j = 1; j <= n; ++j) names.push_back(prefix + std::to_string(j));
  for (const char* p : {"s", "t", "lambda", "mu"}) names.emplace_back(p);
  vars_ = std::make_shared<const VarTable>(std::move(names));
}

const StandardRing& StandardRing::get(int n) {
  if (n < 1 || n > kMaxDim) throw DomainError("dimension n must lie in 1.." + std::to_string(kMaxDim));
  static std::array<std::once_flag, kMaxDim + 1> flags;
  static std::array<std::unique_ptr<StandardRing>, kMaxDim + 1> rings;
  std::call_once(flags[n], [n] { rings[n].reset(new StandardRing(n)); });
  return *rings[n];
}

}  // namespace sbdo
