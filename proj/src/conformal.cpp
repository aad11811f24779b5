#include "sbdo/conformal.hpp"

#include <algorithm>
#include <cctype>

namespace sbdo {

namespace {

std::vector<Rational> parse_list(const std::string& body, int n, const std::string& token) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(Rational::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(out.size()) != n)
    throw ParseError("token '" + token + "' needs " + std::to_string(n) + " coordinates");
  return out;
}

QMultivector parse_token(int n, const std::string& tok) {
  using namespace conformal;
  auto args = [&](const std::string& head) -> std::string {
    if (tok.size() < head.size() + 2 || tok.compare(0, head.size() + 1, head + "(") != 0 || tok.back() != ')')
      throw ParseError("malformed token '" + tok + "'");
    return tok.substr(head.size() + 1, tok.size() - head.size() - 2);
  };
  if (tok == "w") return w<Rational>(n);
  if (tok == "winv") return w<Rational>(n).alpha();
  if (tok.rfind("nbar(", 0) == 0) return nbar(n, parse_list(args("nbar"), n, tok));
  if (tok.rfind("n(", 0) == 0) return n_elem(n, parse_list(args("n"), n, tok));
  if (tok.rfind("a(", 0) == 0) return a_elem(n, Rational::parse(args("a")));
  if (tok.rfind("m:", 0) == 0) {
    QMultivector m = one<Rational>(n);
    std::size_t i = 2;
    int count = 0;
    while (i < tok.size()) {
      if (tok[i] == '^') {
        ++i;
        continue;
      }
      if (tok[i] != 'e') throw ParseError("malformed token '" + tok + "'");
      std::size_t j = i + 1;
      while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
      if (j == i + 1) throw ParseError("malformed token '" + tok + "'");
      const int label = std::stoi(tok.substr(i + 1, j - i - 1));
      if (label < 1 || label > n) throw ParseError("m: generators must be e1..e" + std::to_string(n));
      m = m * e<Rational>(n, label);
      ++count;
      i = j;
    }
    if (count % 2) throw ParseError("m: needs an even number of generators");
    return m;
  }
  throw ParseError("unknown group element token '" + tok + "'");
}

}  // namespace

std::vector<Rational> random_unit_vector(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-6, 6), den(1, 4);
  if (n == 1) return {Rational(num(rng) < 0 ? -1 : 1)};
  // t in Q^{n-1} -> (2t, |t|^2 - 1) / (|t|^2 + 1)
  std::vector<Rational> t;
  Rational t2(0);
  for (int i = 0; i < n - 1; ++i) {
    t.emplace_back(num(rng), den(rng));
    t2 += t.back() * t.back();
  }
  const Rational inv = (t2 + Rational(1)).inverse();
  std::vector<Rational> out;
  for (const auto& c : t) out.push_back(Rational(2) * c * inv);
  out.push_back((t2 - Rational(1)) * inv);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

QMultivector random_spin_element(int n, std::mt19937_64& rng) {
  const auto sig = Signature::euclidean(n);
  const int factors = std::uniform_int_distribution<int>(0, 1)(rng) ? 4 : 2;
  QMultivector m(sig, Rational(1));
  for (int i = 0; i < factors; ++i) m = m * QMultivector::vector(sig, random_unit_vector(n, rng), 1);
  return m;
}

GNFactors<Rational> random_gn_factors(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-7, 7), den(1, 5), pos(1, 7);
  GNFactors<Rational> f{{}, random_spin_element(n, rng), Rational(pos(rng), den(rng)), {}};
  for (int j = 0; j < n; ++j) {
    f.v.emplace_back(num(rng), den(rng));
    f.u.emplace_back(num(rng), den(rng));
  }
  return f;
}

QMultivector parse_group_element(int n, const std::string& text) {
  QMultivector g = conformal::one<Rational>(n);
  std::string tok;
  int depth = 0;
  bool any = false;
  auto flush = [&] {
    if (tok.empty()) return;
    g = g * parse_token(n, tok);
    tok.clear();
    any = true;
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses");
    if (depth == 0 && (c == '*' || std::isspace(static_cast<unsigned char>(c)))) {
      flush();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    tok += c;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses");
  flush();
  if (!any) throw ParseError("empty group element");
  return g;
}

}  // namespace sbdo
