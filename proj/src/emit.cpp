#include "sbdo/emit.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "json.hpp"

namespace sbdo {

namespace {

using ojson = nlohmann::ordered_json;

int ring_dim(const CPoly& p) { return p.vars() ? static_cast<int>((p.vars()->size() - 4) / 4) : 0; }

std::string latex_var(const std::string& name, int n) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  const std::string stem = name.substr(0, split), index = name.substr(split);
  std::string out = stem;
  if (stem == "xi" || stem == "zeta" || stem == "lambda" || stem == "mu") out = "\\" + stem;
  if (!index.empty() && n != 1) out += "_{" + index + "}";
  return out;
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.str();
  const Rational a = r.abs();
  return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + a.numerator().str() + "}{" + a.denominator().str() + "}";
}

void append_token(std::string& out, const std::string& tok) {
  if (!out.empty() && !tok.empty() && std::isalpha(static_cast<unsigned char>(out.back())) &&
      std::isalpha(static_cast<unsigned char>(tok.front())))
    out += " ";
  out += tok;
}

std::string latex_monomial(const Monomial& m, const VarTable* names, int n) {
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!m.exp[i]) continue;
    std::string tok = latex_var(names ? names->name(i) : "v" + std::to_string(i), n);
    if (m.exp[i] > 1) tok += m.exp[i] < 10 ? "^" + std::to_string(m.exp[i]) : "^{" + std::to_string(m.exp[i]) + "}";
    append_token(out, tok);
  }
  return out;
}

// Coefficient without its sign; `neg` reports the sign.
std::string latex_scalar(const GaussianRational& c, bool& neg) {
  if (c.is_real()) {
    neg = c.re().sign() < 0;
    return latex_rational(c.re().abs());
  }
  if (c.re().is_zero()) {
    neg = c.im().sign() < 0;
    const Rational a = c.im().abs();
    return a.is_one() ? "i" : latex_rational(a) + "i";
  }
  neg = false;
  bool ni = false;
  const std::string im = latex_scalar(GaussianRational(c.im()) * GaussianRational::i(), ni);
  return "(" + latex_rational(c.re()) + (ni ? "-" : "+") + im + ")";
}

bool all_real(const CPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.is_real(); });
}

QPoly real_part(const CPoly& p) {
  std::vector<QPoly::Term> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, c.re());
  return QPoly::from_terms(p.vars(), std::move(terms));
}

struct Factored {
  std::string text;
  bool is_sum = false;  // top level is an unfactored sum
};

Factored factored(const CPoly& p) {
  if (p.is_zero()) return {"0", false};
  if (!all_real(p) || p.size() == 1) return {latex_poly(p), p.size() > 1};
  const auto lf = linear_factors(real_part(p));
  std::vector<std::pair<std::string, int>> parts;
  auto push = [&](const QPoly& f) {
    std::string t = latex_poly(to_complex(f));
    if (f.size() > 1) t = "(" + t + ")";
    if (!parts.empty() && parts.back().first == t) ++parts.back().second;
    else parts.emplace_back(t, 1);
  };
  for (const auto& f : lf.factors) push(f);
  const bool rest_trivial = lf.rest.is_constant();
  if (lf.factors.empty()) return {latex_poly(p), true};
  if (!rest_trivial) push(lf.rest);
  std::string out;
  const Rational content = rest_trivial ? lf.content * lf.rest.constant_term() : lf.content;
  if (content == Rational(-1)) out = "-";
  else if (!content.is_one()) out = latex_rational(content);
  for (const auto& [t, e] : parts) append_token(out, e > 1 ? t + "^" + std::to_string(e) : t);
  return {out, false};
}

std::string latex_derivative(const DerivIndex& d, int n) {
  const unsigned k = d.order();
  if (k == 0) return "";
  std::string den;
  for (const auto& [prefix, slot_of] :
       {std::pair{std::string("x"), &DerivIndex::x_slot}, std::pair{std::string("y"), &DerivIndex::y_slot}})
    for (int j = 1; j <= n; ++j) {
      const unsigned e = d.e[slot_of(j)];
      if (!e) continue;
      den += "\\partial " + prefix + (n == 1 ? "" : "_{" + std::to_string(j) + "}");
      if (e > 1) den += "^" + std::to_string(e);
    }
  return "\\frac{\\partial" + (k > 1 ? "^" + std::to_string(k) : std::string()) + "}{" + den + "}";
}

std::string latex_coefficient(const PolyMatrix& m) {
  if (m.rows() == 1 && m.cols() == 1) {
    const Factored f = factored(m(0, 0));
    return f.is_sum ? "(" + f.text + ")" : f.text;
  }
  std::string out = "\\begin{pmatrix}";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += " \\\\ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += " & ";
      out += factored(m(r, c)).text;
    }
  }
  return out + "\\end{pmatrix}";
}

ojson matrix_json(const PolyMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson terms_json(const WeylOperator& op, const char* coeff_key) {
  ojson terms = ojson::array();
  for (const auto& [d, m] : op.terms()) {
    ojson dx = ojson::array(), dy = ojson::array();
    for (int j = 1; j <= op.n(); ++j) {
      dx.push_back(d.e[DerivIndex::x_slot(j)]);
      dy.push_back(d.e[DerivIndex::y_slot(j)]);
    }
    ojson t;
    t["dx"] = std::move(dx);
    t["dy"] = std::move(dy);
    t[coeff_key] = matrix_json(m);
    terms.push_back(std::move(t));
  }
  return terms;
}

std::string param_str(const ParamValue& v) { return v ? v->str() : "symbolic"; }

std::string ratfunc_str(const QRatFunc& f, const ParamValue& lambda, const ParamValue& mu, int n) {
  const auto& R = StandardRing::get(n);
  auto sub = [&](QPoly p) {
    if (lambda) p = p.substitute(R.lambda(), QPoly(R.vars(), *lambda));
    if (mu) p = p.substitute(R.mu(), QPoly(R.vars(), *mu));
    return p;
  };
  const QPoly den = sub(f.denominator());
  if (den.is_zero()) return "pole";
  return QRatFunc(sub(f.numerator()), den).str();
}

}  // namespace

EmitFormat parse_emit_format(const std::string& name) {
  if (name == "json") return EmitFormat::Json;
  if (name == "latex") return EmitFormat::Latex;
  if (name == "text") return EmitFormat::Text;
  throw ParseError("unknown format '" + name + "'");
}

ParamValue parse_param(const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  return Rational::parse(text);
}

WeylOperator emitted_source(int n, const ParamValue& lambda, const ParamValue& mu) {
  return specialize(build_E(n), lambda, mu);
}

WeylOperator emitted_sbdo(int n, int k, int m, const ParamValue& lambda, const ParamValue& mu) {
  return specialize(build_B(n, k, m), lambda, mu);
}

std::string weyl_json(const WeylOperator& op, int indent) { return terms_json(op, "coeff").dump(indent); }

std::string render_source(const WeylOperator& op, const ParamValue& lambda, const ParamValue& mu, EmitFormat fmt) {
  switch (fmt) {
    case EmitFormat::Json: {
      ojson j;
      j["n"] = op.n();
      j["lambda"] = param_str(lambda);
      j["mu"] = param_str(mu);
      j["normalization"] = ratfunc_str(d_lambda_mu(op.n()), lambda, mu, op.n());
      j["terms"] = terms_json(op, "coeff");
      return j.dump(2) + "\n";
    }
    case EmitFormat::Latex:
      return latex_operator(op) + "\n";
    case EmitFormat::Text:
      return op.str() + "\n";
  }
  return {};
}

std::string render_sbdo(const WeylOperator& op, int k, int m, const ParamValue& lambda, const ParamValue& mu,
                        EmitFormat fmt) {
  switch (fmt) {
    case EmitFormat::Json: {
      ojson j;
      j["n"] = op.n();
      j["k"] = k;
      j["m"] = m;
      j["lambda"] = param_str(lambda);
      j["mu"] = param_str(mu);
      j["terms"] = terms_json(op, "map");
      return j.dump(2) + "\n";
    }
    case EmitFormat::Latex:
      return latex_operator(op) + "\n";
    case EmitFormat::Text:
      return op.str() + "\n";
  }
  return {};
}

std::string latex_poly(const CPoly& p) {
  if (p.is_zero()) return "0";
  const int n = ring_dim(p);
  std::vector<const CPoly::Term*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return grlex_greater(a->first, b->first); });
  std::string out;
  for (const auto* t : order) {
    bool neg = false;
    std::string coeff = latex_scalar(t->second, neg);
    const std::string mono = latex_monomial(t->first, p.vars().get(), n);
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (mono.empty()) out += coeff;
    else if (coeff == "1") out += mono;
    else out += coeff + mono;
  }
  return out;
}

std::string latex_factored(const CPoly& p) { return factored(p).text; }

std::string latex_operator(const WeylOperator& op) {
  std::vector<const WeylOperator::Terms::value_type*> order;
  for (const auto& t : op.terms()) order.push_back(&t);
  auto key = [](const DerivIndex& d) {
    const int group = d.order_y() == 0 ? 0 : d.order_x() == 0 ? 1 : 2;
    return std::make_tuple(-static_cast<int>(d.order()), group);
  };
  std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) { return key(a->first) < key(b->first); });
  std::string out;
  for (const auto* t : order) {
    std::string coeff = latex_coefficient(t->second);
    const std::string deriv = latex_derivative(t->first, op.n());
    std::string term;
    if (deriv.empty()) term = coeff;
    else if (coeff == "1") term = deriv;
    else if (coeff == "-1") term = "-" + deriv;
    else term = coeff + deriv;
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace sbdo
