#pragma once

#include <optional>
#include <string>

#include "sbdo/source.hpp"

namespace sbdo {

enum class EmitFormat { Json, Latex, Text };

// Parses "json", "latex" or "text"; anything else raises ParseError.
EmitFormat parse_emit_format(const std::string& name);

// Parameter value: a rational, or nullopt for the formal indeterminate.
using ParamValue = std::optional<Rational>;
// Parses a rational or the word "symbolic".
ParamValue parse_param(const std::string& text);

// E_{lambda,mu} of dimension n with lambda, mu specialized where given.
WeylOperator emitted_source(int n, const ParamValue& lambda, const ParamValue& mu);
// B^(m)_{k; lambda, mu}, same convention.
WeylOperator emitted_sbdo(int n, int k, int m, const ParamValue& lambda, const ParamValue& mu);

// [{"dx": [..], "dy": [..], "coeff": [[..], ..]}, ..] in graded lex order,
// entries as expanded polynomial strings.
std::string weyl_json(const WeylOperator& op, int indent = -1);

std::string render_source(const WeylOperator& op, const ParamValue& lambda, const ParamValue& mu, EmitFormat fmt);
std::string render_sbdo(const WeylOperator& op, int k, int m, const ParamValue& lambda, const ParamValue& mu,
                        EmitFormat fmt);

// LaTeX for an operator: pure x derivatives first, then pure y, then mixed,
// highest order first; scalar coefficients factored over linear factors.
std::string latex_operator(const WeylOperator& op);
// LaTeX for a polynomial with rational or Gaussian coefficients.
std::string latex_poly(const CPoly& p);
// Content times linear factors times the remaining cofactor, when the
// polynomial has real coefficients; otherwise the expanded form.
std::string latex_factored(const CPoly& p);

}  // namespace sbdo
