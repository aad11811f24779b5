#include "sbdo/sbdo.h"

#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sbdo/emit.hpp"
#include "sbdo/verify.hpp"

struct sbdo_operator {
  sbdo::WeylOperator op;
  bool is_sbdo;
  int k;
  int m;
  sbdo::ParamValue lambda;
  sbdo::ParamValue mu;
};

struct sbdo_report {
  sbdo::VerifyReport report;
};

namespace {

thread_local std::string last_error;

sbdo_status set_error(sbdo_status code, const std::string& what) {
  last_error = what;
  return code;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
sbdo_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const sbdo::ParseError& e) {
    return set_error(SBDO_ERR_PARSE, e.what());
  } catch (const sbdo::NotInDenseCell& e) {
    return set_error(SBDO_ERR_DOMAIN, e.what());
  } catch (const sbdo::FieldExtensionRequired& e) {
    return set_error(SBDO_ERR_DOMAIN, e.what());
  } catch (const sbdo::ActionUndefined& e) {
    return set_error(SBDO_ERR_DOMAIN, e.what());
  } catch (const sbdo::DivisionByZero& e) {
    return set_error(SBDO_ERR_DOMAIN, e.what());
  } catch (const sbdo::DomainError& e) {
    return set_error(SBDO_ERR_INVALID_ARGUMENT, e.what());
  } catch (const sbdo::ShapeMismatch& e) {
    return set_error(SBDO_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(SBDO_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SBDO_ERR_INTERNAL, "unknown failure");
  }
}

sbdo::ParamValue param(const char* text) { return text ? sbdo::parse_param(text) : std::nullopt; }

void check_n(int n) {
  if (n < 1 || n > 4) throw sbdo::DomainError("n must lie in 1..4");
}

sbdo::EmitFormat to_format(sbdo_format f) {
  switch (f) {
    case SBDO_FORMAT_JSON:
      return sbdo::EmitFormat::Json;
    case SBDO_FORMAT_LATEX:
      return sbdo::EmitFormat::Latex;
    case SBDO_FORMAT_TEXT:
      return sbdo::EmitFormat::Text;
  }
  throw sbdo::DomainError("unknown format");
}

}  // namespace

extern "C" {

const char* sbdo_version(void) { return "1.0.0"; }

const char* sbdo_last_error(void) { return last_error.c_str(); }

void sbdo_string_free(char* s) { std::free(s); }

sbdo_status sbdo_emit_source(int n, const char* lambda, const char* mu, sbdo_operator** out) {
  return guarded([&] {
    if (!out) return set_error(SBDO_ERR_INVALID_ARGUMENT, "null output pointer");
    check_n(n);
    const auto l = param(lambda), m = param(mu);
    *out = new sbdo_operator{sbdo::emitted_source(n, l, m), false, 0, 1, l, m};
    return SBDO_OK;
  });
}

sbdo_status sbdo_emit_sbdo(int n, int k, int m, const char* lambda, const char* mu, sbdo_operator** out) {
  return guarded([&] {
    if (!out) return set_error(SBDO_ERR_INVALID_ARGUMENT, "null output pointer");
    check_n(n);
    if (k < 0 || k > n) return set_error(SBDO_ERR_INVALID_ARGUMENT, "k must lie in 0..n");
    if (m < 1 || m > 3) return set_error(SBDO_ERR_INVALID_ARGUMENT, "m must lie in 1..3");
    const auto l = param(lambda), u = param(mu);
    *out = new sbdo_operator{sbdo::emitted_sbdo(n, k, m, l, u), true, k, m, l, u};
    return SBDO_OK;
  });
}

sbdo_status sbdo_operator_render(const sbdo_operator* op, sbdo_format format, char** out) {
  return guarded([&] {
    if (!op || !out) return set_error(SBDO_ERR_INVALID_ARGUMENT, "null argument");
    const auto fmt = to_format(format);
    *out = dup(op->is_sbdo ? sbdo::render_sbdo(op->op, op->k, op->m, op->lambda, op->mu, fmt)
                           : sbdo::render_source(op->op, op->lambda, op->mu, fmt));
    return SBDO_OK;
  });
}

void sbdo_operator_free(sbdo_operator* op) { delete op; }

sbdo_status sbdo_verify(const sbdo_verify_options* options, sbdo_report** out) {
  return guarded([&] {
    if (!options || !out) return set_error(SBDO_ERR_INVALID_ARGUMENT, "null argument");
    sbdo::VerifyOptions o;
    o.n_max = options->n_max;
    o.m_max = options->m_max;
    o.jobs = options->jobs;
    if (options->checks) {
      std::stringstream ss(options->checks);
      for (std::string name; std::getline(ss, name, ',');)
        if (!name.empty()) o.checks.push_back(name);
    }
    *out = new sbdo_report{sbdo::run_verification(o)};
    return SBDO_OK;
  });
}

sbdo_status sbdo_report_render(const sbdo_report* report, sbdo_format format, char** out) {
  return guarded([&] {
    if (!report || !out) return set_error(SBDO_ERR_INVALID_ARGUMENT, "null argument");
    if (format == SBDO_FORMAT_JSON) *out = dup(report->report.json());
    else if (format == SBDO_FORMAT_TEXT) *out = dup(report->report.text());
    else return set_error(SBDO_ERR_INVALID_ARGUMENT, "reports render as json or text");
    return SBDO_OK;
  });
}

int sbdo_report_all_passed(const sbdo_report* report) { return report && report->report.all_passed() ? 1 : 0; }

size_t sbdo_report_size(const sbdo_report* report) { return report ? report->report.records.size() : 0; }

void sbdo_report_free(sbdo_report* report) { delete report; }

const char* sbdo_check_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : sbdo::check_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }();
  return names.c_str();
}

sbdo_status sbdo_gn_factorize(int n, const char* element, char** out) {
  return guarded([&] {
    if (!element || !out) return set_error(SBDO_ERR_INVALID_ARGUMENT, "null argument");
    check_n(n);
    const auto f = sbdo::gn_factorize(sbdo::parse_group_element(n, element), n);
    nlohmann::ordered_json j;
    auto vec = [](const std::vector<sbdo::Rational>& v) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const auto& c : v) a.push_back(c.str());
      return a;
    };
    j["v"] = vec(f.v);
    j["m"] = f.m.str();
    j["r"] = f.r.str();
    j["u"] = vec(f.u);
    *out = dup(j.dump());
    return SBDO_OK;
  });
}

}  // extern "C"
