// Command-line front end over the C API.
//   sbdo verify [--n-max N] [--m-max M] [--checks a,b,...] [--jobs J] [--format text|json]
//   sbdo emit --what source|sbdo --n N [--k K] [--m M] [--lambda q|symbolic] [--mu q|symbolic]
//             [--format json|latex|text]
//   sbdo factor --n N ELEMENT
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbdo/sbdo.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

int report_status(sbdo_status st) {
  std::cerr << "error: " << sbdo_last_error() << "\n";
  return st == SBDO_ERR_INVALID_ARGUMENT || st == SBDO_ERR_PARSE ? kUsage : kFail;
}

int print_and_free(char* text) {
  std::fputs(text, stdout);
  sbdo_string_free(text);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry breaking differential operators: verification and emission"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sbdo_version()));

  int n_max = 2, m_max = 2, jobs = 1;
  std::vector<std::string> checks;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--n-max", n_max, "largest dimension, 1..4");
  verify->add_option("--m-max", m_max, "largest m for the SBDO family, 1..3");
  verify->add_option("--checks", checks, std::string("subset of: ") + sbdo_check_names())->delimiter(',');
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  std::string what, lambda = "symbolic", mu = "symbolic", emit_format = "text";
  int n = 1, k = 0, m = 1;
  auto* emit = app.add_subcommand("emit", "print the source operator or an SBDO");
  emit->add_option("--what", what)->required()->check(CLI::IsMember({"source", "sbdo"}));
  emit->add_option("--n", n)->required();
  emit->add_option("--k", k);
  emit->add_option("--m", m);
  emit->add_option("--lambda", lambda, "rational or 'symbolic'");
  emit->add_option("--mu", mu, "rational or 'symbolic'");
  emit->add_option("--format", emit_format)->check(CLI::IsMember({"json", "latex", "text"}));

  int factor_n = 1;
  std::string element;
  auto* factor = app.add_subcommand("factor", "Gelfand-Naimark factors of a group element");
  factor->add_option("--n", factor_n)->required();
  factor->add_option("element", element, "e.g. \"nbar(1,2) * a(2)\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  if (*verify) {
    std::string joined;
    for (const auto& c : checks) joined += (joined.empty() ? "" : ",") + c;
    const sbdo_verify_options opts{n_max, m_max, joined.c_str(), jobs};
    sbdo_report* report = nullptr;
    if (sbdo_status st = sbdo_verify(&opts, &report); st != SBDO_OK) return report_status(st);
    char* text = nullptr;
    sbdo_report_render(report, verify_format == "json" ? SBDO_FORMAT_JSON : SBDO_FORMAT_TEXT, &text);
    print_and_free(text);
    const bool ok = sbdo_report_all_passed(report);
    sbdo_report_free(report);
    return ok ? kPass : kFail;
  }

  if (*emit) {
    sbdo_operator* op = nullptr;
    const sbdo_status st = what == "source" ? sbdo_emit_source(n, lambda.c_str(), mu.c_str(), &op)
                                            : sbdo_emit_sbdo(n, k, m, lambda.c_str(), mu.c_str(), &op);
    if (st != SBDO_OK) return report_status(st);
    const sbdo_format fmt =
        emit_format == "json" ? SBDO_FORMAT_JSON : emit_format == "latex" ? SBDO_FORMAT_LATEX : SBDO_FORMAT_TEXT;
    char* text = nullptr;
    const sbdo_status rs = sbdo_operator_render(op, fmt, &text);
    sbdo_operator_free(op);
    if (rs != SBDO_OK) return report_status(rs);
    return print_and_free(text);
  }

  char* text = nullptr;
  if (sbdo_status st = sbdo_gn_factorize(factor_n, element.c_str(), &text); st != SBDO_OK) return report_status(st);
  print_and_free(text);
  std::fputs("\n", stdout);
  return kPass;
}
