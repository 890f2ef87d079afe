#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "g2kit/error.hpp"
#include "g2kit/report.hpp"
#include "g2kit/suites_algebra.hpp"
#include "g2kit/suites_structure.hpp"
#include "g2kit/verifier.hpp"

namespace g2kit {

/// Suite ids in the order `all` runs them.
inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"basis",        "octonion",     "product-law", "bilinear", "lemmas",
                                             "completeness", "second-class", "trilinear",   "casimir",  "invariants"};
  return n;
}

inline std::vector<IdentityCase> suite_cases(const std::string& name) {
  if (name == "basis") return cases::basis_cases();
  if (name == "octonion") return cases::octonion_cases();
  if (name == "product-law") return cases::product_law_cases();
  if (name == "bilinear") return cases::bilinear_cases();
  if (name == "lemmas") return cases::lemma_cases();
  if (name == "completeness") return cases::completeness_cases();
  if (name == "second-class") return cases::second_class_cases();
  if (name == "trilinear") return cases::trilinear_cases();
  if (name == "casimir") return cases::casimir_cases();
  if (name == "invariants") return cases::invariant_cases();
  throw UsageError("unknown suite '" + name + "'");
}

/// Runs one suite, or every suite for "all".
inline VerificationReport run_suite(const VerifierContext& ctx, const std::string& name, unsigned workers = 1) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = name;
  const std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
  for (const auto& n : names) {
    auto cases = suite_cases(n);
    auto res = run_cases(ctx, n, cases, workers);
    rep.cases.insert(rep.cases.end(), res.begin(), res.end());
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace g2kit
