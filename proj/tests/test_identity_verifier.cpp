#include "catch_amalgamated.hpp"
#include "g2kit/g2kit.hpp"

using namespace g2kit;

namespace {

VerifierContext& ctx() {
  static VerifierContext c = [] {
    BasisCatalog cat = build_catalog();
    TensorStore s = extract_tensors(cat);
    return VerifierContext(std::move(cat), std::move(s));
  }();
  return c;
}

}  // namespace

TEST_CASE("octonion suite passes", "[verifier]") {
  const VerificationReport rep = run_suite(ctx(), "octonion", 1);
  CHECK(rep.ok());
  CHECK(rep.cases.size() == 8);
  const CaseResult* jac = rep.find("psi-jacobi");
  REQUIRE(jac != nullptr);
  CHECK(jac->ok());
  CHECK_FALSE(jac->tuple.empty());
}

TEST_CASE("a corrupted psi is caught with a counterexample", "[verifier]") {
  BasisCatalog cat = build_catalog();
  TensorStore s = extract_tensors(cat);
  Tensor& psi = s.get("psi_abc");
  const std::vector<std::vector<int>> perms = {{2, 5, 6}, {5, 6, 2}, {6, 2, 5}, {5, 2, 6}, {2, 6, 5}, {6, 5, 2}};
  for (std::size_t k = 0; k < perms.size(); ++k) psi.at(perms[k]) = -psi.at(perms[k]);
  REQUIRE(psi.at({2, 5, 6}) == ExactScalar(-1));
  VerifierContext bad(std::move(cat), std::move(s));
  const auto cases = suite_cases("octonion");
  const auto results = run_cases(bad, "octonion", cases, 1);
  const auto it = std::find_if(results.begin(), results.end(), [](const CaseResult& r) { return r.id == "A1.2"; });
  REQUIRE(it != results.end());
  CHECK_FALSE(it->ok());
  CHECK(it->tuple.front() == '(');
  CHECK(it->lhs != it->rhs);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.ok() ? 0 : 1;
  CHECK(failed >= 2);
}

TEST_CASE("symmetrization matches a brute-force average", "[tensor]") {
  const Tensor dd = delta_product(3, "ab,cd");
  const Tensor sym = symmetrize(dd);
  CHECK(sym == sym_delta2(3));
  CHECK(sym.at({0, 0, 0, 0}) == ExactScalar(1));
  CHECK(sym.at({0, 0, 1, 1}) == ExactScalar(Rational(1, 3)));
  CHECK(sym.at({0, 1, 0, 1}) == ExactScalar(Rational(1, 3)));
  CHECK(sym.at({0, 1, 1, 2}).is_zero());

  Tensor t("t", {3, 3, 3});
  t.at({0, 1, 2}) = 6;
  t.at({1, 1, 0}) = 3;
  const Tensor s = symmetrize(t);
  std::vector<int> p{0, 1, 2};
  Tensor brute("t", {3, 3, 3});
  do brute += t.permuted(p).scaled(Rational(1, 6));
  while (std::next_permutation(p.begin(), p.end()));
  CHECK(s == brute);
  CHECK(antisymmetrize(t, {0, 1, 2}).at({2, 1, 0}) == ExactScalar(-1));
}

TEST_CASE("contraction", "[tensor]") {
  Tensor a("a", {2, 3});
  a.at({0, 0}) = 1;
  a.at({1, 2}) = 2;
  a.at({0, 2}) = -1;
  const Tensor aat = contract("ik,jk->ij", {a, a});
  CHECK(aat.at({0, 0}) == ExactScalar(2));
  CHECK(aat.at({0, 1}) == ExactScalar(-2));
  CHECK(aat.at({1, 1}) == ExactScalar(4));
  const Tensor d5 = Tensor::delta(5);
  const Tensor tr = contract("ii->", {d5});
  CHECK(tr.flat(0) == ExactScalar(5));
  const Tensor rows = contract("ik->i", {a}), cols = contract("ik->k", {a});
  const Tensor outer = contract("i,j->ij", {rows, cols});
  CHECK(outer.at({1, 2}) == ExactScalar(2));
}

TEST_CASE("quartic ad trace identity", "[verifier]") {
  const auto cases = suite_cases("second-class");
  const auto it = std::find_if(cases.begin(), cases.end(), [](const IdentityCase& c) { return c.id == "27.21"; });
  REQUIRE(it != cases.end());
  CHECK(it->check(ctx()).ok());
}

TEST_CASE("reports do not depend on the worker count", "[verifier]") {
  const std::string one = run_suite(ctx(), "bilinear", 1).str();
  const std::string three = run_suite(ctx(), "bilinear", 3).str();
  CHECK(one == three);
  CHECK(one.find("SUMMARY suite=bilinear") != std::string::npos);
  CHECK(one.find("FAIL") == std::string::npos);
}

TEST_CASE("unknown suites are rejected", "[verifier]") {
  CHECK_THROWS_AS(suite_cases("nope"), UsageError);
  CHECK_THROWS_AS(run_suite(ctx(), "nope", 1), UsageError);
  CHECK(suite_names().size() == 10);
}
