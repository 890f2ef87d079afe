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

ExactScalar q(long long p, long long d = 1) { return ExactScalar(Rational(p, d)); }

}  // namespace

TEST_CASE("irrep dimensions and quadratic Casimirs", "[casimir]") {
  struct Row {
    unsigned l, m;
    long dim;
    Rational c2;
  };
  const std::vector<Row> rows = {{0, 0, 1, Rational(0)},       {0, 1, 7, Rational(4)},   {1, 0, 14, Rational(8)},
                                 {0, 2, 27, Rational(28, 3)}, {2, 0, 77, Rational(20)}, {0, 3, 77, Rational(16)},
                                 {1, 1, 64, Rational(14)}};
  for (const auto& r : rows) {
    INFO(r.l << "," << r.m);
    CHECK(g2_dim(r.l, r.m) == r.dim);
    CHECK(g2_c2(r.l, r.m) == r.c2);
  }
}

TEST_CASE("matrix Casimir sums match the table", "[casimir]") {
  const auto& d = ctx().derived();
  CHECK(casimir_sum(ctx().catalog().x) == q(4));
  CHECK(casimir_sum(d.ad) == q(8));
  CHECK(casimir_sum(d.Phi) == q(28, 3));
  CHECK(casimir_sum(d.H) == q(4));
}

TEST_CASE("projectors on 7x7 and 14x14", "[casimir]") {
  for (const ProjectorSet* ps : {&ctx().projectors7(), &ctx().projectors14()}) {
    const std::size_t n2 = static_cast<std::size_t>(ps->n * ps->n);
    PairMatrix sum(n2);
    for (std::size_t k = 0; k < ps->P.size(); ++k) {
      INFO(ps->n << " " << ps->labels[k]);
      CHECK(ps->P[k].trace() == ExactScalar(ps->dims[k]));
      CHECK(is_idempotent(ps->P[k]));
      for (std::size_t m = k + 1; m < ps->P.size(); ++m) CHECK((ps->P[k] * ps->P[m]).is_zero());
      sum += ps->P[k];
    }
    CHECK(sum == PairMatrix::identity(n2));
  }
}

TEST_CASE("Lambda eigenvalues are (c2 - 16)/2", "[casimir]") {
  const auto& ps = ctx().projectors14();
  const std::vector<std::pair<std::string, std::pair<unsigned, unsigned>>> irreps = {
      {"1", {0, 0}}, {"27", {0, 2}}, {"77", {2, 0}}, {"14", {1, 0}}, {"77'", {0, 3}}};
  for (const auto& [label, lm] : irreps) {
    INFO(label);
    const ExactScalar lambda((g2_c2(lm.first, lm.second) - Rational(16)) * Rational(1, 2));
    const PairMatrix& P = ps.get(label);
    CHECK(ps.Lambda * P == lambda * P);
  }
}

TEST_CASE("quartic Casimir is c2^2 + 28/3 c2", "[casimir]") {
  const auto& x = ctx().catalog().x;
  const auto& d = ctx().derived();
  CHECK(quartic_casimir(x, x) == q(160, 3));
  CHECK(quartic_casimir(x, d.ad) == q(416, 3));
  CHECK(quartic_casimir(x, d.Phi) == q(1568, 9));
}

TEST_CASE("adjoint bundle", "[casimir]") {
  const AdjointBundle<ExactScalar> zero(ctx().sparse(), std::vector<ExactScalar>(14));
  CHECK(zero.C2.is_zero());
  CHECK(zero.C6.is_zero());
  for (const auto& b : zero.B) CHECK(b.is_zero());
  CHECK_THROWS_AS(AdjointBundle<ExactScalar>(ctx().sparse(), std::vector<ExactScalar>(3)), DimensionMismatch);

  const auto v = sample_vectors(3);
  CHECK(v == sample_vectors(3));
  const AdjointBundle<ExactScalar> b(ctx().sparse(), v[0]);
  ExactScalar c2;
  for (const auto& a : v[0]) c2 += a * a;
  CHECK(b.C2 == c2);
  const RepMatrix A = combine_family(ctx().catalog().x, v[0]);
  CHECK(A.trace().is_zero());
  CHECK(trace_product(A, A) == ComplexScalar(c2.scaled(2)));
}

TEST_CASE("Cartan slice polynomials", "[casimir]") {
  const auto& sb = ctx().slice_bundle();
  const SlicePoly a = SlicePoly::var_a(), b = SlicePoly::var_b();
  CHECK(sb.C2 == a * a + b * b);
  const Rational one(1), zero(0);
  CHECK(ctx().slice_traces_A()[6].evaluate(one, zero) == q(11, 18));
  CHECK(sb.C6.evaluate(one, zero) == q(284, 441));
  CHECK(ctx().slice_traces_B()[2].evaluate(one, zero) == q(8));
  CHECK(ctx().slice_traces_B()[6].evaluate(one, zero) == q(127, 9));
  // tr A^2 = 2 C2 in the defining representation
  CHECK(ctx().slice_traces_A()[2] == (a * a + b * b).scaled(Rational(2)));
  // the slice polynomial agrees with a direct evaluation at a rational point
  const std::vector<ExactScalar> pt{q(2, 3), q(-1, 2), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  const AdjointBundle<ExactScalar> direct(ctx().sparse(), pt);
  CHECK(sb.C6.evaluate(Rational(2, 3), Rational(-1, 2)) == direct.C6);
  CHECK(sb.DD.evaluate(Rational(2, 3), Rational(-1, 2)) == direct.DD);
}
