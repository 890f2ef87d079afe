#include "catch_amalgamated.hpp"
#include "g2kit/catalog.hpp"

using namespace g2kit;

namespace {

const BasisCatalog& cat() {
  static const BasisCatalog c = build_catalog();
  return c;
}

ExactScalar rad(int r, Rational q = 1) { return ExactScalar::radical(r, q); }

bool gram_is_two_delta(const std::vector<RepMatrix>& a, const std::vector<RepMatrix>& b, bool same) {
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < b.size(); ++q) {
      const ComplexScalar want = same && p == q ? ComplexScalar(2) : ComplexScalar(0);
      if (!(trace_product(a[p], b[q]) == want)) return false;
    }
  return true;
}

bool traceless_hermitian(const std::vector<RepMatrix>& f) {
  for (const auto& m : f)
    if (!is_hermitian(m) || !m.trace().is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("family sizes and names", "[catalog]") {
  CHECK(cat().b3.size() == 21);
  CHECK(cat().x.size() == 14);
  CHECK(cat().z.size() == 7);
  CHECK(cat().y.size() == 27);
  CHECK(cat().all48().size() == 48);
  CHECK(cat().x_names.front() == "h1");
  CHECK(cat().x_names[2] == "u_1");
  CHECK(cat().x_names[8] == "v_1");
  CHECK(cat().g2_roots.size() == 6);
  CHECK(cat().b3_roots.size() == 9);
}

TEST_CASE("all 48 matrices are traceless hermitian and orthonormal", "[catalog]") {
  CHECK(traceless_hermitian(cat().b3));
  CHECK(traceless_hermitian(cat().all48()));
  CHECK(gram_is_two_delta(cat().b3, cat().b3, true));
  CHECK(gram_is_two_delta(cat().x, cat().x, true));
  CHECK(gram_is_two_delta(cat().z, cat().z, true));
  CHECK(gram_is_two_delta(cat().y, cat().y, true));
  CHECK(gram_is_two_delta(cat().z, cat().x, false));
  CHECK(gram_is_two_delta(cat().y, cat().x, false));
  CHECK(gram_is_two_delta(cat().y, cat().z, false));
}

TEST_CASE("Cartan-Weyl relations of g2", "[catalog]") {
  const auto& roots = cat().g2_roots;
  for (std::size_t al = 0; al < roots.size(); ++al)
    for (std::size_t r = 0; r < 2; ++r) {
      const RepMatrix& em = cat().g2_lower[al];
      CHECK(commutator(cat().g2_cartan[r], em) == -ComplexScalar(roots.vectors[al][r]) * em);
    }
}

TEST_CASE("h1 diagonal and a g2 bracket", "[catalog]") {
  const ExactScalar a = rad(6, Rational(1, 3)), b = rad(6, Rational(1, 6));
  const std::vector<ExactScalar> want{a, b, b, 0, -b, -b, -a};
  for (std::size_t k = 0; k < 7; ++k) CHECK(cat().x[0](k, k) == ComplexScalar(want[k]));
  auto e = [&](const char* l) { return cat().g2_lower[cat().g2_roots.index_of(l)].transpose(); };
  CHECK(commutator(e("12"), e("1")) == ComplexScalar(rad(3, Rational(2, 3))) * e("112"));
}

TEST_CASE("g2 sits inside b3", "[catalog]") {
  CHECK_FALSE(embedding_mismatch(cat()).has_value());
  BasisCatalog broken = cat();
  broken.g2_lower[1] = -broken.g2_lower[1];
  REQUIRE(embedding_mismatch(broken).has_value());
  CHECK(*embedding_mismatch(broken) == 3);
  // every x lies in the real span of the b3 matrices
  for (const auto& x : cat().x) {
    RepMatrix proj(7);
    for (const auto& m : cat().b3) proj += trace_product(x, m).scaled(Rational(1, 2)) * m;
    CHECK(proj == x);
  }
}

TEST_CASE("transposition behaviour", "[catalog]") {
  const RepMatrix& M = cat().M;
  CHECK(M * M == RepMatrix::identity(7));
  for (const auto& x : cat().b3) CHECK(x.transpose() == -(M * x * M));
  for (const auto& y : cat().y) CHECK(y.transpose() == M * y * M);
}

TEST_CASE("z and y diagonals", "[catalog]") {
  const ExactScalar s = rad(3, Rational(1, 3));
  const std::vector<int> z4{1, -1, -1, 0, 1, 1, -1};
  for (std::size_t k = 0; k < 7; ++k) CHECK(cat().z[3](k, k) == ComplexScalar(s.scaled(z4[k])));
  const ExactScalar r21 = rad(21, Rational(1, 21));
  const std::vector<int> y3{1, 1, 1, -6, 1, 1, 1};
  for (std::size_t k = 0; k < 7; ++k) CHECK(cat().y[2](k, k) == ComplexScalar(r21.scaled(y3[k])));
}
