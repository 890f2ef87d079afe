#include <sstream>

#include "catch_amalgamated.hpp"
#include "g2kit/matrix.hpp"
#include "g2kit/poly.hpp"

using namespace g2kit;

namespace {

ExactScalar rad(int r, Rational q = 1) { return ExactScalar::radical(r, q); }

RepMatrix sample(std::size_t n, int seed) {
  RepMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const int v = static_cast<int>((r * 7 + c * 3 + static_cast<std::size_t>(seed)) % 5) - 2;
      if (v != 0) m(r, c) = ComplexScalar(ExactScalar(v), (r + c) % 2 ? rad(2, v) : ExactScalar{});
    }
  return m;
}

}  // namespace

TEST_CASE("basic matrix algebra", "[matrix]") {
  const RepMatrix a = sample(7, 1), b = sample(7, 2);
  CHECK(commutator(a, a).is_zero());
  CHECK(commutator(a, b) == -commutator(b, a));
  CHECK(RepMatrix::identity(7).trace() == ComplexScalar(7));
  CHECK(dagger(dagger(a)) == a);
  CHECK(dagger(a * b) == dagger(b) * dagger(a));
  CHECK(trace_product(a, b) == (a * b).trace());
  CHECK(is_hermitian(a + dagger(a)));
  CHECK(power(a, 3) == a * a * a);
  CHECK_THROWS_AS(a * sample(5, 1), DimensionMismatch);
}

TEST_CASE("kronecker products and partial traces", "[matrix]") {
  CHECK(kron(RepMatrix::identity(2), RepMatrix::identity(3)) == RepMatrix::identity(6));
  const RepMatrix a = sample(3, 4), b = sample(4, 5);
  CHECK(kron(a, b).trace() == a.trace() * b.trace());
  CHECK(partial_trace_first(kron(a, b), 3) == ComplexScalar(a.trace()) * b);
  const RepMatrix x = sample(6, 3), y = sample(6, 6);
  CHECK(partial_trace_first_of_product(x, y, 2) == partial_trace_first(x * y, 2));
  CHECK_THROWS_AS(partial_trace_first(x, 4), DimensionMismatch);
}

TEST_CASE("characteristic polynomials", "[poly]") {
  const UniPoly id2 = char_poly(RepMatrix::identity(2));
  CHECK(id2.coefficients() == std::vector<ExactScalar>{1, -2, 1});
  const UniPoly zero7 = char_poly(RepMatrix(7));
  CHECK(zero7.degree() == 7);
  for (int k = 0; k < 7; ++k) CHECK(zero7.coefficient(static_cast<std::size_t>(k)).is_zero());

  // eigenvalues +-sqrt(2/3), +-1/sqrt6 (twice), 0
  const ExactScalar c = rad(6, Rational(1, 3)), s = rad(6, Rational(1, 6));
  const RepMatrix d = RepMatrix::diagonal({ComplexScalar(c), ComplexScalar(s), ComplexScalar(s), ComplexScalar(0),
                                           ComplexScalar(-s), ComplexScalar(-s), ComplexScalar(-c)});
  const UniPoly p = char_poly(d);
  CHECK(p.coefficients() ==
        std::vector<ExactScalar>{0, ExactScalar(Rational(-1, 54)), 0, ExactScalar(Rational(1, 4)), 0, -1, 0, 1});
  CHECK(p.evaluate(d).is_zero());
  CHECK(p.evaluate(c).is_zero());
  CHECK(p.str().rfind("t^0 (0,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)\nt^1 (-1/54,", 0) == 0);
}

TEST_CASE("Cayley-Hamilton on a hermitian matrix", "[poly]") {
  const RepMatrix a = sample(5, 7);
  const RepMatrix h = a + dagger(a);
  CHECK(char_poly(h).evaluate(h).is_zero());
  CHECK_THROWS_AS(char_poly(ComplexScalar::i() * RepMatrix::identity(3)), ConsistencyError);
}

TEST_CASE("polynomials in two variables", "[poly]") {
  const SlicePoly a = SlicePoly::var_a(), b = SlicePoly::var_b();
  const SlicePoly p = (a * a - b * b) * (a * a + b * b);
  CHECK(p == a * a * a * a - b * b * b * b);
  CHECK(p.total_degree() == 4);
  CHECK(p.evaluate(Rational(2), Rational(1)) == ExactScalar(15));
  CHECK(p.pretty() == "a^4 - b^4");
  const SlicePoly q = (a * a - b * b).scaled(rad(6, Rational(1, 3)));
  CHECK(q.pretty() == "1/3*sqrt6*a^2 - 1/3*sqrt6*b^2");
  CHECK((p - p).is_zero());
}

TEST_CASE("matrix dump round-trips", "[matrix]") {
  const RepMatrix a = sample(7, 9);
  std::istringstream in("# first\n" + matrix_to_string(a) + "\n# second\n" + matrix_to_string(RepMatrix::identity(3)));
  std::vector<std::string> names;
  const auto ms = read_matrices(in, &names);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0] == a);
  CHECK(ms[1] == RepMatrix::identity(3));
  CHECK(names == std::vector<std::string>{"first", "second"});
  std::istringstream bad("matrix n=2\n1 3 (1,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)\n");
  CHECK_THROWS_AS(read_matrices(bad), ParseError);
}
