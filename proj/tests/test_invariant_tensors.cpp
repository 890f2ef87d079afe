#include <algorithm>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "g2kit/catalog.hpp"
#include "g2kit/invariants.hpp"
#include "g2kit/tensor_io.hpp"

using namespace g2kit;

namespace {

const BasisCatalog& cat() {
  static const BasisCatalog c = build_catalog();
  return c;
}
const TensorStore& store() {
  static const TensorStore s = extract_tensors(cat());
  return s;
}
const DerivedMatrices& derived() {
  static const DerivedMatrices d = build_derived_matrices(store());
  return d;
}

ExactScalar rad(int r, Rational q = 1) { return ExactScalar::radical(r, q); }

}  // namespace

TEST_CASE("octonion tensor", "[tensors]") {
  const Tensor psi = build_psi();
  CHECK(psi.at({0, 3, 6}) == ExactScalar(1));
  CHECK(psi.at({3, 0, 6}) == ExactScalar(-1));
  CHECK(psi.at({0, 1, 3}).is_zero());
  CHECK(psi.at({0, 1, 2}) == ExactScalar(1));
  CHECK(psi.count_nonzero() == 42);
  CHECK(psi == store().psi());
}

TEST_CASE("nonzero counts of the extracted tensors", "[tensors]") {
  const std::vector<std::pair<std::string, std::size_t>> counts = {
      {"c_ijk", 180},      {"h_iab", 70},       {"c_abc", 42},          {"psi_abc", 42},
      {"d_ij_alpha", 326}, {"d_ab_alpha", 89},  {"d_ia_alpha", 206},    {"phi_i_alpha_beta", 472},
      {"t_a_alpha_beta", 310}, {"d_alpha_beta_gamma", 623}};
  REQUIRE(TensorStore::names().size() == counts.size());
  for (const auto& [name, n] : counts) {
    INFO(name);
    CHECK(store().get(name).count_nonzero() == n);
  }
}

TEST_CASE("c_ijk agrees with brackets of the defining matrices", "[tensors]") {
  // [x_i, x_j] = i c_ijk x_k and tr(x_k x_l) = 2 delta_kl
  const ComplexScalar minus_half_i(ExactScalar{}, ExactScalar(Rational(-1, 2)));
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) {
      const RepMatrix br = commutator(cat().x[static_cast<std::size_t>(i)], cat().x[static_cast<std::size_t>(j)]);
      for (int k = 0; k < 14; ++k)
        CHECK(minus_half_i * trace_product(br, cat().x[static_cast<std::size_t>(k)]) ==
              ComplexScalar(store().c_ijk().at({i, j, k})));
    }
}

TEST_CASE("c_abc is psi over sqrt3 and tensors are real with fixed symmetries", "[tensors]") {
  CHECK(store().c_abc() == store().psi().scaled(rad(3, Rational(1, 3))));
  CHECK(store().c_ijk().permuted({1, 0, 2}) == -store().c_ijk());
  CHECK(store().c_ijk().permuted({0, 2, 1}) == -store().c_ijk());
  CHECK(store().d_ij().permuted({1, 0, 2}) == store().d_ij());
  CHECK(store().d_ab().permuted({1, 0, 2}) == store().d_ab());
  CHECK(store().d_abg().permuted({1, 0, 2}) == store().d_abg());
  CHECK(store().d_abg().permuted({0, 2, 1}) == store().d_abg());
}

TEST_CASE("h_iab h_jab = 2 delta_ij", "[tensors]") {
  const Tensor& h = store().h_iab();
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) {
      ExactScalar s;
      for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) s += h.at({i, a, b}) * h.at({j, a, b});
      CHECK(s == ExactScalar(i == j ? 2 : 0));
    }
}

TEST_CASE("derived matrices", "[tensors]") {
  const auto& d = derived();
  CHECK(d.h_sign == -1);
  const ComplexScalar i = ComplexScalar::i();
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b), uc = static_cast<std::size_t>(c);
        CHECK((d.C[ua] * d.C[ub] * d.C[uc]).trace() == i * ComplexScalar(store().c_abc().at({a, b, c})));
      }
  for (int k = 0; k < 14; ++k)
    for (int a = 0; a < 7; ++a) {
      RepMatrix rhs(7);
      for (int b = 0; b < 7; ++b)
        rhs += (i * ComplexScalar(store().h_iab().at({k, a, b}))) * d.C[static_cast<std::size_t>(b)];
      CHECK(commutator(d.H[static_cast<std::size_t>(k)], d.C[static_cast<std::size_t>(a)]) == rhs);
    }
  for (int al = 0; al < 27; ++al)
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b)
        CHECK(d.Y[static_cast<std::size_t>(al)](static_cast<std::size_t>(a), static_cast<std::size_t>(b)) ==
              ComplexScalar(store().d_ab().at({a, b, al}).scaled(-3)));
  CHECK(d.ad.size() == 14);
  CHECK(d.ad[0].size() == 14);
  CHECK(d.Phi[0].size() == 27);
}

TEST_CASE("tensor text format round-trips", "[tensor-io]") {
  for (const auto& name : TensorStore::names()) {
    INFO(name);
    std::istringstream in(tensor_to_string(store().get(name)));
    const Tensor back = read_tensor(in);
    CHECK(back == store().get(name));
    CHECK(back.name() == name);
  }
  const std::string text = tensor_to_string(store().d_abg());
  CHECK(text.rfind("# g2kit tensor v1\nname=d_alpha_beta_gamma rank=3 dims=27,27,27 indexbase=1\n", 0) == 0);
  const std::string psi = tensor_to_string(store().psi());
  CHECK(std::count(psi.begin(), psi.end(), '\n') == 44);
}

TEST_CASE("malformed tensor files name the line and field", "[tensor-io]") {
  const std::string head = "# g2kit tensor v1\nname=t rank=2 dims=3,3 indexbase=1\n";
  const std::string one = "(1,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)";
  auto fails_at = [](const std::string& text, std::size_t line, const std::string& field) {
    std::istringstream in(text);
    try {
      read_tensor(in);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.field() == field);
      return;
    }
    FAIL("no ParseError for: " << text);
  };
  fails_at("# wrong\n", 1, "magic");
  fails_at("# g2kit tensor v1\nname=t rank=2 dims=3 indexbase=1\n", 2, "dims");
  fails_at(head + "1 4 " + one + "\n", 3, "index 2");
  fails_at(head + "1 1 " + one + "\n2 x " + one + "\n", 4, "index 2");
  fails_at(head + "2 1 " + one + "\n1 1 " + one + "\n", 4, "index");
  fails_at(head + "1 1 (1,0|0)\n", 3, "scalar");
  fails_at(head + "1 1 (0,0,0,0,0,0,0,0|1,0,0,0,0,0,0,0)\n", 3, "scalar");
}
