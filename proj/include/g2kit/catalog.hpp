#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "g2kit/error.hpp"
#include "g2kit/matrix.hpp"
#include "g2kit/roots.hpp"
#include "g2kit/scalar.hpp"

namespace g2kit {

/// One lower-triangle entry (1-based row, column, value) of a lowering operator.
struct Placement {
  int row;
  int col;
  ExactScalar value;
};

/// Every 7x7 matrix family with its fixed index order.
struct BasisCatalog {
  // b3 defining representation: k1..k3, the nine u, the nine v
  std::vector<RepMatrix> b3;
  std::vector<std::string> b3_names;
  std::vector<RepMatrix> b3_cartan;  // k1, k2, k3
  std::vector<RepMatrix> b3_lower;   // eps_{-alpha} in root order
  RootSystemData b3_roots;

  // g2 defining representation: h1, h2, the six u, the six v
  std::vector<RepMatrix> x;
  std::vector<std::string> x_names;
  std::vector<RepMatrix> g2_cartan;  // h1, h2
  std::vector<RepMatrix> g2_lower;   // e_{-alpha} in root order
  RootSystemData g2_roots;

  std::vector<RepMatrix> z;  // complement of g2 in b3
  std::vector<std::string> z_names;
  std::vector<RepMatrix> y;  // complement of b3 in a6
  std::vector<std::string> y_names;

  RepMatrix M;  // ones on the antidiagonal
  ExactScalar c;  // sqrt(2/3)
  ExactScalar s;  // sqrt(1/3)

  /// x, z, y concatenated (48 matrices).
  std::vector<RepMatrix> all48() const {
    std::vector<RepMatrix> v = x;
    v.insert(v.end(), z.begin(), z.end());
    v.insert(v.end(), y.begin(), y.end());
    return v;
  }
};

namespace detail {

inline RepMatrix lower_from(const std::vector<Placement>& entries) {
  RepMatrix m(7);
  for (const auto& p : entries) {
    if (p.row <= p.col) throw Error("placement must lie below the diagonal");
    m(p.row - 1, p.col - 1) = ComplexScalar(p.value);
  }
  return m;
}

inline RepMatrix real_diag(const std::vector<ExactScalar>& d) {
  std::vector<ComplexScalar> c(d.begin(), d.end());
  return RepMatrix::diagonal(c);
}

/// u = (e+ + e-)/sqrt2 and v = -i (e+ - e-)/sqrt2 with e+ the transpose of e-.
inline std::pair<RepMatrix, RepMatrix> uv_pair(const RepMatrix& e_minus) {
  RepMatrix e_plus = e_minus.transpose();
  ComplexScalar inv_sqrt2(ExactScalar::radical(2, Rational(1, 2)));
  RepMatrix u = inv_sqrt2 * (e_plus + e_minus);
  RepMatrix v = (inv_sqrt2 * (e_plus - e_minus));
  v = ComplexScalar(ExactScalar{}, ExactScalar(-1)) * v;
  return {u, v};
}

inline RepMatrix combine(const std::vector<std::pair<ExactScalar, const RepMatrix*>>& terms) {
  RepMatrix r(7);
  for (const auto& [coef, m] : terms) r += ComplexScalar(coef) * *m;
  return r;
}

}  // namespace detail

/// Index (h1, h2, then the six lowering operators) of the first g2 generator
/// that differs from its b3 combination, if any.
inline std::optional<std::size_t> embedding_mismatch(const BasisCatalog& cat) {
  const ExactScalar& s = cat.s;
  const ExactScalar& c = cat.c;
  const ExactScalar r6 = ExactScalar::radical(6, Rational(1, 6));
  const ExactScalar r2 = ExactScalar::radical(2, Rational(1, 2));
  const auto& k = cat.b3_cartan;
  const auto& e = cat.b3_lower;
  auto b = [&](const char* label) { return &e[cat.b3_roots.index_of(label)]; };
  std::vector<std::pair<RepMatrix, RepMatrix>> expected = {
      {cat.g2_cartan[0], detail::combine({{r6.scaled(2), &k[0]}, {r6, &k[1]}, {r6, &k[2]}})},
      {cat.g2_cartan[1], detail::combine({{r2, &k[1]}, {-r2, &k[2]}})},
      {cat.g2_lower[0], detail::combine({{s, b("1")}, {c, b("3")}})},
      {cat.g2_lower[1], *b("2")},
      {cat.g2_lower[2], detail::combine({{s, b("12")}, {-c, b("23")}})},
      {cat.g2_lower[3], detail::combine({{c, b("123")}, {s, b("233")}})},
      {cat.g2_lower[4], *b("1233")},
      {cat.g2_lower[5], *b("12233")},
  };
  for (std::size_t n = 0; n < expected.size(); ++n)
    if (!(expected[n].first == expected[n].second)) return n;
  return std::nullopt;
}

/// Builds every family and enforces the embedding of g2 in b3; throws
/// ConsistencyError if any g2 generator differs from its b3 combination.
inline BasisCatalog build_catalog() {
  using detail::lower_from;
  BasisCatalog cat;
  const ExactScalar s = ExactScalar::radical(3, Rational(1, 3));  // sqrt(1/3)
  const ExactScalar c = ExactScalar::radical(6, Rational(1, 3));  // sqrt(2/3)
  const ExactScalar r6 = ExactScalar::radical(6, Rational(1, 6));  // 1/sqrt6
  const ExactScalar r2 = ExactScalar::radical(2, Rational(1, 2));  // 1/sqrt2
  const ExactScalar sqrt2 = ExactScalar::radical(2);
  cat.s = s;
  cat.c = c;

  // b3
  cat.b3_roots = b3_roots();
  cat.b3_cartan = {detail::real_diag({1, 0, 0, 0, 0, 0, -1}), detail::real_diag({0, 1, 0, 0, 0, -1, 0}),
                   detail::real_diag({0, 0, 1, 0, -1, 0, 0})};
  const std::vector<std::vector<Placement>> b3_table = {
      {{2, 1, 1}, {7, 6, -1}},  // 1
      {{3, 2, 1}, {6, 5, -1}},  // 2
      {{4, 3, 1}, {5, 4, -1}},  // 3
      {{3, 1, 1}, {7, 5, -1}},  // 12
      {{4, 2, 1}, {6, 4, -1}},  // 23
      {{4, 1, 1}, {7, 4, -1}},  // 123
      {{5, 2, 1}, {6, 3, -1}},  // 233
      {{5, 1, 1}, {7, 3, -1}},  // 1233
      {{6, 1, 1}, {7, 2, -1}},  // 12233
  };
  for (const auto& t : b3_table) cat.b3_lower.push_back(lower_from(t));
  {
    std::vector<RepMatrix> us, vs;
    for (const auto& e : cat.b3_lower) {
      auto [u, v] = detail::uv_pair(e);
      us.push_back(u);
      vs.push_back(v);
    }
    cat.b3 = cat.b3_cartan;
    cat.b3.insert(cat.b3.end(), us.begin(), us.end());
    cat.b3.insert(cat.b3.end(), vs.begin(), vs.end());
    cat.b3_names = {"k1", "k2", "k3"};
    for (const char* p : {"u", "v"})
      for (const auto& l : cat.b3_roots.labels) cat.b3_names.push_back(std::string(p) + "_" + l);
  }

  // g2
  cat.g2_roots = g2_roots();
  cat.g2_cartan = {detail::real_diag({c, r6, r6, 0, -r6, -r6, -c}), detail::real_diag({0, r2, -r2, 0, r2, -r2, 0})};
  const std::vector<std::vector<Placement>> g2_table = {
      {{2, 1, s}, {4, 3, c}, {5, 4, -c}, {7, 6, -s}},   // 1
      {{3, 2, 1}, {6, 5, -1}},                          // 2
      {{3, 1, s}, {4, 2, -c}, {6, 4, c}, {7, 5, -s}},   // 12
      {{4, 1, c}, {5, 2, s}, {6, 3, -s}, {7, 4, -c}},   // 112
      {{5, 1, 1}, {7, 3, -1}},                          // 1112
      {{6, 1, 1}, {7, 2, -1}},                          // 11122
  };
  for (const auto& t : g2_table) cat.g2_lower.push_back(lower_from(t));
  {
    std::vector<RepMatrix> us, vs;
    for (const auto& e : cat.g2_lower) {
      auto [u, v] = detail::uv_pair(e);
      us.push_back(u);
      vs.push_back(v);
    }
    cat.x = cat.g2_cartan;
    cat.x.insert(cat.x.end(), us.begin(), us.end());
    cat.x.insert(cat.x.end(), vs.begin(), vs.end());
    cat.x_names = {"h1", "h2"};
    for (const char* p : {"u", "v"})
      for (const auto& l : cat.g2_roots.labels) cat.x_names.push_back(std::string(p) + "_" + l);
  }

  // embedding of g2 in b3; a hard postcondition
  if (auto bad = embedding_mismatch(cat))
    throw ConsistencyError("g2 generator " + std::to_string(*bad + 1) + " is not its b3 combination");

  // z: z4 diagonal, the rest from three lowering operators orthogonal to g2
  {
    const std::vector<std::vector<Placement>> z_table = {
        {{2, 1, -c}, {4, 3, s}, {5, 4, -s}, {7, 6, c}},
        {{3, 1, c}, {4, 2, s}, {6, 4, -s}, {7, 5, -c}},
        {{4, 1, s}, {5, 2, -c}, {6, 3, c}, {7, 4, -s}},
    };
    cat.z.assign(7, RepMatrix(7));
    cat.z[3] = ComplexScalar(s) * detail::real_diag({1, -1, -1, 0, 1, 1, -1});
    // (u index, v index) for each lowering operator, 0-based
    const int slots[3][2] = {{6, 0}, {5, 1}, {4, 2}};
    for (int n = 0; n < 3; ++n) {
      auto [u, v] = detail::uv_pair(lower_from(z_table[n]));
      cat.z[slots[n][0]] = u;
      cat.z[slots[n][1]] = v;
    }
    for (int a = 1; a <= 7; ++a) cat.z_names.push_back("z" + std::to_string(a));
  }

  // y: three diagonals then u, v pairs of twelve lowering operators
  {
    const ExactScalar r21 = ExactScalar::radical(21, Rational(1, 21));
    cat.y.push_back(ComplexScalar(r6) * detail::real_diag({2, -1, -1, 0, -1, -1, 2}));
    cat.y.push_back(ComplexScalar(r2) * detail::real_diag({0, 1, -1, 0, -1, 1, 0}));
    cat.y.push_back(ComplexScalar(r21) * detail::real_diag({1, 1, 1, -6, 1, 1, 1}));
    const std::vector<std::vector<Placement>> rho = {
        {{2, 1, 1}, {7, 6, 1}}, {{3, 2, 1}, {6, 5, 1}}, {{4, 3, 1}, {5, 4, 1}}, {{3, 1, 1}, {7, 5, 1}},
        {{4, 2, 1}, {6, 4, 1}}, {{4, 1, 1}, {7, 4, 1}}, {{5, 2, 1}, {6, 3, 1}}, {{5, 1, 1}, {7, 3, 1}},
        {{6, 1, 1}, {7, 2, 1}}, {{7, 1, sqrt2}},        {{6, 2, sqrt2}},        {{5, 3, sqrt2}},
    };
    for (const auto& t : rho) {
      auto [u, v] = detail::uv_pair(lower_from(t));
      cat.y.push_back(u);
      cat.y.push_back(v);
    }
    for (int al = 1; al <= 27; ++al) cat.y_names.push_back("y" + std::to_string(al));
  }

  cat.M = RepMatrix(7);
  for (int k = 0; k < 7; ++k) cat.M(k, 6 - k) = 1;
  return cat;
}

}  // namespace g2kit
