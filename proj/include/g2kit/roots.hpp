#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "g2kit/error.hpp"
#include "g2kit/scalar.hpp"

namespace g2kit {

/// Positive roots of a rank-n algebra, each labelled by the digits of the
/// simple roots it sums (so "1233" is R1 + R2 + 2 R3).
struct RootSystemData {
  std::string name;
  std::size_t rank = 0;
  std::vector<std::vector<ExactScalar>> simple;  // simple root vectors
  std::vector<std::string> labels;                // positive roots, fixed order
  std::vector<std::vector<ExactScalar>> vectors;  // components of each positive root
  std::vector<std::vector<int>> expansion;        // multiplicity of each simple root
  std::vector<int> height;
  std::vector<ExactScalar> norm2;
  std::vector<bool> is_long;

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t index_of(const std::string& label) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == label) return k;
    throw Error(name + " has no root labelled " + label);
  }
};

inline ExactScalar dot(const std::vector<ExactScalar>& u, const std::vector<ExactScalar>& v) {
  ExactScalar s;
  for (std::size_t k = 0; k < u.size(); ++k) s.add_product(u[k], v[k]);
  return s;
}

namespace detail {

inline RootSystemData make_roots(std::string name, std::vector<std::vector<ExactScalar>> simple,
                                 std::vector<std::string> labels) {
  RootSystemData r;
  r.name = std::move(name);
  r.rank = simple.size();
  r.simple = std::move(simple);
  r.labels = std::move(labels);
  ExactScalar longest;
  for (const auto& label : r.labels) {
    std::vector<int> mult(r.rank, 0);
    for (char ch : label) {
      std::size_t k = static_cast<std::size_t>(ch - '1');
      if (k >= r.rank) throw Error("bad root label " + label);
      ++mult[k];
    }
    std::vector<ExactScalar> v(r.rank);
    for (std::size_t s = 0; s < r.rank; ++s)
      for (std::size_t c = 0; c < r.rank; ++c) v[c] += r.simple[s][c].scaled(mult[s]);
    r.expansion.push_back(mult);
    r.height.push_back(static_cast<int>(label.size()));
    r.norm2.push_back(dot(v, v));
    r.vectors.push_back(std::move(v));
    if (r.norm2.back().to_double() > longest.to_double()) longest = r.norm2.back();
  }
  for (const auto& n : r.norm2) r.is_long.push_back(n == longest);
  return r;
}

}  // namespace detail

/// b3: simple roots (1,-1,0), (0,1,-1), (0,0,1).
inline RootSystemData b3_roots() {
  return detail::make_roots("b3", {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}},
                            {"1", "2", "3", "12", "23", "123", "233", "1233", "12233"});
}

/// g2: simple roots (1/sqrt6, -1/sqrt2) and (0, sqrt2).
inline RootSystemData g2_roots() {
  ExactScalar inv_sqrt6 = ExactScalar::radical(6, Rational(1, 6));
  ExactScalar inv_sqrt2 = ExactScalar::radical(2, Rational(1, 2));
  return detail::make_roots("g2", {{inv_sqrt6, -inv_sqrt2}, {0, ExactScalar::radical(2)}},
                            {"1", "2", "12", "112", "1112", "11122"});
}

}  // namespace g2kit
