#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "g2kit/catalog.hpp"
#include "g2kit/error.hpp"
#include "g2kit/matrix.hpp"
#include "g2kit/tensor.hpp"

namespace g2kit {

/// Named invariant tensors, all real, indices over i (14), a (7), alpha (27).
class TensorStore {
 public:
  static const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"c_ijk",      "h_iab",      "c_abc",           "psi_abc",
                                               "d_ij_alpha", "d_ab_alpha", "d_ia_alpha",      "phi_i_alpha_beta",
                                               "t_a_alpha_beta", "d_alpha_beta_gamma"};
    return n;
  }

  bool has(const std::string& name) const { return t_.count(name) != 0; }
  const Tensor& get(const std::string& name) const {
    auto it = t_.find(name);
    if (it == t_.end()) throw Error("tensor store has no entry " + name);
    return it->second;
  }
  Tensor& get(const std::string& name) {
    auto it = t_.find(name);
    if (it == t_.end()) throw Error("tensor store has no entry " + name);
    return it->second;
  }
  void put(Tensor t) {
    std::string n = t.name();
    t_.insert_or_assign(n, std::move(t));
  }

  const Tensor& c_ijk() const { return get("c_ijk"); }
  const Tensor& h_iab() const { return get("h_iab"); }
  const Tensor& c_abc() const { return get("c_abc"); }
  const Tensor& psi() const { return get("psi_abc"); }
  const Tensor& d_ij() const { return get("d_ij_alpha"); }
  const Tensor& d_ab() const { return get("d_ab_alpha"); }
  const Tensor& d_ia() const { return get("d_ia_alpha"); }
  const Tensor& phi() const { return get("phi_i_alpha_beta"); }
  const Tensor& t_a() const { return get("t_a_alpha_beta"); }
  const Tensor& d_abg() const { return get("d_alpha_beta_gamma"); }

  friend bool operator==(const TensorStore& a, const TensorStore& b) { return a.t_ == b.t_; }

 private:
  std::map<std::string, Tensor> t_;
};

/// The octonionic tensor: +1 on (123),(147),(165),(246),(257),(354),(367),
/// extended by antisymmetry.
inline Tensor build_psi() {
  Tensor psi("psi_abc", {7, 7, 7});
  const int triples[7][3] = {{1, 2, 3}, {1, 4, 7}, {1, 6, 5}, {2, 4, 6}, {2, 5, 7}, {3, 5, 4}, {3, 6, 7}};
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  for (const auto& t : triples)
    for (int p = 0; p < 6; ++p)
      psi.at({t[perms[p][0]] - 1, t[perms[p][1]] - 1, t[perms[p][2]] - 1}) = p < 3 ? 1 : -1;
  return psi;
}

namespace detail {

/// T[i,j,k] = factor * tr(A_i B_j C_k); factor is 1 or -i. The result must be real.
inline Tensor trace_tensor(const std::string& name, const std::vector<RepMatrix>& A, const std::vector<RepMatrix>& B,
                           const std::vector<RepMatrix>& C, bool times_minus_i) {
  Tensor t(name, {static_cast<int>(A.size()), static_cast<int>(B.size()), static_cast<int>(C.size())});
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) {
      RepMatrix ab = A[i] * B[j];
      for (std::size_t k = 0; k < C.size(); ++k) {
        ComplexScalar v = trace_product(ab, C[k]);
        if (times_minus_i) v = -v.times_i();
        if (!v.is_real())
          throw ConsistencyError(name + " has an imaginary part at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        t.at({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)}) = v.re();
      }
    }
  return t;
}

}  // namespace detail

/// Every invariant tensor of the product laws, by trace formulas in the x/z/y basis.
/// Throws ConsistencyError if any value has an imaginary residue.
inline TensorStore extract_tensors(const BasisCatalog& cat) {
  using detail::trace_tensor;
  TensorStore s;
  s.put(trace_tensor("c_ijk", cat.x, cat.x, cat.x, true));
  s.put(trace_tensor("h_iab", cat.x, cat.z, cat.z, true));
  s.put(trace_tensor("c_abc", cat.z, cat.z, cat.z, true));
  s.put(build_psi());
  s.put(trace_tensor("d_ij_alpha", cat.x, cat.x, cat.y, false));
  s.put(trace_tensor("d_ab_alpha", cat.z, cat.z, cat.y, false));
  s.put(trace_tensor("d_ia_alpha", cat.x, cat.z, cat.y, false));
  s.put(trace_tensor("phi_i_alpha_beta", cat.x, cat.y, cat.y, true));
  s.put(trace_tensor("t_a_alpha_beta", cat.z, cat.y, cat.y, true));
  s.put(trace_tensor("d_alpha_beta_gamma", cat.y, cat.y, cat.y, false));
  return s;
}

/// Matrices built from the tensors: H_i, C_a, Y_alpha (7x7), ad_i (14x14), Phi_i (27x27).
struct DerivedMatrices {
  int h_sign = 0;  // (H_i)_ab = h_sign * i * h_iab
  std::vector<RepMatrix> H, C, Y, ad, Phi;
};

namespace detail {

/// M_k[r][c] = factor * T[k, r, c] with factor a complex constant.
inline std::vector<RepMatrix> slices(const Tensor& t, int first_axis_size, const ComplexScalar& factor,
                                     bool last_axis_is_family = false) {
  std::vector<RepMatrix> out;
  const int n = last_axis_is_family ? t.dims()[0] : t.dims()[1];
  for (int k = 0; k < first_axis_size; ++k) {
    RepMatrix m(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const ExactScalar& v = last_axis_is_family ? t.at({r, c, k}) : t.at({k, r, c});
        if (!v.is_zero()) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = factor * ComplexScalar(v);
      }
    out.push_back(std::move(m));
  }
  return out;
}

/// [A_i, A_j] == i c_ijk A_k for all i, j.
inline bool closes_with(const std::vector<RepMatrix>& A, const Tensor& c) {
  const int n = static_cast<int>(A.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RepMatrix rhs(A[0].size());
      for (int k = 0; k < n; ++k) {
        const ExactScalar& v = c.at({i, j, k});
        if (!v.is_zero()) rhs += ComplexScalar(ExactScalar{}, v) * A[static_cast<std::size_t>(k)];
      }
      if (!(commutator(A[static_cast<std::size_t>(i)], A[static_cast<std::size_t>(j)]) == rhs)) return false;
    }
  return true;
}

}  // namespace detail

/// Builds H, C, Y, ad, Phi. The sign of H is the one for which [H_i,H_j] = i c_ijk H_k.
inline DerivedMatrices build_derived_matrices(const TensorStore& s) {
  DerivedMatrices d;
  const ComplexScalar i = ComplexScalar::i();
  for (int sign : {-1, 1}) {
    auto H = detail::slices(s.h_iab(), 14, i.scaled(sign));
    if (detail::closes_with(H, s.c_ijk())) {
      d.h_sign = sign;
      d.H = std::move(H);
      break;
    }
  }
  if (d.h_sign == 0) throw ConsistencyError("neither sign of H_i satisfies the g2 bracket");
  d.C = detail::slices(s.c_abc(), 7, i);
  d.Y = detail::slices(s.d_ab(), 27, ComplexScalar(-3), true);
  d.ad = detail::slices(s.c_ijk(), 14, -i);
  d.Phi = detail::slices(s.phi(), 14, -i);
  return d;
}

}  // namespace g2kit
