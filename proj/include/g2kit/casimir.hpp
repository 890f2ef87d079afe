#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "g2kit/catalog.hpp"
#include "g2kit/error.hpp"
#include "g2kit/invariants.hpp"
#include "g2kit/matrix.hpp"
#include "g2kit/poly.hpp"
#include "g2kit/tensor.hpp"

namespace g2kit {

// ---------------------------------------------------------------------------
// Irreducible representations (lambda, mu)

/// Dimension of the irrep with highest weight (lambda, mu).
inline mpz_class g2_dim(unsigned lambda, unsigned mu) {
  mpz_class l = lambda, m = mu;
  mpz_class p = (l + 1) * (m + 1) * (l + m + 2) * (2 * l + m + 3) * (3 * l + m + 4) * (3 * l + 2 * m + 5);
  if (p % 120 != 0) throw ConsistencyError("dimension product not divisible by 120");
  return p / 120;
}

/// Quadratic Casimir eigenvalue of (lambda, mu) with tr(x_i x_j) = 2 delta_ij,
/// so that the 7 has 4: twice l^2 + m^2/3 + l m + 3 l + 5 m/3.
inline Rational g2_c2(unsigned lambda, unsigned mu) {
  Rational l(static_cast<long long>(lambda)), m(static_cast<long long>(mu));
  return (l * l + m * m * Rational(1, 3) + l * m + l * Rational(3) + m * Rational(5, 3)) * Rational(2);
}

// ---------------------------------------------------------------------------
// Projectors on V (x) V as n^2 x n^2 matrices: row (a,b) = a*n+b, column (c,d).

using PairMatrix = Matrix<ExactScalar>;

inline PairMatrix pair_matrix(const Tensor& t4) {
  const int n = t4.dims()[0];
  PairMatrix m(static_cast<std::size_t>(n * n));
  t4.for_each_nonzero([&](const std::vector<int>& i, const ExactScalar& v) {
    m(static_cast<std::size_t>(i[0] * n + i[1]), static_cast<std::size_t>(i[2] * n + i[3])) = v;
  });
  return m;
}

inline Tensor pair_tensor(const PairMatrix& m, int n, std::string name = {}) {
  Tensor t(std::move(name), {n, n, n, n});
  for (auto [r, c] : m.nonzeros())
    t.at({static_cast<int>(r) / n, static_cast<int>(r) % n, static_cast<int>(c) / n, static_cast<int>(c) % n}) = m(r, c);
  return t;
}

/// delta_{a p} delta_{b q} style products; `pattern` names which pairs are tied,
/// e.g. "ac,bd" gives delta_ac delta_bd on indices (a,b,c,d).
inline Tensor delta_product(int n, const std::string& pattern) {
  Tensor t("delta", {n, n, n, n});
  auto pos = [](char ch) { return static_cast<std::size_t>(ch - 'a'); };
  std::size_t p0 = pos(pattern[0]), p1 = pos(pattern[1]), q0 = pos(pattern[3]), q1 = pos(pattern[4]);
  std::vector<int> idx(4);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      idx[p0] = idx[p1] = u;
      idx[q0] = idx[q1] = v;
      t.at(idx) = 1;
    }
  return t;
}

struct ProjectorSet {
  int n = 0;                          // 7 or 14
  std::vector<std::string> labels;    // irreps, e.g. "1", "27", "77'"
  std::vector<int> dims;              // expected pair-traces
  std::vector<bool> symmetric;        // sector of each projector
  std::vector<PairMatrix> P;
  PairMatrix I_S, I_A;
  PairMatrix Lambda;                  // 14 x 14 only: (Lambda)_{rs,ij} = -c_pri c_psj

  const PairMatrix& get(const std::string& label) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == label) return P[k];
    throw Error("no projector " + label);
  }
};

inline bool is_idempotent(const PairMatrix& p) { return p * p == p; }

inline ProjectorSet build_projectors_7(const TensorStore& s) {
  ProjectorSet ps;
  ps.n = 7;
  const int n = 7;
  Tensor ab_cd = delta_product(n, "ab,cd"), ac_bd = delta_product(n, "ac,bd"), ad_bc = delta_product(n, "ad,bc");
  Tensor cc = contract("abe,cde->abcd", {s.c_abc(), s.c_abc()});
  PairMatrix S = pair_matrix((ac_bd + ad_bc).scaled(Rational(1, 2)));
  PairMatrix A = pair_matrix((ac_bd - ad_bc).scaled(Rational(1, 2)));
  PairMatrix P1 = pair_matrix(ab_cd.scaled(Rational(1, 7)));
  PairMatrix P7 = pair_matrix(cc.scaled(Rational(1, 2)));
  ps.labels = {"1", "27", "7", "14"};
  ps.dims = {1, 27, 7, 14};
  ps.symmetric = {true, true, false, false};
  ps.P = {P1, S - P1, P7, A - P7};
  ps.I_S = S;
  ps.I_A = A;
  for (std::size_t k = 0; k < ps.P.size(); ++k)
    if (!is_idempotent(ps.P[k])) throw ConsistencyError("7x7 projector " + ps.labels[k] + " is not idempotent");
  return ps;
}

inline ProjectorSet build_projectors_14(const TensorStore& s) {
  ProjectorSet ps;
  ps.n = 14;
  const int n = 14;
  Tensor ij_kl = delta_product(n, "ab,cd"), ik_jl = delta_product(n, "ac,bd"), il_jk = delta_product(n, "ad,bc");
  Tensor dd = contract("ija,kla->ijkl", {s.d_ij(), s.d_ij()});
  Tensor cc = contract("ijp,klp->ijkl", {s.c_ijk(), s.c_ijk()});
  PairMatrix S = pair_matrix((ik_jl + il_jk).scaled(Rational(1, 2)));
  PairMatrix A = pair_matrix((ik_jl - il_jk).scaled(Rational(1, 2)));
  PairMatrix P1 = pair_matrix(ij_kl.scaled(Rational(1, 14)));
  PairMatrix P27 = pair_matrix(dd.scaled(Rational(9, 32)));
  PairMatrix P14 = pair_matrix(cc.scaled(Rational(1, 8)));
  ps.labels = {"1", "27", "77", "14", "77'"};
  ps.dims = {1, 27, 77, 14, 77};
  ps.symmetric = {true, true, true, false, false};
  ps.P = {P1, P27, S - P1 - P27, P14, A - P14};
  ps.I_S = S;
  ps.I_A = A;
  ps.Lambda = pair_matrix(-contract("pri,psj->rsij", {s.c_ijk(), s.c_ijk()}));
  for (std::size_t k = 0; k < ps.P.size(); ++k)
    if (!is_idempotent(ps.P[k])) throw ConsistencyError("14x14 projector " + ps.labels[k] + " is not idempotent");
  return ps;
}

// ---------------------------------------------------------------------------
// Quartic Casimir

/// X = sum_i x_i (x) D_i; the partial trace over the 7-dimensional factor of X^4.
/// Throws ConsistencyError unless the result is a multiple of the identity.
inline ExactScalar quartic_casimir(const std::vector<RepMatrix>& x, const std::vector<RepMatrix>& D) {
  const std::size_t n = D.at(0).size();
  RepMatrix X(7 * n);
  for (std::size_t i = 0; i < x.size(); ++i) X += kron(x[i], D[i]);
  RepMatrix X2 = X * X;
  RepMatrix pt = partial_trace_first_of_product(X2, X2, 7);
  const ComplexScalar& v = pt(0, 0);
  if (!v.is_real()) throw ConsistencyError("quartic Casimir has an imaginary part");
  if (!(pt == ComplexScalar(v) * RepMatrix::identity(n)))
    throw ConsistencyError("partial trace of X^4 is not a multiple of the identity");
  return v.re();
}

/// sum_i D_i D_i, which must be a multiple of the identity; returns the multiple.
inline ExactScalar casimir_sum(const std::vector<RepMatrix>& D) {
  RepMatrix s(D.at(0).size());
  for (const auto& d : D) s += d * d;
  const ComplexScalar& v = s(0, 0);
  if (!v.is_real() || !(s == v * RepMatrix::identity(s.size())))
    throw ConsistencyError("Casimir sum is not a real multiple of the identity");
  return v.re();
}

// ---------------------------------------------------------------------------
// Adjoint vectors and invariants

/// Sparse lists of the tensors used by the adjoint-vector formulas.
struct SparseD {
  struct E3 {
    int i, j, k;
    ExactScalar v;
  };
  std::vector<E3> d_ij;   // (i, j, alpha)
  std::vector<E3> d_abg;  // (alpha, beta, gamma)

  explicit SparseD(const TensorStore& s) {
    s.d_ij().for_each_nonzero([&](const std::vector<int>& x, const ExactScalar& v) { d_ij.push_back({x[0], x[1], x[2], v}); });
    s.d_abg().for_each_nonzero([&](const std::vector<int>& x, const ExactScalar& v) { d_abg.push_back({x[0], x[1], x[2], v}); });
  }
};

/// A_i and the quantities derived from it. R is ExactScalar (numeric A) or
/// SlicePoly (A on the Cartan slice).
template <class R>
struct AdjointBundle {
  std::vector<R> A;  // 14
  std::vector<R> B;  // 27: d_ij,alpha A_i A_j
  std::vector<R> D;  // 27: d_alpha,beta,gamma B_beta B_gamma
  std::vector<R> C;  // 14: d_ij,alpha A_j D_alpha
  std::vector<R> V;  // 14: d_ij,alpha d_kl,alpha A_j A_k A_l
  R C2, C6, BB, BD, CC, DD;

  AdjointBundle(const SparseD& sd, std::vector<R> a) : A(std::move(a)), B(27), D(27), C(14), V(14) {
    if (A.size() != 14) throw DimensionMismatch("adjoint vector needs 14 components");
    for (const auto& e : sd.d_ij) {
      if (A[e.i].is_zero() || A[e.j].is_zero()) continue;
      B[e.k].add_product(R(e.v), A[e.i] * A[e.j]);
    }
    for (const auto& e : sd.d_abg) {
      if (B[e.j].is_zero() || B[e.k].is_zero()) continue;
      D[e.i].add_product(R(e.v), B[e.j] * B[e.k]);
    }
    for (const auto& e : sd.d_ij) {
      if (!A[e.j].is_zero() && !D[e.k].is_zero()) C[e.i].add_product(R(e.v), A[e.j] * D[e.k]);
      if (!A[e.j].is_zero() && !B[e.k].is_zero()) V[e.i].add_product(R(e.v), A[e.j] * B[e.k]);
    }
    C2 = dotv(A, A);
    C6 = dotv(A, C);
    BB = dotv(B, B);
    BD = dotv(B, D);
    CC = dotv(C, C);
    DD = dotv(D, D);
  }

  static R dotv(const std::vector<R>& u, const std::vector<R>& v) {
    R s{};
    for (std::size_t k = 0; k < u.size(); ++k)
      if (!u[k].is_zero() && !v[k].is_zero()) s.add_product(u[k], v[k]);
    return s;
  }
};

/// A on the Cartan slice: components (a, b, 0, ..., 0).
inline std::vector<SlicePoly> slice_vector() {
  std::vector<SlicePoly> a(14);
  a[0] = SlicePoly::var_a();
  a[1] = SlicePoly::var_b();
  return a;
}

/// Deterministic rational sample vectors for spot checks (entries p/q, |p| <= 6, 1 <= q <= 4).
inline std::vector<std::vector<ExactScalar>> sample_vectors(std::size_t count, std::uint64_t seed = 20240607) {
  std::mt19937_64 gen(seed);
  std::vector<std::vector<ExactScalar>> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<ExactScalar> v;
    for (int i = 0; i < 14; ++i) {
      long long p = static_cast<long long>(gen() % 13) - 6;
      long long q = static_cast<long long>(gen() % 4) + 1;
      v.emplace_back(Rational(p, q));
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// sum_i A_i M_i for numeric A.
inline RepMatrix combine_family(const std::vector<RepMatrix>& fam, const std::vector<ExactScalar>& A) {
  RepMatrix m(fam.at(0).size());
  for (std::size_t i = 0; i < A.size(); ++i)
    if (!A[i].is_zero()) m += ComplexScalar(A[i]) * fam[i];
  return m;
}

/// a M_0 + b M_1 with polynomial entries.
inline Matrix<ComplexSlicePoly> slice_matrix(const std::vector<RepMatrix>& fam) {
  const std::size_t n = fam.at(0).size();
  Matrix<ComplexSlicePoly> m(n);
  const ComplexSlicePoly a = ComplexSlicePoly::var_a(), b = ComplexSlicePoly::var_b();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (!fam[0](r, c).is_zero()) m(r, c) += a.scaled(fam[0](r, c));
      if (!fam[1](r, c).is_zero()) m(r, c) += b.scaled(fam[1](r, c));
    }
  return m;
}

/// tr(M^k) for k = 0..kmax.
template <class T>
std::vector<T> power_traces(const Matrix<T>& m, int kmax) {
  std::vector<T> tr;
  Matrix<T> p = Matrix<T>::identity(m.size());
  tr.push_back(p.trace());
  for (int k = 1; k <= kmax; ++k) {
    p = p * m;
    tr.push_back(p.trace());
  }
  return tr;
}

// ---------------------------------------------------------------------------
// Six-index symmetric tensors

/// T_iiklpq as a rank-4 array over (k,l,p,q). T is the unit-weight
/// symmetrization of d_abg d_ij^a d_kl^b d_pq^g over its six indices, which
/// is the average over the 15 pairings of the six slots.
inline Tensor traced_six_tensor(const TensorStore& s) {
  // W_{x y g} = d_abg d_{i x a} d_{i y b}: both traced slots in different pairs
  Tensor dd = contract("ixa,iyb->xyab", {s.d_ij(), s.d_ij()});
  Tensor W = contract("xyab,abg->xyg", {dd, s.d_abg()});
  Tensor Q = contract("xyg,uvg->xyuv", {W, s.d_ij()}, "T_iiklpq");
  // the twelve pairings placing the traced slots in different pairs:
  // slot 1 with x, slot 2 with y, remaining (u, v), x,y,u,v a permutation of k,l,p,q
  Tensor sum("T_iiklpq", {14, 14, 14, 14});
  std::vector<int> order = {0, 1, 2, 3};
  do {
    // order[0] = position (in klpq) of x, order[1] of y; u,v the rest in sorted order
    if (order[2] > order[3]) continue;
    std::vector<int> perm(4);
    for (int q = 0; q < 4; ++q) perm[static_cast<std::size_t>(q)] = order[static_cast<std::size_t>(q)];
    sum += Q.permuted(perm);
  } while (std::next_permutation(order.begin(), order.end()));
  // pairings joining the two traced slots contribute d_ii,alpha, which is summed explicitly
  Tensor trace_d = contract("iia->a", {s.d_ij()});
  Tensor rest = contract("a,klb,pqg,abg->klpq", {trace_d, s.d_ij(), s.d_ij(), s.d_abg()});
  Tensor sym3 = rest + rest.permuted({0, 2, 1, 3}) + rest.permuted({0, 3, 2, 1});
  sum += sym3;
  return sum.scaled(Rational(1, 15));
}

/// The 15 perfect matchings of six slots; entry s is the pair id of slot s.
inline std::vector<std::array<int, 6>> perfect_matchings6() {
  std::vector<std::array<int, 6>> out;
  std::array<int, 6> m{};
  auto rec = [&](auto&& self, int pair) -> void {
    int first = -1;
    for (int s = 0; s < 6; ++s)
      if (m[static_cast<std::size_t>(s)] == 0) {
        first = s;
        break;
      }
    if (first < 0) {
      std::array<int, 6> r;
      for (std::size_t s = 0; s < 6; ++s) r[s] = m[s] - 1;
      out.push_back(r);
      return;
    }
    m[static_cast<std::size_t>(first)] = pair;
    for (int s = first + 1; s < 6; ++s) {
      if (m[static_cast<std::size_t>(s)] != 0) continue;
      m[static_cast<std::size_t>(s)] = pair;
      self(self, pair + 1);
      m[static_cast<std::size_t>(s)] = 0;
    }
    m[static_cast<std::size_t>(first)] = 0;
  };
  rec(rec, 1);
  return out;
}

/// delta_(ij delta_kl delta_pq) with unit weight, traced over i = j, as a
/// rank-4 array over (k,l,p,q).
inline Tensor traced_delta3(int n) {
  Tensor t("delta3_traced", {n, n, n, n});
  const auto matchings = perfect_matchings6();
  std::array<int, 6> idx{};
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          long long total = 0;
          for (int i = 0; i < n; ++i) {
            idx = {i, i, k, l, p, q};
            for (const auto& m : matchings) {
              std::array<int, 3> val{-1, -1, -1};
              bool ok = true;
              for (std::size_t s = 0; s < 6 && ok; ++s) {
                int& v = val[static_cast<std::size_t>(m[s])];
                if (v < 0)
                  v = idx[s];
                else
                  ok = v == idx[s];
              }
              total += ok;
            }
          }
          if (total) t.at({k, l, p, q}) = Rational(total, 15);
        }
  return t;
}

/// delta_(kl delta_pq) with unit weight.
inline Tensor sym_delta2(int n) {
  Tensor t = delta_product(n, "ab,cd") + delta_product(n, "ac,bd") + delta_product(n, "ad,bc");
  return t.scaled(Rational(1, 3));
}

}  // namespace g2kit
