#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "g2kit/casimir.hpp"
#include "g2kit/catalog.hpp"
#include "g2kit/error.hpp"
#include "g2kit/invariants.hpp"
#include "g2kit/matrix.hpp"
#include "g2kit/poly.hpp"
#include "g2kit/report.hpp"
#include "g2kit/tensor.hpp"

namespace g2kit {

/// A full 14-component sample vector with its numeric invariants.
struct SampleData {
  AdjointBundle<ExactScalar> bundle;
  std::vector<ExactScalar> trA;  // tr((A_i x_i)^k), k = 0..10
  std::vector<ExactScalar> trB;  // tr((A_i ad_i)^k), k = 0..10
  std::vector<ExactScalar> charpoly;  // coefficient of t^k in det(t - A_i x_i)
};

/// Read-only inputs of the identity checks, with lazily built shared
/// intermediates. Safe to use from several workers at once.
class VerifierContext {
 public:
  VerifierContext(BasisCatalog cat, TensorStore store) : cat_(std::move(cat)), store_(std::move(store)) {}

  const BasisCatalog& catalog() const noexcept { return cat_; }
  const TensorStore& tensors() const noexcept { return store_; }

  const DerivedMatrices& derived() const {
    return lazy(derived_once_, derived_, [&] { return build_derived_matrices(store_); });
  }
  const ProjectorSet& projectors7() const {
    return lazy(p7_once_, p7_, [&] { return build_projectors_7(store_); });
  }
  const ProjectorSet& projectors14() const {
    return lazy(p14_once_, p14_, [&] { return build_projectors_14(store_); });
  }
  const SparseD& sparse() const {
    return lazy(sparse_once_, sparse_, [&] { return SparseD(store_); });
  }
  /// tr(x_i x_j x_k x_l) over 14^4.
  const Tensor& x4() const {
    return lazy(x4_once_, x4_, [&] { return quartic_traces(cat_.x, "tr_x4"); });
  }
  /// tr(H_i H_j H_k H_l) over 14^4.
  const Tensor& h4() const {
    return lazy(h4_once_, h4_, [&] { return quartic_traces(derived().H, "tr_H4"); });
  }
  /// A on the Cartan slice with every derived quantity.
  const AdjointBundle<SlicePoly>& slice_bundle() const {
    return lazy(slice_once_, slice_, [&] { return AdjointBundle<SlicePoly>(sparse(), slice_vector()); });
  }
  /// tr(A^k) and tr(B^k) on the slice, k = 0..10.
  const std::vector<SlicePoly>& slice_traces_A() const {
    return lazy(sta_once_, sta_, [&] { return real_traces(slice_matrix(cat_.g2_cartan), 10); });
  }
  const std::vector<SlicePoly>& slice_traces_B() const {
    return lazy(stb_once_, stb_, [&] {
      return real_traces(slice_matrix({derived().ad[0], derived().ad[1]}), 10);
    });
  }

  /// Deterministic rational sample vectors used as a guard beside the slice.
  const std::vector<SampleData>& samples() const {
    return lazy(samples_once_, samples_, [&] {
      std::vector<SampleData> out;
      for (auto& a : sample_vectors(20)) {
        RepMatrix Am = combine_family(cat_.x, a);
        RepMatrix Bm = combine_family(derived().ad, a);
        SampleData d{AdjointBundle<ExactScalar>(sparse(), a), real_values(power_traces(Am, 10)),
                     real_values(power_traces(Bm, 10)), {}};
        const UniPoly cp = char_poly(Am);
        for (int k = 0; k <= 7; ++k) d.charpoly.push_back(cp.coefficient(static_cast<std::size_t>(k)));
        out.push_back(std::move(d));
      }
      return out;
    });
  }

  static Tensor quartic_traces(const std::vector<RepMatrix>& f, const std::string& name) {
    const int n = static_cast<int>(f.size());
    std::vector<RepMatrix> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pairs.push_back(f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)]);
    Tensor t(name, {n, n, n, n});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            ComplexScalar v = trace_product(pairs[static_cast<std::size_t>(i * n + j)],
                                            pairs[static_cast<std::size_t>(k * n + l)]);
            if (!v.is_real()) throw ConsistencyError(name + " has an imaginary part");
            t.at({i, j, k, l}) = v.re();
          }
    return t;
  }

 private:
  template <class T, class F>
  static const T& lazy(std::once_flag& flag, std::unique_ptr<T>& slot, F&& make) {
    std::call_once(flag, [&] { slot = std::make_unique<T>(make()); });
    return *slot;
  }
  static std::vector<ExactScalar> real_values(const std::vector<ComplexScalar>& v) {
    std::vector<ExactScalar> out;
    for (const auto& z : v) {
      if (!z.is_real()) throw ConsistencyError("trace of a hermitian matrix has an imaginary part");
      out.push_back(z.re());
    }
    return out;
  }
  static std::vector<SlicePoly> real_traces(const Matrix<ComplexSlicePoly>& m, int kmax) {
    std::vector<SlicePoly> out;
    for (const auto& t : power_traces(m, kmax)) out.push_back(real_part(t));
    return out;
  }

  BasisCatalog cat_;
  TensorStore store_;
  mutable std::once_flag derived_once_, p7_once_, p14_once_, sparse_once_, x4_once_, h4_once_, slice_once_, sta_once_,
      stb_once_, samples_once_;
  mutable std::unique_ptr<DerivedMatrices> derived_;
  mutable std::unique_ptr<ProjectorSet> p7_, p14_;
  mutable std::unique_ptr<SparseD> sparse_;
  mutable std::unique_ptr<Tensor> x4_, h4_;
  mutable std::unique_ptr<AdjointBundle<SlicePoly>> slice_;
  mutable std::unique_ptr<std::vector<SlicePoly>> sta_, stb_;
  mutable std::unique_ptr<std::vector<SampleData>> samples_;
};

/// One catalog entry: an id naming the equation, and a checker returning the
/// first counterexample (or a witness, for negative cases).
struct IdentityCase {
  std::string id;
  std::string description;
  std::function<CaseResult(const VerifierContext&)> check;
  std::string note;  // fixed remark about the printed form, if any
};

// ---------------------------------------------------------------------------
// Comparison helpers; index tuples are reported 1-based.

namespace check {

inline std::string tuple_text(const std::vector<int>& idx0) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx0.size(); ++k) s += (k ? "," : "") + std::to_string(idx0[k] + 1);
  return s + ")";
}

inline CaseResult pass() { return {}; }

inline CaseResult fail(const std::vector<int>& idx0, const ComplexScalar& lhs, const ComplexScalar& rhs,
                       std::string what = {}) {
  CaseResult r;
  r.status = CaseStatus::Fail;
  r.tuple = idx0.empty() ? std::string() : tuple_text(idx0);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.what = std::move(what);
  return r;
}

/// Passing result that records the tuple exhibiting a required violation.
inline CaseResult witness(const std::vector<int>& idx0, const ComplexScalar& lhs, const ComplexScalar& rhs) {
  CaseResult r;
  r.tuple = tuple_text(idx0);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  return r;
}

inline CaseResult with_what(CaseResult r, const std::string& what) {
  if (!r.ok() && r.what.empty()) r.what = what;
  return r;
}

inline CaseResult tensors(const Tensor& lhs, const Tensor& rhs, const std::string& what = {}) {
  auto m = first_mismatch(lhs, rhs);
  if (!m) return pass();
  return fail(m->index, m->lhs, m->rhs, what);
}

template <class T>
CaseResult matrices(const Matrix<T>& lhs, const Matrix<T>& rhs, std::vector<int> prefix = {}, const std::string& what = {}) {
  lhs.check_same(rhs);
  for (std::size_t r = 0; r < lhs.size(); ++r)
    for (std::size_t c = 0; c < lhs.size(); ++c)
      if (!(lhs(r, c) == rhs(r, c))) {
        auto idx = prefix;
        idx.push_back(static_cast<int>(r));
        idx.push_back(static_cast<int>(c));
        return fail(idx, ComplexScalar(lhs(r, c)), ComplexScalar(rhs(r, c)), what);
      }
  return pass();
}

/// lhs(p) == rhs(p) for p in [0, n); tuple is (p, row, col).
inline CaseResult families(std::size_t n, const std::function<RepMatrix(std::size_t)>& lhs,
                           const std::function<RepMatrix(std::size_t)>& rhs, const std::string& what = {}) {
  for (std::size_t p = 0; p < n; ++p) {
    auto r = matrices(lhs(p), rhs(p), {static_cast<int>(p)}, what);
    if (!r.ok()) return r;
  }
  return pass();
}

/// lhs(p, q) == rhs(p, q) over a rectangle; tuple is (p, q, row, col).
inline CaseResult pair_families(std::size_t np, std::size_t nq,
                                const std::function<RepMatrix(std::size_t, std::size_t)>& lhs,
                                const std::function<RepMatrix(std::size_t, std::size_t)>& rhs,
                                const std::string& what = {}) {
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t q = 0; q < nq; ++q) {
      auto r = matrices(lhs(p, q), rhs(p, q), {static_cast<int>(p), static_cast<int>(q)}, what);
      if (!r.ok()) return r;
    }
  return pass();
}

/// tr(A_p B_q) == value(p, q) for all p, q.
inline CaseResult traces(const std::vector<RepMatrix>& A, const std::vector<RepMatrix>& B,
                         const std::function<ComplexScalar(std::size_t, std::size_t)>& value,
                         const std::string& what = {}) {
  for (std::size_t p = 0; p < A.size(); ++p)
    for (std::size_t q = 0; q < B.size(); ++q) {
      ComplexScalar t = trace_product(A[p], B[q]);
      ComplexScalar v = value(p, q);
      if (!(t == v)) return fail({static_cast<int>(p), static_cast<int>(q)}, t, v, what);
    }
  return pass();
}

inline CaseResult scalars(const ComplexScalar& lhs, const ComplexScalar& rhs, const std::vector<int>& idx0 = {},
                          const std::string& what = {}) {
  return lhs == rhs ? pass() : fail(idx0, lhs, rhs, what);
}

/// Polynomial identity; a failure reports the first differing monomial.
inline CaseResult polys(const SlicePoly& lhs, const SlicePoly& rhs, const std::string& what = {}) {
  if (lhs == rhs) return pass();
  SlicePoly d = lhs - rhs;
  const auto& m = d.terms().begin()->first;
  CaseResult r = fail({}, lhs.coefficient(m.first, m.second), rhs.coefficient(m.first, m.second), what);
  r.tuple = "(a^" + std::to_string(m.first) + "*b^" + std::to_string(m.second) + ")";
  return r;
}

/// First failing result of a list, or pass.
inline CaseResult all(std::initializer_list<std::function<CaseResult()>> parts) {
  for (const auto& p : parts) {
    CaseResult r = p();
    if (!r.ok()) return r;
  }
  return pass();
}

}  // namespace check

// ---------------------------------------------------------------------------

/// Runs cases on `workers` threads; results come back in catalog order.
inline std::vector<CaseResult> run_cases(const VerifierContext& ctx, const std::string& suite,
                                         const std::vector<IdentityCase>& cases, unsigned workers) {
  std::vector<CaseResult> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      const auto& c = cases[k];
      CaseResult r;
      try {
        r = c.check(ctx);
      } catch (const std::exception& e) {
        r = CaseResult{};
        r.status = CaseStatus::Error;
        r.message = e.what();
      }
      r.suite = suite;
      r.id = c.id;
      if (!c.note.empty()) r.notes.insert(r.notes.begin(), c.note);
      out[k] = std::move(r);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cases.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace g2kit
