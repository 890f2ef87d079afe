#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "g2kit/casimir.hpp"
#include "g2kit/catalog.hpp"
#include "g2kit/invariants.hpp"
#include "g2kit/matrix.hpp"
#include "g2kit/tensor.hpp"
#include "g2kit/verifier.hpp"

namespace g2kit::cases {

using Family = std::vector<RepMatrix>;

namespace util {

inline ComplexScalar cq(long long p, long long q = 1) { return ComplexScalar(Rational(p, q)); }
inline ComplexScalar iq(long long p, long long q = 1) { return ComplexScalar(ExactScalar{}, ExactScalar(Rational(p, q))); }
inline int dim(std::size_t n) { return static_cast<int>(n); }

/// factor * sum_k coef(k) F_k.
inline RepMatrix span(const Family& f, const std::function<ExactScalar(int)>& coef, const ComplexScalar& factor) {
  RepMatrix r(f.at(0).size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    ExactScalar c = coef(static_cast<int>(k));
    if (!c.is_zero()) r += (factor * ComplexScalar(c)) * f[k];
  }
  return r;
}

inline RepMatrix scalar(std::size_t n, const ComplexScalar& s) { return s * RepMatrix::identity(n); }

/// sum_k F_k g F_k.
inline RepMatrix sandwich(const Family& f, const RepMatrix& g) {
  RepMatrix r(g.size());
  for (const auto& m : f) r += m * g * m;
  return r;
}

/// Real matrix as a rank-2 tensor; throws if an entry has an imaginary part.
inline Tensor real_tensor(const RepMatrix& m, std::string name) {
  const int n = dim(m.size());
  Tensor t(std::move(name), {n, n});
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const ComplexScalar& v = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      if (!v.is_real()) throw ConsistencyError("matrix entry has an imaginary part");
      t.at({r, c}) = v.re();
    }
  return t;
}

/// sum over the listed families of (F_k)_ab (F_k)_cd, compared with rhs_abcd.
inline CaseResult outer_sum(std::initializer_list<const Family*> fams, const Tensor& rhs, const std::string& what = {}) {
  const int n = rhs.dims()[0];
  auto at = [](const RepMatrix& m, int r, int c) -> const ComplexScalar& {
    return m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          ComplexScalar s;
          for (const Family* f : fams)
            for (const auto& m : *f) {
              const ComplexScalar& x = at(m, a, b);
              if (x.is_zero()) continue;
              const ComplexScalar& y = at(m, c, d);
              if (!y.is_zero()) s.add_product(x, y);
            }
          ComplexScalar r(rhs.at({a, b, c, d}));
          if (!(s == r)) return check::fail({a, b, c, d}, s, r, what);
        }
  return check::pass();
}

/// Per-matrix predicate over a family; the tuple is the matrix index.
inline CaseResult each(const Family& f, const std::function<bool(const RepMatrix&)>& ok, const std::string& what) {
  for (std::size_t k = 0; k < f.size(); ++k)
    if (!ok(f[k])) {
      CaseResult r = check::fail({static_cast<int>(k)}, {}, {}, what);
      r.lhs.clear();
      r.rhs.clear();
      return r;
    }
  return check::pass();
}

inline CaseResult hermitian_traceless(const Family& f, const std::string& name) {
  return check::all({[&] { return each(f, is_hermitian, name + " hermitian"); },
                     [&] { return each(f, [](const RepMatrix& m) { return m.trace().is_zero(); }, name + " traceless"); }});
}

/// m^T == sign * M m M for every member (M is its own inverse).
inline CaseResult transposition(const Family& f, const RepMatrix& M, int sign, const std::string& what) {
  return check::families(
      f.size(), [&](std::size_t k) { return f[k].transpose(); },
      [&](std::size_t k) { return cq(sign) * (M * f[k] * M); }, what);
}

inline CaseResult gram(const Family& a, const Family& b, long long diag, const std::string& what) {
  const bool same = &a == &b;
  return check::traces(a, b, [&](std::size_t p, std::size_t q) { return same && p == q ? cq(diag) : cq(0); }, what);
}

/// [A_p, A_q] == i sum_r f_pqr B_r, with f read from a rank-3 tensor.
inline CaseResult bracket(const Family& lhs_a, const Family& lhs_b, const Tensor& f, const Family& out,
                          const std::string& what = {}) {
  return check::pair_families(
      lhs_a.size(), lhs_b.size(), [&](std::size_t p, std::size_t q) { return commutator(lhs_a[p], lhs_b[q]); },
      [&](std::size_t p, std::size_t q) {
        return span(out, [&](int r) { return f.at({dim(p), dim(q), r}); }, ComplexScalar::i());
      },
      what);
}

inline Tensor kdelta(int n, long long num, long long den = 1) { return Tensor::delta(n).scaled(Rational(num, den)); }

/// Shorthand for delta_product on indices (a,b,c,d).
inline Tensor dd(int n, const char* pattern) { return delta_product(n, pattern); }

}  // namespace util

// ---------------------------------------------------------------------------

inline std::vector<IdentityCase> basis_cases() {
  using namespace util;
  std::vector<IdentityCase> v;

  v.push_back({"1.2", "hermitian, traceless, tr(x_A x_B) = 2 delta_AB for b3 and g2", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 return check::all({[&] { return hermitian_traceless(cat.b3, "b3"); },
                                    [&] { return gram(cat.b3, cat.b3, 2, "b3 gram"); },
                                    [&] { return hermitian_traceless(cat.x, "g2"); },
                                    [&] { return gram(cat.x, cat.x, 2, "g2 gram"); }});
               }, ""});

  v.push_back({"2.1", "Cartan-Weyl relations of b3 and g2", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 auto run = [](const Family& h, const Family& lower, const RootSystemData& roots, const std::string& name) {
                   for (std::size_t al = 0; al < lower.size(); ++al) {
                     const RepMatrix& em = lower[al];
                     const RepMatrix ep = em.transpose();
                     RepMatrix rh(7);
                     for (std::size_t r = 0; r < h.size(); ++r) {
                       const ComplexScalar R(roots.vectors[al][r]);
                       auto res = check::matrices(commutator(h[r], em), -R * em, {dim(al), dim(r)}, name + " [h,e-]");
                       if (!res.ok()) return res;
                       res = check::matrices(commutator(h[r], ep), R * ep, {dim(al), dim(r)}, name + " [h,e+]");
                       if (!res.ok()) return res;
                       rh += R * h[r];
                     }
                     auto res = check::matrices(commutator(ep, em), rh, {dim(al)}, name + " [e+,e-]");
                     if (!res.ok()) return res;
                   }
                   return check::pass();
                 };
                 return check::all({[&] { return run(cat.b3_cartan, cat.b3_lower, cat.b3_roots, "b3"); },
                                    [&] { return run(cat.g2_cartan, cat.g2_lower, cat.g2_roots, "g2"); }});
               }, ""});

  v.push_back({"2.21", "b3 simple and positive roots; short roots R3, R23, R123", [](const VerifierContext& ctx) {
                 const auto& r = ctx.catalog().b3_roots;
                 const std::vector<std::vector<int>> expected = {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}, {1, 0, -1}, {0, 1, 0},
                                                                 {1, 0, 0},  {0, 1, 1},  {1, 0, 1}, {1, 1, 0}};
                 for (std::size_t k = 0; k < expected.size(); ++k) {
                   for (std::size_t c = 0; c < 3; ++c)
                     if (!(r.vectors[k][c] == ExactScalar(expected[k][c])))
                       return check::fail({dim(k), dim(c)}, r.vectors[k][c], cq(expected[k][c]), "root vector");
                   const bool short_root = r.labels[k] == "3" || r.labels[k] == "23" || r.labels[k] == "123";
                   if (r.is_long[k] == short_root) return check::fail({dim(k)}, r.norm2[k], {}, "short root set");
                 }
                 return check::pass();
               }, ""});

  v.push_back({"3.2", "g2 positive roots; short norm-squared 2/3, long 2", [](const VerifierContext& ctx) {
                 const auto& r = ctx.catalog().g2_roots;
                 for (std::size_t k = 0; k < r.size(); ++k) {
                   const bool short_root = r.labels[k] == "1" || r.labels[k] == "12" || r.labels[k] == "112";
                   const ComplexScalar want = short_root ? cq(2, 3) : cq(2);
                   if (!(ComplexScalar(r.norm2[k]) == want)) return check::fail({dim(k)}, r.norm2[k], want, "norm");
                   if (r.is_long[k] == short_root) return check::fail({dim(k)}, r.norm2[k], want, "short root set");
                 }
                 return check::pass();
               }, ""});

  v.push_back({"2.35", "x_mu^T = -M x_mu M^-1 for b3; M = M^T = M^-1", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 return check::all({[&] { return check::matrices(cat.M * cat.M, RepMatrix::identity(7), {}, "M^2"); },
                                    [&] { return check::matrices(cat.M.transpose(), cat.M, {}, "M^T"); },
                                    [&] { return transposition(cat.b3, cat.M, -1, "b3"); }});
               }, ""});

  v.push_back({"3.3", "extra g2 brackets of the raising operators", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 auto e = [&](const char* l) { return cat.g2_lower[cat.g2_roots.index_of(l)].transpose(); };
                 const ComplexScalar two_over_sqrt3(ExactScalar::radical(3, Rational(2, 3)));
                 return check::all({
                     [&] { return check::matrices(commutator(e("1"), e("2")), e("12"), {}, "[E1,E2]"); },
                     [&] { return check::matrices(commutator(e("12"), e("1")), two_over_sqrt3 * e("112"), {}, "[E12,E1]"); },
                     [&] { return check::matrices(commutator(e("1"), e("112")), e("1112"), {}, "[E1,E112]"); },
                     [&] { return check::matrices(commutator(e("2"), e("1112")), e("11122"), {}, "[E2,E1112]"); },
                     [&] { return check::matrices(commutator(e("112"), e("12")), e("11122"), {}, "[E112,E12]"); },
                 });
               },
               "printed form: [E1, E122] = E1112; 122 is not a root, checked as [E1, E112] = E1112"});

  v.push_back({"3.100", "embedding of g2 in b3", [](const VerifierContext& ctx) {
                 auto bad = embedding_mismatch(ctx.catalog());
                 if (!bad) return check::pass();
                 CaseResult r = check::fail({dim(*bad)}, {}, {}, "generator");
                 r.lhs.clear();
                 r.rhs.clear();
                 return r;
               },
               "printed form: H1 = sqrt(1/3)(2 H1 + H2 + H3); the combination with tr h1^2 = 2 is sqrt(1/6)(2 k1 + k2 + k3)"});

  v.push_back({"3.4", "g2 defining matrices: Cartan diagonals, normalization, transposition", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const ExactScalar r6 = ExactScalar::radical(6, Rational(1, 6)), r2 = ExactScalar::radical(2, Rational(1, 2));
                 const std::vector<ExactScalar> h1 = {cat.c, r6, r6, 0, -r6, -r6, -cat.c};
                 const std::vector<ExactScalar> h2 = {0, r2, -r2, 0, r2, -r2, 0};
                 return check::all({
                     [&] { return check::matrices(cat.x[0], RepMatrix::diagonal({h1.begin(), h1.end()}), {0}, "h1"); },
                     [&] { return check::matrices(cat.x[1], RepMatrix::diagonal({h2.begin(), h2.end()}), {1}, "h2"); },
                     [&] { return gram(cat.x, cat.x, 2, "gram"); },
                     [&] { return transposition(cat.x, cat.M, -1, "transpose"); },
                 });
               }, ""});

  v.push_back({"4.3", "z4 = h3 = s diag(1,-1,-1,0,1,1,-1)", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const ExactScalar& s = cat.s;
                 const std::vector<ComplexScalar> d = {s, -s, -s, 0, s, s, -s};
                 return check::matrices(cat.z[3], RepMatrix::diagonal(d), {3});
               }, ""});

  v.push_back({"4.5", "tr z = 0, tr(z z) = 2 delta, tr(z x) = 0, z^T = -M z M^-1", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 return check::all({[&] { return hermitian_traceless(cat.z, "z"); },
                                    [&] { return gram(cat.z, cat.z, 2, "z gram"); },
                                    [&] { return gram(cat.z, cat.x, 0, "z x"); },
                                    [&] { return transposition(cat.z, cat.M, -1, "transpose"); }});
               },
               "printed form: tr(z_a z_b) = delta_ab; the constructed matrices give 2 delta_ab"});

  v.push_back({"5.3", "diagonal y1, y2, y3", [](const VerifierContext& ctx) {
                 const auto& y = ctx.catalog().y;
                 const ExactScalar r6 = ExactScalar::radical(6, Rational(1, 6)), r2 = ExactScalar::radical(2, Rational(1, 2)),
                                   r21 = ExactScalar::radical(21, Rational(1, 21));
                 auto diag = [](const ExactScalar& f, std::vector<int> d) {
                   std::vector<ComplexScalar> c;
                   for (int x : d) c.emplace_back(f.scaled(Rational(x)));
                   return RepMatrix::diagonal(c);
                 };
                 return check::all({
                     [&] { return check::matrices(y[0], diag(r6, {2, -1, -1, 0, -1, -1, 2}), {0}); },
                     [&] { return check::matrices(y[1], diag(r2, {0, 1, -1, 0, -1, 1, 0}), {1}); },
                     [&] { return check::matrices(y[2], diag(r21, {1, 1, 1, -6, 1, 1, 1}), {2}); },
                 });
               }, ""});

  v.push_back({"5.1", "y hermitian, traceless, y^T = +M y M^-1", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 return check::all({[&] { return hermitian_traceless(cat.y, "y"); },
                                    [&] { return transposition(cat.y, cat.M, 1, "transpose"); }});
               }, ""});

  v.push_back({"5.2", "tr(y y) = 2 delta, tr(x y) = 0, tr(z y) = 0", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 return check::all({[&] { return gram(cat.y, cat.y, 2, "y gram"); },
                                    [&] { return gram(cat.x, cat.y, 0, "x y"); },
                                    [&] { return gram(cat.z, cat.y, 0, "z y"); }});
               }, ""});

  v.push_back({"10.1", "transposition signatures of x, z, y", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 return check::all({[&] { return transposition(cat.x, cat.M, -1, "x"); },
                                    [&] { return transposition(cat.z, cat.M, -1, "z"); },
                                    [&] { return transposition(cat.y, cat.M, 1, "y"); }});
               }, ""});

  v.push_back({"13.1", "the 48 matrices x, z, y and H, C, Y are hermitian and traceless", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const auto& d = ctx.derived();
                 const Family xzy = cat.all48();
                 Family hcy = d.H;
                 hcy.insert(hcy.end(), d.C.begin(), d.C.end());
                 hcy.insert(hcy.end(), d.Y.begin(), d.Y.end());
                 return check::all({[&] { return hermitian_traceless(xzy, "xzy"); },
                                    [&] { return hermitian_traceless(hcy, "HCY"); }});
               }, ""});

  v.push_back({"13.2", "tr(lambda_A lambda_B) = 2 delta_AB for both 48-sets (hence independence)", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 const Family xzy = ctx.catalog().all48();
                 Family hcy = d.H;
                 hcy.insert(hcy.end(), d.C.begin(), d.C.end());
                 hcy.insert(hcy.end(), d.Y.begin(), d.Y.end());
                 return check::all({[&] { return gram(xzy, xzy, 2, "xzy"); }, [&] { return gram(hcy, hcy, 2, "HCY"); }});
               }, ""});

  v.push_back({"13.3", "H and C antisymmetric, Y symmetric", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 auto sym = [](const Family& f, int sign, const std::string& w) {
                   return check::families(
                       f.size(), [&](std::size_t k) { return f[k].transpose(); },
                       [&](std::size_t k) { return cq(sign) * f[k]; }, w);
                 };
                 return check::all({[&] { return sym(d.H, -1, "H"); }, [&] { return sym(d.C, -1, "C"); },
                                    [&] { return sym(d.Y, 1, "Y"); }});
               }, ""});

  v.push_back({"11.1", "(H_i)_ab = s i h_iab: exactly one sign closes the bracket", [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 const bool plus = detail::closes_with(detail::slices(t.h_iab(), 14, ComplexScalar::i()), t.c_ijk());
                 const bool minus = detail::closes_with(detail::slices(t.h_iab(), 14, -ComplexScalar::i()), t.c_ijk());
                 CaseResult r;
                 if (plus == minus) {
                   r = check::fail({}, cq(plus), cq(minus), "sign uniqueness");
                 } else if (ctx.derived().h_sign != (plus ? 1 : -1)) {
                   r = check::fail({}, cq(ctx.derived().h_sign), cq(plus ? 1 : -1), "recorded sign");
                 }
                 r.notes.push_back("h_sign=" + std::to_string(ctx.derived().h_sign) +
                                   "; printed forms give both +i h_iab and -i h_iab, the bracket selects this sign");
                 return r;
               }, ""});

  v.push_back({"11.2", "[H_i, H_k] = i c_ikl H_l", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 return bracket(d.H, d.H, ctx.tensors().c_ijk(), d.H);
               }, ""});

  v.push_back({"11.4", "tr H_i = 0, tr(H_i H_j) = 2 delta_ij", [](const VerifierContext& ctx) {
                 const auto& H = ctx.derived().H;
                 return check::all({[&] { return each(H, [](const RepMatrix& m) { return m.trace().is_zero(); }, "traceless"); },
                                    [&] { return gram(H, H, 2, "gram"); }});
               },
               "printed form: tr(H_i H_j) = delta_ij; equivalence with x_i forces 2 delta_ij"});

  v.push_back({"11.5", "[H_i, C_a] = i h_iab C_b", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 return bracket(d.H, d.C, ctx.tensors().h_iab(), d.C);
               }, ""});

  v.push_back({"11.8", "[C_a, C_b] = i h_iab H_i + i c_abc C_c", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 const auto& t = ctx.tensors();
                 return check::pair_families(
                     7, 7, [&](std::size_t a, std::size_t b) { return commutator(d.C[a], d.C[b]); },
                     [&](std::size_t a, std::size_t b) {
                       return span(d.H, [&](int i) { return t.h_iab().at({i, dim(a), dim(b)}); }, ComplexScalar::i()) +
                              span(d.C, [&](int c) { return t.c_abc().at({dim(a), dim(b), c}); }, ComplexScalar::i());
                     });
               }, ""});

  v.push_back({"11.9", "tr(C_a C_b C_c) = i c_abc", [](const VerifierContext& ctx) {
                 const auto& C = ctx.derived().C;
                 const auto& c = ctx.tensors().c_abc();
                 for (int a = 0; a < 7; ++a)
                   for (int b = 0; b < 7; ++b) {
                     RepMatrix ab = C[static_cast<std::size_t>(a)] * C[static_cast<std::size_t>(b)];
                     for (int e = 0; e < 7; ++e) {
                       ComplexScalar l = trace_product(ab, C[static_cast<std::size_t>(e)]);
                       ComplexScalar r(ExactScalar{}, c.at({a, b, e}));
                       if (!(l == r)) return check::fail({a, b, e}, l, r);
                     }
                   }
                 return check::pass();
               }, ""});

  v.push_back({"11.100", "tr(C_a C_b) = 2 delta_ab", [](const VerifierContext& ctx) {
                 const auto& C = ctx.derived().C;
                 return gram(C, C, 2, "gram");
               }, ""});

  v.push_back({"12.2", "[H_i, Y_alpha] = i phi_i,alpha,beta Y_beta", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 return bracket(d.H, d.Y, ctx.tensors().phi(), d.Y);
               }, ""});

  v.push_back({"12.5", "d_ab,alpha = tr(C_a C_b Y_alpha)", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 const auto& t = ctx.tensors().d_ab();
                 for (int a = 0; a < 7; ++a)
                   for (int b = 0; b < 7; ++b) {
                     RepMatrix ab = d.C[static_cast<std::size_t>(a)] * d.C[static_cast<std::size_t>(b)];
                     for (int al = 0; al < 27; ++al) {
                       ComplexScalar l = trace_product(ab, d.Y[static_cast<std::size_t>(al)]);
                       if (!(l == ComplexScalar(t.at({a, b, al})))) return check::fail({a, b, al}, l, t.at({a, b, al}));
                     }
                   }
                 return check::pass();
               }, ""});

  v.push_back({"12.7", "tr(Y_alpha Y_beta) = 2 delta", [](const VerifierContext& ctx) {
                 const auto& Y = ctx.derived().Y;
                 return gram(Y, Y, 2, "gram");
               }, ""});

  v.push_back({"20.20", "(ad_i)_jk = -i c_ijk closes: [ad_i, ad_j] = i c_ijk ad_k", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 const auto& c = ctx.tensors().c_ijk();
                 return check::all({[&] {
                                      return check::families(
                                          14, [&](std::size_t i) { return d.ad[i]; },
                                          [&](std::size_t i) {
                                            RepMatrix m(14);
                                            for (int j = 0; j < 14; ++j)
                                              for (int k = 0; k < 14; ++k)
                                                m(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                                                    ComplexScalar(ExactScalar{}, -c.at({dim(i), j, k}));
                                            return m;
                                          },
                                          "entries");
                                    },
                                    [&] { return bracket(d.ad, d.ad, c, d.ad, "bracket"); }});
               }, ""});

  v.push_back({"20.23", "(Phi_i) = -i phi_i closes: [Phi_i, Phi_j] = i c_ijk Phi_k", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 return bracket(d.Phi, d.Phi, ctx.tensors().c_ijk(), d.Phi);
               }, ""});

  v.push_back({"symmetry", "symmetry and antisymmetry patterns of the invariant tensors", [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 auto anti = [](const Tensor& x, std::vector<int> perm, const std::string& w) {
                   return check::tensors(x.permuted(perm), x.scaled(Rational(-1)), w);
                 };
                 auto sym = [](const Tensor& x, std::vector<int> perm, const std::string& w) {
                   return check::tensors(x.permuted(perm), x, w);
                 };
                 return check::all({
                     [&] { return anti(t.c_ijk(), {1, 0, 2}, "c_ijk ij"); },
                     [&] { return anti(t.c_ijk(), {0, 2, 1}, "c_ijk jk"); },
                     [&] { return anti(t.c_abc(), {1, 0, 2}, "c_abc ab"); },
                     [&] { return anti(t.c_abc(), {0, 2, 1}, "c_abc bc"); },
                     [&] { return anti(t.psi(), {1, 0, 2}, "psi ab"); },
                     [&] { return anti(t.psi(), {0, 2, 1}, "psi bc"); },
                     [&] { return anti(t.h_iab(), {0, 2, 1}, "h_iab"); },
                     [&] { return anti(t.phi(), {0, 2, 1}, "phi"); },
                     [&] { return anti(t.t_a(), {0, 2, 1}, "t"); },
                     [&] { return sym(t.d_ij(), {1, 0, 2}, "d_ij"); },
                     [&] { return sym(t.d_ab(), {1, 0, 2}, "d_ab"); },
                     [&] { return sym(t.d_abg(), {1, 0, 2}, "d_abg 12"); },
                     [&] { return sym(t.d_abg(), {0, 2, 1}, "d_abg 23"); },
                 });
               }, ""});

  return v;
}

// ---------------------------------------------------------------------------

inline std::vector<IdentityCase> octonion_cases() {
  using namespace util;
  std::vector<IdentityCase> v;
  v.push_back({"A1.1", "psi_abc psi_abd = 6 delta_cd", [](const VerifierContext& ctx) {
                 const auto& p = ctx.tensors().psi();
                 return check::tensors(contract("abc,abd->cd", {p, p}), kdelta(7, 6));
               }, ""});
  v.push_back({"A1.2", "psi_abc = -1/4! eps_abcdefg psi_deh psi_fgh", [](const VerifierContext& ctx) {
                 const auto& p = ctx.tensors().psi();
                 Tensor w = contract("deh,fgh->defg", {p, p});
                 return check::tensors(p, epsilon_contract(w, false).scaled(Rational(-1, 24)));
               }, ""});
  v.push_back({"A1.3", "psi_deh psi_fgh = delta_df delta_eg - delta_dg delta_ef - 1/6 eps_defgabc psi_abc",
               [](const VerifierContext& ctx) {
                 const auto& p = ctx.tensors().psi();
                 Tensor rhs = dd(7, "ac,bd") - dd(7, "ad,bc") - epsilon_contract(p, false).scaled(Rational(1, 6));
                 return check::tensors(contract("deh,fgh->defg", {p, p}), rhs);
               }, ""});
  v.push_back({"A1.4", "psi_fag psi_gbe psi_ecf = 3 psi_abc", [](const VerifierContext& ctx) {
                 const auto& p = ctx.tensors().psi();
                 return check::tensors(contract("fag,gbe,ecf->abc", {p, p, p}), p.scaled(Rational(3)));
               }, ""});
  v.push_back({"A1.5", "psi_h[de psi_f]gh = -1/6 eps_abcdefg psi_abc", [](const VerifierContext& ctx) {
                 const auto& p = ctx.tensors().psi();
                 Tensor x = contract("hde,fgh->defg", {p, p});
                 return check::tensors(antisymmetrize(x, {0, 1, 2}), epsilon_contract(p, true).scaled(Rational(-1, 6)));
               }, ""});
  v.push_back({"A1.6", "psi_deh psi_fgh + psi_feh psi_dgh = 2 delta_df delta_eg - delta_dg delta_ef - delta_fg delta_ed",
               [](const VerifierContext& ctx) {
                 const auto& p = ctx.tensors().psi();
                 Tensor lhs = contract("deh,fgh->defg", {p, p}) + contract("feh,dgh->defg", {p, p});
                 Tensor rhs = dd(7, "ac,bd").scaled(Rational(2)) - dd(7, "ad,bc") - dd(7, "ab,cd");
                 return check::tensors(lhs, rhs);
               }, ""});
  v.push_back({"A1.7", "psi_abd psi_deh psi_hfg = 3 delta_a[e psi_fg]b - 3 delta_b[e psi_fg]a - delta_ef psi_gab + delta_eg psi_fab",
               [](const VerifierContext& ctx) {
                 const auto& p = ctx.tensors().psi();
                 const Tensor d = Tensor::delta(7);
                 Tensor lhs = contract("abd,deh,hfg->abefg", {p, p, p});
                 Tensor rhs = antisymmetrize(contract("ae,fgb->abefg", {d, p}), {2, 3, 4}).scaled(Rational(3)) -
                              antisymmetrize(contract("be,fga->abefg", {d, p}), {2, 3, 4}).scaled(Rational(3)) -
                              contract("ef,gab->abefg", {d, p}) + contract("eg,fab->abefg", {d, p});
                 return check::tensors(lhs, rhs);
               }, ""});
  v.push_back({"psi-jacobi", "psi alone violates the Jacobi identity (a witness must exist)", [](const VerifierContext& ctx) {
                 const auto& p = ctx.tensors().psi();
                 Tensor j = contract("abe,ecd->abcd", {p, p});
                 Tensor cyc = j + j.permuted({2, 0, 1, 3}) + j.permuted({1, 2, 0, 3});
                 Tensor zero("zero", cyc.dims());
                 auto m = first_mismatch(cyc, zero);
                 if (!m) {
                   CaseResult r = check::fail({}, cq(0), cq(0), "no violating tuple");
                   return r;
                 }
                 return check::witness(m->index, m->lhs, m->rhs);
               }, ""});
  return v;
}

// ---------------------------------------------------------------------------

inline std::vector<IdentityCase> product_law_cases() {
  using namespace util;
  std::vector<IdentityCase> v;
  const ComplexScalar half = cq(1, 2), ihalf = iq(1, 2), twoseventh = cq(2, 7);

  v.push_back({"10.2", "x_i x_j = 2/7 delta_ij + i/2 c_ijk x_k + 1/2 d_ij,alpha y_alpha", [=](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const auto& t = ctx.tensors();
                 return check::pair_families(
                     14, 14, [&](std::size_t i, std::size_t j) { return cat.x[i] * cat.x[j]; },
                     [&](std::size_t i, std::size_t j) {
                       return scalar(7, i == j ? twoseventh : cq(0)) +
                              span(cat.x, [&](int k) { return t.c_ijk().at({dim(i), dim(j), k}); }, ihalf) +
                              span(cat.y, [&](int a) { return t.d_ij().at({dim(i), dim(j), a}); }, half);
                     });
               }, ""});
  v.push_back({"10.3", "z_a z_b = 2/7 delta + i/2 c_abc z_c + i/2 h_iab x_i + 1/2 d_ab,gamma y_gamma",
               [=](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const auto& t = ctx.tensors();
                 return check::pair_families(
                     7, 7, [&](std::size_t a, std::size_t b) { return cat.z[a] * cat.z[b]; },
                     [&](std::size_t a, std::size_t b) {
                       return scalar(7, a == b ? twoseventh : cq(0)) +
                              span(cat.z, [&](int c) { return t.c_abc().at({dim(a), dim(b), c}); }, ihalf) +
                              span(cat.x, [&](int i) { return t.h_iab().at({i, dim(a), dim(b)}); }, ihalf) +
                              span(cat.y, [&](int g) { return t.d_ab().at({dim(a), dim(b), g}); }, half);
                     });
               }, ""});
  v.push_back({"10.4", "y_a y_b = 2/7 delta + i/2 phi_iab x_i + i/2 t_cab z_c + 1/2 d_abg y_g", [=](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const auto& t = ctx.tensors();
                 return check::pair_families(
                     27, 27, [&](std::size_t p, std::size_t q) { return cat.y[p] * cat.y[q]; },
                     [&](std::size_t p, std::size_t q) {
                       return scalar(7, p == q ? twoseventh : cq(0)) +
                              span(cat.x, [&](int i) { return t.phi().at({i, dim(p), dim(q)}); }, ihalf) +
                              span(cat.z, [&](int a) { return t.t_a().at({a, dim(p), dim(q)}); }, ihalf) +
                              span(cat.y, [&](int g) { return t.d_abg().at({dim(p), dim(q), g}); }, half);
                     });
               }, ""});
  v.push_back({"10.5", "x_i z_a = i/2 h_iab z_b + 1/2 d_ia,alpha y_alpha", [=](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const auto& t = ctx.tensors();
                 return check::pair_families(
                     14, 7, [&](std::size_t i, std::size_t a) { return cat.x[i] * cat.z[a]; },
                     [&](std::size_t i, std::size_t a) {
                       return span(cat.z, [&](int b) { return t.h_iab().at({dim(i), dim(a), b}); }, ihalf) +
                              span(cat.y, [&](int al) { return t.d_ia().at({dim(i), dim(a), al}); }, half);
                     });
               }, ""});
  v.push_back({"10.6", "x_i y_a = i/2 phi_iab y_b + 1/2 d_ij,a x_j + 1/2 d_ib,a z_b", [=](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const auto& t = ctx.tensors();
                 return check::pair_families(
                     14, 27, [&](std::size_t i, std::size_t p) { return cat.x[i] * cat.y[p]; },
                     [&](std::size_t i, std::size_t p) {
                       return span(cat.y, [&](int b) { return t.phi().at({dim(i), dim(p), b}); }, ihalf) +
                              span(cat.x, [&](int j) { return t.d_ij().at({dim(i), j, dim(p)}); }, half) +
                              span(cat.z, [&](int a) { return t.d_ia().at({dim(i), a, dim(p)}); }, half);
                     });
               }, ""});
  v.push_back({"10.7", "z_a y_p = i/2 t_apq y_q + 1/2 d_ab,p z_b + 1/2 d_ia,p x_i", [=](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const auto& t = ctx.tensors();
                 return check::pair_families(
                     7, 27, [&](std::size_t a, std::size_t p) { return cat.z[a] * cat.y[p]; },
                     [&](std::size_t a, std::size_t p) {
                       return span(cat.y, [&](int q) { return t.t_a().at({dim(a), dim(p), q}); }, ihalf) +
                              span(cat.z, [&](int b) { return t.d_ab().at({dim(a), b, dim(p)}); }, half) +
                              span(cat.x, [&](int i) { return t.d_ia().at({i, dim(a), dim(p)}); }, half);
                     });
               }, ""});
  v.push_back({"10.10", "c_abc = psi_abc / sqrt3", [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 return check::tensors(t.c_abc(), t.psi().scaled(ExactScalar::radical(3, Rational(1, 3))));
               }, ""});
  v.push_back({"10.100", "d_ii,alpha = 0, d_aa,alpha = 0, d_alpha,alpha,gamma = 0", [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 const Tensor z27("zero", {27});
                 return check::all({[&] { return check::tensors(contract("iia->a", {t.d_ij()}), z27, "d_ii"); },
                                    [&] { return check::tensors(contract("aag->g", {t.d_ab()}), z27, "d_aa"); },
                                    [&] { return check::tensors(contract("aag->g", {t.d_abg()}), z27, "d_aag"); }});
               },
               "printed form: d_ab,alpha = 0; read as the trace d_aa,alpha = 0"});
  v.push_back({"10.8", "[x_i, x_j] = i c_ijk x_k (no z or y residue)", [](const VerifierContext& ctx) {
                 const auto& x = ctx.catalog().x;
                 return bracket(x, x, ctx.tensors().c_ijk(), x);
               }, ""});
  v.push_back({"10.9A", "[z_a, z_b] = i c_abc z_c + i h_iab x_i", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const auto& t = ctx.tensors();
                 return check::pair_families(
                     7, 7, [&](std::size_t a, std::size_t b) { return commutator(cat.z[a], cat.z[b]); },
                     [&](std::size_t a, std::size_t b) {
                       return span(cat.z, [&](int c) { return t.c_abc().at({dim(a), dim(b), c}); }, ComplexScalar::i()) +
                              span(cat.x, [&](int i) { return t.h_iab().at({i, dim(a), dim(b)}); }, ComplexScalar::i());
                     });
               }, ""});
  v.push_back({"10.9A-reductive", "[z_a, z_b] has a nonzero z component for some (a,b), so the embedding is not symmetric",
               [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 bool x_seen = false;
                 for (int a = 0; a < 7; ++a)
                   for (int b = 0; b < 7; ++b) {
                     RepMatrix m = commutator(cat.z[static_cast<std::size_t>(a)], cat.z[static_cast<std::size_t>(b)]);
                     for (const auto& x : cat.x) x_seen = x_seen || !trace_product(m, x).is_zero();
                   }
                 if (!x_seen) return check::fail({}, cq(0), cq(0), "no x component");
                 for (int a = 0; a < 7; ++a)
                   for (int b = 0; b < 7; ++b) {
                     RepMatrix m = commutator(cat.z[static_cast<std::size_t>(a)], cat.z[static_cast<std::size_t>(b)]);
                     for (int c = 0; c < 7; ++c) {
                       ComplexScalar comp = trace_product(m, cat.z[static_cast<std::size_t>(c)]);
                       if (!comp.is_zero()) return check::witness({a, b, c}, comp, cq(0));
                     }
                   }
                 return check::fail({}, cq(0), cq(0), "no z component");
               }, ""});
  v.push_back({"10.9B", "[x_i, z_a] = i h_iab z_b", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 return bracket(cat.x, cat.z, ctx.tensors().h_iab(), cat.z);
               }, ""});
  return v;
}

// ---------------------------------------------------------------------------

inline std::vector<IdentityCase> bilinear_cases() {
  using namespace util;
  std::vector<IdentityCase> v;
  struct Row {
    const char* id;
    const char* text;
    const char* spec;
    const char* tensor;
    int n;
    long long num, den;
    const char* note;
  };
  const std::vector<Row> rows = {
      {"20.1", "c_ijk c_ijl = 8 delta_kl", "ijk,ijl->kl", "c_ijk", 14, 8, 1, ""},
      {"20.2", "h_iab h_jab = 2 delta_ij", "iab,jab->ij", "h_iab", 14, 2, 1, ""},
      {"11.51", "h_iab h_jab = 2 delta_ij", "iab,jab->ij", "h_iab", 14, 2, 1,
       "printed form: h_iab h_jab = 2 delta_ab; the free indices are i, j"},
      {"20.3", "h_iab h_iac = 4 delta_bc", "iab,iac->bc", "h_iab", 7, 4, 1, ""},
      {"20.4", "d_ij,alpha d_ij,beta = 32/9 delta", "ija,ijb->ab", "d_ij_alpha", 27, 32, 9, ""},
      {"20.5", "d_ij,alpha d_ik,alpha = 48/7 delta_jk", "ija,ika->jk", "d_ij_alpha", 14, 48, 7, ""},
      {"20.6", "c_abc c_abd = 2 delta_cd", "abc,abd->cd", "c_abc", 7, 2, 1, ""},
      {"20.7", "d_ab,alpha d_ab,beta = 2/9 delta", "aby,abz->yz", "d_ab_alpha", 27, 2, 9, ""},
      {"20.8", "d_ab,alpha d_ac,alpha = 6/7 delta_bc", "aby,acy->bc", "d_ab_alpha", 7, 6, 7, ""},
      {"20.9", "phi_i,alpha,beta phi_j,alpha,beta = 18 delta_ij", "iab,jab->ij", "phi_i_alpha_beta", 14, 18, 1, ""},
      {"20.10", "phi_i,alpha,beta phi_i,gamma,beta = 28/3 delta", "iab,icb->ac", "phi_i_alpha_beta", 27, 28, 3, ""},
      {"20.11", "d_abg d_abd = 110/7 delta", "abc,abd->cd", "d_alpha_beta_gamma", 27, 110, 7, ""},
      {"20.12", "d_ia,alpha d_ia,beta = 28/9 delta", "iay,iaz->yz", "d_ia_alpha", 27, 28, 9, ""},
      {"12.8", "d_ab,alpha d_ab,beta = 2/9 delta", "aby,abz->yz", "d_ab_alpha", 27, 2, 9, ""},
      {"11.10", "c_aef c_bef = 2 delta_ab", "aef,bef->ab", "c_abc", 7, 2, 1, ""},
      {"20.12-ij", "d_ia,alpha d_ja,alpha = 6 delta_ij", "iay,jay->ij", "d_ia_alpha", 14, 6, 1, ""},
      {"20.12-ab", "d_ia,alpha d_ib,alpha = 12 delta_ab", "iay,iby->ab", "d_ia_alpha", 7, 12, 1, ""},
  };
  for (const auto& r : rows)
    v.push_back({r.id, r.text, [r](const VerifierContext& ctx) {
                   const Tensor& t = ctx.tensors().get(r.tensor);
                   return check::tensors(contract(r.spec, {t, t}), kdelta(r.n, r.num, r.den));
                 },
                 r.note});
  return v;
}

// ---------------------------------------------------------------------------

inline std::vector<IdentityCase> lemma_cases() {
  using namespace util;
  std::vector<IdentityCase> v;
  enum Fam { H, C, Y };
  auto fam = [](const DerivedMatrices& d, Fam f) -> const Family& { return f == H ? d.H : f == C ? d.C : d.Y; };
  struct Row {
    const char* id;
    const char* text;
    Fam outer, inner;
    long long num, den;
  };
  const std::vector<Row> rows = {
      {"21.1", "H_i H_j H_i = 0", H, H, 0, 1},          {"21.2", "H_i C_a H_i = 2 C_a", H, C, 2, 1},
      {"21.3", "H_i Y_a H_i = -2/3 Y_a", H, Y, -2, 3},  {"21.4", "C_a H_i C_a = H_i", C, H, 1, 1},
      {"21.5", "C_a C_b C_a = -C_b", C, C, -1, 1},      {"21.6", "C_a Y_al C_a = -1/3 Y_al", C, Y, -1, 3},
      {"21.7", "Y_a Y_b Y_a = 5/7 Y_b", Y, Y, 5, 7},    {"21.8", "Y_a H_i Y_a = -9/7 H_i", Y, H, -9, 7},
      {"21.9", "Y_a C_b Y_a = -9/7 C_b", Y, C, -9, 7},
  };
  for (const auto& r : rows)
    v.push_back({r.id, r.text, [r, fam](const VerifierContext& ctx) {
                   const auto& d = ctx.derived();
                   const Family& outer = fam(d, r.outer);
                   const Family& inner = fam(d, r.inner);
                   return check::families(
                       inner.size(), [&](std::size_t k) { return sandwich(outer, inner[k]); },
                       [&](std::size_t k) { return cq(r.num, r.den) * inner[k]; });
                 },
                 ""});

  struct Row2 {
    const char* id;
    const char* text;
    Fam inner;
    long long k;
    const char* note;
  };
  const std::vector<Row2> rows2 = {
      {"21.21", "H_i H_k H_i + C_e H_k C_e = H_k", H, 1, ""},
      {"21.22", "H_i C_a H_i + C_e C_a C_e = C_a", C, 1,
       "printed form: right side -C_a; the lemmas H_i C_a H_i = 2 C_a and C_e C_a C_e = -C_a force +C_a"},
      {"21.23", "H_i Y_a H_i + C_e Y_a C_e = -Y_a", Y, -1, ""},
  };
  for (const auto& r : rows2)
    v.push_back({r.id, r.text, [r, fam](const VerifierContext& ctx) {
                   const auto& d = ctx.derived();
                   const Family& inner = fam(d, r.inner);
                   return check::families(
                       inner.size(), [&](std::size_t k) { return sandwich(d.H, inner[k]) + sandwich(d.C, inner[k]); },
                       [&](std::size_t k) { return cq(r.k) * inner[k]; });
                 },
                 r.note});

  v.push_back({"21.24", "(C_e X C_e)_cd = tr(C_d C_c X) = k X_cd; k = 1, -1, -1/3 for H, C, Y",
               [fam](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 auto run = [&](Fam f, const ComplexScalar& k, const std::string& name) {
                   const Family& F = fam(d, f);
                   return check::all({
                       [&] {
                         return check::families(
                             F.size(), [&](std::size_t n) { return sandwich(d.C, F[n]); },
                             [&](std::size_t n) {
                               RepMatrix m(7);
                               for (std::size_t c = 0; c < 7; ++c)
                                 for (std::size_t e = 0; e < 7; ++e) m(c, e) = trace_product(d.C[e] * d.C[c], F[n]);
                               return m;
                             },
                             name + " trace form");
                       },
                       [&] {
                         return check::families(
                             F.size(), [&](std::size_t n) { return sandwich(d.C, F[n]); },
                             [&](std::size_t n) { return k * F[n]; }, name + " multiple");
                       },
                   });
                 };
                 return check::all({[&] { return run(H, cq(1), "H"); }, [&] { return run(C, cq(-1), "C"); },
                                    [&] { return run(Y, cq(-1, 3), "Y"); }});
               },
               "printed form of the C line: tr(C_d C_a C_c) = -(C_a)_cd; that trace equals +(C_a)_cd, checked as tr(C_d C_c C_a)"});

  v.push_back({"22.1", "d_ij,alpha = tr(H_i H_j Y_alpha) and d_ij,a d_ij,b = tr(H_i H_j Y_a) tr(H_i H_j Y_b)",
               [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 const auto& dij = ctx.tensors().d_ij();
                 Tensor T("T", {14, 14, 27});
                 for (int i = 0; i < 14; ++i)
                   for (int j = 0; j < 14; ++j) {
                     RepMatrix hh = d.H[static_cast<std::size_t>(i)] * d.H[static_cast<std::size_t>(j)];
                     for (int a = 0; a < 27; ++a) {
                       ComplexScalar tr = trace_product(hh, d.Y[static_cast<std::size_t>(a)]);
                       if (!tr.is_real()) return check::fail({i, j, a}, tr, dij.at({i, j, a}), "real trace");
                       T.at({i, j, a}) = tr.re();
                     }
                   }
                 return check::all({[&] { return check::tensors(T, dij, "trace form"); },
                                    [&] {
                                      return check::tensors(contract("ija,ijb->ab", {dij, dij}),
                                                            contract("ija,ijb->ab", {T, T}), "contraction");
                                    }});
               }, ""});

  v.push_back({"22.2", "c_ijk c_ijl = -tr(H_i H_j H_k) tr(H_i H_j H_l) = -tr(H_j H_k H_j H_l - H_j H_k H_l H_j); tr(C_e H_j H_k) = 0",
               [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 const auto& c = ctx.tensors().c_ijk();
                 Tensor lhs = contract("ijk,ijl->kl", {c, c});
                 Tensor T("T", {14, 14, 14});
                 for (int i = 0; i < 14; ++i)
                   for (int j = 0; j < 14; ++j) {
                     RepMatrix hh = d.H[static_cast<std::size_t>(i)] * d.H[static_cast<std::size_t>(j)];
                     for (int k = 0; k < 14; ++k) {
                       // tr(HHH) is i times a real number; store the real factor
                       ComplexScalar tr = trace_product(hh, d.H[static_cast<std::size_t>(k)]);
                       if (!tr.re().is_zero()) return check::fail({i, j, k}, tr, cq(0), "imaginary trace");
                       T.at({i, j, k}) = tr.im();
                     }
                   }
                 // -(i t)(i t') = t t'
                 Tensor mid = contract("ijk,ijl->kl", {T, T});
                 Tensor last("last", {14, 14});
                 for (int k = 0; k < 14; ++k)
                   for (int l = 0; l < 14; ++l) {
                     ComplexScalar s;
                     for (std::size_t j = 0; j < 14; ++j) {
                       const auto& Hj = d.H[j];
                       const auto& Hk = d.H[static_cast<std::size_t>(k)];
                       const auto& Hl = d.H[static_cast<std::size_t>(l)];
                       s -= trace_product(Hj * Hk, Hj * Hl) - trace_product(Hj * Hk, Hl * Hj);
                     }
                     if (!s.is_real()) return check::fail({k, l}, s, lhs.at({k, l}), "real expansion");
                     last.at({k, l}) = s.re();
                   }
                 return check::all({
                     [&] { return check::tensors(lhs, mid, "trace product"); },
                     [&] { return check::tensors(lhs, last, "expanded"); },
                     [&] {
                       for (int e = 0; e < 7; ++e)
                         for (int j = 0; j < 14; ++j)
                           for (int k = 0; k < 14; ++k) {
                             ComplexScalar tr = trace_product(d.C[static_cast<std::size_t>(e)] * d.H[static_cast<std::size_t>(j)],
                                                              d.H[static_cast<std::size_t>(k)]);
                             if (!tr.is_zero()) return check::fail({e, j, k}, tr, cq(0), "tr(C H H)");
                           }
                       return check::pass();
                     },
                 });
               },
               "printed form: -tr(H_j H_k H_j H_l + H_j H_k H_l H_j); the completeness relation gives a minus sign between the two terms"});
  return v;
}

// ---------------------------------------------------------------------------

inline std::vector<IdentityCase> completeness_cases() {
  using namespace util;
  std::vector<IdentityCase> v;
  v.push_back({"13.4", "(H_i)_ab (H_i)_cd + (C_e)_ab (C_e)_cd = delta_ad delta_bc - delta_ac delta_bd",
               [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 return outer_sum({&d.H, &d.C}, dd(7, "ad,bc") - dd(7, "ac,bd"));
               }, ""});
  v.push_back({"13.5", "(Y_a)_ab (Y_a)_cd = -2/7 delta_ab delta_cd + delta_ad delta_bc + delta_ac delta_bd",
               [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 return outer_sum({&d.Y}, dd(7, "ab,cd").scaled(Rational(-2, 7)) + dd(7, "ad,bc") + dd(7, "ac,bd"));
               }, ""});
  v.push_back({"13.6", "(H_i)_ab (H_i)_cd = delta_ad delta_bc - delta_ac delta_bd + 1/3 psi_eab psi_ecd",
               [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 const auto& p = ctx.tensors().psi();
                 return outer_sum({&d.H}, dd(7, "ad,bc") - dd(7, "ac,bd") +
                                              contract("eab,ecd->abcd", {p, p}).scaled(Rational(1, 3)));
               }, ""});
  v.push_back({"13.7", "(x_i)_ab (x_i)_cd + (z_e)_ab (z_e)_cd = delta_ad delta_bc - M_ac M_bd", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 Tensor M = real_tensor(cat.M, "M");
                 return outer_sum({&cat.x, &cat.z}, dd(7, "ad,bc") - contract("ac,bd->abcd", {M, M}));
               }, ""});

  auto axioms = [](const ProjectorSet& ps) {
    const std::size_t n2 = ps.P[0].size();
    PairMatrix sym(n2), anti(n2);
    for (std::size_t k = 0; k < ps.P.size(); ++k) {
      if (!(ps.P[k] * ps.P[k] == ps.P[k])) return check::fail({static_cast<int>(k)}, {}, {}, "idempotent " + ps.labels[k]);
      for (std::size_t l = 0; l < ps.P.size(); ++l)
        if (l != k && !(ps.P[k] * ps.P[l]).is_zero())
          return check::fail({static_cast<int>(k), static_cast<int>(l)}, {}, {}, "orthogonal");
      const ExactScalar tr = ps.P[k].trace();
      if (!(tr == ExactScalar(ps.dims[k]))) return check::fail({static_cast<int>(k)}, tr, cq(ps.dims[k]), "pair-trace " + ps.labels[k]);
      (ps.symmetric[k] ? sym : anti) += ps.P[k];
    }
    return check::all({[&] { return check::matrices(sym, ps.I_S, {}, "sum symmetric"); },
                       [&] { return check::matrices(anti, ps.I_A, {}, "sum antisymmetric"); },
                       [&] { return check::matrices(ps.I_S + ps.I_A, PairMatrix::identity(n2), {}, "I_S + I_A"); }});
  };
  v.push_back({"26.7", "7x7 projectors 1, 27, 7, 14: idempotent, orthogonal, complete, pair-traces 1, 27, 7, 14",
               [axioms](const VerifierContext& ctx) { return axioms(ctx.projectors7()); }, ""});
  v.push_back({"26.8", "(Y_a)_ab (Y_a)_cd = 2 P27_ab,cd", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 return outer_sum({&d.Y}, pair_tensor(ctx.projectors7().get("27"), 7).scaled(Rational(2)));
               }, ""});
  v.push_back({"26.9", "(H_i)_ab (H_i)_cd + (C_e)_ab (C_e)_cd = -2 P(A)_ab,cd = delta_ad delta_bc - delta_ac delta_bd",
               [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 const auto& ps = ctx.projectors7();
                 return check::all({[&] { return outer_sum({&d.H, &d.C}, pair_tensor(ps.I_A, 7).scaled(Rational(-2)), "P(A)"); },
                                    [&] { return outer_sum({&d.H, &d.C}, dd(7, "ad,bc") - dd(7, "ac,bd"), "deltas"); }});
               },
               "printed form: 2 P(A) = delta_ac delta_bd - delta_ad delta_bc; the completeness relation gives the opposite sign"});
  v.push_back({"26.10", "(C_e)_ab (C_e)_cd = -c_eab c_ecd = -2 P7_ab,cd", [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 const auto& c = ctx.tensors().c_abc();
                 return check::all({[&] { return outer_sum({&d.C}, -contract("eab,ecd->abcd", {c, c}), "c c"); },
                                    [&] {
                                      return outer_sum({&d.C}, pair_tensor(ctx.projectors7().get("7"), 7).scaled(Rational(-2)), "P7");
                                    }});
               }, ""});
  v.push_back({"26.11", "(H_i)_ab (H_i)_cd = delta_ad delta_bc - delta_ac delta_bd + c_eab c_ecd = -2 P14_ab,cd",
               [](const VerifierContext& ctx) {
                 const auto& d = ctx.derived();
                 const auto& c = ctx.tensors().c_abc();
                 return check::all({[&] {
                                      return outer_sum({&d.H}, dd(7, "ad,bc") - dd(7, "ac,bd") + contract("eab,ecd->abcd", {c, c}),
                                                       "deltas");
                                    },
                                    [&] {
                                      return outer_sum({&d.H}, pair_tensor(ctx.projectors7().get("14"), 7).scaled(Rational(-2)), "P14");
                                    }});
               },
               "printed form: (delta_ac delta_bd - delta_ad delta_bc) - c_eab c_ecd = 2 P14; every term has the opposite sign"});
  v.push_back({"26.18", "14x14 projectors 1, 27, 77, 14, 77': idempotent, orthogonal, complete, pair-traces 1, 27, 77, 14, 77",
               [axioms](const VerifierContext& ctx) { return axioms(ctx.projectors14()); }, ""});
  return v;
}

}  // namespace g2kit::cases
