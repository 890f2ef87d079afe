#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "g2kit/casimir.hpp"
#include "g2kit/suites_structure.hpp"
#include "g2kit/verifier.hpp"

namespace g2kit::cases {

namespace util {

inline PairMatrix pscaled(const PairMatrix& m, long long num, long long den = 1) {
  return ExactScalar(Rational(num, den)) * m;
}

/// Pair-matrix equality; the tuple is (r, s, i, j).
inline CaseResult pairs(const PairMatrix& lhs, const PairMatrix& rhs, int n, const std::string& what = {}) {
  lhs.check_same(rhs);
  for (std::size_t r = 0; r < lhs.size(); ++r)
    for (std::size_t c = 0; c < lhs.size(); ++c)
      if (!(lhs(r, c) == rhs(r, c))) {
        const int ri = static_cast<int>(r), ci = static_cast<int>(c);
        return check::fail({ri / n, ri % n, ci / n, ci % n}, lhs(r, c), rhs(r, c), what);
      }
  return check::pass();
}

inline CaseResult pair_zero(const PairMatrix& m, int n, const std::string& what = {}) {
  return pairs(m, PairMatrix(m.size()), n, what);
}

/// Runs `cmp(k, sample)` on each sample vector; the tuple names the sample.
inline CaseResult on_samples(const VerifierContext& ctx,
                             const std::function<std::pair<ExactScalar, ExactScalar>(const SampleData&)>& sides,
                             const std::string& what = "sample") {
  const auto& s = ctx.samples();
  for (std::size_t k = 0; k < s.size(); ++k) {
    auto [l, r] = sides(s[k]);
    if (!(l == r)) return check::fail({static_cast<int>(k)}, l, r, what);
  }
  return check::pass();
}

inline ExactScalar rat(long long p, long long q = 1) { return ExactScalar(Rational(p, q)); }
inline SlicePoly prat(long long p, long long q = 1) { return SlicePoly(rat(p, q)); }

inline SlicePoly ppow(const SlicePoly& p, int k) {
  SlicePoly r = prat(1);
  for (int j = 0; j < k; ++j) r = r * p;
  return r;
}
inline ExactScalar spow(const ExactScalar& x, int k) {
  ExactScalar r = rat(1);
  for (int j = 0; j < k; ++j) r = r * x;
  return r;
}

}  // namespace util

// ---------------------------------------------------------------------------

inline std::vector<IdentityCase> second_class_cases() {
  using namespace util;
  std::vector<IdentityCase> v;

  v.push_back({"27.1", "Lambda P(R) = lambda_R P(R), lambda_R = (c2(R) - 16)/2: -8, -10/3, 2, -4, 0", [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 const std::vector<std::pair<std::string, std::pair<unsigned, unsigned>>> reps = {
                     {"1", {0, 0}}, {"27", {0, 2}}, {"77", {2, 0}}, {"14", {1, 0}}, {"77'", {0, 3}}};
                 const std::vector<Rational> printed = {Rational(-8), Rational(-10, 3), Rational(2), Rational(-4), Rational(0)};
                 for (std::size_t k = 0; k < reps.size(); ++k) {
                   const Rational lam = (g2_c2(reps[k].second.first, reps[k].second.second) - Rational(16)) / Rational(2);
                   if (!(lam == printed[k]))
                     return check::fail({static_cast<int>(k)}, ExactScalar(lam), ExactScalar(printed[k]), "eigenvalue " + reps[k].first);
                   const PairMatrix& P = ps.get(reps[k].first);
                   auto r = pairs(ps.Lambda * P, ExactScalar(lam) * P, 14, "Lambda P" + reps[k].first);
                   if (!r.ok()) return r;
                 }
                 return check::pass();
               }, ""});

  v.push_back({"27.11", "(Lambda)_rs,ij = -c_pri c_psj = sum_p (ad_p)_ri (ad_p)_sj", [](const VerifierContext& ctx) {
                 const auto& ad = ctx.derived().ad;
                 RepMatrix k(196);
                 for (const auto& a : ad) k += kron(a, a);
                 const PairMatrix& L = ctx.projectors14().Lambda;
                 for (std::size_t r = 0; r < 196; ++r)
                   for (std::size_t c = 0; c < 196; ++c)
                     if (!(k(r, c) == ComplexScalar(L(r, c)))) {
                       const int ri = static_cast<int>(r), ci = static_cast<int>(c);
                       return check::fail({ri / 14, ri % 14, ci / 14, ci % 14}, k(r, c), L(r, c));
                     }
                 return check::pass();
               }, ""});

  v.push_back({"27.6", "(Lambda + 8) I_S P(1) = 0", [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 return pair_zero((ps.Lambda + pscaled(PairMatrix::identity(196), 8)) * ps.I_S * ps.get("1"), 14);
               }, ""});
  v.push_back({"27.7", "(Lambda + 10/3) I_S P(27) = 0", [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 return pair_zero((ps.Lambda + pscaled(PairMatrix::identity(196), 10, 3)) * ps.I_S * ps.get("27"), 14);
               }, ""});
  v.push_back({"27.8", "(Lambda - 2) I_S P(77) = 0", [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 return pair_zero((ps.Lambda - pscaled(PairMatrix::identity(196), 2)) * ps.I_S * ps.get("77"), 14);
               }, ""});
  v.push_back({"27.9", "P(1) + P(27) + P(77) = I_S", [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 return pairs(ps.get("1") + ps.get("27") + ps.get("77"), ps.I_S, 14);
               }, ""});
  v.push_back({"27.10", "Lambda I_S + 8 P(1) + 10/3 P(27) - 2 P(77) = 0 = Lambda I_S + 10 P(1) + 16/3 P(27) - 2 I_S",
               [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 const PairMatrix LS = ps.Lambda * ps.I_S;
                 return check::all({
                     [&] {
                       return pair_zero(LS + pscaled(ps.get("1"), 8) + pscaled(ps.get("27"), 10, 3) - pscaled(ps.get("77"), 2), 14,
                                        "first line");
                     },
                     [&] {
                       return pair_zero(LS + pscaled(ps.get("1"), 10) + pscaled(ps.get("27"), 16, 3) - pscaled(ps.I_S, 2), 14,
                                        "second line");
                     },
                 });
               }, ""});

  v.push_back({"27.12", "3 d_rsa d_kla = c_prk c_psl + c_prl c_psk + 2(d_rk d_sl + d_rl d_sk) - 10/7 d_rs d_kl",
               [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 Tensor lhs = contract("rsa,kla->rskl", {t.d_ij(), t.d_ij()}).scaled(Rational(3));
                 Tensor rhs = contract("prk,psl->rskl", {t.c_ijk(), t.c_ijk()}) + contract("prl,psk->rskl", {t.c_ijk(), t.c_ijk()}) +
                              (dd(14, "ac,bd") + dd(14, "ad,bc")).scaled(Rational(2)) - dd(14, "ab,cd").scaled(Rational(10, 7));
                 return check::tensors(lhs, rhs);
               }, ""});
  v.push_back({"27.13", "d_(ij^a d_k)la = 6/7 delta_(ij delta_k)l", [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 Tensor lhs = symmetrize(contract("ija,kla->ijkl", {t.d_ij(), t.d_ij()}), {0, 1, 2});
                 Tensor rhs = symmetrize(dd(14, "ab,cd"), {0, 1, 2}).scaled(Rational(6, 7));
                 return check::tensors(lhs, rhs);
               }, ""});
  v.push_back({"27.14", "c_pri c_psj d_ija = 10/3 d_rsa", [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 return check::tensors(contract("pri,psj,ija->rsa", {t.c_ijk(), t.c_ijk(), t.d_ij()}),
                                       t.d_ij().scaled(Rational(10, 3)));
               }, ""});
  v.push_back({"27.15", "Lambda^2 I_S + 4/3 Lambda I_S - 140/3 P(1) - 20/3 I_S = 0", [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 const PairMatrix LS = ps.Lambda * ps.I_S;
                 return pair_zero(ps.Lambda * LS + pscaled(LS, 4, 3) - pscaled(ps.get("1"), 140, 3) - pscaled(ps.I_S, 20, 3), 14);
               }, ""});
  v.push_back({"27.16", "Lambda^2 I_A + 4 Lambda I_A = 0", [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 const PairMatrix LA = ps.Lambda * ps.I_A;
                 return pair_zero(ps.Lambda * LA + pscaled(LA, 4), 14);
               }, ""});
  v.push_back({"27.17", "(Lambda + 4) I_A P(14) = 0", [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 return pair_zero((ps.Lambda + pscaled(PairMatrix::identity(196), 4)) * ps.I_A * ps.get("14"), 14);
               }, ""});
  v.push_back({"27.18", "Lambda I_A + 4 P(14) = 0", [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 return pair_zero(ps.Lambda * ps.I_A + pscaled(ps.get("14"), 4), 14);
               }, ""});
  v.push_back({"27.19", "Lambda^2 + 4/3 Lambda I_S + 4 Lambda I_A - 140/3 P(1) - 20/3 I_S = 0", [](const VerifierContext& ctx) {
                 const auto& ps = ctx.projectors14();
                 const PairMatrix& L = ps.Lambda;
                 return pair_zero(L * L + pscaled(L * ps.I_S, 4, 3) + pscaled(L * ps.I_A, 4) - pscaled(ps.get("1"), 140, 3) -
                                      pscaled(ps.I_S, 20, 3),
                                  14);
               }, ""});
  v.push_back({"27.20", "3 c_jmr c_knr c_mps c_nqs = 10(d_jp d_kq + d_jq d_kp + d_jk d_pq) + 8 c_jpr c_kqr - 4 c_jqr c_kpr",
               [](const VerifierContext& ctx) {
                 const auto& c = ctx.tensors().c_ijk();
                 Tensor left = contract("jmr,knr->jkmn", {c, c});
                 Tensor right = contract("mps,nqs->mnpq", {c, c});
                 Tensor lhs = contract("jkmn,mnpq->jkpq", {left, right}).scaled(Rational(3));
                 Tensor rhs = (dd(14, "ac,bd") + dd(14, "ad,bc") + dd(14, "ab,cd")).scaled(Rational(10)) +
                              contract("jpr,kqr->jkpq", {c, c}).scaled(Rational(8)) -
                              contract("jqr,kpr->jkpq", {c, c}).scaled(Rational(4));
                 return check::tensors(lhs, rhs);
               }, ""});
  v.push_back({"27.21", "tr ad_(j ad_k ad_p ad_q) = 10 delta_(jk delta_pq)", [](const VerifierContext& ctx) {
                 const auto& c = ctx.tensors().c_ijk();
                 // (ad_j)_ab = -i c_jab, and (-i)^4 = 1
                 Tensor jk = contract("jab,kbc->jkac", {c, c});
                 Tensor pq = contract("pcd,qda->pqca", {c, c});
                 Tensor tr = contract("jkac,pqca->jkpq", {jk, pq});
                 return check::tensors(symmetrize(tr), sym_delta2(14).scaled(Rational(10)));
               }, ""});
  v.push_back({"28.1", "tr x_(i x_j x_k x_l) = tr H_(i H_j H_k H_l) = delta_(ij delta_kl)", [](const VerifierContext& ctx) {
                 const Tensor d2 = sym_delta2(14);
                 return check::all({[&] { return check::tensors(symmetrize(ctx.x4()), d2, "x"); },
                                    [&] { return check::tensors(symmetrize(ctx.h4()), d2, "H"); }});
               }, ""});
  v.push_back({"28.2", "tr x_(i x_j x_k x_l) = 4/7 delta_(ij delta_kl) + 1/2 d_(ij^a d_k)la", [](const VerifierContext& ctx) {
                 const auto& d = ctx.tensors().d_ij();
                 Tensor rhs = sym_delta2(14).scaled(Rational(4, 7)) +
                              symmetrize(contract("ija,kla->ijkl", {d, d}), {0, 1, 2}).scaled(Rational(1, 2));
                 return check::tensors(symmetrize(ctx.x4()), rhs);
               }, ""});
  v.push_back({"28.3", "tr A^4 = (tr A^2 / 2)^2", [](const VerifierContext& ctx) {
                 const auto& st = ctx.slice_traces_A();
                 return check::all({
                     [&] { return check::polys(st[4], ppow(st[2], 2).scaled(Rational(1, 4)), "slice"); },
                     [&] {
                       return on_samples(ctx, [](const SampleData& s) {
                         return std::pair{s.trA[4], (s.trA[2] * s.trA[2]).scaled(Rational(1, 4))};
                       });
                     },
                 });
               }, ""});
  v.push_back({"29.3", "tr(x_i x_j x_k x_l) = tr(x_(i x_j x_k x_l)) - 1/3(c_klt c_ijt - c_ilt c_jkt)", [](const VerifierContext& ctx) {
                 const auto& c = ctx.tensors().c_ijk();
                 Tensor rhs = symmetrize(ctx.x4()) -
                              (contract("klt,ijt->ijkl", {c, c}) - contract("ilt,jkt->ijkl", {c, c})).scaled(Rational(1, 3));
                 return check::tensors(ctx.x4(), rhs);
               }, ""});
  v.push_back({"47.4", "tr A^4 coefficient tensor: tr x_(i x_j x_k x_l) = delta_(ij delta_kl)", [](const VerifierContext& ctx) {
                 return check::tensors(symmetrize(ctx.x4()), sym_delta2(14));
               },
               "the rank-8 and rank-10 companions are checked contracted with A, as tr A^8 and tr A^10 in the invariants suite"});
  return v;
}

// ---------------------------------------------------------------------------

inline std::vector<IdentityCase> trilinear_cases() {
  using namespace util;
  std::vector<IdentityCase> v;
  v.push_back({"35.1", "c_ijk = -i tr x_i x_j x_k = -i tr H_i H_j H_k = h_iab h_jbc h_kca", [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 auto triple = [&](const Family& f, const std::string& what) {
                   for (int i = 0; i < 14; ++i)
                     for (int j = 0; j < 14; ++j) {
                       RepMatrix ij = f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
                       for (int k = 0; k < 14; ++k) {
                         ComplexScalar l = -ComplexScalar::i() * trace_product(ij, f[static_cast<std::size_t>(k)]);
                         ComplexScalar r(t.c_ijk().at({i, j, k}));
                         if (!(l == r)) return check::fail({i, j, k}, l, r, what);
                       }
                     }
                   return check::pass();
                 };
                 return check::all({
                     [&] { return triple(ctx.catalog().x, "x"); },
                     [&] { return triple(ctx.derived().H, "H"); },
                     [&] { return check::tensors(contract("iab,jbc,kca->ijk", {t.h_iab(), t.h_iab(), t.h_iab()}), t.c_ijk(), "h h h"); },
                 });
               }, ""});
  struct Row {
    const char* id;
    const char* text;
    const char* spec;
    std::vector<const char*> ops;
    const char* rhs;
    long long num, den;  // rhs multiple; a negative den scales the left side by -den instead
  };
  const std::vector<Row> rows = {
      {"35.2", "c_abc = c_eaf c_fbg c_gce", "eaf,fbg,gce->abc", {"c_abc", "c_abc", "c_abc"}, "c_abc", 1, 1},
      {"35.3", "d_abg = -27 d_ab,a d_bc,b d_ca,g", "aby,bcz,caw->yzw", {"d_ab_alpha", "d_ab_alpha", "d_ab_alpha"},
       "d_alpha_beta_gamma", 1, -27},
      {"35.4", "c_piq c_qjr c_rkp = -4 c_ijk", "piq,qjr,rkp->ijk", {"c_ijk", "c_ijk", "c_ijk"}, "c_ijk", -4, 1},
      {"35.5", "d_jka d_lia c_jlq = 20/7 c_kiq", "jka,lia,jlq->kiq", {"d_ij_alpha", "d_ij_alpha", "c_ijk"}, "c_ijk", 20, 7},
      {"35.6", "c_pri c_psj d_ija = 10/3 d_rsa", "pri,psj,ija->rsa", {"c_ijk", "c_ijk", "d_ij_alpha"}, "d_ij_alpha", 10, 3},
      {"35.7", "d_ija d_jkb d_abg = 22/21 d_ikg", "ija,jkb,abg->ikg", {"d_ij_alpha", "d_ij_alpha", "d_alpha_beta_gamma"},
       "d_ij_alpha", 22, 21},
      {"35.8", "d_pqa d_pib d_qjb = -58/63 d_ija", "pqa,pib,qjb->ija", {"d_ij_alpha", "d_ij_alpha", "d_ij_alpha"}, "d_ij_alpha",
       -58, 63},
      {"35.9", "d_lma d_mnb d_nlg = 53/7 d_abg", "lma,mnb,nlg->abg",
       {"d_alpha_beta_gamma", "d_alpha_beta_gamma", "d_alpha_beta_gamma"}, "d_alpha_beta_gamma", 53, 7},
  };
  for (const auto& r : rows)
    v.push_back({r.id, r.text, [r](const VerifierContext& ctx) {
                   const auto& t = ctx.tensors();
                   std::vector<const Tensor*> ops;
                   for (const char* n : r.ops) ops.push_back(&t.get(n));
                   const Tensor lhs = contract(r.spec, ops);
                   if (r.den < 0) return check::tensors(lhs.scaled(Rational(r.den)), t.get(r.rhs));
                   return check::tensors(lhs, t.get(r.rhs).scaled(Rational(r.num, r.den)));
                 },
                 ""});

  v.push_back({"35.12", "c_ijp c_klp = 8/7(d_ik d_jl - d_jk d_il) + (d_ika d_jla - d_jka d_ila)", [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 Tensor lhs = contract("ijp,klp->ijkl", {t.c_ijk(), t.c_ijk()});
                 Tensor rhs = (dd(14, "ac,bd") - dd(14, "bc,ad")).scaled(Rational(8, 7)) +
                              contract("ika,jla->ijkl", {t.d_ij(), t.d_ij()}) - contract("jka,ila->ijkl", {t.d_ij(), t.d_ij()});
                 return check::tensors(lhs, rhs);
               }, ""});
  v.push_back({"35.51", "c_pri c_psj d_ijb + d_pqb d_pra d_qsa = 152/63 d_rsb", [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 Tensor lhs = contract("pri,psj,ijb->rsb", {t.c_ijk(), t.c_ijk(), t.d_ij()}) +
                              contract("pqb,pra,qsa->rsb", {t.d_ij(), t.d_ij(), t.d_ij()});
                 return check::tensors(lhs, t.d_ij().scaled(Rational(152, 63)));
               }, ""});
  v.push_back({"35.14", "d_ija d_jkb d_kig is not a multiple of d_abg (a violating tuple must exist)", [](const VerifierContext& ctx) {
                 const auto& t = ctx.tensors();
                 Tensor e = contract("ija,jkb,kig->abg", {t.d_ij(), t.d_ij(), t.d_ij()});
                 const Tensor& d = t.d_abg();
                 ExactScalar ratio;
                 bool found = false;
                 for (std::size_t k = 0; k < d.size() && !found; ++k)
                   if (!d.flat(k).is_zero()) {
                     ratio = e.flat(k) * d.flat(k).inverse();
                     found = true;
                   }
                 if (!found) return check::fail({}, {}, {}, "d_abg is zero");
                 auto m = first_mismatch(e, d.scaled(ratio));
                 if (!m) return check::fail({}, ratio, ratio, "proportional");
                 CaseResult r = check::witness(m->index, m->lhs, m->rhs);
                 r.notes.push_back("candidate ratio " + ComplexScalar(ratio).str());
                 return r;
               }, ""});
  return v;
}

// ---------------------------------------------------------------------------

inline std::vector<IdentityCase> casimir_cases() {
  using namespace util;
  std::vector<IdentityCase> v;
  v.push_back({"25.1", "dim(l,m): 1, 7, 14, 27, 77, 77", [](const VerifierContext&) {
                 const std::vector<std::pair<std::pair<unsigned, unsigned>, long>> t = {
                     {{0, 0}, 1}, {{0, 1}, 7}, {{1, 0}, 14}, {{0, 2}, 27}, {{2, 0}, 77}, {{0, 3}, 77}};
                 for (std::size_t k = 0; k < t.size(); ++k) {
                   mpz_class d = g2_dim(t[k].first.first, t[k].first.second);
                   if (d != t[k].second)
                     return check::fail({static_cast<int>(k)}, ExactScalar(Rational(d)), cq(t[k].second), "dim");
                 }
                 return check::pass();
               }, ""});
  v.push_back({"25.3", "c2(l,m): 0, 4, 8, 28/3, 20, 16", [](const VerifierContext&) {
                 const std::vector<std::pair<std::pair<unsigned, unsigned>, Rational>> t = {
                     {{0, 0}, Rational(0)},     {{0, 1}, Rational(4)},  {{1, 0}, Rational(8)},
                     {{0, 2}, Rational(28, 3)}, {{2, 0}, Rational(20)}, {{0, 3}, Rational(16)}};
                 for (std::size_t k = 0; k < t.size(); ++k) {
                   Rational c = g2_c2(t[k].first.first, t[k].first.second);
                   if (!(c == t[k].second)) return check::fail({static_cast<int>(k)}, ExactScalar(c), ExactScalar(t[k].second), "c2");
                 }
                 return check::pass();
               },
               "printed form: l^2 + m^2/3 + l m + 3 l + 5 m/3 gives 2 and 4 for the 7 and 14; twice that polynomial is used"});

  struct Row {
    const char* id;
    const char* text;
    std::vector<int> fams;  // 0 x, 1 H, 2 ad, 3 Phi, 4 C, 5 z, 6 Y, 7 y
    long long num, den;
    int lam, mu;  // -1 when no irrep check applies
  };
  const std::vector<Row> rows = {
      {"20.30", "ad_i ad_i = 8 = c2(1,0)", {2}, 8, 1, 1, 0},
      {"20.31", "H_i H_i = x_i x_i = 4 = c2(0,1)", {1, 0}, 4, 1, 0, 1},
      {"20.32", "C_a C_a = z_a z_a = 2", {4, 5}, 2, 1, -1, -1},
      {"20.33", "Phi_i Phi_i = 28/3 = c2(0,2)", {3}, 28, 3, 0, 2},
      {"20.34", "Y_a Y_a = y_a y_a = 54/7", {6, 7}, 54, 7, -1, -1},
  };
  for (const auto& r : rows)
    v.push_back({r.id, r.text, [r](const VerifierContext& ctx) {
                   const auto& cat = ctx.catalog();
                   const auto& d = ctx.derived();
                   const std::vector<const Family*> all = {&cat.x, &d.H, &d.ad, &d.Phi, &d.C, &cat.z, &d.Y, &cat.y};
                   const ExactScalar want = rat(r.num, r.den);
                   if (r.lam >= 0 && !(ExactScalar(g2_c2(static_cast<unsigned>(r.lam), static_cast<unsigned>(r.mu))) == want))
                     return check::fail({}, ExactScalar(g2_c2(static_cast<unsigned>(r.lam), static_cast<unsigned>(r.mu))), want,
                                        "c2");
                   for (int f : r.fams) {
                     const ExactScalar got = casimir_sum(*all[static_cast<std::size_t>(f)]);
                     if (!(got == want)) return check::fail({f}, got, want, "sum");
                   }
                   return check::pass();
                 },
                 ""});

  v.push_back({"29.4", "quartic Casimir = c2^2 + 28/3 c2 on 7, 14, 27: 160/3, 416/3, 1568/9", [](const VerifierContext& ctx) {
                 const auto& cat = ctx.catalog();
                 const auto& d = ctx.derived();
                 const std::vector<std::pair<const Family*, std::pair<unsigned, unsigned>>> reps = {
                     {&cat.x, {0, 1}}, {&d.ad, {1, 0}}, {&d.Phi, {0, 2}}};
                 const std::vector<Rational> frozen = {Rational(160, 3), Rational(416, 3), Rational(1568, 9)};
                 for (std::size_t k = 0; k < reps.size(); ++k) {
                   const Rational c2 = g2_c2(reps[k].second.first, reps[k].second.second);
                   const Rational formula = c2 * c2 + Rational(28, 3) * c2;
                   if (!(formula == frozen[k]))
                     return check::fail({static_cast<int>(k)}, ExactScalar(formula), ExactScalar(frozen[k]), "formula");
                   const ExactScalar q = quartic_casimir(cat.x, *reps[k].first);
                   if (!(q == ExactScalar(formula))) return check::fail({static_cast<int>(k)}, q, ExactScalar(formula), "partial trace");
                 }
                 return check::pass();
               }, ""});
  return v;
}

// ---------------------------------------------------------------------------

inline std::vector<IdentityCase> invariant_cases() {
  using namespace util;
  std::vector<IdentityCase> v;
  const SlicePoly a = SlicePoly::var_a(), b = SlicePoly::var_b();
  const SlicePoly a2 = a * a, b2 = b * b;

  v.push_back({"40.1", "d_ij^a d_kla A_j A_k A_l = 6/7 (A.A) A_i", [](const VerifierContext& ctx) {
                 const auto& sb = ctx.slice_bundle();
                 for (int i = 0; i < 14; ++i) {
                   auto r = check::polys(sb.V[static_cast<std::size_t>(i)],
                                         (sb.C2 * sb.A[static_cast<std::size_t>(i)]).scaled(Rational(6, 7)), "slice");
                   if (!r.ok()) return r;
                 }
                 const auto& s = ctx.samples();
                 for (std::size_t k = 0; k < s.size(); ++k)
                   for (std::size_t i = 0; i < 14; ++i) {
                     const auto& bu = s[k].bundle;
                     const ExactScalar rhs = (bu.C2 * bu.A[i]).scaled(Rational(6, 7));
                     if (!(bu.V[i] == rhs)) return check::fail({static_cast<int>(k), static_cast<int>(i)}, bu.V[i], rhs, "sample");
                   }
                 return check::pass();
               }, ""});
  v.push_back({"40.8", "B.D = A.C, B.B = 6/7 (A.A)^2", [](const VerifierContext& ctx) {
                 const auto& sb = ctx.slice_bundle();
                 return check::all({
                     [&] { return check::polys(sb.BD, sb.C6, "slice B.D"); },
                     [&] { return check::polys(sb.BB, (sb.C2 * sb.C2).scaled(Rational(6, 7)), "slice B.B"); },
                     [&] { return on_samples(ctx, [](const SampleData& s) { return std::pair{s.bundle.BD, s.bundle.C6}; }, "sample B.D"); },
                     [&] {
                       return on_samples(
                           ctx, [](const SampleData& s) { return std::pair{s.bundle.BB, (s.bundle.C2 * s.bundle.C2).scaled(Rational(6, 7))}; },
                           "sample B.B");
                     },
                 });
               }, ""});
  v.push_back({"40.11", "T_iiklpq = (4/5)(22/21)(6/7) delta_(kl delta_pq)", [](const VerifierContext& ctx) {
                 const Tensor T = traced_six_tensor(ctx.tensors());
                 return check::tensors(T, sym_delta2(14).scaled(Rational(4, 5) * Rational(22, 21) * Rational(6, 7)));
               }, ""});
  v.push_back({"40.10", "S_iiklpq = T_iiklpq - 88/441 delta_(ii delta_kl delta_pq) = 0", [](const VerifierContext& ctx) {
                 const Tensor S = traced_six_tensor(ctx.tensors()) - traced_delta3(14).scaled(Rational(88, 441));
                 return check::tensors(S, Tensor("zero", {14, 14, 14, 14}));
               }, ""});
  v.push_back({"41.2", "C2 = A.A = a^2 + b^2 and tr A^2 = 2(a^2 + b^2) on the slice", [a2, b2](const VerifierContext& ctx) {
                 return check::all({[&] { return check::polys(ctx.slice_bundle().C2, a2 + b2, "C2"); },
                                    [&] { return check::polys(ctx.slice_traces_A()[2], (a2 + b2).scaled(Rational(2)), "tr A^2"); }});
               }, ""});
  v.push_back({"41.3", "on the slice B_alpha and D_alpha vanish for alpha > 3", [a, b, a2, b2](const VerifierContext& ctx) {
                 const auto& sb = ctx.slice_bundle();
                 for (std::size_t al = 3; al < 27; ++al) {
                   if (!sb.B[al].is_zero()) return check::fail({static_cast<int>(al)}, {}, {}, "B");
                   if (!sb.D[al].is_zero()) return check::fail({static_cast<int>(al)}, {}, {}, "D");
                 }
                 const ExactScalar r23 = ExactScalar::radical(6, Rational(1, 3));  // sqrt(2/3)
                 const ExactScalar r421 = ExactScalar::radical(21, Rational(2, 21));  // sqrt(4/21)
                 const ExactScalar r121 = ExactScalar::radical(21, Rational(1, 21));  // sqrt(1/21)
                 const std::vector<SlicePoly> pb = {(a2 - b2).scaled(r23), (a * b).scaled(r23.scaled(Rational(2))),
                                                    (a2 + b2).scaled(r421)};
                 const SlicePoly a4 = a2 * a2, b4 = b2 * b2;
                 const std::vector<SlicePoly> pd = {
                     (a4.scaled(Rational(22, 21)) - (a2 * b2).scaled(Rational(4)) + b4.scaled(Rational(2, 7))).scaled(r23),
                     ((a2 * a * b).scaled(Rational(-40, 21)) + (a * b2 * b).scaled(Rational(24, 7))).scaled(r23),
                     ((a2 + b2) * (a2 + b2)).scaled(r121.scaled(Rational(-4, 7)))};
                 CaseResult r;
                 for (std::size_t k = 0; k < 3; ++k) {
                   r.notes.push_back("printed B_" + std::to_string(k + 1) + " = " + pb[k].pretty() +
                                     (pb[k] == sb.B[k] ? ": matches" : ": differs, computed " + sb.B[k].pretty()));
                   r.notes.push_back("printed D_" + std::to_string(k + 1) + " = " + pd[k].pretty() +
                                     (pd[k] == sb.D[k] ? ": matches" : ": differs, computed " + sb.D[k].pretty()));
                 }
                 return r;
               }, ""});

  const SlicePoly sextic = (a2 - b2) * (a2 * a2 - (a2 * b2).scaled(Rational(14)) + b2 * b2);
  v.push_back({"41.4", "C6 = 88/441 C2^3 + 4/9 (a^2 - b^2)(a^4 - 14 a^2 b^2 + b^4)", [sextic](const VerifierContext& ctx) {
                 const auto& sb = ctx.slice_bundle();
                 return check::polys(sb.C6, ppow(sb.C2, 3).scaled(Rational(88, 441)) + sextic.scaled(Rational(4, 9)));
               }, ""});
  v.push_back({"41.6", "C6 - 88/441 C2^3 = 4/9 (a^2 - b^2)(a^2 - 4ab + b^2)(a^2 + 4ab + b^2)", [a, b, a2, b2](const VerifierContext& ctx) {
                 const auto& sb = ctx.slice_bundle();
                 const SlicePoly ab4 = (a * b).scaled(Rational(4));
                 const SlicePoly rhs = ((a2 - b2) * (a2 - ab4 + b2) * (a2 + ab4 + b2)).scaled(Rational(4, 9));
                 return check::polys(sb.C6 - ppow(sb.C2, 3).scaled(Rational(88, 441)), rhs);
               }, ""});
  v.push_back({"41.7", "D.D = 16/21 C2 C6 + 88/343 C2^4", [](const VerifierContext& ctx) {
                 const auto& sb = ctx.slice_bundle();
                 const SlicePoly rhs = (sb.C2 * sb.C6).scaled(Rational(16, 21)) + ppow(sb.C2, 4).scaled(Rational(88, 343));
                 return check::all({[&] { return check::polys(sb.DD, rhs, "slice"); },
                                    [&] {
                                      return on_samples(ctx, [](const SampleData& s) {
                                        const auto& u = s.bundle;
                                        return std::pair{u.DD, (u.C2 * u.C6).scaled(Rational(16, 21)) + spow(u.C2, 4).scaled(Rational(88, 343))};
                                      });
                                    }});
               }, ""});
  v.push_back({"41.9", "C.C = 16/147 C2^2 (11/3 C6 + 71/49 C2^3)", [](const VerifierContext& ctx) {
                 const auto& sb = ctx.slice_bundle();
                 const SlicePoly rhs = (ppow(sb.C2, 2) * (sb.C6.scaled(Rational(11, 3)) + ppow(sb.C2, 3).scaled(Rational(71, 49))))
                                           .scaled(Rational(16, 147));
                 return check::all({[&] { return check::polys(sb.CC, rhs, "slice"); },
                                    [&] {
                                      return on_samples(ctx, [](const SampleData& s) {
                                        const auto& u = s.bundle;
                                        return std::pair{u.CC, (spow(u.C2, 2) * (u.C6.scaled(Rational(11, 3)) +
                                                                                  spow(u.C2, 3).scaled(Rational(71, 49))))
                                                                   .scaled(Rational(16, 147))};
                                      });
                                    }});
               }, ""});

  v.push_back({"47.1", "tr A^4 = 1/4 (tr A^2)^2", [](const VerifierContext& ctx) {
                 const auto& st = ctx.slice_traces_A();
                 return check::all({[&] { return check::polys(st[4], ppow(st[2], 2).scaled(Rational(1, 4)), "slice"); },
                                    [&] {
                                      return on_samples(ctx, [](const SampleData& s) {
                                        return std::pair{s.trA[4], spow(s.trA[2], 2).scaled(Rational(1, 4))};
                                      });
                                    }});
               }, ""});
  v.push_back({"47.2", "det(t - A) = t^7 - 1/2 a2 t^5 + 1/16 a2^2 t^3 + (1/96 a2^3 - 1/6 a6) t, a2 = tr A^2, a6 = tr A^6",
               [](const VerifierContext& ctx) {
                 const auto& st = ctx.slice_traces_A();
                 auto expected = [](const auto& x2, const auto& x6, auto one, auto zero) {
                   using R = decltype(one);
                   std::vector<R> c(8, zero);
                   c[7] = one;
                   c[5] = x2.scaled(Rational(-1, 2));
                   c[3] = (x2 * x2).scaled(Rational(1, 16));
                   c[1] = (x2 * x2 * x2).scaled(Rational(1, 96)) - x6.scaled(Rational(1, 6));
                   return c;
                 };
                 const auto cp = char_poly_coefficients(slice_matrix(ctx.catalog().g2_cartan));
                 const auto want = expected(st[2], st[6], prat(1), SlicePoly{});
                 for (std::size_t k = 0; k < 8; ++k) {
                   auto r = check::polys(real_part(cp[k]), want[k], "slice t^" + std::to_string(k));
                   if (!r.ok()) return r;
                 }
                 const auto& s = ctx.samples();
                 for (std::size_t n = 0; n < s.size(); ++n) {
                   const auto w = expected(s[n].trA[2], s[n].trA[6], rat(1), ExactScalar{});
                   for (std::size_t k = 0; k < 8; ++k)
                     if (!(s[n].charpoly[k] == w[k]))
                       return check::fail({static_cast<int>(n), static_cast<int>(k)}, s[n].charpoly[k], w[k], "sample");
                 }
                 return check::pass();
               }, ""});

  // tr X^k = sum over (p, q) of coef * a2^p a6^q
  struct Trace {
    const char* id;
    const char* text;
    bool adjoint;
    int power;
    std::vector<std::pair<Rational, std::pair<int, int>>> terms;
  };
  const std::vector<Trace> traces = {
      {"47.3A", "tr A^8 = -5/192 a2^4 + 2/3 a2 a6", false, 8, {{Rational(-5, 192), {4, 0}}, {Rational(2, 3), {1, 1}}}},
      {"47.3B", "tr A^10 = -1/64 a2^5 + 5/16 a2^2 a6", false, 10, {{Rational(-1, 64), {5, 0}}, {Rational(5, 16), {2, 1}}}},
      {"47.9", "tr B^2 = 4 a2", true, 2, {{Rational(4), {1, 0}}}},
      {"47.10", "tr B^4 = 5/2 a2^2", true, 4, {{Rational(5, 2), {2, 0}}}},
      {"47.11", "tr B^6 = 15/4 a2^3 - 26 a6", true, 6, {{Rational(15, 4), {3, 0}}, {Rational(-26), {0, 1}}}},
      {"47.12", "tr B^8 = 515/96 a2^4 - 160/3 a2 a6", true, 8, {{Rational(515, 96), {4, 0}}, {Rational(-160, 3), {1, 1}}}},
      {"47.13", "tr B^10 = 431/64 a2^5 - 605/8 a2^2 a6", true, 10, {{Rational(431, 64), {5, 0}}, {Rational(-605, 8), {2, 1}}}},
  };
  for (const auto& t : traces)
    v.push_back({t.id, t.text, [t](const VerifierContext& ctx) {
                   const auto& sa = ctx.slice_traces_A();
                   const auto& sb = t.adjoint ? ctx.slice_traces_B() : sa;
                   SlicePoly rhs;
                   for (const auto& [c, e] : t.terms) rhs += (ppow(sa[2], e.first) * ppow(sa[6], e.second)).scaled(c);
                   return check::all({
                       [&] { return check::polys(sb[static_cast<std::size_t>(t.power)], rhs, "slice"); },
                       [&] {
                         return on_samples(ctx, [&](const SampleData& s) {
                           ExactScalar r;
                           for (const auto& [c, e] : t.terms) r += (spow(s.trA[2], e.first) * spow(s.trA[6], e.second)).scaled(c);
                           const auto& lhs = t.adjoint ? s.trB : s.trA;
                           return std::pair{lhs[static_cast<std::size_t>(t.power)], r};
                         });
                       },
                   });
                 },
                 ""});

  v.push_back({"47.8", "contracted with A^6: tr A^6 = 26/49 C2^3 + 1/8 C6", [](const VerifierContext& ctx) {
                 const auto& sb = ctx.slice_bundle();
                 return check::all({
                     [&] {
                       return check::polys(ctx.slice_traces_A()[6],
                                           ppow(sb.C2, 3).scaled(Rational(26, 49)) + sb.C6.scaled(Rational(1, 8)), "slice");
                     },
                     [&] {
                       return on_samples(ctx, [](const SampleData& s) {
                         return std::pair{s.trA[6], spow(s.bundle.C2, 3).scaled(Rational(26, 49)) + s.bundle.C6.scaled(Rational(1, 8))};
                       });
                     },
                 });
               }, ""});
  v.push_back({"47.14", "contracted with A^6: tr B^6 = 794/49 C2^3 - 13/4 C6", [](const VerifierContext& ctx) {
                 const auto& sb = ctx.slice_bundle();
                 return check::all({
                     [&] {
                       return check::polys(ctx.slice_traces_B()[6],
                                           ppow(sb.C2, 3).scaled(Rational(794, 49)) - sb.C6.scaled(Rational(13, 4)), "slice");
                     },
                     [&] {
                       return on_samples(ctx, [](const SampleData& s) {
                         return std::pair{s.trB[6], spow(s.bundle.C2, 3).scaled(Rational(794, 49)) - s.bundle.C6.scaled(Rational(13, 4))};
                       });
                     },
                 });
               }, ""});
  v.push_back({"spot", "at (a,b) = (1,0): tr A^6 = 11/18, C6 = 284/441, tr B^2 = 8, tr B^6 = 127/9", [](const VerifierContext& ctx) {
                 const Rational one(1), zero(0);
                 const auto& sa = ctx.slice_traces_A();
                 const auto& sbt = ctx.slice_traces_B();
                 const std::vector<std::pair<ExactScalar, ExactScalar>> vals = {
                     {sa[6].evaluate(one, zero), rat(11, 18)},
                     {ctx.slice_bundle().C6.evaluate(one, zero), rat(284, 441)},
                     {sbt[2].evaluate(one, zero), rat(8)},
                     {sbt[6].evaluate(one, zero), rat(127, 9)}};
                 for (std::size_t k = 0; k < vals.size(); ++k)
                   if (!(vals[k].first == vals[k].second))
                     return check::fail({static_cast<int>(k)}, vals[k].first, vals[k].second, "value");
                 return check::pass();
               }, ""});
  return v;
}

}  // namespace g2kit::cases
