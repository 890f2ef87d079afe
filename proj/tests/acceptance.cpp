// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "g2kit/g2kit.hpp"

namespace fs = std::filesystem;
using namespace g2kit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

VerifierContext& ctx() {
  static VerifierContext c = [] {
    BasisCatalog cat = build_catalog();
    TensorStore s = extract_tensors(cat);
    return VerifierContext(std::move(cat), std::move(s));
  }();
  return c;
}

/// Runs the named cases of one suite (every case when `ids` is empty).
void run_ids(Outcome& out, const std::string& suite, const std::vector<std::string>& ids) {
  std::vector<IdentityCase> all = suite_cases(suite), chosen;
  if (ids.empty()) {
    chosen = all;
  } else {
    for (const auto& id : ids) {
      auto it = std::find_if(all.begin(), all.end(), [&](const IdentityCase& c) { return c.id == id; });
      if (it == all.end()) {
        out.require(false, suite + ": no case " + id);
        return;
      }
      chosen.push_back(*it);
    }
  }
  for (const auto& r : run_cases(ctx(), suite, chosen, 1)) {
    std::string why = r.id + " failed";
    if (!r.tuple.empty()) why += " at " + r.tuple;
    if (!r.message.empty()) why += ": " + r.message;
    out.require(r.ok(), why);
  }
}

/// Runs a whole suite and also requires each listed id to be among its cases.
void run_suite_with(Outcome& out, const std::string& suite, const std::vector<std::string>& ids) {
  const std::vector<IdentityCase> all = suite_cases(suite);
  for (const auto& id : ids)
    out.require(std::any_of(all.begin(), all.end(), [&](const IdentityCase& c) { return c.id == id; }),
                suite + ": no case " + id);
  run_ids(out, suite, {});
}

std::vector<std::string> range_ids(const std::string& prefix, int lo, int hi) {
  std::vector<std::string> v;
  for (int k = lo; k <= hi; ++k) v.push_back(prefix + std::to_string(k));
  return v;
}

/// t contracted over every axis but `keep` with itself, compared with k * delta.
bool self_contraction_is(const Tensor& t, std::size_t keep, const Rational& k) {
  const int n = t.dims()[keep];
  std::vector<ExactScalar> gram(static_cast<std::size_t>(n * n));
  std::vector<std::vector<std::pair<std::vector<int>, ExactScalar>>> by_slot(static_cast<std::size_t>(n));
  t.for_each_nonzero([&](const std::vector<int>& idx, const ExactScalar& v) {
    std::vector<int> rest;
    for (std::size_t a = 0; a < idx.size(); ++a)
      if (a != keep) rest.push_back(idx[a]);
    by_slot[static_cast<std::size_t>(idx[keep])].push_back({rest, v});
  });
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      ExactScalar s;
      for (const auto& [ra, va] : by_slot[static_cast<std::size_t>(p)])
        for (const auto& [rb, vb] : by_slot[static_cast<std::size_t>(q)])
          if (ra == rb) s += va * vb;
      if (!(s == ExactScalar(p == q ? k : Rational(0)))) return false;
    }
  return true;
}

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& args) {
  const std::string cmd = std::string("\"") + G2KIT_CLI_PATH + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, "popen failed"};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// ---------------------------------------------------------------------------

Outcome basis_integrity() {
  Outcome o;
  run_ids(o, "basis", {"1.2", "4.5", "5.1", "5.2", "10.1", "13.1", "13.2", "13.3"});
  run_ids(o, "product-law", {"10.8"});
  o.require(ctx().catalog().all48().size() == 48, "48 matrices");
  return o;
}

Outcome octonion() {
  Outcome o;
  run_ids(o, "octonion", {"A1.1", "A1.2", "A1.3", "A1.4", "A1.5", "A1.6", "A1.7", "psi-jacobi"});
  return o;
}

Outcome product_laws() {
  Outcome o;
  auto ids = range_ids("10.", 2, 7);
  ids.push_back("10.10");
  run_ids(o, "product-law", ids);
  return o;
}

Outcome bilinear() {
  Outcome o;
  run_ids(o, "bilinear", range_ids("20.", 1, 12));
  const auto& t = ctx().tensors();
  struct Row {
    const Tensor* t;
    std::size_t keep;
    Rational k;
    const char* id;
  };
  const std::vector<Row> rows = {
      {&t.c_ijk(), 2, Rational(8), "20.1"},          {&t.h_iab(), 0, Rational(2), "20.2"},
      {&t.h_iab(), 2, Rational(4), "20.3"},          {&t.d_ij(), 2, Rational(32, 9), "20.4"},
      {&t.d_ij(), 1, Rational(48, 7), "20.5"},       {&t.c_abc(), 2, Rational(2), "20.6"},
      {&t.d_ab(), 2, Rational(2, 9), "20.7"},        {&t.d_ab(), 1, Rational(6, 7), "20.8"},
      {&t.phi(), 0, Rational(18), "20.9"},           {&t.phi(), 1, Rational(28, 3), "20.10"},
      {&t.d_abg(), 2, Rational(110, 7), "20.11"},    {&t.d_ia(), 2, Rational(28, 9), "20.12"},
  };
  for (const auto& r : rows) o.require(self_contraction_is(*r.t, r.keep, r.k), std::string("recomputed ") + r.id);
  return o;
}

Outcome lemmas() {
  Outcome o;
  run_ids(o, "lemmas", range_ids("21.", 1, 9));
  return o;
}

Outcome completeness() {
  Outcome o;
  run_suite_with(o, "completeness", {"13.4", "13.5", "13.6", "26.8", "26.9", "26.10", "26.11"});
  const std::vector<int> want7{1, 27, 7, 14}, want14{1, 27, 77, 14, 77};
  for (const auto& [ps, want] : {std::pair{&ctx().projectors7(), want7}, std::pair{&ctx().projectors14(), want14}}) {
    o.require(ps->dims == want, "pair-trace list");
    const std::size_t n2 = static_cast<std::size_t>(ps->n * ps->n);
    PairMatrix sum(n2);
    for (std::size_t k = 0; k < ps->P.size(); ++k) {
      o.require(ps->P[k].trace() == ExactScalar(want[k]), "pair-trace of " + ps->labels[k]);
      o.require(is_idempotent(ps->P[k]), "idempotent " + ps->labels[k]);
      for (std::size_t m = k + 1; m < ps->P.size(); ++m)
        o.require((ps->P[k] * ps->P[m]).is_zero(), "orthogonal " + ps->labels[k] + " " + ps->labels[m]);
      sum += ps->P[k];
    }
    o.require(sum == PairMatrix::identity(n2), "projectors sum to identity");
  }
  return o;
}

Outcome second_class() {
  Outcome o;
  run_suite_with(o, "second-class", {"27.12", "27.13", "27.14", "27.18", "27.20", "27.21", "28.1"});
  const auto& ps = ctx().projectors14();
  const std::vector<std::pair<std::string, Rational>> eig = {
      {"1", Rational(-8)}, {"27", Rational(-10, 3)}, {"77", Rational(2)}, {"14", Rational(-4)}, {"77'", Rational(0)}};
  for (const auto& [label, lam] : eig)
    o.require(ps.Lambda * ps.get(label) == ExactScalar(lam) * ps.get(label), "Lambda eigenvalue on " + label);
  return o;
}

Outcome trilinear() {
  Outcome o;
  auto ids = range_ids("35.", 4, 9);
  ids.push_back("35.12");
  ids.push_back("35.14");
  run_suite_with(o, "trilinear", ids);
  return o;
}

Outcome casimir_arithmetic() {
  Outcome o;
  auto ids = range_ids("20.", 30, 34);
  ids.insert(ids.begin(), {"25.1", "25.3"});
  run_ids(o, "casimir", ids);
  struct Row {
    unsigned l, m, dim;
    Rational c2;
  };
  const std::vector<Row> rows = {{0, 1, 7, Rational(4)},
                                 {1, 0, 14, Rational(8)},
                                 {0, 2, 27, Rational(28, 3)},
                                 {2, 0, 77, Rational(20)},
                                 {0, 3, 77, Rational(16)}};
  for (const auto& r : rows) {
    const std::string at = "(" + std::to_string(r.l) + "," + std::to_string(r.m) + ")";
    o.require(g2_dim(r.l, r.m) == r.dim, "dim " + at);
    o.require(g2_c2(r.l, r.m) == r.c2, "c2 " + at);
  }
  const auto& d = ctx().derived();
  o.require(casimir_sum(d.ad) == ExactScalar(8), "sum ad ad = 8");
  o.require(casimir_sum(ctx().catalog().x) == ExactScalar(4), "sum x x = 4");
  o.require(casimir_sum(d.Phi) == ExactScalar(Rational(28, 3)), "sum Phi Phi = 28/3");
  return o;
}

Outcome quartic() {
  Outcome o;
  run_ids(o, "casimir", {"29.4"});
  const auto& x = ctx().catalog().x;
  const auto& d = ctx().derived();
  struct Row {
    const std::vector<RepMatrix>* D;
    Rational c2, want;
  };
  for (const auto& r : {Row{&x, Rational(4), Rational(160, 3)}, Row{&d.ad, Rational(8), Rational(416, 3)},
                        Row{&d.Phi, Rational(28, 3), Rational(1568, 9)}}) {
    o.require(r.c2 * r.c2 + Rational(28, 3) * r.c2 == r.want, "c2^2 + 28/3 c2");
    o.require(quartic_casimir(x, *r.D) == ExactScalar(r.want), "partial trace " + r.want.str());
  }
  return o;
}

Outcome invariants() {
  Outcome o;
  run_suite_with(o, "invariants", {"40.1", "40.8", "40.10", "40.11", "41.2", "41.4", "41.6", "41.7", "41.9", "47.1", "47.2",
                            "47.3A", "47.3B", "47.8", "47.9", "47.10", "47.11", "47.12", "47.13", "47.14", "spot"});
  const Rational one(1), zero(0);
  o.require(ctx().slice_traces_A()[6].evaluate(one, zero) == ExactScalar(Rational(11, 18)), "tr A^6 = 11/18");
  o.require(ctx().slice_bundle().C6.evaluate(one, zero) == ExactScalar(Rational(284, 441)), "C6 = 284/441");
  o.require(ctx().slice_traces_B()[2].evaluate(one, zero) == ExactScalar(8), "tr B^2 = 8");
  o.require(ctx().slice_traces_B()[6].evaluate(one, zero) == ExactScalar(Rational(127, 9)), "tr B^6 = 127/9");
  o.require(ctx().samples().size() == 20, "20 random samples");
  return o;
}

Outcome determinism() {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / ("g2kit_accept_" + std::to_string(::getpid()));
  fs::remove_all(root);
  std::vector<std::string> reports;
  std::vector<std::set<std::pair<std::string, std::string>>> builds;
  for (int run = 1; run <= 2; ++run) {
    const fs::path dir = root / ("run" + std::to_string(run));
    const Shell b = shell("build --out \"" + dir.string() + "\"");
    o.require(b.code == 0, "build exit " + std::to_string(b.code) + ": " + b.out);
    const fs::path rep = dir / "report.txt";
    const Shell v = shell("verify --suite all --tensors \"" + (dir / "tensors").string() + "\" --report \"" +
                          rep.string() + "\"");
    o.require(v.code == 0, "verify exit " + std::to_string(v.code) + ": " + v.out);
    reports.push_back(slurp(rep));
    std::set<std::pair<std::string, std::string>> files;
    for (const auto& e : fs::recursive_directory_iterator(dir))
      if (e.is_regular_file() && e.path().filename() != "report.txt")
        files.insert({fs::relative(e.path(), dir).string(), slurp(e.path())});
    builds.push_back(std::move(files));
  }
  o.require(!reports[0].empty() && reports[0].find("SUMMARY") != std::string::npos, "report is empty");
  o.require(reports[0] == reports[1], "reports differ");
  o.require(builds[0] == builds[1], "build outputs differ");
  fs::remove_all(root);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double bound_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"basis integrity", 10, basis_integrity},
      {"octonion suite", 10, octonion},
      {"product-law reconstruction", 30, product_laws},
      {"bilinear constants", 60, bilinear},
      {"lemma suite", 30, lemmas},
      {"completeness and projectors", 60, completeness},
      {"second-class suite", 300, second_class},
      {"trilinear suite", 120, trilinear},
      {"Casimir arithmetic", 5, casimir_arithmetic},
      {"quartic Casimir non-primitivity", 120, quartic},
      {"invariants on the Cartan slice", 180, invariants},
      {"determinism", 900, determinism},
  };
  bool all_ok = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= criteria[k].bound_seconds, "exceeded time bound");
    all_ok = all_ok && o.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].name << " (" << timing << ")";
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  return all_ok ? 0 : 1;
}
