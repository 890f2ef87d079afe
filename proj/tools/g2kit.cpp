// g2kit command-line front end.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "g2kit/g2kit.hpp"

namespace fs = std::filesystem;
using namespace g2kit;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kConsistency = 3 };

void write_family(const fs::path& file, const std::vector<RepMatrix>& fam, const std::vector<std::string>& names) {
  std::ofstream f(file, std::ios::binary);
  if (!f) throw Error("cannot write " + file.string());
  for (std::size_t k = 0; k < fam.size(); ++k) {
    f << "# " << (k < names.size() ? names[k] : std::to_string(k + 1)) << "\n";
    write_matrix(f, fam[k]);
  }
}

struct Built {
  BasisCatalog cat;
  TensorStore store;
};

Built build_all() {
  Built b{build_catalog(), {}};
  b.store = extract_tensors(b.cat);
  return b;
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

/// Slice quantity by name as a polynomial in a, b.
SlicePoly slice_quantity(const VerifierContext& ctx, const std::string& q) {
  const auto& sb = ctx.slice_bundle();
  auto index_after = [&](std::size_t prefix, int lo, int hi) {
    const std::string digits = q.substr(prefix);
    if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("unknown quantity '" + q + "'");
    const int k = std::stoi(digits);
    if (k < lo || k > hi) throw UsageError("index out of range in '" + q + "'");
    return static_cast<std::size_t>(k);
  };
  if (q == "C2") return sb.C2;
  if (q == "C6") return sb.C6;
  if (q == "C6tilde") return sb.C6 - sb.C2 * sb.C2 * sb.C2 * SlicePoly(ExactScalar(Rational(88, 441)));
  if (q == "BB") return sb.BB;
  if (q == "BD") return sb.BD;
  if (q == "CC") return sb.CC;
  if (q == "DD") return sb.DD;
  if (q.rfind("trA", 0) == 0) return ctx.slice_traces_A()[index_after(3, 0, 10)];
  if (q.rfind("trB", 0) == 0) return ctx.slice_traces_B()[index_after(3, 0, 10)];
  if (q.rfind("A", 0) == 0) return sb.A[index_after(1, 1, 14) - 1];
  if (q.rfind("B", 0) == 0) return sb.B[index_after(1, 1, 27) - 1];
  if (q.rfind("C", 0) == 0) return sb.C[index_after(1, 1, 14) - 1];
  if (q.rfind("D", 0) == 0) return sb.D[index_after(1, 1, 27) - 1];
  throw UsageError("unknown quantity '" + q + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Exact invariant tensors and identities of g2 in su(7)"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned parallel = 1;
  app.add_option("--parallel", parallel, "worker threads for verification (0 = all cores)")->capture_default_str();

  std::string out_dir;
  auto* build = app.add_subcommand("build", "construct matrices and tensors and write them to a directory");
  build->add_option("--out", out_dir, "output directory")->required();

  std::string export_dir;
  auto* exp = app.add_subcommand("export", "write the invariant tensors in the v1 text format");
  exp->add_option("--out", export_dir, "output directory")->required();

  std::string suite, report_file, tensor_dir;
  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite, "suite id")->required()->check(CLI::IsMember(choices));
  verify->add_option("--report", report_file, "write the report to this file");
  verify->add_option("--tensors", tensor_dir, "load tensor files from this directory instead of rebuilding them")
      ->check(CLI::ExistingDirectory);

  unsigned lambda = 0, mu = 0;
  auto* cas = app.add_subcommand("casimir", "dimension and quadratic Casimir of an irrep");
  cas->add_option("--lambda", lambda, "first Dynkin label")->required();
  cas->add_option("--mu", mu, "second Dynkin label")->required();

  std::string sa, sb, quantity;
  bool symbolic = false;
  auto* slice = app.add_subcommand("slice", "evaluate an invariant on the Cartan slice A = a h1 + b h2");
  slice->add_option("--a", sa, "rational value of a");
  slice->add_option("--b", sb, "rational value of b");
  slice->add_option("--quantity", quantity, "C2, C6, C6tilde, BB, BD, CC, DD, trA<k>, trB<k>, A<i>, B<n>, C<i>, D<n>")
      ->required();
  slice->add_flag("--symbolic", symbolic, "print the polynomial in a and b");

  std::string ca, cb;
  bool adjoint = false;
  auto* cp = app.add_subcommand("charpoly", "characteristic polynomial of a h1 + b h2");
  cp->add_flag("--adjoint", adjoint, "use the 14-dimensional adjoint matrices");
  cp->add_option("--a", ca, "rational value of a")->required();
  cp->add_option("--b", cb, "rational value of b")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  const unsigned workers = parallel == 0 ? std::max(1u, std::thread::hardware_concurrency()) : parallel;

  if (*build) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    Built b = build_all();
    write_family(dir / "b3_defining.txt", b.cat.b3, b.cat.b3_names);
    write_family(dir / "g2_defining.txt", b.cat.x, b.cat.x_names);
    write_family(dir / "z.txt", b.cat.z, b.cat.z_names);
    write_family(dir / "y.txt", b.cat.y, b.cat.y_names);
    write_family(dir / "M.txt", {b.cat.M}, {"M"});
    save_store(b.store, dir / "tensors");
    const DerivedMatrices d = build_derived_matrices(b.store);
    std::ofstream m(dir / "manifest.txt", std::ios::binary);
    m << "h_sign=" << d.h_sign << "\n";
    for (const auto& n : TensorStore::names()) m << n << " nonzero=" << b.store.get(n).count_nonzero() << "\n";
    std::cout << "wrote " << dir.string() << "\n";
    return kOk;
  }
  if (*exp) {
    Built b = build_all();
    save_store(b.store, export_dir);
    std::cout << "wrote " << TensorStore::names().size() << " tensors to " << export_dir << "\n";
    return kOk;
  }
  if (*verify) {
    Built b = build_all();
    if (!tensor_dir.empty()) load_store(b.store, tensor_dir);
    VerifierContext ctx(std::move(b.cat), std::move(b.store));
    VerificationReport rep = run_suite(ctx, suite, workers);
    const std::string text = rep.str();
    std::cerr << "wall time " << rep.wall_seconds << " s\n";
    if (report_file.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(report_file, std::ios::binary);
      if (!f) throw Error("cannot write " + report_file);
      f << text;
      for (const auto& c : rep.cases)
        if (!c.ok()) std::cout << "CASE " << c.id << " FAIL\n";
      std::cout << text.substr(text.rfind("SUMMARY"));
    }
    return rep.ok() ? kOk : kFail;
  }
  if (*cas) {
    std::cout << "dim=" << g2_dim(lambda, mu).get_str() << " c2=" << g2_c2(lambda, mu).str() << "\n";
    return kOk;
  }
  if (*slice) {
    if (!symbolic && (sa.empty() || sb.empty())) throw UsageError("slice needs --a and --b, or --symbolic");
    Built b = build_all();
    VerifierContext ctx(std::move(b.cat), std::move(b.store));
    const SlicePoly p = slice_quantity(ctx, quantity);
    if (symbolic)
      std::cout << p.pretty() << "\n";
    else
      std::cout << p.evaluate(parse_rational(sa, "--a"), parse_rational(sb, "--b")).pretty() << "\n";
    return kOk;
  }
  if (*cp) {
    const ExactScalar a(parse_rational(ca, "--a")), bv(parse_rational(cb, "--b"));
    Built b = build_all();
    const std::vector<RepMatrix> fam = adjoint ? build_derived_matrices(b.store).ad : b.cat.x;
    const RepMatrix m = ComplexScalar(a) * fam[0] + ComplexScalar(bv) * fam[1];
    std::cout << char_poly(m).str();
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConsistency;
  }
}
