#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "g2kit/error.hpp"
#include "g2kit/invariants.hpp"
#include "g2kit/tensor.hpp"

namespace g2kit {

inline constexpr const char* kTensorMagic = "# g2kit tensor v1";

/// Writes `t` in the v1 text format: magic line, header, then one line per
/// nonzero entry (1-based indices, lexicographic order, canonical complex scalar).
inline void write_tensor(std::ostream& os, const Tensor& t) {
  os << kTensorMagic << "\n";
  os << "name=" << t.name() << " rank=" << t.rank() << " dims=";
  for (std::size_t a = 0; a < t.rank(); ++a) os << (a ? "," : "") << t.dims()[a];
  os << " indexbase=1\n";
  t.for_each_nonzero([&](const std::vector<int>& idx, const ExactScalar& v) {
    for (int i : idx) os << i + 1 << " ";
    os << ComplexScalar(v).str() << "\n";
  });
}

inline std::string tensor_to_string(const Tensor& t) {
  std::ostringstream os;
  write_tensor(os, t);
  return os.str();
}

namespace detail {

inline int parse_positive(const std::string& text, std::size_t line, const std::string& field) {
  if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a positive integer, got '" + text + "'", line, field);
  int v = std::stoi(text);
  if (v <= 0) throw ParseError("expected a positive integer, got '" + text + "'", line, field);
  return v;
}

}  // namespace detail

/// Reads one tensor in the v1 format. Errors name the line and the field.
inline Tensor read_tensor(std::istream& is) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line) || line != kTensorMagic) throw ParseError("missing '# g2kit tensor v1' line", 1, "magic");
  ++lineno;
  if (!std::getline(is, line)) throw ParseError("missing header line", lineno, "header");
  std::istringstream hs(line);
  std::string tok, name;
  int rank = -1;
  std::vector<int> dims;
  bool base_seen = false;
  while (hs >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("header token '" + tok + "' lacks '='", lineno, "header");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "name") {
      if (val.empty()) throw ParseError("empty name", lineno, "name");
      name = val;
    } else if (key == "rank") {
      rank = detail::parse_positive(val, lineno, "rank");
    } else if (key == "dims") {
      std::size_t pos = 0;
      while (true) {
        auto comma = val.find(',', pos);
        dims.push_back(detail::parse_positive(val.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos),
                                              lineno, "dims"));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    } else if (key == "indexbase") {
      if (val != "1") throw ParseError("only indexbase=1 is supported", lineno, "indexbase");
      base_seen = true;
    } else {
      throw ParseError("unknown header key '" + key + "'", lineno, "header");
    }
  }
  if (name.empty()) throw ParseError("header lacks name=", lineno, "name");
  if (rank < 0) throw ParseError("header lacks rank=", lineno, "rank");
  if (static_cast<int>(dims.size()) != rank) throw ParseError("dims count differs from rank", lineno, "dims");
  if (!base_seen) throw ParseError("header lacks indexbase=", lineno, "indexbase");

  Tensor t(name, dims);
  long long last = -1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<int> idx;
    for (int a = 0; a < rank; ++a) {
      std::string f;
      if (!(ls >> f)) throw ParseError("too few indices", lineno, "index " + std::to_string(a + 1));
      int v = detail::parse_positive(f, lineno, "index " + std::to_string(a + 1));
      if (v > dims[static_cast<std::size_t>(a)])
        throw ParseError("index " + f + " exceeds dimension", lineno, "index " + std::to_string(a + 1));
      idx.push_back(v - 1);
    }
    std::string scalar, extra;
    if (!(ls >> scalar)) throw ParseError("missing scalar", lineno, "scalar");
    if (ls >> extra) throw ParseError("trailing text '" + extra + "'", lineno, "scalar");
    long long flat = 0;
    for (int a = 0; a < rank; ++a) flat = flat * dims[static_cast<std::size_t>(a)] + idx[static_cast<std::size_t>(a)];
    if (flat <= last) throw ParseError("entries not in strictly lexicographic order", lineno, "index");
    last = flat;
    ComplexScalar z;
    try {
      z = ComplexScalar::parse(scalar);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno, "scalar");
    }
    if (!z.is_real()) throw ParseError("tensor entries must be real", lineno, "scalar");
    t.at(idx) = z.re();
  }
  return t;
}

inline void save_store(const TensorStore& store, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& n : TensorStore::names()) {
    std::ofstream f(dir / (n + ".txt"), std::ios::binary);
    if (!f) throw Error("cannot write " + (dir / (n + ".txt")).string());
    write_tensor(f, store.get(n));
  }
}

/// Loads every tensor file present in `dir` into `store`, replacing entries of the same name.
inline void load_store(TensorStore& store, const std::filesystem::path& dir) {
  for (const auto& n : TensorStore::names()) {
    auto p = dir / (n + ".txt");
    if (!std::filesystem::exists(p)) continue;
    std::ifstream f(p, std::ios::binary);
    try {
      Tensor t = read_tensor(f);
      if (t.name() != n) throw ParseError("file " + p.filename().string() + " holds tensor " + t.name(), 2, "name");
      store.put(std::move(t));
    } catch (const ParseError& e) {
      throw ParseError(p.filename().string() + ": " + e.what());
    }
  }
}

}  // namespace g2kit
