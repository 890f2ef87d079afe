#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "g2kit/error.hpp"
#include "g2kit/scalar.hpp"

namespace g2kit {

/// Dense multi-index array of ExactScalar, row-major, 0-based indices.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::string name, std::vector<int> dims) : name_(std::move(name)), dims_(std::move(dims)) {
    std::size_t n = 1;
    for (int d : dims_) {
      if (d <= 0) throw DimensionMismatch("tensor dimensions must be positive");
      n *= static_cast<std::size_t>(d);
    }
    data_.resize(n);
    strides_.resize(dims_.size());
    std::size_t s = 1;
    for (std::size_t k = dims_.size(); k-- > 0;) {
      strides_[k] = s;
      s *= static_cast<std::size_t>(dims_[k]);
    }
  }

  /// Kronecker delta on n values.
  static Tensor delta(int n) {
    Tensor t("delta", {n, n});
    for (int i = 0; i < n; ++i) t.at({i, i}) = 1;
    return t;
  }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::vector<int>& dims() const noexcept { return dims_; }
  std::size_t rank() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return data_.size(); }

  ExactScalar& at(std::initializer_list<int> idx) { return data_[offset(idx.begin(), idx.size())]; }
  const ExactScalar& at(std::initializer_list<int> idx) const { return data_[offset(idx.begin(), idx.size())]; }
  ExactScalar& at(const std::vector<int>& idx) { return data_[offset(idx.data(), idx.size())]; }
  const ExactScalar& at(const std::vector<int>& idx) const { return data_[offset(idx.data(), idx.size())]; }
  ExactScalar& flat(std::size_t k) { return data_[k]; }
  const ExactScalar& flat(std::size_t k) const { return data_[k]; }

  /// Multi-index of flat position k.
  std::vector<int> unflatten(std::size_t k) const {
    std::vector<int> idx(dims_.size());
    for (std::size_t a = 0; a < dims_.size(); ++a) {
      idx[a] = static_cast<int>(k / strides_[a]);
      k %= strides_[a];
    }
    return idx;
  }

  std::size_t count_nonzero() const {
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](const auto& x) { return !x.is_zero(); }));
  }

  /// Calls f(index, value) for every nonzero entry in lexicographic order.
  void for_each_nonzero(const std::function<void(const std::vector<int>&, const ExactScalar&)>& f) const {
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!data_[k].is_zero()) f(unflatten(k), data_[k]);
  }

  Tensor& operator+=(const Tensor& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  Tensor scaled(const ExactScalar& s) const {
    Tensor r(name_, dims_);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!data_[k].is_zero()) r.data_[k] = data_[k] * s;
    return r;
  }
  Tensor scaled(const Rational& q) const { return scaled(ExactScalar(q)); }
  Tensor operator-() const { return scaled(Rational(-1)); }

  /// r[idx] = this[idx permuted], i.e. r(i_0..i_n) = t(i_perm[0]..i_perm[n]).
  Tensor permuted(const std::vector<int>& perm) const {
    if (perm.size() != dims_.size()) throw DimensionMismatch("permutation length differs from rank");
    std::vector<int> rd(dims_.size());
    for (std::size_t a = 0; a < perm.size(); ++a) rd[static_cast<std::size_t>(perm[a])] = dims_[a];
    Tensor r(name_, rd);
    std::vector<int> ri(dims_.size());
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (data_[k].is_zero()) continue;
      auto idx = unflatten(k);
      for (std::size_t a = 0; a < perm.size(); ++a) ri[static_cast<std::size_t>(perm[a])] = idx[a];
      r.at(ri) = data_[k];
    }
    return r;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.dims_ == b.dims_ && a.data_ == b.data_; }

  void check_same(const Tensor& o) const {
    if (dims_ != o.dims_) throw DimensionMismatch("tensor shapes differ (" + name_ + " vs " + o.name_ + ")");
  }

 private:
  std::size_t offset(const int* idx, std::size_t n) const {
    if (n != dims_.size()) throw DimensionMismatch("index arity differs from rank of " + name_);
    std::size_t off = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (idx[a] < 0 || idx[a] >= dims_[a]) throw DimensionMismatch("index out of range in " + name_);
      off += static_cast<std::size_t>(idx[a]) * strides_[a];
    }
    return off;
  }

  std::string name_;
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::vector<ExactScalar> data_;
};

/// First index tuple where two same-shaped tensors differ.
struct Mismatch {
  std::vector<int> index;  // 0-based
  ExactScalar lhs;
  ExactScalar rhs;
};

inline std::optional<Mismatch> first_mismatch(const Tensor& lhs, const Tensor& rhs) {
  lhs.check_same(rhs);
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (!(lhs.flat(k) == rhs.flat(k))) return Mismatch{lhs.unflatten(k), lhs.flat(k), rhs.flat(k)};
  return std::nullopt;
}

namespace detail {

// Sparse intermediate of a contraction: packed index key -> value, plus the
// label carried by each packed slot.
struct SparseTerm {
  std::vector<char> labels;
  std::unordered_map<std::uint64_t, ExactScalar> entries;
};

constexpr int kBitsPerIndex = 6;

inline std::uint64_t pack(const std::vector<int>& idx) {
  std::uint64_t key = 0;
  for (int v : idx) key = (key << kBitsPerIndex) | static_cast<std::uint64_t>(v);
  return key;
}
inline int unpack_at(std::uint64_t key, std::size_t slot, std::size_t nslots) {
  return static_cast<int>((key >> (kBitsPerIndex * (nslots - 1 - slot))) & ((1u << kBitsPerIndex) - 1));
}

/// Converts an operand with labels (repeated labels select its diagonal) into
/// a sparse term with distinct labels.
inline SparseTerm to_sparse(const Tensor& t, std::string_view labels) {
  if (labels.size() != t.rank())
    throw DimensionMismatch("contraction labels '" + std::string(labels) + "' do not match rank of " + t.name());
  SparseTerm s;
  std::vector<int> first_pos(labels.size());
  for (std::size_t a = 0; a < labels.size(); ++a) {
    auto p = labels.find(labels[a]);
    first_pos[a] = static_cast<int>(p);
    if (p == a) s.labels.push_back(labels[a]);
  }
  t.for_each_nonzero([&](const std::vector<int>& idx, const ExactScalar& v) {
    std::vector<int> kept;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (idx[a] != idx[static_cast<std::size_t>(first_pos[a])]) return;
      if (first_pos[a] == static_cast<int>(a)) kept.push_back(idx[a]);
    }
    s.entries.emplace(pack(kept), v);
  });
  return s;
}

/// Joins two sparse terms over their shared labels and sums out every label
/// not listed in `keep`.
inline SparseTerm join(const SparseTerm& a, const SparseTerm& b, const std::string& keep) {
  std::vector<std::size_t> b_shared, a_shared, b_only;
  for (std::size_t j = 0; j < b.labels.size(); ++j) {
    auto it = std::find(a.labels.begin(), a.labels.end(), b.labels[j]);
    if (it != a.labels.end()) {
      b_shared.push_back(j);
      a_shared.push_back(static_cast<std::size_t>(it - a.labels.begin()));
    } else {
      b_only.push_back(j);
    }
  }
  // labels of the product before summation: all of a, then b-only
  std::vector<char> prod_labels = a.labels;
  for (auto j : b_only) prod_labels.push_back(b.labels[j]);
  SparseTerm out;
  std::vector<std::size_t> out_from;  // positions in prod_labels that survive
  for (std::size_t p = 0; p < prod_labels.size(); ++p)
    if (keep.find(prod_labels[p]) != std::string::npos) {
      out.labels.push_back(prod_labels[p]);
      out_from.push_back(p);
    }

  // bucket b by its shared-label values
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, const ExactScalar*>>> buckets;
  const std::size_t nb = b.labels.size(), na = a.labels.size();
  for (const auto& [kb, vb] : b.entries) {
    std::vector<int> sh, rest;
    for (auto j : b_shared) sh.push_back(unpack_at(kb, j, nb));
    for (auto j : b_only) rest.push_back(unpack_at(kb, j, nb));
    buckets[pack(sh)].emplace_back(pack(rest), &vb);
  }
  std::vector<int> prod(prod_labels.size()), kept(out_from.size());
  for (const auto& [ka, va] : a.entries) {
    std::vector<int> sh;
    for (auto i : a_shared) sh.push_back(unpack_at(ka, i, na));
    auto it = buckets.find(pack(sh));
    if (it == buckets.end()) continue;
    for (std::size_t i = 0; i < na; ++i) prod[i] = unpack_at(ka, i, na);
    for (const auto& [krest, vb] : it->second) {
      for (std::size_t j = 0; j < b_only.size(); ++j) prod[na + j] = unpack_at(krest, j, b_only.size());
      for (std::size_t q = 0; q < out_from.size(); ++q) kept[q] = prod[out_from[q]];
      out.entries[pack(kept)].add_product(va, *vb);
    }
  }
  for (auto it = out.entries.begin(); it != out.entries.end();)
    it = it->second.is_zero() ? out.entries.erase(it) : std::next(it);
  return out;
}

}  // namespace detail

/// Einstein-summation contraction, e.g. contract("ijk,ijl->kl", {&c, &c}).
/// Operands are joined left to right; a label is summed as soon as no later
/// operand and not the output uses it. A label repeated inside one operand
/// selects that operand's diagonal. Labels are single characters.
inline Tensor contract(std::string_view spec, const std::vector<const Tensor*>& ops, std::string name = {}) {
  auto arrow = spec.find("->");
  if (arrow == std::string_view::npos) throw Error("contraction pattern needs '->'");
  std::string out_labels(spec.substr(arrow + 2));
  std::vector<std::string> in_labels;
  {
    std::string_view lhs = spec.substr(0, arrow);
    std::size_t pos = 0;
    while (true) {
      auto comma = lhs.find(',', pos);
      in_labels.emplace_back(lhs.substr(pos, comma == std::string_view::npos ? lhs.npos : comma - pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (in_labels.size() != ops.size()) throw Error("contraction pattern lists a different number of operands");
  std::map<char, int> dim;
  for (std::size_t n = 0; n < ops.size(); ++n)
    for (std::size_t a = 0; a < in_labels[n].size(); ++a) {
      char l = in_labels[n][a];
      int d = ops[n]->dims().at(a);
      auto [it, fresh] = dim.emplace(l, d);
      if (!fresh && it->second != d) throw DimensionMismatch(std::string("label '") + l + "' has two dimensions");
    }
  std::vector<int> out_dims;
  for (char l : out_labels) {
    if (!dim.count(l)) throw Error(std::string("output label '") + l + "' not found in operands");
    out_dims.push_back(dim[l]);
  }
  if (dim.size() * detail::kBitsPerIndex > 64) throw Error("too many labels in one contraction");

  auto needed_after = [&](std::size_t n) {
    std::string keep = out_labels;
    for (std::size_t m = n + 1; m < ops.size(); ++m) keep += in_labels[m];
    return keep;
  };
  detail::SparseTerm acc = detail::to_sparse(*ops[0], in_labels[0]);
  {
    // sum out labels of the first operand used nowhere else
    detail::SparseTerm unit;
    unit.entries.emplace(0, ExactScalar(1));
    acc = detail::join(unit, acc, needed_after(0));
  }
  for (std::size_t n = 1; n < ops.size(); ++n)
    acc = detail::join(acc, detail::to_sparse(*ops[n], in_labels[n]), needed_after(n));

  Tensor out(name, out_dims.empty() ? std::vector<int>{1} : out_dims);
  std::vector<int> idx(out_labels.size());
  for (const auto& [key, v] : acc.entries) {
    for (std::size_t q = 0; q < acc.labels.size(); ++q) {
      auto p = out_labels.find(acc.labels[q]);
      idx[p] = detail::unpack_at(key, q, acc.labels.size());
    }
    if (out_labels.empty())
      out.flat(0) += v;
    else
      out.at(idx) += v;
  }
  return out;
}

inline Tensor contract(std::string_view spec, std::initializer_list<std::reference_wrapper<const Tensor>> ops,
                       std::string name = {}) {
  std::vector<const Tensor*> p;
  for (const auto& r : ops) p.push_back(&r.get());
  return contract(spec, p, std::move(name));
}

/// Sign of a permutation given as a sequence of distinct values.
inline int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      sign = -sign;
    }
  return sign;
}

namespace detail {

inline Tensor average_over_permutations(const Tensor& t, const std::vector<int>& axes, bool alternating) {
  std::vector<int> order(axes.size());
  std::iota(order.begin(), order.end(), 0);
  Tensor sum(t.name(), t.dims());
  long long count = 0;
  do {
    // axis axes[q] of the result reads axis axes[order[q]] of t
    std::vector<int> perm(t.rank());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t q = 0; q < axes.size(); ++q) perm[static_cast<std::size_t>(axes[static_cast<std::size_t>(order[q])])] = axes[q];
    Tensor p = t.permuted(perm);
    if (alternating && permutation_sign(order) < 0)
      sum -= p;
    else
      sum += p;
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return sum.scaled(Rational(1, count));
}

}  // namespace detail

/// Unit-weight symmetrization over the listed axes (others are exempt).
inline Tensor symmetrize(const Tensor& t, const std::vector<int>& axes) {
  return detail::average_over_permutations(t, axes, false);
}
inline Tensor symmetrize(const Tensor& t) {
  std::vector<int> all(t.rank());
  std::iota(all.begin(), all.end(), 0);
  return symmetrize(t, all);
}

/// Unit-weight antisymmetrization over the listed axes.
inline Tensor antisymmetrize(const Tensor& t, const std::vector<int>& axes) {
  return detail::average_over_permutations(t, axes, true);
}

/// Contraction with the rank-7 Levi-Civita symbol on 7 values. With
/// `contracted_first` the result is R_{free} = eps_{w-indices, free} W;
/// otherwise R_{free} = eps_{free, w-indices} W.
inline Tensor epsilon_contract(const Tensor& w, bool contracted_first, std::string name = {}) {
  const std::size_t k = w.rank();
  if (k > 7) throw DimensionMismatch("epsilon contraction of rank > 7");
  for (int d : w.dims())
    if (d != 7) throw DimensionMismatch("epsilon contraction needs dimension 7");
  const std::size_t free = 7 - k;
  Tensor r(std::move(name), std::vector<int>(free == 0 ? 1 : free, 7));
  if (free == 0) r = Tensor(r.name(), {1});
  std::vector<int> p(7);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> wi(k), ri(free);
  do {
    for (std::size_t q = 0; q < k; ++q) wi[q] = p[contracted_first ? q : free + q];
    const ExactScalar& v = w.at(wi);
    if (v.is_zero()) continue;
    for (std::size_t q = 0; q < free; ++q) ri[q] = p[contracted_first ? k + q : q];
    ExactScalar& dst = free == 0 ? r.flat(0) : r.at(ri);
    if (permutation_sign(p) > 0)
      dst += v;
    else
      dst -= v;
  } while (std::next_permutation(p.begin(), p.end()));
  return r;
}

}  // namespace g2kit
