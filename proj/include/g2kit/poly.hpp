#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "g2kit/error.hpp"
#include "g2kit/matrix.hpp"
#include "g2kit/scalar.hpp"

namespace g2kit {

/// Polynomial in one indeterminate t with ExactScalar coefficients;
/// coefficient k multiplies t^k. Trailing zero coefficients are trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  ExactScalar coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : ExactScalar{}; }
  const std::vector<ExactScalar>& coefficients() const noexcept { return c_; }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<ExactScalar> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<ExactScalar> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactScalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j].add_product(a.c_[i], b.c_[j]);
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  ExactScalar evaluate(const ExactScalar& t) const {
    ExactScalar r;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * t + c_[k];
    return r;
  }

  /// p(A) by Horner's rule.
  RepMatrix evaluate(const RepMatrix& a) const {
    RepMatrix r(a.size());
    for (std::size_t k = c_.size(); k-- > 0;) {
      r = r * a;
      for (std::size_t i = 0; i < a.size(); ++i) r(i, i) += ComplexScalar(c_[k]);
    }
    return r;
  }

  /// Coefficients from t^0 upward, each in the canonical complex grammar, one per line.
  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < std::max<std::size_t>(c_.size(), 1); ++k)
      out += "t^" + std::to_string(k) + " " + ComplexScalar(coefficient(k)).str() + "\n";
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<ExactScalar> c_;
};

/// Characteristic polynomial det(t I - A) by the Faddeev-LeVerrier recursion.
/// Returns coefficients c_0..c_n (c_n = 1); only divides by integers.
template <class T>
std::vector<T> char_poly_coefficients(const Matrix<T>& a) {
  const std::size_t n = a.size();
  std::vector<T> c(n + 1);
  c[n] = T(1);
  Matrix<T> m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    T t = trace_product(a, m);
    c[n - k] = (-t).scaled(Rational(1, static_cast<long long>(k)));
  }
  return c;
}

/// Characteristic polynomial of a matrix whose coefficients are real
/// (true for every hermitian input). Throws ConsistencyError otherwise.
inline UniPoly char_poly(const RepMatrix& a) {
  auto c = char_poly_coefficients(a);
  std::vector<ExactScalar> re;
  re.reserve(c.size());
  for (const auto& z : c) {
    if (!z.is_real()) throw ConsistencyError("characteristic polynomial has a non-real coefficient");
    re.push_back(z.re());
  }
  return UniPoly(std::move(re));
}

/// Polynomial in two indeterminates a, b with coefficients in a ring Coef
/// (ExactScalar or ComplexScalar). Zero coefficients are never stored.
template <class Coef>
class BiPoly {
 public:
  using Monomial = std::pair<int, int>;  // (degree in a, degree in b)

  BiPoly() = default;
  BiPoly(Coef c) { add_term(0, 0, std::move(c)); }  // NOLINT: constants embed
  template <std::integral I>
  BiPoly(I n) : BiPoly(Coef(n)) {}  // NOLINT

  static BiPoly var_a() { return monomial(1, 0, Coef(1)); }
  static BiPoly var_b() { return monomial(0, 1, Coef(1)); }
  static BiPoly monomial(int da, int db, Coef c) {
    BiPoly p;
    p.add_term(da, db, std::move(c));
    return p;
  }

  bool is_zero() const noexcept { return t_.empty(); }
  const std::map<Monomial, Coef>& terms() const noexcept { return t_; }
  Coef coefficient(int da, int db) const {
    auto it = t_.find({da, db});
    return it == t_.end() ? Coef{} : it->second;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.first + m.second);
    return d;
  }

  void add_term(int da, int db, const Coef& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace({da, db}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m.first, m.second, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m.first, m.second, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

  /// this += x * y
  void add_product(const BiPoly& x, const BiPoly& y) {
    for (const auto& [mx, cx] : x.t_)
      for (const auto& [my, cy] : y.t_) add_term(mx.first + my.first, mx.second + my.second, cx * cy);
  }
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y) {
    BiPoly r;
    r.add_product(x, y);
    return r;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  BiPoly scaled(const Rational& q) const {
    BiPoly r;
    if (q.is_zero()) return r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, c.scaled(q));
    return r;
  }
  BiPoly scaled(const Coef& s) const {
    BiPoly r;
    for (const auto& [m, c] : t_) r.add_term(m.first, m.second, c * s);
    return r;
  }

  Coef evaluate(const Rational& a, const Rational& b) const {
    Coef r;
    for (const auto& [m, c] : t_) {
      Rational w(1);
      for (int k = 0; k < m.first; ++k) w *= a;
      for (int k = 0; k < m.second; ++k) w *= b;
      r += c.scaled(w);
    }
    return r;
  }

  friend bool operator==(const BiPoly& x, const BiPoly& y) { return x.t_ == y.t_; }

  /// Human-readable form in descending powers of a, e.g. `a^2 + 1/3*sqrt6*a*b`.
  std::string pretty() const {
    if (t_.empty()) return "0";
    auto power = [](const char* v, int k) { return k == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(k); };
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string mono;
      if (m.first) mono = power("a", m.first);
      if (m.second) mono += (mono.empty() ? "" : "*") + power("b", m.second);
      std::string coef = c.pretty();
      const bool compound = coef.find(' ', 1) != std::string::npos;
      if (compound) coef = "(" + coef + ")";
      std::string term;
      if (mono.empty())
        term = coef;
      else if (coef == "1")
        term = mono;
      else if (coef == "-1")
        term = "-" + mono;
      else
        term = coef + "*" + mono;
      if (out.empty())
        out = term;
      else if (term[0] == '-')
        out += " - " + term.substr(1);
      else
        out += " + " + term;
    }
    return out;
  }

 private:
  std::map<Monomial, Coef> t_;
};

using SlicePoly = BiPoly<ExactScalar>;
using ComplexSlicePoly = BiPoly<ComplexScalar>;

/// Real part of a polynomial whose coefficients must be real.
inline SlicePoly real_part(const ComplexSlicePoly& p) {
  SlicePoly r;
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_real()) throw ConsistencyError("slice polynomial has a non-real coefficient");
    r.add_term(m.first, m.second, c.re());
  }
  return r;
}

}  // namespace g2kit
