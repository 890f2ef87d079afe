#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "g2kit/error.hpp"
#include "g2kit/rational.hpp"

namespace g2kit {

/// Element of the real field Q(sqrt2, sqrt3, sqrt7).
///
/// Coefficient k multiplies the radical sqrt(r_k) where bit 0 of k selects the
/// prime 2, bit 1 the prime 3 and bit 2 the prime 7, giving the basis order
/// (1, sqrt2, sqrt3, sqrt6, sqrt7, sqrt14, sqrt21, sqrt42). With that encoding
/// sqrt(r_i) * sqrt(r_j) = r_{i&j} * sqrt(r_{i^j}).
class ExactScalar {
 public:
  static constexpr int kBasisSize = 8;
  static constexpr std::array<int, kBasisSize> kRadicand{1, 2, 3, 6, 7, 14, 21, 42};

  ExactScalar() = default;
  ExactScalar(Rational q) { c_[0] = std::move(q); }  // NOLINT: rationals embed
  template <std::integral I>
  ExactScalar(I n) : ExactScalar(Rational(n)) {}  // NOLINT

  /// q * sqrt(radicand) for a basis radicand (1, 2, 3, 6, 7, 14, 21 or 42).
  static ExactScalar radical(int radicand, Rational q = 1) {
    for (int k = 0; k < kBasisSize; ++k)
      if (kRadicand[k] == radicand) {
        ExactScalar r;
        r.c_[k] = std::move(q);
        return r;
      }
    throw Error("sqrt(" + std::to_string(radicand) + ") is not a basis radical");
  }

  /// Square root of a nonnegative rational whose square-free part divides 42.
  static ExactScalar sqrt(const Rational& q) {
    if (q.sign() < 0) throw Error("sqrt of a negative rational");
    if (q.is_zero()) return {};
    // sqrt(n/d) = sqrt(n*d)/d; pull square factors out of n*d
    mpz_class m = q.numerator() * q.denominator();
    mpz_class outside = 1;
    int radicand = 1;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      while (mpz_divisible_ui_p(m.get_mpz_t(), p * p)) {
        m /= p * p;
        outside *= p;
      }
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        m /= p;
        if (p == 5) throw Error("sqrt(" + q.str() + ") lies outside Q(sqrt2,sqrt3,sqrt7)");
        radicand *= static_cast<int>(p);
      }
    }
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    if (root * root != m) throw Error("sqrt(" + q.str() + ") lies outside Q(sqrt2,sqrt3,sqrt7)");
    mpq_class coef(outside * root, q.denominator());
    coef.canonicalize();
    return radical(radicand, Rational(coef));
  }

  const Rational& coefficient(int k) const { return c_[k]; }
  Rational& coefficient(int k) { return c_[k]; }
  const std::array<Rational, kBasisSize>& coefficients() const { return c_; }

  /// Bit k set iff coefficient k is nonzero.
  std::uint8_t support() const noexcept {
    std::uint8_t m = 0;
    for (int k = 0; k < kBasisSize; ++k)
      if (!c_[k].is_zero()) m |= std::uint8_t(1u << k);
    return m;
  }
  bool is_zero() const noexcept { return support() == 0; }
  bool is_rational() const noexcept { return (support() & 0xFE) == 0; }
  const Rational& rational_part() const { return c_[0]; }

  double to_double() const {
    double v = 0;
    for (int k = 0; k < kBasisSize; ++k)
      if (!c_[k].is_zero()) v += c_[k].to_double() * std::sqrt(double(kRadicand[k]));
    return v;
  }

  ExactScalar operator-() const {
    ExactScalar r;
    for (int k = 0; k < kBasisSize; ++k)
      if (!c_[k].is_zero()) r.c_[k] = -c_[k];
    return r;
  }

  ExactScalar& operator+=(const ExactScalar& o) {
    for (int k = 0; k < kBasisSize; ++k)
      if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    for (int k = 0; k < kBasisSize; ++k)
      if (!o.c_[k].is_zero()) c_[k] -= o.c_[k];
    return *this;
  }
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar r;
    r.add_product(a, b);
    return r;
  }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  /// this += a * b without a temporary.
  void add_product(const ExactScalar& a, const ExactScalar& b) { accumulate(a, b, false); }
  /// this -= a * b without a temporary.
  void sub_product(const ExactScalar& a, const ExactScalar& b) { accumulate(a, b, true); }

  void accumulate(const ExactScalar& a, const ExactScalar& b, bool negate) {
    std::uint8_t sa = a.support(), sb = b.support();
    for (std::uint8_t ma = sa; ma; ma &= ma - 1) {
      int i = std::countr_zero(ma);
      for (std::uint8_t mb = sb; mb; mb &= mb - 1) {
        int j = std::countr_zero(mb);
        Rational t = a.c_[i] * b.c_[j];
        if ((i & j) != 0) t *= Rational(kRadicand[i & j]);
        if (negate)
          c_[i ^ j] -= t;
        else
          c_[i ^ j] += t;
      }
    }
  }

  ExactScalar scaled(const Rational& q) const {
    ExactScalar r;
    if (q.is_zero()) return r;
    for (int k = 0; k < kBasisSize; ++k)
      if (!c_[k].is_zero()) r.c_[k] = c_[k] * q;
    return r;
  }

  /// Multiplicative inverse, by solving (multiplication by x) * r = 1 over Q.
  ExactScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return ExactScalar(c_[0].inverse());
    // column j of the system is x * basis_j
    std::array<std::array<Rational, kBasisSize + 1>, kBasisSize> aug;
    for (int j = 0; j < kBasisSize; ++j) {
      ExactScalar col = *this * radical(kRadicand[j]);
      for (int i = 0; i < kBasisSize; ++i) aug[i][j] = col.c_[i];
    }
    aug[0][kBasisSize] = 1;
    for (int col = 0; col < kBasisSize; ++col) {
      int pivot = col;
      while (pivot < kBasisSize && aug[pivot][col].is_zero()) ++pivot;
      if (pivot == kBasisSize) throw ConsistencyError("singular multiplication matrix in inverse");
      std::swap(aug[pivot], aug[col]);
      Rational inv = aug[col][col].inverse();
      for (int k = col; k <= kBasisSize; ++k) aug[col][k] *= inv;
      for (int row = 0; row < kBasisSize; ++row) {
        if (row == col || aug[row][col].is_zero()) continue;
        Rational f = aug[row][col];
        for (int k = col; k <= kBasisSize; ++k) aug[row][k] -= f * aug[col][k];
      }
    }
    ExactScalar r;
    for (int i = 0; i < kBasisSize; ++i) r.c_[i] = aug[i][kBasisSize];
    return r;
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.c_ == b.c_; }

  /// Human-readable form, e.g. `1/2 - 1/3*sqrt6`.
  std::string pretty() const {
    std::string out;
    for (int k = 0; k < kBasisSize; ++k) {
      if (c_[k].is_zero()) continue;
      Rational q = c_[k];
      bool neg = q.sign() < 0;
      if (neg) q = -q;
      if (out.empty())
        out = neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (k == 0)
        out += q.str();
      else
        out += (q == Rational(1) ? std::string() : q.str() + "*") + "sqrt" + std::to_string(kRadicand[k]);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::array<Rational, kBasisSize> c_{};
};

/// Element of Q(sqrt2, sqrt3, sqrt7)(i).
class ComplexScalar {
 public:
  ComplexScalar() = default;
  ComplexScalar(ExactScalar re, ExactScalar im = {}) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  ComplexScalar(Rational q) : re_(std::move(q)) {}                                              // NOLINT
  template <std::integral I>
  ComplexScalar(I n) : re_(n) {}  // NOLINT

  static ComplexScalar i() { return {ExactScalar{}, ExactScalar(1)}; }

  const ExactScalar& re() const { return re_; }
  const ExactScalar& im() const { return im_; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  ComplexScalar conj() const { return {re_, -im_}; }
  /// re^2 + im^2; zero exactly when the value is zero.
  ExactScalar norm2() const { return re_ * re_ + im_ * im_; }

  ComplexScalar operator-() const { return {-re_, -im_}; }
  ComplexScalar& operator+=(const ComplexScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexScalar& operator-=(const ComplexScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  friend ComplexScalar operator+(ComplexScalar a, const ComplexScalar& b) { return a += b; }
  friend ComplexScalar operator-(ComplexScalar a, const ComplexScalar& b) { return a -= b; }

  void add_product(const ComplexScalar& a, const ComplexScalar& b) {
    re_.add_product(a.re_, b.re_);
    re_.sub_product(a.im_, b.im_);
    im_.add_product(a.re_, b.im_);
    im_.add_product(a.im_, b.re_);
  }
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
    ComplexScalar r;
    r.add_product(a, b);
    return r;
  }
  ComplexScalar& operator*=(const ComplexScalar& o) { return *this = *this * o; }

  ComplexScalar scaled(const Rational& q) const { return {re_.scaled(q), im_.scaled(q)}; }
  ComplexScalar times_i() const { return {-im_, re_}; }

  ComplexScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    ExactScalar inv = norm2().inverse();
    return {re_ * inv, -im_ * inv};
  }
  friend ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b) { return a * b.inverse(); }

  friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Canonical text form `(q0,...,q7|q8,...,q15)`.
  std::string str() const {
    std::string out = "(";
    for (int k = 0; k < ExactScalar::kBasisSize; ++k) out += (k ? "," : "") + re_.coefficient(k).str();
    out += "|";
    for (int k = 0; k < ExactScalar::kBasisSize; ++k) out += (k ? "," : "") + im_.coefficient(k).str();
    return out + ")";
  }

  static ComplexScalar parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw ParseError("complex scalar must be enclosed in parentheses: '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
      throw ParseError("complex scalar needs exactly one '|' separator");
    auto half = [](std::string_view part) {
      ExactScalar x;
      int k = 0;
      std::size_t pos = 0;
      while (true) {
        auto comma = part.find(',', pos);
        std::string_view field = part.substr(pos, comma == std::string_view::npos ? part.npos : comma - pos);
        if (k == ExactScalar::kBasisSize) throw ParseError("complex scalar has more than 8 coefficients per part");
        x.coefficient(k++) = Rational::parse(field);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      if (k != ExactScalar::kBasisSize) throw ParseError("complex scalar has fewer than 8 coefficients per part");
      return x;
    };
    return {half(text.substr(0, bar)), half(text.substr(bar + 1))};
  }

  std::string pretty() const {
    if (im_.is_zero()) return re_.pretty();
    std::string imag = "i*(" + im_.pretty() + ")";
    return re_.is_zero() ? imag : re_.pretty() + " + " + imag;
  }

 private:
  ExactScalar re_;
  ExactScalar im_;
};

inline std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << ComplexScalar(x).str(); }
inline std::ostream& operator<<(std::ostream& os, const ComplexScalar& z) { return os << z.str(); }

}  // namespace g2kit
