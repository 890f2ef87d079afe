#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "g2kit/error.hpp"

namespace g2kit {

/// Arbitrary-precision rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits are held inline and
/// combined with 128-bit intermediates; anything larger is promoted to a GMP
/// rational and demoted again as soon as it fits. The representation is
/// canonical, so equality is a field comparison.
class Rational {
 public:
  Rational() noexcept = default;
  template <std::integral I>
  Rational(I n) {  // NOLINT: implicit from integers
    assign_canonical(static_cast<i128>(n), 1);
  }
  Rational(long long n, long long d) { assign_i128(n, d); }
  explicit Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    set_big(std::move(c));
  }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    q.get_num() = mpz_from_i128(num_);
    q.get_den() = mpz_from_i128(den_);
    return q;
  }

  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_i128(num_); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_i128(den_); }

  double to_double() const { return big_ ? big_->get_d() : double(num_) / double(den_); }

  /// `p/q`, denominator omitted when 1.
  std::string str() const {
    if (big_) return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses `p` or `p/q` (optional leading sign on p). Rejects anything else.
  static Rational parse(std::string_view text) {
    auto digits = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char ch : s)
        if (ch < '0' || ch > '9') return false;
      return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!digits(num, true) || (slash != std::string_view::npos && !digits(den, false)))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    mpq_class q;
    q.get_num() = mpz_class(n);
    q.get_den() = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den));
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    Rational r;
    r.set_big(std::move(q));
    return r;
  }

  Rational operator-() const {
    Rational r(*this);
    if (r.big_)
      *r.big_ = -*r.big_;
    else
      r.num_ = -r.num_;
    return r;
  }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (big_) return Rational(mpq_class(1) / *big_);
    return num_ < 0 ? Rational(-den_, -num_, Canonical{}) : Rational(den_, num_, Canonical{});
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.big_ && !b.big_) {
      Rational r;
      if (a.den_ == b.den_) {
        r.assign_reduce(static_cast<i128>(a.num_) + b.num_, a.den_);
      } else {
        r.assign_reduce(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                        static_cast<i128>(a.den_) * b.den_);
      }
      return r;
    }
    Rational r;
    r.set_big(a.to_mpq() + b.to_mpq());
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (!a.big_ && !b.big_) {
      // cross-cancel first so the product is already reduced
      i128 g1 = gcd128(abs128(a.num_), b.den_);
      i128 g2 = gcd128(abs128(b.num_), a.den_);
      Rational r;
      r.assign_canonical((a.num_ / g1) * static_cast<i128>(b.num_ / g2),
                         (a.den_ / g2) * static_cast<i128>(b.den_ / g1));
      return r;
    }
    Rational r;
    r.set_big(a.to_mpq() * b.to_mpq());
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      i128 l = static_cast<i128>(a.num_) * b.den_, r = static_cast<i128>(b.num_) * a.den_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  using i128 = __int128;
  struct Canonical {};
  Rational(i128 n, i128 d, Canonical) { assign_canonical(n, d); }

  static constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

  static i128 abs128(i128 v) { return v < 0 ? -v : v; }
  static i128 gcd128(i128 a, i128 b) {
    if (a <= kMax && b <= kMax) return std::gcd(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::uint64_t limbs[2] = {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(u >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (neg) z = -z;
    return z;
  }

  void assign_i128(i128 n, i128 d) {
    if (d == 0) throw DivisionByZero();
    if (d < 0) {
      n = -n;
      d = -d;
    }
    assign_reduce(n, d);
  }

  // d > 0, arbitrary common factors
  void assign_reduce(i128 n, i128 d) {
    if (n == 0) {
      assign_canonical(0, 1);
      return;
    }
    if (d != 1) {
      i128 g = gcd128(abs128(n), d);
      if (g != 1) {
        n /= g;
        d /= g;
      }
    }
    assign_canonical(n, d);
  }

  // already in lowest terms, d > 0
  void assign_canonical(i128 n, i128 d) {
    if (n >= -kMax && n <= kMax && d <= kMax) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
      return;
    }
    mpq_class q;
    q.get_num() = mpz_from_i128(n);
    q.get_den() = mpz_from_i128(d);
    set_big(std::move(q));
  }

  // q canonical; demotes when it fits inline
  void set_big(mpq_class q) {
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
      long n = q.get_num().get_si();
      long d = q.get_den().get_si();
      if (n != std::numeric_limits<long>::min()) {
        num_ = n;
        den_ = d;
        big_.reset();
        return;
      }
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace g2kit
