#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "g2kit/error.hpp"
#include "g2kit/scalar.hpp"

namespace g2kit {

/// Dense square matrix over a commutative ring T (ComplexScalar, ExactScalar,
/// or a polynomial ring). Row-major storage, 0-based element access.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  bool is_zero() const {
    for (const T& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// (row, col) of every nonzero entry in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> nonzeros() const {
    std::vector<std::pair<std::size_t, std::size_t>> nz;
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        if (!(*this)(r, c).is_zero()) nz.emplace_back(r, c);
    return nz;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!a_[k].is_zero()) r.a_[k] = -a_[k];
    return r;
  }

  /// Product skipping zero entries of the left factor and zero rows of the right.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    Matrix r(n);
    std::vector<std::vector<std::size_t>> row_nz(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) row_nz[k].push_back(j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j : row_nz[k]) r(i, j).add_product(aik, b(k, j));
      }
    return r;
  }
  Matrix& operator*=(const Matrix& o) { return *this = *this * o; }

  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r(m.n_);
    if (s.is_zero()) return r;
    for (std::size_t k = 0; k < m.a_.size(); ++k)
      if (!m.a_[k].is_zero()) r.a_[k] = s * m.a_[k];
    return r;
  }

  Matrix transpose() const {
    Matrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  void check_same(const Matrix& o) const {
    if (n_ != o.n_)
      throw DimensionMismatch("matrix dimensions " + std::to_string(n_) + " and " + std::to_string(o.n_));
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

/// Matrix of a representation: entries in Q(sqrt2,sqrt3,sqrt7)(i).
using RepMatrix = Matrix<ComplexScalar>;

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}
template <class T>
Matrix<T> anticommutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b + b * a;
}

/// tr(a b) without forming the product.
template <class T>
T trace_product(const Matrix<T>& a, const Matrix<T>& b) {
  a.check_same(b);
  T t{};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!a(i, k).is_zero() && !b(k, i).is_zero()) t.add_product(a(i, k), b(k, i));
  return t;
}

template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned k) {
  Matrix<T> r = Matrix<T>::identity(a.size());
  for (unsigned e = 0; e < k; ++e) r = r * a;
  return r;
}

inline RepMatrix dagger(const RepMatrix& a) {
  RepMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(j, i) = a(i, j).conj();
  return r;
}

inline bool is_hermitian(const RepMatrix& a) { return dagger(a) == a; }

/// Tensor product; row (i, j) of the result is i * m + j.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.size(), m = b.size();
  Matrix<T> r(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l)
          if (!b(j, l).is_zero()) r(i * m + j, k * m + l) = a(i, k) * b(j, l);
    }
  return r;
}

/// Trace over the first tensor factor of dimension `outer`:
/// result(i, j) = sum_v M((v, i), (v, j)).
template <class T>
Matrix<T> partial_trace_first(const Matrix<T>& mat, std::size_t outer) {
  if (outer == 0 || mat.size() % outer != 0)
    throw DimensionMismatch("partial trace: " + std::to_string(mat.size()) + " is not a multiple of " +
                            std::to_string(outer));
  const std::size_t m = mat.size() / outer;
  Matrix<T> r(m);
  for (std::size_t v = 0; v < outer; ++v)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (!mat(v * m + i, v * m + j).is_zero()) r(i, j) += mat(v * m + i, v * m + j);
  return r;
}

/// partial_trace_first(a * b, outer) computing only the diagonal blocks of the product.
template <class T>
Matrix<T> partial_trace_first_of_product(const Matrix<T>& a, const Matrix<T>& b, std::size_t outer) {
  a.check_same(b);
  if (outer == 0 || a.size() % outer != 0) throw DimensionMismatch("partial trace: bad outer dimension");
  const std::size_t m = a.size() / outer, n = a.size();
  Matrix<T> r(m);
  std::vector<std::vector<std::size_t>> row_nz(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (!b(k, j).is_zero()) row_nz[k].push_back(j);
  for (std::size_t v = 0; v < outer; ++v)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(v * m + i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j : row_nz[k])
          if (j / m == v) r(i, j % m).add_product(aik, b(k, j));
      }
  return r;
}

/// Text dump: `matrix n=<n>` then `row col scalar` per nonzero entry, 1-based,
/// lexicographic order, scalars in the canonical complex grammar.
inline void write_matrix(std::ostream& os, const RepMatrix& m) {
  os << "matrix n=" << m.size() << "\n";
  for (auto [r, c] : m.nonzeros()) os << r + 1 << " " << c + 1 << " " << m(r, c).str() << "\n";
}

inline std::string matrix_to_string(const RepMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

/// Reads every matrix block of a dump. Blank lines and lines starting with '#'
/// are skipped; `names` (optional) receives the text of the last comment line
/// seen before each block.
inline std::vector<RepMatrix> read_matrices(std::istream& is, std::vector<std::string>* names = nullptr) {
  std::vector<RepMatrix> out;
  std::string line, pending_name;
  std::size_t lineno = 0;
  long long last_key = -1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      pending_name = line.substr(line.find_first_not_of("# ") == std::string::npos ? line.size()
                                                                                    : line.find_first_not_of("# "));
      continue;
    }
    if (line.rfind("matrix ", 0) == 0) {
      std::string rest = line.substr(7);
      if (rest.rfind("n=", 0) != 0) throw ParseError("expected n=<dim>", lineno, "header");
      std::size_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoul(rest.substr(2), &used);
        if (used != rest.size() - 2 || n == 0) throw std::invalid_argument("n");
      } catch (const std::exception&) {
        throw ParseError("bad dimension '" + rest.substr(2) + "'", lineno, "header");
      }
      out.emplace_back(n);
      if (names) names->push_back(pending_name);
      pending_name.clear();
      last_key = -1;
      continue;
    }
    if (out.empty()) throw ParseError("entry before any 'matrix' header", lineno, "entry");
    std::istringstream ls(line);
    long long r = 0, c = 0;
    std::string scalar, extra;
    if (!(ls >> r)) throw ParseError("bad row index", lineno, "row");
    if (!(ls >> c)) throw ParseError("bad column index", lineno, "col");
    if (!(ls >> scalar)) throw ParseError("missing scalar", lineno, "scalar");
    if (ls >> extra) throw ParseError("trailing text '" + extra + "'", lineno, "entry");
    RepMatrix& m = out.back();
    if (r < 1 || c < 1 || std::size_t(r) > m.size() || std::size_t(c) > m.size())
      throw ParseError("index out of range", lineno, "row/col");
    long long key = (r - 1) * static_cast<long long>(m.size()) + (c - 1);
    if (key <= last_key) throw ParseError("entries not in strictly lexicographic order", lineno, "row/col");
    last_key = key;
    try {
      m(r - 1, c - 1) = ComplexScalar::parse(scalar);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno, "scalar");
    }
  }
  return out;
}

}  // namespace g2kit
