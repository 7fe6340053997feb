#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

// Under C++20 the mixed rational/integer operator== templates in older Boost
// resolve to their own reversed form and recurse forever. Exact non-template
// overloads win overload resolution and break the cycle.
namespace boost {
#define HITCHIN_RATIONAL_EQ(T)                                                                             \
  inline bool operator==(const rational<std::int64_t>& r, T i) {                                           \
    return r.denominator() == 1 && r.numerator() == static_cast<std::int64_t>(i);                          \
  }                                                                                                        \
  inline bool operator==(T i, const rational<std::int64_t>& r) { return r == i; }
HITCHIN_RATIONAL_EQ(int)
HITCHIN_RATIONAL_EQ(long)
HITCHIN_RATIONAL_EQ(long long)
#undef HITCHIN_RATIONAL_EQ
}  // namespace boost

namespace hitchin {

using Int = std::int64_t;
using Rational = boost::rational<Int>;
using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

enum class ErrorCode {
  invalid_type,
  invalid_lattice,
  invalid_genus,
  index_out_of_range,
  enumeration_unavailable,
  strategy_unavailable,
  inconsistent_input,
  verification_failed,
  overflow,
};

/// Every library failure carries a code so front ends can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Overflow-checked 64-bit arithmetic. Counts like |W|(g-1)(1+|R+|) get large
// for E8 and big genera.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::overflow, "integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::overflow, "integer overflow in multiplication");
  return r;
}

inline Int checked_mul(std::initializer_list<Int> factors) {
  Int r = 1;
  for (Int f : factors) r = checked_mul(r, f);
  return r;
}

/// Dense row-major integer matrix. Small (rank <= 8 plus central part), so no
/// expression templates; equality and hashing are entrywise.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(ErrorCode::inconsistent_input, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Int>& data() const noexcept { return data_; }

  Int trace() const {
    Int t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::inconsistent_input, "matrix dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  IntVector operator*(std::span<const Int> v) const {
    if (v.size() != cols_) throw Error(ErrorCode::inconsistent_input, "matrix-vector dimension mismatch");
    IntVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

inline std::size_t hash_range(std::span<const Int> values) {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Int v : values) {
    h ^= std::hash<Int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const { return hash_range(m.data()); }
};

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const { return hash_range(v); }
};

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace hitchin
