#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sylow/field.hpp"

namespace sylow {

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr ctx, int rows, int cols);
  static Matrix identity(FieldPtr ctx, int n);
  // Antidiagonal identity J_n.
  static Matrix antidiag(FieldPtr ctx, int n);
  static Matrix from_ints(FieldPtr ctx, const std::vector<std::vector<long long>>& rows);

  const FieldPtr& ctx() const { return ctx_; }
  const Field& field() const { return *ctx_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elem& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<Elem>& data() const { return data_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(Elem c) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  // Entrywise map a -> a^q (the bar map). Identity when `hermitian` is false.
  Matrix bar(bool hermitian = true) const;
  // Throws DivisionByZero when singular.
  Matrix inverse() const;
  Elem det() const;
  bool is_identity() const;
  bool is_lower_unitriangular() const;

  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& b);
  // Block-diagonal sum.
  static Matrix direct_sum(const std::vector<Matrix>& parts);

  std::string to_json_string() const;
  std::size_t hash() const;

 private:
  FieldPtr ctx_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

}  // namespace sylow
