#include "sylow/matrix.hpp"

#include <sstream>

namespace sylow {

Matrix::Matrix(FieldPtr ctx, int rows, int cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

Matrix Matrix::identity(FieldPtr ctx, int n) {
  Matrix m(std::move(ctx), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::antidiag(FieldPtr ctx, int n) {
  Matrix m(std::move(ctx), n, n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
  return m;
}

Matrix Matrix::from_ints(FieldPtr ctx, const std::vector<std::vector<long long>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(ctx, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m.at(i, j) = ctx->from_int(rows[i][j]);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(Errc::DimensionMismatch, "matrix product shapes");
  const Field& F = *ctx_;
  Matrix out(ctx_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Elem a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        Elem b = o.at(k, j);
        if (b != 0) out.at(i, j) = F.add(out.at(i, j), F.mul(a, b));
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::DimensionMismatch, "matrix sum shapes");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ctx_->add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& x : out.data_) x = ctx_->neg(x);
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out(*this);
  for (auto& x : out.data_) x = ctx_->mul(x, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ctx_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::bar(bool hermitian) const {
  if (!hermitian) return *this;
  Matrix out(*this);
  for (auto& x : out.data_) x = ctx_->conj(x);
  return out;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const Field& F = *ctx_;
  int n = rows_;
  Matrix a(*this), inv = identity(ctx_, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error(Errc::DivisionByZero, "singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    Elem s = F.inv(a.at(c, c));
    for (int j = 0; j < n; ++j) {
      a.at(c, j) = F.mul(a.at(c, j), s);
      inv.at(c, j) = F.mul(inv.at(c, j), s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a.at(r, c) == 0) continue;
      Elem f = a.at(r, c);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = F.sub(a.at(r, j), F.mul(f, a.at(c, j)));
        inv.at(r, j) = F.sub(inv.at(r, j), F.mul(f, inv.at(c, j)));
      }
    }
  }
  return inv;
}

Elem Matrix::det() const {
  if (rows_ != cols_) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const Field& F = *ctx_;
  int n = rows_;
  Matrix a(*this);
  Elem d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, a.at(c, c));
    Elem s = F.inv(a.at(c, c));
    for (int r = c + 1; r < n; ++r) {
      Elem f = F.mul(a.at(r, c), s);
      if (f == 0) continue;
      for (int j = c; j < n; ++j) a.at(r, j) = F.sub(a.at(r, j), F.mul(f, a.at(c, j)));
    }
  }
  return d;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::is_lower_unitriangular() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    if (at(i, i) != 1) return false;
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != 0) return false;
  }
  return true;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix out(ctx_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

Matrix Matrix::direct_sum(const std::vector<Matrix>& parts) {
  int n = 0;
  FieldPtr ctx;
  for (const auto& p : parts) {
    n += p.rows();
    if (!ctx) ctx = p.ctx();
  }
  Matrix out(ctx, n, n);
  int off = 0;
  for (const auto& p : parts) {
    out.set_block(off, off, p);
    off += p.rows();
  }
  return out;
}

std::string Matrix::to_json_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "," : "") << '[';
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << ctx_->to_json_string(at(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t Matrix::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Elem x : data_) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace sylow
