#include "piproj/matrix.hpp"

#include <stdexcept>

namespace piproj {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!a.field.same(b.field))
    throw std::invalid_argument("matrix: field mismatch");
}

}  // namespace

Matrix::Matrix(Field f, std::uint32_t r, std::uint32_t c)
    : field(std::move(f)), rows(r), cols(c), e(std::size_t(r) * c, 0) {}

bool Matrix::operator==(const Matrix& other) const {
  return field.same(other.field) && rows == other.rows && cols == other.cols &&
         e == other.e;
}

Matrix Matrix::identity(const Field& f, std::uint32_t n) {
  Matrix m(f, n, n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::zero(const Field& f, std::uint32_t rows, std::uint32_t cols) {
  return Matrix(f, rows, cols);
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix: shape mismatch in add");
  Matrix out = a;
  const Field& F = a.field;
  for (std::size_t k = 0; k < out.e.size(); ++k)
    out.e[k] = F.add(out.e[k], b.e[k]);
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix: shape mismatch in sub");
  Matrix out = a;
  const Field& F = a.field;
  for (std::size_t k = 0; k < out.e.size(); ++k)
    out.e[k] = F.sub(out.e[k], b.e[k]);
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols != b.rows)
    throw std::invalid_argument("matrix: shape mismatch in mul");
  Matrix out(a.field, a.rows, b.cols);
  const Field& F = a.field;
  for (std::uint32_t i = 0; i < a.rows; ++i) {
    felem* dst = &out.e[std::size_t(i) * b.cols];
    for (std::uint32_t k = 0; k < a.cols; ++k) {
      felem c = a.at(i, k);
      if (c == 0) continue;
      F.row_axpy(dst, &b.e[std::size_t(k) * b.cols], c, b.cols);
    }
  }
  return out;
}

Matrix mat_scale(const Matrix& a, felem c) {
  Matrix out = a;
  out.field.row_scale(out.e.data(), c, out.e.size());
  return out;
}

Matrix mat_pow(const Matrix& a, std::uint32_t e) {
  if (a.rows != a.cols) throw std::invalid_argument("matrix: pow of non-square");
  Matrix acc = Matrix::identity(a.field, a.rows);
  Matrix base = a;
  while (e) {
    if (e & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return acc;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field, a.cols, a.rows);
  for (std::uint32_t i = 0; i < a.rows; ++i)
    for (std::uint32_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

RrefResult rref(const Matrix& a) {
  Matrix R = a;
  const Field& F = a.field;
  std::vector<std::uint32_t> pivots;
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::uint32_t sel = row;
    while (sel < a.rows && R.at(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != row)
      for (std::uint32_t j = 0; j < a.cols; ++j)
        std::swap(R.at(sel, j), R.at(row, j));
    felem piv_inv = F.inv(R.at(row, col));
    F.row_scale(&R.e[std::size_t(row) * a.cols], piv_inv, a.cols);
    for (std::uint32_t i = 0; i < a.rows; ++i) {
      if (i == row) continue;
      felem c = R.at(i, col);
      if (c == 0) continue;
      F.row_axpy(&R.e[std::size_t(i) * a.cols],
                 &R.e[std::size_t(row) * a.cols], F.neg(c), a.cols);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(R), row, std::move(pivots)};
}

std::uint32_t rank(const Matrix& a) {
  // Forward elimination only; no back substitution.
  Matrix R = a;
  const Field& F = a.field;
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::uint32_t sel = row;
    while (sel < a.rows && R.at(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != row)
      for (std::uint32_t j = col; j < a.cols; ++j)
        std::swap(R.at(sel, j), R.at(row, j));
    felem piv_inv = F.inv(R.at(row, col));
    for (std::uint32_t i = row + 1; i < a.rows; ++i) {
      felem c = R.at(i, col);
      if (c == 0) continue;
      F.row_axpy(&R.e[std::size_t(i) * a.cols + col],
                 &R.e[std::size_t(row) * a.cols + col],
                 F.neg(F.mul(c, piv_inv)), a.cols - col);
    }
    ++row;
  }
  return row;
}

Matrix kernel_basis(const Matrix& a) {
  RrefResult r = rref(a);
  const Field& F = a.field;
  std::vector<bool> is_pivot(a.cols, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  Matrix out(F, a.cols - r.rank, a.cols);
  std::uint32_t k = 0;
  for (std::uint32_t fc = 0; fc < a.cols; ++fc) {
    if (is_pivot[fc]) continue;
    out.at(k, fc) = 1;
    for (std::uint32_t j = 0; j < r.rank; ++j)
      out.at(k, r.pivots[j]) = F.neg(r.R.at(j, fc));
    ++k;
  }
  return out;
}

std::optional<std::vector<felem>> solve(const Matrix& a,
                                        const std::vector<felem>& b) {
  if (b.size() != a.rows)
    throw std::invalid_argument("matrix: rhs length mismatch in solve");
  Matrix aug(a.field, a.rows, a.cols + 1);
  for (std::uint32_t i = 0; i < a.rows; ++i) {
    for (std::uint32_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols) return std::nullopt;
  std::vector<felem> x(a.cols, 0);
  for (std::uint32_t j = 0; j < r.rank; ++j)
    x[r.pivots[j]] = r.R.at(j, a.cols);
  return x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix out(a.field, a.rows * b.rows, a.cols * b.cols);
  const Field& F = a.field;
  for (std::uint32_t ia = 0; ia < a.rows; ++ia)
    for (std::uint32_t ja = 0; ja < a.cols; ++ja) {
      felem c = a.at(ia, ja);
      if (c == 0) continue;
      for (std::uint32_t ib = 0; ib < b.rows; ++ib)
        for (std::uint32_t jb = 0; jb < b.cols; ++jb)
          out.at(ia * b.rows + ib, ja * b.cols + jb) = F.mul(c, b.at(ib, jb));
    }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix out(a.field, a.rows + b.rows, a.cols + b.cols);
  for (std::uint32_t i = 0; i < a.rows; ++i)
    for (std::uint32_t j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  for (std::uint32_t i = 0; i < b.rows; ++i)
    for (std::uint32_t j = 0; j < b.cols; ++j)
      out.at(a.rows + i, a.cols + j) = b.at(i, j);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols != b.cols)
    throw std::invalid_argument("matrix: column mismatch in vstack");
  Matrix out(a.field, a.rows + b.rows, a.cols);
  std::copy(a.e.begin(), a.e.end(), out.e.begin());
  std::copy(b.e.begin(), b.e.end(), out.e.begin() + a.e.size());
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows != b.rows)
    throw std::invalid_argument("matrix: row mismatch in hstack");
  Matrix out(a.field, a.rows, a.cols + b.cols);
  for (std::uint32_t i = 0; i < a.rows; ++i) {
    for (std::uint32_t j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
    for (std::uint32_t j = 0; j < b.cols; ++j)
      out.at(i, a.cols + j) = b.at(i, j);
  }
  return out;
}

std::uint32_t nilpotency_index(const Matrix& a) {
  if (a.rows != a.cols)
    throw std::invalid_argument("matrix: nilpotency of non-square");
  if (a.rows == 0) return 1;
  Matrix power = a;
  for (std::uint32_t e = 1; e <= a.rows; ++e) {
    if (is_zero(power)) return e;
    power = mat_mul(power, a);
  }
  throw std::domain_error("matrix: not nilpotent");
}

bool is_zero(const Matrix& a) {
  for (auto v : a.e)
    if (v != 0) return false;
  return true;
}

bool is_invertible(const Matrix& a) {
  return a.rows == a.cols && rank(a) == a.rows;
}

Matrix inverse(const Matrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("matrix: inverse of non-square");
  Matrix aug = hstack(a, Matrix::identity(a.field, a.rows));
  RrefResult r = rref(aug);
  if (r.rank != a.rows || (a.rows > 0 && r.pivots[a.rows - 1] != a.rows - 1))
    throw std::domain_error("matrix: singular");
  Matrix out(a.field, a.rows, a.cols);
  for (std::uint32_t i = 0; i < a.rows; ++i)
    for (std::uint32_t j = 0; j < a.cols; ++j)
      out.at(i, j) = r.R.at(i, a.cols + j);
  return out;
}

Matrix column_space_basis(const Matrix& a) {
  RrefResult r = rref(transpose(a));
  Matrix out(a.field, a.rows, r.rank);
  for (std::uint32_t i = 0; i < r.rank; ++i)
    for (std::uint32_t j = 0; j < a.rows; ++j) out.at(j, i) = r.R.at(i, j);
  return out;
}

}  // namespace piproj
