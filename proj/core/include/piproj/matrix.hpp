#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "piproj/field.hpp"

namespace piproj {

/// Dense row-major matrix over a Field. Desk-scale dimensions; no
/// sparsity. Values are immutable by convention once built (the mutating
/// accessors exist for construction code only).
struct Matrix {
  Matrix(Field f, std::uint32_t rows, std::uint32_t cols);

  Field field;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<felem> e;  // rows*cols entries

  felem at(std::uint32_t i, std::uint32_t j) const { return e[i * cols + j]; }
  felem& at(std::uint32_t i, std::uint32_t j) { return e[i * cols + j]; }

  bool operator==(const Matrix& other) const;

  static Matrix identity(const Field& f, std::uint32_t n);
  static Matrix zero(const Field& f, std::uint32_t rows, std::uint32_t cols);
};

struct RrefResult {
  Matrix R;
  std::uint32_t rank;
  std::vector<std::uint32_t> pivots;  // pivot column indices, increasing
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, felem c);
Matrix mat_pow(const Matrix& a, std::uint32_t e);
Matrix transpose(const Matrix& a);

/// Deterministic reduced row echelon form: the pivot of each column is
/// the first nonzero entry found scanning rows top down.
RrefResult rref(const Matrix& a);
std::uint32_t rank(const Matrix& a);

/// Rows span { x : a xᵀ = 0 }; rows are linearly independent and there
/// are cols(a) − rank(a) of them (one per free column, echelon order).
Matrix kernel_basis(const Matrix& a);

/// A solution x with a xᵀ = bᵀ, free variables set to zero after rref;
/// nullopt when inconsistent.
std::optional<std::vector<felem>> solve(const Matrix& a,
                                        const std::vector<felem>& b);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Stack b below a (same column count).
Matrix vstack(const Matrix& a, const Matrix& b);
/// Concatenate columns (same row count).
Matrix hstack(const Matrix& a, const Matrix& b);

/// Least e >= 1 with a^e = 0; throws std::domain_error if a is not
/// nilpotent (checked against e <= rows).
std::uint32_t nilpotency_index(const Matrix& a);

bool is_zero(const Matrix& a);
bool is_invertible(const Matrix& a);
Matrix inverse(const Matrix& a);  // throws if singular

/// Column span as a matrix whose columns are an echelonized basis.
Matrix column_space_basis(const Matrix& a);

}  // namespace piproj
