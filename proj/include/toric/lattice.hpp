#pragma once

// Exact integer linear algebra on small dense matrices: determinants, column
// Hermite-style echelon forms with unimodular transforms, and integer system
// solving. All arithmetic is overflow-checked.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace toric {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
std::int64_t gcd_of(std::span<const std::int64_t> v);

// Nonzero with coordinate gcd 1.
bool is_primitive(std::span<const std::int64_t> v);

// Divides by the coordinate gcd. Zero vectors are returned unchanged.
IntVector make_primitive(IntVector v);

IntMatrix transpose(const IntMatrix& a, std::size_t cols);
IntMatrix identity_matrix(std::size_t n);
IntVector multiply(const IntMatrix& a, std::span<const std::int64_t> x);

// Fraction-free (Bareiss) determinant of a square matrix.
std::int64_t determinant(const IntMatrix& a);

// A * transform == echelon, transform unimodular (n x n).
// Column j < rank has its leading nonzero entry (positive) in row pivot_rows[j];
// entries above it are zero. Columns >= rank are zero.
struct ColumnEchelon {
  IntMatrix echelon;
  IntMatrix transform;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank() const { return pivot_rows.size(); }
};

ColumnEchelon column_echelon(const IntMatrix& a, std::size_t cols);

// Some integer x with A x = b, or nullopt when no integer solution exists.
// When A has full column rank the solution is unique.
std::optional<IntVector> solve_integer(const IntMatrix& a, std::size_t cols,
                                       std::span<const std::int64_t> b);

// det(A) * A^-1 for a square matrix (the classical adjoint).
IntMatrix adjugate(const IntMatrix& a);

// Inverse of a unimodular square matrix; nullopt when |det| != 1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a);

}  // namespace toric
