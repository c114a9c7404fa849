#include "toric/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "toric/error.hpp"

namespace toric {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("integer overflow in lattice arithmetic");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("integer overflow in lattice arithmetic");
  return out;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

std::int64_t gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

bool is_primitive(std::span<const std::int64_t> v) { return gcd_of(v) == 1; }

IntVector make_primitive(IntVector v) {
  const std::int64_t g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IntMatrix transpose(const IntMatrix& a, std::size_t cols) {
  IntMatrix t(cols, IntVector(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntVector multiply(const IntMatrix& a, std::span<const std::int64_t> x) {
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

std::int64_t determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  const __int128 det = sign * m[n - 1][n - 1];
  if (det > INT64_MAX || det < INT64_MIN) throw Error("determinant overflows int64");
  return static_cast<std::int64_t>(det);
}

namespace {

// Column operation: col_a <- p*col_a + q*col_b, col_b <- r*col_a + s*col_b.
void combine_columns(IntMatrix& m, std::size_t a, std::size_t b, std::int64_t p, std::int64_t q,
                     std::int64_t r, std::int64_t s) {
  for (auto& row : m) {
    const std::int64_t x = row[a];
    const std::int64_t y = row[b];
    row[a] = checked_add(checked_mul(p, x), checked_mul(q, y));
    row[b] = checked_add(checked_mul(r, x), checked_mul(s, y));
  }
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (auto& row : m) row[c] = -row[c];
}

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& a, std::size_t cols) {
  ColumnEchelon out{a, identity_matrix(cols), {}};
  auto& h = out.echelon;
  auto& u = out.transform;
  std::size_t pivot_col = 0;
  for (std::size_t row = 0; row < h.size() && pivot_col < cols; ++row) {
    // Euclid across columns pivot_col.. until only pivot_col is nonzero in this row.
    for (std::size_t c = pivot_col + 1; c < cols; ++c) {
      while (h[row][c] != 0) {
        const std::int64_t q = h[row][pivot_col] / h[row][c];
        // col_p <- col_p - q col_c, then swap.
        combine_columns(h, pivot_col, c, 1, -q, 0, 1);
        combine_columns(u, pivot_col, c, 1, -q, 0, 1);
        swap_columns(h, pivot_col, c);
        swap_columns(u, pivot_col, c);
      }
    }
    if (h[row][pivot_col] == 0) continue;
    if (h[row][pivot_col] < 0) {
      negate_column(h, pivot_col);
      negate_column(u, pivot_col);
    }
    out.pivot_rows.push_back(row);
    ++pivot_col;
  }
  return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, std::size_t cols,
                                       std::span<const std::int64_t> b) {
  const ColumnEchelon ce = column_echelon(a, cols);
  IntVector y(cols, 0);
  for (std::size_t j = 0; j < ce.rank(); ++j) {
    const auto& row = ce.echelon[ce.pivot_rows[j]];
    std::int64_t rest = b[ce.pivot_rows[j]];
    for (std::size_t i = 0; i < j; ++i) rest = checked_add(rest, -checked_mul(row[i], y[i]));
    if (rest % row[j] != 0) return std::nullopt;
    y[j] = rest / row[j];
  }
  for (std::size_t r = 0; r < ce.echelon.size(); ++r)
    if (dot(ce.echelon[r], y) != b[r]) return std::nullopt;
  return multiply(ce.transform, y);
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix adj(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        IntVector row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      const std::int64_t d = determinant(minor);
      adj[i][j] = ((i + j) % 2 == 0) ? d : -d;
    }
  }
  return adj;
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (std::llabs(determinant(a)) != 1) return std::nullopt;
  IntMatrix inv(n, IntVector(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, 0);
    e[j] = 1;
    auto col = solve_integer(a, n, e);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

}  // namespace toric
