#ifndef KW4_LINALG_HPP
#define KW4_LINALG_HPP

#include <array>
#include <stdexcept>
#include <vector>

#include "kw4/scalar.hpp"

namespace kw4 {

template <typename S>
using Vec4 = std::array<S, 4>;

template <typename S>
using Mat4 = std::array<std::array<S, 4>, 4>;

template <typename S>
Mat4<S> mat_identity() {
  Mat4<S> m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = i == j ? scalar_traits<S>::one() : scalar_traits<S>::zero();
  return m;
}

template <typename S>
Mat4<S> mat_zero() {
  Mat4<S> m{};
  for (auto& row : m)
    for (auto& x : row) x = scalar_traits<S>::zero();
  return m;
}

template <typename S>
Vec4<S> vec_zero() {
  Vec4<S> v{};
  for (auto& x : v) x = scalar_traits<S>::zero();
  return v;
}

template <typename S>
Mat4<S> mat_mul(const Mat4<S>& a, const Mat4<S>& b) {
  Mat4<S> out = mat_zero<S>();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
  return out;
}

template <typename S>
Vec4<S> mat_vec(const Mat4<S>& a, const Vec4<S>& v) {
  Vec4<S> out = vec_zero<S>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] = out[i] + a[i][j] * v[j];
  return out;
}

template <typename S>
Mat4<S> mat_transpose(const Mat4<S>& a) {
  Mat4<S> out = a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[j][i];
  return out;
}

template <typename S>
Mat4<S> mat_conj(const Mat4<S>& a) {
  Mat4<S> out = a;
  for (auto& row : out)
    for (auto& x : row) x = conjugate(x);
  return out;
}

/// Solves the square system A x = b by Gaussian elimination with nonzero
/// pivoting. Pivots must be units in S.
template <typename S>
std::vector<S> solve_square(std::vector<std::vector<S>> a, std::vector<S> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) throw std::domain_error("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      const S f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
      b[r] = b[r] - f * b[col];
    }
  }
  std::vector<S> x(n, scalar_traits<S>::zero());
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

template <typename S>
Mat4<S> mat_inverse(const Mat4<S>& m) {
  std::vector<std::vector<S>> a(4, std::vector<S>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
  Mat4<S> inv{};
  for (int col = 0; col < 4; ++col) {
    std::vector<S> e(4, scalar_traits<S>::zero());
    e[col] = scalar_traits<S>::one();
    const auto x = solve_square(a, e);
    for (int i = 0; i < 4; ++i) inv[i][col] = x[i];
  }
  return inv;
}

/// Row rank over an exact field.
template <typename S>
int matrix_rank(std::vector<std::vector<S>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && is_zero(a[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      const S f = a[r][col] / a[row][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] = a[r][c] - f * a[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace kw4

#endif
