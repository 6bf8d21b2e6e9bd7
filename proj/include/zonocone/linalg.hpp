#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "zonocone/rational.hpp"

namespace zc {

inline Int gcd(Int a, Int b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return int_abs(a / gcd(a, b) * b);
}

/// gcd of all entries; 0 for the zero vector.
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content. The zero vector is rejected: primitive directions
/// are only defined for nonzero vectors.
inline IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  if (g != 1)
    for (Int& x : v) x /= g;
  return v;
}

/// Clears denominators: smallest positive multiplier making all entries integral.
inline IntVec scale_to_integer(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = lcm(l, den(x));
  IntVec out;
  out.reserve(v.size());
  for (const Rat& x : v) out.push_back(num(x) * (l / den(x)));
  return out;
}

/// Nonzero rational vector to the primitive integer vector on the same ray.
inline IntVec primitive_ray(const RatVec& v) { return primitive(scale_to_integer(v)); }

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

/// Bareiss fraction-free determinant of an integer matrix. All intermediate
/// divisions are exact.
inline Int det_bareiss(IntMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det: non-square matrix");
  Int prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sgn > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

/// Exact determinant of a rational matrix: rows are scaled integral first, the
/// integer core goes through Bareiss.
inline Rat det(const RatMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  IntMat im(n);
  Rat factor = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("det: non-square matrix");
    Int l = 1;
    for (const Rat& x : m[i]) l = lcm(l, den(x));
    im[i].reserve(n);
    for (const Rat& x : m[i]) im[i].push_back(num(x) * (l / den(x)));
    factor /= l;
  }
  return Rat(det_bareiss(std::move(im))) * factor;
}

inline Rat det(const IntMat& m) {
  return Rat(det_bareiss(m));
}

/// Exact rank by integer fraction-free elimination. Row scaling does not
/// change rank, so rational input is cleared row-wise first.
inline std::size_t rank(IntMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Int g = gcd(m[i][c], m[r][c]);
      Int fi = m[r][c] / g, fr = m[i][c] / g;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * fi - m[r][j] * fr;
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const RatMat& m) {
  IntMat im;
  im.reserve(m.size());
  for (const auto& row : m) im.push_back(scale_to_integer(row));
  return rank(std::move(im));
}

}  // namespace zc
