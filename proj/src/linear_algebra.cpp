// Copyright 2026 The Courant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "courant/linear_algebra.hpp"

#include <optional>
#include <type_traits>

#include "courant/errors.hpp"

namespace courant {

RFMatrix to_rational(const Matrix<Scalar>& m) {
  RFMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(to_rational(row));
  return out;
}

RFVector to_rational(const Vector<Scalar>& v) { return RFVector(v.begin(), v.end()); }

RFMatrix identity_matrix(std::size_t n) {
  RFMatrix out = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) out[i][i] = RationalFunction(1);
  return out;
}

RFMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return RFMatrix(rows, RFVector(cols));
}

RFMatrix transpose(const RFMatrix& m) {
  if (m.empty()) return {};
  RFMatrix out = zero_matrix(m[0].size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  }
  return out;
}

RFMatrix operator*(const RFMatrix& a, const RFMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  RFMatrix out = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw ShapeError("matrix product shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

RFMatrix operator+(const RFMatrix& a, const RFMatrix& b) {
  RFMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b.at(i).at(j);
  }
  return out;
}

RFMatrix operator-(const RFMatrix& a, const RFMatrix& b) {
  RFMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b.at(i).at(j);
  }
  return out;
}

RFMatrix scaled(const RFMatrix& m, const RationalFunction& factor) {
  RFMatrix out = m;
  for (auto& row : out) {
    for (auto& x : row) x *= factor;
  }
  return out;
}

RFVector operator*(const RFMatrix& m, const RFVector& v) {
  RFVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

namespace {

void require_square(const auto& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw ShapeError("matrix is not square");
  }
}

/// Row with the sparsest nonzero entry in column k at or below row k.
template <class T>
std::optional<std::size_t> choose_pivot(const Matrix<T>& m, std::size_t k) {
  std::optional<std::size_t> best;
  std::size_t best_size = 0;
  for (std::size_t i = k; i < m.size(); ++i) {
    if (m[i][k].is_zero()) continue;
    std::size_t size;
    if constexpr (std::is_same_v<T, Scalar>) {
      size = m[i][k].size();
    } else {
      size = m[i][k].numerator().size() + m[i][k].denominator().size();
    }
    if (!best || size < best_size) {
      best = i;
      best_size = size;
    }
  }
  return best;
}

/// Fraction-free forward elimination over the first `pivot_cols` columns.
/// Returns false when a pivot column is identically zero. `sign` tracks
/// row swaps.
bool bareiss_forward(Matrix<Scalar>& m, std::size_t pivot_cols, int& sign) {
  Scalar prev(1);
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < pivot_cols; ++k) {
    const auto p = choose_pivot(m, k);
    if (!p) return false;
    if (*p != k) {
      std::swap(m[*p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        Scalar value = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = value.divide_exact(prev);
      }
      m[i][k] = Scalar();
    }
    prev = m[k][k];
  }
  return true;
}

}  // namespace

Scalar determinant(const Matrix<Scalar>& m) {
  require_square(m);
  if (m.empty()) return Scalar(1);
  Matrix<Scalar> work = m;
  int sign = 1;
  if (!bareiss_forward(work, work.size(), sign)) return Scalar();
  const Scalar& det = work.back().back();
  return sign > 0 ? det : -det;
}

RationalFunction determinant(const RFMatrix& m) {
  require_square(m);
  // Clear denominators row by row, then eliminate fraction-free.
  Matrix<Scalar> cleared;
  RationalFunction scale(1);
  for (const auto& row : m) {
    Scalar common(1);
    for (const auto& x : row) {
      const Scalar& d = x.denominator();
      if (!d.is_constant()) common = common * d.divide_exact(gcd(common, d));
    }
    Vector<Scalar> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(x.numerator() * common.divide_exact(x.denominator()));
    cleared.push_back(std::move(r));
    scale *= RationalFunction(Scalar(1), common);
  }
  return RationalFunction(determinant(cleared)) * scale;
}

RFMatrix invert_matrix(const Matrix<Scalar>& m) {
  require_square(m);
  const std::size_t n = m.size();
  Matrix<Scalar> work(n);
  for (std::size_t i = 0; i < n; ++i) {
    work[i] = m[i];
    work[i].resize(2 * n);
    work[i][n + i] = Scalar(1);
  }
  int sign = 1;
  if (!bareiss_forward(work, n, sign)) throw SingularMatrix("matrix is singular (determinant is identically zero)");
  RFMatrix out = zero_matrix(n, n);
  for (std::size_t row = n; row-- > 0;) {
    const RationalFunction pivot(work[row][row]);
    for (std::size_t col = 0; col < n; ++col) {
      RationalFunction acc(work[row][n + col]);
      for (std::size_t j = row + 1; j < n; ++j) {
        if (!work[row][j].is_zero()) acc -= RationalFunction(work[row][j]) * out[j][col];
      }
      out[row][col] = acc / pivot;
    }
  }
  return out;
}

RFMatrix invert_matrix(const RFMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  RFMatrix work(n);
  for (std::size_t i = 0; i < n; ++i) {
    work[i] = m[i];
    work[i].resize(2 * n);
    work[i][n + i] = RationalFunction(1);
  }
  std::vector<std::size_t> pivots;
  work = row_reduce(std::move(work), &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw SingularMatrix("matrix is singular (determinant is identically zero)");
  }
  RFMatrix out = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = work[i][n + j];
  }
  return out;
}

RFMatrix row_reduce(RFMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::optional<std::size_t> p;
    std::size_t best = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const std::size_t size = m[i][c].numerator().size() + m[i][c].denominator().size();
      if (!p || size < best) {
        p = i;
        best = size;
      }
    }
    if (!p) continue;
    std::swap(m[*p], m[r]);
    const RationalFunction inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const RationalFunction factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= factor * m[r][j];
      }
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const RFMatrix& rows) {
  std::vector<std::size_t> pivots;
  row_reduce(rows, &pivots);
  return pivots.size();
}

std::optional<RFVector> solve_in_span(const RFVector& v, const std::vector<RFVector>& spanning) {
  const std::size_t k = spanning.size();
  for (const auto& s : spanning) {
    if (s.size() != v.size()) throw ShapeError("solve_in_span: vectors of unequal length");
  }
  // Columns are the spanning vectors, augmented by v.
  RFMatrix system = zero_matrix(v.size(), k + 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) system[i][j] = spanning[j][i];
    system[i][k] = v[i];
  }
  std::vector<std::size_t> pivots;
  const RFMatrix reduced = row_reduce(std::move(system), &pivots);
  std::size_t basic = 0;
  for (std::size_t p : pivots) basic += p < k ? 1 : 0;
  if (basic < k) throw RankDeficient("spanning set is generically dependent");
  if (pivots.size() > k) return std::nullopt;
  RFVector c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = reduced[i][k];
  return c;
}

std::vector<RFVector> kernel(const std::vector<RFVector>& rows, std::size_t width) {
  RFMatrix m(rows.begin(), rows.end());
  for (const auto& r : m) {
    if (r.size() != width) throw ShapeError("kernel: row of wrong width");
  }
  std::vector<std::size_t> pivots;
  const RFMatrix reduced = row_reduce(std::move(m), &pivots);
  std::vector<bool> is_pivot(width, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RFVector> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    RFVector w(width);
    w[free] = RationalFunction(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) w[pivots[i]] = -reduced[i][free];
    basis.push_back(std::move(w));
  }
  return basis;
}

bool same_span(const std::vector<RFVector>& a, const std::vector<RFVector>& b) {
  RFMatrix ma(a.begin(), a.end());
  RFMatrix mb(b.begin(), b.end());
  RFMatrix both = ma;
  both.insert(both.end(), mb.begin(), mb.end());
  const auto rank_of = [](const RFMatrix& m) { return m.empty() ? std::size_t{0} : rank(m); };
  const std::size_t r = rank_of(both);
  return rank_of(ma) == r && rank_of(mb) == r;
}

}  // namespace courant
