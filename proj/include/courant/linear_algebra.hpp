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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "courant/rational_function.hpp"

namespace courant {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix.
template <class T>
using Matrix = std::vector<std::vector<T>>;

using RFVector = Vector<RationalFunction>;
using RFMatrix = Matrix<RationalFunction>;

RFMatrix to_rational(const Matrix<Scalar>& m);
RFVector to_rational(const Vector<Scalar>& v);

RFMatrix identity_matrix(std::size_t n);
RFMatrix zero_matrix(std::size_t rows, std::size_t cols);
RFMatrix transpose(const RFMatrix& m);
RFMatrix operator*(const RFMatrix& a, const RFMatrix& b);
RFMatrix operator+(const RFMatrix& a, const RFMatrix& b);
RFMatrix operator-(const RFMatrix& a, const RFMatrix& b);
RFMatrix scaled(const RFMatrix& m, const RationalFunction& factor);
RFVector operator*(const RFMatrix& m, const RFVector& v);

/// Determinant by fraction-free (Bareiss) elimination.
Scalar determinant(const Matrix<Scalar>& m);
RationalFunction determinant(const RFMatrix& m);

/// Inverse of a square matrix. The Scalar overload eliminates fraction-free
/// and only forms quotients during back substitution.
/// Throws SingularMatrix when the determinant is identically zero.
RFMatrix invert_matrix(const Matrix<Scalar>& m);
RFMatrix invert_matrix(const RFMatrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row.
RFMatrix row_reduce(RFMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RFMatrix& rows);

/// Coefficients c with sum_i c_i S_i = v, or nullopt when v is not in the
/// span. Throws RankDeficient when the S_i are generically dependent.
std::optional<RFVector> solve_in_span(const RFVector& v, const std::vector<RFVector>& spanning);

/// Basis of {w : <row, w> = 0 for every row}, one basis vector per free
/// column of the reduced system.
std::vector<RFVector> kernel(const std::vector<RFVector>& rows, std::size_t width);

/// True when both lists span the same subspace over rational functions.
bool same_span(const std::vector<RFVector>& a, const std::vector<RFVector>& b);

}  // namespace courant
