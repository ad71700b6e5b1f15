#pragma once

// Small exact linear algebra over Z / Q on 4-dimensional vectors.

#include <array>
#include <optional>
#include <vector>

#include "bianchi/arith.hpp"
#include "bianchi/qform.hpp"

namespace bianchi {

using Matrix4 = std::array<std::array<Integer, 4>, 4>;

Matrix4 identity4();
Matrix4 multiply(const Matrix4& a, const Matrix4& b);
Matrix4 transpose(const Matrix4& a);
LatticeVector apply(const Matrix4& g, const LatticeVector& v);
Integer determinant(const Matrix4& a);
/// adj(a) with a * adj(a) = det(a) * I.
Matrix4 adjugate(const Matrix4& a);
Matrix4 gram_matrix(const FormSpec& form);

/// Integer basis (primitive vectors) of {x : row . x = 0 for all rows}.
std::vector<LatticeVector> nullspace(const std::vector<std::array<Integer, 4>>& rows);

/// Rank of a list of vectors over Q.
int rank(const std::vector<LatticeVector>& vectors);

}  // namespace bianchi
