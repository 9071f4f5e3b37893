#pragma once

#include "latpoly/point.hpp"
#include "latpoly/types.hpp"

#include <vector>

namespace latpoly {

using Matrix = std::vector<std::vector<Int>>; // row major
using RatMatrix = std::vector<std::vector<Rat>>;

// rank over Q, fraction-free elimination
int rank_of(Matrix a);

// rank of the difference set {p - points[0]}; 0 for a single point
int affine_rank(const std::vector<LatticePoint>& points);

// determinant of a square matrix, Bareiss
Int determinant(Matrix a);

// integer normal of the hyperplane spanned by the rows of `diffs`
// ((a-1) x a matrix); zero vector iff the rows do not span a hyperplane.
// Sign is not canonicalized; callers orient it.
std::vector<Int> hyperplane_normal(const Matrix& diffs);

// basis of the saturated integer kernel {x in Z^d : M x = 0} together with a
// cobasis making coordinate extraction exact:
//   basis:   d x r, columns b_1..b_r span the kernel lattice
//   cobasis: d x r with basis^T * cobasis = I_r, so for w in the kernel
//            lattice the coordinates are u = cobasis^T w
struct KernelChart {
    Matrix basis;
    Matrix cobasis;
    int rank = 0; // r
};
KernelChart integer_kernel(const Matrix& m, int d);

// exact inverse of a unimodular integer matrix
Matrix unimodular_inverse(const Matrix& c);

std::vector<Int> mat_vec(const Matrix& a, const std::vector<Int>& x);
std::vector<Int> matT_vec(const Matrix& a, const std::vector<Int>& x);

} // namespace latpoly
