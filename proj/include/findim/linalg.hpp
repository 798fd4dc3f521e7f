#pragma once

#include <vector>

#include "findim/field.hpp"

namespace findim {

/// Dense row-major matrix over a Field.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Scalar& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

enum class Kernel { serial, parallel };

/// Rank by Gaussian elimination. The parallel kernel distributes row updates
/// over OpenMP threads and returns the same result as the serial one.
int rank(const Field& k, DenseMatrix m, Kernel kernel = Kernel::serial);
/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(const Field& k, DenseMatrix& m, Kernel kernel = Kernel::serial);
/// Basis of { v : m v = 0 } as columns.
std::vector<std::vector<Scalar>> nullspace(const Field& k, const DenseMatrix& m, Kernel kernel = Kernel::serial);
/// Ranks of many matrices, one per OpenMP task when parallel.
std::vector<int> batch_rank(const Field& k, const std::vector<DenseMatrix>& ms, Kernel kernel = Kernel::serial);

}  // namespace findim
